// Searches for the internally 4-connected binary matroids with no M(K3,3)
// minor that are neither cographic nor Moebius, and prints them as
// standard-form tables.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>

#include "bmat/catalog.hpp"
#include "bmat/gf2.hpp"
#include "bmat/invariants.hpp"
#include "bmat/connectivity.hpp"
#include "bmat/minor_search.hpp"
#include "bmat/recognition.hpp"

using namespace bmat;

namespace {

using Key = std::vector<std::array<int, 4>>;

Key invariant(const BinaryMatroid& m) {
    const std::size_t n = static_cast<std::size_t>(m.size());
    std::vector<std::array<int, 4>> per(n, {0, 0, 0, 0});
    for (const auto& c : small_supports(m, SupportKind::Circuit, 4))
        for (int e : c) ++per[static_cast<std::size_t>(e)][c.size() - 3];
    for (const auto& c : small_supports(m, SupportKind::Cocircuit, 4))
        for (int e : c) ++per[static_cast<std::size_t>(e)][c.size() - 1];
    std::sort(per.begin(), per.end());
    per.push_back({m.rank(), m.size(), 0, 0});
    return per;
}

struct Store {
    std::map<Key, std::vector<BinaryMatroid>> buckets;
    std::size_t count = 0;
    // true when m is new
    bool insert(const BinaryMatroid& m) {
        auto& b = buckets[invariant(m)];
        for (const auto& x : b)
            if (find_isomorphism(m, x)) return false;
        b.push_back(m);
        ++count;
        return true;
    }
    std::vector<BinaryMatroid> all() const {
        std::vector<BinaryMatroid> out;
        for (const auto& [k, b] : buckets) out.insert(out.end(), b.begin(), b.end());
        return out;
    }
};

const BinaryMatroid& k33() { return kuratowski_matroid(Kuratowski::K33); }

bool k33_free(const BinaryMatroid& m) { return !has_minor(m, k33(), {0, 0}); }

bool is_mobius(const BinaryMatroid& m) {
    try {
        return recognize_mobius_matroid(m).has_value();
    } catch (const GuardExceeded&) {
        return false;
    }
}

bool is_sporadic(const BinaryMatroid& m) {
    return is_internally_4connected(m) && !is_cographic(m) && !is_mobius(m) && k33_free(m);
}

BinaryMatroid from_points(const std::vector<Word>& pts) {
    std::vector<Label> ls;
    for (std::size_t i = 0; i < pts.size(); ++i) ls.push_back("x" + std::to_string(i + 1));
    return BinaryMatroid::from_columns(ls, pts);
}

double secs(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(const char* tag, const BinaryMatroid& m) {
    bool k5 = has_minor(m, kuratowski_matroid(Kuratowski::K5), {0, 0}).has_value();
    bool k5d = has_minor(m, kuratowski_matroid(Kuratowski::K5d), {0, 0}).has_value();
    bool k33d = has_minor(m, kuratowski_matroid(Kuratowski::K33d), {0, 0}).has_value();
    auto tri = triangles(m).size();
    std::printf("%s rank=%d size=%d triangles=%zu K5=%d K5d=%d K33d=%d\n", tag, m.rank(), m.size(), tri, k5, k5d, k33d);
    std::string known;
    for (const auto& k : catalog_keys()) {
        try {
            BinaryMatroid c = named(k);
            if (c.size() == m.size() && c.rank() == m.rank() && find_isomorphism(m, c)) known += " " + k;
        } catch (...) {
        }
    }
    if (!known.empty()) std::printf("  matches:%s\n", known.c_str());
    BinaryMatroid s = m;
    ElementSet b = s.greedy_basis();
    auto coords = s.coordinates_in_basis(b);
    std::set<int> in_b(b.begin(), b.end());
    for (int i = 0; i < m.rank(); ++i) {
        std::printf("  ");
        for (int e = 0; e < m.size(); ++e)
            if (!in_b.count(e)) std::printf("%d", static_cast<int>((coords[static_cast<std::size_t>(e)] >> i) & 1u));
        std::printf("\n");
    }
    std::fflush(stdout);
}

void rank4() {
    auto t0 = std::chrono::steady_clock::now();
    Store found;
    for (std::uint32_t mask = 0; mask < (1u << 15); ++mask) {
        if (__builtin_popcount(mask) < 7) continue;
        std::vector<Word> pts;
        for (int v = 0; v < 15; ++v)
            if ((mask >> v) & 1u) pts.push_back(static_cast<Word>(v + 1));
        BinaryMatroid m = from_points(pts);
        if (m.rank() != 4) continue;
        if (!is_internally_4connected(m)) continue;
        if (!found.insert(m)) continue;
    }
    std::printf("# rank 4: %zu i4c classes (%.1fs)\n", found.count, secs(t0));
    for (const auto& m : found.all())
        if (is_sporadic(m)) report("rank4", m);
}

// Grow spanning point sets of PG(r-1,2) one point at a time up to
// isomorphism. Minor-closure lets us drop any set with an M(K3,3) minor.
void grow(int r, int max_size) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Word> basis;
    for (int i = 0; i < r; ++i) basis.push_back(bit(i));
    std::vector<BinaryMatroid> level{from_points(basis)};
    for (int sz = r; sz < max_size && !level.empty(); ++sz) {
        Store next;
        for (const auto& m : level) {
            std::set<Word> have(m.columns().begin(), m.columns().end());
            for (Word v = 1; v < (Word{1} << r); ++v) {
                if (have.count(v)) continue;
                auto cols = m.columns();
                cols.push_back(v);
                BinaryMatroid x = from_points(cols);
                if (sz + 1 >= 9 && !k33_free(x)) continue;
                next.insert(x);
            }
        }
        level = next.all();
        std::size_t hits = 0;
        for (const auto& m : level)
            if (is_sporadic(m)) {
                ++hits;
                report(("rank" + std::to_string(r)).c_str(), m);
            }
        std::printf("# rank %d size %d: %zu classes, %zu sporadic (%.1fs)\n", r, sz + 1, level.size(), hits, secs(t0));
        std::fflush(stdout);
    }
}


std::vector<BinaryMatroid> extensions(const BinaryMatroid& m, const Label& l) {
    std::vector<BinaryMatroid> out;
    std::set<Word> have(m.columns().begin(), m.columns().end());
    for (Word v = 1; v < (Word{1} << m.rank()); ++v)
        if (!have.count(v)) out.push_back(m.with_element(l, v));
    return out;
}

std::vector<BinaryMatroid> coextensions(const BinaryMatroid& m, const Label& l) {
    std::vector<BinaryMatroid> out;
    for (const auto& x : extensions(m.dual(), l)) out.push_back(x.dual());
    return out;
}

// Closure of the non-cographic i4c class under steps of at most three
// single-element extensions/coextensions through 3-connected, M(K3,3)-free
// intermediates, within the given size and rank bounds.
void chain(int max_size, int max_rank, int max_corank) {
    auto t0 = std::chrono::steady_clock::now();
    Store known, sporadic;
    std::vector<BinaryMatroid> queue;
    auto add_node = [&](const BinaryMatroid& m) {
        if (known.insert(m)) queue.push_back(m);
    };
    for (const char* k : {"F7", "F7*", "MK5"}) add_node(named(k));
    for (int r = 3; 3 * r - 2 <= max_size && r <= max_rank; ++r) add_node(mobius_triangular(r));
    for (int r = 4; 2 * r - 1 <= max_size && r <= max_rank; r += 2) add_node(mobius_triadic(r));
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        std::sort(queue.begin() + static_cast<long>(qi), queue.end(),
                  [](const BinaryMatroid& a, const BinaryMatroid& b) { return a.size() < b.size(); });
        BinaryMatroid base = queue[qi];
        // level[e][c]: e extensions and c coextensions applied
        std::map<std::pair<int, int>, std::vector<BinaryMatroid>> level;
        level[{0, 0}] = {base};
        std::size_t generated = 0;
        for (int d = 1; d <= 3; ++d)
            for (int c = 0; c <= d; ++c) {
                int e = d - c;
                if (base.size() + d > max_size || base.rank() + c > max_rank || base.corank() + e > max_corank) continue;
                Store st;
                auto feed = [&](const std::vector<BinaryMatroid>& src, bool ext) {
                    for (const auto& f : src) {
                        Label l = "n" + std::to_string(f.size() + 1);
                        for (const auto& x : ext ? extensions(f, l) : coextensions(f, l)) {
                            ++generated;
                            if (!is_3connected(x)) continue;
                            st.insert(x);
                        }
                    }
                };
                if (e > 0 && level.count({e - 1, c})) feed(level[{e - 1, c}], true);
                if (c > 0 && level.count({e, c - 1})) feed(level[{e, c - 1}], false);
                std::vector<BinaryMatroid> keep;
                for (const auto& x : st.all()) {
                    if (!k33_free(x)) continue;
                    keep.push_back(x);
                    if (is_internally_4connected(x) && !is_cographic(x)) {
                        if (known.insert(x)) {
                            queue.push_back(x);
                            if (!is_mobius(x) && sporadic.insert(x)) report("chain", x);
                        }
                    }
                }
                level[{e, c}] = keep;
            }
        std::printf("# node %zu/%zu rank=%d size=%d generated=%zu sporadic=%zu (%.1fs)\n", qi + 1, queue.size(),
                    base.rank(), base.size(), generated, sporadic.count, secs(t0));
        std::fflush(stdout);
    }
}


std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') { out.push_back(cur); cur.clear(); } else cur += c;
    }
    out.push_back(cur);
    return out;
}

int parity(Word w) { return popcount(w) & 1; }

// Rewrites [I|A] in a basis of its own elements so that the given H rows
// certify it: H.x != 0 for every column x of the new [I|A'].
void hcoords(const std::string& a_rows, const std::string& h_rows) {
    auto ar = split(a_rows), hr = split(h_rows);
    const int r = static_cast<int>(ar.size()), k = static_cast<int>(hr.size());
    std::vector<Label> ls;
    for (std::size_t i = 0; i < r + ar[0].size(); ++i) ls.push_back("x" + std::to_string(i + 1));
    BinaryMatroid m = BinaryMatroid::standard_form(ls, BitMatrix::from_rows(ar));
    std::vector<Word> pts;
    for (int e = 0; e < m.size(); ++e) pts.push_back(m.column(e));
    std::vector<Word> hcol(static_cast<std::size_t>(r), 0);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < r; ++i)
            if (hr[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] == '1') hcol[static_cast<std::size_t>(i)] |= bit(j);
    // phi: GF(2)^r -> GF(2)^k given by images of the unit vectors; every
    // point must map to a nonzero vector. Points are checked once their
    // highest coordinate is assigned.
    std::vector<std::vector<Word>> by_top(static_cast<std::size_t>(r));
    for (Word v : pts) by_top[static_cast<std::size_t>(63 - __builtin_clzll(v))].push_back(v);
    std::vector<Word> phi(static_cast<std::size_t>(r), 0);
    auto image = [&](Word v) {
        Word s = 0;
        for (Word t = v; t; t &= t - 1) s ^= phi[static_cast<std::size_t>(lowest_bit(t))];
        return s;
    };
    std::vector<int> chosen;
    std::function<bool(Subspace)> go = [&](Subspace span) {
        if (static_cast<int>(chosen.size()) == r) return true;
        Word w = hcol[chosen.size()];
        for (int e = 0; e < m.size(); ++e) {
            Word v = pts[static_cast<std::size_t>(e)];
            if (image(v) != w || span.contains(v)) continue;
            Subspace next = span;
            next.insert(v);
            chosen.push_back(e);
            if (go(next)) return true;
            chosen.pop_back();
        }
        return false;
    };
    long tried = 0;
    std::function<bool(int)> assign = [&](int i) {
        if (i == r) {
            ++tried;
            chosen.clear();
            return go(Subspace(r));
        }
        for (Word x = 1; x < bit(k); ++x) {
            phi[static_cast<std::size_t>(i)] = x;
            bool ok = true;
            for (Word v : by_top[static_cast<std::size_t>(i)])
                if (image(v) == 0) { ok = false; break; }
            if (ok && assign(i + 1)) return true;
        }
        return false;
    };
    if (!assign(0)) {
        std::printf("no certified basis (%ld maps tried)\n", tried);
        return;
    }
    std::printf("maps tried: %ld\n", tried);
    ElementSet basis(chosen.begin(), chosen.end());
    auto coords = m.coordinates_in_basis(basis);
    std::set<int> in_b(chosen.begin(), chosen.end());
    std::vector<std::string> rows(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i)
        for (int e = 0; e < m.size(); ++e)
            if (!in_b.count(e)) rows[static_cast<std::size_t>(i)] += ((coords[static_cast<std::size_t>(e)] >> i) & 1u) ? '1' : '0';
    std::vector<std::string> full_rows = rows;
    for (int i = 0; i < r; ++i) {
        std::string id(static_cast<std::size_t>(r), '0');
        id[static_cast<std::size_t>(i)] = '1';
        full_rows[static_cast<std::size_t>(i)] = id + rows[static_cast<std::size_t>(i)];
    }
    BinaryMatroid n = BinaryMatroid::standard_form(ls, BitMatrix::from_rows(rows));
    std::printf("certifies=%d isomorphic=%d\n", h_matrix_certifies(BitMatrix::from_rows(full_rows), hr),
                find_isomorphism(m, n).has_value());
    for (const auto& row : rows) std::printf("  %s\n", row.c_str());
}

}  // namespace

int main(int argc, char** argv) {
    std::string mode = argc > 1 ? argv[1] : "all";
    if (mode == "rank4" || mode == "all") rank4();
    if (mode == "bench") {
        for (const char* k : {"Upsilon8", "Upsilon10", "Delta6", "Delta7", "PG32", "T12"}) {
            BinaryMatroid m = named(k);
            auto t0 = std::chrono::steady_clock::now();
            bool f = k33_free(m);
            double a = secs(t0);
            t0 = std::chrono::steady_clock::now();
            Key key = invariant(m);
            double b = secs(t0);
            t0 = std::chrono::steady_clock::now();
            bool iso = find_isomorphism(m, m).has_value();
            double c = secs(t0);
            t0 = std::chrono::steady_clock::now();
            bool i4 = is_internally_4connected(m);
            double d = secs(t0);
            std::printf("%s free=%d %.3fs inv %.4fs iso=%d %.4fs i4c=%d %.4fs\n", k, f, a, b, iso, c, i4, d);
        }
    }
    if (mode == "chain") chain(std::stoi(argv[2]), std::stoi(argv[3]), std::stoi(argv[4]));
    if (mode == "hcoords") hcoords(argv[2], argv[3]);
    if (mode == "grow") grow(std::stoi(argv[2]), std::stoi(argv[3]));
    return 0;
}
