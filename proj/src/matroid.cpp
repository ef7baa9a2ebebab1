#include "bmat/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace bmat {

namespace {

// Echelon rows in insertion order, each row remembering which inserted
// vectors it is a combination of.
struct TrackedBasis {
    std::vector<Word> vec, comb;

    bool insert(Word v, Word tag) {
        for (std::size_t i = 0; i < vec.size(); ++i)
            if ((v >> lowest_bit(vec[i])) & 1u) { v ^= vec[i]; tag ^= comb[i]; }
        if (!v) return false;
        vec.push_back(v);
        comb.push_back(tag);
        return true;
    }
    // Combination of inserted tags equal to v; v must lie in the span.
    Word express(Word v) const {
        Word c = 0;
        for (std::size_t i = 0; i < vec.size(); ++i)
            if ((v >> lowest_bit(vec[i])) & 1u) { v ^= vec[i]; c ^= comb[i]; }
        if (v) throw std::logic_error("express: vector outside span");
        return c;
    }
};

}  // namespace

BinaryMatroid::BinaryMatroid(std::vector<Label> labels, const BitMatrix& rep) : labels_(std::move(labels)) {
    if (labels_.size() != rep.cols()) throw std::invalid_argument("BinaryMatroid: label count differs from column count");
    BitMatrix basis = row_space_basis(rep);
    if (basis.rows() > 64) throw std::invalid_argument("BinaryMatroid: rank exceeds 64");
    rank_ = static_cast<int>(basis.rows());
    cols_.resize(labels_.size());
    for (std::size_t c = 0; c < rep.cols(); ++c) cols_[c] = basis.column_word(c);
    rebuild_index();
}

BinaryMatroid BinaryMatroid::from_columns(std::vector<Label> labels, const std::vector<Word>& cols) {
    if (labels.size() != cols.size()) throw std::invalid_argument("from_columns: label count differs from column count");
    Subspace s = Subspace::span(64, cols);
    BinaryMatroid m;
    m.labels_ = std::move(labels);
    m.rank_ = s.dim();
    m.cols_.reserve(cols.size());
    Word mask = s.pivot_mask();
    for (Word c : cols) m.cols_.push_back(compress_bits(c, mask));
    m.rebuild_index();
    return m;
}

BinaryMatroid BinaryMatroid::standard_form(std::vector<Label> labels, const BitMatrix& a) {
    std::size_t r = a.rows();
    if (labels.size() != r + a.cols()) throw std::invalid_argument("standard_form: label count mismatch");
    if (r > 64) throw std::invalid_argument("standard_form: rank exceeds 64");
    std::vector<Word> cols;
    for (std::size_t i = 0; i < r; ++i) cols.push_back(bit(static_cast<int>(i)));
    for (std::size_t c = 0; c < a.cols(); ++c) cols.push_back(a.column_word(c));
    return from_columns(std::move(labels), cols);
}

void BinaryMatroid::rebuild_index() {
    index_.clear();
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (!index_.emplace(labels_[i], static_cast<int>(i)).second)
            throw std::invalid_argument("BinaryMatroid: duplicate label '" + labels_[i] + "'");
    }
}

int BinaryMatroid::index_of(const Label& l) const {
    auto it = index_.find(l);
    if (it == index_.end()) throw std::out_of_range("unknown label '" + l + "'");
    return it->second;
}

std::optional<int> BinaryMatroid::find(const Label& l) const {
    auto it = index_.find(l);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

ElementSet BinaryMatroid::indices_of(const std::vector<Label>& ls) const {
    ElementSet out;
    out.reserve(ls.size());
    for (const auto& l : ls) out.push_back(index_of(l));
    return out;
}

std::vector<Label> BinaryMatroid::labels_of(const ElementSet& s) const {
    std::vector<Label> out;
    out.reserve(s.size());
    for (int i : s) out.push_back(label(i));
    return out;
}

int BinaryMatroid::rank_of(const ElementSet& x) const {
    Subspace s(rank_);
    for (int i : x) {
        if (i < 0 || i >= size()) throw std::out_of_range("rank_of: index out of range");
        s.insert(cols_[static_cast<std::size_t>(i)]);
    }
    return s.dim();
}

int BinaryMatroid::lambda(const ElementSet& x) const {
    return rank_of(x) + rank_of(complement(x)) - rank_;
}

ElementSet BinaryMatroid::complement(const ElementSet& x) const {
    std::vector<char> in(static_cast<std::size_t>(size()), 0);
    for (int i : x) in[static_cast<std::size_t>(i)] = 1;
    ElementSet out;
    for (int i = 0; i < size(); ++i)
        if (!in[static_cast<std::size_t>(i)]) out.push_back(i);
    return out;
}

ElementSet BinaryMatroid::closure(const ElementSet& x) const {
    Subspace s(rank_);
    for (int i : x) s.insert(column(i));
    ElementSet out;
    for (int i = 0; i < size(); ++i)
        if (s.contains(column(i))) out.push_back(i);
    return out;
}

BinaryMatroid BinaryMatroid::restrict_to(const ElementSet& keep) const {
    std::vector<Label> ls;
    std::vector<Word> cs;
    for (int i : keep) {
        ls.push_back(label(i));
        cs.push_back(column(i));
    }
    BinaryMatroid m = from_columns(std::move(ls), cs);
    m.name = name;
    return m;
}

BinaryMatroid BinaryMatroid::delete_elements(const ElementSet& del) const {
    std::vector<char> gone(static_cast<std::size_t>(size()), 0);
    for (int i : del) gone.at(static_cast<std::size_t>(i)) = 1;
    ElementSet keep;
    for (int i = 0; i < size(); ++i)
        if (!gone[static_cast<std::size_t>(i)]) keep.push_back(i);
    return restrict_to(keep);
}

BinaryMatroid BinaryMatroid::contract_elements(const ElementSet& con) const { return minor(con, {}); }

BinaryMatroid BinaryMatroid::minor(const ElementSet& contract, const ElementSet& del) const {
    std::vector<char> role(static_cast<std::size_t>(size()), 0);
    for (int i : contract) role.at(static_cast<std::size_t>(i)) = 1;
    for (int i : del) {
        if (role.at(static_cast<std::size_t>(i)) == 1)
            throw std::invalid_argument("minor: element both contracted and deleted");
        role[static_cast<std::size_t>(i)] = 2;
    }
    Subspace w(rank_);
    for (int i : contract) w.insert(column(i));
    std::vector<Label> ls;
    std::vector<Word> cs;
    for (int i = 0; i < size(); ++i) {
        if (role[static_cast<std::size_t>(i)]) continue;
        ls.push_back(label(i));
        cs.push_back(w.quotient_coords(column(i)));
    }
    BinaryMatroid m = from_columns(std::move(ls), cs);
    m.name = name;
    return m;
}

BinaryMatroid BinaryMatroid::minor_labels(const std::vector<Label>& contract,
                                          const std::vector<Label>& del) const {
    return minor(indices_of(contract), indices_of(del));
}

ElementSet BinaryMatroid::greedy_basis() const {
    Subspace s(rank_);
    ElementSet b;
    for (int i = 0; i < size() && s.dim() < rank_; ++i)
        if (s.insert(column(i))) b.push_back(i);
    return b;
}

std::vector<Word> BinaryMatroid::coordinates_in_basis(const ElementSet& basis) const {
    TrackedBasis tb;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!tb.insert(column(basis[i]), bit(static_cast<int>(i))))
            throw std::invalid_argument("coordinates_in_basis: dependent set");
    if (static_cast<int>(basis.size()) != rank_) throw std::invalid_argument("coordinates_in_basis: not spanning");
    std::vector<Word> out;
    out.reserve(cols_.size());
    for (Word c : cols_) out.push_back(tb.express(c));
    return out;
}

BinaryMatroid BinaryMatroid::dual() const {
    if (corank() > 64) throw std::invalid_argument("dual: corank exceeds 64");
    ElementSet b = greedy_basis();
    std::vector<Word> coords = coordinates_in_basis(b);
    std::vector<int> pos_in_basis(static_cast<std::size_t>(size()), -1);
    for (std::size_t i = 0; i < b.size(); ++i) pos_in_basis[static_cast<std::size_t>(b[i])] = static_cast<int>(i);
    std::vector<Word> dcols(static_cast<std::size_t>(size()), 0);
    int t = 0;
    for (int e = 0; e < size(); ++e) {
        if (pos_in_basis[static_cast<std::size_t>(e)] >= 0) continue;
        dcols[static_cast<std::size_t>(e)] |= bit(t);
        Word c = coords[static_cast<std::size_t>(e)];
        while (c) {
            int i = lowest_bit(c);
            c &= c - 1;
            dcols[static_cast<std::size_t>(b[static_cast<std::size_t>(i)])] |= bit(t);
        }
        ++t;
    }
    BinaryMatroid d = from_columns(labels_, dcols);
    d.name = name.empty() ? name : name + "*";
    return d;
}

BinaryMatroid BinaryMatroid::relabeled(std::vector<Label> labels) const {
    if (labels.size() != labels_.size()) throw std::invalid_argument("relabeled: size mismatch");
    BinaryMatroid m = *this;
    m.labels_ = std::move(labels);
    m.rebuild_index();
    return m;
}

BinaryMatroid BinaryMatroid::relabeled(const std::map<Label, Label>& mp) const {
    std::vector<Label> ls = labels_;
    for (auto& l : ls) {
        auto it = mp.find(l);
        if (it != mp.end()) l = it->second;
    }
    return relabeled(std::move(ls));
}

BinaryMatroid BinaryMatroid::with_element(const Label& l, Word col) const {
    std::vector<Label> ls = labels_;
    std::vector<Word> cs = cols_;
    ls.push_back(l);
    cs.push_back(col);
    BinaryMatroid m = from_columns(std::move(ls), cs);
    m.name = name;
    return m;
}

BitMatrix BinaryMatroid::matrix_for(const std::vector<Label>& order) const {
    if (order.size() != labels_.size()) throw std::invalid_argument("matrix_for: ground set mismatch");
    BitMatrix m(static_cast<std::size_t>(rank_), order.size());
    for (std::size_t j = 0; j < order.size(); ++j) {
        Word c = column(index_of(order[j]));
        for (int r = 0; r < rank_; ++r)
            if ((c >> r) & 1u) m.set(static_cast<std::size_t>(r), j, true);
    }
    return m;
}

bool BinaryMatroid::same_matroid(const BinaryMatroid& other) const {
    if (size() != other.size() || rank_ != other.rank_) return false;
    for (const auto& l : labels_)
        if (!other.has_label(l)) return false;
    return same_row_space(matrix_for(labels_), other.matrix_for(labels_));
}

bool verify_separation(const BinaryMatroid& m, const Separation& s) {
    std::set<Label> a(s.side1.begin(), s.side1.end()), b(s.side2.begin(), s.side2.end());
    if (a.size() != s.side1.size() || b.size() != s.side2.size()) return false;
    if (static_cast<int>(a.size() + b.size()) != m.size()) return false;
    for (const auto& l : a)
        if (b.count(l) || !m.has_label(l)) return false;
    for (const auto& l : b)
        if (!m.has_label(l)) return false;
    if (static_cast<int>(a.size()) < s.order || static_cast<int>(b.size()) < s.order) return false;
    int lam = m.lambda_labels(s.side1);
    if (lam >= s.order) return false;
    if (s.exact && lam != s.order - 1) return false;
    return true;
}

Simplification simplify(const BinaryMatroid& m) {
    Simplification out;
    std::unordered_map<Word, int> rep_of;
    ElementSet keep;
    for (int i = 0; i < m.size(); ++i) {
        Word c = m.column(i);
        if (c == 0) {
            out.loops.push_back(m.label(i));
            continue;
        }
        auto it = rep_of.find(c);
        if (it == rep_of.end()) {
            rep_of.emplace(c, i);
            keep.push_back(i);
            out.classes[m.label(i)].push_back(m.label(i));
        } else {
            out.classes[m.label(it->second)].push_back(m.label(i));
        }
    }
    out.matroid = m.restrict_to(keep);
    return out;
}

int num_rank_one_flats(const BinaryMatroid& m) {
    std::set<Word> s;
    for (Word c : m.columns())
        if (c) s.insert(c);
    return static_cast<int>(s.size());
}

bool is_simple(const BinaryMatroid& m) {
    std::set<Word> s;
    for (Word c : m.columns())
        if (!c || !s.insert(c).second) return false;
    return true;
}

namespace {

std::vector<ElementSet> small_circuits(const BinaryMatroid& m, int max_size) {
    std::vector<ElementSet> out;
    const int n = m.size();
    if (max_size >= 1)
        for (int i = 0; i < n; ++i)
            if (m.column(i) == 0) out.push_back({i});
    if (max_size >= 2)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (m.column(i) && m.column(i) == m.column(j)) out.push_back({i, j});
    if (max_size >= 3 || max_size >= 4) {
        std::unordered_multimap<Word, int> by_col;
        for (int i = 0; i < n; ++i)
            if (m.column(i)) by_col.emplace(m.column(i), i);
        if (max_size >= 3) {
            for (int i = 0; i < n; ++i) {
                if (!m.column(i)) continue;
                for (int j = i + 1; j < n; ++j) {
                    Word s = m.column(i) ^ m.column(j);
                    if (!m.column(j) || !s) continue;
                    auto range = by_col.equal_range(s);
                    for (auto it = range.first; it != range.second; ++it)
                        if (it->second > j) out.push_back({i, j, it->second});
                }
            }
        }
        if (max_size >= 4) {
            std::unordered_map<Word, std::vector<std::pair<int, int>>> pairs;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    Word a = m.column(i), b = m.column(j);
                    if (!a || !b || a == b) continue;
                    pairs[a ^ b].push_back({i, j});
                }
            for (auto& [s, ps] : pairs) {
                (void)s;
                for (std::size_t x = 0; x < ps.size(); ++x)
                    for (std::size_t y = 0; y < ps.size(); ++y) {
                        auto [i, j] = ps[x];
                        auto [k, l] = ps[y];
                        if (!(j < k)) continue;
                        Word ci = m.column(i), cj = m.column(j), ck = m.column(k), cl = m.column(l);
                        if (ci == ck || ci == cl || cj == ck || cj == cl) continue;
                        out.push_back({i, j, k, l});
                    }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

}  // namespace

std::vector<ElementSet> small_supports(const BinaryMatroid& m, SupportKind kind, int max_size) {
    if (max_size > 4) throw std::invalid_argument("small_supports: max_size must be at most 4");
    if (kind == SupportKind::Circuit) return small_circuits(m, max_size);
    return small_circuits(m.dual(), max_size);
}

std::vector<ElementSet> triangles(const BinaryMatroid& m) {
    std::vector<ElementSet> out;
    for (auto& c : small_circuits(m, 3))
        if (c.size() == 3) out.push_back(c);
    return out;
}

std::vector<ElementSet> triads(const BinaryMatroid& m) { return triangles(m.dual()); }

bool is_circuit(const BinaryMatroid& m, const ElementSet& x) {
    int r = m.rank_of(x);
    if (r != static_cast<int>(x.size()) - 1) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        ElementSet y;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (j != i) y.push_back(x[j]);
        if (m.rank_of(y) != static_cast<int>(y.size())) return false;
    }
    return true;
}

BitMatrix cycle_space(const BinaryMatroid& m) { return nullspace(m.matrix()); }

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

using Sig = std::vector<long long>;

std::vector<Sig> element_signatures(const BinaryMatroid& s, const std::vector<int>& class_size) {
    const int n = s.size();
    std::vector<Sig> sig(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) sig[static_cast<std::size_t>(i)].push_back(class_size[static_cast<std::size_t>(i)]);
    auto count_into = [&](const std::vector<ElementSet>& sets, std::size_t sz) {
        std::vector<long long> cnt(static_cast<std::size_t>(n), 0);
        for (auto& c : sets)
            if (c.size() == sz)
                for (int e : c) ++cnt[static_cast<std::size_t>(e)];
        for (int i = 0; i < n; ++i) sig[static_cast<std::size_t>(i)].push_back(cnt[static_cast<std::size_t>(i)]);
    };
    auto circ = small_circuits(s, 4);
    count_into(circ, 3);
    count_into(circ, 4);
    if (s.corank() <= 64) {
        auto cocirc = small_circuits(s.dual(), 4);
        count_into(cocirc, 1);
        count_into(cocirc, 2);
        count_into(cocirc, 3);
        count_into(cocirc, 4);
    }
    // One refinement round over triangle neighbourhoods.
    std::vector<std::vector<Sig>> nb(static_cast<std::size_t>(n));
    for (auto& c : circ)
        if (c.size() == 3)
            for (int e : c)
                for (int f : c)
                    if (e != f) nb[static_cast<std::size_t>(e)].push_back(sig[static_cast<std::size_t>(f)]);
    std::map<Sig, long long> ids;
    for (int i = 0; i < n; ++i) {
        auto v = nb[static_cast<std::size_t>(i)];
        std::sort(v.begin(), v.end());
        Sig flat;
        for (auto& x : v) flat.insert(flat.end(), x.begin(), x.end());
        auto [it, ins] = ids.emplace(flat, static_cast<long long>(ids.size()));
        (void)ins;
        sig[static_cast<std::size_t>(i)].push_back(static_cast<long long>(v.size()));
        sig[static_cast<std::size_t>(i)].push_back(static_cast<long long>(std::hash<std::string>{}(
            std::string(reinterpret_cast<const char*>(flat.data()), flat.size() * sizeof(long long)))));
    }
    return sig;
}

struct IsoSearch {
    const BinaryMatroid& a;
    const BinaryMatroid& b;
    std::vector<int> sig_a, sig_b;  // signature class ids
    std::vector<int> order;         // basis of a in search order
    std::vector<Word> coord;        // coordinates of a's elements in that basis
    std::vector<std::vector<int>> determined;  // elements fixed once level i is set
    std::unordered_map<Word, int> b_index;
    std::vector<Word> img;          // images of basis elements (columns of b)
    std::vector<int> map;           // a index -> b index

    bool dfs(std::size_t level, Subspace span) {
        if (level == order.size()) return true;
        int x = order[level];
        for (int y = 0; y < b.size(); ++y) {
            if (sig_b[static_cast<std::size_t>(y)] != sig_a[static_cast<std::size_t>(x)]) continue;
            Word cy = b.column(y);
            if (span.contains(cy)) continue;
            img[level] = cy;
            bool ok = true;
            std::vector<int> set_here;
            for (int e : determined[level]) {
                Word c = coord[static_cast<std::size_t>(e)], v = 0;
                while (c) {
                    int i = lowest_bit(c);
                    c &= c - 1;
                    v ^= img[static_cast<std::size_t>(i)];
                }
                auto it = b_index.find(v);
                if (it == b_index.end() || sig_b[static_cast<std::size_t>(it->second)] != sig_a[static_cast<std::size_t>(e)]) {
                    ok = false;
                    break;
                }
                map[static_cast<std::size_t>(e)] = it->second;
                set_here.push_back(e);
            }
            if (ok) {
                Subspace next = span;
                next.insert(cy);
                if (dfs(level + 1, next)) return true;
            }
            for (int e : set_here) map[static_cast<std::size_t>(e)] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const BinaryMatroid& a, const BinaryMatroid& b) {
    if (a.size() != b.size() || a.rank() != b.rank()) return std::nullopt;
    Simplification sa = simplify(a), sb = simplify(b);
    if (sa.loops.size() != sb.loops.size() || sa.matroid.size() != sb.matroid.size()) return std::nullopt;
    const BinaryMatroid& A = sa.matroid;
    const BinaryMatroid& B = sb.matroid;
    auto class_sizes = [](const Simplification& s) {
        std::vector<int> cs;
        for (const auto& l : s.matroid.labels()) cs.push_back(static_cast<int>(s.classes.at(l).size()));
        return cs;
    };
    std::vector<Sig> siga = element_signatures(A, class_sizes(sa));
    std::vector<Sig> sigb = element_signatures(B, class_sizes(sb));
    {
        auto x = siga, y = sigb;
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        if (x != y) return std::nullopt;
    }
    std::map<Sig, int> ids;
    for (auto& s : siga) ids.emplace(s, static_cast<int>(ids.size()));
    std::map<int, int> freq;
    IsoSearch st{A, B, {}, {}, {}, {}, {}, {}, {}, {}};
    for (auto& s : siga) {
        st.sig_a.push_back(ids.at(s));
        ++freq[ids.at(s)];
    }
    for (auto& s : sigb) st.sig_b.push_back(ids.at(s));

    // Basis order: rarest signature first, then greedily the element whose
    // addition fixes the most further elements.
    const int n = A.size(), r = A.rank();
    Subspace span(r);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    while (span.dim() < r) {
        int best = -1;
        long long best_score = -1;
        for (int e = 0; e < n; ++e) {
            if (used[static_cast<std::size_t>(e)] || span.contains(A.column(e))) continue;
            Subspace t = span;
            t.insert(A.column(e));
            long long closed = 0;
            for (int f = 0; f < n; ++f)
                if (t.contains(A.column(f))) ++closed;
            long long score = closed * 1000 - freq[st.sig_a[static_cast<std::size_t>(e)]];
            if (score > best_score) { best_score = score; best = e; }
        }
        used[static_cast<std::size_t>(best)] = 1;
        span.insert(A.column(best));
        st.order.push_back(best);
    }
    if (r > 0) {
        st.coord = A.coordinates_in_basis(st.order);
    } else {
        st.coord.assign(static_cast<std::size_t>(n), 0);
    }
    st.determined.assign(static_cast<std::size_t>(r), {});
    for (int e = 0; e < n; ++e) {
        Word c = st.coord[static_cast<std::size_t>(e)];
        if (!c) continue;  // only possible when r == 0
        int hi = 63 - __builtin_clzll(c);
        st.determined[static_cast<std::size_t>(hi)].push_back(e);
    }
    for (int y = 0; y < B.size(); ++y) st.b_index.emplace(B.column(y), y);
    st.img.assign(static_cast<std::size_t>(r), 0);
    st.map.assign(static_cast<std::size_t>(n), -1);
    if (!st.dfs(0, Subspace(r))) return std::nullopt;

    std::vector<int> out(static_cast<std::size_t>(a.size()), -1);
    for (int e = 0; e < n; ++e) {
        const auto& ca = sa.classes.at(A.label(e));
        const auto& cb = sb.classes.at(B.label(st.map[static_cast<std::size_t>(e)]));
        for (std::size_t k = 0; k < ca.size(); ++k) out[static_cast<std::size_t>(a.index_of(ca[k]))] = b.index_of(cb[k]);
    }
    for (std::size_t k = 0; k < sa.loops.size(); ++k)
        out[static_cast<std::size_t>(a.index_of(sa.loops[k]))] = b.index_of(sb.loops[k]);
    if (!verify_isomorphism(a, b, out)) throw std::logic_error("find_isomorphism: internal verification failed");
    return out;
}

std::optional<std::map<Label, Label>> is_isomorphic(const BinaryMatroid& a, const BinaryMatroid& b) {
    auto m = find_isomorphism(a, b);
    if (!m) return std::nullopt;
    std::map<Label, Label> out;
    for (int i = 0; i < a.size(); ++i) out[a.label(i)] = b.label((*m)[static_cast<std::size_t>(i)]);
    return out;
}

bool verify_isomorphism(const BinaryMatroid& a, const BinaryMatroid& b, const std::vector<int>& map) {
    if (a.size() != b.size() || static_cast<int>(map.size()) != a.size()) return false;
    std::vector<char> hit(static_cast<std::size_t>(b.size()), 0);
    for (int y : map) {
        if (y < 0 || y >= b.size() || hit[static_cast<std::size_t>(y)]) return false;
        hit[static_cast<std::size_t>(y)] = 1;
    }
    // Same cycle space after transporting b's labels onto a's elements.
    std::vector<Label> order;
    for (int i = 0; i < a.size(); ++i) order.push_back(b.label(map[static_cast<std::size_t>(i)]));
    BitMatrix ma = a.matrix_for(a.labels());
    BitMatrix mb = b.matrix_for(order);
    if (ma.rows() != mb.rows()) return false;
    return same_row_space(ma, mb);
}

}  // namespace bmat
