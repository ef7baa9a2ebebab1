#include "bmat/minor_search.hpp"

#include <algorithm>
#include <set>

#include "bmat/catalog.hpp"
#include "bmat/composition.hpp"
#include "bmat/connectivity.hpp"
#include "bmat/graph.hpp"

namespace bmat {

namespace {

// Linear embeddings of a simple matroid into a point set of its own rank.
struct Embedder {
    const BinaryMatroid& n;
    int rn;
    std::vector<int> order;                    // basis of n, search order
    std::vector<Word> coord;                   // coordinates in that basis
    std::vector<std::vector<int>> determined;  // fixed once a level is set

    explicit Embedder(const BinaryMatroid& target) : n(target), rn(target.rank()) {
        // Greedy basis choice: each step fixes as many further elements as possible.
        Subspace span(rn);
        const int sz = n.size();
        while (span.dim() < rn) {
            int best = -1, best_closed = -1;
            for (int e = 0; e < sz; ++e) {
                if (span.contains(n.column(e))) continue;
                Subspace t = span;
                t.insert(n.column(e));
                int closed = 0;
                for (int f = 0; f < sz; ++f) closed += t.contains(n.column(f));
                if (closed > best_closed) { best_closed = closed; best = e; }
            }
            span.insert(n.column(best));
            order.push_back(best);
        }
        coord = rn ? n.coordinates_in_basis(order) : std::vector<Word>(static_cast<std::size_t>(sz), 0);
        determined.assign(static_cast<std::size_t>(rn), {});
        for (int e = 0; e < sz; ++e) {
            Word c = coord[static_cast<std::size_t>(e)];
            if (popcount(c) <= 1) continue;  // basis elements are their own level
            determined[static_cast<std::size_t>(63 - __builtin_clzll(c))].push_back(e);
        }
    }

    // presence[v] = element of the host at point v, or -1. points lists the
    // distinct nonzero points. On success img[e] is the host point of e.
    bool embed(const std::vector<int>& presence, const std::vector<Word>& points, std::vector<Word>& img) const {
        img.assign(static_cast<std::size_t>(n.size()), 0);
        std::vector<Word> basis_img(static_cast<std::size_t>(rn), 0);
        return rec(0, Subspace(rn), presence, points, basis_img, img);
    }

private:
    bool rec(std::size_t level, const Subspace& span, const std::vector<int>& presence, const std::vector<Word>& points,
             std::vector<Word>& bimg, std::vector<Word>& img) const {
        if (level == order.size()) return true;
        for (Word p : points) {
            if (span.contains(p)) continue;
            bimg[level] = p;
            img[static_cast<std::size_t>(order[level])] = p;
            bool ok = true;
            for (int e : determined[level]) {
                Word c = coord[static_cast<std::size_t>(e)], v = 0;
                while (c) {
                    v ^= bimg[static_cast<std::size_t>(lowest_bit(c))];
                    c &= c - 1;
                }
                if (presence[static_cast<std::size_t>(v)] < 0) { ok = false; break; }
                img[static_cast<std::size_t>(e)] = v;
            }
            if (!ok) continue;
            Subspace next = span;
            next.insert(p);
            if (rec(level + 1, next, presence, points, bimg, img)) return true;
        }
        return false;
    }
};

struct FlatSearch {
    const BinaryMatroid& m;
    const Embedder& emb;
    int k;  // number of elements to contract
    std::vector<int> chosen;
    std::vector<int> forbidden;  // skipped elements that must stay outside the flat
    std::vector<int> presence;
    std::optional<MinorCertificate> found;

    bool try_flat(const Subspace& w) {
        const int rn = emb.rn;
        std::vector<Word> points;
        std::vector<int> touched;
        for (int e = 0; e < m.size(); ++e) {
            Word c = m.column(e);
            if (w.contains(c)) continue;
            Word q = w.quotient_coords(c);
            if (presence[static_cast<std::size_t>(q)] < 0) {
                presence[static_cast<std::size_t>(q)] = e;
                points.push_back(q);
            }
        }
        bool ok = false;
        std::vector<Word> img;
        if (static_cast<int>(points.size()) >= emb.n.size() && emb.embed(presence, points, img)) {
            ok = true;
            MinorCertificate cert;
            std::set<int> used;
            for (int e = 0; e < emb.n.size(); ++e) {
                int host = presence[static_cast<std::size_t>(img[static_cast<std::size_t>(e)])];
                used.insert(host);
                cert.iso[emb.n.label(e)] = m.label(host);
            }
            std::set<int> con(chosen.begin(), chosen.end());
            for (int e : chosen) cert.contract.push_back(m.label(e));
            for (int e = 0; e < m.size(); ++e)
                if (!used.count(e) && !con.count(e)) cert.del.push_back(m.label(e));
            found = cert;
        }
        for (Word p : points) presence[static_cast<std::size_t>(p)] = -1;
        (void)rn;
        return ok;
    }

    // Flats are generated once each, from their greedy basis in ground order.
    void rec(int start, const Subspace& w) {
        if (found) return;
        if (static_cast<int>(chosen.size()) == k) {
            for (int f : forbidden)
                if (w.contains(m.column(f))) return;
            try_flat(w);
            return;
        }
        std::size_t fsize = forbidden.size();
        for (int x = start; x < m.size() && !found; ++x) {
            Word c = m.column(x);
            if (w.contains(c)) continue;
            if (m.size() - x < k - static_cast<int>(chosen.size())) break;
            Subspace next = w;
            next.insert(c);
            bool bad = false;
            for (int f : forbidden)
                if (next.contains(m.column(f))) { bad = true; break; }
            if (!bad) {
                chosen.push_back(x);
                rec(x + 1, next);
                chosen.pop_back();
            }
            forbidden.push_back(x);
        }
        forbidden.resize(fsize);
    }
};

std::optional<MinorCertificate> primal_search(const BinaryMatroid& m, const BinaryMatroid& n) {
    int k = m.rank() - n.rank();
    if (k < 0 || m.corank() < n.corank() || m.size() < n.size()) return std::nullopt;
    if (n.rank() > 20) throw GuardExceeded("has_minor: target rank too large");
    Embedder emb(n);
    FlatSearch fs{m, emb, k, {}, {}, std::vector<int>(std::size_t{1} << n.rank(), -1), std::nullopt};
    fs.rec(0, Subspace(m.rank()));
    return fs.found;
}

}  // namespace

std::optional<MinorCertificate> has_minor(const BinaryMatroid& m, const BinaryMatroid& target, const MinorOptions& opt) {
    if (!is_simple(target)) throw std::invalid_argument("has_minor: target must be simple");
    if (opt.max_target > 0 && target.size() > opt.max_target)
        throw GuardExceeded("has_minor: target has " + std::to_string(target.size()) + " elements, limit " +
                            std::to_string(opt.max_target));
    if (opt.max_elements > 0 && m.size() > opt.max_elements)
        throw GuardExceeded("has_minor: matroid has " + std::to_string(m.size()) + " elements, limit " +
                            std::to_string(opt.max_elements));
    int kp = m.rank() - target.rank();
    int kd = m.corank() - target.corank();
    if (kp < 0 || kd < 0) return std::nullopt;
    std::optional<MinorCertificate> cert;
    if (kd < kp && is_simple(target.dual()) && m.corank() <= 64) {
        cert = primal_search(m.dual(), target.dual());
        if (cert) std::swap(cert->contract, cert->del);
    } else {
        cert = primal_search(m, target);
    }
    if (cert && !verify_minor_certificate(m, target, *cert)) throw std::logic_error("has_minor: certificate failed verification");
    return cert;
}

bool verify_minor_certificate(const BinaryMatroid& m, const BinaryMatroid& target, const MinorCertificate& c) {
    try {
        BinaryMatroid minor = m.minor_labels(c.contract, c.del);
        if (minor.size() != target.size()) return false;
        std::vector<int> map(static_cast<std::size_t>(target.size()));
        for (int e = 0; e < target.size(); ++e) {
            auto it = c.iso.find(target.label(e));
            if (it == c.iso.end()) return false;
            auto idx = minor.find(it->second);
            if (!idx) return false;
            map[static_cast<std::size_t>(e)] = *idx;
        }
        return verify_isomorphism(target, minor, map);
    } catch (const std::exception&) {
        return false;
    }
}

namespace {

void replace_label(MinorCertificate& c, const Label& from, const Label& to) {
    for (auto* v : {&c.contract, &c.del})
        for (auto& l : *v)
            if (l == from) l = to;
    for (auto& [k, v] : c.iso)
        if (v == from) v = to;
}

std::optional<MinorCertificate> reduced_search(const BinaryMatroid& m, const BinaryMatroid& target,
                                               const MinorOptions& opt) {
    if (m.size() < target.size()) return std::nullopt;
    std::optional<Separation> sep = find_separation(m, 1);
    if (!sep) sep = find_separation(m, 2);
    if (!sep) return has_minor(m, target, opt);
    SplitResult sr = split_along(m, *sep, "p");
    const BinaryMatroid* piece[2] = {&sr.first, &sr.second};
    const std::vector<Label>* side[2] = {&sep->side1, &sep->side2};
    for (int i = 0; i < 2; ++i) {
        auto c = reduced_search(*piece[i], target, opt);
        if (!c) continue;
        const BinaryMatroid& other = *piece[1 - i];
        const std::vector<Label>& xo = *side[1 - i];
        if (sr.shared.empty()) {
            c->del.insert(c->del.end(), xo.begin(), xo.end());
            return c;
        }
        // The basepoint is realised by an element q of a circuit of the
        // other piece through p: contract the rest of the circuit and delete
        // everything else on that side.
        const Label& p = sr.shared[0];
        ElementSet basis;
        Subspace span(other.rank());
        for (int e : other.indices_of(xo))
            if (span.insert(other.column(e))) basis.push_back(e);
        Word coords = other.coordinates_in_basis(basis)[static_cast<std::size_t>(other.index_of(p))];
        std::vector<Label> circ;
        while (coords) {
            circ.push_back(other.label(basis[static_cast<std::size_t>(lowest_bit(coords))]));
            coords &= coords - 1;
        }
        if (circ.empty()) throw std::logic_error("has_minor_reduced: basepoint is a loop");
        Label q = circ.front();
        std::set<Label> in_circ(circ.begin(), circ.end());
        for (const auto& l : circ)
            if (l != q) c->contract.push_back(l);
        for (const auto& l : xo)
            if (!in_circ.count(l)) c->del.push_back(l);
        replace_label(*c, p, q);
        return c;
    }
    return std::nullopt;
}

}  // namespace

std::optional<MinorCertificate> has_minor_reduced(const BinaryMatroid& m, const BinaryMatroid& target,
                                                  const MinorOptions& opt) {
    if (!is_3connected(target)) throw std::invalid_argument("has_minor_reduced: target must be 3-connected");
    auto c = reduced_search(m, target, opt);
    if (c && !verify_minor_certificate(m, target, *c)) throw std::logic_error("has_minor_reduced: lifted certificate failed");
    return c;
}

const char* to_string(Kuratowski k) {
    switch (k) {
        case Kuratowski::K33: return "K33";
        case Kuratowski::K5: return "K5";
        case Kuratowski::K33d: return "K33d";
        case Kuratowski::K5d: return "K5d";
    }
    return "?";
}

std::optional<Kuratowski> parse_kuratowski(const std::string& s) {
    if (s == "K33") return Kuratowski::K33;
    if (s == "K5") return Kuratowski::K5;
    if (s == "K33d") return Kuratowski::K33d;
    if (s == "K5d") return Kuratowski::K5d;
    return std::nullopt;
}

const BinaryMatroid& kuratowski_matroid(Kuratowski k) {
    static const BinaryMatroid mats[4] = {named("MK33"), named("MK5"), named("MK33*"), named("MK5*")};
    return mats[static_cast<int>(k)];
}

Family normalize_family(Family f) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
}

bool allowable_triangle(const BinaryMatroid& m, const Triangle& t, const MinorOptions& opt) {
    return !has_minor(delta_y(m, t), kuratowski_matroid(Kuratowski::K33), opt).has_value();
}

bool is_regular(const BinaryMatroid& m, const MinorOptions& opt) {
    Simplification s = simplify(m);
    return !has_minor(s.matroid, named("F7"), opt) && !has_minor(s.matroid, named("F7*"), opt);
}

}  // namespace bmat
