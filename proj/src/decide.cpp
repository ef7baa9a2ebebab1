#include "bmat/decide.hpp"

#include <algorithm>
#include <future>
#include <set>

#include "bmat/composition.hpp"
#include "bmat/connectivity.hpp"

namespace bmat {

namespace {

bool contains(const Family& f, Kuratowski k) { return std::find(f.begin(), f.end(), k) != f.end(); }

// Rank-one flat representatives for every element of m.
std::map<Label, Label> flat_of(const Simplification& s) {
    std::map<Label, Label> rep;
    for (const auto& [r, cls] : s.classes)
        for (const auto& l : cls) rep[l] = r;
    return rep;
}

std::optional<std::pair<std::size_t, std::size_t>> rank_two_pair(const BinaryMatroid& m, const std::vector<Triangle>& ts) {
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j) {
            std::vector<Label> u = ts[i];
            u.insert(u.end(), ts[j].begin(), ts[j].end());
            if (m.rank_of_labels(u) == 2) return std::pair{i, j};
        }
    return std::nullopt;
}

// Closed-form clauses on closures, after mapping rank-one flats onto Delta_r.
bool delta_r_clauses(const std::vector<std::set<Label>>& cl, int r) {
    auto s = [](std::initializer_list<std::string> x) { return std::set<Label>(x); };
    auto E = [](int i) { return "e" + std::to_string(i); };
    auto A = [](int i) { return "a" + std::to_string(i); };
    auto B = [](int i) { return "b" + std::to_string(i); };
    auto present = [&](const std::set<Label>& t) { return std::find(cl.begin(), cl.end(), t) != cl.end(); };
    for (int i = 1; i <= r - 1; ++i)
        if (present(s({A(i), E(i), E(r)}))) return true;
    for (int i = 1; i <= r - 2; ++i)
        if (present(s({A(i), A(i + 1), B(i)})) && present(s({E(i), E(i + 1), B(i)}))) return true;
    return present(s({A(1), E(r - 1), B(r - 1)})) && present(s({A(r - 1), E(1), B(r - 1)}));
}

LeafCheck direct(const BinaryMatroid& leaf, const std::vector<Triangle>& ts, bool with_k5d, const MinorOptions& opt) {
    // Keep the triangle elements and one element of every other rank-one flat.
    Simplification s = simplify(leaf);
    std::set<Label> keep;
    for (const auto& t : ts) keep.insert(t.begin(), t.end());
    auto rep = flat_of(s);
    std::set<Label> covered;
    for (const auto& l : keep) covered.insert(rep.at(l));
    for (const auto& [r, cls] : s.classes)
        if (!covered.count(r)) keep.insert(r);
    ElementSet idx;
    for (int e = 0; e < leaf.size(); ++e)
        if (keep.count(leaf.label(e))) idx.push_back(e);
    BinaryMatroid reduced = leaf.restrict_to(idx);
    BinaryMatroid d = delta_batch(reduced, ts);
    if (has_minor(d, kuratowski_matroid(Kuratowski::K33), opt)) return {true, "direct: M(K3,3) minor after Delta-Y"};
    if (with_k5d && has_minor(d, kuratowski_matroid(Kuratowski::K5d), opt))
        return {true, "direct: M*(K5) minor after Delta-Y"};
    return {false, "direct: no minor after Delta-Y"};
}

}  // namespace

LeafCheck delta_leaf_has_k33(const BinaryMatroid& leaf, const std::vector<Triangle>& ts, const ClassVerdict& verdict,
                             bool with_k5d, const MinorOptions& opt) {
    if (!verdict.member()) throw std::invalid_argument("delta_leaf_has_k33: leaf is outside the class");
    if (rank_two_pair(leaf, ts)) return {true, "two triangles of joint rank 2"};
    if (ts.empty()) return {false, "no triangles"};
    switch (verdict.kind) {
        case VerdictKind::PlanarGraphic:
            return {false, "planar leaf stays planar"};
        case VerdictKind::Cographic:
            if (!with_k5d && verdict.key.empty()) return {false, "cographic leaf stays cographic"};
            return direct(leaf, ts, with_k5d, opt);
        case VerdictKind::TriadicMobius:
            return {false, "triadic Moebius leaf has no triangles"};
        case VerdictKind::TriangularMobius: {
            if (with_k5d || verdict.rank <= 4) return direct(leaf, ts, with_k5d, opt);
            Simplification s = simplify(leaf);
            auto rep = flat_of(s);
            std::vector<std::set<Label>> cl;
            for (const auto& t : ts) {
                std::set<Label> c;
                for (const auto& l : t) c.insert(verdict.iso.at(rep.at(l)));
                cl.push_back(c);
            }
            bool hit = delta_r_clauses(cl, verdict.rank);
            return {hit, hit ? "triangular Moebius clause holds" : "triangular Moebius clauses fail"};
        }
        default:
            return direct(leaf, ts, with_k5d, opt);
    }
}

namespace {

struct PieceResult {
    bool found = false;
    std::string reason;
    std::size_t leaves = 0;
};

// 3-connected pieces of m: components, then 2-sum terms.
PieceResult check_piece(const BinaryMatroid& piece, const Family& f, const DecideOptions& opt) {
    PieceResult res;
    DecompNode tree = build_tree(piece, {});
    auto ls = leaves(tree);
    res.leaves = ls.size();
    std::vector<ClassVerdict> verdicts;
    for (const auto& leaf : ls) {
        BinaryMatroid si = simplify(leaf.matroid).matroid;
        ClassVerdict v = classify_i4c(si, f, opt.recognition, opt.minor);
        if (!v.member()) {
            res.found = true;
            res.reason = "leaf " + std::to_string(verdicts.size()) + " simplifies to a matroid outside the class (" +
                         v.describe() + ")";
            return res;
        }
        verdicts.push_back(v);
    }
    const bool with_k5d = contains(f, Kuratowski::K5d);
    auto run = [&](std::size_t i) { return delta_leaf_has_k33(ls[i].matroid, ls[i].triangles, verdicts[i], with_k5d, opt.minor); };
    std::vector<LeafCheck> checks(ls.size());
    if (opt.jobs > 1 && ls.size() > 1) {
        for (std::size_t lo = 0; lo < ls.size(); lo += static_cast<std::size_t>(opt.jobs)) {
            std::vector<std::future<LeafCheck>> fs;
            std::size_t hi = std::min(ls.size(), lo + static_cast<std::size_t>(opt.jobs));
            for (std::size_t i = lo; i < hi; ++i) fs.push_back(std::async(std::launch::async, run, i));
            for (std::size_t i = lo; i < hi; ++i) checks[i] = fs[i - lo].get();
        }
    } else {
        for (std::size_t i = 0; i < ls.size(); ++i) checks[i] = run(i);
    }
    for (std::size_t i = 0; i < checks.size(); ++i)
        if (checks[i].has_minor) {
            res.found = true;
            res.reason = "leaf " + std::to_string(i) + " (" + verdicts[i].describe() + "): " + checks[i].rule;
            return res;
        }
    res.reason = "all leaves lie in the class and pass the Delta-Y checks";
    return res;
}

}  // namespace

Decision decide_minor_in(const BinaryMatroid& m, const Family& family, const DecideOptions& opt) {
    Family f = normalize_family(family);
    Decision d;
    if (f.empty()) throw std::invalid_argument("decide_minor_in: empty family");
    d.dualized = !contains(f, Kuratowski::K33);
    if (d.dualized && !contains(f, Kuratowski::K33d))
        throw std::invalid_argument("decide_minor_in: family must contain K33 or K33d");
    BinaryMatroid work = d.dualized ? m.dual() : m;
    Family wf = f;
    if (d.dualized) {
        wf.clear();
        for (auto k : f)
            wf.push_back(k == Kuratowski::K33d ? Kuratowski::K33 : k == Kuratowski::K33 ? Kuratowski::K33d
                         : k == Kuratowski::K5d ? Kuratowski::K5 : Kuratowski::K5d);
        wf = normalize_family(wf);
    }
    std::vector<BinaryMatroid> pieces;
    pieces = three_connected_pieces(work, 9);  // every target has at least nine elements
    d.pieces = pieces.size();
    d.reason = pieces.empty() ? "no 3-connected piece has nine or more elements" : "";
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        PieceResult pr = check_piece(pieces[i], wf, opt);
        d.leaves += pr.leaves;
        if (pr.found) {
            d.has_minor = true;
            d.reason = "piece " + std::to_string(i) + ": " + pr.reason;
            break;
        }
        d.reason = pr.reason;
    }
    if (d.has_minor && opt.want_certificate) {
        try {
            for (auto k : f)
                if (auto c = has_minor_reduced(m, kuratowski_matroid(k), opt.minor)) {
                    d.target = k;
                    d.certificate = *c;
                    break;
                }
        } catch (const GuardExceeded& e) {
            d.reason += "; certificate search skipped: " + std::string(e.what());
        }
    }
    return d;
}

}  // namespace bmat
