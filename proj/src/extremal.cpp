#include "bmat/extremal.hpp"

#include <stdexcept>

#include "bmat/catalog.hpp"
#include "bmat/composition.hpp"
#include "bmat/connectivity.hpp"

namespace bmat {

int f(int r) {
    if (r < 2) throw std::invalid_argument("f: rank must be at least 2");
    int k = r / 3;
    switch (r % 3) {
        case 0: return 14 * k - 7;
        case 1: return 14 * k + 1;
        default: return 14 * k + 3;
    }
}

boost::multiprecision::cpp_rational alpha(int r) {
    return boost::multiprecision::cpp_rational(14 * r, 3) - f(r);
}

int pr_steps(int r) {
    if (r < 2) throw std::invalid_argument("pr_steps: rank must be at least 2");
    return r <= 4 ? 0 : (r - 2) / 3;
}

namespace {

BinaryMatroid prefixed(const BinaryMatroid& m, const std::string& prefix) {
    std::vector<Label> ls;
    for (const auto& l : m.labels()) ls.push_back(prefix + l);
    return m.relabeled(ls);
}

}  // namespace

BinaryMatroid build_pr(int r, const std::vector<Label>& basepoints) {
    if (r < 2) throw std::invalid_argument("build_pr: rank must be at least 2");
    const int steps = pr_steps(r);
    BinaryMatroid m = prefixed(pg(r - 3 * steps), "s0.");
    for (int step = 1; step <= steps; ++step) {
        std::size_t i = static_cast<std::size_t>(step - 1);
        Label p = i < basepoints.size() ? basepoints[i] : m.label(0);
        if (!m.has_label(p)) throw std::invalid_argument("build_pr: basepoint '" + p + "' is not an element");
        BinaryMatroid g = prefixed(pg(4), "s" + std::to_string(step) + ".");
        g = g.relabeled(std::map<Label, Label>{{g.label(0), p}});
        m = parallel_connection(m, g, p);
    }
    m.name = "P" + std::to_string(r);
    return m;
}

bool verify_size_lemma(const BinaryMatroid& m, const MinorOptions& opt) {
    if (!is_3connected(m)) throw std::invalid_argument("verify_size_lemma: matroid is not 3-connected");
    if (has_minor_reduced(m, kuratowski_matroid(Kuratowski::K33), opt))
        throw std::invalid_argument("verify_size_lemma: matroid has an M(K3,3)-minor");
    if (m.rank() <= 4) {
        bool allowable = false;
        for (const auto& t : triangles(m))
            if (allowable_triangle(m, m.labels_of(t), opt)) {
                allowable = true;
                break;
            }
        if (!allowable) throw std::invalid_argument("verify_size_lemma: rank at most 4 and no allowable triangle");
    }
    return m.size() <= 4 * m.rank() - 5;
}

bool verify_no_k33_minor_pr(int r, const std::vector<Label>& basepoints, const MinorOptions& opt) {
    return !has_minor_reduced(build_pr(r, basepoints), kuratowski_matroid(Kuratowski::K33), opt);
}

Rank4Maximality rank4_maximality() {
    Rank4Maximality res;
    const std::uint32_t full = (1u << 15) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::vector<Word> pts;
        std::vector<Label> ls;
        for (int v = 0; v < 15; ++v)
            if ((mask >> v) & 1u) {
                pts.push_back(static_cast<Word>(v + 1));
                ls.push_back("p" + std::to_string(v + 1));
            }
        // distinct nonzero points always form a simple matroid
        if (BinaryMatroid::from_columns(ls, pts).rank() != 4) continue;
        int n = static_cast<int>(pts.size());
        if (n > res.max_size) {
            res.max_size = n;
            res.attaining = 0;
        }
        if (n == res.max_size) {
            ++res.attaining;
            res.attained_by_pg = mask == full;
        }
    }
    return res;
}

}  // namespace bmat
