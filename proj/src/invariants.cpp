#include "bmat/invariants.hpp"

#include <array>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "bmat/composition.hpp"
#include "bmat/minor_search.hpp"

namespace bmat {

void IntPolynomial::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

BigInt IntPolynomial::eval(const BigInt& t) const {
    BigInt acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
}

std::string IntPolynomial::str(const std::string& var) const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = coeffs[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        BigInt a = abs(c);
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (a != 1 || i == 0) os << a;
        if (i > 0) os << var << (i > 1 ? "^" + std::to_string(i) : "");
        first = false;
    }
    return os.str();
}

BigInt IntPolynomial2::eval(const BigInt& x, const BigInt& y) const {
    BigInt acc = 0, xp = 1;
    for (const auto& row : coeffs) {
        BigInt yp = 1, part = 0;
        for (const auto& c : row) {
            part += c * yp;
            yp *= y;
        }
        acc += part * xp;
        xp *= x;
    }
    return acc;
}

IntPolynomial2 IntPolynomial2::swapped() const {
    IntPolynomial2 out;
    std::size_t w = 0;
    for (const auto& row : coeffs) w = std::max(w, row.size());
    out.coeffs.assign(w, std::vector<BigInt>(coeffs.size(), 0));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        for (std::size_t j = 0; j < coeffs[i].size(); ++j) out.coeffs[j][i] = coeffs[i][j];
    for (auto& row : out.coeffs)
        while (!row.empty() && row.back() == 0) row.pop_back();
    while (!out.coeffs.empty() && out.coeffs.back().empty()) out.coeffs.pop_back();
    return out;
}

std::string IntPolynomial2::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        for (std::size_t j = 0; j < coeffs[i].size(); ++j) {
            const BigInt& c = coeffs[i][j];
            if (c == 0) continue;
            os << (first ? "" : " + ");
            if (c != 1 || (i == 0 && j == 0)) os << c;
            if (i) os << "x" << (i > 1 ? "^" + std::to_string(i) : "");
            if (j) os << "y" << (j > 1 ? "^" + std::to_string(j) : "");
            first = false;
        }
    return first ? "0" : os.str();
}

namespace {

struct Expander {
    const std::vector<Word>& cols;
    std::vector<std::vector<std::uint64_t>>& counts;
    std::array<Word, 64> basis{};

    void run(std::size_t i, int size, int rank) {
        if (i == cols.size()) {
            ++counts[static_cast<std::size_t>(rank)][static_cast<std::size_t>(size)];
            return;
        }
        run(i + 1, size, rank);
        Word v = cols[i];
        while (v) {
            int p = 63 - __builtin_clzll(v);
            if (!basis[static_cast<std::size_t>(p)]) break;
            v ^= basis[static_cast<std::size_t>(p)];
        }
        if (v) {
            int p = 63 - __builtin_clzll(v);
            basis[static_cast<std::size_t>(p)] = v;
            run(i + 1, size + 1, rank + 1);
            basis[static_cast<std::size_t>(p)] = 0;
        } else {
            run(i + 1, size + 1, rank);
        }
    }
};

BigInt binom(int n, int k) {
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

std::vector<std::vector<std::uint64_t>> rank_size_counts(const BinaryMatroid& m, const InvariantOptions& opt) {
    if (opt.max_elements > 0 && m.size() > opt.max_elements)
        throw GuardExceeded("subset expansion: " + std::to_string(m.size()) + " elements exceeds the limit " +
                            std::to_string(opt.max_elements));
    std::vector<std::vector<std::uint64_t>> counts(static_cast<std::size_t>(m.rank() + 1),
                                                   std::vector<std::uint64_t>(static_cast<std::size_t>(m.size() + 1), 0));
    Expander ex{m.columns(), counts};
    ex.run(0, 0, 0);
    return counts;
}

IntPolynomial characteristic_polynomial(const BinaryMatroid& m, const InvariantOptions& opt) {
    IntPolynomial p;
    for (int e = 0; e < m.size(); ++e)
        if (m.is_loop(e)) return p;
    BinaryMatroid s = simplify(m).matroid;
    auto counts = rank_size_counts(s, opt);
    const int r = s.rank();
    p.coeffs.assign(static_cast<std::size_t>(r + 1), 0);
    for (int k = 0; k <= r; ++k)
        for (int sz = 0; sz <= s.size(); ++sz) {
            auto c = counts[static_cast<std::size_t>(k)][static_cast<std::size_t>(sz)];
            if (!c) continue;
            BigInt v = c;
            p.coeffs[static_cast<std::size_t>(r - k)] += (sz % 2 ? -v : v);
        }
    p.trim();
    return p;
}

IntPolynomial2 tutte_polynomial(const BinaryMatroid& m, const InvariantOptions& opt) {
    auto counts = rank_size_counts(m, opt);
    const int r = m.rank(), n = m.size();
    IntPolynomial2 t;
    t.coeffs.assign(static_cast<std::size_t>(r + 1), std::vector<BigInt>(static_cast<std::size_t>(n - r + 1), 0));
    for (int k = 0; k <= r; ++k)
        for (int sz = k; sz <= n; ++sz) {
            auto c = counts[static_cast<std::size_t>(k)][static_cast<std::size_t>(sz)];
            if (!c) continue;
            // c (x-1)^(r-k) (y-1)^(sz-k)
            int a = r - k, b = sz - k;
            for (int i = 0; i <= a; ++i)
                for (int j = 0; j <= b; ++j) {
                    BigInt term = BigInt(c) * binom(a, i) * binom(b, j);
                    if ((a - i + b - j) % 2) term = -term;
                    t.coeffs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += term;
                }
        }
    for (auto& row : t.coeffs)
        while (!row.empty() && row.back() == 0) row.pop_back();
    while (!t.coeffs.empty() && t.coeffs.back().empty()) t.coeffs.pop_back();
    return t;
}

IntPolynomial characteristic_from_tutte(const IntPolynomial2& tp, int rank) {
    // (-1)^r sum_i c_i0 (1 - t)^i
    IntPolynomial p;
    for (std::size_t i = 0; i < tp.coeffs.size(); ++i) {
        if (tp.coeffs[i].empty() || tp.coeffs[i][0] == 0) continue;
        if (p.coeffs.size() < i + 1) p.coeffs.resize(i + 1, 0);
        for (std::size_t j = 0; j <= i; ++j) {
            BigInt term = tp.coeffs[i][0] * binom(static_cast<int>(i), static_cast<int>(j));
            if (j % 2) term = -term;
            p.coeffs[j] += term;
        }
    }
    if (rank % 2)
        for (auto& c : p.coeffs) c = -c;
    p.trim();
    return p;
}

IntPolynomial flow_polynomial(const Graph& g, const InvariantOptions& opt) {
    return characteristic_polynomial(bond_matroid(g), opt);
}

CriticalExponent critical_exponent(const BinaryMatroid& m) {
    for (int e = 0; e < m.size(); ++e)
        if (m.is_loop(e)) throw std::invalid_argument("critical_exponent: matroid has a loop");
    AvoidingResult r = max_avoiding_subspace_with_certificate(m.columns(), m.rank());
    CriticalExponent c;
    c.functionals = r.functionals;
    c.exponent = m.rank() - r.subspace.dim();
    if (static_cast<int>(c.functionals.size()) != c.exponent || !functionals_separate(m, c.functionals))
        throw std::logic_error("critical_exponent: certificate failed");
    return c;
}

int critical_exponent_from_chi(const IntPolynomial& chi, int max_k) {
    for (int k = 1; k <= max_k; ++k)
        if (chi.eval(BigInt(1) << k) > 0) return k;
    return -1;
}

bool functionals_separate(const BinaryMatroid& m, const std::vector<Word>& functionals) {
    for (Word c : m.columns()) {
        bool hit = false;
        for (Word f : functionals) hit |= popcount(c & f) % 2 == 1;
        if (!hit) return false;
    }
    return true;
}

bool h_matrix_certifies(const BitMatrix& ia, const std::vector<std::string>& h_rows) {
    BitMatrix h = BitMatrix::from_rows(h_rows);
    if (h.cols() != ia.rows()) throw std::invalid_argument("h_matrix_certifies: H has the wrong width");
    for (std::size_t c = 0; c < ia.cols(); ++c) {
        bool nonzero = false;
        for (std::size_t i = 0; i < h.rows() && !nonzero; ++i) {
            bool acc = false;
            for (std::size_t j = 0; j < h.cols(); ++j) acc ^= h.get(i, j) && ia.get(j, c);
            nonzero = acc;
        }
        if (!nonzero) return false;
    }
    return true;
}

namespace {

IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial r;
    if (a.coeffs.empty() || b.coeffs.empty()) return r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    r.trim();
    return r;
}

// Exact division by (t - root); nothing when the remainder is nonzero.
std::optional<IntPolynomial> divide_linear(const IntPolynomial& p, int root) {
    if (p.coeffs.empty()) return p;
    IntPolynomial q;
    q.coeffs.assign(p.coeffs.size() - 1, 0);
    BigInt carry = 0;
    for (std::size_t i = p.coeffs.size(); i-- > 0;) {
        BigInt cur = p.coeffs[i] + carry * root;
        if (i == 0) {
            if (cur != 0) return std::nullopt;
        } else {
            q.coeffs[i - 1] = cur;
        }
        carry = cur;
    }
    q.trim();
    return q;
}

}  // namespace

bool check_2sum_identity(const BinaryMatroid& m1, const BinaryMatroid& m2, const Label& p,
                         const std::vector<int>& t_values, const InvariantOptions& opt) {
    if (auto err = check_k_sum(m1, m2, 2)) throw *err;
    BinaryMatroid m = k_sum(m1, m2, 2);
    BinaryMatroid c1 = m1.contract_elements({m1.index_of(p)}), c2 = m2.contract_elements({m2.index_of(p)});
    IntPolynomial pm = characteristic_polynomial(m, opt), p1 = characteristic_polynomial(m1, opt),
                  p2 = characteristic_polynomial(m2, opt), q1 = characteristic_polynomial(c1, opt),
                  q2 = characteristic_polynomial(c2, opt);
    // The quotient is taken as polynomials, so every t (including the root) is checked exactly.
    auto quot = divide_linear(multiply(p1, p2), 1);
    if (!quot) return false;
    for (int t : t_values)
        if (pm.eval(t) != quot->eval(t) + q1.eval(t) * q2.eval(t)) return false;
    return true;
}

bool check_3sum_identity(const BinaryMatroid& m1, const BinaryMatroid& m2, const std::vector<Label>& t,
                         const std::vector<int>& t_values, const InvariantOptions& opt) {
    if (t.size() != 3) throw std::invalid_argument("check_3sum_identity: need a triangle");
    if (auto err = check_k_sum(m1, m2, 3)) throw *err;
    BinaryMatroid m = k_sum(m1, m2, 3);
    BinaryMatroid p = generalized_parallel_connection(m1, m2, t);
    if (!p.delete_elements(p.indices_of(t)).same_matroid(m))
        throw std::logic_error("check_3sum_identity: P\\T differs from the 3-sum");
    const int a = p.index_of(t[0]), b = p.index_of(t[1]), c = p.index_of(t[2]);
    IntPolynomial pm = characteristic_polynomial(m, opt), p1 = characteristic_polynomial(m1, opt),
                  p2 = characteristic_polynomial(m2, opt),
                  x = characteristic_polynomial(p.minor({c}, {a, b}), opt),
                  y = characteristic_polynomial(p.minor({b}, {a}), opt),
                  z = characteristic_polynomial(p.minor({a}, {}), opt);
    std::optional<IntPolynomial> quot = divide_linear(multiply(p1, p2), 1);
    if (quot) quot = divide_linear(*quot, 2);
    if (!quot) return false;
    for (int tv : t_values)
        if (pm.eval(tv) != quot->eval(tv) + x.eval(tv) + y.eval(tv) + z.eval(tv)) return false;
    return true;
}

}  // namespace bmat
