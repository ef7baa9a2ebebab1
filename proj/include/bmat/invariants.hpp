#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bmat/graph.hpp"
#include "bmat/matroid.hpp"

namespace bmat {

using BigInt = boost::multiprecision::cpp_int;

// Coefficients in increasing degree, trailing zeros trimmed.
struct IntPolynomial {
    std::vector<BigInt> coeffs;
    void trim();
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    BigInt eval(const BigInt& t) const;
    std::string str(const std::string& var = "t") const;
    bool operator==(const IntPolynomial& o) const { return coeffs == o.coeffs; }
};

// coeffs[i][j] multiplies x^i y^j.
struct IntPolynomial2 {
    std::vector<std::vector<BigInt>> coeffs;
    BigInt eval(const BigInt& x, const BigInt& y) const;
    IntPolynomial2 swapped() const;
    std::string str() const;
    bool operator==(const IntPolynomial2& o) const { return coeffs == o.coeffs; }
};

struct InvariantOptions {
    int max_elements = 26;  // subset expansion is exponential in |E|
};

// counts[k][s] = number of subsets of size s and rank k.
std::vector<std::vector<std::uint64_t>> rank_size_counts(const BinaryMatroid& m, const InvariantOptions& opt = {});

// Computed on the simplification (parallel elements leave chi unchanged).
IntPolynomial characteristic_polynomial(const BinaryMatroid& m, const InvariantOptions& opt = {});
IntPolynomial2 tutte_polynomial(const BinaryMatroid& m, const InvariantOptions& opt = {});
// (-1)^r T(M; 1 - t, 0), the cross-check for the characteristic polynomial.
IntPolynomial characteristic_from_tutte(const IntPolynomial2& t, int rank);
IntPolynomial flow_polynomial(const Graph& g, const InvariantOptions& opt = {});

// Critical exponent over GF(2) by subspace search. functionals are rows in
// the matroid's own coordinates; no element vanishes on all of them.
struct CriticalExponent {
    int exponent = 0;
    std::vector<Word> functionals;
};
CriticalExponent critical_exponent(const BinaryMatroid& m);
// min{k >= 1 : chi(M; 2^k) > 0}
int critical_exponent_from_chi(const IntPolynomial& chi, int max_k = 64);
// Every element has some functional evaluating to 1 on it.
bool functionals_separate(const BinaryMatroid& m, const std::vector<Word>& functionals);

// H [I | A] has no zero column, with H given as rows of 0/1 strings over
// the r standard-form coordinates.
bool h_matrix_certifies(const BitMatrix& identity_and_a, const std::vector<std::string>& h_rows);

// Two-sum identity along basepoint p, checked exactly at each t. The
// divisions are exact polynomial divisions, so roots of the divisor are fine.
bool check_2sum_identity(const BinaryMatroid& m1, const BinaryMatroid& m2, const Label& p,
                         const std::vector<int>& t_values, const InvariantOptions& opt = {});
// Three-sum identity along the triangle (a, b, c). The deletion/contraction
// terms are taken in the generalized parallel connection P, where M = P\T.
bool check_3sum_identity(const BinaryMatroid& m1, const BinaryMatroid& m2, const std::vector<Label>& t,
                         const std::vector<int>& t_values, const InvariantOptions& opt = {});

}  // namespace bmat
