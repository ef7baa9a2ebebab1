#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bmat/matroid.hpp"
#include "bmat/minor_search.hpp"

namespace bmat {

// Size of the members of P_r, and alpha(r) = 14r/3 - f(r).
int f(int r);
boost::multiprecision::cpp_rational alpha(int r);

// A member of P_r: PG(1,2), PG(2,2) or PG(3,2) for r <= 4, otherwise the
// parallel connection of PG(3,2) with a member of P_(r-3). basepoints[i]
// names the basepoint (a label of the matroid built so far) for step i;
// missing entries default to the first element.
BinaryMatroid build_pr(int r, const std::vector<Label>& basepoints = {});
// Number of parallel-connection steps in build_pr(r).
int pr_steps(int r);

// |E| <= 4r - 5 for a 3-connected M(K3,3)-free m with rank > 4 or with an
// allowable triangle. Throws std::invalid_argument when a hypothesis fails.
bool verify_size_lemma(const BinaryMatroid& m, const MinorOptions& opt = {0, 12});

// build_pr(r) has no M(K3,3)-minor, by the reduced search.
bool verify_no_k33_minor_pr(int r, const std::vector<Label>& basepoints = {}, const MinorOptions& opt = {0, 12});

// Every simple binary matroid of rank 4 (a subset of PG(3,2)) has at most
// f(4) elements, and only PG(3,2) attains it.
struct Rank4Maximality {
    int max_size = 0;
    std::size_t attaining = 0;
    bool attained_by_pg = false;
};
Rank4Maximality rank4_maximality();

}  // namespace bmat
