#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bmat/matroid.hpp"

namespace bmat {

// Matroid on E1 xor E2 whose cycles are the sums of cycles of a and b,
// restricted to that set. Shared labels denote shared elements.
// Ground order: E1-E2 in a's order, then E2-E1 in b's order.
BinaryMatroid sym_diff(const BinaryMatroid& a, const BinaryMatroid& b);

BinaryMatroid direct_sum(const BinaryMatroid& a, const BinaryMatroid& b);

// Delta-Y exchange on the triangle t; ground set and order are unchanged.
BinaryMatroid delta_y(const BinaryMatroid& m, const std::vector<Label>& t);
// Delta-Y on each of a family of pairwise disjoint triangles.
BinaryMatroid delta_batch(const BinaryMatroid& m, const std::vector<std::vector<Label>>& ts);

enum class SumFailure {
    EmptyGround,
    OverlapNotEmpty,
    OverlapNotSingleton,
    BasepointLoop,
    BasepointColoop,
    TooFewElements,
    OverlapNotTriangle,
    TriangleContainsCocircuit,
    BadOrder,
};
const char* to_string(SumFailure f);

class SumError : public std::invalid_argument {
public:
    SumError(SumFailure f, int operand, const std::string& what)
        : std::invalid_argument(what), failure(f), operand(operand) {}
    SumFailure failure;
    int operand;  // 1 or 2, 0 when the failure concerns both
};

// k-sum for k in {1,2,3}; throws SumError naming the violated condition.
BinaryMatroid k_sum(const BinaryMatroid& a, const BinaryMatroid& b, int k);
// Null when the k-sum is defined, else the failure.
std::optional<SumError> check_k_sum(const BinaryMatroid& a, const BinaryMatroid& b, int k);

// Parallel connection along the single shared label p.
BinaryMatroid parallel_connection(const BinaryMatroid& a, const BinaryMatroid& b, const Label& p);
// Generalized parallel connection across the shared triangle t.
BinaryMatroid generalized_parallel_connection(const BinaryMatroid& a, const BinaryMatroid& b,
                                              const std::vector<Label>& t);

// Same matroid with the ground set listed in the given order.
BinaryMatroid reordered(const BinaryMatroid& m, const std::vector<Label>& order);

}  // namespace bmat
