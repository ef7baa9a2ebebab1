#pragma once

#include <optional>

#include "bmat/matroid.hpp"

namespace bmat {

// Tutte linkage: the minimum of lambda(X) over A <= X <= E - B, together
// with a minimizing X (as indices, sorted).
struct Linkage {
    int kappa = 0;
    ElementSet side;
};
Linkage min_separation_between(const BinaryMatroid& m, const ElementSet& a, const ElementSet& b);

// Exact k-separation (k = 1 or 2), or nothing.
std::optional<Separation> find_separation(const BinaryMatroid& m, int k);
// Exact 3-separation with both sides of at least four elements, or nothing.
// Requires a 3-connected input (throws std::invalid_argument otherwise).
std::optional<Separation> find_3sep_big(const BinaryMatroid& m);
// Separation of order < k with both sides at least min_side, or nothing.
std::optional<Separation> find_separation_general(const BinaryMatroid& m, int k, int min_side);

bool is_connected(const BinaryMatroid& m);
bool is_3connected(const BinaryMatroid& m);
bool is_internally_4connected(const BinaryMatroid& m);

// Connected components as index sets, ordered by least element.
std::vector<ElementSet> components(const BinaryMatroid& m);

// Exhaustive search over all bipartitions; testing oracle for small ground sets.
std::optional<Separation> brute_force_separation(const BinaryMatroid& m, int k, int min_side);

}  // namespace bmat
