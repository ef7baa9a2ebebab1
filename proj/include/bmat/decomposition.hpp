#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bmat/matroid.hpp"

namespace bmat {

using Triangle = std::vector<Label>;  // three labels

// The two terms of the k-sum induced by an exact separation of order k.
// Order 2 adds one basepoint, order 3 a triangle, named from `marker`
// (made unique against the ground set). Element order follows m.
struct SplitResult {
    BinaryMatroid first, second;
    std::vector<Label> shared;  // empty, the basepoint, or the triangle
};
SplitResult split_along(const BinaryMatroid& m, const Separation& s, const std::string& marker = "z");

struct DecompNode {
    BinaryMatroid matroid;
    std::vector<Triangle> triangles;
    std::optional<Triangle> sum_triangle;  // set on inner nodes
    std::vector<Label> shifted;            // parallel copies added when shifting triangles
    std::vector<DecompNode> children;      // zero or two
    bool is_leaf() const { return children.empty(); }
};

// Requires si(m) 3-connected and ts pairwise disjoint triangles of m.
DecompNode build_tree(const BinaryMatroid& m, const std::vector<Triangle>& ts);

struct Leaf {
    BinaryMatroid matroid;
    std::vector<Triangle> triangles;
};
std::vector<Leaf> leaves(const DecompNode& t);
std::size_t count_nodes(const DecompNode& t);

// 3-connected pieces of si(m) under 1- and 2-sum splitting (2-sum markers
// are labeled q0, q1, ...); pieces with fewer than min_size elements are dropped.
std::vector<BinaryMatroid> three_connected_pieces(const BinaryMatroid& m, int min_size = 0);

// Folds children back with symmetric differences and removes the shifted
// copies; equals the node's matroid when the tree is sound.
BinaryMatroid recompose(const DecompNode& t);

}  // namespace bmat
