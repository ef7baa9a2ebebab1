#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bmat/graph.hpp"
#include "bmat/matroid.hpp"

namespace bmat {

// Triangular Moebius matroid of rank r >= 3: columns e1..er, a1..a(r-1),
// b1..b(r-1). Rim elements e1..e(r-1), a*; spokes b*; tip er.
BinaryMatroid mobius_triangular(int r);
// Triadic Moebius matroid of even rank r >= 4: e1..er, c1..c(r-1).
BinaryMatroid mobius_triadic(int r);

enum class LadderKind { Cubic, Quartic };
const char* to_string(LadderKind k);
// Cubic ladder on an even number n >= 4 of vertices (n = 4 gives K4) or
// quartic ladder on an odd number n >= 5. Rim edges r0.., spokes s0..
Graph mobius_ladder_graph(LadderKind kind, int n);

// Projective geometry PG(rank-1, 2).
BinaryMatroid pg(int rank);
// Spike-like matroid on e1..er, d1..dr with d = sum e_i and d_i = d + e_i.
BinaryMatroid spike_nr(int r);

// Catalog keys: fixed names plus the parametric forms Delta<r>, Upsilon<r>,
// PG<r> (rank r), N<r>, CML<n>, QML<n> (bond matroids of ladders).
// Throws std::out_of_range on an unknown key.
BinaryMatroid named(const std::string& key);
// The two terms whose 3-sum along {01, 02, 12} is R12: M(K5\e) and M*(K3,3).
std::pair<BinaryMatroid, BinaryMatroid> r12_terms();
std::vector<std::string> catalog_keys();

// The eighteen sporadic keys, in table order.
const std::vector<std::string>& sporadic_keys();
bool is_sporadic_key(const std::string& key);

}  // namespace bmat
