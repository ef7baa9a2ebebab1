#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bmat/catalog.hpp"
#include "bmat/graph.hpp"
#include "bmat/matroid.hpp"
#include "bmat/minor_search.hpp"

namespace bmat {

struct RecognitionOptions {
    int max_star_rank = 24;  // cocycle enumeration is exponential in this rank
};

// Graph whose cycle matroid equals m (same labels), or nothing. The result
// is always re-verified by cycle-space equality.
std::optional<Graph> graph_realization(const BinaryMatroid& m, const RecognitionOptions& opt = {});
// Graph whose bond matroid equals m.
std::optional<Graph> is_cographic(const BinaryMatroid& m, const RecognitionOptions& opt = {});

// Rotation system: for each vertex, incident edge labels in cyclic order.
// Loops and all but one edge of each parallel class are omitted.
struct PlanarEmbedding {
    std::vector<std::vector<Label>> rotation;
};
bool verify_embedding(const Graph& g, const PlanarEmbedding& e);
std::optional<PlanarEmbedding> planar_embedding(const Graph& g);
struct PlanarRealization {
    Graph graph;
    PlanarEmbedding embedding;
};
std::optional<PlanarRealization> is_planar_graphic(const BinaryMatroid& m, const RecognitionOptions& opt = {});

struct LadderType {
    LadderKind kind;
    std::vector<int> rim_vertices;  // v0, v1, ... along the rim
    std::vector<Label> rim, spokes;
};
// Simple connected graphs with at least six vertices only.
std::optional<LadderType> mobius_ladder_type(const Graph& g);

enum class MobiusKind { Triangular, Triadic };
const char* to_string(MobiusKind k);
struct MobiusMatch {
    MobiusKind kind;
    int rank;
    std::map<Label, Label> iso;  // labels of m -> labels of the constructed matroid
};
std::optional<MobiusMatch> recognize_mobius_matroid(const BinaryMatroid& m, const RecognitionOptions& opt = {});

// Sporadic key whose catalog matroid is isomorphic to m, restricted to keys.
std::optional<std::string> match_sporadic(const BinaryMatroid& m, const std::vector<std::string>& keys);

enum class VerdictKind {
    Graphic, Cographic, PlanarGraphic, TriangularMobius, TriadicMobius,
    Sporadic, DualSporadic, DualMobius, Outside
};
const char* to_string(VerdictKind k);

struct ClassVerdict {
    VerdictKind kind = VerdictKind::Outside;
    std::optional<Graph> graph;          // graph certificates
    int rank = 0;                        // Moebius rank
    MobiusKind mobius = MobiusKind::Triangular;
    std::string key;                     // sporadic key or named exception
    std::map<Label, Label> iso;          // isomorphism certificate
    std::optional<Kuratowski> witness_target;
    std::optional<MinorCertificate> witness;
    bool member() const { return kind != VerdictKind::Outside; }
    std::string describe() const;
};

// Membership of an internally 4-connected m in ex(family), by the
// characterization tables. family must contain K33 or K33d.
ClassVerdict classify_i4c(const BinaryMatroid& m, const Family& family, const RecognitionOptions& opt = {},
                          const MinorOptions& mopt = {0, 12});
bool verify_verdict(const BinaryMatroid& m, const ClassVerdict& v);

// The i4c sporadic keys that lie in ex(family) for a family containing K33.
std::vector<std::string> sporadic_members(const Family& family);

}  // namespace bmat
