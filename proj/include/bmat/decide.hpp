#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bmat/decomposition.hpp"
#include "bmat/minor_search.hpp"
#include "bmat/recognition.hpp"

namespace bmat {

// Whether Delta(leaf; ts) has an M(K3,3)-minor (or an M*(K5)-minor when
// with_k5d is set), using the verdict of si(leaf) to pick the shortcut.
struct LeafCheck {
    bool has_minor = false;
    std::string rule;  // which shortcut decided
};
LeafCheck delta_leaf_has_k33(const BinaryMatroid& leaf, const std::vector<Triangle>& ts, const ClassVerdict& verdict,
                             bool with_k5d, const MinorOptions& opt = {});

struct DecideOptions {
    MinorOptions minor{};
    RecognitionOptions recognition{};
    bool want_certificate = true;  // search m itself for a witness after a positive answer
    int jobs = 1;
};

struct Decision {
    bool has_minor = false;
    bool dualized = false;
    std::optional<Kuratowski> target;  // witness target, in the original orientation
    std::optional<MinorCertificate> certificate;
    std::string reason;
    std::size_t pieces = 0, leaves = 0;
};

// Decides whether m has a minor in family, which must contain K33 or K33d.
Decision decide_minor_in(const BinaryMatroid& m, const Family& family, const DecideOptions& opt = {});

}  // namespace bmat
