#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bmat/decomposition.hpp"
#include "bmat/matroid.hpp"

namespace bmat {

class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct MinorCertificate {
    std::vector<Label> contract, del;
    std::map<Label, Label> iso;  // target label -> label of the minor
};

struct MinorOptions {
    int max_elements = 24;  // 0 disables the guard
    int max_target = 12;
};

// Exact search for a minor isomorphic to the simple matroid `target`.
// Throws GuardExceeded when the instance exceeds the configured sizes.
std::optional<MinorCertificate> has_minor(const BinaryMatroid& m, const BinaryMatroid& target,
                                          const MinorOptions& opt = {});
bool verify_minor_certificate(const BinaryMatroid& m, const BinaryMatroid& target, const MinorCertificate& c);

// As has_minor for a 3-connected target, first splitting m along 1- and
// 2-separations so only the pieces are searched.
std::optional<MinorCertificate> has_minor_reduced(const BinaryMatroid& m, const BinaryMatroid& target,
                                                  const MinorOptions& opt = {});

// Kuratowski targets: M(K3,3), M(K5) and their duals.
enum class Kuratowski { K33, K5, K33d, K5d };
const char* to_string(Kuratowski k);
std::optional<Kuratowski> parse_kuratowski(const std::string& s);
const BinaryMatroid& kuratowski_matroid(Kuratowski k);
using Family = std::vector<Kuratowski>;  // kept sorted, without repeats
Family normalize_family(Family f);

// Delta_T(m) has no M(K3,3)-minor.
bool allowable_triangle(const BinaryMatroid& m, const Triangle& t, const MinorOptions& opt = {});

// No F7 and no F7* minor.
bool is_regular(const BinaryMatroid& m, const MinorOptions& opt = {});

}  // namespace bmat
