#pragma once

#include <string>
#include <vector>

#include "bmat/minor_search.hpp"

namespace bmat {

// The seven computer-checked statements about which catalog matroids carry
// M(K5), M*(K5) or M*(K3,3) minors.
struct FactResult {
    char id = 'a';
    std::string statement;
    std::string observed;
    bool passed = false;
    double seconds = 0;
};

std::vector<FactResult> run_minor_facts(const MinorOptions& opt = {});

}  // namespace bmat
