#pragma once

#include "watermelon/core.hpp"

#include <functional>

namespace watermelon {

// steps are +1 / -1; start heights come from the owning spec
struct PathFamily {
    std::vector<std::vector<int>> paths;

    friend bool operator==(const PathFamily&, const PathFamily&) = default;
};

using HeightState = std::vector<int>;

std::vector<int> heights_of(int start, const std::vector<int>& steps);

// Checks nonnegativity, strict ordering at common times and endpoints.
// Paths may have different lengths; ends[i] is the required final height.
bool family_is_valid(const std::vector<int>& starts, const std::vector<int>& ends, const PathFamily& fam);

long contacts(const WalkerSpec& spec, const PathFamily& fam);

ContactPolynomial oracle_base_case(const WalkerSpec& spec);
ContactPolynomial enumerate_contact_polynomial(const WalkerSpec& spec);

// Calls sink for every valid family in lexicographic order of the
// concatenated step sequences (walker 1 first, up before down).
// sink returns false to stop early.
void enumerate_families(const WalkerSpec& spec, const std::function<bool(const PathFamily&)>& sink);
std::vector<PathFamily> list_families(const WalkerSpec& spec);

std::string path_code(const std::vector<int>& steps);          // "3434..." with 3 = up, 4 = down
std::vector<int> parse_path_code(const std::string& code);

}  // namespace watermelon
