#pragma once

#include "watermelon/core.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace watermelon {

// Exact routes selectable by name: oracle, det-general, det-watermelon,
// det-dev0, thm4, thm8, thm9. t = 0 always goes to the oracle base case.
ContactPolynomial compute_route(const std::string& method, const WalkerSpec& spec, const WatermelonSpec* melon);
std::vector<std::string> routes_for(const WatermelonSpec& melon);

std::string polynomial_json(const ContactPolynomial& p, int n, int t, const int* y);
std::string format_double(double v);

// argv[0] is the program name; returns the process exit code
// (0 ok, 1 check failed, 2 usage or domain error).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace watermelon
