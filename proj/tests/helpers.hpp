#pragma once

#include "watermelon/core.hpp"

#include <random>

namespace testing_support {

using namespace watermelon;

// k^e shorthand: poly({{2, 1}, {3, 2}}) is k^2 + 2k^3
inline ContactPolynomial poly(std::initializer_list<std::pair<long, long>> terms)
{
    ContactPolynomial p;
    for (auto [e, c] : terms) p.add_term(e, c);
    return p;
}

inline ContactPolynomial random_poly(std::mt19937_64& rng, int max_degree = 5, int max_abs = 20)
{
    std::uniform_int_distribution<int> deg(-1, max_degree), coef(-max_abs, max_abs);
    std::vector<Int> c;
    for (int d = deg(rng); d >= 0; --d) c.push_back(coef(rng));
    return ContactPolynomial(std::move(c));
}

template <class F>
void for_watermelons(int max_n, int max_t, int max_y, F&& f)
{
    for (int n = 1; n <= max_n; ++n)
        for (int y = 0; y <= max_y; ++y)
            for (int t = std::max(y, 1); t <= max_t; ++t)
                if ((t - y) % 2 == 0 && t + y >= 2) f(n, t, y);
}

}  // namespace testing_support
