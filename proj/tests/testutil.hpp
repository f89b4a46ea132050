#pragma once

// Shared deterministic generators for the property suites.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "concord/knots.hpp"
#include "concord/laurent.hpp"

namespace concord::testing {

using Rng = std::mt19937_64;

inline LaurentPoly random_poly(Rng& rng, int max_terms = 5, int max_exp = 6, int max_coeff = 4) {
    std::uniform_int_distribution<int> term_count(0, max_terms);
    std::uniform_int_distribution<int> exponent(-max_exp, max_exp);
    std::uniform_int_distribution<int> coefficient(-max_coeff, max_coeff);
    LaurentPoly p;
    const int n = term_count(rng);
    for (int i = 0; i < n; ++i)
        p = p + LaurentPoly::term(exponent(rng), Integer(coefficient(rng)));
    return p;
}

inline KnotPtr random_torus(Rng& rng) {
    static const std::vector<std::pair<long long, long long>> params = {
        {2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5}, {3, 7}, {4, 5}, {5, 6}, {3, 11}, {2, 9}};
    std::uniform_int_distribution<std::size_t> pick(0, params.size() - 1);
    const auto [r, s] = params[pick(rng)];
    return torus(r, s);
}

// Arbitrary expression tree of bounded depth over the full grammar.
inline KnotPtr random_expr(Rng& rng, int depth = 4) {
    std::uniform_int_distribution<int> kind(0, depth <= 0 ? 1 : 7);
    switch (kind(rng)) {
        case 0:
            return unknot();
        case 1:
            return random_torus(rng);
        case 2:
            return wh_plus(random_expr(rng, depth - 1));
        case 3:
            return wh_minus(random_expr(rng, depth - 1));
        case 4: {
            std::uniform_int_distribution<int> count(2, 3);
            std::vector<KnotPtr> parts;
            const int n = count(rng);
            for (int i = 0; i < n; ++i) parts.push_back(random_expr(rng, depth - 1));
            return sum(std::move(parts));
        }
        case 5:
            return neg(random_expr(rng, depth - 1));
        case 6:
            return rev(random_expr(rng, depth - 1));
        default: {
            static const std::vector<std::pair<long long, long long>> cables = {
                {2, 3}, {2, 5}, {2, 7}, {3, 7}, {3, 11}, {2, 13}};
            std::uniform_int_distribution<std::size_t> pick(0, cables.size() - 1);
            const auto [r, s] = cables[pick(rng)];
            return cable(r, s, random_expr(rng, depth - 1));
        }
    }
}

// Expressions the L-space certification rules accept: torus knots and
// admissible cables over them.
inline KnotPtr random_lspace_expr(Rng& rng) {
    KnotPtr e = random_torus(rng);
    std::uniform_int_distribution<int> wrap(0, 1);
    if (wrap(rng)) {
        const long long g = (e->r - 1) * (e->s - 1) / 2;
        std::uniform_int_distribution<long long> rr(2, 3);
        const long long r = rr(rng);
        long long s = std::max<long long>(r * (2 * g - 1), 2);
        while (std::gcd(r, s) != 1) ++s;
        e = cable(r, s, e);
    }
    return e;
}

}  // namespace concord::testing
