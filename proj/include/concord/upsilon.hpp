#pragma once

#include <string>
#include <vector>

#include "concord/classical.hpp"
#include "concord/knots.hpp"
#include "concord/laurent.hpp"
#include "concord/plf.hpp"

namespace concord {

// Staircase data of an L-space knot: the decreasing exponent sequence of the
// symmetrized Alexander polynomial together with the grading sequence
//   m_0 = 0,  m_{2i+1} = m_{2i} - 1,  m_{2i+2} = m_{2i+1} + 1 + 2(a_{2i+1} - a_{2i}).
struct Staircase {
    std::vector<long long> alphas;  // strictly decreasing, odd length, alphas.front() == -alphas.back()
    std::vector<long long> ms;
};

// Requires the L-space-knot form: alternating +-1 coefficients with positive
// leading coefficient, an odd number of terms, symmetric exponents. Throws
// NotStaircaseForm otherwise.
Staircase staircase_from_alexander(const LaurentPoly& symmetrized);

struct LSpaceCert {
    KnotPtr expression;
    bool proven = false;
    std::string rule;    // "torus" or "cable" when proven
    std::string reason;  // when not proven
};

// Rule 1: torus knots T(r,s), r,s > 1. Rule 2: (r,s) cables of a proven
// L-space knot J with s >= r(2 g3(J) - 1), g3 exact.
LSpaceCert lspace_certify(const KnotPtr& e);

// max over even staircase indices of the lines m_{2i} - t * a_{2i} on [0,2].
PLFunction upsilon_from_staircase(const Staircase& sc);

// Replace pairs of Wh+(T(2,3)) summands by T(2,5) at the top level and under
// cable companions. Input must be in normal form; output is normal form.
KnotPtr nu_plus_rewrite(const KnotPtr& e);

// Upsilon evaluator. Rules: zero on the unknot, staircase formula for
// L-space-certified torus knots and cables (after the rewrite above),
// negation under mirror, additivity over sums; Unknown otherwise. The
// computed function is checked against the symmetry Y(t) = Y(2-t) and
// Y(0) = Y(2) = 0; a violation aborts with SelfCheckFailed.
Eval<PLFunction> upsilon(const KnotPtr& e);

}  // namespace concord
