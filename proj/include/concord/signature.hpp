#pragma once

#include <utility>
#include <vector>

#include "concord/laurent.hpp"
#include "concord/rational.hpp"

namespace concord {

// Jump spectrum of the Levine-Tristram signature of a torus knot: sorted
// (t, jump) pairs with t = N/(rs) in (0,1), N not a multiple of r or s, and
// jump +2 or -2 by the lattice-point count
//   L(N) = { (i,j) : i r + j s = N, 0 <= i <= s, 0 <= j <= r }.
// The lattice rule is applied on the full range 0 < N < rs; the extension at
// N = rs-1 is validated by the antisymmetry invariant and the Seifert oracle.
struct JumpSpectrum {
    long long r = 0;
    long long s = 0;
    std::vector<std::pair<Rational, int>> entries;
};

JumpSpectrum torus_jumps(long long r, long long s);  // BadParameters

// Cumulative signature at a non-jump t in (0,1): sum of jumps before t, with
// the convention that the signature vanishes on the arc adjacent to 1.
int sigma_at(const JumpSpectrum& spectrum, const Rational& t);  // AtJumpPoint / OutOfDomain

// Seifert matrix of the standard positive-braid-closure Seifert surface of
// T(r,s), the closure of (s1 ... s_{r-1})^s. Size (r-1)(s-1). Construction
// runs two self-checks: det(V - V^T) = 1 and det(tV - V^T) equal to the
// torus Alexander polynomial up to units.
struct SeifertMatrix {
    long long r = 0;
    long long s = 0;
    std::vector<std::vector<long long>> v;
};

SeifertMatrix braid_seifert_matrix(long long r, long long s);  // SelfCheckFailed

// det(V - V^T) and det(tV - V^T) for an arbitrary square integer matrix.
Integer seifert_pairing_det(const std::vector<std::vector<long long>>& v);
LaurentPoly seifert_alexander(const std::vector<std::vector<long long>>& v);

// Signature of (1-w)V + (1-conj(w))V^T at w = exp(2 pi i t), computed with
// MPFR interval scalars and certified pivot signs; the working precision is
// doubled until every pivot sign is decided (PrecisionExhausted otherwise).
int hermitian_signature_at(const std::vector<std::vector<long long>>& v, const Rational& t);

// Same, with the precondition t not in the jump set of T(r,s).
int sigma_oracle(const SeifertMatrix& v, const Rational& t);  // AtJumpPoint

}  // namespace concord
