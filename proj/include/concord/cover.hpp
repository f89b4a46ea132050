#pragma once

#include <optional>
#include <string>
#include <vector>

#include "concord/knots.hpp"

namespace concord {

struct LensSpace {
    long long p = 0;
    long long q = 0;
    LensSpace(long long p_, long long q_);  // p > 1, 1 <= q < p, coprime
};

// Number of components of the lift of an l-stranded knot pattern to the
// p-fold cover: gcd(l, p).
long long lift_component_count(long long l, long long p);

// The constructive count: raise an l-cycle to the p-th power and count its
// cycles. Used by tests against the gcd formula.
long long cycle_power_component_count(long long l, long long p);

enum class Family {
    Torus,      // the torus-pattern family K_{n,l} in L(p,q)
    Generic,    // K(J,a) with a = l strands and a J-box
    Order2,     // the W(J)-box family in L(2n,q)
    RP3Null,    // null-homotopic doubled pattern in L(2,1)
    RP3Order2,  // the 3-strand order-2 pattern in L(2,1)
};

// A knot pattern in a lens space, given by its strand count, the strand
// permutation (an l-cycle for knots), a companion knot tied into the
// pattern, and the family tag that fixes the symbolic lift.
struct PatternKnot {
    LensSpace space;
    long long strands = 1;
    std::vector<long long> permutation;  // image of each strand, 0-based
    KnotPtr companion;
    Family family = Family::Torus;
    long long n = 0;  // Torus family longitude count / Order2 half-order

    PatternKnot(LensSpace space_, long long strands_, KnotPtr companion_, Family family_,
                long long n_ = 0);
};

struct TorusLinkDesc {
    long long l = 0;
    long long m = 0;
    long long component_count() const;  // gcd(l, m)
};

struct LiftDescription {
    long long component_count = 0;
    long long degree = 0;  // covering degree of each component
    std::vector<KnotPtr> components;
    std::optional<TorusLinkDesc> full_link;
    std::vector<std::string> notes;
};

// Symbolic covering-link description for each family. Throws
// FamilyConstraintViolated outside the family's parameter range.
LiftDescription lift(const PatternKnot& k);

// Tying j into the base knot turns each component K into K # degree * j.
LiftDescription lift_of_sum(const LiftDescription& desc, const KnotPtr& j);

}  // namespace concord
