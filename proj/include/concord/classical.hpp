#pragma once

#include <optional>
#include <string>
#include <vector>

#include "concord/knots.hpp"
#include "concord/laurent.hpp"

namespace concord {

// Result of a rule-based evaluation: either a value together with the list
// of rule applications that produced it, or Unknown with the first missing
// premise. Rules never guess; anything outside the rule table is Unknown.
template <typename V>
struct Eval {
    std::optional<V> value;
    std::vector<std::string> derivation;
    std::string unknown_reason;

    bool ok() const { return value.has_value(); }

    static Eval known(V v, std::vector<std::string> steps) {
        Eval e;
        e.value = std::move(v);
        e.derivation = std::move(steps);
        return e;
    }
    static Eval unknown(std::string reason) {
        Eval e;
        e.unknown_reason = std::move(reason);
        return e;
    }
};

// Seifert genus with an exactness tag: `exact` means the value is the genus,
// otherwise it is an upper bound coming from an exhibited Seifert surface.
struct Genus {
    long long value = 0;
    bool exact = false;
    bool operator==(const Genus& o) const { return value == o.value && exact == o.exact; }
};

// Alexander polynomial of the (r,s) torus knot, (t^{rs}-1)(t-1) / ((t^r-1)(t^s-1)),
// computed by exact division. Requires coprime r,s >= 1.
LaurentPoly torus_alexander(long long r, long long s);

// Rule table (see README): alex-unknot, alex-torus, alex-sum, alex-mirror,
// alex-reverse, alex-whitehead, alex-cable. Total on normal forms; the value
// is the canonical unit representative.
Eval<LaurentPoly> alexander(const KnotPtr& e);

// genus-unknot, genus-torus, genus-additive, genus-mirror, genus-reverse,
// genus-whitehead-tau (exact, needs tau > 0 for the companion),
// genus-whitehead-bound (upper bound from the standard genus-1 surface).
Eval<Genus> genus3(const KnotPtr& e);

// tau-unknot, tau-torus, tau-additive, tau-mirror, tau-reverse, tau-hedden,
// tau-van-cott-1 (g3 = tau), tau-van-cott-2 (g3 = -tau).
Eval<long long> tau(const KnotPtr& e);

// Sound, incomplete nontriviality certificate: nonzero tau, exact positive
// genus, or nontrivial Alexander polynomial.
bool certified_nontrivial(const KnotPtr& e, std::string* how = nullptr);

}  // namespace concord
