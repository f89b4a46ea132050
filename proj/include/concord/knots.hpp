#pragma once

#include <memory>
#include <string>
#include <vector>

#include "concord/errors.hpp"

namespace concord {

// Formal knot expressions. Grammar (ASCII, whitespace insignificant):
//
//   expr := term { "#" term }
//   term := int "*" atom | "-" atom | atom
//   atom := "U" | "T(" int "," int ")" | "Wh+(" expr ")" | "Wh-(" expr ")"
//         | "cable(" int "," int ";" expr ")" | "rev(" atom ")" | "(" expr ")"
//
// Trees are immutable and shared; all operations below are pure.
struct KnotExpr;
using KnotPtr = std::shared_ptr<const KnotExpr>;

struct KnotExpr {
    enum class Kind { Unknot, Torus, Cable, WhPlus, WhMinus, Sum, Neg, Rev };

    Kind kind;
    long long r = 0;  // Torus / Cable longitude parameter
    long long s = 0;  // Torus / Cable meridian parameter
    std::vector<KnotPtr> children;
};

KnotPtr unknot();
KnotPtr torus(long long r, long long s);          // requires coprime, r,s >= 1
KnotPtr cable(long long r, long long s, KnotPtr companion);  // r >= 1, gcd(r,|s|) = 1
KnotPtr wh_plus(KnotPtr j);
KnotPtr wh_minus(KnotPtr j);
KnotPtr sum(std::vector<KnotPtr> parts);
KnotPtr neg(KnotPtr j);
KnotPtr rev(KnotPtr j);

bool equal(const KnotPtr& a, const KnotPtr& b);
// Total order used for the canonical operand order in sums.
int compare(const KnotPtr& a, const KnotPtr& b);

// Parse a grammar string into a normal-form expression. Throws SyntaxError
// with a position, or ParameterError for invalid torus/cable parameters.
KnotPtr parse(const std::string& text);

// Canonical normal form. Idempotent. Reductions: double Neg/Rev, Rev pushed
// inside Neg, flattened and sorted sums with Unknot operands removed,
// T(1,s) = T(r,1) = U, cable(r,s;U) = T(r,s), cable(1,s;J) = J, and the
// Whitehead identity Wh-(x) = -Wh+(-x) so evaluators only ever see Wh+.
KnotPtr normalize(const KnotPtr& e);

// Round-trips: parse(render(e)) == e for normal-form e.
std::string render(const KnotPtr& e);

}  // namespace concord
