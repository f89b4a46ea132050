#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "concord/cover.hpp"
#include "concord/knots.hpp"

namespace concord {

// Output of an obstruction engine. A Distinguished certificate carries a
// complete arithmetic witness; replay() re-runs the engine from the recorded
// inputs and checks that it reproduces the same witness.
struct Certificate {
    std::string engine;
    std::string method;    // obstruction mechanism tag
    std::string category;  // "smooth" or "topological" almost concordance
    nlohmann::json inputs;
    bool distinguished = false;
    std::string reason;  // why the engine was inconclusive
    nlohmann::json witness;
    std::vector<std::string> trace;

    std::string conclusion() const { return distinguished ? "distinguished" : "inconclusive"; }
    nlohmann::json to_json() const;
};

// tau must be equal across a smooth almost concordance of the doubled
// patterns; distinguished when tau(j1) != tau(j2).
Certificate bing_tau(const KnotPtr& j1, const KnotPtr& j2);  // EvaluatorUnknown

// Null-homotopic class in L(2,1): lift components are 2J # 2J^r, so the
// comparison is 4 tau(j1) vs 4 tau(j2).
Certificate rp3_null(const KnotPtr& j1, const KnotPtr& j2);  // EvaluatorUnknown

// Classes of order other than 0 and 2 in L(p,q): the cabling formula reduces
// each of the two companion pairs to a divisibility question; at least one
// pair is always distinguished. Throws OrderViolation when l = 0 or 2l = p.
Certificate lens_generic(const LensSpace& space, long long l);

// Order-2 class in L(2n,q): a genus-1 surface bounds the doubled expression,
// contradicted when |tau| of that expression exceeds 1.
Certificate lens_order2(long long n, long long q, const KnotPtr& j);  // EvaluatorUnknown

// Order-2 class in L(2,1): distinguished when the upsilon slope set of
// cable(3,11; j#j) # -T(3,11) on (2/5, 2/3) contains an odd slope.
Certificate rp3_order2(const KnotPtr& j);  // EvaluatorUnknown

// Topological almost concordance in L(p,q) via first signature jumps of the
// lifted torus knots and the covering-degree multiplied local term.
Certificate topological(const LensSpace& space, long long l, long long n1, long long n2);

// Re-run the engine named in the certificate on its recorded inputs and
// compare the reproduced witness. True when the certificate replays exactly.
bool replay(const nlohmann::json& certificate);

}  // namespace concord
