#pragma once

#include <json.hpp>

#include "concord/classical.hpp"
#include "concord/cover.hpp"
#include "concord/laurent.hpp"
#include "concord/plf.hpp"
#include "concord/rational.hpp"
#include "concord/signature.hpp"
#include "concord/upsilon.hpp"

// JSON encodings used by the CLI and the certificate schema. Conventions:
// rationals are "num/den" strings (plain "n" when integral), polynomials are
// exponent -> coefficient maps with stringified keys and values, PL functions
// are breakpoint tables. Keys of every object are emitted sorted.
namespace concord {

nlohmann::json json_of(const Rational& q);
nlohmann::json json_of(const LaurentPoly& p);
nlohmann::json json_of(const PLFunction& f);
nlohmann::json json_of(const JumpSpectrum& spectrum);
nlohmann::json json_of(const LiftDescription& lift);

template <typename V, typename Fn>
nlohmann::json json_of_eval(const Eval<V>& e, Fn&& value_to_json) {
    nlohmann::json j;
    if (e.ok()) {
        j["status"] = "known";
        j["value"] = value_to_json(*e.value);
        j["derivation"] = e.derivation;
    } else {
        j["status"] = "unknown";
        j["reason"] = e.unknown_reason;
    }
    return j;
}

}  // namespace concord
