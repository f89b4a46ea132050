#include "concord/obstruct.hpp"

#include <numeric>

#include "concord/classical.hpp"
#include "concord/json_io.hpp"
#include "concord/signature.hpp"
#include "concord/upsilon.hpp"

namespace concord {

using nlohmann::json;

json Certificate::to_json() const {
    json j;
    j["engine"] = engine;
    j["method"] = method;
    j["category"] = category;
    j["inputs"] = inputs;
    j["conclusion"] = conclusion();
    j["statement"] = distinguished
                         ? "the inputs are not " + category + "ly almost concordant (" + method +
                               " obstruction)"
                         : "no obstruction found by this engine";
    if (!distinguished) j["reason"] = reason;
    j["witness"] = witness;
    j["trace"] = trace;
    return j;
}

namespace {

long long tau_or_throw(const KnotPtr& e, Certificate& cert) {
    auto t = tau(e);
    if (!t.ok()) throw EvaluatorUnknown("tau(" + render(e) + ") unknown: " + t.unknown_reason);
    cert.trace.insert(cert.trace.end(), t.derivation.begin(), t.derivation.end());
    return *t.value;
}

KnotPtr doubled_with_reverses(const KnotPtr& j) {
    return normalize(sum({j, j, rev(j), rev(j)}));
}

}  // namespace

Certificate bing_tau(const KnotPtr& j1, const KnotPtr& j2) {
    Certificate cert;
    cert.engine = "bing";
    cert.method = "bing-double-tau";
    cert.category = "smooth";
    cert.inputs = {{"j1", render(normalize(j1))}, {"j2", render(normalize(j2))}};

    const KnotPtr lift1 = normalize(sum({j1, rev(j1)}));
    const KnotPtr lift2 = normalize(sum({j2, rev(j2)}));
    const long long t1 = tau_or_throw(j1, cert);
    const long long t2 = tau_or_throw(j2, cert);
    cert.witness = {{"tau_j1", t1},
                    {"tau_j2", t2},
                    {"branched_cover_component_j1", render(lift1)},
                    {"branched_cover_component_j2", render(lift2)}};
    cert.distinguished = t1 != t2;
    if (!cert.distinguished)
        cert.reason = "tau values agree (" + std::to_string(t1) + "), no obstruction";
    cert.trace.push_back("doubled patterns concordant would force tau(" + render(normalize(j1)) +
                         ") = tau(" + render(normalize(j2)) + "); values are " +
                         std::to_string(t1) + " and " + std::to_string(t2));
    return cert;
}

Certificate rp3_null(const KnotPtr& j1, const KnotPtr& j2) {
    Certificate cert;
    cert.engine = "rp3-null";
    cert.method = "branched-cover-tau";
    cert.category = "smooth";
    cert.inputs = {{"j1", render(normalize(j1))}, {"j2", render(normalize(j2))}};

    const KnotPtr lift1 = doubled_with_reverses(j1);
    const KnotPtr lift2 = doubled_with_reverses(j2);
    const long long t1 = tau_or_throw(lift1, cert);
    const long long t2 = tau_or_throw(lift2, cert);
    cert.witness = {{"lift_j1", render(lift1)},
                    {"lift_j2", render(lift2)},
                    {"tau_lift_j1", t1},
                    {"tau_lift_j2", t2}};
    cert.distinguished = t1 != t2;
    if (!cert.distinguished)
        cert.reason = "tau of the lifts agree (" + std::to_string(t1) + "), no obstruction";
    return cert;
}

Certificate lens_generic(const LensSpace& space, long long l) {
    const long long p = space.p, q = space.q;
    if (l <= 0 || l >= p) throw OrderViolation("need 0 < l < p");
    if (2 * l == p) throw OrderViolation("order-2 class: 2l = p is outside this engine");

    Certificate cert;
    cert.engine = "lens-generic";
    cert.method = "cabling-congruence";
    cert.category = "smooth";
    cert.inputs = {{"p", p}, {"q", q}, {"l", l}};

    const KnotPtr minus_d = normalize(wh_minus(neg(torus(2, 3))));
    json pairs = json::array();
    bool any = false;
    for (const auto& [label, lp] : {std::pair<const char*, long long>{"K+", l},
                                    std::pair<const char*, long long>{"K-", p - l}}) {
        const long long d = std::gcd(lp, p);
        PatternKnot pattern(space, lp, minus_d, Family::Generic);
        const LiftDescription lifted = lift(pattern);
        const KnotPtr cable_side = lifted.components.front();
        const KnotPtr torus_side =
            normalize(lp / d == 1 ? unknot() : torus(lp / d, (p + lp * q) / d));

        const long long tau_cable = tau_or_throw(cable_side, cert);
        const long long tau_torus = tau_or_throw(torus_side, cert);
        // tau(cable) + (p/d) tau(Jhat) = tau(torus) must admit an integer
        // local term for the pair to stay unobstructed
        const long long modulus = p / d;
        const long long diff = tau_torus - tau_cable;
        const bool divisible = diff % modulus == 0;
        json pair;
        pair["pair"] = label;
        pair["strands"] = lp;
        pair["d"] = d;
        pair["lift_with_companion"] = render(cable_side);
        pair["lift_unknot_companion"] = render(torus_side);
        pair["tau_companion_side"] = tau_cable;
        pair["tau_unknot_side"] = tau_torus;
        pair["modulus"] = modulus;
        pair["difference"] = diff;
        pair["distinguished"] = !divisible;
        pairs.push_back(pair);
        cert.trace.push_back(std::string(label) + ": needs " + std::to_string(modulus) +
                             " | " + std::to_string(diff) + ", i.e. " + std::to_string(lp) +
                             " | " + std::to_string(p) + "; " +
                             (divisible ? "holds, inconclusive" : "fails, distinguished"));
        any = any || !divisible;
    }
    cert.witness["pairs"] = pairs;
    cert.distinguished = any;
    if (!any)
        throw SelfCheckFailed("both companion pairs divisible: l and p-l both divide p with 2l != p");
    return cert;
}

Certificate lens_order2(long long n, long long q, const KnotPtr& j) {
    if (n <= 1) throw BadParameters("lens_order2 needs n > 1");
    const LensSpace space(2 * n, q);

    Certificate cert;
    cert.engine = "lens-order2";
    cert.method = "slice-genus-tau-bound";
    cert.category = "smooth";
    cert.inputs = {{"n", n}, {"q", q}, {"j", render(normalize(j))}};

    const KnotPtr w = wh_plus(j);
    const KnotPtr bound_expr =
        n == 2 ? doubled_with_reverses(w) : normalize(sum({w, w}));
    const long long t = tau_or_throw(bound_expr, cert);
    cert.witness = {{"bounding_expression", render(bound_expr)},
                    {"tau", t},
                    {"genus_bound", 1}};
    cert.distinguished = (t > 1) || (t < -1);
    if (!cert.distinguished)
        cert.reason = "|tau| = " + std::to_string(t < 0 ? -t : t) +
                      " does not exceed the genus-1 surface bound";
    cert.trace.push_back("a genus-1 surface bounds " + render(bound_expr) +
                         " if the patterns are almost concordant; |tau| = " +
                         std::to_string(t < 0 ? -t : t) + " vs genus bound 1");
    return cert;
}

Certificate rp3_order2(const KnotPtr& j) {
    Certificate cert;
    cert.engine = "rp3-order2";
    cert.method = "upsilon-slope-parity";
    cert.category = "smooth";
    cert.inputs = {{"j", render(normalize(j))}};

    const KnotPtr lifted = normalize(sum({cable(3, 11, sum({j, j})), neg(torus(3, 11))}));
    auto u = upsilon(lifted);
    if (!u.ok())
        throw EvaluatorUnknown("upsilon(" + render(lifted) + ") unknown: " + u.unknown_reason);
    cert.trace.insert(cert.trace.end(), u.derivation.begin(), u.derivation.end());

    const Rational a = make_rational(2, 5), b = make_rational(2, 3);
    const auto slopes = plf_slopes_on(*u.value, a, b);
    bool odd = false;
    json slope_list = json::array();
    for (const auto& sl : slopes) {
        slope_list.push_back(to_string(sl));
        if (sl.get_den() == 1 && mpz_odd_p(sl.get_num().get_mpz_t())) odd = true;
    }
    cert.witness = {{"difference_expression", render(lifted)},
                    {"upsilon", json_of(*u.value)},
                    {"slope_interval", {to_string(a), to_string(b)}},
                    {"slopes", slope_list}};
    cert.distinguished = odd;
    if (!odd)
        cert.reason = "all slopes on (2/5, 2/3) are even, compatible with a doubled local knot";
    else
        cert.trace.push_back(
            "an odd slope cannot occur for J#J, whose upsilon slopes are everywhere even");
    return cert;
}

Certificate topological(const LensSpace& space, long long l, long long n1, long long n2) {
    const long long p = space.p, q = space.q;
    if (l <= 0 || l >= p) throw FamilyConstraintViolated("need 0 < l < p");
    if (n1 < 1 || n2 < 1 || n1 >= n2) throw FamilyConstraintViolated("need 1 <= n1 < n2");
    if (std::gcd(l, n1) != 1 || std::gcd(l, n2) != 1)
        throw FamilyConstraintViolated("pattern is a knot only when gcd(l, n) = 1");

    Certificate cert;
    cert.engine = "topological";
    cert.method = "signature-jump-separation";
    cert.category = "topological";
    cert.inputs = {{"p", p}, {"q", q}, {"l", l}, {"n1", n1}, {"n2", n2}};

    const long long d = std::gcd(l, p);
    if (d == l) {
        cert.distinguished = false;
        cert.reason =
            "l divides p: the lift components are unknots with empty jump spectra, so the "
            "separation argument is vacuous for this class";
        return cert;
    }

    const long long r = l / d;
    const long long s1 = (p * n1 + l * q) / d;
    const long long s2 = (p * n2 + l * q) / d;
    const JumpSpectrum spec1 = torus_jumps(r, s1);
    const JumpSpectrum spec2 = torus_jumps(r, s2);
    const Rational first1 = spec1.entries.front().first;
    const Rational first2 = spec2.entries.front().first;
    const Rational formula1 = make_rational(d * d, l * (p * n1 + l * q));
    const Rational formula2 = make_rational(d * d, l * (p * n2 + l * q));
    if (first1 != formula1 || first2 != formula2)
        throw SelfCheckFailed("first jump does not match d^2/(l(pn+lq))");
    if (spec2.entries.front().second != -2)
        throw SelfCheckFailed("first jump of the larger lift is not -2");

    const Rational upper = std::min(first1, spec2.entries.at(1).first);
    const Rational t0 = (first2 + upper) / 2;
    const int sigma1 = sigma_at(spec1, t0);
    const int sigma2 = sigma_at(spec2, t0);
    if (sigma1 != 0 || sigma2 != -2)
        throw SelfCheckFailed("unexpected signatures at the witness point");

    // sigma1 + (p/d) sigma(J) = sigma2 with sigma(J) even
    const long long modulus = p / d;
    const long long rhs = sigma2 - sigma1;
    const bool solvable = (rhs % modulus == 0) && ((rhs / modulus) % 2 == 0);

    cert.witness = {{"lift_n1", "T(" + std::to_string(r) + "," + std::to_string(s1) + ")"},
                    {"lift_n2", "T(" + std::to_string(r) + "," + std::to_string(s2) + ")"},
                    {"first_jump_n1", to_string(first1)},
                    {"first_jump_n2", to_string(first2)},
                    {"witness_t0", to_string(t0)},
                    {"sigma_n1_at_t0", sigma1},
                    {"sigma_n2_at_t0", sigma2},
                    {"covering_degree", modulus},
                    {"local_term_equation",
                     std::to_string(modulus) + " * sigma(J) = " + std::to_string(rhs)},
                    {"solvable_with_even_sigma", solvable}};
    cert.trace.push_back("first jumps " + to_string(first2) + " < " + to_string(first1) +
                         "; witness t0 = " + to_string(t0) + " lies between them");
    cert.trace.push_back("equation " + std::to_string(modulus) +
                         " * sigma(J) = " + std::to_string(rhs) +
                         (solvable ? " admits an even solution" : " has no even solution"));
    cert.distinguished = !solvable;
    if (solvable) cert.reason = "the local correction term can absorb the signature difference";
    return cert;
}

bool replay(const json& certificate) {
    const std::string engine = certificate.at("engine").get<std::string>();
    const json& in = certificate.at("inputs");
    Certificate fresh;
    if (engine == "bing") {
        fresh = bing_tau(parse(in.at("j1").get<std::string>()),
                         parse(in.at("j2").get<std::string>()));
    } else if (engine == "rp3-null") {
        fresh = rp3_null(parse(in.at("j1").get<std::string>()),
                         parse(in.at("j2").get<std::string>()));
    } else if (engine == "lens-generic") {
        fresh = lens_generic(LensSpace(in.at("p").get<long long>(), in.at("q").get<long long>()),
                             in.at("l").get<long long>());
    } else if (engine == "lens-order2") {
        fresh = lens_order2(in.at("n").get<long long>(), in.at("q").get<long long>(),
                            parse(in.at("j").get<std::string>()));
    } else if (engine == "rp3-order2") {
        fresh = rp3_order2(parse(in.at("j").get<std::string>()));
    } else if (engine == "topological") {
        fresh = topological(LensSpace(in.at("p").get<long long>(), in.at("q").get<long long>()),
                            in.at("l").get<long long>(), in.at("n1").get<long long>(),
                            in.at("n2").get<long long>());
    } else {
        throw BadParameters("unknown engine in certificate: " + engine);
    }
    return fresh.to_json() == certificate;
}

}  // namespace concord
