#include "concord/classical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace concord {

namespace {

// t^k - 1
LaurentPoly power_minus_one(long long k) {
    return LaurentPoly::term(k, 1) - LaurentPoly::one();
}

void note(std::vector<std::string>& steps, const std::string& rule, const KnotPtr& e,
          const std::string& value) {
    const std::string line = rule + ": " + render(e) + " => " + value;
    if (std::find(steps.begin(), steps.end(), line) == steps.end()) steps.push_back(line);
}

void merge(std::vector<std::string>& into, const std::vector<std::string>& from) {
    for (const auto& line : from)
        if (std::find(into.begin(), into.end(), line) == into.end()) into.push_back(line);
}

// Per-call memo for shared subtrees (sums of many copies share one node).
// Confined to a single top-level evaluation; no global state.
struct Caches {
    std::map<const KnotExpr*, Eval<LaurentPoly>> alex;
    std::map<const KnotExpr*, Eval<Genus>> genus;
    std::map<const KnotExpr*, Eval<long long>> tau;
};

Eval<LaurentPoly> alexander_impl(const KnotPtr& e, Caches& caches);
Eval<Genus> genus3_impl(const KnotPtr& e, Caches& caches);
Eval<long long> tau_impl(const KnotPtr& e, Caches& caches);

bool nontrivial_impl(const KnotPtr& e, Caches& caches, std::string* how) {
    auto t = tau_impl(e, caches);
    if (t.ok() && *t.value != 0) {
        if (how) *how = "tau = " + std::to_string(*t.value);
        return true;
    }
    auto g = genus3_impl(e, caches);
    if (g.ok() && g.value->exact && g.value->value >= 1) {
        if (how) *how = "g3 = " + std::to_string(g.value->value);
        return true;
    }
    auto d = alexander_impl(e, caches);
    if (d.ok() && !d.value->is_one()) {
        if (how) *how = "Alexander polynomial " + d.value->to_string();
        return true;
    }
    return false;
}

Eval<LaurentPoly> alexander_impl(const KnotPtr& e, Caches& caches) {
    using Kind = KnotExpr::Kind;
    if (auto hit = caches.alex.find(e.get()); hit != caches.alex.end()) return hit->second;
    std::vector<std::string> steps;
    Eval<LaurentPoly> result;

    switch (e->kind) {
        case Kind::Unknot:
            note(steps, "alex-unknot", e, "1");
            result = Eval<LaurentPoly>::known(LaurentPoly::one(), std::move(steps));
            break;
        case Kind::Torus: {
            LaurentPoly d = torus_alexander(e->r, e->s);
            note(steps, "alex-torus", e, d.to_string());
            result = Eval<LaurentPoly>::known(std::move(d), std::move(steps));
            break;
        }
        case Kind::Sum: {
            LaurentPoly prod = LaurentPoly::one();
            for (const auto& c : e->children) {
                auto sub = alexander_impl(c, caches);
                merge(steps, sub.derivation);
                prod = prod * *sub.value;
            }
            prod = prod.canonical_unit();
            note(steps, "alex-sum", e, prod.to_string());
            result = Eval<LaurentPoly>::known(std::move(prod), std::move(steps));
            break;
        }
        case Kind::Neg:
        case Kind::Rev: {
            auto sub = alexander_impl(e->children[0], caches);
            merge(steps, sub.derivation);
            note(steps, e->kind == Kind::Neg ? "alex-mirror" : "alex-reverse", e,
                 sub.value->to_string());
            result = Eval<LaurentPoly>::known(std::move(*sub.value), std::move(steps));
            break;
        }
        case Kind::WhPlus:
            note(steps, "alex-whitehead", e, "1");
            result = Eval<LaurentPoly>::known(LaurentPoly::one(), std::move(steps));
            break;
        case Kind::Cable: {
            // satellite formula: companion polynomial at t^r times the torus pattern
            auto sub = alexander_impl(e->children[0], caches);
            merge(steps, sub.derivation);
            const long long s_abs = e->s < 0 ? -e->s : e->s;
            LaurentPoly d =
                (torus_alexander(e->r, s_abs) * sub.value->substituted_power(e->r)).canonical_unit();
            note(steps, "alex-cable", e, d.to_string());
            result = Eval<LaurentPoly>::known(std::move(d), std::move(steps));
            break;
        }
        case Kind::WhMinus:
            throw SelfCheckFailed("alexander: Wh- should have been normalized away");
    }
    caches.alex.emplace(e.get(), result);
    return result;
}

Eval<Genus> genus3_impl(const KnotPtr& e, Caches& caches) {
    using Kind = KnotExpr::Kind;
    if (auto hit = caches.genus.find(e.get()); hit != caches.genus.end()) return hit->second;
    std::vector<std::string> steps;
    Eval<Genus> result;

    switch (e->kind) {
        case Kind::Unknot:
            note(steps, "genus-unknot", e, "0");
            result = Eval<Genus>::known({0, true}, std::move(steps));
            break;
        case Kind::Torus: {
            const long long g = (e->r - 1) * (e->s - 1) / 2;
            note(steps, "genus-torus", e, std::to_string(g));
            result = Eval<Genus>::known({g, true}, std::move(steps));
            break;
        }
        case Kind::Sum: {
            long long total = 0;
            bool exact = true;
            bool unknown = false;
            for (const auto& c : e->children) {
                auto sub = genus3_impl(c, caches);
                if (!sub.ok()) {
                    result = Eval<Genus>::unknown("no genus value for summand " + render(c) +
                                                  ": " + sub.unknown_reason);
                    unknown = true;
                    break;
                }
                merge(steps, sub.derivation);
                total += sub.value->value;
                exact = exact && sub.value->exact;
            }
            if (!unknown) {
                note(steps, "genus-additive", e,
                     std::to_string(total) + (exact ? "" : " (upper bound)"));
                result = Eval<Genus>::known({total, exact}, std::move(steps));
            }
            break;
        }
        case Kind::Neg:
        case Kind::Rev: {
            auto sub = genus3_impl(e->children[0], caches);
            if (!sub.ok()) {
                result = sub;
                break;
            }
            merge(steps, sub.derivation);
            note(steps, e->kind == Kind::Neg ? "genus-mirror" : "genus-reverse", e,
                 std::to_string(sub.value->value) + (sub.value->exact ? "" : " (upper bound)"));
            result = Eval<Genus>::known(*sub.value, std::move(steps));
            break;
        }
        case Kind::WhPlus: {
            // the doubled pattern always spans a genus-1 surface; exact once
            // tau = 1 meets the bound from below
            auto t = tau_impl(e->children[0], caches);
            if (t.ok() && *t.value > 0) {
                merge(steps, t.derivation);
                note(steps, "genus-whitehead-tau", e, "1");
                result = Eval<Genus>::known({1, true}, std::move(steps));
            } else {
                note(steps, "genus-whitehead-bound", e, "1 (upper bound)");
                result = Eval<Genus>::known({1, false}, std::move(steps));
            }
            break;
        }
        case Kind::Cable:
            result = Eval<Genus>::unknown("no genus rule for cables");
            break;
        case Kind::WhMinus:
            throw SelfCheckFailed("genus3: Wh- should have been normalized away");
    }
    caches.genus.emplace(e.get(), result);
    return result;
}

Eval<long long> tau_impl(const KnotPtr& e, Caches& caches) {
    using Kind = KnotExpr::Kind;
    if (auto hit = caches.tau.find(e.get()); hit != caches.tau.end()) return hit->second;
    std::vector<std::string> steps;
    Eval<long long> result;

    switch (e->kind) {
        case Kind::Unknot:
            note(steps, "tau-unknot", e, "0");
            result = Eval<long long>::known(0, std::move(steps));
            break;
        case Kind::Torus: {
            const long long v = (e->r - 1) * (e->s - 1) / 2;
            note(steps, "tau-torus", e, std::to_string(v));
            result = Eval<long long>::known(v, std::move(steps));
            break;
        }
        case Kind::Sum: {
            long long total = 0;
            bool unknown = false;
            for (const auto& c : e->children) {
                auto sub = tau_impl(c, caches);
                if (!sub.ok()) {
                    result = Eval<long long>::unknown("no tau value for summand " + render(c) +
                                                      ": " + sub.unknown_reason);
                    unknown = true;
                    break;
                }
                merge(steps, sub.derivation);
                total += *sub.value;
            }
            if (!unknown) {
                note(steps, "tau-additive", e, std::to_string(total));
                result = Eval<long long>::known(total, std::move(steps));
            }
            break;
        }
        case Kind::Neg: {
            auto sub = tau_impl(e->children[0], caches);
            if (!sub.ok()) {
                result = sub;
                break;
            }
            merge(steps, sub.derivation);
            note(steps, "tau-mirror", e, std::to_string(-*sub.value));
            result = Eval<long long>::known(-*sub.value, std::move(steps));
            break;
        }
        case Kind::Rev: {
            auto sub = tau_impl(e->children[0], caches);
            if (!sub.ok()) {
                result = sub;
                break;
            }
            merge(steps, sub.derivation);
            note(steps, "tau-reverse", e, std::to_string(*sub.value));
            result = Eval<long long>::known(*sub.value, std::move(steps));
            break;
        }
        case Kind::WhPlus: {
            auto sub = tau_impl(e->children[0], caches);
            if (!sub.ok()) {
                result = Eval<long long>::unknown("tau of the companion of " + render(e) +
                                                  " is unknown: " + sub.unknown_reason);
                break;
            }
            merge(steps, sub.derivation);
            const long long v = *sub.value > 0 ? 1 : 0;
            note(steps, "tau-hedden", e, std::to_string(v));
            result = Eval<long long>::known(v, std::move(steps));
            break;
        }
        case Kind::Cable: {
            // r >= 2 after normalize; needs a nontrivial companion with g3
            // exactly tau or -tau
            const KnotPtr& j = e->children[0];
            auto tj = tau_impl(j, caches);
            if (!tj.ok()) {
                result =
                    Eval<long long>::unknown("cable companion tau unknown: " + tj.unknown_reason);
                break;
            }
            auto gj = genus3_impl(j, caches);
            if (!gj.ok()) {
                result = Eval<long long>::unknown("cable companion genus unknown: " +
                                                  gj.unknown_reason);
                break;
            }
            if (!gj.value->exact) {
                result = Eval<long long>::unknown(
                    "cable companion genus is only an upper bound, need an exact value");
                break;
            }
            std::string how;
            if (!nontrivial_impl(j, caches, &how)) {
                result = Eval<long long>::unknown("cable companion not certified nontrivial");
                break;
            }
            merge(steps, tj.derivation);
            merge(steps, gj.derivation);
            const long long r = e->r, s = e->s;
            if (gj.value->value == *tj.value) {
                const long long v = r * *tj.value + (r - 1) * (s - 1) / 2;
                note(steps, "tau-van-cott-1", e, std::to_string(v));
                result = Eval<long long>::known(v, std::move(steps));
            } else if (gj.value->value == -*tj.value) {
                const long long v = r * *tj.value + (r - 1) * (s + 1) / 2;
                note(steps, "tau-van-cott-2", e, std::to_string(v));
                result = Eval<long long>::known(v, std::move(steps));
            } else {
                result = Eval<long long>::unknown(
                    "cable companion has g3 = " + std::to_string(gj.value->value) +
                    " matching neither tau nor -tau");
            }
            break;
        }
        case Kind::WhMinus:
            throw SelfCheckFailed("tau: Wh- should have been normalized away");
    }
    caches.tau.emplace(e.get(), result);
    return result;
}

}  // namespace

LaurentPoly torus_alexander(long long r, long long s) {
    if (r < 1 || s < 1 || std::gcd(r, s) != 1)
        throw BadParameters("torus_alexander requires coprime positive parameters");
    if (r == 1 || s == 1) return LaurentPoly::one();
    const LaurentPoly num = power_minus_one(r * s) * power_minus_one(1);
    const LaurentPoly den = power_minus_one(r) * power_minus_one(s);
    return poly_divide_exact(num, den).canonical_unit();
}

Eval<LaurentPoly> alexander(const KnotPtr& e) {
    Caches caches;
    return alexander_impl(normalize(e), caches);
}

Eval<Genus> genus3(const KnotPtr& e) {
    Caches caches;
    return genus3_impl(normalize(e), caches);
}

Eval<long long> tau(const KnotPtr& e) {
    Caches caches;
    return tau_impl(normalize(e), caches);
}

bool certified_nontrivial(const KnotPtr& e, std::string* how) {
    Caches caches;
    return nontrivial_impl(normalize(e), caches, how);
}

}  // namespace concord
