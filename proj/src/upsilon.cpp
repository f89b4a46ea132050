#include "concord/upsilon.hpp"

#include <algorithm>

namespace concord {

namespace {

void merge(std::vector<std::string>& into, const std::vector<std::string>& from) {
    for (const auto& line : from)
        if (std::find(into.begin(), into.end(), line) == into.end()) into.push_back(line);
}

KnotPtr whitehead_trefoil() {
    return wh_plus(torus(2, 3));
}

void check_upsilon_invariants(const PLFunction& f, const KnotPtr& e) {
    const Rational zero(0), two(2);
    if (f(zero) != 0 || f(two) != 0)
        throw SelfCheckFailed("upsilon endpoints nonzero for " + render(e));
    // symmetry about t = 1: reflected breakpoint list must reproduce f
    std::vector<PLFunction::Point> reflected;
    const auto& pts = f.breakpoints();
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) reflected.push_back({two - it->t, it->value});
    if (PLFunction::from_points(std::move(reflected)) != f)
        throw SelfCheckFailed("upsilon symmetry check failed for " + render(e));
}

}  // namespace

Staircase staircase_from_alexander(const LaurentPoly& p) {
    if (p.is_zero() || p.term_count() % 2 == 0)
        throw NotStaircaseForm("need an odd number of terms, got " +
                               std::to_string(p.term_count()));
    if (p.min_exponent() != -p.max_exponent() || !p.is_palindromic())
        throw NotStaircaseForm("exponents are not symmetric around 0 in " + p.to_string());

    Staircase sc;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) sc.alphas.push_back(it->first);
    for (std::size_t k = 0; k < sc.alphas.size(); ++k) {
        const Integer expected = (k % 2 == 0) ? 1 : -1;
        if (p.coeff(sc.alphas[k]) != expected)
            throw NotStaircaseForm("coefficients are not alternating +-1 in " + p.to_string());
    }

    sc.ms.resize(sc.alphas.size());
    sc.ms[0] = 0;
    for (std::size_t i = 0; 2 * i + 1 < sc.alphas.size(); ++i) {
        sc.ms[2 * i + 1] = sc.ms[2 * i] - 1;
        if (2 * i + 2 < sc.alphas.size())
            sc.ms[2 * i + 2] = sc.ms[2 * i + 1] + 1 + 2 * (sc.alphas[2 * i + 1] - sc.alphas[2 * i]);
    }
    return sc;
}

PLFunction upsilon_from_staircase(const Staircase& sc) {
    std::vector<PLFunction> lines;
    for (std::size_t i = 0; 2 * i < sc.alphas.size(); ++i)
        lines.push_back(PLFunction::line(Rational(to_integer(-sc.alphas[2 * i])), Rational(to_integer(sc.ms[2 * i]))));
    return plf_max(lines);
}

LSpaceCert lspace_certify(const KnotPtr& input) {
    using Kind = KnotExpr::Kind;
    const KnotPtr e = normalize(input);
    LSpaceCert cert;
    cert.expression = e;
    if (e->kind == Kind::Torus) {
        cert.proven = true;
        cert.rule = "torus";
        return cert;
    }
    if (e->kind == Kind::Cable) {
        LSpaceCert companion = lspace_certify(e->children[0]);
        if (!companion.proven) {
            cert.reason = "cable companion not certified: " + companion.reason;
            return cert;
        }
        auto g = genus3(e->children[0]);
        if (!g.ok() || !g.value->exact) {
            cert.reason = "cable companion genus not known exactly";
            return cert;
        }
        if (e->s >= e->r * (2 * g.value->value - 1)) {
            cert.proven = true;
            cert.rule = "cable";
            return cert;
        }
        cert.reason = "cable parameter " + std::to_string(e->s) + " below the bound " +
                      std::to_string(e->r * (2 * g.value->value - 1));
        return cert;
    }
    cert.reason = "no L-space rule for " + render(e);
    return cert;
}

KnotPtr nu_plus_rewrite(const KnotPtr& e) {
    using Kind = KnotExpr::Kind;
    const KnotPtr d = whitehead_trefoil();
    if (e->kind == Kind::Sum) {
        // collapse pairs of Wh+(T(2,3)) into T(2,5)
        std::size_t doubles = 0;
        std::vector<KnotPtr> rest;
        for (const auto& c : e->children) {
            if (equal(c, d))
                ++doubles;
            else
                rest.push_back(nu_plus_rewrite(c));
        }
        if (doubles < 2) {
            for (std::size_t i = 0; i < doubles; ++i) rest.push_back(d);
            return normalize(sum(std::move(rest)));
        }
        for (std::size_t i = 0; i < doubles / 2; ++i) rest.push_back(torus(2, 5));
        if (doubles % 2 == 1) rest.push_back(d);
        return normalize(sum(std::move(rest)));
    }
    if (e->kind == Kind::Cable) {
        KnotPtr companion = nu_plus_rewrite(e->children[0]);
        if (equal(companion, e->children[0])) return e;
        return normalize(cable(e->r, e->s, companion));
    }
    if (e->kind == Kind::Neg) {
        KnotPtr c = nu_plus_rewrite(e->children[0]);
        if (equal(c, e->children[0])) return e;
        return normalize(neg(c));
    }
    return e;
}

Eval<PLFunction> upsilon(const KnotPtr& input) {
    using Kind = KnotExpr::Kind;
    const KnotPtr e = nu_plus_rewrite(normalize(input));
    std::vector<std::string> steps;
    if (!equal(e, normalize(input))) steps.push_back("nu-plus-rewrite: " + render(normalize(input)) + " => " + render(e));

    switch (e->kind) {
        case Kind::Unknot:
            steps.push_back("upsilon-unknot: U => 0");
            return Eval<PLFunction>::known(PLFunction(), std::move(steps));
        case Kind::Sum: {
            PLFunction total;
            for (const auto& c : e->children) {
                auto sub = upsilon(c);
                if (!sub.ok())
                    return Eval<PLFunction>::unknown("no upsilon value for summand " + render(c) +
                                                     ": " + sub.unknown_reason);
                merge(steps, sub.derivation);
                total = plf_add(total, *sub.value);
            }
            steps.push_back("upsilon-additive: " + render(e));
            return Eval<PLFunction>::known(std::move(total), std::move(steps));
        }
        case Kind::Neg: {
            auto sub = upsilon(e->children[0]);
            if (!sub.ok()) return sub;
            merge(steps, sub.derivation);
            steps.push_back("upsilon-mirror: " + render(e));
            return Eval<PLFunction>::known(plf_negate(*sub.value), std::move(steps));
        }
        case Kind::Torus:
        case Kind::Cable: {
            LSpaceCert cert = lspace_certify(e);
            if (!cert.proven)
                return Eval<PLFunction>::unknown("not an L-space knot by the certification rules: " +
                                                 cert.reason);
            auto d = alexander(e);
            const Staircase sc = staircase_from_alexander(d.value->symmetrize());
            PLFunction f = upsilon_from_staircase(sc);
            check_upsilon_invariants(f, e);
            merge(steps, d.derivation);
            steps.push_back("lspace-certified (" + cert.rule + "): " + render(e));
            steps.push_back("upsilon-staircase: " + render(e) + " => " + f.to_string());
            return Eval<PLFunction>::known(std::move(f), std::move(steps));
        }
        default:
            return Eval<PLFunction>::unknown("no upsilon rule for " + render(e));
    }
}

}  // namespace concord
