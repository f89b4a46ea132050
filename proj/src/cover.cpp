#include "concord/cover.hpp"

#include <numeric>

namespace concord {

LensSpace::LensSpace(long long p_, long long q_) : p(p_), q(q_) {
    if (p <= 1) throw BadParameters("lens space needs p > 1");
    if (q < 1 || q >= p || std::gcd(p, q) != 1)
        throw BadParameters("lens space needs 1 <= q < p coprime to p");
}

long long lift_component_count(long long l, long long p) {
    if (l < 1 || p < 1) throw BadParameters("lift_component_count needs positive arguments");
    return std::gcd(l, p);
}

long long cycle_power_component_count(long long l, long long p) {
    if (l < 1 || p < 1) throw BadParameters("cycle_power_component_count needs positive arguments");
    // sigma(i) = i+1 mod l; count the cycles of sigma^p by walking orbits
    std::vector<bool> seen(static_cast<std::size_t>(l), false);
    long long cycles = 0;
    for (long long start = 0; start < l; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        ++cycles;
        long long at = start;
        while (!seen[static_cast<std::size_t>(at)]) {
            seen[static_cast<std::size_t>(at)] = true;
            at = (at + p) % l;
        }
    }
    return cycles;
}

PatternKnot::PatternKnot(LensSpace space_, long long strands_, KnotPtr companion_, Family family_,
                         long long n_)
    : space(space_), strands(strands_), companion(std::move(companion_)), family(family_), n(n_) {
    if (strands < 1) throw BadParameters("pattern needs at least one strand");
    permutation.resize(static_cast<std::size_t>(strands));
    for (long long i = 0; i < strands; ++i)
        permutation[static_cast<std::size_t>(i)] = (i + 1) % strands;
    // a knot (rather than link) pattern must induce a single l-cycle
    long long orbit = 0, at = 0;
    do {
        at = permutation[static_cast<std::size_t>(at)];
        ++orbit;
    } while (at != 0);
    if (orbit != strands) throw SelfCheckFailed("strand permutation is not a single cycle");
}

long long TorusLinkDesc::component_count() const {
    return std::gcd(l < 0 ? -l : l, m < 0 ? -m : m);
}

namespace {

KnotPtr repeated_sum(long long count, const KnotPtr& j) {
    if (count <= 0) return unknot();
    std::vector<KnotPtr> parts(static_cast<std::size_t>(count), j);
    return normalize(sum(std::move(parts)));
}

}  // namespace

LiftDescription lift(const PatternKnot& k) {
    const long long p = k.space.p, q = k.space.q, l = k.strands;
    LiftDescription out;
    switch (k.family) {
        case Family::Torus: {
            if (k.n < 1 || std::gcd(l, k.n) != 1)
                throw FamilyConstraintViolated("torus family needs n >= 1 coprime to the strand count");
            const long long d = std::gcd(l, p);
            const long long m = p * k.n + l * q;
            out.component_count = d;
            out.degree = p / d;
            out.full_link = TorusLinkDesc{l, m};
            const KnotPtr component = normalize(l / d == 1 ? unknot() : torus(l / d, m / d));
            out.components.assign(static_cast<std::size_t>(d), component);
            out.notes.push_back("full covering link T(" + std::to_string(l) + "," +
                                std::to_string(m) + "): the surgery twist box contributes the +" +
                                std::to_string(l) + "*q term to the meridian count");
            out.notes.push_back("each component is T(" + std::to_string(l / d) + "," +
                                std::to_string(m / d) + ") with covering degree " +
                                std::to_string(p / d));
            break;
        }
        case Family::Generic: {
            if (l < 1 || l >= p)
                throw FamilyConstraintViolated("generic family needs 0 < strand count < p");
            const long long d = std::gcd(l, p);
            const long long m = p + l * q;
            out.component_count = d;
            out.degree = p / d;
            const KnotPtr inner = repeated_sum(p, k.companion);
            const KnotPtr component =
                normalize(l / d == 1 ? inner : cable(l / d, m / d, inner));
            out.components.assign(static_cast<std::size_t>(d), component);
            out.notes.push_back("component is the (" + std::to_string(l / d) + "," +
                                std::to_string(m / d) + ") cable of " + std::to_string(p) +
                                " copies of the companion");
            break;
        }
        case Family::Order2: {
            if (p != 2 * k.n || k.n <= 1)
                throw FamilyConstraintViolated("order-2 family lives in L(2n,q) with n > 1");
            if (l != k.n)
                throw FamilyConstraintViolated("order-2 family pattern uses n strands");
            out.component_count = std::gcd(l, p);  // = n
            out.degree = p / out.component_count;  // = 2
            out.components.assign(static_cast<std::size_t>(out.component_count), unknot());
            out.notes.push_back("components are T(1," + std::to_string(2 + q) +
                                ") torus knots, hence unknotted; the W-boxes meet each component "
                                "in 0 or 2 points and do not knot it");
            break;
        }
        case Family::RP3Null: {
            if (p != 2 || q != 1)
                throw FamilyConstraintViolated("this family lives in L(2,1)");
            out.component_count = 2;
            out.degree = 1;
            const KnotPtr j = k.companion;
            const KnotPtr component =
                normalize(sum({j, j, rev(j), rev(j)}));
            out.components.assign(2, component);
            out.notes.push_back(
                "after the branched double cover over the unknotted first component, each "
                "component is 2J # 2J^r");
            break;
        }
        case Family::RP3Order2: {
            if (p != 2 || q != 1)
                throw FamilyConstraintViolated("this family lives in L(2,1)");
            out.component_count = 1;
            out.degree = 2;
            const KnotPtr j = k.companion;
            out.components.push_back(normalize(cable(3, 11, sum({j, j}))));
            out.notes.push_back("the lift is the (3,11) cable of J # J");
            break;
        }
    }
    return out;
}

LiftDescription lift_of_sum(const LiftDescription& desc, const KnotPtr& j) {
    LiftDescription out = desc;
    out.full_link.reset();
    for (auto& component : out.components) {
        std::vector<KnotPtr> parts{component};
        for (long long i = 0; i < desc.degree; ++i) parts.push_back(j);
        component = normalize(sum(std::move(parts)));
    }
    out.notes.push_back("tied a local knot into the base: each component gains degree-many copies");
    return out;
}

}  // namespace concord
