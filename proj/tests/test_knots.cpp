#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <map>

#include "concord/knots.hpp"
#include "testutil.hpp"

using namespace concord;

namespace {

void torus_leaves(const KnotPtr& e, std::map<std::pair<long long, long long>, int>& out) {
    if (e->kind == KnotExpr::Kind::Torus) ++out[{e->r, e->s}];
    for (const auto& c : e->children) torus_leaves(c, out);
}

}  // namespace

TEST_CASE("parse basics") {
    CHECK(equal(parse("U"), unknot()));
    CHECK(equal(parse("T(2,3)"), torus(2, 3)));
    CHECK(equal(parse("Wh+(T(2,3))"), wh_plus(torus(2, 3))));
    CHECK(equal(parse(" 3 * Wh+( T(2,3) ) "),
                sum({wh_plus(torus(2, 3)), wh_plus(torus(2, 3)), wh_plus(torus(2, 3))})));
    CHECK(equal(parse("T(2,3) # T(2,5)"), sum({torus(2, 3), torus(2, 5)})));
    CHECK(equal(parse("-T(3,11)"), neg(torus(3, 11))));
    CHECK(equal(parse("rev(T(2,3))"), rev(torus(2, 3))));
    CHECK(equal(parse("cable(2,7; 5*Wh-(-T(2,3)))"),
                normalize(cable(2, 7, sum({wh_minus(neg(torus(2, 3))), wh_minus(neg(torus(2, 3))),
                                           wh_minus(neg(torus(2, 3))), wh_minus(neg(torus(2, 3))),
                                           wh_minus(neg(torus(2, 3)))})))));
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse("T(2,4)"), ParameterError);
    CHECK_THROWS_AS(parse("cable(2,4; T(2,3))"), ParameterError);
    CHECK_THROWS_AS(parse("T(2,"), SyntaxError);
    CHECK_THROWS_AS(parse("T(2,3) #"), SyntaxError);
    CHECK_THROWS_AS(parse("Wh*(U)"), SyntaxError);
    CHECK_THROWS_AS(parse("T(2,3) junk"), SyntaxError);
    CHECK_THROWS_AS(parse(""), SyntaxError);
    try {
        parse("T(2,3) @");
    } catch (const SyntaxError& e) {
        CHECK(e.position == 7);
    }
}

TEST_CASE("negative torus parameters become mirrors") {
    CHECK(equal(parse("T(2,-3)"), neg(torus(2, 3))));
    CHECK(equal(parse("T(-2,-3)"), torus(2, 3)));
    CHECK(equal(parse("T(1,7)"), unknot()));
    CHECK(equal(parse("T(7,1)"), unknot()));
    CHECK(equal(parse("T(0,1)"), unknot()));
}

TEST_CASE("normalize rules") {
    CHECK(equal(normalize(neg(neg(torus(2, 3)))), torus(2, 3)));
    CHECK(equal(normalize(rev(rev(torus(2, 3)))), torus(2, 3)));
    CHECK(equal(normalize(wh_minus(neg(torus(2, 3)))), neg(wh_plus(torus(2, 3)))));
    CHECK(equal(normalize(torus(1, 7)), unknot()));
    CHECK(equal(normalize(sum({torus(2, 3), unknot(), torus(2, 3)})),
                sum({torus(2, 3), torus(2, 3)})));
    CHECK(equal(normalize(sum({sum({torus(2, 3), torus(2, 5)}), torus(2, 3)})),
                sum({torus(2, 3), torus(2, 3), torus(2, 5)})));
    CHECK(equal(normalize(cable(3, 11, unknot())), torus(3, 11)));
    CHECK(equal(normalize(cable(1, 5, torus(2, 3))), torus(2, 3)));
    CHECK(equal(normalize(rev(neg(torus(2, 3)))), neg(rev(torus(2, 3)))));
    CHECK(equal(normalize(sum({unknot(), unknot()})), unknot()));
}

TEST_CASE("render examples") {
    CHECK(render(wh_plus(torus(2, 3))) == "Wh+(T(2,3))");
    CHECK(render(normalize(sum({torus(2, 3), torus(2, 3)}))) == "2*T(2,3)");
    CHECK(render(neg(torus(3, 11))) == "-T(3,11)");
    CHECK(render(normalize(parse("cable(3,11; 2*Wh+(T(2,3))) # -T(3,11)"))) ==
          "cable(3,11; 2*Wh+(T(2,3))) # -T(3,11)");
}

TEST_CASE("parse after render is the identity on normal forms") {
    testing::Rng rng(20240818);
    for (int i = 0; i < 500; ++i) {
        const KnotPtr e = normalize(testing::random_expr(rng, 6));
        const KnotPtr back = parse(render(e));
        CHECK(equal(back, e));
    }
}

TEST_CASE("normalize is idempotent") {
    testing::Rng rng(4242);
    for (int i = 0; i < 500; ++i) {
        const KnotPtr e = testing::random_expr(rng, 6);
        const KnotPtr n1 = normalize(e);
        CHECK(equal(normalize(n1), n1));
    }
}

TEST_CASE("normalize preserves the torus leaf multiset") {
    // except through the Wh- rewrite (which mirrors a subtree) and the
    // cable-of-unknot rule (which creates the torus leaf it names)
    testing::Rng rng(5);
    int checked = 0;
    for (int i = 0; i < 600; ++i) {
        KnotPtr e = testing::random_expr(rng, 5);
        bool excluded = false;
        std::function<void(const KnotPtr&)> scan = [&](const KnotPtr& x) {
            if (x->kind == KnotExpr::Kind::WhMinus) excluded = true;
            if (x->kind == KnotExpr::Kind::Cable &&
                normalize(x->children[0])->kind == KnotExpr::Kind::Unknot)
                excluded = true;
            for (const auto& c : x->children) scan(c);
        };
        scan(e);
        if (excluded) continue;
        std::map<std::pair<long long, long long>, int> before, after;
        torus_leaves(e, before);
        torus_leaves(normalize(e), after);
        CHECK(before == after);
        ++checked;
    }
    CHECK(checked > 100);
}
