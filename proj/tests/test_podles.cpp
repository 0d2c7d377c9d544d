#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qgw/podles.hpp"

using namespace qgw;
using namespace qgw::suq2_gen;

namespace {

const Suq2& ctx() {
    static Suq2 c;
    return c;
}

NCPoly W(std::initializer_list<Gen> gens) { return NCPoly::word(word_of(gens)); }
ScalarQ qp(long e) { return ScalarQ::q_power(e); }

} // namespace

TEST_CASE("torus projection decomposes by weight") {
    auto pa = torus_project(ctx(), W({a}));
    REQUIRE(pa.size() == 1);
    CHECK(pa.at(1) == W({a}));

    auto p1 = torus_project(ctx(), NCPoly::one());
    REQUIRE(p1.size() == 1);
    CHECK(p1.at(0) == NCPoly::one());

    auto mixed = torus_project(ctx(), W({g, gs}) + W({a}));
    REQUIRE(mixed.size() == 2);
    CHECK(mixed.at(0) == W({g, gs}));
    CHECK(mixed.at(1) == W({a}));

    // components sum to the input and are fixed points
    NCPoly p = W({a, g}) + qp(2) * W({as, gs, gs}) + NCPoly::one();
    NCPoly sum;
    for (const auto& [w, comp] : torus_project(ctx(), p)) {
        sum += comp;
        auto again = torus_project(ctx(), comp);
        REQUIRE(again.size() == 1);
        CHECK(again.at(w) == comp);
    }
    CHECK(sum == ctx().normalize(p));
}

TEST_CASE("the exponent weight formula matches (id (x) pi) Delta") {
    for (const auto& w : suq2_pbw_words(4)) {
        long weight = Suq2::word_weight(w);
        // collect (id (x) pi) Delta(w) as z-exponent -> left-leg polynomial
        std::map<long, NCPoly> img;
        TensorPoly<2> dw = ctx().comultiply(NCPoly::word(w));
        for (const auto& [k, c] : dw.terms())
            for (const auto& [e, z] : ctx().pi(NCPoly::word(k[1])))
                img[e] += (c * z) * NCPoly::word(k[0]);
        for (auto it = img.begin(); it != img.end();)
            it = it->second.is_zero() ? img.erase(it) : std::next(it);
        REQUIRE(img.size() == 1);
        CHECK(img.begin()->first == weight);
        CHECK(img.begin()->second == NCPoly::word(w));
    }
}

TEST_CASE("weighted element classification") {
    WeightedElement wa = WeightedElement::classify(ctx(), W({a}));
    CHECK(wa.weight == 1);
    WeightedElement mixed = WeightedElement::classify(ctx(), W({g, gs}) + W({a}));
    CHECK(mixed.is_mixed());
    // as a = 1 - g gs is homogeneous of weight 0 after normalization
    WeightedElement folded = WeightedElement::classify(ctx(), W({as, a}));
    CHECK(folded.weight == 0);
    CHECK(folded.element == NCPoly::one() - W({g, gs}));
}

TEST_CASE("line bundle membership") {
    CHECK(in_line_bundle(ctx(), W({g, gs}), 0));
    CHECK_FALSE(in_line_bundle(ctx(), W({a}), 0));
    CHECK(in_line_bundle(ctx(), W({a, gs}), 0));
    CHECK(in_line_bundle(ctx(), NCPoly(), 5)); // zero lies in every bundle
}

TEST_CASE("bundle products land in the expected bundle") {
    CHECK(bundle_product_check(ctx(), 1, -1, 4));
    CHECK(bundle_product_check(ctx(), 0, 0, 4));
    CHECK(bundle_product_check(ctx(), 1, 1, 4));
}

TEST_CASE("finite generation of the degree-one bundles") {
    CHECK(bundle_generators_check(ctx(), 0, 4));
    CHECK(bundle_generators_check(ctx(), 1, 4));
    CHECK(bundle_generators_check(ctx(), -1, 4));

    // worked instance: g g gs = (g g gs as) a + (g g gs gs) g
    NCPoly x = W({g, g, gs});
    NCPoly c1 = ctx().mul(x, W({as})), c2 = ctx().mul(x, W({gs}));
    CHECK(in_line_bundle(ctx(), c1, 0));
    CHECK(in_line_bundle(ctx(), c2, 0));
    CHECK(ctx().normalize(c1 * W({a}) + c2 * W({g})) == x);

    // wrong generator pair for k = -1
    CHECK_FALSE(bundle_generators_check(ctx(), -1, 4, bundle_generator_pairs(1)));
}

TEST_CASE("projective idempotents") {
    for (long k : {-1L, 1L}) {
        auto p = projective_idempotent(ctx(), k);
        // p^2 = p
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                NCPoly sq;
                for (std::size_t x = 0; x < 2; ++x) sq += ctx().mul(p[i][x], p[x][j]);
                CHECK(ctx().normalize(sq) == p[i][j]);
                // p* = p and weight-0 entries
                CHECK(ctx().star(p[j][i]) == p[i][j]);
                CHECK(in_line_bundle(ctx(), p[i][j], 0));
            }
    }
    auto p = projective_idempotent(ctx(), -1);
    CHECK(p[0][0] == ctx().normalize(W({a, as})));
    CHECK(p[0][1] == ctx().normalize(W({a, gs})));
    CHECK(p[1][0] == qp(1) * W({as, g})); // g as in normal form
    CHECK(p[1][1] == W({g, gs}));

    // the q-trace witness: a a* + g gs = 1 + (1-q^2) g gs, which is not 1
    NCPoly trace = ctx().normalize(W({a, as}) + W({g, gs}));
    CHECK(trace == NCPoly::one() + (ScalarQ(1) - qp(2)) * W({g, gs}));
    CHECK(trace != NCPoly::one());

    CHECK_THROWS_AS(projective_idempotent(ctx(), 0), DomainError);
}

TEST_CASE("adjoint action") {
    CHECK(adjoint_action(ctx(), W({a}), NCPoly::one()) == NCPoly::one());
    CHECK(adjoint_action(ctx(), W({g}), NCPoly::one()) == NCPoly());
    NCPoly expected = ctx().normalize(W({a, g, gs, as}) + qp(2) * W({gs, g, gs, g}));
    CHECK(adjoint_action(ctx(), W({a}), W({g, gs})) == expected);

    auto corpus = weight_words(0, 3);
    for (Gen h = 0; h < 4; ++h)
        for (Gen h2 = 0; h2 < 4; ++h2)
            for (const auto& xw : corpus) {
                NCPoly x = NCPoly::word(xw);
                // module action law and unit law
                CHECK(adjoint_action(ctx(), ctx().mul(NCPoly::generator(h), NCPoly::generator(h2)), x) ==
                      adjoint_action(ctx(), NCPoly::generator(h), adjoint_action(ctx(), NCPoly::generator(h2), x)));
                CHECK(adjoint_action(ctx(), NCPoly::one(), x) == x);
                // weight preservation on the coinvariant subalgebra
                CHECK(in_line_bundle(ctx(), adjoint_action(ctx(), NCPoly::generator(h), x), 0));
            }
}

TEST_CASE("Yetter-Drinfeld compatibility of adjoint action and coaction") {
    // f = a, m = 1: both sides are 1 (x) 1
    TensorPoly<2> lhs = ctx().comultiply(adjoint_action(ctx(), W({a}), NCPoly::one()));
    CHECK(lhs == TensorPoly<2>::unit());

    CHECK(yd_compatibility_check(ctx(), 3));
}

TEST_CASE("isotypic profiles of the line bundles") {
    auto p0 = isotypic_profile(ctx(), 0, HalfInt(3));
    auto p1 = isotypic_profile(ctx(), 1, HalfInt(3));
    auto pm1 = isotypic_profile(ctx(), -1, HalfInt(3));

    for (int t = 0; t <= 6; ++t) {
        CHECK(p0.mult.at(t) == (t % 2 == 0 ? 1 : 0));
        CHECK(p1.mult.at(t) == (t % 2 == 1 ? 1 : 0));
    }
    CHECK(p1 == pm1);
    CHECK(p0.matches_closed_form());
    CHECK(p1.matches_closed_form());
    CHECK(pm1.matches_closed_form());
    CHECK_FALSE(p0 == p1);
}
