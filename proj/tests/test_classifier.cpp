#include <catch2/catch_amalgamated.hpp>

#include "coxpoly/classifier.hpp"
#include "coxpoly/closed_forms.hpp"
#include "coxpoly/coxeter.hpp"
#include "coxpoly/quiver.hpp"

using namespace coxpoly;

TEST_CASE("weight defect and representation type", "[classifier]") {
    CHECK(weight_type({2, 3, 6}).delta == 0);
    CHECK(weight_type({2, 3, 6}).kind == RepKind::tubular);
    CHECK(weight_type({2, 3, 7}).delta == Rat(1, 42));
    CHECK(weight_type({2, 3, 7}).kind == RepKind::wild);
    CHECK(weight_type({2, 3, 5}).delta == Rat(-1, 30));
    CHECK(weight_type({2, 3, 5}).kind == RepKind::domestic);
    CHECK(weight_type({2, 2, 2, 2}).kind == RepKind::tubular);
    CHECK(weight_type({2, 2}).kind == RepKind::domestic);
    CHECK(weight_type({3, 3, 3}).kind == RepKind::tubular);
    CHECK(weight_type({2, 4, 4}).kind == RepKind::tubular);
    CHECK_THROWS_AS(weight_type({1, 2}), InvalidWeightsError);
    CHECK_THROWS_AS(weight_type({5}), InvalidWeightsError);
}

TEST_CASE("trace trichotomy", "[classifier]") {
    CHECK(trace_trichotomy(2).kind == AlgebraClass::non_tree_hereditary);
    CHECK(trace_trichotomy(0).kind == AlgebraClass::non_tree_hereditary);
    CHECK(trace_trichotomy(-1).kind == AlgebraClass::undecided);
    const ClassLabel below = trace_trichotomy(-3);
    CHECK(below.kind == AlgebraClass::canonical);
    CHECK(below.branches_exceed_three);
}

TEST_CASE("coefficient separation at trace -1", "[classifier]") {
    // trees fail all three conditions
    CHECK_FALSE(separate_trace_minus_one(Poly(IntVec{1, 1, 0, 1, 1})).canonical);
    CHECK_FALSE(separate_trace_minus_one(Poly::ones(5)).canonical);
    CHECK_FALSE(separate_trace_minus_one(Poly::ones(1)).canonical);

    // weights (2,3,c+1) for c >= 5 fire condition (i)
    const auto sep_i = separate_trace_minus_one(coxeter_polynomial(canonical_cartan({2, 3, 6})));
    CHECK(sep_i.canonical);
    CHECK(sep_i.condition == SeparationCondition::cond_i);

    // weights (2,b+1,c+1) with b >= 3 fire condition (ii)
    const auto sep_ii = separate_trace_minus_one(coxeter_polynomial(canonical_cartan({2, 4, 4})));
    CHECK(sep_ii.canonical);
    CHECK(sep_ii.condition == SeparationCondition::cond_ii);

    // weights with smallest weight >= 3 fire condition (iii)
    const auto sep_iii =
        separate_trace_minus_one(coxeter_polynomial(canonical_cartan({3, 3, 3})));
    CHECK(sep_iii.canonical);
    CHECK(sep_iii.condition == SeparationCondition::cond_iii);

    // a domestic canonical polynomial coincides with a tree polynomial, so
    // the raw conditions must not fire on it
    CHECK_FALSE(separate_trace_minus_one(coxeter_polynomial(canonical_cartan({2, 2, 2}))).canonical);

    // the 7-vertex star with branches (1,2,3) matches condition (i)'s four
    // equalities but sits below the size where that pattern certifies a
    // canonical algebra; it must stay on the tree side
    const Poly e7 = coxeter_polynomial(cartan_matrix(build_star({1, 2, 3})));
    CHECK(e7 == Poly(IntVec{1, 1, 0, -1, -1, 0, 1, 1}));
    CHECK_FALSE(separate_trace_minus_one(e7).canonical);
    // the smallest polynomial where condition (i) does certify canonical type
    const Poly smallest_i = coxeter_polynomial(canonical_cartan({2, 3, 6}));
    CHECK(smallest_i.degree() == 10);
    CHECK(separate_trace_minus_one(smallest_i).canonical);

    // polynomials whose subleading coefficient is not 1 have trace != -1
    CHECK_THROWS_AS(separate_trace_minus_one(Poly(IntVec{1, -2, 1})), TraceMismatchError);
    CHECK_THROWS_AS(separate_trace_minus_one(Poly(IntVec{1, 0, 0, 1})), TraceMismatchError);
    CHECK_THROWS_AS(separate_trace_minus_one(Poly::constant(1)), TraceMismatchError);
}

TEST_CASE("end-to-end classification", "[classifier]") {
    // two parallel arrows: trace 2
    const auto kronecker =
        classify_algebra(AlgebraSpec::path_algebra(Quiver(2, {{1, 2}, {1, 2}})));
    CHECK(kronecker.kind == AlgebraClass::non_tree_hereditary);
    CHECK(kronecker.trace == 2);

    const auto tree = classify_algebra(AlgebraSpec::path_algebra(build_star({1, 1, 1})));
    CHECK(tree.kind == AlgebraClass::tree_type);
    CHECK(tree.trace == -1);
    CHECK_FALSE(tree.condition.has_value());

    const auto tubular = classify_algebra(AlgebraSpec::canonical({2, 3, 6}),
                                          std::vector<int>{2, 3, 6});
    CHECK(tubular.kind == AlgebraClass::canonical);
    CHECK(tubular.branches == 3);
    CHECK(tubular.condition == SeparationCondition::cond_i);
    REQUIRE(tubular.weights.has_value());
    CHECK(tubular.weights->kind == RepKind::tubular);
    CHECK(tubular.weights->delta == 0);

    const auto four = classify_algebra(AlgebraSpec::canonical({2, 2, 2, 2}),
                                       std::vector<int>{2, 2, 2, 2});
    CHECK(four.kind == AlgebraClass::canonical);
    CHECK(four.trace < -1);
    CHECK(four.branches_exceed_three);
    CHECK(four.branches == 4);

    // five branches stays below -1 as well
    const auto five = classify_algebra(AlgebraSpec::canonical({2, 2, 2, 2, 2}));
    CHECK(five.kind == AlgebraClass::canonical);
    CHECK(five.trace < -1);
}
