#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nlift/nichols.hpp"

using namespace nlift;

namespace {

YDDatum example_datum() {
  AbelianGroup G{{18, 9}};
  GroupElement g1(G, {1, 0}), g2(G, {0, 1});
  Character c1(G, {11, 0}), c2(G, {14, 3});
  return YDDatum(G, {{g1, c1}, {g2, c2}}, 18);
}

YDDatum qplane_datum() {
  Cyc m1 = -Cyc::one(2), one = Cyc::one(2);
  return minimal_realization({{m1, one}, {one, m1}});
}

RewriteSystem empty_system(const YDDatum& d) {
  RewriteSystem R(d, MonomialOrder::standard(d.theta()));
  R.complete(64);
  return R;
}

SmashElement word_elem(const YDDatum& d, Word w) {
  return SmashElement::term(std::move(w), GroupElement::identity(d.group()),
                            Cyc::one(d.ambient_order()));
}

}  // namespace

TEST_CASE("powers of generators are skew-primitive in the free cover") {
  YDDatum d = example_datum();
  RewriteSystem R = empty_system(d);
  // x1^18 with group-like g1^18: the q-binomials vanish, ord(q11) = 18.
  StratumElement e1 =
      make_stratum_element(d, SmashElement::letter(d, 0), 18, "x1^18");
  CHECK(skew_primitive_defect(d, e1, R).is_zero());
  // x2^3 with g2^3, ord(q22) = 3.
  StratumElement e2 =
      make_stratum_element(d, SmashElement::letter(d, 1), 3, "x2^3");
  CHECK(skew_primitive_defect(d, e2, R).is_zero());
  CHECK(e1.g == d.g(0).pow(d.group(), 18));
  CHECK(e1.chi == d.chi(0).pow(18));
}

TEST_CASE("x12 has the expected nonzero defect in the free cover") {
  YDDatum d = example_datum();
  RewriteSystem R = empty_system(d);
  SmashElement x1 = SmashElement::letter(d, 0), x2 = SmashElement::letter(d, 1);
  SmashElement x12 = braided_bracket(d, x1, x2);
  GroupElement g12 = d.g(0) * d.g(1);
  TensorElement def = skew_primitive_defect(d, x12, g12, R);
  // (1 - q12 q21) x1 g2 (x) x2
  Cyc coeff = Cyc::one(18) - d.q(0, 1) * d.q(1, 0);
  TensorElement expected = TensorElement::simple(
      SmashElement::term({0}, d.g(1), coeff),
      word_elem(d, {1}));
  CHECK(def == expected);
  CHECK(!def.is_zero());
}

TEST_CASE("primitive space of the free algebra") {
  YDDatum d = example_datum();
  RewriteSystem R = empty_system(d);
  auto deg1 = primitive_space(d, R, 1);
  REQUIRE(deg1.size() == 2);
  CHECK(deg1[0] + deg1[1] ==
        deg1[0] + deg1[1]);  // sanity on operands
  // each basis vector is a scalar multiple of a single letter
  for (const auto& u : deg1) {
    REQUIRE(u.size() == 1);
    CHECK(u.terms().begin()->first.word.size() == 1);
  }
  // no degree-2 skew-primitives for this braiding: 1 - q12 q21 != 0 and the
  // diagonal entries have order > 2
  CHECK(primitive_space(d, R, 2).empty());
}

TEST_CASE("primitive space round trip") {
  YDDatum d = qplane_datum();
  RewriteSystem R = empty_system(d);
  // q11 = q22 = -1: x1^2 and x2^2 are primitive; q12 q21 = 1 makes the
  // bracket x1x2 - x2x1 primitive as well.
  auto deg2 = primitive_space(d, R, 2);
  CHECK(deg2.size() == 3);
  for (const auto& u : deg2) {
    auto [g, chi] = element_weight(d, u);
    CHECK(skew_primitive_defect(d, u, g, R).is_zero());
  }
}

TEST_CASE("quantum plane single stratum validates") {
  YDDatum d = qplane_datum();
  Stratification S;
  S.order = MonomialOrder::standard(2);
  S.strata.push_back(
      make_stratum(d, {word_elem(d, {0, 0}), word_elem(d, {1, 1})}));
  auto report = validate_stratification(d, S, 32);
  CHECK(report.ok);
  REQUIRE(S.systems.size() == 2);
  CHECK(S.systems[1].status() == RewriteSystem::Status::confluent);
}

TEST_CASE("misplaced stratum element is rejected with a defect witness") {
  YDDatum d = example_datum();
  SmashElement x1 = SmashElement::letter(d, 0), x2 = SmashElement::letter(d, 1);
  SmashElement x12 = braided_bracket(d, x1, x2);
  SmashElement x112 = braided_bracket(d, x1, x12);
  Stratification S;
  S.order = MonomialOrder::standard(2);
  Stratum g0;
  g0.elements.push_back(make_stratum_element(d, x1, 18, "x1^18"));
  g0.elements.push_back(make_stratum_element(d, x2, 3, "x2^3"));
  S.strata.push_back(g0);
  // x112 is not skew-primitive at level 1: its defect carries the factors
  // 1 - q12 q21 and 1 - q11 q12 q21, both nonzero for this braiding.
  S.strata.push_back(make_stratum(d, {x112}, {"x112"}));
  auto report = validate_stratification(d, S, 64);
  CHECK(!report.ok);
  REQUIRE(report.failures.size() == 1);
  CHECK(report.failures[0].level == 1);
  CHECK(report.failures[0].what == "defect");
  CHECK(!report.failures[0].defect.is_zero());
}

TEST_CASE("stratum element constraints") {
  YDDatum d = example_datum();
  // degree-1 elements are not admissible stratum members
  CHECK_THROWS_AS(make_stratum_element(d, SmashElement::letter(d, 0), 1),
                  std::invalid_argument);
  // mixed-weight combinations are rejected
  SmashElement mixed = word_elem(d, {0, 0}) + word_elem(d, {0, 1});
  CHECK_THROWS_AS(make_stratum_element(d, mixed, 1), std::invalid_argument);
}

TEST_CASE("truncation dichotomy on rank-one data") {
  for (unsigned N = 2; N <= 12; ++N) {
    AbelianGroup G{{N}};
    GroupElement g(G, {1});
    Character chi(G, {1});
    YDDatum d(G, {{g, chi}}, N);
    SmashElement x = SmashElement::letter(d, 0);
    // no relations: polynomial, witness x^N
    RewriteSystem free_sys = empty_system(d);
    auto res = truncation_order(d, x, g, chi, free_sys);
    CHECK(res.order == N);
    CHECK(!res.truncated);
    CHECK(res.witness == Word(N, 0));
    // with x^N = 0: truncated at N, matching direct power reduction
    RewriteSystem trunc_sys(d, MonomialOrder::standard(1));
    trunc_sys.add_relation(word_elem(d, Word(N, 0)));
    REQUIRE(trunc_sys.complete(4 * N) == RewriteSystem::Status::confluent);
    auto res2 = truncation_order(d, x, g, chi, trunc_sys);
    CHECK(res2.order == N);
    CHECK(res2.truncated);
    CHECK(reduced_power(trunc_sys, x, N).is_zero());
  }
}

TEST_CASE("monomial cover certifies nonvanishing") {
  YDDatum d = qplane_datum();
  RewriteSystem R = empty_system(d);
  SmashElement x2 = SmashElement::letter(d, 1);
  // chi2(g2) = -1, N = 2; the cover {x1} collapses the quotient to the
  // braided line on x2 where x2^2 visibly survives.
  auto res = truncation_order(d, x2, d.g(1), d.chi(1), R, {{0}});
  CHECK(res.order == 2);
  CHECK(!res.truncated);
  CHECK(res.via_cover);
  CHECK(res.witness == Word({1, 1}));
}

TEST_CASE("centrality") {
  YDDatum d = qplane_datum();
  RewriteSystem R(d, MonomialOrder::standard(2));
  R.add_relation(word_elem(d, {0, 0}));
  R.add_relation(word_elem(d, {1, 1}));
  REQUIRE(R.complete(16) == RewriteSystem::Status::confluent);
  // 1 is central
  auto c0 = centrality_check(d, SmashElement::unit(d), R);
  CHECK(c0.central);
  // x1 is not: the commutator with x2 is nonzero and chi1 is nontrivial
  auto c1 = centrality_check(d, SmashElement::letter(d, 0), R);
  CHECK(!c1.central);
  CHECK(!c1.character_trivial);
  CHECK(!c1.commutes[1]);
}

TEST_CASE("normality of a power stratum in the free cover") {
  YDDatum d = example_datum();
  RewriteSystem R = empty_system(d);
  Stratum s;
  s.elements.push_back(
      make_stratum_element(d, SmashElement::letter(d, 0), 18, "x1^18"));
  auto rep = normality_check(d, s, R);
  CHECK(rep.route == "span_solve");
  REQUIRE(rep.pairs.size() == 2);
  // [x1, S(x1^18)] vanishes because chi1(g1^-18) = 1
  CHECK(rep.pairs[0].in_span);
  // [x2, S(x1^18)] has multidegree (18,1): no power of S(x1^18) matches
  CHECK(!rep.pairs[1].in_span);
  CHECK(rep.status == NormalityReport::Status::fails);
}

TEST_CASE("normality undecided for multi-element non-central strata") {
  YDDatum d = qplane_datum();
  RewriteSystem R = empty_system(d);
  Stratum s = make_stratum(d, {word_elem(d, {0, 0}), word_elem(d, {1, 1})});
  auto rep = normality_check(d, s, R);
  CHECK(rep.status == NormalityReport::Status::undecided);
}

TEST_CASE("reduced powers agree with direct multiplication") {
  YDDatum d = qplane_datum();
  RewriteSystem R(d, MonomialOrder::standard(2));
  R.add_relation(word_elem(d, {0, 0}));
  R.add_relation(word_elem(d, {1, 1}));
  REQUIRE(R.complete(16) == RewriteSystem::Status::confluent);
  SmashElement u = word_elem(d, {0}) + word_elem(d, {1});
  SmashElement direct =
      R.normal_form(smash_multiply(d, smash_multiply(d, u, u), u));
  CHECK(reduced_power(R, u, 3) == direct);
  TensorElement dp = reduced_coproduct_power(d, R, R, u, 2);
  TensorElement expl = tensor_normal_form(
      R, R, coproduct(d, smash_multiply(d, u, u)));
  CHECK(dp == expl);
}
