#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "nlift/rewrite.hpp"

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

SmashElement word_elem(const YDDatum& d, Word w) {
  return SmashElement::term(std::move(w), GroupElement::identity(d.group()),
                            Cyc::one(d.ambient_order()));
}

// Brute-force normal-word count for a monomial ideal: enumerate all words up
// to max_deg and drop the ones containing a generator as a factor.
std::vector<unsigned long> monomial_counts(unsigned theta,
                                           const std::vector<Word>& gens,
                                           unsigned max_deg) {
  std::vector<unsigned long> counts(max_deg + 1, 0);
  std::vector<Word> frontier = {{}};
  counts[0] = 1;
  for (unsigned deg = 1; deg <= max_deg; ++deg) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (uint8_t l = 0; l < theta; ++l) {
        Word nw = w;
        nw.push_back(l);
        bool bad = false;
        for (const Word& g : gens) {
          if (g.size() > nw.size()) continue;
          for (size_t p = 0; p + g.size() <= nw.size() && !bad; ++p)
            bad = std::equal(g.begin(), g.end(), nw.begin() + p);
          if (bad) break;
        }
        if (!bad) next.push_back(std::move(nw));
      }
    }
    counts[deg] = next.size();
    frontier = std::move(next);
  }
  return counts;
}

}  // namespace

TEST_CASE("monomial order") {
  MonomialOrder o = MonomialOrder::standard(2);
  CHECK(o.less({0}, {1}));
  CHECK(o.less({1}, {0, 0}));
  CHECK(o.less({0, 1}, {1, 0}));
  CHECK(!o.less({1, 0}, {1, 0}));
}

TEST_CASE("group algebra inversion") {
  YDDatum d = example_datum();
  const AbelianGroup& G = d.group();
  SmashElement one = SmashElement::unit(d);
  // single term
  SmashElement a = SmashElement::term({}, GroupElement(G, {3, 5}),
                                      Cyc::root(18, 7) * Cyc(18, Rational(2)));
  auto ai = group_algebra_inverse(d, a);
  REQUIRE(ai.has_value());
  CHECK(smash_multiply(d, a, *ai) == one);
  // multi-term invertible: 2 + g1
  SmashElement b = one * Cyc(18, Rational(2)) +
                   SmashElement::group_term(d, d.g(0));
  auto bi = group_algebra_inverse(d, b);
  REQUIRE(bi.has_value());
  CHECK(smash_multiply(d, b, *bi) == one);
  CHECK(smash_multiply(d, *bi, b) == one);
}

TEST_CASE("group algebra zero divisors are rejected") {
  AbelianGroup G{{2}};
  GroupElement g(G, {1});
  Character c(G, {1});
  YDDatum d(G, {{g, c}}, 2);
  // 1 + g has character values 2 and 0
  SmashElement a = SmashElement::unit(d) + SmashElement::group_term(d, g);
  CHECK(!group_algebra_inverse(d, a).has_value());
}

TEST_CASE("quantum plane completion and dimension") {
  YDDatum d = qplane_datum();
  RewriteSystem sys(d, MonomialOrder::standard(2));
  sys.add_relation(word_elem(d, {0, 0}));
  sys.add_relation(word_elem(d, {1, 1}));
  // x1 x2 - q12 x2 x1 = 0; q12 = 1 here
  sys.add_relation(word_elem(d, {0, 1}) - word_elem(d, {1, 0}) * d.q(0, 1));
  CHECK(sys.complete(16) == RewriteSystem::Status::confluent);
  auto dim = sys.dimension();
  CHECK(dim.finite);
  CHECK(dim.dim == 4);
  CHECK(dim.top_degree == 2);
  CHECK(dim.hilbert == std::vector<mpz_class>({1, 2, 1}));
  auto dimg = sys.dimension(true);
  CHECK(dimg.dim == 16);  // |Gamma| = 4
  // normal words: 1, x1, x2, x1x2
  auto nws = sys.normal_words(5);
  CHECK(nws == std::vector<Word>({{}, {0}, {1}, {0, 1}}));
}

TEST_CASE("single variable truncation") {
  AbelianGroup G{{3}};
  GroupElement g(G, {1});
  Character c(G, {1});
  YDDatum d(G, {{g, c}}, 3);
  RewriteSystem sys(d, MonomialOrder::standard(1));
  sys.add_relation(word_elem(d, {0, 0, 0}));
  CHECK(sys.complete(10) == RewriteSystem::Status::confluent);
  auto dim = sys.dimension();
  CHECK(dim.finite);
  CHECK(dim.dim == 3);
  CHECK(dim.top_degree == 2);
  CHECK(sys.ideal_member(word_elem(d, {0, 0, 0})));
  CHECK(!sys.ideal_member(word_elem(d, {0, 0})));
}

TEST_CASE("infinite quantum polynomial ring") {
  YDDatum d = example_datum();
  RewriteSystem sys(d, MonomialOrder::standard(2));
  // x2 x1 - q21^{-1} x1 x2: lead x2x1
  sys.add_relation(word_elem(d, {1, 0}) -
                   word_elem(d, {0, 1}) * d.q(1, 0).inverse());
  CHECK(sys.complete(16) == RewriteSystem::Status::confluent);
  auto dim = sys.dimension();
  CHECK(!dim.finite);
  // normal words x1^a x2^b: d+1 per degree
  CHECK(dim.hilbert[1] == 2);
  CHECK(dim.hilbert[2] == 3);
  CHECK(dim.hilbert[3] == 4);
}

TEST_CASE("normal form is multiplicative modulo the ideal") {
  YDDatum d = example_datum();
  RewriteSystem sys(d, MonomialOrder::standard(2));
  sys.add_relation(word_elem(d, {1, 0}) -
                   word_elem(d, {0, 1}) * d.q(1, 0).inverse());
  sys.add_relation(word_elem(d, {0, 0, 0}));
  sys.add_relation(word_elem(d, {1, 1}));
  REQUIRE(sys.complete(16) == RewriteSystem::Status::confluent);
  std::mt19937_64 rng(20240920);
  std::uniform_int_distribution<unsigned> len(0, 4);
  std::uniform_int_distribution<int> letter(0, 1);
  std::uniform_int_distribution<long> ge(0, 17);
  for (int t = 0; t < 30; ++t) {
    Word w1(len(rng)), w2(len(rng));
    for (auto& l : w1) l = letter(rng);
    for (auto& l : w2) l = letter(rng);
    SmashElement a = SmashElement::term(w1, GroupElement(d.group(), {ge(rng), ge(rng)}),
                                        Cyc::root(18, ge(rng)));
    SmashElement b = SmashElement::term(w2, GroupElement(d.group(), {ge(rng), ge(rng)}),
                                        Cyc::root(18, ge(rng)));
    SmashElement prod = smash_multiply(d, a, b);
    CHECK(sys.normal_form(prod) ==
          sys.normal_form(smash_multiply(d, sys.normal_form(a),
                                         sys.normal_form(b))));
  }
}

TEST_CASE("rules with group-algebra coefficients") {
  YDDatum d = example_datum();
  RewriteSystem sys(d, MonomialOrder::standard(2));
  // (x2 x1) (2 + g1) - (x1 x2) (x) 1 = 0
  SmashElement coeff = SmashElement::unit(d) * Cyc(18, Rational(2)) +
                       SmashElement::group_term(d, d.g(0));
  SmashElement r = smash_multiply(d, word_elem(d, {1, 0}), coeff) -
                   word_elem(d, {0, 1});
  CHECK(sys.add_relation(r));
  CHECK(sys.normal_form(r).is_zero());
  // the rewrite of x2x1 has group parts in its tail
  SmashElement nf = sys.normal_form(word_elem(d, {1, 0}));
  CHECK(!nf.is_zero());
  bool has_group_part = false;
  for (const auto& [k, c] : nf.terms())
    if (!k.grp.is_identity()) has_group_part = true;
  CHECK(has_group_part);
}

TEST_CASE("random monomial ideals match brute force") {
  YDDatum d = example_datum();
  std::mt19937_64 rng(20240921);
  std::uniform_int_distribution<unsigned> ngen(1, 4);
  std::uniform_int_distribution<unsigned> glen(2, 4);
  std::uniform_int_distribution<int> letter(0, 1);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Word> gens;
    unsigned n = ngen(rng);
    for (unsigned i = 0; i < n; ++i) {
      Word g(glen(rng));
      for (auto& l : g) l = letter(rng);
      gens.push_back(std::move(g));
    }
    RewriteSystem sys(d, MonomialOrder::standard(2));
    for (const Word& g : gens) sys.add_relation(word_elem(d, g));
    REQUIRE(sys.complete(32) == RewriteSystem::Status::confluent);
    auto expected = monomial_counts(2, gens, 8);
    auto dim = sys.dimension(false, 8);
    for (unsigned deg = 0; deg <= 8; ++deg) {
      mpz_class got = deg < dim.hilbert.size() ? dim.hilbert[deg] : 0;
      CHECK(got == expected[deg]);
    }
  }
}

TEST_CASE("serialization round trip") {
  YDDatum d = example_datum();
  RewriteSystem sys(d, MonomialOrder::standard(2));
  sys.add_relation(word_elem(d, {1, 0}) -
                   word_elem(d, {0, 1}) * d.q(1, 0).inverse());
  sys.add_relation(word_elem(d, {0, 0, 0}));
  REQUIRE(sys.complete(16) == RewriteSystem::Status::confluent);
  std::string text = sys.serialize();
  RewriteSystem back = RewriteSystem::deserialize(d, text);
  CHECK(back.status() == RewriteSystem::Status::confluent);
  CHECK(back.serialize() == text);
  SmashElement probe = word_elem(d, {1, 0, 1, 0, 0});
  CHECK(back.normal_form(probe) == sys.normal_form(probe));
}

TEST_CASE("tensor normal form reduces both legs") {
  YDDatum d = example_datum();
  RewriteSystem sys(d, MonomialOrder::standard(2));
  sys.add_relation(word_elem(d, {0, 0}));
  REQUIRE(sys.complete(8) == RewriteSystem::Status::confluent);
  TensorElement t = TensorElement::simple(word_elem(d, {0, 0}),
                                          word_elem(d, {1}));
  CHECK(sys.tensor_normal_form(t).is_zero());
  TensorElement t2 = TensorElement::simple(word_elem(d, {1}),
                                           word_elem(d, {0, 0, 1}));
  CHECK(sys.tensor_normal_form(t2).is_zero());
  TensorElement t3 = TensorElement::simple(word_elem(d, {1}),
                                           word_elem(d, {0, 1}));
  CHECK(sys.tensor_normal_form(t3) == t3);
}
