#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <tuple>

#include "nlift/algebra.hpp"

using namespace nlift;

namespace {

YDDatum example_datum() {
  AbelianGroup G{{18, 9}};
  GroupElement g1(G, {1, 0}), g2(G, {0, 1});
  Character c1(G, {11, 0}), c2(G, {14, 3});
  return YDDatum(G, {{g1, c1}, {g2, c2}}, 18);
}

SmashElement random_element(const YDDatum& d, std::mt19937_64& rng,
                            unsigned max_terms = 3, unsigned max_len = 3) {
  std::uniform_int_distribution<unsigned> nterms(1, max_terms);
  std::uniform_int_distribution<unsigned> len(0, max_len);
  std::uniform_int_distribution<int> letter(0, d.theta() - 1);
  std::uniform_int_distribution<long> ge(0, 17);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<long> zp(0, 17);
  SmashElement e;
  unsigned n = nterms(rng);
  for (unsigned t = 0; t < n; ++t) {
    Word w(len(rng));
    for (auto& l : w) l = static_cast<uint8_t>(letter(rng));
    GroupElement g(d.group(), {ge(rng), ge(rng)});
    Cyc c = Cyc(d.ambient_order(), Rational(coeff(rng))) *
            Cyc::root(d.ambient_order(), zp(rng));
    e += SmashElement::term(std::move(w), std::move(g), std::move(c));
  }
  return e;
}

// m (S (x) id) Delta(a), computed term by term.
SmashElement antipode_convolution(const YDDatum& d, const SmashElement& a) {
  SmashElement r;
  TensorElement da = coproduct(d, a);
  for (const auto& [k, c] : da.terms()) {
    SmashElement left = antipode(
        d, SmashElement::term(k.first.word, k.first.grp, Cyc::one(d.ambient_order())));
    SmashElement right = SmashElement::term(k.second.word, k.second.grp,
                                            Cyc::one(d.ambient_order()));
    r += smash_multiply(d, left, right) * c;
  }
  return r;
}

using TripleKey = std::tuple<SmashKey, SmashKey, SmashKey>;
using Triple = std::map<TripleKey, Cyc>;

void triple_add(Triple& t, const TripleKey& k, const Cyc& c) {
  if (c.is_zero()) return;
  auto it = t.find(k);
  if (it == t.end()) {
    t.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

Triple delta_left(const YDDatum& d, const TensorElement& t) {
  Triple r;
  for (const auto& [k, c] : t.terms()) {
    SmashElement leg = SmashElement::term(k.first.word, k.first.grp,
                                          Cyc::one(d.ambient_order()));
    TensorElement dl = coproduct(d, leg);
    for (const auto& [kk, cc] : dl.terms())
      triple_add(r, {kk.first, kk.second, k.second}, c * cc);
  }
  return r;
}

Triple delta_right(const YDDatum& d, const TensorElement& t) {
  Triple r;
  for (const auto& [k, c] : t.terms()) {
    SmashElement leg = SmashElement::term(k.second.word, k.second.grp,
                                          Cyc::one(d.ambient_order()));
    TensorElement dl = coproduct(d, leg);
    for (const auto& [kk, cc] : dl.terms())
      triple_add(r, {k.first, kk.first, kk.second}, c * cc);
  }
  return r;
}

}  // namespace

TEST_CASE("smash relation g x = chi(g) x g") {
  YDDatum d = example_datum();
  GroupElement g = d.g(0);  // g1
  SmashElement lhs = smash_multiply(d, SmashElement::group_term(d, g),
                                    SmashElement::letter(d, 1));
  // g1 x2 = chi2(g1) x2 g1 = q12 x2 g1
  SmashElement rhs = SmashElement::term({1}, g, d.q(0, 1));
  CHECK(lhs == rhs);
}

TEST_CASE("associativity and unit on random samples") {
  YDDatum d = example_datum();
  std::mt19937_64 rng(20240910);
  SmashElement one = SmashElement::unit(d);
  for (int t = 0; t < 25; ++t) {
    SmashElement a = random_element(d, rng), b = random_element(d, rng),
                 c = random_element(d, rng);
    CHECK(smash_multiply(d, smash_multiply(d, a, b), c) ==
          smash_multiply(d, a, smash_multiply(d, b, c)));
    CHECK(smash_multiply(d, one, a) == a);
    CHECK(smash_multiply(d, a, one) == a);
  }
}

TEST_CASE("coproduct of a bracket generator") {
  YDDatum d = example_datum();
  SmashElement x12 = braided_bracket(d, SmashElement::letter(d, 0),
                                     SmashElement::letter(d, 1));
  // Delta(x12) = x12 (x) 1 + g1 g2 (x) x12 + (1 - q12 q21) x1 g2 (x) x2
  GroupElement id = GroupElement::identity(d.group());
  GroupElement g12 = d.g(0) * d.g(1);
  TensorElement expected =
      TensorElement::simple(x12, SmashElement::unit(d)) +
      TensorElement::simple(SmashElement::group_term(d, g12), x12) +
      TensorElement::simple(
          SmashElement::term({0}, d.g(1), Cyc::one(18)),
          SmashElement::term({1}, id,
                             Cyc::one(18) - d.q(0, 1) * d.q(1, 0)));
  CHECK(coproduct(d, x12) == expected);
}

TEST_CASE("coassociativity on random samples") {
  YDDatum d = example_datum();
  std::mt19937_64 rng(20240911);
  for (int t = 0; t < 15; ++t) {
    SmashElement a = random_element(d, rng, 2, 3);
    TensorElement da = coproduct(d, a);
    CHECK(delta_left(d, da) == delta_right(d, da));
  }
}

TEST_CASE("coproduct is an algebra map") {
  YDDatum d = example_datum();
  std::mt19937_64 rng(20240912);
  for (int t = 0; t < 15; ++t) {
    SmashElement a = random_element(d, rng, 2, 2), b = random_element(d, rng, 2, 2);
    CHECK(coproduct(d, smash_multiply(d, a, b)) ==
          tensor_multiply(d, coproduct(d, a), coproduct(d, b)));
  }
}

TEST_CASE("counit axioms") {
  YDDatum d = example_datum();
  std::mt19937_64 rng(20240913);
  for (int t = 0; t < 20; ++t) {
    SmashElement a = random_element(d, rng);
    // (eps (x) id) Delta a = a
    SmashElement left, right;
    TensorElement da = coproduct(d, a);
    for (const auto& [k, c] : da.terms()) {
      if (k.first.word.empty())
        left += SmashElement::term(k.second.word, k.second.grp, c);
      if (k.second.word.empty())
        right += SmashElement::term(k.first.word, k.first.grp, c);
    }
    CHECK(left == a);
    CHECK(right == a);
  }
}

TEST_CASE("antipode") {
  YDDatum d = example_datum();
  // S(x_i) = -g_i^{-1} x_i
  for (unsigned i = 0; i < 2; ++i) {
    SmashElement s = antipode(d, SmashElement::letter(d, i));
    GroupElement gi_inv = d.g(i).inverse(d.group());
    Cyc q = word_character_value(d, {static_cast<uint8_t>(i)}, gi_inv);
    CHECK(s == SmashElement::term({static_cast<uint8_t>(i)}, gi_inv, -q));
  }
  // S is the convolution inverse of the identity
  std::mt19937_64 rng(20240914);
  for (int t = 0; t < 15; ++t) {
    SmashElement a = random_element(d, rng, 2, 3);
    CHECK(antipode_convolution(d, a) ==
          SmashElement::unit(d) * counit(d, a));
  }
  // anti-homomorphism on samples
  for (int t = 0; t < 10; ++t) {
    SmashElement a = random_element(d, rng, 2, 2), b = random_element(d, rng, 2, 2);
    CHECK(antipode(d, smash_multiply(d, a, b)) ==
          smash_multiply(d, antipode(d, b), antipode(d, a)));
  }
}

TEST_CASE("bracket generators expand as commutators") {
  YDDatum d = example_datum();
  GroupElement id = GroupElement::identity(d.group());
  SmashElement x1 = SmashElement::letter(d, 0), x2 = SmashElement::letter(d, 1);
  SmashElement x12 = braided_bracket(d, x1, x2);
  CHECK(x12 == smash_multiply(d, x1, x2) -
                   smash_multiply(d, x2, x1) * d.q(0, 1));
  SmashElement x112 = braided_bracket(d, x1, x12);
  CHECK(x112 == smash_multiply(d, x1, x12) -
                    smash_multiply(d, x12, x1) * (d.q(0, 0) * d.q(0, 1)));
  CHECK(x112.degree() == 3);
  CHECK(x112.is_homogeneous());
  SmashElement x122 = braided_bracket(d, x12, x2);
  CHECK(x122 == smash_multiply(d, x12, x2) -
                    smash_multiply(d, x2, x12) * (d.q(0, 1) * d.q(1, 1)));
}

TEST_CASE("word weight helpers") {
  YDDatum d = example_datum();
  Word w = {0, 0, 1};  // x1 x1 x2
  CHECK(word_group(d, w) == d.g(0) * d.g(0) * d.g(1));
  CHECK(word_character(d, w) == d.chi(0) * d.chi(0) * d.chi(1));
  // chi_w(g_w) on the empty word is 1
  CHECK(word_character_value(d, {}, d.g(0)).is_one());
}
