#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "nlift/cyclotomic.hpp"

using nlift::Cyc;
using nlift::Rational;

namespace {

Cyc z9(long k) { return Cyc::root(9, k); }

Cyc random_cyc(std::mt19937_64& rng, unsigned order) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rational> cs(nlift::euler_phi(order));
  for (auto& c : cs) c = Rational(num(rng), den(rng));
  return Cyc::from_coeffs(order, std::move(cs));
}

}  // namespace

TEST_CASE("euler phi and divisors") {
  CHECK(nlift::euler_phi(1) == 1);
  CHECK(nlift::euler_phi(9) == 6);
  CHECK(nlift::euler_phi(18) == 6);
  CHECK(nlift::divisors(18) ==
        std::vector<unsigned>({1, 2, 3, 6, 9, 18}));
}

TEST_CASE("roots of unity multiply by exponent addition") {
  CHECK(z9(4) * z9(5) == Cyc::one(9));
  // (-z) * z^7 * z^3 = -z^11 = -z^2
  Cyc p = (-z9(1)) * z9(7) * z9(3);
  CHECK(p == -z9(2));
  // ((-z) z^7 z^3)^4 = z^8
  CHECK(p.pow(4) == z9(8));
}

TEST_CASE("Phi_n vanishes at zeta_n") {
  for (unsigned n : {1u, 2u, 3u, 4u, 9u, 12u, 18u}) {
    const auto& ctx = nlift::FieldContext::get(n);
    Cyc acc = Cyc::zero(n);
    for (size_t i = 0; i < ctx.phi_coeffs.size(); ++i)
      acc += Cyc::root(n, 1).pow(static_cast<long>(i)) *
             Cyc(n, Rational(ctx.phi_coeffs[i]));
    CHECK(acc.is_zero());
  }
}

TEST_CASE("inverse") {
  CHECK(Cyc::one(9).inverse() == Cyc::one(9));
  Cyc x = Cyc::one(9) + z9(1);
  CHECK(x * x.inverse() == Cyc::one(9));
  CHECK(z9(3).inverse() == z9(6));
  CHECK_THROWS(Cyc::zero(9).inverse());
}

TEST_CASE("root_order") {
  CHECK(*(-z9(1)).root_order() == 18);
  CHECK(*z9(3).root_order() == 3);
  CHECK(!(Cyc::one(9) + z9(1)).root_order().has_value());
  // claim check: x^N = 1 and x^d != 1 for proper divisors d of N
  Cyc x = -z9(1);
  unsigned N = *x.root_order();
  CHECK(x.pow(N).is_one());
  for (unsigned d : nlift::divisors(N))
    if (d != N) CHECK(!x.pow(d).is_one());
}

TEST_CASE("field embedding") {
  CHECK(z9(1).embed(18) == Cyc::root(18, 2));
  CHECK(Cyc::one(9).embed(18) == Cyc::one(18));
  // homomorphism: embed-then-multiply equals multiply-then-embed
  Cyc a = z9(1), b = z9(2);
  CHECK(a.embed(18) * b.embed(18) == (a * b).embed(18));
  CHECK(a.embed(18) + b.embed(18) == (a + b).embed(18));
  CHECK_THROWS(z9(1).embed(12));
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(20240901);
  for (int i = 0; i < 40; ++i) {
    Cyc a = random_cyc(rng, 18), b = random_cyc(rng, 18),
        c = random_cyc(rng, 18);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == Cyc::one(18));
  }
}

TEST_CASE("small orders behave") {
  CHECK(Cyc::root(1, 5) == Cyc::one(1));
  CHECK(Cyc::root(2, 1) == -Cyc::one(2));
  CHECK(Cyc::root(2, 1) * Cyc::root(2, 1) == Cyc::one(2));
  CHECK(*Cyc::root(2, 1).root_order() == 2);
}
