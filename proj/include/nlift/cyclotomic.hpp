#ifndef NLIFT_CYCLOTOMIC_HPP
#define NLIFT_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nlift {

using Rational = mpq_class;

/// Shared per-order data for Q(zeta_n): the cyclotomic polynomial Phi_n and
/// reduction rows for x^k, phi(n) <= k < 2 phi(n) - 1.
struct FieldContext {
  unsigned order = 1;
  unsigned degree = 1;                        // phi(n)
  std::vector<mpz_class> phi_coeffs;          // Phi_n, monic, degree = phi(n)
  std::vector<std::vector<Rational>> xpow;    // x^(degree + i) mod Phi_n

  static const FieldContext& get(unsigned order);
};

unsigned euler_phi(unsigned n);
std::vector<unsigned> divisors(unsigned n);

/// Exact element of the cyclotomic field Q(zeta_n), stored as a polynomial in
/// zeta_n of degree < phi(n), reduced modulo Phi_n. Canonical form, so
/// equality is coefficient-wise comparison.
class Cyc {
 public:
  Cyc() : order_(1), coeffs_(1, Rational(0)) {}
  explicit Cyc(unsigned order);
  Cyc(unsigned order, const Rational& constant);

  static Cyc zero(unsigned order) { return Cyc(order); }
  static Cyc one(unsigned order) { return Cyc(order, Rational(1)); }
  /// zeta_order^k
  static Cyc root(unsigned order, long k);
  static Cyc from_coeffs(unsigned order, std::vector<Rational> coeffs);

  unsigned order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Constant term if the element is rational, otherwise nullopt.
  std::optional<Rational> as_rational() const;

  Cyc operator-() const;
  Cyc operator+(const Cyc& o) const;
  Cyc operator-(const Cyc& o) const;
  Cyc operator*(const Cyc& o) const;
  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o);
  bool operator==(const Cyc& o) const;
  bool operator!=(const Cyc& o) const { return !(*this == o); }
  bool operator<(const Cyc& o) const;  // arbitrary total order, for maps

  /// Multiplicative inverse; throws std::domain_error on zero.
  Cyc inverse() const;
  Cyc pow(long e) const;

  /// Smallest N >= 1 with x^N = 1, or nullopt if x is not a root of unity.
  /// Only divisors of lcm(2, n) can occur.
  std::optional<unsigned> root_order() const;

  /// Re-express in Q(zeta_m); requires order | m.
  Cyc embed(unsigned m) const;

  std::string to_string() const;  // e.g. "1 - 2/3*z^4", z = zeta_order

 private:
  void reduce_from(std::vector<Rational>& raw);  // degree < 2*degree-1

  unsigned order_;
  std::vector<Rational> coeffs_;  // size phi(order_)
};

unsigned lcm_u(unsigned a, unsigned b);

}  // namespace nlift

#endif
