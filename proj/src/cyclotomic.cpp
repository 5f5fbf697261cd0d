#include "nlift/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nlift {

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> ds;
  for (unsigned d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      if (d != n / d) ds.push_back(n / d);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

unsigned lcm_u(unsigned a, unsigned b) {
  return a / std::gcd(a, b) * b;
}

namespace {

// Exact division of integer polynomials, used to peel x^n - 1 down to Phi_n.
std::vector<mpz_class> poly_divide(const std::vector<mpz_class>& num,
                                   const std::vector<mpz_class>& den) {
  std::vector<mpz_class> rem = num;
  std::vector<mpz_class> quot(num.size() - den.size() + 1, mpz_class(0));
  const size_t dd = den.size() - 1;
  for (size_t i = rem.size(); i-- > den.size() - 1;) {
    if (i < dd) break;
    mpz_class c = rem[i] / den[dd];
    quot[i - dd] = c;
    if (c != 0)
      for (size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= c * den[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw std::logic_error("cyclotomic: non-exact division");
  while (quot.size() > 1 && quot.back() == 0) quot.pop_back();
  return quot;
}

std::vector<mpz_class> cyclotomic_poly(unsigned n) {
  // x^n - 1 divided by Phi_d for all proper divisors d of n.
  std::vector<mpz_class> p(n + 1, mpz_class(0));
  p[0] = -1;
  p[n] = 1;
  if (n == 1) return p;
  for (unsigned d : divisors(n)) {
    if (d == n) continue;
    p = poly_divide(p, cyclotomic_poly(d));
  }
  return p;
}

}  // namespace

const FieldContext& FieldContext::get(unsigned order) {
  static std::map<unsigned, FieldContext> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  if (order == 0) throw std::invalid_argument("cyclotomic order must be >= 1");

  FieldContext ctx;
  ctx.order = order;
  ctx.degree = euler_phi(order);
  ctx.phi_coeffs = cyclotomic_poly(order);

  // x^degree = -(phi[degree-1] x^{degree-1} + ... + phi[0]); build rows up to
  // x^{2*degree-2} by shifting.
  const unsigned d = ctx.degree;
  std::vector<Rational> row(d);
  for (unsigned i = 0; i < d; ++i) row[i] = Rational(-ctx.phi_coeffs[i]);
  ctx.xpow.push_back(row);
  for (unsigned k = 1; k + d < 2 * d; ++k) {
    std::vector<Rational> next(d, Rational(0));
    // multiply previous row by x, fold the overflow through row 0
    const std::vector<Rational>& prev = ctx.xpow.back();
    for (unsigned i = 0; i + 1 < d; ++i) next[i + 1] = prev[i];
    if (prev[d - 1] != 0)
      for (unsigned i = 0; i < d; ++i) next[i] += prev[d - 1] * ctx.xpow[0][i];
    ctx.xpow.push_back(std::move(next));
  }
  return cache.emplace(order, std::move(ctx)).first->second;
}

Cyc::Cyc(unsigned order)
    : order_(order), coeffs_(FieldContext::get(order).degree, Rational(0)) {}

Cyc::Cyc(unsigned order, const Rational& constant) : Cyc(order) {
  coeffs_[0] = constant;
  coeffs_[0].canonicalize();
}

Cyc Cyc::root(unsigned order, long k) {
  const FieldContext& ctx = FieldContext::get(order);
  long r = k % static_cast<long>(order);
  if (r < 0) r += order;
  Cyc z(order);
  if (ctx.degree > 1) {
    z.coeffs_[1] = 1;
  } else {
    z.coeffs_[0] = (order == 2) ? -1 : 1;  // Phi_2 = x + 1, Phi_1 = x - 1
  }
  return z.pow(r);
}

Cyc Cyc::from_coeffs(unsigned order, std::vector<Rational> coeffs) {
  Cyc x(order);
  if (coeffs.size() != x.coeffs_.size())
    throw std::invalid_argument("Cyc::from_coeffs: wrong length");
  for (auto& c : coeffs) c.canonicalize();
  x.coeffs_ = std::move(coeffs);
  return x;
}

bool Cyc::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyc::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

std::optional<Rational> Cyc::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_[0];
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
  if (order_ != o.order_)
    throw std::invalid_argument("Cyc: mixed cyclotomic orders");
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
  if (order_ != o.order_)
    throw std::invalid_argument("Cyc: mixed cyclotomic orders");
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

void Cyc::reduce_from(std::vector<Rational>& raw) {
  const FieldContext& ctx = FieldContext::get(order_);
  const unsigned d = ctx.degree;
  for (size_t k = raw.size(); k-- > d;) {
    if (raw[k] != 0) {
      const std::vector<Rational>& row = ctx.xpow[k - d];
      for (unsigned i = 0; i < d; ++i) raw[i] += raw[k] * row[i];
      raw[k] = 0;
    }
  }
  for (unsigned i = 0; i < d; ++i) coeffs_[i] = raw[i];
}

Cyc Cyc::operator*(const Cyc& o) const {
  if (order_ != o.order_)
    throw std::invalid_argument("Cyc: mixed cyclotomic orders");
  const unsigned d = coeffs_.size();
  std::vector<Rational> raw(2 * d - 1, Rational(0));
  for (unsigned i = 0; i < d; ++i) {
    if (coeffs_[i] == 0) continue;
    for (unsigned j = 0; j < d; ++j) {
      if (o.coeffs_[j] == 0) continue;
      raw[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  Cyc r(order_);
  r.reduce_from(raw);
  return r;
}

Cyc Cyc::operator+(const Cyc& o) const {
  Cyc r = *this;
  r += o;
  return r;
}

Cyc Cyc::operator-(const Cyc& o) const {
  Cyc r = *this;
  r -= o;
  return r;
}

Cyc& Cyc::operator*=(const Cyc& o) {
  *this = *this * o;
  return *this;
}

bool Cyc::operator==(const Cyc& o) const {
  return order_ == o.order_ && coeffs_ == o.coeffs_;
}

bool Cyc::operator<(const Cyc& o) const {
  if (order_ != o.order_) return order_ < o.order_;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    int c = cmp(coeffs_[i], o.coeffs_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw std::domain_error("Cyc: inverse of zero");
  if (is_rational()) {
    Cyc r(order_);
    r.coeffs_[0] = 1 / coeffs_[0];
    return r;
  }
  // Extended Euclid in Q[x] between this (as a polynomial) and Phi_n.
  const FieldContext& ctx = FieldContext::get(order_);
  std::vector<Rational> r0(ctx.phi_coeffs.size());
  for (size_t i = 0; i < r0.size(); ++i) r0[i] = Rational(ctx.phi_coeffs[i]);
  std::vector<Rational> r1 = coeffs_;
  while (r1.size() > 1 && r1.back() == 0) r1.pop_back();
  std::vector<Rational> s0(1, Rational(0)), s1(1, Rational(1));  // coeff of a

  auto degree_of = [](const std::vector<Rational>& p) -> long {
    for (size_t i = p.size(); i-- > 0;)
      if (p[i] != 0) return static_cast<long>(i);
    return -1;
  };

  while (degree_of(r1) > 0) {
    long d0 = degree_of(r0), d1 = degree_of(r1);
    std::vector<Rational> q(d0 - d1 + 1, Rational(0));
    std::vector<Rational> rem = r0;
    for (long i = d0; i >= d1; --i) {
      if (rem[i] == 0) continue;
      Rational c = rem[i] / r1[d1];
      q[i - d1] = c;
      for (long j = 0; j <= d1; ++j) rem[i - d1 + j] -= c * r1[j];
    }
    std::vector<Rational> s2(std::max(s0.size(), s1.size() + q.size()),
                             Rational(0));
    for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
    for (size_t i = 0; i < q.size(); ++i)
      for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    r0 = std::move(r1);
    r1 = std::move(rem);
    while (r1.size() > 1 && r1.back() == 0) r1.pop_back();
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  long d1 = degree_of(r1);
  if (d1 != 0)
    throw std::domain_error("Cyc: element not invertible (zero divisor?)");
  Rational lead = r1[0];
  std::vector<Rational> raw(std::max<size_t>(s1.size(), 1), Rational(0));
  for (size_t i = 0; i < s1.size(); ++i) raw[i] = s1[i] / lead;
  raw.resize(2 * ctx.degree - 1, Rational(0));
  Cyc res(order_);
  res.reduce_from(raw);
  return res;
}

Cyc Cyc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyc base = *this;
  Cyc acc = Cyc::one(order_);
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) acc *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return acc;
}

std::optional<unsigned> Cyc::root_order() const {
  if (is_zero()) return std::nullopt;
  unsigned bound = lcm_u(2, order_);
  for (unsigned d : divisors(bound)) {
    if (pow(d).is_one()) return d;
  }
  return std::nullopt;
}

Cyc Cyc::embed(unsigned m) const {
  if (m % order_ != 0)
    throw std::invalid_argument("Cyc::embed: target order not a multiple");
  if (m == order_) return *this;
  unsigned step = m / order_;
  Cyc res = Cyc::zero(m);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    res += Cyc::root(m, static_cast<long>(i * step)) * Cyc(m, coeffs_[i]);
  }
  return res;
}

std::string Cyc::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational a = c;
    bool neg = a < 0;
    if (neg) a = -a;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace nlift
