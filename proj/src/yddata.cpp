#include "nlift/yddata.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nlift {

unsigned long AbelianGroup::order() const {
  unsigned long n = 1;
  for (unsigned m : factors) n *= m;
  return n;
}

unsigned AbelianGroup::exponent() const {
  unsigned e = 1;
  for (unsigned m : factors) e = lcm_u(e, m);
  return e;
}

static unsigned reduce_mod(long v, unsigned m) {
  long r = v % static_cast<long>(m);
  if (r < 0) r += m;
  return static_cast<unsigned>(r);
}

GroupElement::GroupElement(const AbelianGroup& group,
                           std::vector<long> exponents)
    : moduli_(group.factors) {
  if (exponents.size() != group.factors.size())
    throw std::invalid_argument("group element rank mismatch");
  exps_.resize(exponents.size());
  for (size_t j = 0; j < exponents.size(); ++j)
    exps_[j] = reduce_mod(exponents[j], moduli_[j]);
}

GroupElement GroupElement::identity(const AbelianGroup& group) {
  return GroupElement(group, std::vector<long>(group.factors.size(), 0));
}

bool GroupElement::is_identity() const {
  for (unsigned e : exps_)
    if (e != 0) return false;
  return true;
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  if (moduli_ != o.moduli_)
    throw std::invalid_argument("group element moduli mismatch");
  GroupElement r(*this);
  for (size_t j = 0; j < exps_.size(); ++j)
    r.exps_[j] = (exps_[j] + o.exps_[j]) % moduli_[j];
  return r;
}

GroupElement GroupElement::inverse(const AbelianGroup& group) const {
  return pow(group, -1);
}

GroupElement GroupElement::pow(const AbelianGroup& group, long e) const {
  std::vector<long> out(exps_.size());
  for (size_t j = 0; j < exps_.size(); ++j)
    out[j] = static_cast<long>(exps_[j] % group.factors[j]) *
             (e % static_cast<long>(group.factors[j]));
  return GroupElement(group, std::move(out));
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t j = 0; j < exps_.size(); ++j) {
    if (j) os << ",";
    os << exps_[j];
  }
  os << ")";
  return os.str();
}

Character::Character(const AbelianGroup& group, std::vector<long> exponents)
    : moduli_(group.factors), exponent_(group.exponent()) {
  if (exponents.size() != group.factors.size())
    throw std::invalid_argument("character rank mismatch");
  exps_.resize(exponents.size());
  // chi is determined by its exponents mod the order of each generator.
  for (size_t j = 0; j < exponents.size(); ++j)
    exps_[j] = reduce_mod(exponents[j], moduli_[j]);
}

Character Character::trivial(const AbelianGroup& group) {
  return Character(group, std::vector<long>(group.factors.size(), 0));
}

Character Character::operator*(const Character& o) const {
  if (moduli_ != o.moduli_)
    throw std::invalid_argument("character moduli mismatch");
  Character r(*this);
  for (size_t j = 0; j < exps_.size(); ++j)
    r.exps_[j] = (exps_[j] + o.exps_[j]) % moduli_[j];
  return r;
}

Character Character::inverse() const { return pow(-1); }

Character Character::pow(long e) const {
  Character r(*this);
  for (size_t j = 0; j < exps_.size(); ++j) {
    long m = static_cast<long>(moduli_[j]);
    r.exps_[j] = reduce_mod(static_cast<long>(exps_[j]) * (e % m), moduli_[j]);
  }
  return r;
}

unsigned Character::value_exponent(const GroupElement& g) const {
  if (g.exponents().size() != exps_.size())
    throw std::invalid_argument("character/element rank mismatch");
  unsigned long s = 0;
  for (size_t j = 0; j < exps_.size(); ++j) {
    unsigned long w = exponent_ / moduli_[j];
    s += static_cast<unsigned long>(exps_[j]) % moduli_[j] *
         (g.exponents()[j] % moduli_[j]) % exponent_ * w;
  }
  return static_cast<unsigned>(s % exponent_);
}

std::string Character::to_string() const {
  std::ostringstream os;
  os << "chi[";
  for (size_t j = 0; j < exps_.size(); ++j) {
    if (j) os << ",";
    os << exps_[j];
  }
  os << "]";
  return os.str();
}

YDDatum::YDDatum(AbelianGroup group,
                 std::vector<std::pair<GroupElement, Character>> pairs,
                 unsigned ambient_order)
    : group_(std::move(group)),
      pairs_(std::move(pairs)),
      theta_(pairs_.size()),
      ambient_(ambient_order) {
  unsigned e = group_.exponent();
  if (ambient_ == 0) ambient_ = e;
  if (ambient_ % e != 0)
    throw std::invalid_argument("ambient order must be divisible by the group exponent");
  q_.reserve(theta_ * theta_);
  for (unsigned i = 0; i < theta_; ++i)
    for (unsigned j = 0; j < theta_; ++j)
      q_.push_back(evaluate(pairs_[j].second, pairs_[i].first));
}

Cyc YDDatum::evaluate(const Character& chi, const GroupElement& g) const {
  unsigned e = group_.exponent();
  unsigned s = chi.value_exponent(g);
  // zeta_e^s = zeta_ambient^(s * ambient/e)
  return Cyc::root(ambient_, static_cast<long>(s) * (ambient_ / e));
}

bool YDDatum::is_trivial_on_group(const Character& chi) const {
  for (unsigned e : chi.exponents())
    if (e != 0) return false;
  return true;
}

bool YDDatum::check_yd_pairs() const {
  // Over an abelian group every (g, chi) with g in Gamma and chi a character
  // is a YD pair; verify g_i lies in the group and chi_i is well defined.
  for (const auto& [g, chi] : pairs_) {
    if (g.exponents().size() != group_.rank()) return false;
    if (chi.exponents().size() != group_.rank()) return false;
  }
  return true;
}

std::string YDDatum::canonical_string() const {
  std::ostringstream os;
  os << "group[";
  for (size_t j = 0; j < group_.factors.size(); ++j) {
    if (j) os << ",";
    os << group_.factors[j];
  }
  os << "];ambient=" << ambient_ << ";";
  for (unsigned i = 0; i < theta_; ++i)
    os << "g" << i + 1 << "=" << pairs_[i].first.to_string()
       << ",chi" << i + 1 << "=" << pairs_[i].second.to_string() << ";";
  return os.str();
}

YDDatum minimal_realization(const std::vector<std::vector<Cyc>>& q,
                            unsigned ambient_order) {
  unsigned theta = q.size();
  if (theta == 0) throw std::invalid_argument("empty braiding matrix");
  for (const auto& row : q)
    if (row.size() != theta)
      throw std::invalid_argument("braiding matrix must be square");

  std::vector<std::vector<unsigned>> ord(theta, std::vector<unsigned>(theta));
  for (unsigned i = 0; i < theta; ++i)
    for (unsigned j = 0; j < theta; ++j) {
      auto o = q[i][j].root_order();
      if (!o)
        throw std::invalid_argument("braiding entry is not a root of unity");
      ord[i][j] = *o;
    }

  AbelianGroup group;
  group.factors.resize(theta);
  for (unsigned i = 0; i < theta; ++i) {
    unsigned n = 1;
    for (unsigned j = 0; j < theta; ++j) n = lcm_u(n, ord[i][j]);
    group.factors[i] = n;
  }

  unsigned e = group.exponent();
  unsigned ambient = ambient_order ? ambient_order : e;
  ambient = lcm_u(ambient, e);
  for (unsigned i = 0; i < theta; ++i)
    for (unsigned j = 0; j < theta; ++j) ambient = lcm_u(ambient, ord[i][j]);

  // q_ij = zeta_{ord}^{k_ij}; find k_ij by discrete log over the root's order.
  std::vector<std::pair<GroupElement, Character>> pairs;
  std::vector<std::vector<long>> chi_exps(theta, std::vector<long>(theta, 0));
  for (unsigned j = 0; j < theta; ++j) {
    for (unsigned i = 0; i < theta; ++i) {
      unsigned n_i = group.factors[i];
      // chi_j(g_i) = q_ij must equal zeta_{n_i}^{a}; solve for a by discrete
      // log in a field containing both the entry and zeta_{n_i}.
      unsigned M = lcm_u(q[i][j].order(), n_i);
      long a = -1;
      Cyc target = q[i][j].embed(M);
      Cyc zni = Cyc::root(M, M / n_i);
      Cyc acc = Cyc::one(M);
      for (unsigned k = 0; k < n_i; ++k) {
        if (acc == target) {
          a = static_cast<long>(k);
          break;
        }
        acc *= zni;
      }
      if (a < 0)
        throw std::invalid_argument("braiding entry order does not divide generator order");
      chi_exps[j][i] = a;
    }
  }
  for (unsigned i = 0; i < theta; ++i) {
    std::vector<long> ge(theta, 0);
    ge[i] = 1;
    pairs.emplace_back(GroupElement(group, std::move(ge)),
                       Character(group, chi_exps[i]));
  }
  return YDDatum(std::move(group), std::move(pairs), ambient);
}

}  // namespace nlift
