#ifndef NLIFT_YDDATA_HPP
#define NLIFT_YDDATA_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "nlift/cyclotomic.hpp"

namespace nlift {

/// Gamma = Z_{m_1} x ... x Z_{m_k}, given by its invariant factors.
struct AbelianGroup {
  std::vector<unsigned> factors;

  unsigned rank() const { return factors.size(); }
  unsigned long order() const;
  unsigned exponent() const;
};

/// Element of an AbelianGroup, exponents reduced componentwise.
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(const AbelianGroup& group, std::vector<long> exponents);

  static GroupElement identity(const AbelianGroup& group);

  const std::vector<unsigned>& exponents() const { return exps_; }
  bool is_identity() const;

  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse(const AbelianGroup& group) const;
  GroupElement pow(const AbelianGroup& group, long e) const;
  bool operator==(const GroupElement& o) const { return exps_ == o.exps_; }
  bool operator!=(const GroupElement& o) const { return exps_ != o.exps_; }
  bool operator<(const GroupElement& o) const { return exps_ < o.exps_; }

  std::string to_string() const;

 private:
  std::vector<unsigned> exps_;     // canonical residues
  std::vector<unsigned> moduli_;   // copy of group factors, for reduction
};

/// Character of Gamma: chi(g) = zeta_e^{sum_j a_j b_j (e/m_j)} where e is the
/// group exponent, a the character exponents and b the element exponents.
class Character {
 public:
  Character() = default;
  Character(const AbelianGroup& group, std::vector<long> exponents);

  static Character trivial(const AbelianGroup& group);

  const std::vector<unsigned>& exponents() const { return exps_; }

  Character operator*(const Character& o) const;
  Character inverse() const;
  Character pow(long e) const;
  bool operator==(const Character& o) const { return exps_ == o.exps_; }
  bool operator<(const Character& o) const { return exps_ < o.exps_; }

  /// Exponent s with chi(g) = zeta_e^s, 0 <= s < e.
  unsigned value_exponent(const GroupElement& g) const;

  std::string to_string() const;

 private:
  std::vector<unsigned> exps_;    // reduced mod e
  std::vector<unsigned> moduli_;  // group factors
  unsigned exponent_ = 1;         // group exponent e
};

/// Diagonal Yetter-Drinfeld datum: group, pairs (g_i, chi_i) and the ambient
/// cyclotomic order every scalar lives in.
class YDDatum {
 public:
  YDDatum(AbelianGroup group,
          std::vector<std::pair<GroupElement, Character>> pairs,
          unsigned ambient_order = 0);

  const AbelianGroup& group() const { return group_; }
  unsigned theta() const { return pairs_.size(); }
  unsigned ambient_order() const { return ambient_; }
  const GroupElement& g(unsigned i) const { return pairs_[i].first; }
  const Character& chi(unsigned i) const { return pairs_[i].second; }

  /// chi(g) as an element of the ambient cyclotomic field.
  Cyc evaluate(const Character& chi, const GroupElement& g) const;
  /// Braiding entry q_ij = chi_j(g_i).
  const Cyc& q(unsigned i, unsigned j) const { return q_[i * theta_ + j]; }

  bool is_trivial_on_group(const Character& chi) const;

  /// YD-pair condition for abelian groups: chi(h) g = chi(h) g holds by
  /// construction; checked literally on all generators h of Gamma.
  bool check_yd_pairs() const;

  std::string canonical_string() const;  // for cache hashing

 private:
  AbelianGroup group_;
  std::vector<std::pair<GroupElement, Character>> pairs_;
  unsigned theta_;
  unsigned ambient_;
  std::vector<Cyc> q_;
};

/// Gamma = Z_{n_1} x ... x Z_{n_theta} with n_i = lcm_j ord(q_ij), g_i the
/// i-th generator and chi_j(g_i) = q_ij. Throws if some entry is not a root
/// of unity.
YDDatum minimal_realization(const std::vector<std::vector<Cyc>>& q,
                            unsigned ambient_order = 0);

}  // namespace nlift

#endif
