#ifndef NLIFT_ALGEBRA_HPP
#define NLIFT_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nlift/cyclotomic.hpp"
#include "nlift/yddata.hpp"

namespace nlift {

/// Word in the free algebra on x_1..x_theta, letters stored 0-based.
using Word = std::vector<uint8_t>;

std::string word_to_string(const Word& w);

/// Basis element word (x) group of the smash product T(V) # kGamma.
struct SmashKey {
  Word word;
  GroupElement grp;

  bool operator==(const SmashKey& o) const {
    return word == o.word && grp == o.grp;
  }
  bool operator<(const SmashKey& o) const {
    if (word.size() != o.word.size()) return word.size() < o.word.size();
    if (word != o.word) return word < o.word;
    return grp < o.grp;
  }
};

/// Element of T(V) # kGamma: finite linear combination of SmashKeys with
/// cyclotomic coefficients. Zero coefficients are never stored.
class SmashElement {
 public:
  using Terms = std::map<SmashKey, Cyc>;

  SmashElement() = default;

  static SmashElement zero() { return SmashElement(); }
  static SmashElement term(Word w, GroupElement g, Cyc c);
  static SmashElement unit(const YDDatum& d);             // empty word, id
  static SmashElement letter(const YDDatum& d, unsigned i);  // x_{i+1}
  static SmashElement group_term(const YDDatum& d, GroupElement g);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add_term(const SmashKey& k, const Cyc& c);  // accumulates, drops zeros

  SmashElement operator+(const SmashElement& o) const;
  SmashElement operator-(const SmashElement& o) const;
  SmashElement operator-() const;
  SmashElement& operator+=(const SmashElement& o);
  SmashElement& operator-=(const SmashElement& o);
  SmashElement operator*(const Cyc& c) const;
  bool operator==(const SmashElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const SmashElement& o) const { return terms_ != o.terms_; }

  /// Maximum word length over all terms; 0 for the zero element.
  unsigned degree() const;
  /// True if every term's word has the same length.
  bool is_homogeneous() const;

  std::string to_string() const;

 private:
  Terms terms_;
};

/// Element of (T(V)#kGamma) tensor (T(V)#kGamma).
class TensorElement {
 public:
  using Key = std::pair<SmashKey, SmashKey>;
  using Terms = std::map<Key, Cyc>;

  TensorElement() = default;

  static TensorElement simple(const SmashElement& a, const SmashElement& b);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add_term(const Key& k, const Cyc& c);

  TensorElement operator+(const TensorElement& o) const;
  TensorElement operator-(const TensorElement& o) const;
  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement operator*(const Cyc& c) const;
  bool operator==(const TensorElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const TensorElement& o) const { return terms_ != o.terms_; }

  std::string to_string() const;

 private:
  Terms terms_;
};

/// Group element g_w = g_{i1} ... g_{ik} and character chi_w = chi_{i1} ...
/// chi_{ik} attached to a word.
GroupElement word_group(const YDDatum& d, const Word& w);
Character word_character(const YDDatum& d, const Word& w);

/// chi_w(g) for a word w, as an ambient scalar.
Cyc word_character_value(const YDDatum& d, const Word& w,
                         const GroupElement& g);

/// (w (x) g)(w' (x) g') = chi_{w'}(g) (w w' (x) g g').
SmashElement smash_multiply(const YDDatum& d, const SmashElement& a,
                            const SmashElement& b);

/// Componentwise product in the tensor-square Hopf algebra.
TensorElement tensor_multiply(const YDDatum& d, const TensorElement& a,
                              const TensorElement& b);

/// Delta(x_i) = x_i (x) 1 + g_i (x) x_i, Delta(g) = g (x) g, extended as an
/// algebra map.
TensorElement coproduct(const YDDatum& d, const SmashElement& a);

/// Counit: picks out coefficients of group-like terms.
Cyc counit(const YDDatum& d, const SmashElement& a);

/// Antipode: S(g) = g^{-1}, S(x_i) = -g_i^{-1} x_i, anti-algebra map.
SmashElement antipode(const YDDatum& d, const SmashElement& a);

/// a b - q b a.
SmashElement q_bracket(const YDDatum& d, const SmashElement& a,
                       const SmashElement& b, const Cyc& q);

/// [a, b; chi_b(g_a)] for multidegree-homogeneous a, b. Iterated brackets
/// used throughout: with x_i = letter(d, i-1),
///   x12    = [x1, x2; q12]
///   x112   = [x1, x12; q11 q12]
///   x1112  = [x1, x112; q11^2 q12]
///   x122   = [x12, x2; q12 q22]
///   x1122  = [x1, x122; q11 q12^2]
SmashElement braided_bracket(const YDDatum& d, const SmashElement& a,
                             const SmashElement& b);

}  // namespace nlift

#endif
