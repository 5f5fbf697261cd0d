#include "nlift/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace nlift {

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ".";
    os << "x" << static_cast<int>(w[i]) + 1;
  }
  return os.str();
}

SmashElement SmashElement::term(Word w, GroupElement g, Cyc c) {
  SmashElement e;
  if (!c.is_zero()) e.terms_[{std::move(w), std::move(g)}] = std::move(c);
  return e;
}

SmashElement SmashElement::unit(const YDDatum& d) {
  return term({}, GroupElement::identity(d.group()),
              Cyc::one(d.ambient_order()));
}

SmashElement SmashElement::letter(const YDDatum& d, unsigned i) {
  return term({static_cast<uint8_t>(i)}, GroupElement::identity(d.group()),
              Cyc::one(d.ambient_order()));
}

SmashElement SmashElement::group_term(const YDDatum& d, GroupElement g) {
  return term({}, std::move(g), Cyc::one(d.ambient_order()));
}

void SmashElement::add_term(const SmashKey& k, const Cyc& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SmashElement SmashElement::operator+(const SmashElement& o) const {
  SmashElement r(*this);
  r += o;
  return r;
}

SmashElement SmashElement::operator-(const SmashElement& o) const {
  SmashElement r(*this);
  r -= o;
  return r;
}

SmashElement SmashElement::operator-() const {
  SmashElement r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

SmashElement& SmashElement::operator+=(const SmashElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

SmashElement& SmashElement::operator-=(const SmashElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

SmashElement SmashElement::operator*(const Cyc& c) const {
  SmashElement r;
  if (c.is_zero()) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

unsigned SmashElement::degree() const {
  unsigned deg = 0;
  for (const auto& [k, c] : terms_)
    deg = std::max<unsigned>(deg, k.word.size());
  return deg;
}

bool SmashElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  size_t len = terms_.begin()->first.word.size();
  for (const auto& [k, c] : terms_)
    if (k.word.size() != len) return false;
  return true;
}

std::string SmashElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*" << word_to_string(k.word);
    if (!k.grp.is_identity()) os << "*g" << k.grp.to_string();
  }
  return os.str();
}

TensorElement TensorElement::simple(const SmashElement& a,
                                    const SmashElement& b) {
  TensorElement r;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) r.add_term({ka, kb}, ca * cb);
  return r;
}

void TensorElement::add_term(const Key& k, const Cyc& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
  TensorElement r(*this);
  r += o;
  return r;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
  TensorElement r(*this);
  r -= o;
  return r;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

TensorElement TensorElement::operator*(const Cyc& c) const {
  TensorElement r;
  if (c.is_zero()) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

std::string TensorElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*[" << word_to_string(k.first.word) << "*g"
       << k.first.grp.to_string() << " (x) " << word_to_string(k.second.word)
       << "*g" << k.second.grp.to_string() << "]";
  }
  return os.str();
}

GroupElement word_group(const YDDatum& d, const Word& w) {
  GroupElement g = GroupElement::identity(d.group());
  for (uint8_t i : w) g = g * d.g(i);
  return g;
}

Character word_character(const YDDatum& d, const Word& w) {
  Character c = Character::trivial(d.group());
  for (uint8_t i : w) c = c * d.chi(i);
  return c;
}

Cyc word_character_value(const YDDatum& d, const Word& w,
                         const GroupElement& g) {
  if (w.empty()) return Cyc::one(d.ambient_order());
  return d.evaluate(word_character(d, w), g);
}

SmashElement smash_multiply(const YDDatum& d, const SmashElement& a,
                            const SmashElement& b) {
  SmashElement r;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      Cyc coeff = ca * cb * word_character_value(d, kb.word, ka.grp);
      Word w = ka.word;
      w.insert(w.end(), kb.word.begin(), kb.word.end());
      r.add_term({std::move(w), ka.grp * kb.grp}, coeff);
    }
  }
  return r;
}

TensorElement tensor_multiply(const YDDatum& d, const TensorElement& a,
                              const TensorElement& b) {
  TensorElement r;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      Cyc coeff = ca * cb *
                  word_character_value(d, kb.first.word, ka.first.grp) *
                  word_character_value(d, kb.second.word, ka.second.grp);
      Word w1 = ka.first.word;
      w1.insert(w1.end(), kb.first.word.begin(), kb.first.word.end());
      Word w2 = ka.second.word;
      w2.insert(w2.end(), kb.second.word.begin(), kb.second.word.end());
      r.add_term({{std::move(w1), ka.first.grp * kb.first.grp},
                  {std::move(w2), ka.second.grp * kb.second.grp}},
                 coeff);
    }
  }
  return r;
}

TensorElement coproduct(const YDDatum& d, const SmashElement& a) {
  TensorElement r;
  GroupElement id = GroupElement::identity(d.group());
  for (const auto& [k, c] : a.terms()) {
    // Delta(w (x) g) = Delta(x_{i1}) ... Delta(x_{ik}) (g (x) g).
    TensorElement t = TensorElement::simple(
        SmashElement::term({}, id, Cyc(d.ambient_order(), Rational(1))),
        SmashElement::unit(d));
    for (uint8_t i : k.word) {
      TensorElement dxi =
          TensorElement::simple(SmashElement::letter(d, i),
                                SmashElement::unit(d)) +
          TensorElement::simple(SmashElement::group_term(d, d.g(i)),
                                SmashElement::letter(d, i));
      t = tensor_multiply(d, t, dxi);
    }
    TensorElement gg = TensorElement::simple(
        SmashElement::group_term(d, k.grp), SmashElement::group_term(d, k.grp));
    t = tensor_multiply(d, t, gg);
    r += t * c;
  }
  return r;
}

Cyc counit(const YDDatum& d, const SmashElement& a) {
  Cyc r = Cyc::zero(d.ambient_order());
  for (const auto& [k, c] : a.terms())
    if (k.word.empty()) r += c;
  return r;
}

SmashElement antipode(const YDDatum& d, const SmashElement& a) {
  SmashElement r;
  for (const auto& [k, c] : a.terms()) {
    SmashElement t =
        SmashElement::group_term(d, k.grp.inverse(d.group())) * c;
    // anti-homomorphism: S(x_{i1}...x_{ik} g) = S(g) S(x_{ik}) ... S(x_{i1}),
    // with S(x_i) = -g_i^{-1} x_i = -chi_i(g_i^{-1}) x_i g_i^{-1}.
    for (auto it = k.word.rbegin(); it != k.word.rend(); ++it) {
      uint8_t i = *it;
      GroupElement gi_inv = d.g(i).inverse(d.group());
      SmashElement sxi =
          SmashElement::term({i}, gi_inv, -d.evaluate(d.chi(i), gi_inv));
      t = smash_multiply(d, t, sxi);
    }
    r += t;
  }
  return r;
}

SmashElement q_bracket(const YDDatum& d, const SmashElement& a,
                       const SmashElement& b, const Cyc& q) {
  return smash_multiply(d, a, b) - smash_multiply(d, b, a) * q;
}

SmashElement braided_bracket(const YDDatum& d, const SmashElement& a,
                             const SmashElement& b) {
  if (a.is_zero() || b.is_zero()) return SmashElement::zero();
  // Multidegree-homogeneous operands: every term's word has the same weight,
  // so the braiding scalar q = chi_{w_b}(g_{w_a}) reads off the first terms.
  const Word& wa = a.terms().begin()->first.word;
  const Word& wb = b.terms().begin()->first.word;
  Cyc q = word_character_value(d, wb, word_group(d, wa));
  return q_bracket(d, a, b, q);
}

}  // namespace nlift
