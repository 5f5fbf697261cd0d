#include "nlift/expr.hpp"

#include <cctype>
#include <sstream>

#include "nlift/rewrite.hpp"

namespace nlift {

namespace {

SmashElement scalar_elem(const YDDatum& d, const Cyc& c) {
  return SmashElement::unit(d) * c;
}

std::optional<Cyc> as_scalar(const SmashElement& a, unsigned amb) {
  if (a.is_zero()) return Cyc::zero(amb);
  if (a.size() != 1) return std::nullopt;
  const auto& [k, c] = *a.terms().begin();
  if (!k.word.empty() || !k.grp.is_identity()) return std::nullopt;
  return c;
}

SmashElement smash_pow(const YDDatum& d, const SmashElement& a, unsigned n) {
  SmashElement p = SmashElement::unit(d);
  for (unsigned i = 0; i < n; ++i) p = smash_multiply(d, p, a);
  return p;
}

class Parser {
 public:
  Parser(const YDDatum& d, unsigned zeta_order, const std::string& s,
         const ExprEnv& env)
      : d_(d), zeta_(zeta_order ? zeta_order : d.ambient_order()), s_(s),
        env_(env) {}

  SmashElement parse() {
    SmashElement e = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return e;
  }

  ParsedExpr parse_factored() {
    // try: single atom ^ N spanning the whole input
    size_t save = pos_;
    try {
      SmashElement a = atom();
      skip();
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        long e = integer();
        skip();
        if (pos_ == s_.size() && e >= 2 && a.degree() >= 1)
          return {a, static_cast<unsigned>(e)};
      }
    } catch (const ExprError&) {
    }
    pos_ = save;
    return {parse(), 1};
  }

 private:
  [[noreturn]] void fail(const std::string& m) const {
    throw ExprError(m + " at column " + std::to_string(pos_ + 1) + " in \"" +
                    s_ + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  long integer() {
    skip();
    bool neg = eat('-');
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected integer");
    long v = 0;
    while (pos_ < s_.size() &&
           std::isdigit(static_cast<unsigned char>(s_[pos_])))
      v = v * 10 + (s_[pos_++] - '0');
    return neg ? -v : v;
  }

  SmashElement expr() {
    skip();
    bool neg = eat('-');
    SmashElement e = term();
    if (neg) e = -e;
    for (;;) {
      skip();
      if (eat('+'))
        e += term();
      else if (pos_ < s_.size() && s_[pos_] == '-' ) {
        ++pos_;
        e -= term();
      } else
        return e;
    }
  }

  SmashElement term() {
    SmashElement e = factor();
    while (eat('*')) e = smash_multiply(d_, e, factor());
    return e;
  }

  SmashElement factor() {
    SmashElement a = atom();
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      long e = integer();
      if (e >= 0) return smash_pow(d_, a, static_cast<unsigned>(e));
      std::optional<SmashElement> inv;
      try {
        inv = group_algebra_inverse(d_, a);
      } catch (const std::exception&) {
      }
      if (!inv) fail("negative power of a non-invertible element");
      return smash_pow(d_, *inv, static_cast<unsigned>(-e));
    }
    return a;
  }

  Cyc scalar_of(const SmashElement& a) {
    auto c = as_scalar(a, d_.ambient_order());
    if (!c) fail("expected a scalar");
    return *c;
  }

  SmashElement atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    unsigned amb = d_.ambient_order();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long num = integer();
      mpz_class den = 1;
      if (eat('/')) den = integer();
      if (den == 0) fail("zero denominator");
      Rational r(num);
      r /= Rational(den);
      r.canonicalize();
      return scalar_elem(d_, Cyc(amb, r));
    }
    if (c == '(') {
      ++pos_;
      SmashElement e = expr();
      expect(')');
      return e;
    }
    if (c == '[') {
      ++pos_;
      SmashElement a = expr();
      expect(',');
      SmashElement b = expr();
      skip();
      if (eat(';')) {
        Cyc q = scalar_of(expr());
        expect(']');
        return q_bracket(d_, a, b, q);
      }
      expect(']');
      return braided_bracket(d_, a, b);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
              s_[pos_] == '_'))
        ++pos_;
      std::string id = s_.substr(start, pos_ - start);
      if (id == "z") {
        if (amb % zeta_ != 0) fail("zeta order does not divide the ambient");
        return scalar_elem(d_, Cyc::root(amb, amb / zeta_));
      }
      if (id == "zeta") {
        expect('(');
        long n = integer();
        expect(')');
        if (n <= 0 || amb % n != 0)
          fail("zeta order does not divide the ambient");
        return scalar_elem(d_, Cyc::root(amb, amb / n));
      }
      if (id == "g" && pos_ < s_.size() && s_[pos_] == '[') {
        ++pos_;
        std::vector<long> v;
        v.push_back(integer());
        while (eat(',')) v.push_back(integer());
        expect(']');
        if (v.size() != d_.group().rank()) fail("group vector rank mismatch");
        return SmashElement::group_term(d_, GroupElement(d_.group(), v));
      }
      if (id.size() >= 2 && (id[0] == 'x' || id[0] == 'g') &&
          std::isdigit(static_cast<unsigned char>(id[1])) &&
          env_.find(id) == env_.end()) {
        unsigned i = 0;
        bool digits = true;
        for (size_t k = 1; k < id.size(); ++k) {
          if (!std::isdigit(static_cast<unsigned char>(id[k]))) {
            digits = false;
            break;
          }
          i = i * 10 + (id[k] - '0');
        }
        if (digits) {
          if (i < 1 || i > d_.theta()) fail("generator index out of range");
          return id[0] == 'x' ? SmashElement::letter(d_, i - 1)
                              : SmashElement::group_term(d_, d_.g(i - 1));
        }
      }
      if (id.size() == 3 && id[0] == 'q' &&
          std::isdigit(static_cast<unsigned char>(id[1])) &&
          std::isdigit(static_cast<unsigned char>(id[2])) &&
          env_.find(id) == env_.end()) {
        unsigned i = id[1] - '0', j = id[2] - '0';
        if (i < 1 || i > d_.theta() || j < 1 || j > d_.theta())
          fail("braiding index out of range");
        return scalar_elem(d_, d_.q(i - 1, j - 1));
      }
      auto it = env_.find(id);
      if (it == env_.end()) fail("unknown name '" + id + "'");
      return it->second;
    }
    fail("unexpected character");
  }

  const YDDatum& d_;
  unsigned zeta_;
  const std::string& s_;
  const ExprEnv& env_;
  size_t pos_ = 0;
};

}  // namespace

SmashElement parse_expr(const YDDatum& d, unsigned zeta_order,
                        const std::string& text, const ExprEnv& env) {
  return Parser(d, zeta_order, text, env).parse();
}

ParsedExpr parse_expr_factored(const YDDatum& d, unsigned zeta_order,
                               const std::string& text, const ExprEnv& env) {
  return Parser(d, zeta_order, text, env).parse_factored();
}

std::string print_cyc(const Cyc& c) {
  if (auto r = c.as_rational()) return r->get_str();
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (size_t k = 0; k < c.coeffs().size(); ++k) {
    Rational r = c.coeffs()[k];
    if (r == 0) continue;
    if (!first)
      os << (r < 0 ? " - " : " + ");
    else if (r < 0)
      os << "-";
    first = false;
    if (r < 0) r = -r;
    os << r.get_str();
    if (k > 0) os << "*zeta(" << c.order() << ")^" << k;
  }
  os << ")";
  return os.str();
}

std::string print_word(const Word& w) {
  std::ostringstream os;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (i) os << "*";
    os << "x" << static_cast<unsigned>(w[i]) + 1;
    if (j - i > 1) os << "^" << j - i;
    i = j;
  }
  return os.str();
}

std::string print_expr(const YDDatum& d, const SmashElement& a) {
  (void)d;
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : a.terms()) {
    // pull a leading rational sign out of the coefficient so the printed
    // form stays inside the expression grammar (no "+ -1*..." terms)
    Cyc coeff = c;
    bool negative = false;
    if (auto r = coeff.as_rational(); r && *r < 0) {
      negative = true;
      coeff = -coeff;
    }
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    std::vector<std::string> parts;
    if (!coeff.is_one() || (k.word.empty() && k.grp.is_identity()))
      parts.push_back(print_cyc(coeff));
    if (!k.word.empty()) parts.push_back(print_word(k.word));
    if (!k.grp.is_identity()) {
      std::ostringstream gs;
      gs << "g[";
      for (size_t i = 0; i < k.grp.exponents().size(); ++i)
        gs << (i ? "," : "") << k.grp.exponents()[i];
      gs << "]";
      parts.push_back(gs.str());
    }
    for (size_t i = 0; i < parts.size(); ++i) os << (i ? "*" : "") << parts[i];
  }
  return os.str();
}

}  // namespace nlift
