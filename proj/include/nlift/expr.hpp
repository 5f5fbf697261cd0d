#ifndef NLIFT_EXPR_HPP
#define NLIFT_EXPR_HPP

#include <map>
#include <stdexcept>
#include <string>

#include "nlift/algebra.hpp"

namespace nlift {

/// Named elements usable inside expressions.
using ExprEnv = std::map<std::string, SmashElement>;

/// Syntax or elaboration error, with a 1-based column in what().
struct ExprError : std::runtime_error {
  explicit ExprError(const std::string& m) : std::runtime_error(m) {}
};

/// Grammar, over a fixed datum:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ['^' ['-'] integer]      (negative powers: degree 0 only)
///   atom   := rational | 'z' | 'zeta(n)' | 'qIJ' | 'xI' | 'gI' | 'g[v,..]'
///           | '(' expr ')' | '[' expr ',' expr [';' expr] ']' | name
/// `z` is the primitive root of order zeta_order (must divide the ambient
/// order); `zeta(n)` likewise for explicit n; `[a,b]` is the braided bracket
/// and `[a,b;q]` the q-bracket with scalar q.
SmashElement parse_expr(const YDDatum& d, unsigned zeta_order,
                        const std::string& text, const ExprEnv& env = {});

/// Top-level `atom^N` with N >= 2 and a non-scalar base is kept factored so
/// high powers (x12^18) are never expanded in T(V).
struct ParsedExpr {
  SmashElement base;
  unsigned exponent = 1;
};
ParsedExpr parse_expr_factored(const YDDatum& d, unsigned zeta_order,
                               const std::string& text,
                               const ExprEnv& env = {});

/// Canonical re-parseable form: sum of `coeff*word*g[v]` terms with
/// coefficients written in zeta(ambient).
std::string print_expr(const YDDatum& d, const SmashElement& a);
std::string print_word(const Word& w);
std::string print_cyc(const Cyc& c);

}  // namespace nlift

#endif
