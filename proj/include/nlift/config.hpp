#ifndef NLIFT_CONFIG_HPP
#define NLIFT_CONFIG_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nlift/expr.hpp"
#include "nlift/nichols.hpp"

namespace nlift {

/// Parse error with 1-based line number in what().
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& m) : std::runtime_error(m) {}
};

/// Structured-text session description. Global keys, then optional sections
/// [expressions], [relations], [stratification]. Unknown keys are hard
/// errors. Expression values are kept verbatim so parse -> print -> parse is
/// the identity.
struct SessionConfig {
  unsigned zeta_order = 0;    // order of the `z` literal; 0 = ambient
  unsigned ambient_order = 0; // 0 = derived (lcm of group exponent and z)
  std::vector<unsigned> group_factors;         // invariant factors, or empty
  std::vector<std::vector<long>> g_exps;       // one row per generator
  std::vector<std::vector<long>> chi_exps;
  std::vector<std::vector<std::string>> braiding;  // alternative to group/g/chi
  std::vector<std::pair<std::string, std::string>> expressions;
  std::vector<std::pair<std::string, std::string>> relations;
  std::vector<std::vector<std::string>> stratification;  // relation names
  std::vector<unsigned> order_letters;  // 1-based, largest first; empty = x1>x2>..
  unsigned degree_bound = 64;
  std::string cache_dir;
  std::string format = "human";

  bool operator==(const SessionConfig&) const = default;
};

SessionConfig parse_config(const std::string& text);
SessionConfig parse_config_file(const std::string& path);
std::string print_config(const SessionConfig& c);

/// Fully elaborated session.
struct Session {
  YDDatum datum;
  unsigned zeta_order;
  ExprEnv env;  // named expressions and relations
  std::vector<std::pair<std::string, ParsedExpr>> relations;
  Stratification strat;  // strata filled from the config; systems empty
  MonomialOrder order;
  unsigned degree_bound;
  std::string cache_dir;
  std::string format;
};

/// Builds the datum, elaborates every expression in order, and assembles the
/// stratification. Throws ConfigError on semantic errors (undefined names,
/// non-root braiding scalars, rank mismatches).
Session resolve(const SessionConfig& c);

}  // namespace nlift

#endif
