#include "nlift/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace nlift {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

/// Split on top-level `delim`, ignoring delimiters nested in [] or ().
std::vector<std::string> split_top(const std::string& s, char delim) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == delim && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(trim(cur));
  return out;
}

/// "[a, b, c]" -> {"a","b","c"}; "" forbidden.
std::vector<std::string> bracket_list(const std::string& s,
                                      const std::string& where) {
  std::string t = trim(s);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw ConfigError(where + ": expected a [..] list, got '" + s + "'");
  std::string inner = trim(t.substr(1, t.size() - 2));
  if (inner.empty()) return {};
  return split_top(inner, ',');
}

long to_long(const std::string& s, const std::string& where) {
  try {
    size_t used = 0;
    long v = std::stol(trim(s), &used);
    if (used != trim(s).size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(where + ": expected an integer, got '" + s + "'");
  }
}

std::vector<long> long_list(const std::string& s, const std::string& where) {
  std::vector<long> out;
  for (const auto& p : bracket_list(s, where)) out.push_back(to_long(p, where));
  return out;
}

std::vector<std::vector<std::string>> nested_list(const std::string& s,
                                                  const std::string& where) {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : bracket_list(s, where))
    out.push_back(bracket_list(row, where));
  return out;
}

bool valid_name(const std::string& n) {
  if (n.empty() || (!std::isalpha(static_cast<unsigned char>(n[0])) &&
                    n[0] != '_'))
    return false;
  for (char c : n)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

SessionConfig parse_config(const std::string& text) {
  SessionConfig c;
  std::istringstream in(text);
  std::string line;
  std::string section;
  unsigned lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string where = "line " + std::to_string(lineno);
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']') {
      section = trim(line.substr(1, line.size() - 2));
      if (section != "expressions" && section != "relations" &&
          section != "stratification")
        throw ConfigError(where + ": unknown section [" + section + "]");
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(where + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (val.empty()) throw ConfigError(where + ": empty value for " + key);
    if (section.empty()) {
      if (key == "zeta_order")
        c.zeta_order = static_cast<unsigned>(to_long(val, where));
      else if (key == "ambient_order")
        c.ambient_order = static_cast<unsigned>(to_long(val, where));
      else if (key == "degree_bound")
        c.degree_bound = static_cast<unsigned>(to_long(val, where));
      else if (key == "group") {
        for (long f : long_list(val, where)) {
          if (f <= 0) throw ConfigError(where + ": invalid factor");
          c.group_factors.push_back(static_cast<unsigned>(f));
        }
      } else if (key == "g") {
        for (const auto& row : bracket_list(val, where))
          c.g_exps.push_back(long_list(row, where));
      } else if (key == "chi") {
        for (const auto& row : bracket_list(val, where))
          c.chi_exps.push_back(long_list(row, where));
      } else if (key == "braiding")
        c.braiding = nested_list(val, where);
      else if (key == "order") {
        for (long l : long_list(val, where)) {
          if (l <= 0) throw ConfigError(where + ": invalid letter index");
          c.order_letters.push_back(static_cast<unsigned>(l));
        }
      } else if (key == "cache_dir")
        c.cache_dir = val;
      else if (key == "format") {
        if (val != "human" && val != "machine")
          throw ConfigError(where + ": format must be human or machine");
        c.format = val;
      } else
        throw ConfigError(where + ": unknown key '" + key + "'");
    } else if (section == "stratification") {
      if (key != "level")
        throw ConfigError(where + ": only 'level = names' allowed here");
      std::vector<std::string> names;
      for (const auto& n : split_top(val, ',')) {
        if (!valid_name(n))
          throw ConfigError(where + ": invalid relation name '" + n + "'");
        names.push_back(n);
      }
      c.stratification.push_back(std::move(names));
    } else {
      if (!valid_name(key))
        throw ConfigError(where + ": invalid name '" + key + "'");
      auto& dst = section == "expressions" ? c.expressions : c.relations;
      for (const auto& [n, v] : c.expressions)
        if (n == key) throw ConfigError(where + ": duplicate name " + key);
      for (const auto& [n, v] : c.relations)
        if (n == key) throw ConfigError(where + ": duplicate name " + key);
      dst.emplace_back(key, val);
    }
  }
  return c;
}

SessionConfig parse_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return parse_config(os.str());
}

std::string print_config(const SessionConfig& c) {
  std::ostringstream os;
  if (c.zeta_order) os << "zeta_order = " << c.zeta_order << "\n";
  if (c.ambient_order) os << "ambient_order = " << c.ambient_order << "\n";
  if (!c.group_factors.empty()) {
    os << "group = [";
    for (size_t i = 0; i < c.group_factors.size(); ++i)
      os << (i ? ", " : "") << c.group_factors[i];
    os << "]\n";
  }
  auto rows = [&os](const char* key, const std::vector<std::vector<long>>& m) {
    if (m.empty()) return;
    os << key << " = [";
    for (size_t i = 0; i < m.size(); ++i) {
      os << (i ? ", " : "") << "[";
      for (size_t j = 0; j < m[i].size(); ++j)
        os << (j ? ", " : "") << m[i][j];
      os << "]";
    }
    os << "]\n";
  };
  rows("g", c.g_exps);
  rows("chi", c.chi_exps);
  if (!c.braiding.empty()) {
    os << "braiding = [";
    for (size_t i = 0; i < c.braiding.size(); ++i) {
      os << (i ? ", " : "") << "[";
      for (size_t j = 0; j < c.braiding[i].size(); ++j)
        os << (j ? ", " : "") << c.braiding[i][j];
      os << "]";
    }
    os << "]\n";
  }
  if (!c.order_letters.empty()) {
    os << "order = [";
    for (size_t i = 0; i < c.order_letters.size(); ++i)
      os << (i ? ", " : "") << c.order_letters[i];
    os << "]\n";
  }
  os << "degree_bound = " << c.degree_bound << "\n";
  if (!c.cache_dir.empty()) os << "cache_dir = " << c.cache_dir << "\n";
  os << "format = " << c.format << "\n";
  auto sect = [&os](const char* name,
                    const std::vector<std::pair<std::string, std::string>>& v) {
    if (v.empty()) return;
    os << "\n[" << name << "]\n";
    for (const auto& [n, e] : v) os << n << " = " << e << "\n";
  };
  sect("expressions", c.expressions);
  sect("relations", c.relations);
  if (!c.stratification.empty()) {
    os << "\n[stratification]\n";
    for (const auto& level : c.stratification) {
      os << "level = ";
      for (size_t i = 0; i < level.size(); ++i)
        os << (i ? ", " : "") << level[i];
      os << "\n";
    }
  }
  return os.str();
}

Session resolve(const SessionConfig& c) {
  bool braided = !c.braiding.empty();
  if (braided == !c.group_factors.empty())
    throw ConfigError("exactly one of 'group' or 'braiding' must be given");
  unsigned zeta = c.zeta_order;
  std::optional<YDDatum> datum;
  if (braided) {
    unsigned amb0 = c.ambient_order ? c.ambient_order : (zeta ? zeta : 2);
    AbelianGroup trivial{{1}};
    YDDatum scalars(trivial, {}, amb0);
    std::vector<std::vector<Cyc>> q;
    for (const auto& row : c.braiding) {
      if (row.size() != c.braiding.size())
        throw ConfigError("braiding matrix must be square");
      std::vector<Cyc> r;
      for (const auto& entry : row) {
        SmashElement e = parse_expr(scalars, zeta, entry);
        if (e.size() != 1 || !e.terms().begin()->first.word.empty())
          throw ConfigError("braiding entry is not a scalar: " + entry);
        r.push_back(e.terms().begin()->second);
      }
      q.push_back(std::move(r));
    }
    try {
      datum = minimal_realization(q, c.ambient_order);
    } catch (const std::exception& ex) {
      throw ConfigError(std::string("braiding: ") + ex.what());
    }
  } else {
    if (c.g_exps.size() != c.chi_exps.size() || c.g_exps.empty())
      throw ConfigError("g and chi must list the same positive number of rows");
    AbelianGroup G{c.group_factors};
    unsigned amb = c.ambient_order;
    if (!amb) {
      amb = G.exponent();
      if (zeta) amb = lcm_u(amb, zeta);
    }
    std::vector<std::pair<GroupElement, Character>> pairs;
    for (size_t i = 0; i < c.g_exps.size(); ++i) {
      if (c.g_exps[i].size() != G.rank() || c.chi_exps[i].size() != G.rank())
        throw ConfigError("g/chi row rank mismatch with the group");
      pairs.emplace_back(GroupElement(G, c.g_exps[i]),
                         Character(G, c.chi_exps[i]));
    }
    datum = YDDatum(G, std::move(pairs), amb);
  }
  if (zeta && datum->ambient_order() % zeta != 0)
    throw ConfigError("zeta_order must divide the ambient cyclotomic order");

  unsigned theta = datum->theta();
  MonomialOrder order;
  order.precedence.resize(theta);
  if (c.order_letters.empty()) {
    // default: x1 > x2 > ... (higher rank = larger letter)
    for (unsigned i = 0; i < theta; ++i)
      order.precedence[i] = static_cast<uint8_t>(theta - 1 - i);
  } else {
    if (c.order_letters.size() != theta)
      throw ConfigError("order must list every letter once");
    std::vector<bool> seen(theta, false);
    for (size_t k = 0; k < c.order_letters.size(); ++k) {
      unsigned l = c.order_letters[k];
      if (l < 1 || l > theta || seen[l - 1])
        throw ConfigError("order must list every letter once");
      seen[l - 1] = true;
      order.precedence[l - 1] = static_cast<uint8_t>(theta - 1 - k);
    }
  }

  Session s{*datum, zeta ? zeta : datum->ambient_order(), {},
            {},     {},   order,
            c.degree_bound, c.cache_dir, c.format};
  for (const auto& [name, text] : c.expressions) {
    try {
      s.env[name] = parse_expr(s.datum, s.zeta_order, text, s.env);
    } catch (const ExprError& ex) {
      throw ConfigError("expression " + name + ": " + ex.what());
    }
  }
  for (const auto& [name, text] : c.relations) {
    try {
      ParsedExpr pe = parse_expr_factored(s.datum, s.zeta_order, text, s.env);
      if (pe.exponent == 1) s.env[name] = pe.base;
      s.relations.emplace_back(name, std::move(pe));
    } catch (const ExprError& ex) {
      throw ConfigError("relation " + name + ": " + ex.what());
    }
  }
  s.strat.order = order;
  for (const auto& level : c.stratification) {
    Stratum st;
    for (const auto& name : level) {
      auto it = std::find_if(s.relations.begin(), s.relations.end(),
                             [&](const auto& p) { return p.first == name; });
      if (it == s.relations.end())
        throw ConfigError("stratification references undefined relation '" +
                          name + "'");
      try {
        st.elements.push_back(make_stratum_element(s.datum, it->second.base,
                                                   it->second.exponent, name));
      } catch (const std::invalid_argument& ex) {
        throw ConfigError("stratum element " + name + ": " + ex.what());
      }
    }
    s.strat.strata.push_back(std::move(st));
  }
  return s;
}

}  // namespace nlift
