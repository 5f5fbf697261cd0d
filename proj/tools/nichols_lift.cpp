// nichols-lift: validation and lifting toolkit for Nichols algebras of
// diagonal type over finite abelian groups.
//
// Exit codes: 0 all requested verifications pass, 1 verification failure,
// 2 budget exhaustion, 3 input error.

#include <chrono>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nlift/cache.hpp"
#include "nlift/config.hpp"
#include "nlift/lifting.hpp"

using namespace nlift;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInput = 3;

struct Options {
  std::string config_path;
  unsigned degree_bound = 0;  // 0 = config value
  std::string order;          // e.g. "1,2": letters, largest first
  std::string cache_dir;      // override
  std::string format;         // override
  std::string lambda;         // "name=expr,name=expr"
  std::string element;
  std::string h_expr, k_expr;
  std::vector<std::string> cover;
  unsigned degree = 2;
  int level = -1;  // -1 = top
  bool with_group = false;
  unsigned samples = 0;
};

struct Ctx {
  Session s;
  unsigned D;
  std::string cache_dir;
  bool machine;
};

Ctx make_ctx(const Options& o) {
  SessionConfig c = parse_config_file(o.config_path);
  if (o.degree_bound) c.degree_bound = o.degree_bound;
  if (!o.cache_dir.empty()) c.cache_dir = o.cache_dir;
  if (!o.format.empty()) c.format = o.format;
  if (!o.order.empty()) {
    c.order_letters.clear();
    for (const auto& part : [&] {
           std::vector<std::string> v;
           std::stringstream ss(o.order);
           std::string p;
           while (std::getline(ss, p, ',')) v.push_back(p);
           return v;
         }())
      c.order_letters.push_back(static_cast<unsigned>(std::stoul(part)));
  }
  Session s = resolve(c);
  if (!c.cache_dir.empty()) RewriteSystem::set_completion_cache(c.cache_dir);
  return Ctx{std::move(s), c.degree_bound, c.cache_dir, c.format == "machine"};
}

std::vector<const StratumElement*> flat_elements(const Stratification& S) {
  std::vector<const StratumElement*> v;
  for (const auto& st : S.strata)
    for (const auto& e : st.elements) v.push_back(&e);
  return v;
}

std::vector<Cyc> parse_lambdas(const Ctx& c, const std::string& text) {
  auto flat = flat_elements(c.s.strat);
  std::vector<Cyc> out(flat.size(), Cyc::zero(c.s.datum.ambient_order()));
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw ConfigError("--lambda expects name=value pairs");
    std::string name = item.substr(0, eq);
    SmashElement v =
        parse_expr(c.s.datum, c.s.zeta_order, item.substr(eq + 1), c.s.env);
    if (v.size() > 1 ||
        (v.size() == 1 && (!v.terms().begin()->first.word.empty() ||
                           !v.terms().begin()->first.grp.is_identity())))
      throw ConfigError("--lambda value for " + name + " is not a scalar");
    Cyc val = v.is_zero() ? Cyc::zero(c.s.datum.ambient_order())
                          : v.terms().begin()->second;
    bool found = false;
    for (size_t i = 0; i < flat.size(); ++i)
      if (flat[i]->name == name) {
        out[i] = val;
        found = true;
      }
    if (!found) throw ConfigError("--lambda: unknown relation '" + name + "'");
  }
  return out;
}

std::string level_key(const Ctx& c, unsigned level) {
  std::ostringstream os;
  os << c.s.datum.canonical_string() << "|" << c.s.order.to_string() << "|D"
     << c.D << "|tower";
  for (unsigned k = 0; k < level; ++k)
    for (const auto& e : c.s.strat.strata[k].elements)
      os << "|" << e.base.to_string() << "^" << e.exponent;
  return content_hash(os.str());
}

/// Tower of undeformed quotients H_0..H_upto, cached per level when a cache
/// directory is configured.
std::vector<RewriteSystem> build_systems(const Ctx& c, unsigned upto) {
  std::vector<RewriteSystem> out;
  for (unsigned k = 0; k <= upto; ++k) {
    std::string key = level_key(c, k);
    if (auto hit = cache_load(c.cache_dir, c.s.datum, key)) {
      out.push_back(std::move(*hit));
      continue;
    }
    RewriteSystem R =
        k == 0 ? RewriteSystem(c.s.datum, c.s.order) : out.back();
    if (k > 0)
      for (const auto& e : c.s.strat.strata[k - 1].elements) {
        SmashElement r = reduced_power(R, e.base, e.exponent);
        if (!r.is_zero()) R.add_relation(r);
      }
    if (R.complete(c.D) != RewriteSystem::Status::confluent)
      throw std::runtime_error("budget exhausted completing level " +
                               std::to_string(k));
    cache_store(c.cache_dir, key, R);
    out.push_back(std::move(R));
  }
  return out;
}

unsigned top_level(const Ctx& c, int requested) {
  unsigned n = static_cast<unsigned>(c.s.strat.strata.size());
  if (requested < 0) return n;
  if (static_cast<unsigned>(requested) > n)
    throw ConfigError("--level exceeds the number of strata");
  return static_cast<unsigned>(requested);
}

ParsedExpr parse_element(const Ctx& c, const std::string& text) {
  if (text.empty()) throw ConfigError("--element is required");
  return parse_expr_factored(c.s.datum, c.s.zeta_order, text, c.s.env);
}

/// Cleft tower A_0..A_upto for the given deformation parameters.
CleftPresentation build_cleft_tower(const Ctx& c,
                                    const std::vector<RewriteSystem>& H,
                                    const std::vector<Cyc>& lambdas,
                                    unsigned upto) {
  CleftPresentation A = cleft_base(c.s.datum, c.s.order, c.D);
  size_t idx = 0;
  for (unsigned k = 0; k < upto; ++k) {
    const Stratum& st = c.s.strat.strata[k];
    std::vector<Cyc> slice(lambdas.begin() + idx,
                           lambdas.begin() + idx + st.elements.size());
    idx += st.elements.size();
    auto res = build_cleft(c.s.datum, A, st, slice, H[k + 1], c.D);
    if (!res.ok)
      throw std::runtime_error("cleft level " + std::to_string(k + 1) + ": " +
                               res.error);
    A = std::move(*res.cleft);
  }
  return A;
}

std::string tensor_to_string(const YDDatum& d, const TensorElement& t) {
  if (t.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t.terms()) {
    if (!first) os << "  +  ";
    first = false;
    SmashElement l = SmashElement::term(k.first.word, k.first.grp, c);
    SmashElement r = SmashElement::term(k.second.word, k.second.grp,
                                        Cyc::one(d.ambient_order()));
    os << print_expr(d, l) << " (x) " << print_expr(d, r);
  }
  return os.str();
}

int cmd_check_stratification(Ctx& c) {
  auto report = validate_stratification(c.s.datum, c.s.strat, c.D);
  bool budget = false;
  for (const auto& f : report.failures) {
    std::cout << "failure level=" << f.level << " element=" << f.element
              << " kind=" << f.what;
    if (f.what == "defect")
      std::cout << " witness=" << tensor_to_string(c.s.datum, f.defect);
    std::cout << "\n";
    if (f.what == "budget") budget = true;
  }
  std::cout << "check-stratification " << (report.ok ? "ok" : "failed")
            << " levels=" << c.s.strat.strata.size() << "\n";
  return report.ok ? kExitPass : (budget ? kExitBudget : kExitFail);
}

int cmd_primitives(Ctx& c, const Options& o) {
  unsigned lv = top_level(c, o.level < 0 ? 0 : o.level);
  auto H = build_systems(c, lv);
  auto basis = primitive_space(c.s.datum, H[lv], o.degree);
  std::cout << "primitives degree=" << o.degree << " level=" << lv
            << " count=" << basis.size() << "\n";
  for (const auto& b : basis)
    std::cout << "primitive " << print_expr(c.s.datum, b) << "\n";
  return kExitPass;
}

int cmd_normal_form(Ctx& c, const Options& o) {
  unsigned lv = top_level(c, o.level);
  auto H = build_systems(c, lv);
  ParsedExpr pe = parse_element(c, o.element);
  SmashElement nf = reduced_power(H[lv], pe.base, pe.exponent);
  std::cout << "normal-form " << print_expr(c.s.datum, nf) << "\n";
  return kExitPass;
}

int cmd_dimension(Ctx& c, const Options& o) {
  unsigned lv = top_level(c, o.level);
  auto H = build_systems(c, lv);
  auto dim = H[lv].dimension(o.with_group, 12);
  std::cout << "dimension level=" << lv
            << " finite=" << (dim.finite ? "yes" : "no");
  if (dim.finite)
    std::cout << " dim=" << dim.dim.get_str() << " top=" << dim.top_degree;
  std::cout << " hilbert=";
  for (size_t i = 0; i < dim.hilbert.size(); ++i)
    std::cout << (i ? "," : "") << dim.hilbert[i].get_str();
  std::cout << "\n";
  return kExitPass;
}

int cmd_central(Ctx& c, const Options& o) {
  unsigned lv = top_level(c, o.level);
  auto H = build_systems(c, lv);
  ParsedExpr pe = parse_element(c, o.element);
  SmashElement u = reduced_power(H[lv], pe.base, pe.exponent);
  auto rep = centrality_check(c.s.datum, u, H[lv]);
  std::cout << "central level=" << lv
            << " commutes=";
  for (size_t i = 0; i < rep.commutes.size(); ++i)
    std::cout << (i ? "," : "") << (rep.commutes[i] ? "yes" : "no");
  std::cout << " character_trivial=" << (rep.character_trivial ? "yes" : "no")
            << " central=" << (rep.central ? "yes" : "no") << "\n";
  return rep.central ? kExitPass : kExitFail;
}

int cmd_truncation(Ctx& c, const Options& o) {
  unsigned lv = top_level(c, o.level);
  auto H = build_systems(c, lv);
  ParsedExpr pe = parse_element(c, o.element);
  SmashElement u = reduced_power(H[lv], pe.base, pe.exponent);
  auto [g, chi] = element_weight(c.s.datum, u);
  std::vector<Word> cover;
  for (const auto& text : o.cover) {
    SmashElement m = parse_expr(c.s.datum, c.s.zeta_order, text, c.s.env);
    if (m.size() != 1 || !m.terms().begin()->first.grp.is_identity())
      throw ConfigError("--cover entries must be monomials");
    cover.push_back(m.terms().begin()->first.word);
  }
  auto res = truncation_order(c.s.datum, u, g, chi, H[lv], cover);
  std::cout << "truncation order=" << res.order
            << " truncated=" << (res.truncated ? "yes" : "no");
  if (!res.truncated)
    std::cout << " witness=" << print_word(res.witness)
              << " via_cover=" << (res.via_cover ? "yes" : "no");
  std::cout << "\n";
  return kExitPass;
}

int cmd_good_module(Ctx& c) {
  auto report = validate_stratification(c.s.datum, c.s.strat, c.D);
  if (!report.ok) {
    std::cout << "good-module failed (stratification invalid)\n";
    return kExitFail;
  }
  bool all = true;
  for (size_t k = 0; k + 1 < c.s.strat.strata.size(); ++k) {
    bool ok = good_module_check(c.s.datum, c.s.strat.systems[k + 1],
                                c.s.strat.strata[k + 1]);
    std::cout << "good-module step=" << k << "->" << k + 1 << " "
              << (ok ? "ok" : "failed") << "\n";
    all = all && ok;
  }
  std::cout << "good-module " << (all ? "ok" : "failed") << " steps="
            << (c.s.strat.strata.size() > 1 ? c.s.strat.strata.size() - 1 : 0)
            << "\n";
  return all ? kExitPass : kExitFail;
}

const char* reason_name(DeformationParam::Reason r) {
  switch (r) {
    case DeformationParam::Reason::free_param: return "free";
    case DeformationParam::Reason::character_nontrivial:
      return "character_nontrivial";
    case DeformationParam::Reason::qls_condition: return "qls_condition";
    case DeformationParam::Reason::group_trivial: return "group_trivial";
  }
  return "?";
}

int cmd_liftings(Ctx& c) {
  auto report = validate_stratification(c.s.datum, c.s.strat, c.D);
  if (!report.ok) {
    std::cout << "liftings failed (stratification invalid)\n";
    return kExitFail;
  }
  auto adm = admissibility(c.s.datum, c.s.strat);
  auto flat = flat_elements(c.s.strat);
  std::vector<size_t> free_pos;
  for (size_t i = 0; i < adm.params.size(); ++i) {
    std::cout << "parameter " << flat[i]->name
              << " admissible=" << (adm.params[i].admissible ? "yes" : "no")
              << " reason=" << reason_name(adm.params[i].reason)
              << " qls=" << (adm.params[i].qls_ok ? "yes" : "no") << "\n";
    if (adm.params[i].admissible) free_pos.push_back(i);
  }
  unsigned amb = c.s.datum.ambient_order();
  bool all_ok = true;
  for (unsigned long mask = 0; mask < (1ul << free_pos.size()); ++mask) {
    std::vector<Cyc> lam(adm.params.size(), Cyc::zero(amb));
    for (size_t b = 0; b < free_pos.size(); ++b)
      if (mask & (1ul << b)) lam[free_pos[b]] = Cyc::one(amb);
    auto res = build_lifting(c.s.datum, c.s.strat, lam, c.D);
    std::cout << "lifting lambda=(";
    for (size_t i = 0; i < lam.size(); ++i)
      std::cout << (i ? "," : "") << print_cyc(lam[i]);
    std::cout << ") ok=" << (res.ok ? "yes" : "no");
    if (res.L)
      std::cout << " dim=" << res.L->dimension.get_str()
                << " hopf=" << (res.L->hopf_ok ? "yes" : "no")
                << " leads=" << (res.L->leads_match ? "yes" : "no");
    if (!res.ok) std::cout << " error=\"" << res.error << "\"";
    std::cout << "\n";
    all_ok = all_ok && res.ok;
  }
  return all_ok ? kExitPass : kExitFail;
}

int cmd_verify_lifting(Ctx& c, const Options& o) {
  auto report = validate_stratification(c.s.datum, c.s.strat, c.D);
  if (!report.ok) {
    std::cout << "verify-lifting failed (stratification invalid)\n";
    return kExitFail;
  }
  auto lam = parse_lambdas(c, o.lambda);
  auto res = build_lifting(c.s.datum, c.s.strat, lam, c.D);
  std::cout << "verify-lifting ok=" << (res.ok ? "yes" : "no");
  if (res.L)
    std::cout << " dim=" << res.L->dimension.get_str()
              << " hopf=" << (res.L->hopf_ok ? "yes" : "no")
              << " leads=" << (res.L->leads_match ? "yes" : "no");
  if (!res.ok) std::cout << " error=\"" << res.error << "\"";
  std::cout << "\n";
  if (res.ok) return kExitPass;
  return res.error.find("budget") != std::string::npos ? kExitBudget
                                                       : kExitFail;
}

int cmd_coaction(Ctx& c, const Options& o) {
  unsigned lv = top_level(c, o.level);
  auto H = build_systems(c, lv);
  auto lam = parse_lambdas(c, o.lambda);
  CleftPresentation A = build_cleft_tower(c, H, lam, lv);
  ParsedExpr pe = parse_element(c, o.element);
  TensorElement rho = reduced_coproduct_power(c.s.datum, A.system, H[lv],
                                              pe.base, pe.exponent);
  std::cout << "coaction level=" << lv << " rho = "
            << tensor_to_string(c.s.datum, rho) << "\n";
  return kExitPass;
}

int cmd_cocycle(Ctx& c, const Options& o) {
  unsigned lv = top_level(c, o.level);
  auto H = build_systems(c, lv);
  auto lam = parse_lambdas(c, o.lambda);
  CleftPresentation A = build_cleft_tower(c, H, lam, lv);
  Section sec(c.s.datum, A.system, H[lv]);
  SmashElement h = parse_expr(c.s.datum, c.s.zeta_order, o.h_expr, c.s.env);
  SmashElement k = parse_expr(c.s.datum, c.s.zeta_order, o.k_expr, c.s.env);
  Cyc v = cocycle_eval(c.s.datum, A.system, H[lv], sec, h, k);
  std::cout << "cocycle sigma = " << print_cyc(v) << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nichols-algebra stratification and lifting toolkit"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("config", o.config_path, "session config file")
        ->required();
    sub->add_option("--degree-bound", o.degree_bound, "completion bound");
    sub->add_option("--order", o.order, "letter precedence, largest first");
    sub->add_option("--cache-dir", o.cache_dir, "rewrite-system cache");
    sub->add_option("--format", o.format, "human|machine");
    sub->add_option("--lambda", o.lambda, "name=value,... deformations");
    sub->add_option("--level", o.level, "tower level (default: top)");
    return sub;
  };

  auto* chk = add_common(app.add_subcommand(
      "check-stratification", "validate the adapted stratification"));
  auto* prim = add_common(
      app.add_subcommand("primitives", "skew-primitive basis of one degree"));
  prim->add_option("--degree", o.degree, "word degree")->required();
  auto* nf = add_common(app.add_subcommand("normal-form", "reduce an element"));
  nf->add_option("--element", o.element, "expression")->required();
  auto* dim =
      add_common(app.add_subcommand("dimension", "normal-word counts"));
  dim->add_flag("--with-group", o.with_group, "multiply by |Gamma|");
  auto* cen = add_common(app.add_subcommand("central", "centrality check"));
  cen->add_option("--element", o.element, "expression")->required();
  auto* tru = add_common(
      app.add_subcommand("truncation", "coideal-subalgebra dichotomy"));
  tru->add_option("--element", o.element, "expression")->required();
  tru->add_option("--cover", o.cover, "monomial cover for nonvanishing");
  auto* gm = add_common(
      app.add_subcommand("good-module", "compatibility of the stratum chain"));
  auto* lif = add_common(
      app.add_subcommand("liftings", "full strategy run: catalog of L(lambda)"));
  auto* ver = add_common(
      app.add_subcommand("verify-lifting", "build one L(lambda)"));
  auto* coa = add_common(app.add_subcommand("coaction", "right coaction"));
  coa->add_option("--element", o.element, "expression")->required();
  auto* coc = add_common(app.add_subcommand("cocycle", "sigma(h,k)"));
  coc->add_option("--left", o.h_expr, "first argument expression")->required();
  coc->add_option("--right", o.k_expr, "second argument expression")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    Ctx c = make_ctx(o);
    if (chk->parsed()) return cmd_check_stratification(c);
    if (prim->parsed()) return cmd_primitives(c, o);
    if (nf->parsed()) return cmd_normal_form(c, o);
    if (dim->parsed()) return cmd_dimension(c, o);
    if (cen->parsed()) return cmd_central(c, o);
    if (tru->parsed()) return cmd_truncation(c, o);
    if (gm->parsed()) return cmd_good_module(c);
    if (lif->parsed()) return cmd_liftings(c);
    if (ver->parsed()) return cmd_verify_lifting(c, o);
    if (coa->parsed()) return cmd_coaction(c, o);
    if (coc->parsed()) return cmd_cocycle(c, o);
  } catch (const ConfigError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ExprError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::runtime_error& e) {
    std::string m = e.what();
    std::cerr << "error: " << m << "\n";
    return m.find("budget") != std::string::npos ? kExitBudget : kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitInput;
}
