#include "nlift/nichols.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace nlift {

namespace {

// Exact Gaussian elimination helpers over the cyclotomic field. Matrices are
// dense row-major; the sizes here (words of one degree and weight class, or
// candidate spans) are small.
using Row = std::vector<Cyc>;
using Matrix = std::vector<Row>;

// Reduce M to row echelon form in place; returns the pivot column of each
// eliminated row.
std::vector<size_t> echelon(Matrix& M) {
  std::vector<size_t> pivots;
  if (M.empty()) return pivots;
  size_t rows = M.size(), cols = M[0].size(), r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && M[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(M[r], M[piv]);
    Cyc inv = M[r][c].inverse();
    for (size_t j = c; j < cols; ++j) M[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || M[i][c].is_zero()) continue;
      Cyc f = M[i][c];
      for (size_t j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  M.resize(r);
  return pivots;
}

// Kernel basis of M (columns = unknowns).
std::vector<Row> kernel_basis(Matrix M, size_t cols, unsigned order) {
  std::vector<size_t> pivots = echelon(M);
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<Row> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Row v(cols, Cyc::zero(order));
    v[free] = Cyc::one(order);
    for (size_t r = 0; r < pivots.size(); ++r)
      if (!M[r][free].is_zero()) v[pivots[r]] = -M[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Does target lie in the span of the candidate vectors? Rank comparison of
// the candidate matrix with and without the target appended.
bool in_span(const std::vector<Row>& candidates, const Row& target) {
  bool target_zero = true;
  for (const auto& x : target)
    if (!x.is_zero()) target_zero = false;
  if (target_zero) return true;
  if (candidates.empty()) return false;
  Matrix M = candidates;
  size_t rank_without = echelon(M).size();
  M = candidates;
  M.push_back(target);
  size_t rank_with = echelon(M).size();
  return rank_with == rank_without;
}

// Coordinate vectors of SmashElements over the union of their support keys.
std::vector<Row> coordinates(const std::vector<SmashElement>& elems,
                             unsigned order) {
  std::map<SmashKey, size_t> index;
  for (const auto& e : elems)
    for (const auto& [k, c] : e.terms()) index.emplace(k, 0);
  size_t n = 0;
  for (auto& [k, i] : index) i = n++;
  std::vector<Row> rows;
  for (const auto& e : elems) {
    Row v(n, Cyc::zero(order));
    for (const auto& [k, c] : e.terms()) v[index.at(k)] = c;
    rows.push_back(std::move(v));
  }
  return rows;
}

}  // namespace

std::pair<GroupElement, Character> element_weight(const YDDatum& d,
                                                 const SmashElement& u) {
  if (u.is_zero())
    return {GroupElement::identity(d.group()), Character::trivial(d.group())};
  std::pair<GroupElement, Character> weight;
  bool first = true;
  for (const auto& [k, c] : u.terms()) {
    GroupElement g = word_group(d, k.word);
    Character chi = word_character(d, k.word);
    if (first) {
      weight = {g, chi};
      first = false;
    } else if (g != weight.first || !(chi == weight.second)) {
      throw std::invalid_argument(
          "element_weight: monomials carry different (g, chi) weights");
    }
  }
  return weight;
}

StratumElement make_stratum_element(const YDDatum& d, const SmashElement& base,
                                    unsigned exponent, std::string name) {
  if (base.is_zero() || exponent == 0)
    throw std::invalid_argument("stratum element: zero");
  if (!base.is_homogeneous())
    throw std::invalid_argument("stratum element: base not homogeneous");
  auto [g, chi] = element_weight(d, base);
  StratumElement e;
  e.base = base;
  e.exponent = exponent;
  e.name = std::move(name);
  e.degree = base.degree() * exponent;
  e.g = g.pow(d.group(), exponent);
  e.chi = chi.pow(exponent);
  if (e.degree < 2)
    throw std::invalid_argument("stratum element: degree must be >= 2");
  return e;
}

Stratum make_stratum(const YDDatum& d, const std::vector<SmashElement>& elems,
                     const std::vector<std::string>& names) {
  Stratum s;
  for (size_t i = 0; i < elems.size(); ++i)
    s.elements.push_back(make_stratum_element(
        d, elems[i], 1, i < names.size() ? names[i] : std::string{}));
  return s;
}

SmashElement reduced_power(const RewriteSystem& R, const SmashElement& u,
                           unsigned n) {
  SmashElement p = R.normal_form(u);
  for (unsigned i = 2; i <= n && !p.is_zero(); ++i)
    p = R.multiply_reduced(p, u);
  return p;
}

TensorElement reduced_coproduct_power(const YDDatum& d, const RewriteSystem& A,
                                      const RewriteSystem& H,
                                      const SmashElement& u, unsigned n) {
  TensorElement D = tensor_normal_form(A, H, coproduct(d, u));
  TensorElement T = D;
  unsigned amb = d.ambient_order();
  // multiply leg by leg through the memoized (normal word, letter) tables so
  // long words are never re-reduced from scratch
  for (unsigned i = 2; i <= n && !T.is_zero(); ++i) {
    TensorElement next;
    for (const auto& [kt, ct] : T.terms()) {
      SmashElement lt =
          SmashElement::term(kt.first.word, kt.first.grp, Cyc::one(amb));
      SmashElement rt =
          SmashElement::term(kt.second.word, kt.second.grp, Cyc::one(amb));
      for (const auto& [kd, cd] : D.terms()) {
        SmashElement l = A.multiply_reduced(
            lt,
            SmashElement::term(kd.first.word, kd.first.grp, Cyc::one(amb)));
        if (l.is_zero()) continue;
        SmashElement r = H.multiply_reduced(
            rt,
            SmashElement::term(kd.second.word, kd.second.grp, Cyc::one(amb)));
        if (r.is_zero()) continue;
        Cyc c = ct * cd;
        for (const auto& [ka, ca] : l.terms())
          for (const auto& [kh, ch] : r.terms())
            next.add_term({ka, kh}, c * ca * ch);
      }
    }
    T = std::move(next);
  }
  return T;
}

TensorElement reduced_coproduct(const YDDatum& d, const RewriteSystem& A,
                                const RewriteSystem& H, const SmashElement& a) {
  TensorElement out;
  for (const auto& [k, c] : a.terms()) {
    TensorElement T = TensorElement::simple(SmashElement::unit(d) * c,
                                            SmashElement::unit(d));
    for (uint8_t l : k.word) {
      TensorElement Dl = coproduct(d, SmashElement::letter(d, l));
      T = tensor_normal_form(A, H, tensor_multiply(d, T, Dl));
    }
    if (!k.grp.is_identity()) {
      SmashElement ge = SmashElement::group_term(d, k.grp);
      T = tensor_normal_form(
          A, H, tensor_multiply(d, T, TensorElement::simple(ge, ge)));
    }
    out += T;
  }
  return out;
}

TensorElement skew_primitive_defect(const YDDatum& d, const StratumElement& u,
                                    const RewriteSystem& R) {
  SmashElement P = reduced_power(R, u.base, u.exponent);
  TensorElement T = reduced_coproduct_power(d, R, R, u.base, u.exponent);
  T -= TensorElement::simple(P, SmashElement::unit(d));
  T -= TensorElement::simple(SmashElement::group_term(d, u.g), P);
  return T;
}

TensorElement skew_primitive_defect(const YDDatum& d, const SmashElement& u,
                                    const GroupElement& g,
                                    const RewriteSystem& R) {
  SmashElement P = R.normal_form(u);
  TensorElement T = tensor_normal_form(R, R, coproduct(d, u));
  T -= TensorElement::simple(P, SmashElement::unit(d));
  T -= TensorElement::simple(SmashElement::group_term(d, g), P);
  return T;
}

std::vector<SmashElement> primitive_space(const YDDatum& d,
                                          const RewriteSystem& R,
                                          unsigned deg) {
  // Weight class -> normal words of the requested degree. The coproduct
  // preserves (g, chi), so the defect system block-diagonalizes per class.
  std::map<std::pair<std::vector<unsigned>, std::vector<unsigned>>,
           std::vector<Word>>
      classes;
  for (const Word& w : R.normal_words(deg)) {
    if (w.size() != deg) continue;
    GroupElement g = word_group(d, w);
    Character chi = word_character(d, w);
    classes[{g.exponents(), chi.exponents()}].push_back(w);
  }
  unsigned order = d.ambient_order();
  std::vector<SmashElement> basis;
  GroupElement id = GroupElement::identity(d.group());
  for (const auto& [key, words] : classes) {
    GroupElement g(d.group(),
                   std::vector<long>(key.first.begin(), key.first.end()));
    // Defect of each basis word, vectorized over the union of tensor keys.
    std::map<TensorElement::Key, size_t> coords;
    std::vector<TensorElement> defects;
    for (const Word& w : words) {
      SmashElement u = SmashElement::term(w, id, Cyc::one(order));
      TensorElement def = skew_primitive_defect(d, u, g, R);
      for (const auto& [k, c] : def.terms()) coords.emplace(k, 0);
      defects.push_back(std::move(def));
    }
    size_t n = 0;
    for (auto& [k, i] : coords) i = n++;
    Matrix M(n, Row(words.size(), Cyc::zero(order)));
    for (size_t col = 0; col < words.size(); ++col)
      for (const auto& [k, c] : defects[col].terms())
        M[coords.at(k)][col] = c;
    for (const Row& v : kernel_basis(std::move(M), words.size(), order)) {
      SmashElement u;
      for (size_t col = 0; col < words.size(); ++col)
        if (!v[col].is_zero()) u.add_term({words[col], id}, v[col]);
      basis.push_back(std::move(u));
    }
  }
  return basis;
}

StratificationReport validate_stratification(const YDDatum& d,
                                             Stratification& S,
                                             unsigned degree_bound) {
  StratificationReport report;
  S.systems.clear();
  RewriteSystem R0(d, S.order);
  R0.complete(degree_bound);
  S.systems.push_back(std::move(R0));
  for (size_t k = 0; k < S.strata.size(); ++k) {
    const RewriteSystem& Rk = S.systems.back();
    std::vector<SmashElement> reduced;
    for (size_t j = 0; j < S.strata[k].elements.size(); ++j) {
      const StratumElement& e = S.strata[k].elements[j];
      SmashElement P = reduced_power(Rk, e.base, e.exponent);
      reduced.push_back(P);
      if (P.is_zero()) {
        report.failures.push_back({k, j, "reduces_to_zero", {}});
        continue;
      }
      TensorElement T = reduced_coproduct_power(d, Rk, Rk, e.base, e.exponent);
      T -= TensorElement::simple(P, SmashElement::unit(d));
      T -= TensorElement::simple(SmashElement::group_term(d, e.g), P);
      if (!T.is_zero())
        report.failures.push_back({k, j, "defect", std::move(T)});
    }
    if (!report.failures.empty()) return report;
    RewriteSystem next = Rk;
    for (const SmashElement& P : reduced) next.add_relation(P);
    if (next.complete(degree_bound) != RewriteSystem::Status::confluent) {
      report.failures.push_back({k, 0, "budget", {}});
      return report;
    }
    S.systems.push_back(std::move(next));
  }
  report.ok = true;
  return report;
}

TruncationResult truncation_order(const YDDatum& d, const SmashElement& u,
                                  const GroupElement& g, const Character& chi,
                                  const RewriteSystem& R,
                                  const std::vector<Word>& cover) {
  Cyc q = d.evaluate(chi, g);
  std::optional<unsigned> ord = q.root_order();
  if (!ord)
    throw std::domain_error("truncation_order: chi(g) is not a root of unity");
  unsigned N = *ord;
  if (N == 1)
    throw std::domain_error(
        "truncation_order: chi(g) = 1 is outside the dichotomy");
  TruncationResult res;
  res.order = N;
  unsigned bound = R.degree_bound() > 0 ? R.degree_bound() : 64;
  if (!cover.empty()) {
    // Nonvanishing certificate in a further (monomial) quotient: zero maps
    // to zero, so a surviving word proves u^N != 0 in R itself.
    RewriteSystem Rc = R;
    for (const Word& w : cover)
      Rc.add_relation(SmashElement::term(
          w, GroupElement::identity(d.group()), Cyc::one(d.ambient_order())));
    if (Rc.complete(bound) == RewriteSystem::Status::confluent) {
      SmashElement p = reduced_power(Rc, u, N);
      if (!p.is_zero()) {
        res.truncated = false;
        res.witness = p.terms().rbegin()->first.word;
        res.via_cover = true;
        return res;
      }
    }
  }
  SmashElement p = reduced_power(R, u, N);
  res.truncated = p.is_zero();
  if (!res.truncated) res.witness = p.terms().rbegin()->first.word;
  return res;
}

CentralityReport centrality_check(const YDDatum& d, const SmashElement& u,
                                  const RewriteSystem& R) {
  CentralityReport rep;
  SmashElement ured = R.normal_form(u);
  if (ured.is_zero()) {
    rep.commutes.assign(d.theta(), true);
    rep.character_trivial = true;
    rep.central = true;
    return rep;
  }
  // chi_u = epsilon is required for commutation with the group algebra.
  Character chi = Character::trivial(d.group());
  bool homogeneous_weight = true;
  try {
    chi = element_weight(d, ured).second;
  } catch (const std::invalid_argument&) {
    homogeneous_weight = false;
  }
  rep.character_trivial = homogeneous_weight && d.is_trivial_on_group(chi);
  bool all = true;
  for (unsigned i = 0; i < d.theta(); ++i) {
    SmashElement xi = SmashElement::letter(d, i);
    SmashElement diff =
        R.multiply_reduced(ured, xi) - R.multiply_reduced(xi, ured);
    bool ok = diff.is_zero();
    rep.commutes.push_back(ok);
    all = all && ok;
  }
  rep.central = all && rep.character_trivial;
  return rep;
}

NormalityReport normality_check(const YDDatum& d, const Stratum& stratum,
                                const RewriteSystem& R) {
  NormalityReport rep;
  // Route 1: every stratum element central (the group is abelian, so group
  // parts commute once the character is trivial).
  bool all_central = true;
  std::vector<SmashElement> values;
  for (const StratumElement& e : stratum.elements) {
    SmashElement P = reduced_power(R, e.base, e.exponent);
    values.push_back(P);
    CentralityReport c = centrality_check(d, P, R);
    if (!c.central) all_central = false;
  }
  if (all_central) {
    rep.status = NormalityReport::Status::passes;
    rep.route = "centrality";
    return rep;
  }
  if (stratum.elements.size() != 1) {
    rep.status = NormalityReport::Status::undecided;
    rep.route = "multi-element non-central stratum is unsupported";
    return rep;
  }
  // Route 2: single generator y; test x*S(y) - S(y)*x against the exact
  // span of the reduced powers of S(y) (each power carries its own group
  // part; the subalgebra generated by S(y) is their linear span plus 1).
  const StratumElement& e = stratum.elements[0];
  SmashElement Sy =
      reduced_power(R, R.normal_form(antipode(d, e.base)), e.exponent);
  rep.route = "span_solve";
  bool all_in = true;
  for (unsigned i = 0; i < d.theta(); ++i) {
    SmashElement xi = SmashElement::letter(d, i);
    SmashElement comm =
        R.multiply_reduced(R.normal_form(xi), Sy) - R.multiply_reduced(Sy, xi);
    bool ok = comm.is_zero();
    if (!ok) {
      unsigned maxdeg = comm.degree();
      std::vector<SmashElement> cands = {SmashElement::unit(d)};
      SmashElement p = Sy;
      for (unsigned j = 1; j * e.degree <= maxdeg && !p.is_zero(); ++j) {
        cands.push_back(p);
        p = R.multiply_reduced(p, Sy);
      }
      std::vector<SmashElement> all_vecs = cands;
      all_vecs.push_back(comm);
      std::vector<Row> rows = coordinates(all_vecs, d.ambient_order());
      Row target = rows.back();
      rows.pop_back();
      ok = in_span(rows, target);
    }
    rep.pairs.push_back({i, 0, ok});
    all_in = all_in && ok;
  }
  rep.status = all_in ? NormalityReport::Status::passes
                      : NormalityReport::Status::fails;
  return rep;
}

}  // namespace nlift
