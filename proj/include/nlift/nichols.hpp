#ifndef NLIFT_NICHOLS_HPP
#define NLIFT_NICHOLS_HPP

#include <string>
#include <vector>

#include "nlift/rewrite.hpp"

namespace nlift {

/// One homogeneous Yetter-Drinfeld element of a stratum, kept in factored
/// form base^exponent so high powers never need to be expanded in T(V).
struct StratumElement {
  SmashElement base;
  unsigned exponent = 1;
  std::string name;

  unsigned degree = 0;  // exponent * degree(base)
  GroupElement g;       // g_{base}^exponent
  Character chi;        // chi_{base}^exponent
};

/// Ordered list of homogeneous elements forming one stratum G_k. Every
/// monomial of each element must carry the same (g, chi) weight and the
/// degree must be >= 2; construction throws std::invalid_argument otherwise.
struct Stratum {
  std::vector<StratumElement> elements;
};

StratumElement make_stratum_element(const YDDatum& d, const SmashElement& base,
                                    unsigned exponent = 1,
                                    std::string name = {});
Stratum make_stratum(const YDDatum& d, const std::vector<SmashElement>& elems,
                     const std::vector<std::string>& names = {});

/// Weight (g_w, chi_w) shared by all monomials of a homogeneous element;
/// throws std::invalid_argument when monomials disagree.
std::pair<GroupElement, Character> element_weight(const YDDatum& d,
                                                 const SmashElement& u);

/// nf_R(u^n) via incremental reduced multiplication.
SmashElement reduced_power(const RewriteSystem& R, const SmashElement& u,
                           unsigned n);

/// (nf_A (x) nf_H)(Delta(u^n)), computed as the n-th reduced tensor power of
/// Delta(u); exact because Delta is an algebra map.
TensorElement reduced_coproduct_power(const YDDatum& d, const RewriteSystem& A,
                                      const RewriteSystem& H,
                                      const SmashElement& u, unsigned n);

/// (nf_A (x) nf_H)(Delta(a)) with the coproduct folded letter by letter, so
/// long words never expand to their full 2^degree tensor form.
TensorElement reduced_coproduct(const YDDatum& d, const RewriteSystem& A,
                                const RewriteSystem& H, const SmashElement& a);

/// tensor_normal_form(Delta(u) - u (x) 1 - g (x) u) with both legs reduced
/// by R; zero iff u is (g,1)-skew-primitive in the quotient presented by R.
TensorElement skew_primitive_defect(const YDDatum& d, const SmashElement& u,
                                    const GroupElement& g,
                                    const RewriteSystem& R);

/// Same, with u given in factored form.
TensorElement skew_primitive_defect(const YDDatum& d, const StratumElement& u,
                                    const RewriteSystem& R);

/// Basis of the degree-d skew-primitives of the quotient presented by R:
/// each basis vector is homogeneous with one fixed (g, chi) weight and has
/// vanishing defect against its own group-like. Computed weight class by
/// weight class as the kernel of an exact cyclotomic linear system.
std::vector<SmashElement> primitive_space(const YDDatum& d,
                                          const RewriteSystem& R, unsigned deg);

/// Adapted stratification: strata G_0..G_N plus the tower of presentations
/// R_0..R_{N+1} with R_{k+1} = complete(R_k rules plus G_k).
struct Stratification {
  MonomialOrder order;
  std::vector<Stratum> strata;
  std::vector<RewriteSystem> systems;  // filled by validate_stratification
};

struct StratificationReport {
  bool ok = false;
  struct Failure {
    size_t level;
    size_t element;
    std::string what;      // "defect" | "reduces_to_zero" | "budget"
    TensorElement defect;  // nonzero witness for "defect"
  };
  std::vector<Failure> failures;
};

/// Builds the tower level by level and verifies, for every k, that each
/// element of G_k is nonzero modulo the previous levels and (g,1)-skew-
/// primitive against R_k (including the last stratum; see report on failure).
/// On success S.systems holds R_0..R_{N+1}, all confluent.
StratificationReport validate_stratification(const YDDatum& d,
                                             Stratification& S,
                                             unsigned degree_bound);

/// Lemma-shaped dichotomy for the coideal subalgebra k<u>: with q = chi(g)
/// a root of unity of order N, the subalgebra is a polynomial algebra
/// (u^N != 0) or truncated at N (u^N = 0).
struct TruncationResult {
  bool truncated = false;  // true: nf_R(u^N) = 0
  unsigned order = 0;      // N = root_order(chi(g))
  Word witness;            // a surviving normal word, polynomial case
  bool via_cover = false;  // nonvanishing certified through a monomial cover
};

/// Direct route: nf_R(u^N) by reduced powers. When `cover` is nonempty the
/// power is instead computed in the further quotient R + <cover monomials>;
/// a nonzero result there certifies u^N != 0 in R (quotients kill zero), and
/// a zero result falls back to the direct route, so "truncated" verdicts are
/// never issued from a cover.
TruncationResult truncation_order(const YDDatum& d, const SmashElement& u,
                                  const GroupElement& g, const Character& chi,
                                  const RewriteSystem& R,
                                  const std::vector<Word>& cover = {});

struct CentralityReport {
  std::vector<bool> commutes;   // per generator x_i
  bool character_trivial = false;
  bool central = false;
};

/// u central in the quotient presented by R iff u commutes with every x_i
/// and chi_u is trivial on Gamma (commutation with the group part).
CentralityReport centrality_check(const YDDatum& d, const SmashElement& u,
                                  const RewriteSystem& R);

struct NormalityReport {
  enum class Status { passes, fails, undecided };
  Status status = Status::undecided;
  std::string route;  // "centrality" | "span_solve" | reason when undecided
  struct Pair {
    unsigned generator;
    size_t element;
    bool in_span;
  };
  std::vector<Pair> pairs;  // filled on the span_solve route
};

/// Normality of Y = k<S(y) : y in stratum> inside the quotient presented by
/// R: passes via centrality when every stratum element is central, else for
/// a single-element stratum solves x*S(y) - S(y)*x against the exact span
/// of {nf(S(y)^j) * h : h in Gamma} of matching degree. Other shapes are
/// reported undecided, never guessed.
NormalityReport normality_check(const YDDatum& d, const Stratum& stratum,
                                const RewriteSystem& R);

}  // namespace nlift

#endif
