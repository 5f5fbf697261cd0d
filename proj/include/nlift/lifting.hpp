#ifndef NLIFT_LIFTING_HPP
#define NLIFT_LIFTING_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nlift/nichols.hpp"

namespace nlift {

/// Admissibility of one deformation parameter, per stratum element.
/// admissible iff chi_i is trivial on Gamma and (for power relations) the
/// quantum-linear-space condition holds; reason group_trivial flags the
/// admissible-but-invisible case g_i = 1 where u - lambda(1 - g_i) = u, so
/// the parameter deforms the cleft object but not the lifting.
struct DeformationParam {
  enum class Reason {
    free_param,
    character_nontrivial,
    qls_condition,
    group_trivial
  };
  Cyc lambda;             // chosen value; must be 0 unless admissible
  bool admissible = false;
  Reason reason = Reason::free_param;
  /// Quantum-linear-space certificate for power relations x_j^N: true when
  /// omega_{jl}^N = 1 for every other letter l (with omega the q-matrix
  /// symmetrized to omega_{jl} omega_{lj} = 1). Certifies nonvanishing of
  /// the deformed quotient without a completion. Meaningless (true) for
  /// non-power elements.
  bool qls_ok = true;
};

/// Flattened over the strata in order.
struct DeformationParams {
  std::vector<DeformationParam> params;
};

/// lambda_i is free iff chi_i is trivial on Gamma and g_i != 1.
DeformationParams admissibility(const YDDatum& d, const Stratification& S);

/// Presentation of a cleft object A at some level of the tower: the quotient
/// of T(V)#kGamma by the deformed relations u_i - lambda_i of all strata up
/// to `level` (exclusive upper end: level k uses strata 0..k-1).
struct CleftPresentation {
  RewriteSystem system;
  unsigned level = 0;
};

/// A = T(V)#kGamma itself, the level-0 cleft object.
CleftPresentation cleft_base(const YDDatum& d, const MonomialOrder& order,
                             unsigned degree_bound);

struct CleftBuildResult {
  bool ok = false;
  std::string error;
  std::optional<CleftPresentation> cleft;
};

/// Quotient parent by u_i - lambda_i for the next stratum, then verify the
/// PBW-deformation invariants: rule leads equal those of H_{next} and the
/// normal-word counts agree degree by degree.
CleftBuildResult build_cleft(const YDDatum& d, const CleftPresentation& parent,
                             const Stratum& stratum,
                             const std::vector<Cyc>& lambdas,
                             const RewriteSystem& H_next,
                             unsigned degree_bound);

/// Section gamma : H -> A given by the shared normal-word basis, with its
/// convolution inverse built by the triangular degree recursion
///   gamma^{-1}(h) = (eps(h) 1 - sum_{lower} gamma^{-1}(h_1) gamma(h_2)) g^{-1}.
class Section {
 public:
  Section(const YDDatum& d, const RewriteSystem& A, const RewriteSystem& H);

  SmashElement gamma(const SmashElement& h) const;
  SmashElement gamma_inv(const SmashElement& h) const;

  /// Colinearity rho(gamma(h)) = (gamma (x) id)(Delta_H(h)) and the
  /// convolution identity gamma_inv * gamma = eps, checked exactly on h.
  bool verify_on(const SmashElement& h) const;

  /// Memoized (nf_H (x) nf_H)(Delta(k)) for a single basis element of H;
  /// shared by the inverse recursion and cocycle evaluation.
  const TensorElement& delta_H(const SmashKey& k) const;

 private:
  const SmashElement& key_inverse(const SmashKey& k) const;

  const YDDatum& d_;
  const RewriteSystem& A_;
  const RewriteSystem& H_;
  mutable std::map<SmashKey, SmashElement> inv_cache_;
  mutable std::map<SmashKey, TensorElement> delta_cache_;
};

/// rho(a) = (nf_A (x) nf_H)(Delta(a)): the right H-coaction of the cleft
/// object in normal coordinates.
TensorElement coaction_right(const YDDatum& d, const RewriteSystem& A,
                             const RewriteSystem& H, const SmashElement& a);

/// Miyashita-Ulbrich action a <- pi(x) = pi_A(S(x_1)) a pi_A(x_2) for x in
/// the smash product upstairs.
SmashElement mu_action(const YDDatum& d, const RewriteSystem& A,
                       const SmashElement& a, const SmashElement& x);

/// Verification that u needs no correction term: the left coaction of
/// gamma(u), computed through can^{-1}(a (x) h) = a gamma^{-1}(h_1) (x)
/// gamma(h_2), satisfies
///   lambda(gamma(u)) - g (x) gamma(u) = (gamma (x) gamma^{-1})Delta_H(u) (x) 1.
/// residual_zero certifies that u - c(1 - g) generates the next Hopf
/// quotient; otherwise residual_terms counts the obstruction.
struct LiftRelationResult {
  bool residual_zero = false;
  size_t residual_terms = 0;
};
LiftRelationResult lift_relation(const YDDatum& d, const StratumElement& u,
                                 const RewriteSystem& A,
                                 const RewriteSystem& H);

/// Lifting presentation L(lambda) = T(V)#kGamma / <u_i - lambda_i(1 - g_i)>
/// accumulated over all strata.
struct LiftingPresentation {
  RewriteSystem system;
  std::vector<Cyc> lambdas;
  bool hopf_ok = false;     // every deformed relation skew-primitive at its level
  bool leads_match = false; // PBW-deformation certificate
  mpz_class dimension = 0;  // including the group algebra factor
};

struct LiftingBuildResult {
  bool ok = false;
  std::string error;
  std::optional<LiftingPresentation> L;
};

/// Builds L(lambda) level by level: at each level the deformed relations are
/// checked to be (g_i,1)-skew-primitive against the current quotient (Hopf
/// ideal certificate), then adjoined and completed. Finally the rule leads
/// are compared with the undeformed tower top and the dimension must equal
/// dim B(V) |Gamma|.
LiftingBuildResult build_lifting(const YDDatum& d, const Stratification& S,
                                 const std::vector<Cyc>& lambdas,
                                 unsigned degree_bound);

/// Compatibility of the next stratum with the deformed prefix M: each n in
/// next must satisfy Delta(n) - n (x) 1 - g_n (x) n = 0 modulo I_M on both
/// tensor legs.
bool good_module_check(const YDDatum& d, const RewriteSystem& M_system,
                       const Stratum& next);

/// sigma(h, k) = gamma(h_1) gamma(k_1) gamma_inv(h_2 k_2): scalar-valued on
/// coinvariants; throws std::logic_error if the result is not a multiple of
/// the unit.
Cyc cocycle_eval(const YDDatum& d, const RewriteSystem& A,
                 const RewriteSystem& H, const Section& sec,
                 const SmashElement& h, const SmashElement& k);

}  // namespace nlift

#endif
