#include "nlift/lifting.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nlift {

namespace {

/// If u = c * x_j^m (x) 1 for a single letter j, returns that letter.
std::optional<unsigned> power_letter(const SmashElement& u) {
  if (u.size() != 1) return std::nullopt;
  const SmashKey& k = u.terms().begin()->first;
  if (k.word.empty() || !k.grp.is_identity()) return std::nullopt;
  for (uint8_t l : k.word)
    if (l != k.word[0]) return std::nullopt;
  return k.word[0];
}

/// Symmetrized braiding omega_{jl} with omega_{jl} omega_{lj} = 1 and
/// omega_{jl} = q_{jl} for j < l.
Cyc omega(const YDDatum& d, unsigned j, unsigned l) {
  return j < l ? d.q(j, l) : d.q(l, j).inverse();
}

std::set<Word> lead_words(const RewriteSystem& R) {
  std::set<Word> s;
  for (const auto& r : R.rules()) s.insert(r.lead);
  return s;
}

SmashElement single_key(const YDDatum& d, const SmashKey& k) {
  return SmashElement::term(k.word, k.grp, Cyc::one(d.ambient_order()));
}

}  // namespace

DeformationParams admissibility(const YDDatum& d, const Stratification& S) {
  DeformationParams out;
  unsigned amb = d.ambient_order();
  for (const auto& st : S.strata) {
    for (const auto& e : st.elements) {
      DeformationParam p;
      p.lambda = Cyc::zero(amb);
      // quantum-linear-space condition for power relations x_j^N
      p.qls_ok = true;
      if (auto j = power_letter(e.base)) {
        unsigned N = e.exponent * e.base.terms().begin()->first.word.size();
        for (unsigned l = 0; l < d.theta(); ++l) {
          if (l == *j) continue;
          if (!omega(d, *j, l).pow(N).is_one()) p.qls_ok = false;
        }
      }
      if (!d.is_trivial_on_group(e.chi)) {
        p.admissible = false;
        p.reason = DeformationParam::Reason::character_nontrivial;
      } else if (!p.qls_ok) {
        p.admissible = false;
        p.reason = DeformationParam::Reason::qls_condition;
      } else if (e.g.is_identity()) {
        // admissible for the cleft object; invisible in the lifting since
        // u - lambda(1 - g) = u
        p.admissible = true;
        p.reason = DeformationParam::Reason::group_trivial;
      } else {
        p.admissible = true;
        p.reason = DeformationParam::Reason::free_param;
      }
      out.params.push_back(std::move(p));
    }
  }
  return out;
}

CleftPresentation cleft_base(const YDDatum& d, const MonomialOrder& order,
                             unsigned degree_bound) {
  RewriteSystem R(d, order);
  R.complete(degree_bound);
  return CleftPresentation{std::move(R), 0};
}

CleftBuildResult build_cleft(const YDDatum& d, const CleftPresentation& parent,
                             const Stratum& stratum,
                             const std::vector<Cyc>& lambdas,
                             const RewriteSystem& H_next,
                             unsigned degree_bound) {
  if (lambdas.size() != stratum.elements.size())
    throw std::invalid_argument("build_cleft: lambda count != stratum size");
  CleftBuildResult res;
  RewriteSystem R = parent.system;
  for (size_t i = 0; i < stratum.elements.size(); ++i) {
    const StratumElement& e = stratum.elements[i];
    SmashElement rel = reduced_power(R, e.base, e.exponent) -
                       SmashElement::unit(d) * lambdas[i];
    SmashElement nf = R.normal_form(rel);
    if (nf.is_zero()) continue;
    if (nf.degree() == 0) {
      res.error = "collapse: relation " +
                  (e.name.empty() ? std::string("#") + std::to_string(i)
                                  : e.name) +
                  " reduces to the invertible element " + nf.to_string();
      return res;
    }
    try {
      R.add_relation(nf);
    } catch (const std::domain_error& ex) {
      res.error = std::string("collapse: ") + ex.what();
      return res;
    }
  }
  if (R.complete(degree_bound) != RewriteSystem::Status::confluent) {
    res.error = "budget exhausted during completion";
    return res;
  }
  // PBW-deformation invariant: rule leads coincide with the undeformed level
  if (lead_words(R) != lead_words(H_next)) {
    res.error = "lead mismatch against the undeformed quotient";
    return res;
  }
  // cofreeness at desk scale: normal-word counts agree degree by degree
  auto da = R.dimension(false, degree_bound);
  auto dh = H_next.dimension(false, degree_bound);
  size_t n = std::min(da.hilbert.size(), dh.hilbert.size());
  for (size_t k = 0; k < n; ++k) {
    if (da.hilbert[k] != dh.hilbert[k]) {
      res.error = "normal-word count differs at degree " + std::to_string(k);
      return res;
    }
  }
  res.ok = true;
  res.cleft = CleftPresentation{std::move(R), parent.level + 1};
  return res;
}

Section::Section(const YDDatum& d, const RewriteSystem& A,
                 const RewriteSystem& H)
    : d_(d), A_(A), H_(H) {}

SmashElement Section::gamma(const SmashElement& h) const {
  return A_.normal_form(h);
}

const TensorElement& Section::delta_H(const SmashKey& k) const {
  auto it = delta_cache_.find(k);
  if (it != delta_cache_.end()) return it->second;
  TensorElement D = reduced_coproduct(d_, H_, H_, single_key(d_, k));
  return delta_cache_.emplace(k, std::move(D)).first->second;
}

const SmashElement& Section::key_inverse(const SmashKey& k) const {
  auto it = inv_cache_.find(k);
  if (it != inv_cache_.end()) return it->second;
  SmashElement result;
  if (k.word.empty()) {
    result = SmashElement::group_term(d_, k.grp.inverse(d_.group()));
  } else {
    // Delta_H(w g) has exactly one term with a full-degree first leg,
    // (w g) (x) g with coefficient 1; every other first leg has strictly
    // smaller degree, so the convolution identity solves for gamma^{-1}(w g):
    //   gamma^{-1}(w g) = -(sum_lower gamma^{-1}(h_1) gamma(h_2)) g^{-1}.
    const TensorElement& D = delta_H(k);
    SmashElement acc;
    for (const auto& [key, c] : D.terms()) {
      if (key.first.word.size() == k.word.size()) continue;  // isolated term
      SmashElement prod =
          A_.multiply_reduced(key_inverse(key.first), single_key(d_, key.second));
      acc += prod * c;
    }
    result = A_.multiply_reduced(
        -acc, SmashElement::group_term(d_, k.grp.inverse(d_.group())));
  }
  return inv_cache_.emplace(k, std::move(result)).first->second;
}

SmashElement Section::gamma_inv(const SmashElement& h) const {
  SmashElement hn = H_.normal_form(h);
  SmashElement out;
  for (const auto& [k, c] : hn.terms()) out += key_inverse(k) * c;
  return out;
}

bool Section::verify_on(const SmashElement& h) const {
  TensorElement D = reduced_coproduct(d_, H_, H_, h);
  // colinearity: rho(gamma(h)) = (gamma (x) id)(Delta_H(h))
  TensorElement lhs = reduced_coproduct(d_, A_, H_, gamma(h));
  TensorElement rhs;
  for (const auto& [key, c] : D.terms())
    rhs += TensorElement::simple(A_.normal_form(single_key(d_, key.first)),
                                 single_key(d_, key.second)) *
           c;
  if (lhs != rhs) return false;
  // convolution identity: gamma^{-1} * gamma = eps
  SmashElement conv;
  for (const auto& [key, c] : D.terms()) {
    SmashElement g2 = A_.normal_form(single_key(d_, key.second));
    conv += A_.normal_form(smash_multiply(d_, key_inverse(key.first), g2)) * c;
  }
  return conv == SmashElement::unit(d_) * counit(d_, H_.normal_form(h));
}

TensorElement coaction_right(const YDDatum& d, const RewriteSystem& A,
                             const RewriteSystem& H, const SmashElement& a) {
  return reduced_coproduct(d, A, H, a);
}

SmashElement mu_action(const YDDatum& d, const RewriteSystem& A,
                       const SmashElement& a, const SmashElement& x) {
  TensorElement D = coproduct(d, x);
  SmashElement out;
  for (const auto& [key, c] : D.terms()) {
    SmashElement s1 = antipode(d, single_key(d, key.first));
    SmashElement t = smash_multiply(d, smash_multiply(d, s1, a),
                                    single_key(d, key.second));
    out += t * c;
  }
  return A.normal_form(out);
}

LiftRelationResult lift_relation(const YDDatum& d, const StratumElement& u,
                                 const RewriteSystem& A,
                                 const RewriteSystem& H) {
  Section sec(d, A, H);
  using TripleKey = std::array<SmashKey, 3>;
  std::map<TripleKey, Cyc> T;
  auto add = [&T](const SmashKey& a, const SmashKey& b, const SmashKey& c,
                  const Cyc& v) {
    if (v.is_zero()) return;
    TripleKey k{a, b, c};
    auto [it, fresh] = T.emplace(k, v);
    if (!fresh) {
      it->second += v;
      if (it->second.is_zero()) T.erase(it);
    }
  };
  SmashKey unit_key{{}, GroupElement::identity(d.group())};

  // left coaction of gamma(u) through can^{-1}(a (x) h) =
  //   a (x) gamma^{-1}(h_1) (x) gamma(h_2)
  SmashElement y = reduced_power(A, u.base, u.exponent);  // gamma(u)
  TensorElement rho = reduced_coproduct_power(d, A, H, u.base, u.exponent);
  for (const auto& [key, c] : rho.terms()) {
    TensorElement Dh = reduced_coproduct(d, H, H, single_key(d, key.second));
    for (const auto& [hk, c2] : Dh.terms()) {
      SmashElement l2 = sec.gamma_inv(single_key(d, hk.first));
      SmashElement l3 = A.normal_form(single_key(d, hk.second));
      for (const auto& [k2, v2] : l2.terms())
        for (const auto& [k3, v3] : l3.terms())
          add(key.first, k2, k3, c * c2 * v2 * v3);
    }
  }
  // minus (g (x) g^{-1}) (x) gamma(u)
  SmashKey gk{{}, u.g};
  SmashKey gik{{}, u.g.inverse(d.group())};
  for (const auto& [ky, cy] : y.terms()) add(gk, gik, ky, -cy);
  // minus u~ (x) 1 with u~ = sum gamma(u_1) (x) gamma^{-1}(u_2)
  TensorElement Du = reduced_coproduct_power(d, H, H, u.base, u.exponent);
  for (const auto& [key, c] : Du.terms()) {
    SmashElement a1 = A.normal_form(single_key(d, key.first));
    SmashElement a2 = sec.gamma_inv(single_key(d, key.second));
    for (const auto& [k1, v1] : a1.terms())
      for (const auto& [k2, v2] : a2.terms())
        add(k1, k2, unit_key, -(c * v1 * v2));
  }

  LiftRelationResult res;
  res.residual_terms = T.size();
  res.residual_zero = T.empty();
  return res;
}

LiftingBuildResult build_lifting(const YDDatum& d, const Stratification& S,
                                 const std::vector<Cyc>& lambdas,
                                 unsigned degree_bound) {
  LiftingBuildResult res;
  size_t n = 0;
  for (const auto& st : S.strata) n += st.elements.size();
  if (lambdas.size() != n)
    throw std::invalid_argument("build_lifting: lambda count != element count");
  if (S.systems.size() != S.strata.size() + 1) {
    res.error = "stratification not validated";
    return res;
  }
  DeformationParams adm = admissibility(d, S);
  for (size_t i = 0; i < n; ++i) {
    if (!adm.params[i].admissible && !lambdas[i].is_zero()) {
      res.error = "lambda " + std::to_string(i) + " must vanish (" +
                  (adm.params[i].reason ==
                           DeformationParam::Reason::character_nontrivial
                       ? "character nontrivial on the group"
                       : "quantum-linear-space condition fails") +
                  ")";
      return res;
    }
  }

  RewriteSystem L(d, S.order);
  L.complete(degree_bound);
  bool hopf_ok = true;
  SmashElement unit = SmashElement::unit(d);
  size_t idx = 0;
  for (const auto& st : S.strata) {
    std::vector<SmashElement> to_add;
    for (const auto& e : st.elements) {
      const Cyc& lam = lambdas[idx++];
      SmashElement gt = SmashElement::group_term(d, e.g);
      SmashElement corr = (unit - gt) * lam;  // lambda (1 - g)
      // Hopf-ideal certificate: r = u - lambda(1 - g) must be
      // (g,1)-skew-primitive modulo the current level.
      SmashElement r =
          reduced_power(L, e.base, e.exponent) - L.normal_form(corr);
      TensorElement defect =
          reduced_coproduct_power(d, L, L, e.base, e.exponent);
      defect -= TensorElement::simple(unit, unit) * lam;
      defect += TensorElement::simple(gt, gt) * lam;
      defect -= TensorElement::simple(r, unit);
      defect -= TensorElement::simple(gt, r);
      defect = L.tensor_normal_form(defect);
      if (!defect.is_zero()) {
        hopf_ok = false;
        res.error = "deformed relation " +
                    (e.name.empty() ? "#" + std::to_string(idx - 1) : e.name) +
                    " is not skew-primitive at its level";
        return res;
      }
      if (!r.is_zero()) to_add.push_back(std::move(r));
    }
    for (const auto& r : to_add) {
      if (r.degree() == 0) {
        res.error = "collapse: scalar relation";
        return res;
      }
      L.add_relation(r);
    }
    if (L.complete(degree_bound) != RewriteSystem::Status::confluent) {
      res.error = "budget exhausted during completion";
      return res;
    }
  }

  bool leads_match = lead_words(L) == lead_words(S.systems.back());
  auto dim = L.dimension(true);
  if (!dim.finite) {
    res.error = "deformed quotient is infinite-dimensional";
    return res;
  }
  mpz_class expect =
      S.systems.back().dimension(false).dim * mpz_class(d.group().order());
  LiftingPresentation P{std::move(L), lambdas, hopf_ok, leads_match, dim.dim};
  res.ok = hopf_ok && leads_match && dim.dim == expect;
  if (!res.ok && res.error.empty()) {
    std::ostringstream os;
    os << "invariant failure:";
    if (!leads_match) os << " lead mismatch;";
    if (dim.dim != expect)
      os << " dimension " << dim.dim.get_str() << " != " << expect.get_str();
    res.error = os.str();
  }
  res.L = std::move(P);
  return res;
}

bool good_module_check(const YDDatum& d, const RewriteSystem& M_system,
                       const Stratum& next) {
  for (const auto& e : next.elements)
    if (!skew_primitive_defect(d, e, M_system).is_zero()) return false;
  return true;
}

Cyc cocycle_eval(const YDDatum& d, const RewriteSystem& A,
                 const RewriteSystem& H, const Section& sec,
                 const SmashElement& h, const SmashElement& k) {
  SmashElement hn = H.normal_form(h);
  SmashElement kn = H.normal_form(k);
  TensorElement Dh, Dk;
  for (const auto& [key, c] : hn.terms()) Dh += sec.delta_H(key) * c;
  for (const auto& [key, c] : kn.terms()) Dk += sec.delta_H(key) * c;
  SmashElement out;
  for (const auto& [hk, c1] : Dh.terms()) {
    SmashElement gh1 = A.normal_form(single_key(d, hk.first));
    for (const auto& [kk, c2] : Dk.terms()) {
      SmashElement p = A.multiply_reduced(gh1, single_key(d, kk.first));
      SmashElement tail = H.multiply_reduced(
          H.normal_form(single_key(d, hk.second)), single_key(d, kk.second));
      out += A.multiply_reduced(p, sec.gamma_inv(tail)) * (c1 * c2);
    }
  }
  if (out.is_zero()) return Cyc::zero(d.ambient_order());
  if (out.size() != 1)
    throw std::logic_error("cocycle_eval: non-scalar value " + out.to_string());
  const auto& [key, c] = *out.terms().begin();
  if (!key.word.empty() || !key.grp.is_identity())
    throw std::logic_error("cocycle_eval: non-scalar value " + out.to_string());
  return c;
}

}  // namespace nlift
