#ifndef NLIFT_REWRITE_HPP
#define NLIFT_REWRITE_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nlift/algebra.hpp"

namespace nlift {

/// Degree-lexicographic order on words, ties broken by letter precedence.
/// precedence[i] is the rank of letter i; lower rank compares smaller.
struct MonomialOrder {
  std::vector<uint8_t> precedence;

  static MonomialOrder standard(unsigned theta);

  bool less(const Word& a, const Word& b) const;
  std::string to_string() const;
};

/// lead (x) 1  ->  tail, with tail strictly smaller in the order. Tail terms
/// may carry group parts (kGamma coefficients on the right).
struct RewriteRule {
  Word lead;
  SmashElement tail;
};

/// Invert an element of kGamma (stored as a SmashElement supported on the
/// empty word) via the character table of the abelian group. Returns nullopt
/// when not invertible.
std::optional<SmashElement> group_algebra_inverse(const YDDatum& d,
                                                  const SmashElement& a);

class RewriteSystem {
 public:
  enum class Status { incomplete, confluent, budget_exhausted };

  RewriteSystem(YDDatum d, MonomialOrder order);

  const YDDatum& datum() const { return datum_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  Status status() const { return status_; }
  unsigned degree_bound() const { return degree_bound_; }
  unsigned max_lead_degree() const;

  /// Reduce r fully and, if nonzero, orient it into a rule. Throws
  /// std::domain_error when the leading kGamma coefficient is not invertible.
  /// Returns false when r reduces to zero.
  bool add_relation(const SmashElement& r);

  /// Knuth-Bendix completion: process every critical pair of the current
  /// rules in (degree, word) order. On success the system is globally
  /// confluent; budget_exhausted means a derived rule exceeded degree_bound.
  Status complete(unsigned degree_bound);

  SmashElement normal_form(const SmashElement& a) const;
  /// nf(a * b) for already-reduced a; folds b letter by letter through a
  /// memoized (normal word, letter) multiplication table.
  SmashElement multiply_reduced(const SmashElement& a,
                                const SmashElement& b) const;
  TensorElement tensor_normal_form(const TensorElement& t) const;
  bool is_normal_word(const Word& w) const;
  /// nf(a) == 0; decides ideal membership once the system is confluent.
  bool ideal_member(const SmashElement& a) const;

  /// All normal words of degree <= max_degree, in (degree, lex) order.
  std::vector<Word> normal_words(unsigned max_degree) const;

  struct Dimension {
    bool finite = false;
    mpz_class dim = 0;               // number of normal words (finite case)
    unsigned top_degree = 0;
    std::vector<mpz_class> hilbert;  // normal-word counts per degree
  };
  /// Count normal words via the lead-word automaton. Exact dimension of the
  /// quotient when the system is confluent. with_group multiplies by |Gamma|.
  /// In the infinite case hilbert is filled up to at least hilbert_degrees.
  Dimension dimension(bool with_group = false,
                      unsigned hilbert_degrees = 0) const;

  /// Optional progress callback: called with (pairs processed, rule count,
  /// max lead degree) every `trace_every` processed pairs.
  void set_trace(void (*fn)(size_t, size_t, unsigned), size_t every = 1000) {
    trace_ = fn;
    trace_every_ = every;
  }

  std::string serialize() const;
  static RewriteSystem deserialize(const YDDatum& d, const std::string& text);

  /// Optional on-disk memoization of complete(): when a directory is set,
  /// every successful completion is stored keyed by the input presentation
  /// (datum, order, bound, rules) and identical future calls load the stored
  /// result instead of re-running Knuth-Bendix. Empty string disables.
  static void set_completion_cache(const std::string& dir);

 private:
  struct Match {
    size_t rule;
    size_t pos;
  };
  std::optional<Match> find_match(const Word& w) const;
  const SmashElement& word_normal_form(const Word& w) const;
  SmashElement apply_at(const Word& w, size_t rule, size_t pos) const;
  SmashElement reduce_pending(const SmashElement& a) const;
  SmashElement reduce_fold(const SmashElement& a) const;
  bool fold_profitable() const;
  const SmashElement& word_letter_nf(const Word& v, uint8_t l) const;
  SmashElement times_letter(const SmashElement& a, uint8_t l) const;
  void push_overlaps(size_t idx);
  void invalidate_cache() const;

  YDDatum datum_;
  MonomialOrder order_;
  std::vector<RewriteRule> rules_;
  std::vector<bool> active_;
  Status status_ = Status::incomplete;
  unsigned degree_bound_ = 0;

  // critical pair: superposition word + the two one-step reductions
  struct Pair {
    Word word;
    size_t rule_a, pos_a, rule_b, pos_b;
    bool operator<(const Pair& o) const;
  };
  std::set<Pair> queue_;
  void (*trace_)(size_t, size_t, unsigned) = nullptr;
  size_t trace_every_ = 1000;

  mutable std::map<Word, SmashElement> nf_cache_;
  mutable std::map<std::pair<Word, uint8_t>, SmashElement> letter_cache_;
  mutable std::optional<bool> fold_ok_;  // finite normal language => fold
};

/// Reduce the two tensor legs with (possibly different) systems.
TensorElement tensor_normal_form(const RewriteSystem& left,
                                 const RewriteSystem& right,
                                 const TensorElement& t);

}  // namespace nlift

#endif
