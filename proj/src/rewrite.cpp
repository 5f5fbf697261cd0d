#include "nlift/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "nlift/cache.hpp"

namespace nlift {

MonomialOrder MonomialOrder::standard(unsigned theta) {
  MonomialOrder o;
  o.precedence.resize(theta);
  for (unsigned i = 0; i < theta; ++i) o.precedence[i] = i;
  return o;
}

bool MonomialOrder::less(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i)
    if (precedence[a[i]] != precedence[b[i]])
      return precedence[a[i]] < precedence[b[i]];
  return false;
}

std::string MonomialOrder::to_string() const {
  std::ostringstream os;
  os << "deglex";
  for (uint8_t p : precedence) os << " " << static_cast<int>(p);
  return os.str();
}

namespace {

// Iterate all exponent vectors of the group.
template <typename F>
void for_each_index(const AbelianGroup& g, F&& f) {
  std::vector<long> idx(g.rank(), 0);
  for (;;) {
    f(idx);
    size_t j = 0;
    while (j < idx.size()) {
      if (++idx[j] < static_cast<long>(g.factors[j])) break;
      idx[j] = 0;
      ++j;
    }
    if (j == idx.size()) break;
  }
}

}  // namespace

std::optional<SmashElement> group_algebra_inverse(const YDDatum& d,
                                                  const SmashElement& a) {
  if (a.is_zero()) return std::nullopt;
  for (const auto& [k, c] : a.terms())
    if (!k.word.empty())
      throw std::invalid_argument("not a group-algebra element");
  // single-term fast path
  if (a.size() == 1) {
    const auto& [k, c] = *a.terms().begin();
    return SmashElement::term({}, k.grp.inverse(d.group()), c.inverse());
  }
  const AbelianGroup& G = d.group();
  unsigned long N = G.order();
  unsigned amb = d.ambient_order();
  // Fourier transform over the character group; invertible iff all values
  // are nonzero, then invert pointwise and transform back.
  std::vector<Cyc> vals;
  vals.reserve(N);
  bool ok = true;
  for_each_index(G, [&](const std::vector<long>& psi_idx) {
    if (!ok) return;
    Character psi(G, psi_idx);
    Cyc v = Cyc::zero(amb);
    for (const auto& [k, c] : a.terms()) v += c * d.evaluate(psi, k.grp);
    if (v.is_zero()) {
      ok = false;
      return;
    }
    vals.push_back(v.inverse());
  });
  if (!ok) return std::nullopt;
  SmashElement inv;
  Cyc scale(amb, Rational(1, static_cast<unsigned long>(N)));
  for_each_index(G, [&](const std::vector<long>& h_idx) {
    GroupElement h(G, h_idx);
    GroupElement h_inv = h.inverse(G);
    Cyc coeff = Cyc::zero(amb);
    size_t vi = 0;
    for_each_index(G, [&](const std::vector<long>& psi_idx) {
      Character psi(G, psi_idx);
      coeff += vals[vi++] * d.evaluate(psi, h_inv);
    });
    inv += SmashElement::term({}, h, coeff * scale);
  });
  return inv;
}

RewriteSystem::RewriteSystem(YDDatum d, MonomialOrder order)
    : datum_(std::move(d)), order_(std::move(order)) {
  if (order_.precedence.size() != datum_.theta())
    throw std::invalid_argument("order precedence size mismatch");
}

unsigned RewriteSystem::max_lead_degree() const {
  unsigned m = 0;
  for (size_t i = 0; i < rules_.size(); ++i)
    if (active_[i]) m = std::max<unsigned>(m, rules_[i].lead.size());
  return m;
}

bool RewriteSystem::Pair::operator<(const Pair& o) const {
  if (word.size() != o.word.size()) return word.size() < o.word.size();
  if (word != o.word) return word < o.word;
  return std::tie(rule_a, pos_a, rule_b, pos_b) <
         std::tie(o.rule_a, o.pos_a, o.rule_b, o.pos_b);
}

void RewriteSystem::invalidate_cache() const {
  nf_cache_.clear();
  letter_cache_.clear();
  fold_ok_.reset();
}

std::optional<RewriteSystem::Match> RewriteSystem::find_match(
    const Word& w) const {
  for (size_t pos = 0; pos < w.size(); ++pos) {
    for (size_t r = 0; r < rules_.size(); ++r) {
      if (!active_[r]) continue;
      const Word& lead = rules_[r].lead;
      if (lead.size() > w.size() - pos) continue;
      if (std::equal(lead.begin(), lead.end(), w.begin() + pos))
        return Match{r, pos};
    }
  }
  return std::nullopt;
}

bool RewriteSystem::is_normal_word(const Word& w) const {
  return !find_match(w).has_value();
}

SmashElement RewriteSystem::apply_at(const Word& w, size_t rule,
                                     size_t pos) const {
  const RewriteRule& rl = rules_[rule];
  Word suffix(w.begin() + pos + rl.lead.size(), w.end());
  SmashElement out;
  for (const auto& [k, c] : rl.tail.terms()) {
    Word nw(w.begin(), w.begin() + pos);
    nw.insert(nw.end(), k.word.begin(), k.word.end());
    nw.insert(nw.end(), suffix.begin(), suffix.end());
    Cyc coeff = c * word_character_value(datum_, suffix, k.grp);
    out += SmashElement::term(std::move(nw), k.grp, std::move(coeff));
  }
  return out;
}

const SmashElement& RewriteSystem::word_normal_form(const Word& w) const {
  auto it = nf_cache_.find(w);
  if (it != nf_cache_.end()) return it->second;
  SmashElement result =
      normal_form(SmashElement::term(w, GroupElement::identity(datum_.group()),
                                     Cyc::one(datum_.ambient_order())));
  auto [ins, ok] = nf_cache_.emplace(w, std::move(result));
  return ins->second;
}

SmashElement RewriteSystem::reduce_pending(const SmashElement& a) const {
  // Rewrite the largest reducible word until none is left. Replacements are
  // strictly smaller in the order, so every distinct word is popped at most
  // once and coefficients get the chance to cancel before being expanded.
  auto word_less = [this](const Word& x, const Word& y) {
    return order_.less(x, y);
  };
  std::map<Word, std::map<GroupElement, Cyc>, decltype(word_less)> pending(
      word_less);
  for (const auto& [k, c] : a.terms()) {
    auto& row = pending[k.word];
    auto [sit, fresh] = row.try_emplace(k.grp, c);
    if (!fresh) sit->second += c;
  }
  SmashElement result;
  while (!pending.empty()) {
    auto it = std::prev(pending.end());
    Word w = it->first;
    std::map<GroupElement, Cyc> coeffs = std::move(it->second);
    pending.erase(it);
    bool all_zero = true;
    for (const auto& [g, c] : coeffs)
      if (!c.is_zero()) all_zero = false;
    if (all_zero) continue;
    auto m = find_match(w);
    if (!m) {
      for (auto& [g, c] : coeffs) result.add_term({w, g}, c);
      continue;
    }
    SmashElement step = apply_at(w, m->rule, m->pos);
    for (const auto& [k, cstep] : step.terms()) {
      auto& row = pending[k.word];
      for (const auto& [g, c] : coeffs) {
        if (c.is_zero()) continue;
        Cyc v = cstep * c;
        auto [sit, fresh] = row.try_emplace(k.grp * g, v);
        if (!fresh) sit->second += v;
      }
    }
  }
  return result;
}

const SmashElement& RewriteSystem::word_letter_nf(const Word& v,
                                                  uint8_t l) const {
  auto key = std::make_pair(v, l);
  auto it = letter_cache_.find(key);
  if (it != letter_cache_.end()) return it->second;
  Word w = v;
  w.push_back(l);
  SmashElement result;
  auto m = find_match(w);
  if (!m) {
    result = SmashElement::term(w, GroupElement::identity(datum_.group()),
                                Cyc::one(datum_.ambient_order()));
  } else if (m->pos + rules_[m->rule].lead.size() == w.size()) {
    // v is normal, so the match ends at the new letter; the prefix is a
    // prefix of v, hence normal, and the tail folds letter by letter.
    const RewriteRule& rl = rules_[m->rule];
    Word prefix(w.begin(), w.begin() + m->pos);
    SmashElement pe =
        SmashElement::term(prefix, GroupElement::identity(datum_.group()),
                           Cyc::one(datum_.ambient_order()));
    for (const auto& [k, c] : rl.tail.terms()) {
      SmashElement e = pe;
      for (uint8_t tl : k.word) e = times_letter(e, tl);
      for (const auto& [ek, ec] : e.terms())
        result.add_term({ek.word, ek.grp * k.grp}, ec * c);
    }
  } else {
    // caller passed a non-normal v; fall back to generic reduction
    result = reduce_pending(SmashElement::term(
        std::move(w), GroupElement::identity(datum_.group()),
        Cyc::one(datum_.ambient_order())));
  }
  auto [ins, ok] = letter_cache_.emplace(std::move(key), std::move(result));
  return ins->second;
}

SmashElement RewriteSystem::times_letter(const SmashElement& a,
                                         uint8_t l) const {
  SmashElement out;
  for (const auto& [k, c] : a.terms()) {
    // (v (x) h) x_l = chi_l(h) (v x_l (x) h)
    Cyc scale = c * datum_.evaluate(datum_.chi(l), k.grp);
    const SmashElement& wl = word_letter_nf(k.word, l);
    for (const auto& [wk, wc] : wl.terms())
      out.add_term({wk.word, wk.grp * k.grp}, wc * scale);
  }
  return out;
}

SmashElement RewriteSystem::reduce_fold(const SmashElement& a) const {
  SmashElement out;
  for (const auto& [k, c] : a.terms()) {
    SmashElement e = SmashElement::term(
        {}, GroupElement::identity(datum_.group()),
        Cyc::one(datum_.ambient_order()));
    for (uint8_t l : k.word) e = times_letter(e, l);
    for (const auto& [ek, ec] : e.terms())
      out.add_term({ek.word, ek.grp * k.grp}, ec * c);
  }
  return out;
}

bool RewriteSystem::fold_profitable() const {
  // When the lead words already cut the language down to finitely many
  // normal words, folding letter by letter keeps every intermediate element
  // inside that finite basis. Otherwise intermediate normal forms can be
  // huge and the largest-term strategy with early cancellation wins.
  if (!fold_ok_.has_value()) {
    Dimension dim = dimension(false);
    fold_ok_ = dim.finite && dim.dim <= 200000;
  }
  return *fold_ok_;
}

SmashElement RewriteSystem::normal_form(const SmashElement& a) const {
  return fold_profitable() ? reduce_fold(a) : reduce_pending(a);
}

SmashElement RewriteSystem::multiply_reduced(const SmashElement& a,
                                             const SmashElement& b) const {
  SmashElement out;
  for (const auto& [k, c] : b.terms()) {
    SmashElement e = a;
    for (uint8_t l : k.word) e = times_letter(e, l);
    for (const auto& [ek, ec] : e.terms())
      out.add_term({ek.word, ek.grp * k.grp}, ec * c);
  }
  return out;
}

TensorElement RewriteSystem::tensor_normal_form(const TensorElement& t) const {
  return nlift::tensor_normal_form(*this, *this, t);
}

bool RewriteSystem::ideal_member(const SmashElement& a) const {
  return normal_form(a).is_zero();
}

bool RewriteSystem::add_relation(const SmashElement& raw) {
  SmashElement r = normal_form(raw);
  if (r.is_zero()) return false;
  // leading word and its kGamma coefficient
  const Word* lead = nullptr;
  for (const auto& [k, c] : r.terms())
    if (!lead || order_.less(*lead, k.word)) lead = &k.word;
  Word lead_word = *lead;
  if (degree_bound_ > 0 && lead_word.size() > degree_bound_) {
    status_ = Status::budget_exhausted;
    return true;
  }
  SmashElement lead_coeff;
  for (const auto& [k, c] : r.terms())
    if (k.word == lead_word) lead_coeff += SmashElement::term({}, k.grp, c);
  auto inv = group_algebra_inverse(datum_, lead_coeff);
  if (!inv)
    throw std::domain_error(
        "leading coefficient is a zero divisor in the group algebra");
  SmashElement scaled = smash_multiply(datum_, r, *inv);
  // tail = lead - scaled (the lead term of `scaled` is exactly lead (x) 1)
  SmashElement tail;
  for (const auto& [k, c] : scaled.terms()) {
    if (k.word == lead_word) continue;
    tail += SmashElement::term(k.word, k.grp, -c);
  }
  size_t idx = rules_.size();
  rules_.push_back(RewriteRule{lead_word, std::move(tail)});
  active_.push_back(true);
  invalidate_cache();
  status_ = Status::incomplete;
  push_overlaps(idx);
  // rules whose lead became reducible get rebuilt from their content
  std::vector<SmashElement> pending;
  for (size_t m = 0; m < idx; ++m) {
    if (!active_[m]) continue;
    const Word& lm = rules_[m].lead;
    if (lm.size() < lead_word.size()) continue;
    bool contains = false;
    for (size_t p = 0; p + lead_word.size() <= lm.size() && !contains; ++p)
      contains = std::equal(lead_word.begin(), lead_word.end(), lm.begin() + p);
    if (!contains) continue;
    active_[m] = false;
    invalidate_cache();
    pending.push_back(
        SmashElement::term(lm, GroupElement::identity(datum_.group()),
                           Cyc::one(datum_.ambient_order())) -
        rules_[m].tail);
  }
  for (const auto& p : pending) {
    add_relation(p);
    if (status_ == Status::budget_exhausted) break;
  }
  return true;
}

void RewriteSystem::push_overlaps(size_t idx) {
  const Word& ln = rules_[idx].lead;
  for (size_t m = 0; m <= idx; ++m) {
    if (!active_[m]) continue;
    const Word& lm = rules_[m].lead;
    // proper suffix of lm == proper prefix of ln
    for (size_t k = 1; k < std::min(lm.size(), ln.size()); ++k) {
      if (std::equal(ln.begin(), ln.begin() + k, lm.end() - k)) {
        Word u = lm;
        u.insert(u.end(), ln.begin() + k, ln.end());
        queue_.insert(Pair{std::move(u), m, 0, idx, lm.size() - k});
      }
      if (std::equal(lm.begin(), lm.begin() + k, ln.end() - k)) {
        Word u = ln;
        u.insert(u.end(), lm.begin() + k, lm.end());
        queue_.insert(Pair{std::move(u), idx, 0, m, ln.size() - k});
      }
    }
    // inclusions
    if (ln.size() < lm.size()) {
      for (size_t p = 0; p + ln.size() <= lm.size(); ++p)
        if (std::equal(ln.begin(), ln.end(), lm.begin() + p))
          queue_.insert(Pair{lm, m, 0, idx, p});
    } else if (lm.size() < ln.size()) {
      for (size_t p = 0; p + lm.size() <= ln.size(); ++p)
        if (std::equal(lm.begin(), lm.end(), ln.begin() + p))
          queue_.insert(Pair{ln, idx, 0, m, p});
    }
  }
}

namespace {
std::string g_completion_cache;
}

void RewriteSystem::set_completion_cache(const std::string& dir) {
  g_completion_cache = dir;
  if (!dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
  }
}

RewriteSystem::Status RewriteSystem::complete(unsigned degree_bound) {
  degree_bound_ = degree_bound;
  for (size_t i = 0; i < rules_.size(); ++i)
    if (active_[i] && rules_[i].lead.size() > degree_bound_)
      return status_ = Status::budget_exhausted;
  std::filesystem::path cache_file;
  if (!g_completion_cache.empty() && !queue_.empty()) {
    std::ostringstream key;
    key << "complete-v1|" << datum_.canonical_string() << "|"
        << order_.to_string() << "|D" << degree_bound << "|" << serialize();
    cache_file = std::filesystem::path(g_completion_cache) /
                 (content_hash(key.str()) + ".rws");
    std::ifstream in(cache_file);
    if (in) {
      std::ostringstream text;
      text << in.rdbuf();
      try {
        RewriteSystem cached = deserialize(datum_, text.str());
        if (cached.status_ == Status::confluent) {
          cached.trace_ = trace_;
          cached.trace_every_ = trace_every_;
          *this = std::move(cached);
          degree_bound_ = degree_bound;
          return status_;
        }
      } catch (const std::exception&) {
        // corrupt entry: fall through and recompute
      }
    }
  }
  size_t processed = 0;
  while (!queue_.empty()) {
    Pair p = *queue_.begin();
    queue_.erase(queue_.begin());
    if (trace_ && ++processed % trace_every_ == 0)
      trace_(processed, rules_.size(), max_lead_degree());
    SmashElement a = normal_form(apply_at(p.word, p.rule_a, p.pos_a));
    SmashElement b = normal_form(apply_at(p.word, p.rule_b, p.pos_b));
    SmashElement diff = a - b;
    if (diff.is_zero()) continue;
    add_relation(diff);
    if (status_ == Status::budget_exhausted) return status_;
  }
  // interreduce tails for a canonical confluent presentation
  for (size_t i = 0; i < rules_.size(); ++i) {
    if (!active_[i]) continue;
    SmashElement nf_tail = normal_form(rules_[i].tail);
    if (nf_tail != rules_[i].tail) {
      rules_[i].tail = std::move(nf_tail);
      invalidate_cache();
    }
  }
  // drop inactive rules
  std::vector<RewriteRule> kept;
  for (size_t i = 0; i < rules_.size(); ++i)
    if (active_[i]) kept.push_back(std::move(rules_[i]));
  rules_ = std::move(kept);
  active_.assign(rules_.size(), true);
  invalidate_cache();
  status_ = Status::confluent;
  if (!cache_file.empty()) {
    std::ofstream out(cache_file);
    if (out) out << serialize();
  }
  return status_;
}

std::vector<Word> RewriteSystem::normal_words(unsigned max_degree) const {
  // letters sorted by precedence rank
  std::vector<uint8_t> letters(datum_.theta());
  for (unsigned i = 0; i < datum_.theta(); ++i) letters[i] = i;
  std::sort(letters.begin(), letters.end(), [&](uint8_t a, uint8_t b) {
    return order_.precedence[a] < order_.precedence[b];
  });
  std::vector<Word> out = {{}};
  std::vector<Word> frontier = {{}};
  for (unsigned deg = 1; deg <= max_degree && !frontier.empty(); ++deg) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (uint8_t l : letters) {
        Word nw = w;
        nw.push_back(l);
        // w is normal, so only a suffix of nw can match a lead
        bool reducible = false;
        for (size_t r = 0; r < rules_.size() && !reducible; ++r) {
          if (!active_[r]) continue;
          const Word& lead = rules_[r].lead;
          if (lead.size() > nw.size()) continue;
          reducible = std::equal(lead.begin(), lead.end(),
                                 nw.end() - lead.size());
        }
        if (!reducible) next.push_back(std::move(nw));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

RewriteSystem::Dimension RewriteSystem::dimension(
    bool with_group, unsigned hilbert_degrees) const {
  // Aho-Corasick automaton over the active lead words; normal words are
  // walks from the root that never hit a terminal state.
  unsigned theta = datum_.theta();
  struct Node {
    std::vector<int> next;
    int fail = 0;
    bool terminal = false;
    Node(unsigned t) : next(t, -1) {}
  };
  std::vector<Node> trie;
  trie.emplace_back(theta);
  for (size_t r = 0; r < rules_.size(); ++r) {
    if (!active_[r]) continue;
    int s = 0;
    for (uint8_t l : rules_[r].lead) {
      if (trie[s].next[l] < 0) {
        trie[s].next[l] = static_cast<int>(trie.size());
        trie.emplace_back(theta);
      }
      s = trie[s].next[l];
    }
    trie[s].terminal = true;
  }
  // BFS failure links; convert to full transition table
  std::deque<int> bfs;
  for (unsigned c = 0; c < theta; ++c) {
    int v = trie[0].next[c];
    if (v < 0) {
      trie[0].next[c] = 0;
    } else {
      trie[v].fail = 0;
      bfs.push_back(v);
    }
  }
  while (!bfs.empty()) {
    int u = bfs.front();
    bfs.pop_front();
    if (trie[trie[u].fail].terminal) trie[u].terminal = true;
    for (unsigned c = 0; c < theta; ++c) {
      int v = trie[u].next[c];
      if (v < 0) {
        trie[u].next[c] = trie[trie[u].fail].next[c];
      } else {
        trie[v].fail = trie[trie[u].fail].next[c];
        bfs.push_back(v);
      }
    }
  }
  size_t S = trie.size();
  Dimension out;
  std::vector<mpz_class> cur(S, 0);
  cur[0] = 1;
  out.hilbert.push_back(1);
  out.dim = 1;
  out.top_degree = 0;
  // If a degree has no normal words, neither does any larger degree; if we
  // pass S degrees with survivors, the walk graph has a cycle.
  size_t max_deg = std::max<size_t>(S + 1, hilbert_degrees);
  for (size_t deg = 1; deg <= max_deg; ++deg) {
    std::vector<mpz_class> nxt(S, 0);
    mpz_class total = 0;
    for (size_t s = 0; s < S; ++s) {
      if (cur[s] == 0) continue;
      for (unsigned c = 0; c < theta; ++c) {
        int v = trie[s].next[c];
        if (!trie[v].terminal) nxt[v] += cur[s];
      }
    }
    for (const auto& x : nxt) total += x;
    if (total == 0) {
      out.finite = true;
      break;
    }
    out.hilbert.push_back(total);
    out.dim += total;
    out.top_degree = static_cast<unsigned>(deg);
    cur = std::move(nxt);
  }
  if (out.finite && with_group) out.dim *= mpz_class(datum_.group().order());
  return out;
}

std::string RewriteSystem::serialize() const {
  std::ostringstream os;
  os << "nlift-rewrite-v1\n";
  os << "precedence";
  for (uint8_t p : order_.precedence) os << " " << static_cast<int>(p);
  os << "\n";
  os << "status "
     << (status_ == Status::confluent
             ? "confluent"
             : status_ == Status::budget_exhausted ? "budget_exhausted"
                                                   : "incomplete")
     << "\n";
  os << "degree_bound " << degree_bound_ << "\n";
  size_t n = 0;
  for (size_t i = 0; i < rules_.size(); ++i)
    if (active_[i]) ++n;
  os << "rules " << n << "\n";
  for (size_t i = 0; i < rules_.size(); ++i) {
    if (!active_[i]) continue;
    const RewriteRule& r = rules_[i];
    os << "lead " << r.lead.size();
    for (uint8_t l : r.lead) os << " " << static_cast<int>(l);
    os << "\n";
    os << "terms " << r.tail.size() << "\n";
    for (const auto& [k, c] : r.tail.terms()) {
      os << "term " << k.word.size();
      for (uint8_t l : k.word) os << " " << static_cast<int>(l);
      for (unsigned e : k.grp.exponents()) os << " " << e;
      os << " " << c.order();
      for (const Rational& q : c.coeffs()) os << " " << q.get_str();
      os << "\n";
    }
  }
  return os.str();
}

RewriteSystem RewriteSystem::deserialize(const YDDatum& d,
                                         const std::string& text) {
  std::istringstream is(text);
  std::string tok;
  is >> tok;
  if (tok != "nlift-rewrite-v1")
    throw std::invalid_argument("bad rewrite-system header");
  is >> tok;
  if (tok != "precedence") throw std::invalid_argument("expected precedence");
  MonomialOrder ord;
  ord.precedence.resize(d.theta());
  for (auto& p : ord.precedence) {
    int v;
    is >> v;
    p = static_cast<uint8_t>(v);
  }
  RewriteSystem sys(d, ord);
  is >> tok;
  std::string status_name;
  is >> status_name;
  is >> tok >> sys.degree_bound_;
  size_t nrules;
  is >> tok >> nrules;
  for (size_t i = 0; i < nrules; ++i) {
    RewriteRule r;
    size_t len;
    is >> tok >> len;
    r.lead.resize(len);
    for (auto& l : r.lead) {
      int v;
      is >> v;
      l = static_cast<uint8_t>(v);
    }
    size_t nterms;
    is >> tok >> nterms;
    for (size_t t = 0; t < nterms; ++t) {
      size_t wlen;
      is >> tok >> wlen;
      Word w(wlen);
      for (auto& l : w) {
        int v;
        is >> v;
        l = static_cast<uint8_t>(v);
      }
      std::vector<long> ge(d.group().rank());
      for (auto& e : ge) is >> e;
      unsigned corder;
      is >> corder;
      std::vector<Rational> coeffs(euler_phi(corder));
      for (auto& q : coeffs) {
        std::string s;
        is >> s;
        q = Rational(s);
        q.canonicalize();
      }
      r.tail += SmashElement::term(
          std::move(w), GroupElement(d.group(), ge),
          Cyc::from_coeffs(corder, std::move(coeffs)));
    }
    sys.rules_.push_back(std::move(r));
    sys.active_.push_back(true);
  }
  if (!is) throw std::invalid_argument("truncated rewrite-system data");
  if (status_name == "confluent")
    sys.status_ = Status::confluent;
  else if (status_name == "budget_exhausted")
    sys.status_ = Status::budget_exhausted;
  return sys;
}

TensorElement tensor_normal_form(const RewriteSystem& left,
                                 const RewriteSystem& right,
                                 const TensorElement& t) {
  TensorElement out;
  for (const auto& [k, c] : t.terms()) {
    SmashElement a = left.normal_form(SmashElement::term(
        k.first.word, k.first.grp, Cyc::one(left.datum().ambient_order())));
    SmashElement b = right.normal_form(SmashElement::term(
        k.second.word, k.second.grp, Cyc::one(right.datum().ambient_order())));
    for (const auto& [ka, ca] : a.terms())
      for (const auto& [kb, cb] : b.terms())
        out.add_term({ka, kb}, c * ca * cb);
  }
  return out;
}

}  // namespace nlift
