#include "groupeq/free_solver.hpp"

#include "groupeq/abelian_solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace groupeq {

std::vector<FreeWord> reduced_words_upto(int rank, int bound) {
  // Letters in order a, a^-1, b, b^-1, ...
  std::vector<int> letters;
  for (int gidx = 1; gidx <= rank; ++gidx) {
    letters.push_back(gidx);
    letters.push_back(-gidx);
  }
  std::vector<FreeWord> out{FreeWord()};
  std::vector<std::vector<int>> frontier{{}};
  for (int len = 1; len <= bound; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier)
      for (int l : letters) {
        if (!w.empty() && w.back() == -l) continue;
        auto w2 = w;
        w2.push_back(l);
        next.push_back(std::move(w2));
      }
    for (const auto& w : next) out.push_back(FreeWord(w));
    frontier = std::move(next);
  }
  return out;
}

namespace {

IntMatrix abelianized_twist(const AutPtr& twist, int rank) {
  IntMatrix m = IntMatrix::Identity(rank, rank);
  if (!twist) return m;
  const auto& fs = std::get<Automorphism::FreeSubst>(twist->v);
  for (int j = 0; j < rank; ++j) m.col(j) = abelianize(fs.images[j], rank);
  return m;
}

// Equations only; an abelianized disequation is not implied, so
// inequations do not feed the filter.
bool abelian_filter_unsat(const GroupStructure& g, const System& s) {
  const int rank = g.free()->rank;
  AbelianSystem ab;
  ab.rank = rank;
  ab.num_vars = static_cast<int>(s.variables.size());
  for (const auto& w : s.equations) {
    AbelianRelation rel;
    rel.rhs = IntVec::Zero(rank);
    for (const auto& tok : w) {
      if (const auto* c = std::get_if<GroupValue>(&tok)) {
        rel.rhs -= abelianize(std::get<FreeWord>(c->v), rank);
        continue;
      }
      const auto& o = std::get<Occurrence>(tok);
      AbelianTerm term;
      term.var = static_cast<int>(
          std::lower_bound(s.variables.begin(), s.variables.end(), o.var) -
          s.variables.begin());
      term.sign = o.exponent;
      if (o.twist) term.coeff = abelianized_twist(o.twist, rank);
      rel.terms.push_back(std::move(term));
    }
    ab.equations.push_back(std::move(rel));
  }
  return !solve_abelian(ab).sat;
}

}  // namespace

Verdict solve_free_bounded(const GroupStructure& g, const System& s,
                           const FreeSolveOptions& opts, long long* stats_candidates) {
  const auto* fr = g.free();
  if (!fr) throw std::invalid_argument("solve_free_bounded: not a free group structure");
  validate_system(g, s);

  // A constraint with an empty union (or all-empty allowed sets) admits no
  // value at all.
  for (const auto& [var, set] : s.constraints) {
    bool possible = false;
    for (const auto& box : set.boxes)
      if (!std::get<RecBox::FreeQuot>(box.v).allowed.empty()) possible = true;
    if (!possible) return Verdict::unsat();
  }

  if (abelian_filter_unsat(g, s)) return Verdict::unsat();

  const size_t m = s.variables.size();
  if (m == 0) {
    // The single empty assignment decides a variable-free system.
    Assignment a;
    return check_witness(g, s, a) ? Verdict::sat(std::move(a)) : Verdict::unsat();
  }

  const int bound = opts.bound_override.value_or(fr->bound);
  std::vector<FreeWord> words = reduced_words_upto(fr->rank, bound);
  // Prefix sizes per length: words of length <= L occupy [0, prefix[L]).
  std::vector<size_t> prefix(bound + 1, 0);
  for (size_t i = 0; i < words.size(); ++i)
    for (int len = static_cast<int>(words[i].length()); len <= bound; ++len) ++prefix[len];

  long long tested = 0;
  for (int max_len = 0; max_len <= bound; ++max_len) {
    const size_t limit = prefix[max_len];
    const size_t inner = max_len == 0 ? 0 : prefix[max_len - 1];
    std::vector<size_t> idx(m, 0);
    bool more = true;
    while (more) {
      // Skip tuples already tried at a smaller max length.
      bool fresh = max_len == 0;
      for (size_t k = 0; k < m && !fresh; ++k)
        if (idx[k] >= inner) fresh = true;
      if (fresh) {
        if (opts.max_candidates >= 0 && tested >= opts.max_candidates)
          return Verdict::unknown("branch budget");
        ++tested;
        if (stats_candidates) ++*stats_candidates;
        Assignment a;
        for (size_t k = 0; k < m; ++k)
          a.emplace(s.variables[k], GroupValue::word(words[idx[k]]));
        if (check_witness(g, s, a)) return Verdict::sat(std::move(a));
      }
      // Odometer over [0, limit)^m, last variable fastest.
      size_t k = m;
      for (;;) {
        if (k == 0) {
          more = false;
          break;
        }
        --k;
        if (++idx[k] < limit) break;
        idx[k] = 0;
      }
    }
  }
  return Verdict::unknown("bound B exhausted");
}

}  // namespace groupeq
