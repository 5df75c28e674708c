#include "groupeq/finite_solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace groupeq {

AssignmentEnumerator::AssignmentEnumerator(std::vector<std::vector<int>> allowed)
    : allowed_(std::move(allowed)), cursor_(allowed_.size(), 0) {
  for (const auto& a : allowed_)
    if (a.empty()) done_ = true;
}

void AssignmentEnumerator::reset() {
  std::fill(cursor_.begin(), cursor_.end(), 0);
  started_ = false;
  done_ = false;
  for (const auto& a : allowed_)
    if (a.empty()) done_ = true;
}

long long AssignmentEnumerator::count() const {
  long long total = 1;
  for (const auto& a : allowed_) total *= static_cast<long long>(a.size());
  return total;
}

std::optional<std::vector<int>> AssignmentEnumerator::next() {
  if (done_) return std::nullopt;
  if (started_) {
    // Advance the odometer, last variable fastest.
    size_t k = cursor_.size();
    for (;;) {
      if (k == 0) {
        done_ = true;
        return std::nullopt;
      }
      --k;
      if (++cursor_[k] < allowed_[k].size()) break;
      cursor_[k] = 0;
    }
  }
  started_ = true;
  std::vector<int> out(cursor_.size());
  for (size_t k = 0; k < cursor_.size(); ++k) out[k] = allowed_[k][cursor_[k]];
  return out;
}

namespace {

// Words compiled to index operations for fast table evaluation.
struct CompiledOp {
  int constant = -1;  // element index, or -1 for an occurrence
  int var_slot = 0;
  int exponent = 1;
  const std::vector<int>* twist = nullptr;
};

std::vector<CompiledOp> compile_word(const EqWord& w, const std::vector<std::string>& vars) {
  std::vector<CompiledOp> ops;
  for (const auto& tok : w) {
    CompiledOp op;
    if (const auto* c = std::get_if<GroupValue>(&tok)) {
      op.constant = std::get<FiniteElt>(c->v).index;
    } else {
      const auto& o = std::get<Occurrence>(tok);
      op.var_slot =
          static_cast<int>(std::lower_bound(vars.begin(), vars.end(), o.var) - vars.begin());
      op.exponent = o.exponent;
      if (o.twist) {
        const auto* fm = std::get_if<Automorphism::FiniteMap>(&o.twist->v);
        if (!fm) throw std::invalid_argument("solve_finite: twist is not an element map");
        op.twist = &fm->images;
      }
    }
    ops.push_back(op);
  }
  return ops;
}

int eval_compiled(const FiniteGroup& g, const std::vector<CompiledOp>& ops,
                  const std::vector<int>& assignment) {
  int acc = g.identity();
  for (const auto& op : ops) {
    int v;
    if (op.constant >= 0) {
      v = op.constant;
    } else {
      v = assignment[op.var_slot];
      if (op.twist) v = (*op.twist)[v];
      if (op.exponent < 0) v = g.inv(v);
    }
    acc = g.mul(acc, v);
  }
  return acc;
}

}  // namespace

Verdict solve_finite(const GroupStructure& g, const System& s, const FiniteSolveOptions& opts,
                     long long* stats_assignments) {
  const auto* fin = g.finite();
  if (!fin) throw std::invalid_argument("solve_finite: not a finite group structure");
  const FiniteGroup& fg = fin->group;
  validate_system(g, s);

  std::vector<std::vector<int>> allowed(s.variables.size());
  for (size_t k = 0; k < s.variables.size(); ++k) {
    auto it = s.constraints.find(s.variables[k]);
    if (it == s.constraints.end()) {
      allowed[k].resize(fg.order());
      for (int i = 0; i < fg.order(); ++i) allowed[k][i] = i;
    } else {
      for (int i = 0; i < fg.order(); ++i)
        if (recset_member(g, it->second, GroupValue::finite(i))) allowed[k].push_back(i);
    }
  }
  AssignmentEnumerator stream(allowed);
  if (stream.count() > opts.assignment_cap)
    throw std::runtime_error("solve_finite: assignment cap exceeded (" +
                             std::to_string(stream.count()) + " > " +
                             std::to_string(opts.assignment_cap) + ")");

  std::vector<std::vector<CompiledOp>> eqs, neqs;
  for (const auto& w : s.equations) eqs.push_back(compile_word(w, s.variables));
  for (const auto& w : s.inequations) neqs.push_back(compile_word(w, s.variables));

  while (auto a = stream.next()) {
    if (stats_assignments) ++*stats_assignments;
    bool ok = true;
    for (const auto& ops : eqs)
      if (eval_compiled(fg, ops, *a) != fg.identity()) {
        ok = false;
        break;
      }
    if (ok)
      for (const auto& ops : neqs)
        if (eval_compiled(fg, ops, *a) == fg.identity()) {
          ok = false;
          break;
        }
    if (ok) {
      Assignment w;
      for (size_t k = 0; k < s.variables.size(); ++k)
        w.emplace(s.variables[k], GroupValue::finite((*a)[k]));
      return Verdict::sat(std::move(w));
    }
  }
  return Verdict::unsat();
}

}  // namespace groupeq
