#include "groupeq/solve.hpp"

#include "groupeq/abelian_solver.hpp"
#include "groupeq/finite_solver.hpp"
#include "groupeq/free_solver.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace groupeq {

namespace {

struct Ctx {
  const SolveOptions& opts;
  SolveStats& stats;
  // The embedding route applies once at the top; the wreath products it
  // produces are solved directly.
  bool embed_extensions = false;
  bool spend_branch() {
    ++stats.branches;
    return stats.branches <= opts.branch_budget;
  }
};

Verdict solve_impl(const GroupStructure& g, const System& s, Ctx& ctx);

// ---------------------------------------------------------------------
// Free abelian bridge

int var_slot(const std::vector<std::string>& vars, const std::string& name) {
  return static_cast<int>(std::lower_bound(vars.begin(), vars.end(), name) - vars.begin());
}

AbelianRelation to_abelian_relation(const EqWord& w, const std::vector<std::string>& vars,
                                    int rank) {
  AbelianRelation rel;
  rel.rhs = IntVec::Zero(rank);
  for (const auto& tok : w) {
    if (const auto* c = std::get_if<GroupValue>(&tok)) {
      rel.rhs -= std::get<IntVec>(c->v);
      continue;
    }
    const auto& o = std::get<Occurrence>(tok);
    AbelianTerm term;
    term.var = var_slot(vars, o.var);
    term.sign = o.exponent;
    if (o.twist) term.coeff = std::get<Automorphism::MatrixAut>(o.twist->v).m;
    rel.terms.push_back(std::move(term));
  }
  return rel;
}

Verdict solve_free_abelian_system(const GroupStructure& g, const System& s) {
  const int rank = g.free_abelian()->rank;
  AbelianSystem ab;
  ab.rank = rank;
  ab.num_vars = static_cast<int>(s.variables.size());
  for (const auto& w : s.equations)
    ab.equations.push_back(to_abelian_relation(w, s.variables, rank));
  for (const auto& w : s.inequations)
    ab.disequations.push_back(to_abelian_relation(w, s.variables, rank));
  for (const auto& [var, set] : s.constraints) {
    std::vector<CongruenceBox> boxes;
    for (const auto& box : set.boxes) boxes.push_back(std::get<CongruenceBox>(box.v));
    ab.constraints[var_slot(s.variables, var)] = std::move(boxes);
  }
  AbelianResult res = solve_abelian(ab);
  if (!res.sat) return Verdict::unsat();
  Assignment w;
  for (size_t k = 0; k < s.variables.size(); ++k)
    w.emplace(s.variables[k], GroupValue::vector(res.witness[k]));
  return Verdict::sat(std::move(w));
}

// ---------------------------------------------------------------------
// Direct products

bool has_permuting_twist(const System& s) {
  auto word_has = [](const EqWord& w) {
    for (const auto& tok : w)
      if (const auto* o = std::get_if<Occurrence>(&tok))
        if (o->twist)
          if (const auto* pa = std::get_if<Automorphism::ProductAut>(&o->twist->v))
            if (!pa->sigma.is_identity()) return true;
    return false;
  };
  for (const auto& w : s.equations)
    if (word_has(w)) return true;
  for (const auto& w : s.inequations)
    if (word_has(w)) return true;
  return false;
}

std::string coord_var(const std::string& var, size_t l) {
  return var + "#" + std::to_string(l);
}

// Coordinate-i projection of a word over a product. For a twist
// (sigma, comps), coordinate i reads comps[i] applied to the source
// coordinate sigma^{-1}(i) of the variable.
EqWord project_word(const EqWord& w, size_t i, const std::vector<GroupStructure>& factors) {
  EqWord out;
  for (const auto& tok : w) {
    if (const auto* c = std::get_if<GroupValue>(&tok)) {
      const auto& parts = std::get<ValueTuple>(c->v);
      if (!is_identity_value(factors[i], parts[i])) out.push_back(parts[i]);
      continue;
    }
    const auto& o = std::get<Occurrence>(tok);
    size_t src = i;
    AutPtr comp;
    if (o.twist) {
      const auto& pa = std::get<Automorphism::ProductAut>(o.twist->v);
      src = static_cast<size_t>(pa.sigma.inverse()(static_cast<int>(i)));
      comp = pa.components[i];
    }
    Occurrence oc;
    oc.var = coord_var(o.var, src);
    oc.exponent = o.exponent;
    oc.twist = comp;
    out.push_back(std::move(oc));
  }
  return out;
}

struct ProductBranchPlan {
  std::vector<std::string> constrained;       // sorted variable names
  std::vector<std::vector<RecBox>> boxes;     // aligned with constrained
  std::vector<size_t> box_choice;
  std::vector<size_t> cover;                  // inequation -> factor/coordinate
  size_t n = 0;                               // factors
  size_t num_ineqs = 0;
  bool first = true;

  bool advance(std::vector<size_t>& digits, const auto& radix) {
    for (size_t k = digits.size(); k-- > 0;) {
      if (++digits[k] < radix(k)) return true;
      digits[k] = 0;
    }
    return false;
  }
  // Box choices outermost, covers within; both lexicographic.
  bool next() {
    if (first) {
      first = false;
      for (const auto& b : boxes)
        if (b.empty()) return false;
      return true;
    }
    if (num_ineqs > 0 &&
        advance(cover, [&](size_t) { return n; }))
      return true;
    std::fill(cover.begin(), cover.end(), 0);
    return advance(box_choice, [&](size_t k) { return boxes[k].size(); });
  }
};

ProductBranchPlan make_plan(const System& s, size_t n) {
  ProductBranchPlan plan;
  plan.n = n;
  plan.num_ineqs = s.inequations.size();
  for (const auto& [var, set] : s.constraints) {
    plan.constrained.push_back(var);
    plan.boxes.push_back(set.boxes);
  }
  plan.box_choice.assign(plan.constrained.size(), 0);
  plan.cover.assign(s.inequations.size(), 0);
  return plan;
}

// Merge per-coordinate witnesses back into tuples, filling coordinates of
// variables that never occurred with the identity.
Assignment reassemble_tuples(const System& s, const std::vector<GroupStructure>& factors,
                             const Assignment& flat) {
  Assignment out;
  for (const auto& var : s.variables) {
    ValueTuple parts;
    for (size_t l = 0; l < factors.size(); ++l) {
      auto it = flat.find(coord_var(var, l));
      parts.push_back(it == flat.end() ? gid(factors[l]) : it->second);
    }
    out.emplace(var, GroupValue::tuple(std::move(parts)));
  }
  return out;
}

void declare_word_vars(System& sys, const EqWord& w) {
  for (const auto& tok : w)
    if (const auto* o = std::get_if<Occurrence>(&tok)) sys.declare(o->var);
}

// Coordinates coupled by a factor-permuting twist must be solved jointly
// over their (structurally equal) factor group; the coordinate blocks are
// the orbits of the twist permutations. Factor-preserving systems have
// singleton blocks only, which recovers the plain per-factor reduction.
std::vector<std::vector<size_t>> coordinate_blocks(const System& s, size_t n) {
  std::vector<size_t> parent(n);
  for (size_t i = 0; i < n; ++i) parent[i] = i;
  std::function<size_t(size_t)> find = [&](size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  auto unite = [&](size_t a, size_t b) { parent[find(a)] = find(b); };
  auto scan = [&](const EqWord& w) {
    for (const auto& tok : w)
      if (const auto* o = std::get_if<Occurrence>(&tok))
        if (o->twist)
          if (const auto* pa = std::get_if<Automorphism::ProductAut>(&o->twist->v))
            for (size_t i = 0; i < n; ++i)
              unite(i, static_cast<size_t>(pa->sigma(static_cast<int>(i))));
  };
  for (const auto& w : s.equations) scan(w);
  for (const auto& w : s.inequations) scan(w);
  std::vector<std::vector<size_t>> blocks;
  std::map<size_t, size_t> root_block;
  for (size_t i = 0; i < n; ++i) {
    size_t r = find(i);
    auto it = root_block.find(r);
    if (it == root_block.end()) {
      root_block.emplace(r, blocks.size());
      blocks.push_back({i});
    } else {
      blocks[it->second].push_back(i);
    }
  }
  return blocks;
}

Verdict solve_product(const GroupStructure& g, const System& s, Ctx& ctx) {
  const auto& factors = g.product()->factors;
  const size_t n = factors.size();
  if (n == 0)
    return s.inequations.empty() ? Verdict::sat(reassemble_tuples(s, factors, {}))
                                 : Verdict::unsat();
  auto blocks = coordinate_blocks(s, n);
  for (const auto& block : blocks)
    for (size_t l : block)
      if (!structure_equal(factors[block[0]], factors[l]))
        throw std::invalid_argument(
            "solve: factor-permuting twists require structurally equal factors");
  std::vector<size_t> block_of(n);
  for (size_t b = 0; b < blocks.size(); ++b)
    for (size_t l : blocks[b]) block_of[l] = b;

  ProductBranchPlan plan = make_plan(s, n);
  std::optional<Verdict> first_unknown;
  while (plan.next()) {
    if (!ctx.spend_branch()) return Verdict::unknown("branch budget");
    // One joint subsystem per block: the projections of every equation at
    // the block's coordinates, the inequations covered into the block,
    // and the chosen box components. Blocks have disjoint coordinate
    // variables, so the witnesses merge cleanly.
    std::vector<Verdict> block_verdicts;
    bool branch_dead = false;
    for (size_t b = 0; b < blocks.size() && !branch_dead; ++b) {
      System sub;
      for (const auto& w : s.equations)
        for (size_t i : blocks[b]) {
          sub.equations.push_back(project_word(w, i, factors));
          declare_word_vars(sub, sub.equations.back());
        }
      for (size_t d = 0; d < s.inequations.size(); ++d) {
        if (block_of[plan.cover[d]] != b) continue;
        sub.inequations.push_back(project_word(s.inequations[d], plan.cover[d], factors));
        declare_word_vars(sub, sub.inequations.back());
      }
      for (size_t k = 0; k < plan.constrained.size(); ++k) {
        const auto& box = plan.boxes[k][plan.box_choice[k]];
        const auto& tb = std::get<RecBox::TupleBox>(box.v);
        for (size_t l : blocks[b]) {
          sub.declare(coord_var(plan.constrained[k], l));
          sub.constraints[coord_var(plan.constrained[k], l)] = RecSet{{tb.components[l]}};
        }
      }
      Verdict v = solve_impl(factors[blocks[b][0]], sub, ctx);
      if (v.is_unsat()) branch_dead = true;
      block_verdicts.push_back(std::move(v));
    }
    if (branch_dead) continue;
    Verdict combined = combine_verdicts(block_verdicts, CombineMode::All);
    if (combined.is_sat())
      return Verdict::sat(reassemble_tuples(s, factors, combined.witness));
    if (combined.is_unknown() && !first_unknown) first_unknown = combined;
  }
  if (first_unknown) return *first_unknown;
  return Verdict::unsat();
}

// ---------------------------------------------------------------------
// Extensions

struct RewriteResult {
  EqWord word;  // over the base group
  int top;      // accumulated quotient part
};

// Substitute Y = (X, beta_Y) and push the transversal letters right:
// multiplying an accumulated (acc, p) by (k', q') appends alpha_p(k')
// and alpha_{p q'}(c(p, q')) to the base word and sets p <- p q'.
RewriteResult rewrite_word(const GroupStructure& g, const EqWord& w,
                           const std::map<std::string, int>& beta) {
  const auto& ex = *g.extension();
  const GroupStructure& k = *ex.base;
  const FiniteGroup& q_grp = ex.quotient;
  RewriteResult out;
  out.top = q_grp.identity();
  auto emit_const = [&](const GroupValue& v) {
    if (!is_identity_value(k, v)) out.word.push_back(v);
  };
  auto step = [&](int q_new) {
    const GroupValue& coc = ex.cocycle[out.top][q_new];
    const int next = q_grp.mul(out.top, q_new);
    if (!is_identity_value(k, coc)) emit_const(apply_aut(ex.action[next], k, coc));
    out.top = next;
  };
  for (const auto& tok : w) {
    if (const auto* c = std::get_if<GroupValue>(&tok)) {
      const auto& e = std::get<ExtElt>(c->v);
      emit_const(apply_aut(ex.action[out.top], k, *e.base));
      step(e.top);
      continue;
    }
    const auto& o = std::get<Occurrence>(tok);
    if (o.twist)
      throw std::invalid_argument("solve_extension: twists over extension values are not supported");
    const int b = beta.at(o.var);
    if (o.exponent > 0) {
      Occurrence oc;
      oc.var = o.var;
      oc.exponent = 1;
      oc.twist = ex.action[out.top];
      out.word.push_back(std::move(oc));
      step(b);
    } else {
      // (X, b)^{-1} = (c(b^{-1}, b)^{-1} * alpha_{b^{-1}}(X^{-1}), b^{-1})
      const int bi = q_grp.inv(b);
      emit_const(apply_aut(ex.action[out.top], k, ginv(k, ex.cocycle[bi][b])));
      Occurrence oc;
      oc.var = o.var;
      oc.exponent = -1;
      oc.twist = compose_auts(ex.action[out.top], ex.action[bi], k);
      out.word.push_back(std::move(oc));
      step(bi);
    }
  }
  return out;
}

Verdict solve_extension_impl(const GroupStructure& g, const System& s, Ctx& ctx) {
  const auto& ex = *g.extension();
  const GroupStructure& k = *ex.base;
  const FiniteGroup& q_grp = ex.quotient;

  // Admissible quotient parts per variable, from the constraint boxes.
  std::vector<std::vector<int>> allowed(s.variables.size());
  for (size_t v = 0; v < s.variables.size(); ++v) {
    auto it = s.constraints.find(s.variables[v]);
    if (it == s.constraints.end()) {
      for (int q = 0; q < q_grp.order(); ++q) allowed[v].push_back(q);
    } else {
      std::vector<int> tops;
      for (const auto& box : it->second.boxes)
        tops.push_back(std::get<RecBox::ExtBox>(box.v).top);
      std::sort(tops.begin(), tops.end());
      tops.erase(std::unique(tops.begin(), tops.end()), tops.end());
      allowed[v] = std::move(tops);
    }
  }

  AssignmentEnumerator stream(allowed);
  std::optional<Verdict> first_unknown;
  while (auto qa = stream.next()) {
    if (!ctx.spend_branch()) return Verdict::unknown("branch budget");
    std::map<std::string, int> beta;
    for (size_t v = 0; v < s.variables.size(); ++v) beta.emplace(s.variables[v], (*qa)[v]);

    System base_sys;
    for (const auto& var : s.variables) base_sys.declare(var);
    bool infeasible = false;
    for (const auto& w : s.equations) {
      RewriteResult r = rewrite_word(g, w, beta);
      if (r.top != q_grp.identity()) {
        infeasible = true;  // equation cannot project to the identity
        break;
      }
      base_sys.equations.push_back(std::move(r.word));
    }
    if (infeasible) continue;
    for (const auto& w : s.inequations) {
      RewriteResult r = rewrite_word(g, w, beta);
      if (r.top != q_grp.identity()) continue;  // non-identity quotient part: always true
      base_sys.inequations.push_back(std::move(r.word));
    }
    for (const auto& [var, set] : s.constraints) {
      RecSet base_set;
      for (const auto& box : set.boxes) {
        const auto& eb = std::get<RecBox::ExtBox>(box.v);
        if (eb.top == beta.at(var)) base_set.boxes.push_back(*eb.base);
      }
      base_sys.constraints[var] = std::move(base_set);
    }

    Verdict v = solve_impl(k, base_sys, ctx);
    if (v.is_sat()) {
      Assignment lifted;
      for (const auto& var : s.variables)
        lifted.emplace(var, GroupValue::ext(v.witness.at(var), beta.at(var)));
      return Verdict::sat(std::move(lifted));
    }
    if (v.is_unknown() && !first_unknown) first_unknown = v;
  }
  if (first_unknown) return *first_unknown;
  return Verdict::unsat();
}

// ---------------------------------------------------------------------
// The embedding pipeline

Verdict solve_via_embedding(const GroupStructure& g, const System& s, Ctx& ctx) {
  const auto* ex = g.extension();
  if (!ex) throw std::invalid_argument("solve_virtually_direct_product: not an extension");
  ctx.embed_extensions = false;
  auto orbits = factor_orbits(g);
  std::vector<WreathEmbedding> embeddings;
  for (const auto& orbit : orbits) embeddings.emplace_back(g, orbit);

  GroupStructure::Product wp;
  for (const auto& e : embeddings) wp.factors.push_back(e.wreath());
  GroupStructure w_total{GroupStructure::Variant(std::move(wp))};

  auto embed_value = [&](const GroupValue& v) {
    ValueTuple parts;
    for (const auto& e : embeddings) parts.push_back(e.embed(v));
    return GroupValue::tuple(std::move(parts));
  };
  auto map_word = [&](const EqWord& w) {
    EqWord out;
    for (const auto& tok : w) {
      if (const auto* c = std::get_if<GroupValue>(&tok)) {
        out.push_back(embed_value(*c));
        continue;
      }
      const auto& o = std::get<Occurrence>(tok);
      if (o.twist)
        throw std::invalid_argument(
            "solve_virtually_direct_product: twists over the extension are not supported");
      out.push_back(o);
    }
    return out;
  };

  // Image of mu as a constraint over the product: one box per quotient
  // element, consistent across the orbits.
  RecSet image;
  {
    std::vector<RecSet> per_orbit;
    for (const auto& e : embeddings) per_orbit.push_back(e.image());
    // e.image() emits |Q| boxes in quotient order (possibly several per q
    // for nested coordinate groups); regroup by enumerating q again.
    const int qn = ex->quotient.order();
    std::vector<std::vector<std::vector<RecBox>>> grouped(embeddings.size());
    for (size_t o = 0; o < embeddings.size(); ++o) {
      grouped[o].resize(qn);
      size_t per_q = per_orbit[o].boxes.size() / qn;
      for (int q = 0; q < qn; ++q)
        for (size_t r = 0; r < per_q; ++r)
          grouped[o][q].push_back(per_orbit[o].boxes[q * per_q + r]);
    }
    for (int q = 0; q < qn; ++q) {
      std::vector<RecBox::TupleBox> acc{RecBox::TupleBox{}};
      for (size_t o = 0; o < embeddings.size(); ++o) {
        std::vector<RecBox::TupleBox> next;
        for (const auto& prefix : acc)
          for (const auto& b : grouped[o][q]) {
            RecBox::TupleBox t = prefix;
            t.components.push_back(b);
            next.push_back(std::move(t));
          }
        acc = std::move(next);
      }
      for (auto& t : acc) image.boxes.push_back(RecBox(std::move(t)));
    }
  }

  System mapped;
  for (const auto& var : s.variables) mapped.declare(var);
  for (const auto& w : s.equations) mapped.equations.push_back(map_word(w));
  for (const auto& w : s.inequations) mapped.inequations.push_back(map_word(w));
  for (const auto& var : s.variables) {
    RecSet pushed;
    auto it = s.constraints.find(var);
    if (it == s.constraints.end()) {
      pushed = image;
    } else {
      RecSet user;
      for (const auto& box : it->second.boxes) {
        RecBox::TupleBox t;
        for (const auto& e : embeddings) t.components.push_back(e.push_box(box));
        user.boxes.push_back(RecBox(std::move(t)));
      }
      pushed = recset_intersect(w_total, user, image);
    }
    mapped.constraints[var] = std::move(pushed);
  }

  Verdict v = solve_impl(w_total, mapped, ctx);
  if (!v.is_sat()) return v;

  // Pull each witness value back through mu.
  Assignment pulled;
  for (const auto& var : s.variables) {
    const auto& wval = v.witness.at(var);
    const auto& parts = std::get<ValueTuple>(wval.v);
    int q = embeddings[0].recover_quotient(parts[0]);
    const int n_factors =
        ex->base->product() ? static_cast<int>(ex->base->product()->factors.size()) : 1;
    std::vector<GroupValue> base_parts(n_factors);
    for (size_t o = 0; o < embeddings.size(); ++o)
      embeddings[o].recover_base(parts[o], q, base_parts);
    GroupValue k_val = ex->base->product() ? GroupValue::tuple(base_parts)
                                           : base_parts[0];
    GroupValue g_val = GroupValue::ext(std::move(k_val), q);
    if (!value_eq(embed_value(g_val), wval))
      throw std::logic_error("solve_virtually_direct_product: witness pull-back failure");
    pulled.emplace(var, std::move(g_val));
  }
  if (!check_witness(g, s, pulled))
    throw std::logic_error("solve_virtually_direct_product: pulled witness fails the checker");
  return Verdict::sat(std::move(pulled));
}

// ---------------------------------------------------------------------

Verdict solve_impl(const GroupStructure& g, const System& s, Ctx& ctx) {
  if (g.finite()) {
    FiniteSolveOptions fopts;
    fopts.assignment_cap = ctx.opts.finite_assignment_cap;
    return solve_finite(g, s, fopts, &ctx.stats.branches);
  }
  if (g.free_abelian()) return solve_free_abelian_system(g, s);
  if (g.free()) {
    FreeSolveOptions fopts;
    fopts.bound_override = ctx.opts.free_bound;
    fopts.max_candidates = ctx.opts.branch_budget - ctx.stats.branches;
    return solve_free_bounded(g, s, fopts, &ctx.stats.branches);
  }
  if (g.product()) return solve_product(g, s, ctx);
  if (ctx.embed_extensions) return solve_via_embedding(g, s, ctx);
  return solve_extension_impl(g, s, ctx);
}

Verdict solve_entry(const GroupStructure& g, const System& s, const SolveOptions& opts,
                    SolveStats* stats, Verdict (*fn)(const GroupStructure&, const System&, Ctx&)) {
  validate_system(g, s);
  SolveStats local;
  SolveStats& st = stats ? *stats : local;
  Ctx ctx{opts, st, opts.via_embedding};
  Verdict v = fn(g, s, ctx);
  if (v.is_sat() && !check_witness(g, s, v.witness))
    throw std::logic_error("solve: produced witness fails the independent checker");
  return v;
}

}  // namespace

Verdict solve(const GroupStructure& g, const System& s, const SolveOptions& opts,
              SolveStats* stats) {
  return solve_entry(g, s, opts, stats, &solve_impl);
}

Verdict solve_direct_product(const GroupStructure& g, const System& s, const SolveOptions& opts,
                             SolveStats* stats) {
  if (!g.product()) throw std::invalid_argument("solve_direct_product: not a product");
  if (has_permuting_twist(s))
    throw std::invalid_argument("solve_direct_product: factor-permuting twist encountered");
  return solve_entry(g, s, opts, stats, &solve_product);
}

Verdict solve_extension(const GroupStructure& g, const System& s, const SolveOptions& opts,
                        SolveStats* stats) {
  if (!g.extension()) throw std::invalid_argument("solve_extension: not an extension");
  return solve_entry(g, s, opts, stats, &solve_extension_impl);
}

Verdict solve_virtually_direct_product(const GroupStructure& g, const System& s,
                                       const SolveOptions& opts, SolveStats* stats) {
  return solve_entry(g, s, opts, stats, &solve_via_embedding);
}

}  // namespace groupeq
