#include "groupeq/structure.hpp"

#include <stdexcept>

namespace groupeq {

const GroupValue& ext_base(const GroupValue& v) { return *std::get<ExtElt>(v.v).base; }
int ext_top(const GroupValue& v) { return std::get<ExtElt>(v.v).top; }

GroupValue gid(const GroupStructure& g) {
  if (g.finite()) return GroupValue::finite(0);
  if (const auto* ab = g.free_abelian()) return GroupValue::vector(IntVec::Zero(ab->rank));
  if (g.free()) return GroupValue::word(FreeWord());
  if (const auto* pr = g.product()) {
    ValueTuple parts;
    for (const auto& f : pr->factors) parts.push_back(gid(f));
    return GroupValue::tuple(std::move(parts));
  }
  const auto& ex = *g.extension();
  return GroupValue::ext(gid(*ex.base), ex.quotient.identity());
}

namespace {

[[noreturn]] void shape_error(const char* where) {
  throw std::invalid_argument(std::string(where) + ": value does not match the group structure");
}

}  // namespace

bool value_in_structure(const GroupStructure& g, const GroupValue& a) {
  if (const auto* fin = g.finite()) {
    const auto* e = std::get_if<FiniteElt>(&a.v);
    return e && e->index >= 0 && e->index < fin->group.order();
  }
  if (const auto* ab = g.free_abelian()) {
    const auto* v = std::get_if<IntVec>(&a.v);
    return v && v->size() == ab->rank;
  }
  if (const auto* fr = g.free()) {
    const auto* w = std::get_if<FreeWord>(&a.v);
    return w && w->max_generator() <= fr->rank;
  }
  if (const auto* pr = g.product()) {
    const auto* t = std::get_if<ValueTuple>(&a.v);
    if (!t || t->size() != pr->factors.size()) return false;
    for (size_t i = 0; i < t->size(); ++i)
      if (!value_in_structure(pr->factors[i], (*t)[i])) return false;
    return true;
  }
  const auto& ex = *g.extension();
  const auto* e = std::get_if<ExtElt>(&a.v);
  return e && e->top >= 0 && e->top < ex.quotient.order() &&
         value_in_structure(*ex.base, *e->base);
}

GroupValue gmul(const GroupStructure& g, const GroupValue& a, const GroupValue& b) {
  if (const auto* fin = g.finite()) {
    const auto* x = std::get_if<FiniteElt>(&a.v);
    const auto* y = std::get_if<FiniteElt>(&b.v);
    if (!x || !y) shape_error("gmul");
    return GroupValue::finite(fin->group.mul(x->index, y->index));
  }
  if (g.free_abelian()) {
    const auto* x = std::get_if<IntVec>(&a.v);
    const auto* y = std::get_if<IntVec>(&b.v);
    if (!x || !y || x->size() != y->size()) shape_error("gmul");
    return GroupValue::vector(*x + *y);
  }
  if (g.free()) {
    const auto* x = std::get_if<FreeWord>(&a.v);
    const auto* y = std::get_if<FreeWord>(&b.v);
    if (!x || !y) shape_error("gmul");
    return GroupValue::word(*x * *y);
  }
  if (const auto* pr = g.product()) {
    const auto* x = std::get_if<ValueTuple>(&a.v);
    const auto* y = std::get_if<ValueTuple>(&b.v);
    if (!x || !y || x->size() != pr->factors.size() || y->size() != pr->factors.size())
      shape_error("gmul");
    ValueTuple parts(x->size());
    for (size_t i = 0; i < x->size(); ++i)
      parts[i] = gmul(pr->factors[i], (*x)[i], (*y)[i]);
    return GroupValue::tuple(std::move(parts));
  }
  const auto& ex = *g.extension();
  const auto* x = std::get_if<ExtElt>(&a.v);
  const auto* y = std::get_if<ExtElt>(&b.v);
  if (!x || !y) shape_error("gmul");
  const int p = x->top, q = y->top;
  const int pq = ex.quotient.mul(p, q);
  GroupValue base = gmul(*ex.base, *x->base, apply_aut(ex.action[p], *ex.base, *y->base));
  const GroupValue& coc = ex.cocycle[p][q];
  if (!is_identity_value(*ex.base, coc))
    base = gmul(*ex.base, base, apply_aut(ex.action[pq], *ex.base, coc));
  return GroupValue::ext(std::move(base), pq);
}

GroupValue ginv(const GroupStructure& g, const GroupValue& a) {
  if (const auto* fin = g.finite())
    return GroupValue::finite(fin->group.inv(std::get<FiniteElt>(a.v).index));
  if (g.free_abelian()) return GroupValue::vector(-std::get<IntVec>(a.v));
  if (g.free()) return GroupValue::word(std::get<FreeWord>(a.v).inverse());
  if (const auto* pr = g.product()) {
    const auto& parts = std::get<ValueTuple>(a.v);
    ValueTuple out(parts.size());
    for (size_t i = 0; i < parts.size(); ++i) out[i] = ginv(pr->factors[i], parts[i]);
    return GroupValue::tuple(std::move(out));
  }
  // (k, q)^{-1} = (c(q^{-1}, q)^{-1} * alpha_{q^{-1}}(k^{-1}), q^{-1})
  const auto& ex = *g.extension();
  const auto& e = std::get<ExtElt>(a.v);
  const int qi = ex.quotient.inv(e.top);
  GroupValue base = apply_aut(ex.action[qi], *ex.base, ginv(*ex.base, *e.base));
  const GroupValue& coc = ex.cocycle[qi][e.top];
  if (!is_identity_value(*ex.base, coc))
    base = gmul(*ex.base, ginv(*ex.base, coc), base);
  return GroupValue::ext(std::move(base), qi);
}

bool is_identity_value(const GroupStructure& g, const GroupValue& a) {
  return value_eq(a, gid(g));
}

bool structure_equal(const GroupStructure& a, const GroupStructure& b) {
  if (a.v.index() != b.v.index()) return false;
  if (const auto* fa = a.finite()) return fa->group.equal_tables(b.finite()->group);
  if (const auto* aa = a.free_abelian()) return aa->rank == b.free_abelian()->rank;
  if (const auto* fr = a.free())
    return fr->rank == b.free()->rank && fr->bound == b.free()->bound;
  if (const auto* pa = a.product()) {
    const auto* pb = b.product();
    if (pa->factors.size() != pb->factors.size()) return false;
    for (size_t i = 0; i < pa->factors.size(); ++i)
      if (!structure_equal(pa->factors[i], pb->factors[i])) return false;
    return true;
  }
  const auto& ea = *a.extension();
  const auto& eb = *b.extension();
  if (!structure_equal(*ea.base, *eb.base)) return false;
  if (!ea.quotient.equal_tables(eb.quotient)) return false;
  for (int q = 0; q < ea.quotient.order(); ++q)
    if (!aut_equal(ea.action[q], eb.action[q])) return false;
  for (int p = 0; p < ea.quotient.order(); ++p)
    for (int q = 0; q < ea.quotient.order(); ++q)
      if (!value_eq(ea.cocycle[p][q], eb.cocycle[p][q])) return false;
  return true;
}

std::optional<size_t> finite_order(const GroupStructure& g) {
  if (const auto* fin = g.finite()) return static_cast<size_t>(fin->group.order());
  if (const auto* ab = g.free_abelian())
    return ab->rank == 0 ? std::optional<size_t>(1) : std::nullopt;
  if (g.free()) return std::nullopt;
  if (const auto* pr = g.product()) {
    size_t total = 1;
    for (const auto& f : pr->factors) {
      auto n = finite_order(f);
      if (!n) return std::nullopt;
      total *= *n;
    }
    return total;
  }
  const auto& ex = *g.extension();
  auto n = finite_order(*ex.base);
  if (!n) return std::nullopt;
  return *n * static_cast<size_t>(ex.quotient.order());
}

std::vector<GroupValue> enumerate_values(const GroupStructure& g, size_t cap) {
  auto order = finite_order(g);
  if (!order) throw std::invalid_argument("enumerate_values: structure is infinite");
  if (*order > cap) throw std::invalid_argument("enumerate_values: order exceeds cap");
  if (const auto* fin = g.finite()) {
    std::vector<GroupValue> out;
    for (int i = 0; i < fin->group.order(); ++i) out.push_back(GroupValue::finite(i));
    return out;
  }
  if (g.free_abelian()) return {gid(g)};  // rank 0
  if (const auto* pr = g.product()) {
    std::vector<GroupValue> out{GroupValue::tuple({})};
    for (const auto& f : pr->factors) {
      auto vals = enumerate_values(f, cap);
      std::vector<GroupValue> next;
      for (const auto& prefix : out)
        for (const auto& v : vals) {
          ValueTuple t = std::get<ValueTuple>(prefix.v);
          t.push_back(v);
          next.push_back(GroupValue::tuple(std::move(t)));
        }
      out = std::move(next);
    }
    return out;
  }
  const auto& ex = *g.extension();
  auto base_vals = enumerate_values(*ex.base, cap);
  std::vector<GroupValue> out;
  for (int q = 0; q < ex.quotient.order(); ++q)
    for (const auto& b : base_vals) out.push_back(GroupValue::ext(b, q));
  return out;
}

std::vector<GroupValue> probe_values(const GroupStructure& g) {
  if (const auto* fin = g.finite()) {
    std::vector<GroupValue> out;
    for (int i = 0; i < fin->group.order(); ++i) out.push_back(GroupValue::finite(i));
    return out;
  }
  if (const auto* ab = g.free_abelian()) {
    std::vector<GroupValue> out;
    for (int i = 0; i < ab->rank; ++i) {
      IntVec e = IntVec::Zero(ab->rank);
      e[i] = 1;
      out.push_back(GroupValue::vector(std::move(e)));
    }
    return out;
  }
  if (const auto* fr = g.free()) {
    std::vector<GroupValue> out;
    for (int i = 1; i <= fr->rank; ++i) out.push_back(GroupValue::word(FreeWord::generator(i)));
    return out;
  }
  if (const auto* pr = g.product()) {
    std::vector<GroupValue> out;
    for (size_t i = 0; i < pr->factors.size(); ++i)
      for (const auto& p : probe_values(pr->factors[i])) {
        ValueTuple t;
        for (size_t j = 0; j < pr->factors.size(); ++j)
          t.push_back(j == i ? p : gid(pr->factors[j]));
        out.push_back(GroupValue::tuple(std::move(t)));
      }
    return out;
  }
  const auto& ex = *g.extension();
  std::vector<GroupValue> out;
  for (const auto& p : probe_values(*ex.base)) out.push_back(GroupValue::ext(p, 0));
  for (int q = 0; q < ex.quotient.order(); ++q)
    out.push_back(GroupValue::ext(gid(*ex.base), q));
  return out;
}

void validate_structure(const GroupStructure& g) {
  for (const auto& [tag, aut] : g.automorphisms) {
    try {
      validate_automorphism(aut, g);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("automorphism '" + tag + "': " + e.what());
    }
  }
  if (g.finite()) return;  // table axioms checked at construction
  if (const auto* ab = g.free_abelian()) {
    if (ab->rank < 0) throw std::invalid_argument("free abelian rank must be >= 0");
    return;
  }
  if (const auto* fr = g.free()) {
    if (fr->rank < 1) throw std::invalid_argument("free rank must be >= 1");
    if (fr->bound < 0) throw std::invalid_argument("free search bound must be >= 0");
    if (static_cast<int>(fr->gen_names.size()) != fr->rank)
      throw std::invalid_argument("free group: one generator name per rank required");
    return;
  }
  if (const auto* pr = g.product()) {
    for (const auto& f : pr->factors) validate_structure(f);
    return;
  }
  const auto& ex = *g.extension();
  validate_structure(*ex.base);
  const int n = ex.quotient.order();
  if (static_cast<int>(ex.action.size()) != n)
    throw std::invalid_argument("extension: one action entry per quotient element required");
  if (!aut_is_identity(ex.action[0]))
    throw std::invalid_argument("extension: action of the quotient identity must be trivial");
  for (int q = 0; q < n; ++q) {
    try {
      validate_automorphism(ex.action[q], *ex.base);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("extension action at q = " + ex.quotient.name_of(q) + ": " +
                                  e.what());
    }
  }
  if (static_cast<int>(ex.cocycle.size()) != n)
    throw std::invalid_argument("extension: cocycle table must be |Q| x |Q|");
  for (int p = 0; p < n; ++p) {
    if (static_cast<int>(ex.cocycle[p].size()) != n)
      throw std::invalid_argument("extension: cocycle table must be |Q| x |Q|");
    for (int q = 0; q < n; ++q)
      if (!value_in_structure(*ex.base, ex.cocycle[p][q]))
        throw std::invalid_argument("extension: cocycle value at (" + ex.quotient.name_of(p) +
                                    "," + ex.quotient.name_of(q) + ") not in the base group");
  }
  for (int q = 0; q < n; ++q)
    if (!is_identity_value(*ex.base, ex.cocycle[0][q]) ||
        !is_identity_value(*ex.base, ex.cocycle[q][0]))
      throw std::invalid_argument("extension: cocycle not normalized at q = " +
                                  ex.quotient.name_of(q));

  const GroupStructure& k = *ex.base;
  auto act = [&](int q, const GroupValue& v) { return apply_aut(ex.action[q], k, v); };
  // Compatibility: alpha_p(alpha_q(k)) = conj(alpha_pq(c(p,q)))(alpha_pq(k)),
  // verified on a generating probe set (exact, both sides homomorphisms).
  auto probes = probe_values(k);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const int pq = ex.quotient.mul(p, q);
      GroupValue c = act(pq, ex.cocycle[p][q]);
      for (const auto& x : probes) {
        GroupValue lhs = act(p, act(q, x));
        GroupValue rhs = gmul(k, gmul(k, c, act(pq, x)), ginv(k, c));
        if (!value_eq(lhs, rhs))
          throw std::invalid_argument("extension: action/cocycle compatibility fails at (" +
                                      ex.quotient.name_of(p) + "," + ex.quotient.name_of(q) +
                                      ")");
      }
    }
  // Cocycle identity (associativity of the transversal products):
  // alpha_pq(c(p,q)) * alpha_pqr(c(pq,r)) = alpha_p(alpha_qr(c(q,r))) * alpha_pqr(c(p,qr)).
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r) {
        const int pq = ex.quotient.mul(p, q);
        const int qr = ex.quotient.mul(q, r);
        const int pqr = ex.quotient.mul(pq, r);
        GroupValue lhs = gmul(k, act(pq, ex.cocycle[p][q]), act(pqr, ex.cocycle[pq][r]));
        GroupValue rhs = gmul(k, act(p, act(qr, ex.cocycle[q][r])), act(pqr, ex.cocycle[p][qr]));
        if (!value_eq(lhs, rhs))
          throw std::invalid_argument(
              "extension: cocycle identity fails at triple (" + ex.quotient.name_of(p) + "," +
              ex.quotient.name_of(q) + "," + ex.quotient.name_of(r) + ")");
      }
}

}  // namespace groupeq
