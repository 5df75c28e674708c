#include "groupeq/recset.hpp"

#include <algorithm>
#include <stdexcept>

namespace groupeq {

bool recbox_member(const GroupStructure& g, const RecBox& box, const GroupValue& x) {
  if (const auto* fs = std::get_if<RecBox::FiniteSubset>(&box.v)) {
    int idx = std::get<FiniteElt>(x.v).index;
    return std::binary_search(fs->elements.begin(), fs->elements.end(), idx);
  }
  if (const auto* cb = std::get_if<CongruenceBox>(&box.v))
    return congruence_box_member(*cb, std::get<IntVec>(x.v));
  if (const auto* fq = std::get_if<RecBox::FreeQuot>(&box.v)) {
    int img = finite_image(std::get<FreeWord>(x.v), fq->quot, fq->targets);
    return std::binary_search(fq->allowed.begin(), fq->allowed.end(), img);
  }
  if (const auto* tb = std::get_if<RecBox::TupleBox>(&box.v)) {
    const auto& parts = std::get<ValueTuple>(x.v);
    const auto& factors = g.product()->factors;
    if (parts.size() != tb->components.size()) return false;
    for (size_t i = 0; i < parts.size(); ++i)
      if (!recbox_member(factors[i], tb->components[i], parts[i])) return false;
    return true;
  }
  const auto& eb = std::get<RecBox::ExtBox>(box.v);
  const auto& e = std::get<ExtElt>(x.v);
  return e.top == eb.top && recbox_member(*g.extension()->base, *eb.base, *e.base);
}

bool recset_member(const GroupStructure& g, const RecSet& set, const GroupValue& x) {
  for (const auto& b : set.boxes)
    if (recbox_member(g, b, x)) return true;
  return false;
}

void validate_recset(const GroupStructure& g, const RecSet& set) {
  for (const auto& box : set.boxes) {
    if (const auto* fs = std::get_if<RecBox::FiniteSubset>(&box.v)) {
      if (!g.finite()) throw std::invalid_argument("recset: subset box on non-finite group");
      for (int e : fs->elements)
        if (e < 0 || e >= g.finite()->group.order())
          throw std::invalid_argument("recset: element out of range");
      continue;
    }
    if (const auto* cb = std::get_if<CongruenceBox>(&box.v)) {
      const auto* ab = g.free_abelian();
      if (!ab) throw std::invalid_argument("recset: congruence box on non-abelian group");
      if (cb->residue.size() != ab->rank || cb->lattice.rows() != ab->rank ||
          cb->lattice.cols() != ab->rank)
        throw std::invalid_argument("recset: congruence box rank mismatch");
      if (det_exact(cb->lattice) == 0)
        throw std::invalid_argument("recset: congruence sublattice must have finite index");
      continue;
    }
    if (const auto* fq = std::get_if<RecBox::FreeQuot>(&box.v)) {
      const auto* fr = g.free();
      if (!fr) throw std::invalid_argument("recset: quotient box on non-free group");
      if (static_cast<int>(fq->targets.size()) != fr->rank)
        throw std::invalid_argument("recset: one target per generator required");
      for (int t : fq->targets)
        if (t < 0 || t >= fq->quot.order())
          throw std::invalid_argument("recset: target out of range");
      for (int a : fq->allowed)
        if (a < 0 || a >= fq->quot.order())
          throw std::invalid_argument("recset: allowed image out of range");
      continue;
    }
    if (const auto* tb = std::get_if<RecBox::TupleBox>(&box.v)) {
      const auto* pr = g.product();
      if (!pr || tb->components.size() != pr->factors.size())
        throw std::invalid_argument("recset: tuple box shape mismatch");
      for (size_t i = 0; i < tb->components.size(); ++i)
        validate_recset(pr->factors[i], RecSet{{tb->components[i]}});
      continue;
    }
    const auto& eb = std::get<RecBox::ExtBox>(box.v);
    const auto* ex = g.extension();
    if (!ex) throw std::invalid_argument("recset: extension box on non-extension group");
    if (eb.top < 0 || eb.top >= ex->quotient.order())
      throw std::invalid_argument("recset: quotient part out of range");
    validate_recset(*ex->base, RecSet{{*eb.base}});
  }
}

std::optional<RecBox> box_intersect(const GroupStructure& g, const RecBox& a, const RecBox& b) {
  if (a.v.index() != b.v.index())
    throw std::invalid_argument("box_intersect: mismatched box kinds");
  if (const auto* fa = std::get_if<RecBox::FiniteSubset>(&a.v)) {
    const auto& fb = std::get<RecBox::FiniteSubset>(b.v);
    RecBox::FiniteSubset out;
    std::set_intersection(fa->elements.begin(), fa->elements.end(), fb.elements.begin(),
                          fb.elements.end(), std::back_inserter(out.elements));
    if (out.elements.empty()) return std::nullopt;
    return RecBox(std::move(out));
  }
  if (const auto* ca = std::get_if<CongruenceBox>(&a.v)) {
    const auto& cb = std::get<CongruenceBox>(b.v);
    // Points of (ra + La z1) ∩ (rb + Lb z2): solve La z1 - Lb z2 = rb - ra.
    const Eigen::Index r = ca->residue.size();
    IntMatrix stacked(r, 2 * r);
    stacked.block(0, 0, r, r) = ca->lattice;
    stacked.block(0, r, r, r) = -cb.lattice;
    auto sol = solve_diophantine(stacked, IntVec(cb.residue - ca->residue));
    if (!sol) return std::nullopt;
    CongruenceBox out;
    IntVec z1 = sol->basepoint.segment(0, r);
    out.residue = ca->residue + ca->lattice * z1;
    out.lattice = lattice_intersect(ca->lattice, cb.lattice);
    return RecBox(std::move(out));
  }
  if (const auto* qa = std::get_if<RecBox::FreeQuot>(&a.v)) {
    const auto& qb = std::get<RecBox::FreeQuot>(b.v);
    RecBox::FreeQuot out;
    out.quot = direct_product(qa->quot, qb.quot);
    for (size_t i = 0; i < qa->targets.size(); ++i)
      out.targets.push_back(qa->targets[i] * qb.quot.order() + qb.targets[i]);
    for (int x : qa->allowed)
      for (int y : qb.allowed) out.allowed.push_back(x * qb.quot.order() + y);
    std::sort(out.allowed.begin(), out.allowed.end());
    if (out.allowed.empty()) return std::nullopt;
    return RecBox(std::move(out));
  }
  if (const auto* ta = std::get_if<RecBox::TupleBox>(&a.v)) {
    const auto& tb = std::get<RecBox::TupleBox>(b.v);
    const auto& factors = g.product()->factors;
    RecBox::TupleBox out;
    for (size_t i = 0; i < ta->components.size(); ++i) {
      auto c = box_intersect(factors[i], ta->components[i], tb.components[i]);
      if (!c) return std::nullopt;
      out.components.push_back(std::move(*c));
    }
    return RecBox(std::move(out));
  }
  const auto& ea = std::get<RecBox::ExtBox>(a.v);
  const auto& eb = std::get<RecBox::ExtBox>(b.v);
  if (ea.top != eb.top) return std::nullopt;
  auto base = box_intersect(*g.extension()->base, *ea.base, *eb.base);
  if (!base) return std::nullopt;
  return RecBox(RecBox::ExtBox{ea.top, Box<RecBox>(std::move(*base))});
}

RecSet recset_intersect(const GroupStructure& g, const RecSet& a, const RecSet& b) {
  RecSet out;
  for (const auto& ba : a.boxes)
    for (const auto& bb : b.boxes)
      if (auto c = box_intersect(g, ba, bb)) out.boxes.push_back(std::move(*c));
  return out;
}

RecBox box_translate_right(const GroupStructure& g, const RecBox& box, const GroupValue& c) {
  if (is_identity_value(g, c)) return box;
  if (const auto* fs = std::get_if<RecBox::FiniteSubset>(&box.v)) {
    RecBox::FiniteSubset out;
    int ci = std::get<FiniteElt>(c.v).index;
    for (int e : fs->elements) out.elements.push_back(g.finite()->group.mul(e, ci));
    std::sort(out.elements.begin(), out.elements.end());
    return RecBox(std::move(out));
  }
  if (const auto* cb = std::get_if<CongruenceBox>(&box.v)) {
    CongruenceBox out = *cb;
    out.residue += std::get<IntVec>(c.v);
    return RecBox(std::move(out));
  }
  if (const auto* fq = std::get_if<RecBox::FreeQuot>(&box.v)) {
    // {w*c : h(w) in S} = {u : h(u) in S*h(c)}.
    RecBox::FreeQuot out = *fq;
    int hc = finite_image(std::get<FreeWord>(c.v), fq->quot, fq->targets);
    for (int& s : out.allowed) s = fq->quot.mul(s, hc);
    std::sort(out.allowed.begin(), out.allowed.end());
    return RecBox(std::move(out));
  }
  if (const auto* tb = std::get_if<RecBox::TupleBox>(&box.v)) {
    const auto& parts = std::get<ValueTuple>(c.v);
    const auto& factors = g.product()->factors;
    RecBox::TupleBox out;
    for (size_t i = 0; i < tb->components.size(); ++i)
      out.components.push_back(box_translate_right(factors[i], tb->components[i], parts[i]));
    return RecBox(std::move(out));
  }
  // {(b, s)} * (k', q') = {(b * alpha_s(k') * alpha_{sq'}(c(s,q')), s q')}.
  const auto& eb = std::get<RecBox::ExtBox>(box.v);
  const auto& ex = *g.extension();
  const auto& e = std::get<ExtElt>(c.v);
  const int s = eb.top, q2 = e.top;
  GroupValue shift = apply_aut(ex.action[s], *ex.base, *e.base);
  const GroupValue& coc = ex.cocycle[s][q2];
  if (!is_identity_value(*ex.base, coc))
    shift = gmul(*ex.base, shift, apply_aut(ex.action[ex.quotient.mul(s, q2)], *ex.base, coc));
  return RecBox(RecBox::ExtBox{
      ex.quotient.mul(s, q2),
      Box<RecBox>(box_translate_right(*ex.base, *eb.base, shift))});
}

RecBox box_image(const GroupStructure& g, const AutPtr& aut, const RecBox& box) {
  if (aut_is_identity(aut)) return box;
  if (const auto* fs = std::get_if<RecBox::FiniteSubset>(&box.v)) {
    const auto& fm = std::get<Automorphism::FiniteMap>(aut->v);
    RecBox::FiniteSubset out;
    for (int e : fs->elements) out.elements.push_back(fm.images[e]);
    std::sort(out.elements.begin(), out.elements.end());
    return RecBox(std::move(out));
  }
  if (const auto* cb = std::get_if<CongruenceBox>(&box.v)) {
    const auto& ma = std::get<Automorphism::MatrixAut>(aut->v);
    CongruenceBox out;
    out.residue = ma.m * cb->residue;
    out.lattice = ma.m * cb->lattice;
    return RecBox(std::move(out));
  }
  if (const auto* fq = std::get_if<RecBox::FreeQuot>(&box.v)) {
    // {phi(w) : h(w) in S} = {u : (h ∘ phi^{-1})(u) in S}.
    const auto& fsub = std::get<Automorphism::FreeSubst>(aut->v);
    RecBox::FreeQuot out = *fq;
    out.targets.clear();
    for (const auto& w : fsub.inverse_images)
      out.targets.push_back(finite_image(w, fq->quot, fq->targets));
    return RecBox(std::move(out));
  }
  if (const auto* tb = std::get_if<RecBox::TupleBox>(&box.v)) {
    const auto& pa = std::get<Automorphism::ProductAut>(aut->v);
    const auto& factors = g.product()->factors;
    Perm sigma_inv = pa.sigma.inverse();
    RecBox::TupleBox out;
    out.components.resize(tb->components.size());
    for (size_t i = 0; i < tb->components.size(); ++i) {
      size_t src = static_cast<size_t>(sigma_inv(static_cast<int>(i)));
      out.components[i] = box_image(factors[i], pa.components[i], tb->components[src]);
    }
    return RecBox(std::move(out));
  }
  throw std::invalid_argument("box_image: unsupported automorphism on extension boxes");
}

std::vector<RecBox> full_boxes(const GroupStructure& g) {
  if (const auto* fin = g.finite()) {
    RecBox::FiniteSubset all;
    for (int i = 0; i < fin->group.order(); ++i) all.elements.push_back(i);
    return {RecBox(std::move(all))};
  }
  if (const auto* ab = g.free_abelian()) {
    CongruenceBox all;
    all.residue = IntVec::Zero(ab->rank);
    all.lattice = IntMatrix::Identity(ab->rank, ab->rank);
    return {RecBox(std::move(all))};
  }
  if (const auto* fr = g.free()) {
    RecBox::FreeQuot all;
    all.quot = FiniteGroup::from_table({{0}});
    all.targets.assign(fr->rank, 0);
    all.allowed = {0};
    return {RecBox(std::move(all))};
  }
  if (const auto* pr = g.product()) {
    std::vector<RecBox::TupleBox> acc{RecBox::TupleBox{}};
    for (const auto& f : pr->factors) {
      auto fb = full_boxes(f);
      std::vector<RecBox::TupleBox> next;
      for (const auto& prefix : acc)
        for (const auto& b : fb) {
          RecBox::TupleBox t = prefix;
          t.components.push_back(b);
          next.push_back(std::move(t));
        }
      acc = std::move(next);
    }
    std::vector<RecBox> out;
    for (auto& t : acc) out.push_back(RecBox(std::move(t)));
    return out;
  }
  const auto& ex = *g.extension();
  std::vector<RecBox> out;
  for (int q = 0; q < ex.quotient.order(); ++q)
    for (const auto& b : full_boxes(*ex.base))
      out.push_back(RecBox(RecBox::ExtBox{q, Box<RecBox>(b)}));
  return out;
}

}  // namespace groupeq
