#include "groupeq/wreath.hpp"

#include <algorithm>
#include <stdexcept>

namespace groupeq {

GroupStructure build_wreath(const GroupStructure& j, const FiniteGroup& p) {
  if (!p.has_perms())
    throw std::invalid_argument("build_wreath: quotient must be a permutation group");
  const int n = p.degree();
  GroupStructure::Product base;
  base.factors.assign(n, j);
  GroupStructure::Extension ex;
  ex.base = Box<GroupStructure>(GroupStructure(std::move(base)));
  ex.quotient = p;
  ex.action.resize(p.order());
  for (int q = 0; q < p.order(); ++q) {
    const Perm& pi = p.perm_of(q);
    if (!pi.is_identity())
      ex.action[q] = Automorphism::product(pi, std::vector<AutPtr>(n));
  }
  GroupValue id_base = gid(*ex.base);
  ex.cocycle.assign(p.order(), std::vector<GroupValue>(p.order(), id_base));
  return GroupStructure(GroupStructure::Variant(std::move(ex)));
}

std::vector<Perm> factor_permutations(const GroupStructure& g) {
  const auto* ex = g.extension();
  if (!ex) throw std::invalid_argument("factor_permutations: not an extension");
  const int n = ex->base->product()
                    ? static_cast<int>(ex->base->product()->factors.size())
                    : 1;
  std::vector<Perm> out;
  for (int q = 0; q < ex->quotient.order(); ++q) {
    if (const AutPtr& a = ex->action[q]; a && ex->base->product()) {
      if (const auto* pa = std::get_if<Automorphism::ProductAut>(&a->v)) {
        out.push_back(pa->sigma);
        continue;
      }
    }
    out.push_back(Perm::identity(n));
  }
  return out;
}

std::vector<std::vector<int>> factor_orbits(const GroupStructure& g) {
  std::vector<Perm> sigma = factor_permutations(g);
  const int n = sigma.empty() ? 1 : sigma[0].degree();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> orbits;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> orbit{start};
    seen[start] = true;
    for (size_t head = 0; head < orbit.size(); ++head)
      for (const Perm& s : sigma) {
        int img = s(orbit[head]);
        if (!seen[img]) {
          seen[img] = true;
          orbit.push_back(img);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

namespace {

const GroupStructure& factor_structure(const GroupStructure& base, int abs_index) {
  if (const auto* pr = base.product()) return pr->factors[abs_index];
  if (abs_index != 0) throw std::logic_error("factor_structure: index out of range");
  return base;
}

}  // namespace

GroupValue WreathEmbedding::factor_component(const GroupValue& k, int abs_index) const {
  const auto& base = *source_.extension()->base;
  if (base.product()) return std::get<ValueTuple>(k.v)[abs_index];
  return k;
}

GroupValue WreathEmbedding::transversal(int q) const {
  return GroupValue::ext(gid(*source_.extension()->base), q);
}

AutPtr WreathEmbedding::rep_component(int pos) const {
  const auto& ex = *source_.extension();
  const AutPtr& a = ex.action[reps_[pos]];
  if (!a) return nullptr;
  if (ex.base->product()) {
    const auto& pa = std::get<Automorphism::ProductAut>(a->v);
    return pa.components[orbit_[pos]];
  }
  return a;
}

GroupValue WreathEmbedding::nu(const GroupValue& g_elt) const {
  const auto& e = std::get<ExtElt>(g_elt.v);
  GroupValue k1 = factor_component(*e.base, orbit_[0]);
  if (trivial_stab_) {
    if (e.top != 0) throw std::logic_error("nu: element not over the stabilizer");
    return k1;
  }
  auto it = stab_.from_parent.find(e.top);
  if (it == stab_.from_parent.end())
    throw std::logic_error("nu: element not over the stabilizer");
  return GroupValue::ext(std::move(k1), it->second);
}

WreathEmbedding::WreathEmbedding(const GroupStructure& source, std::vector<int> orbit)
    : source_(source), orbit_(std::move(orbit)) {
  const auto* ex = source_.extension();
  if (!ex) throw std::invalid_argument("WreathEmbedding: source must be an extension");
  const FiniteGroup& q_grp = ex->quotient;
  sigma_ = factor_permutations(source_);
  std::sort(orbit_.begin(), orbit_.end());
  if (orbit_.empty()) throw std::invalid_argument("WreathEmbedding: empty orbit");

  // The orbit must be closed and reachable from its base point.
  std::vector<int> pos_of(sigma_[0].degree(), -1);
  for (size_t i = 0; i < orbit_.size(); ++i) pos_of[orbit_[i]] = static_cast<int>(i);
  for (int q = 0; q < q_grp.order(); ++q)
    for (int abs : orbit_)
      if (pos_of[sigma_[q](abs)] < 0)
        throw std::invalid_argument("WreathEmbedding: orbit not closed under the action");

  // Position permutations and their group P.
  std::vector<Perm> pos_perm;
  for (int q = 0; q < q_grp.order(); ++q) {
    std::vector<int> im(orbit_.size());
    for (size_t i = 0; i < orbit_.size(); ++i) im[i] = pos_of[sigma_[q](orbit_[i])];
    pos_perm.push_back(Perm(std::move(im)));
  }
  std::map<std::string, Perm> gens;
  int gen_count = 0;
  for (int q = 0; q < q_grp.order(); ++q)
    if (!pos_perm[q].is_identity()) {
      bool known = false;
      for (const auto& [lbl, p] : gens)
        if (p == pos_perm[q]) known = true;
      if (!known) gens.emplace("s" + std::to_string(gen_count++), pos_perm[q]);
    }
  p_ = FiniteGroup::closure(gens, static_cast<int>(orbit_.size()));
  sigma_to_p_.resize(q_grp.order());
  for (int q = 0; q < q_grp.order(); ++q) {
    sigma_to_p_[q] = p_.index_of_perm(pos_perm[q]);
    if (sigma_to_p_[q] < 0) throw std::logic_error("WreathEmbedding: P misses a permutation");
  }

  // Reachability of every position from the base point.
  reps_.assign(orbit_.size(), -1);
  for (int q = 0; q < q_grp.order(); ++q) {
    int pos = pos_perm[q](0);
    if (reps_[pos] < 0) reps_[pos] = q;
  }
  for (size_t i = 0; i < orbit_.size(); ++i)
    if (reps_[i] < 0)
      throw std::invalid_argument("WreathEmbedding: orbit is not a single conjugation orbit");
  if (reps_[0] != 0) throw std::logic_error("WreathEmbedding: identity must fix the base point");

  // Stabilizer of the base point and the coordinate group J.
  std::vector<int> stab_elts;
  for (int q = 0; q < q_grp.order(); ++q)
    if (pos_perm[q](0) == 0) stab_elts.push_back(q);
  const GroupStructure& k1 = factor_structure(*ex->base, orbit_[0]);
  trivial_stab_ = stab_elts.size() == 1;
  if (trivial_stab_) {
    j_ = k1;
  } else {
    stab_ = subgroup_of(q_grp, stab_elts);
    GroupStructure::Extension jex;
    jex.base = Box<GroupStructure>(k1);
    jex.quotient = stab_.group;
    jex.action.resize(stab_.group.order());
    for (int s = 0; s < stab_.group.order(); ++s) {
      int parent = stab_.to_parent[s];
      const AutPtr& a = ex->action[parent];
      if (!a) continue;
      if (ex->base->product()) {
        const auto& pa = std::get<Automorphism::ProductAut>(a->v);
        jex.action[s] = pa.components[orbit_[0]];
      } else {
        jex.action[s] = a;
      }
    }
    jex.cocycle.assign(stab_.group.order(),
                       std::vector<GroupValue>(stab_.group.order(), gid(k1)));
    for (int s1 = 0; s1 < stab_.group.order(); ++s1)
      for (int s2 = 0; s2 < stab_.group.order(); ++s2)
        jex.cocycle[s1][s2] = factor_component(
            ex->cocycle[stab_.to_parent[s1]][stab_.to_parent[s2]], orbit_[0]);
    j_ = GroupStructure(GroupStructure::Variant(std::move(jex)));
    validate_structure(j_);
  }
  w_ = build_wreath(j_, p_);
}

GroupValue WreathEmbedding::embed(const GroupValue& g) const {
  const auto& e = std::get<ExtElt>(g.v);
  const int q = e.top;
  const int top = sigma_to_p_[q];
  const Perm pi_inv = p_.perm_of(top).inverse();
  ValueTuple coords;
  for (size_t i = 0; i < orbit_.size(); ++i) {
    const int j = pi_inv(static_cast<int>(i));
    GroupValue h = gmul(source_, ginv(source_, transversal(reps_[i])),
                        gmul(source_, g, transversal(reps_[j])));
    coords.push_back(nu(h));
  }
  return GroupValue::ext(GroupValue::tuple(std::move(coords)), top);
}

RecSet WreathEmbedding::image() const {
  const auto& ex = *source_.extension();
  const GroupStructure& k1 = factor_structure(*ex.base, orbit_[0]);
  std::vector<RecBox> k1_full = full_boxes(k1);
  RecSet out;
  for (int q = 0; q < ex.quotient.order(); ++q) {
    const int top = sigma_to_p_[q];
    const Perm pi_inv = p_.perm_of(top).inverse();
    // Per position: the Stab part is pinned by q, the K1 part is free.
    std::vector<std::vector<RecBox>> per_pos(orbit_.size());
    for (size_t i = 0; i < orbit_.size(); ++i) {
      const int j = pi_inv(static_cast<int>(i));
      const int s = ex.quotient.mul(ex.quotient.inv(reps_[i]), ex.quotient.mul(q, reps_[j]));
      for (const auto& fb : k1_full) {
        if (trivial_stab_) {
          per_pos[i].push_back(fb);
        } else {
          per_pos[i].push_back(
              RecBox(RecBox::ExtBox{stab_.from_parent.at(s), Box<RecBox>(fb)}));
        }
      }
    }
    // Cartesian product over positions (multiple boxes only for nested
    // extension coordinate groups).
    std::vector<RecBox::TupleBox> acc{RecBox::TupleBox{}};
    for (const auto& options : per_pos) {
      std::vector<RecBox::TupleBox> next;
      for (const auto& prefix : acc)
        for (const auto& b : options) {
          RecBox::TupleBox t = prefix;
          t.components.push_back(b);
          next.push_back(std::move(t));
        }
      acc = std::move(next);
    }
    for (auto& t : acc)
      out.boxes.push_back(RecBox(RecBox::ExtBox{top, Box<RecBox>(RecBox(std::move(t)))}));
  }
  return out;
}

RecBox WreathEmbedding::push_box(const RecBox& box) const {
  const auto& ex = *source_.extension();
  const auto& eb = std::get<RecBox::ExtBox>(box.v);
  const int q0 = eb.top;
  const int top = sigma_to_p_[q0];
  const Perm pi_inv = p_.perm_of(top).inverse();
  const GroupValue t_q0 = embed(transversal(q0));
  const auto& t_coords = std::get<ValueTuple>(std::get<ExtElt>(t_q0.v).base->v);
  const GroupStructure& k1 = factor_structure(*ex.base, orbit_[0]);

  RecBox::TupleBox tuple_box;
  for (size_t i = 0; i < orbit_.size(); ++i) {
    // Coordinate i of mu(k t_{q0}) is psi_i(k_{orbit[i]}) * w_i(q0) with
    // psi_i the inverse of the rep component into position i.
    const RecBox* comp;
    if (ex.base->product()) {
      comp = &std::get<RecBox::TupleBox>(eb.base->v).components[orbit_[i]];
    } else {
      comp = &*eb.base;
    }
    AutPtr psi = rep_component(static_cast<int>(i));
    RecBox k1_box = box_image(k1, psi ? inverse_aut(psi, k1) : nullptr, *comp);
    RecBox j_box = trivial_stab_
                       ? std::move(k1_box)
                       : RecBox(RecBox::ExtBox{0, Box<RecBox>(std::move(k1_box))});
    tuple_box.components.push_back(box_translate_right(j_, j_box, t_coords[i]));
  }
  return RecBox(RecBox::ExtBox{top, Box<RecBox>(RecBox(std::move(tuple_box)))});
}

int WreathEmbedding::recover_quotient(const GroupValue& w_value) const {
  const auto& ecoord = std::get<ExtElt>(w_value.v);
  const Perm pi_inv = p_.perm_of(ecoord.top).inverse();
  const auto& coords = std::get<ValueTuple>(ecoord.base->v);
  const GroupValue& c0 = coords[0];
  int s_parent;
  if (trivial_stab_) {
    s_parent = 0;
  } else {
    s_parent = stab_.to_parent[std::get<ExtElt>(c0.v).top];
  }
  const int j = pi_inv(0);
  const FiniteGroup& q_grp = source_.extension()->quotient;
  // s_0(q) = q * r_j with r_0 = identity, so q = s_0 * r_j^{-1}.
  return q_grp.mul(s_parent, q_grp.inv(reps_[j]));
}

void WreathEmbedding::recover_base(const GroupValue& w_value, int q,
                                   std::vector<GroupValue>& base_parts) const {
  // mu(k) = mu(g) * mu(t_q)^{-1}; coordinate i then carries psi_i(k_i).
  GroupValue mu_k = gmul(w_, w_value, ginv(w_, embed(transversal(q))));
  const auto& e = std::get<ExtElt>(mu_k.v);
  if (e.top != 0) throw std::logic_error("recover_base: residual permutation part");
  const auto& coords = std::get<ValueTuple>(e.base->v);
  for (size_t i = 0; i < orbit_.size(); ++i) {
    GroupValue b;
    if (trivial_stab_) {
      b = coords[i];
    } else {
      const auto& je = std::get<ExtElt>(coords[i].v);
      if (je.top != 0) throw std::logic_error("recover_base: residual stabilizer part");
      b = *je.base;
    }
    base_parts[orbit_[i]] = apply_aut(rep_component(static_cast<int>(i)),
                                      factor_structure(*source_.extension()->base, orbit_[i]), b);
  }
}

}  // namespace groupeq
