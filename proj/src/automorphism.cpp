#include "groupeq/automorphism.hpp"

#include "groupeq/structure.hpp"

#include <stdexcept>

namespace groupeq {

AutPtr Automorphism::finite_map(std::vector<int> images) {
  return std::make_shared<Automorphism>(Variant(FiniteMap{std::move(images)}));
}
AutPtr Automorphism::matrix(IntMatrix m) {
  return std::make_shared<Automorphism>(Variant(MatrixAut{std::move(m)}));
}
AutPtr Automorphism::free_subst(std::vector<FreeWord> images,
                                std::vector<FreeWord> inverse_images) {
  return std::make_shared<Automorphism>(
      Variant(FreeSubst{std::move(images), std::move(inverse_images)}));
}
AutPtr Automorphism::product(Perm sigma, std::vector<AutPtr> components) {
  return std::make_shared<Automorphism>(Variant(ProductAut{std::move(sigma), std::move(components)}));
}

GroupValue apply_aut(const AutPtr& aut, const GroupStructure& g, const GroupValue& x) {
  if (!aut) return x;
  if (const auto* fm = std::get_if<Automorphism::FiniteMap>(&aut->v)) {
    int idx = std::get<FiniteElt>(x.v).index;
    if (idx < 0 || idx >= static_cast<int>(fm->images.size()))
      throw std::invalid_argument("apply_aut: element out of range");
    return GroupValue::finite(fm->images[idx]);
  }
  if (const auto* ma = std::get_if<Automorphism::MatrixAut>(&aut->v))
    return GroupValue::vector(ma->m * std::get<IntVec>(x.v));
  if (const auto* fs = std::get_if<Automorphism::FreeSubst>(&aut->v))
    return GroupValue::word(substitute(std::get<FreeWord>(x.v), fs->images));
  const auto& pa = std::get<Automorphism::ProductAut>(aut->v);
  const auto& parts = std::get<ValueTuple>(x.v);
  const auto& factors = g.product()->factors;
  Perm sigma_inv = pa.sigma.inverse();
  ValueTuple out(parts.size());
  for (size_t i = 0; i < parts.size(); ++i) {
    size_t src = static_cast<size_t>(sigma_inv(static_cast<int>(i)));
    out[i] = apply_aut(pa.components[i], factors[i], parts[src]);
  }
  return GroupValue::tuple(std::move(out));
}

AutPtr compose_auts(const AutPtr& f, const AutPtr& g, const GroupStructure& target) {
  if (!f) return g;
  if (!g) return f;
  if (const auto* fa = std::get_if<Automorphism::FiniteMap>(&f->v)) {
    const auto& ga = std::get<Automorphism::FiniteMap>(g->v);
    std::vector<int> images(ga.images.size());
    for (size_t i = 0; i < images.size(); ++i) images[i] = fa->images[ga.images[i]];
    return Automorphism::finite_map(std::move(images));
  }
  if (const auto* fa = std::get_if<Automorphism::MatrixAut>(&f->v)) {
    const auto& ga = std::get<Automorphism::MatrixAut>(g->v);
    return Automorphism::matrix(fa->m * ga.m);
  }
  if (const auto* fa = std::get_if<Automorphism::FreeSubst>(&f->v)) {
    const auto& ga = std::get<Automorphism::FreeSubst>(g->v);
    std::vector<FreeWord> images, inv_images;
    for (const auto& w : ga.images) images.push_back(substitute(w, fa->images));
    for (const auto& w : fa->inverse_images)
      inv_images.push_back(substitute(w, ga.inverse_images));
    return Automorphism::free_subst(std::move(images), std::move(inv_images));
  }
  const auto& fa = std::get<Automorphism::ProductAut>(f->v);
  const auto& ga = std::get<Automorphism::ProductAut>(g->v);
  const auto& factors = target.product()->factors;
  Perm sigma = fa.sigma * ga.sigma;
  std::vector<AutPtr> comps(factors.size());
  Perm f_sigma_inv = fa.sigma.inverse();
  for (size_t i = 0; i < factors.size(); ++i) {
    size_t mid = static_cast<size_t>(f_sigma_inv(static_cast<int>(i)));
    comps[i] = compose_auts(fa.components[i], ga.components[mid], factors[i]);
  }
  return Automorphism::product(std::move(sigma), std::move(comps));
}

AutPtr inverse_aut(const AutPtr& aut, const GroupStructure& g) {
  if (!aut) return nullptr;
  if (const auto* fm = std::get_if<Automorphism::FiniteMap>(&aut->v)) {
    std::vector<int> inv(fm->images.size());
    for (size_t i = 0; i < fm->images.size(); ++i) inv[fm->images[i]] = static_cast<int>(i);
    return Automorphism::finite_map(std::move(inv));
  }
  if (const auto* ma = std::get_if<Automorphism::MatrixAut>(&aut->v)) {
    auto inv = int_inverse(ma->m);
    if (!inv) throw std::invalid_argument("inverse_aut: matrix not unimodular");
    return Automorphism::matrix(std::move(*inv));
  }
  if (const auto* fs = std::get_if<Automorphism::FreeSubst>(&aut->v))
    return Automorphism::free_subst(fs->inverse_images, fs->images);
  const auto& pa = std::get<Automorphism::ProductAut>(aut->v);
  const auto& factors = g.product()->factors;
  Perm sigma_inv = pa.sigma.inverse();
  std::vector<AutPtr> comps(factors.size());
  for (size_t j = 0; j < factors.size(); ++j) {
    size_t i = static_cast<size_t>(pa.sigma(static_cast<int>(j)));
    comps[j] = inverse_aut(pa.components[i], factors[i]);
  }
  return Automorphism::product(std::move(sigma_inv), std::move(comps));
}

void validate_automorphism(const AutPtr& aut, const GroupStructure& g) {
  if (!aut) return;
  if (const auto* fin = g.finite()) {
    const auto* fm = std::get_if<Automorphism::FiniteMap>(&aut->v);
    if (!fm) throw std::invalid_argument("automorphism: finite group needs an element map");
    const int n = fin->group.order();
    if (static_cast<int>(fm->images.size()) != n)
      throw std::invalid_argument("automorphism: element map size mismatch");
    std::vector<bool> seen(n, false);
    for (int v : fm->images) {
      if (v < 0 || v >= n || seen[v])
        throw std::invalid_argument("automorphism: element map is not a bijection");
      seen[v] = true;
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (fm->images[fin->group.mul(a, b)] !=
            fin->group.mul(fm->images[a], fm->images[b]))
          throw std::invalid_argument("automorphism: element map is not a homomorphism");
    return;
  }
  if (const auto* ab = g.free_abelian()) {
    const auto* ma = std::get_if<Automorphism::MatrixAut>(&aut->v);
    if (!ma) throw std::invalid_argument("automorphism: free abelian group needs a matrix");
    if (ma->m.rows() != ab->rank || ma->m.cols() != ab->rank)
      throw std::invalid_argument("automorphism: matrix size must equal the rank");
    if (!is_unimodular(ma->m))
      throw std::invalid_argument("automorphism: matrix is not unimodular");
    return;
  }
  if (const auto* fr = g.free()) {
    const auto* fs = std::get_if<Automorphism::FreeSubst>(&aut->v);
    if (!fs) throw std::invalid_argument("automorphism: free group needs generator images");
    if (static_cast<int>(fs->images.size()) != fr->rank ||
        static_cast<int>(fs->inverse_images.size()) != fr->rank)
      throw std::invalid_argument("automorphism: one image per generator required");
    for (const auto& w : fs->images)
      if (w.max_generator() > fr->rank)
        throw std::invalid_argument("automorphism: image uses unknown generator");
    for (const auto& w : fs->inverse_images)
      if (w.max_generator() > fr->rank)
        throw std::invalid_argument("automorphism: inverse image uses unknown generator");
    for (int i = 0; i < fr->rank; ++i) {
      FreeWord gen = FreeWord::generator(i + 1);
      if (substitute(fs->inverse_images[i], fs->images) != gen ||
          substitute(fs->images[i], fs->inverse_images) != gen)
        throw std::invalid_argument(
            "automorphism: generator substitution is not an automorphism "
            "(two-sided inverse check failed)");
    }
    return;
  }
  if (const auto* pr = g.product()) {
    const auto* pa = std::get_if<Automorphism::ProductAut>(&aut->v);
    if (!pa) throw std::invalid_argument("automorphism: product group needs a component form");
    const size_t n = pr->factors.size();
    if (pa->sigma.degree() != static_cast<int>(n) || pa->components.size() != n)
      throw std::invalid_argument("automorphism: component count mismatch");
    for (size_t i = 0; i < n; ++i) {
      size_t src = static_cast<size_t>(pa->sigma.inverse()(static_cast<int>(i)));
      if (src != i && !structure_equal(pr->factors[src], pr->factors[i]))
        throw std::invalid_argument(
            "automorphism: permuted factors are not structurally equal");
      validate_automorphism(pa->components[i], pr->factors[i]);
    }
    return;
  }
  // Non-identity automorphisms of extension structures are not supported;
  // the identity is the null pointer and was handled above.
  throw std::invalid_argument(
      "automorphism: only the identity is supported on extension structures");
}

bool aut_equal(const AutPtr& a, const AutPtr& b) {
  if (!a || !b) return !a && !b;
  if (a->v.index() != b->v.index()) return false;
  if (const auto* fa = std::get_if<Automorphism::FiniteMap>(&a->v))
    return fa->images == std::get<Automorphism::FiniteMap>(b->v).images;
  if (const auto* ma = std::get_if<Automorphism::MatrixAut>(&a->v))
    return mat_eq(ma->m, std::get<Automorphism::MatrixAut>(b->v).m);
  if (const auto* fs = std::get_if<Automorphism::FreeSubst>(&a->v)) {
    const auto& o = std::get<Automorphism::FreeSubst>(b->v);
    return fs->images == o.images && fs->inverse_images == o.inverse_images;
  }
  const auto& pa = std::get<Automorphism::ProductAut>(a->v);
  const auto& pb = std::get<Automorphism::ProductAut>(b->v);
  if (pa.sigma != pb.sigma || pa.components.size() != pb.components.size()) return false;
  for (size_t i = 0; i < pa.components.size(); ++i)
    if (!aut_equal(pa.components[i], pb.components[i])) return false;
  return true;
}

}  // namespace groupeq
