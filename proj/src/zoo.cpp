#include "groupeq/zoo.hpp"

#include <stdexcept>

namespace groupeq {

GroupEnv make_free_abelian(int r) {
  if (r < 0) throw std::invalid_argument("make_free_abelian: rank must be >= 0");
  GroupEnv env;
  env.name = "Z^" + std::to_string(r);
  env.structure = GroupStructure(GroupStructure::FreeAbelian{r});
  for (int i = 0; i < r; ++i) {
    IntVec e = IntVec::Zero(r);
    e[i] = 1;
    env.labels.emplace("e" + std::to_string(i + 1), GroupValue::vector(std::move(e)));
  }
  validate_structure(env.structure);
  return env;
}

GroupEnv make_finite_from_perms(const std::map<std::string, Perm>& generators, int degree) {
  GroupEnv env;
  FiniteGroup g = FiniteGroup::closure(generators, degree);
  env.name = "finite_" + std::to_string(g.order());
  for (const auto& [label, idx] : g.generators()) env.labels.emplace(label, GroupValue::finite(idx));
  env.structure = GroupStructure(GroupStructure::Finite{std::move(g)});
  validate_structure(env.structure);
  return env;
}

namespace {

std::vector<std::string> default_gen_names(int rank) {
  std::vector<std::string> names;
  for (int i = 0; i < rank; ++i) {
    if (rank <= 26)
      names.push_back(std::string(1, static_cast<char>('a' + i)));
    else
      names.push_back("g" + std::to_string(i + 1));
  }
  return names;
}

FiniteGroup cyclic_perm_group(int k) {
  if (k == 1) return FiniteGroup::closure({}, 1);
  std::vector<int> cycle(k);
  for (int i = 0; i < k; ++i) cycle[i] = (i + 1) % k;
  return FiniteGroup::closure({{"t", Perm(cycle)}}, k);
}

}  // namespace

GroupEnv make_free(int rank, int bound) {
  GroupEnv env;
  env.name = "F_" + std::to_string(rank);
  GroupStructure::Free fr{rank, bound, default_gen_names(rank)};
  for (int i = 0; i < rank; ++i)
    env.labels.emplace(fr.gen_names[i], GroupValue::word(FreeWord::generator(i + 1)));
  env.structure = GroupStructure(GroupStructure::Variant(std::move(fr)));
  validate_structure(env.structure);
  return env;
}

GroupEnv make_dihedral_infinite() {
  GroupEnv env;
  env.name = "Dinf";
  GroupStructure::Extension ex;
  ex.base = Box<GroupStructure>(GroupStructure(GroupStructure::FreeAbelian{1}));
  ex.quotient = cyclic_perm_group(2);
  ex.action.resize(2);
  IntMatrix neg(1, 1);
  neg(0, 0) = -1;
  ex.action[1] = Automorphism::matrix(std::move(neg));
  GroupValue zero = gid(*ex.base);
  ex.cocycle.assign(2, std::vector<GroupValue>(2, zero));
  env.structure = GroupStructure(GroupStructure::Variant(std::move(ex)));
  IntVec one(1);
  one[0] = 1;
  env.labels.emplace("z", GroupValue::ext(GroupValue::vector(one), 0));
  env.labels.emplace("t", GroupValue::ext(GroupValue::vector(IntVec::Zero(1)), 1));
  validate_structure(env.structure);
  return env;
}

GroupEnv make_dihedral_artin_even(int m, int free_bound) {
  if (m < 2 || m % 2 != 0)
    throw std::invalid_argument("make_dihedral_artin_even: m must be even and >= 2");
  const int k = m / 2;
  GroupEnv env;
  env.name = "DA" + std::to_string(m);

  GroupStructure::Product kp;
  kp.factors.push_back(GroupStructure(GroupStructure::FreeAbelian{1}));
  kp.factors.push_back(
      GroupStructure(GroupStructure::Free{k, free_bound, default_gen_names(k)}));
  GroupStructure base{GroupStructure::Variant(std::move(kp))};

  FiniteGroup q = cyclic_perm_group(k);
  // Element index of t^i in the closure of the k-cycle.
  std::vector<int> power_index(k, 0);
  if (k > 1) {
    int t_idx = q.generators().at("t");
    for (int i = 1; i < k; ++i) power_index[i] = q.pow(t_idx, i);
  }
  std::vector<int> power_of(k, 0);
  for (int i = 0; i < k; ++i) power_of[power_index[i]] = i;

  GroupStructure::Extension ex;
  ex.base = Box<GroupStructure>(base);
  ex.quotient = q;
  ex.action.resize(k);
  for (int i = 1; i < k; ++i) {
    // t^i fixes the Z part and shifts the free generators by i.
    std::vector<FreeWord> images(k), inverse_images(k);
    for (int j = 0; j < k; ++j) {
      images[j] = FreeWord::generator((j + i) % k + 1);
      inverse_images[j] = FreeWord::generator((j - i % k + k) % k + 1);
    }
    std::vector<AutPtr> comps{nullptr,
                              Automorphism::free_subst(std::move(images), std::move(inverse_images))};
    ex.action[power_index[i]] = Automorphism::product(Perm::identity(2), std::move(comps));
  }
  // t^i t^j = z^{(i+j) div k} t^{(i+j) mod k}; z is central, the cocycle
  // lands in the Z part.
  IntVec one(1);
  one[0] = 1;
  GroupValue z_in_base =
      GroupValue::tuple({GroupValue::vector(one), GroupValue::word(FreeWord())});
  GroupValue id_base = gid(base);
  ex.cocycle.assign(k, std::vector<GroupValue>(k, id_base));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i + j >= k) ex.cocycle[power_index[i]][power_index[j]] = z_in_base;

  env.structure = GroupStructure(GroupStructure::Variant(std::move(ex)));
  validate_structure(env.structure);

  auto in_group = [&](GroupValue base_val, int top) {
    return GroupValue::ext(std::move(base_val), top);
  };
  env.labels.emplace("z", in_group(z_in_base, 0));
  for (int j = 0; j < k; ++j)
    env.labels.emplace(
        "a" + std::to_string(j + 1),
        in_group(GroupValue::tuple(
                     {GroupValue::vector(IntVec::Zero(1)), GroupValue::word(FreeWord::generator(j + 1))}),
                 0));
  env.labels.emplace("y1", env.labels.at("a1"));
  if (k == 1)
    env.labels.emplace("y2", env.labels.at("z"));
  else
    env.labels.emplace("y2", in_group(id_base, power_index[1]));
  return env;
}

GroupEnv make_swap_product(const GroupStructure& h) {
  GroupEnv env;
  env.name = "swap_product";
  GroupStructure::Product pp;
  pp.factors.assign(2, h);
  GroupStructure base{GroupStructure::Variant(std::move(pp))};

  GroupStructure::Extension ex;
  ex.base = Box<GroupStructure>(base);
  ex.quotient = cyclic_perm_group(2);
  ex.action.resize(2);
  ex.action[1] = Automorphism::product(Perm({1, 0}), std::vector<AutPtr>(2));
  ex.cocycle.assign(2, std::vector<GroupValue>(2, gid(base)));
  env.structure = GroupStructure(GroupStructure::Variant(std::move(ex)));
  env.labels.emplace("s", GroupValue::ext(gid(base), 1));
  validate_structure(env.structure);
  return env;
}

}  // namespace groupeq
