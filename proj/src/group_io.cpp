#include "groupeq/group_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <stdexcept>

namespace groupeq {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument("group file: " + msg); }

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
  if (j.is_string()) return Int(j.get<std::string>());
  fail("expected an integer (number or decimal string)");
}

json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

IntVec vec_from_json(const json& j, int rank) {
  if (!j.is_array() || static_cast<int>(j.size()) != rank) fail("vector of wrong length");
  IntVec out(rank);
  for (int i = 0; i < rank; ++i) out[i] = int_from_json(j[i]);
  return out;
}

json vec_to_json(const IntVec& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(int_to_json(v[i]));
  return out;
}

IntMatrix mat_from_json(const json& j) {
  if (!j.is_array() || j.empty()) fail("matrix must be a nonempty array of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j[0].size());
  IntMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(j[r].size()) != cols) fail("ragged matrix");
    for (int c = 0; c < cols; ++c) m(r, c) = int_from_json(j[r][c]);
  }
  return m;
}

json mat_to_json(const IntMatrix& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(int_to_json(m(r, c)));
    out.push_back(row);
  }
  return out;
}

FiniteGroup finite_group_from_json(const json& j) {
  if (!j.contains("degree") || !j.contains("generators"))
    fail("permutation group needs 'degree' and 'generators'");
  const int degree = j.at("degree").get<int>();
  std::map<std::string, Perm> gens;
  for (const auto& [label, images] : j.at("generators").items()) {
    std::vector<int> im = images.get<std::vector<int>>();
    if (static_cast<int>(im.size()) != degree) fail("generator '" + label + "' has wrong degree");
    gens.emplace(label, Perm::from_one_based(im));
  }
  return FiniteGroup::closure(gens, degree);
}

json finite_group_to_json(const FiniteGroup& g) {
  if (!g.has_perms()) fail("only permutation-generated finite groups can be saved");
  json gens = json::object();
  for (const auto& [label, idx] : g.generators())
    gens[label] = g.perm_of(idx).one_based_images();
  return json{{"degree", g.degree()}, {"generators", gens}};
}

int element_from_json(const FiniteGroup& g, const json& j) {
  if (j.is_number_integer()) {
    int idx = j.get<int>();
    if (idx < 0 || idx >= g.order()) fail("element index out of range");
    return idx;
  }
  if (j.is_string()) {
    int idx = g.index_of_name(j.get<std::string>());
    if (idx < 0) fail("unknown element name '" + j.get<std::string>() + "'");
    return idx;
  }
  fail("expected an element (index or name)");
}

}  // namespace

json value_to_json(const GroupStructure& g, const GroupValue& v) {
  if (const auto* fin = g.finite())
    return json(fin->group.name_of(std::get<FiniteElt>(v.v).index));
  if (g.free_abelian()) return vec_to_json(std::get<IntVec>(v.v));
  if (const auto* fr = g.free())
    return json(word_to_string(std::get<FreeWord>(v.v), fr->gen_names));
  if (const auto* pr = g.product()) {
    const auto& parts = std::get<ValueTuple>(v.v);
    json out = json::array();
    for (size_t i = 0; i < parts.size(); ++i)
      out.push_back(value_to_json(pr->factors[i], parts[i]));
    return out;
  }
  const auto& ex = *g.extension();
  const auto& e = std::get<ExtElt>(v.v);
  return json{{"k", value_to_json(*ex.base, *e.base)}, {"q", ex.quotient.name_of(e.top)}};
}

GroupValue value_from_json(const GroupStructure& g, const json& j) {
  if (const auto* fin = g.finite())
    return GroupValue::finite(element_from_json(fin->group, j));
  if (const auto* ab = g.free_abelian()) return GroupValue::vector(vec_from_json(j, ab->rank));
  if (const auto* fr = g.free()) {
    if (!j.is_string()) fail("free group element must be a word string");
    return GroupValue::word(word_from_string(j.get<std::string>(), fr->gen_names));
  }
  if (const auto* pr = g.product()) {
    if (!j.is_array() || j.size() != pr->factors.size()) fail("tuple of wrong length");
    ValueTuple parts;
    for (size_t i = 0; i < pr->factors.size(); ++i)
      parts.push_back(value_from_json(pr->factors[i], j[i]));
    return GroupValue::tuple(std::move(parts));
  }
  const auto& ex = *g.extension();
  if (!j.is_object() || !j.contains("k") || !j.contains("q"))
    fail("extension element must be {\"k\":..,\"q\":..}");
  return GroupValue::ext(value_from_json(*ex.base, j.at("k")),
                         element_from_json(ex.quotient, j.at("q")));
}

json value_to_json_labeled(const GroupEnv& env, const GroupValue& v) {
  for (const auto& [label, lv] : env.labels)
    if (value_eq(lv, v)) return json(label);
  return value_to_json(env.structure, v);
}

json aut_to_json(const GroupStructure& g, const AutPtr& a) {
  if (!a) return json{{"type", "identity"}};
  if (const auto* fm = std::get_if<Automorphism::FiniteMap>(&a->v)) {
    json images = json::array();
    for (int img : fm->images) images.push_back(g.finite()->group.name_of(img));
    return json{{"type", "element_map"}, {"images", images}};
  }
  if (const auto* ma = std::get_if<Automorphism::MatrixAut>(&a->v))
    return json{{"type", "matrix"}, {"matrix", mat_to_json(ma->m)}};
  if (const auto* fs = std::get_if<Automorphism::FreeSubst>(&a->v)) {
    const auto& names = g.free()->gen_names;
    json images = json::array(), inv = json::array();
    for (const auto& w : fs->images) images.push_back(word_to_string(w, names));
    for (const auto& w : fs->inverse_images) inv.push_back(word_to_string(w, names));
    return json{{"type", "free_subst"}, {"images", images}, {"inverse_images", inv}};
  }
  const auto& pa = std::get<Automorphism::ProductAut>(a->v);
  json comps = json::array();
  const auto& factors = g.product()->factors;
  for (size_t i = 0; i < pa.components.size(); ++i)
    comps.push_back(aut_to_json(factors[i], pa.components[i]));
  return json{{"type", "product"}, {"permute", pa.sigma.one_based_images()}, {"components", comps}};
}

AutPtr aut_from_json(const GroupStructure& g, const json& j) {
  if (j.is_null()) return nullptr;
  const std::string type = j.value("type", "");
  if (type == "identity") return nullptr;
  if (type == "element_map") {
    const auto* fin = g.finite();
    if (!fin) fail("element_map automorphism on a non-finite group");
    std::vector<int> images;
    for (const auto& e : j.at("images")) images.push_back(element_from_json(fin->group, e));
    return Automorphism::finite_map(std::move(images));
  }
  if (type == "matrix") return Automorphism::matrix(mat_from_json(j.at("matrix")));
  if (type == "free_subst") {
    const auto* fr = g.free();
    if (!fr) fail("free_subst automorphism on a non-free group");
    std::vector<FreeWord> images, inv;
    for (const auto& w : j.at("images"))
      images.push_back(word_from_string(w.get<std::string>(), fr->gen_names));
    for (const auto& w : j.at("inverse_images"))
      inv.push_back(word_from_string(w.get<std::string>(), fr->gen_names));
    return Automorphism::free_subst(std::move(images), std::move(inv));
  }
  if (type == "product") {
    const auto* pr = g.product();
    if (!pr) fail("product automorphism on a non-product group");
    Perm sigma = Perm::from_one_based(j.at("permute").get<std::vector<int>>());
    std::vector<AutPtr> comps;
    const auto& jc = j.at("components");
    if (jc.size() != pr->factors.size()) fail("component count mismatch in automorphism");
    for (size_t i = 0; i < pr->factors.size(); ++i)
      comps.push_back(aut_from_json(pr->factors[i], jc[i]));
    return Automorphism::product(std::move(sigma), std::move(comps));
  }
  fail("unknown automorphism type '" + type + "'");
}

json recset_to_json(const GroupStructure& g, const RecSet& set) {
  json boxes = json::array();
  for (const auto& box : set.boxes) {
    if (const auto* fs = std::get_if<RecBox::FiniteSubset>(&box.v)) {
      json elems = json::array();
      for (int e : fs->elements) elems.push_back(g.finite()->group.name_of(e));
      boxes.push_back(json{{"kind", "subset"}, {"elements", elems}});
      continue;
    }
    if (const auto* cb = std::get_if<CongruenceBox>(&box.v)) {
      json lattice = json::array();
      for (Eigen::Index c = 0; c < cb->lattice.cols(); ++c)
        lattice.push_back(vec_to_json(IntVec(cb->lattice.col(c))));
      boxes.push_back(
          json{{"kind", "congruence"}, {"residue", vec_to_json(cb->residue)}, {"lattice", lattice}});
      continue;
    }
    if (const auto* fq = std::get_if<RecBox::FreeQuot>(&box.v)) {
      json targets = json::array(), allowed = json::array();
      for (int t : fq->targets) targets.push_back(fq->quot.name_of(t));
      for (int a : fq->allowed) allowed.push_back(fq->quot.name_of(a));
      boxes.push_back(json{{"kind", "quotient"},
                           {"quotient", finite_group_to_json(fq->quot)},
                           {"targets", targets},
                           {"allowed", allowed}});
      continue;
    }
    if (const auto* tb = std::get_if<RecBox::TupleBox>(&box.v)) {
      json comps = json::array();
      const auto& factors = g.product()->factors;
      for (size_t i = 0; i < tb->components.size(); ++i)
        comps.push_back(recset_to_json(factors[i], RecSet{{tb->components[i]}})["boxes"][0]);
      boxes.push_back(json{{"kind", "tuple"}, {"components", comps}});
      continue;
    }
    const auto& eb = std::get<RecBox::ExtBox>(box.v);
    const auto& ex = *g.extension();
    boxes.push_back(
        json{{"kind", "ext"},
             {"q", ex.quotient.name_of(eb.top)},
             {"base", recset_to_json(*ex.base, RecSet{{*eb.base}})["boxes"][0]}});
  }
  return json{{"boxes", boxes}};
}

namespace {

RecBox recbox_from_json(const GroupStructure& g, const json& j) {
  const std::string kind = j.value("kind", "");
  if (kind == "subset") {
    const auto* fin = g.finite();
    if (!fin) fail("subset box on a non-finite group");
    RecBox::FiniteSubset out;
    for (const auto& e : j.at("elements")) out.elements.push_back(element_from_json(fin->group, e));
    std::sort(out.elements.begin(), out.elements.end());
    return RecBox(std::move(out));
  }
  if (kind == "congruence") {
    const auto* ab = g.free_abelian();
    if (!ab) fail("congruence box on a non-abelian group");
    CongruenceBox out;
    out.residue = vec_from_json(j.at("residue"), ab->rank);
    const auto& lat = j.at("lattice");
    if (static_cast<int>(lat.size()) != ab->rank) fail("congruence lattice must be full rank");
    out.lattice = IntMatrix(ab->rank, ab->rank);
    for (int c = 0; c < ab->rank; ++c) out.lattice.col(c) = vec_from_json(lat[c], ab->rank);
    return RecBox(std::move(out));
  }
  if (kind == "quotient") {
    if (!g.free()) fail("quotient box on a non-free group");
    RecBox::FreeQuot out;
    out.quot = finite_group_from_json(j.at("quotient"));
    for (const auto& t : j.at("targets")) out.targets.push_back(element_from_json(out.quot, t));
    for (const auto& a : j.at("allowed")) out.allowed.push_back(element_from_json(out.quot, a));
    std::sort(out.allowed.begin(), out.allowed.end());
    return RecBox(std::move(out));
  }
  if (kind == "tuple") {
    const auto* pr = g.product();
    if (!pr) fail("tuple box on a non-product group");
    RecBox::TupleBox out;
    const auto& comps = j.at("components");
    if (comps.size() != pr->factors.size()) fail("tuple box component count mismatch");
    for (size_t i = 0; i < pr->factors.size(); ++i)
      out.components.push_back(recbox_from_json(pr->factors[i], comps[i]));
    return RecBox(std::move(out));
  }
  if (kind == "ext") {
    const auto* ex = g.extension();
    if (!ex) fail("ext box on a non-extension group");
    return RecBox(RecBox::ExtBox{element_from_json(ex->quotient, j.at("q")),
                                 Box<RecBox>(recbox_from_json(*ex->base, j.at("base")))});
  }
  fail("unknown box kind '" + kind + "'");
}

GroupStructure structure_from_json(const json& j) {
  const std::string kind = j.value("kind", "");
  GroupStructure out;
  if (kind == "finite") {
    out = GroupStructure(GroupStructure::Finite{finite_group_from_json(j)});
  } else if (kind == "free_abelian") {
    out = GroupStructure(GroupStructure::FreeAbelian{j.at("rank").get<int>()});
  } else if (kind == "free") {
    GroupStructure::Free fr;
    fr.rank = j.at("rank").get<int>();
    fr.bound = j.at("bound").get<int>();
    fr.gen_names = j.at("generators").get<std::vector<std::string>>();
    out = GroupStructure(GroupStructure::Variant(std::move(fr)));
  } else if (kind == "product") {
    GroupStructure::Product pr;
    for (const auto& f : j.at("factors")) pr.factors.push_back(structure_from_json(f));
    out = GroupStructure(GroupStructure::Variant(std::move(pr)));
  } else if (kind == "extension") {
    GroupStructure::Extension ex;
    ex.base = Box<GroupStructure>(structure_from_json(j.at("base")));
    ex.quotient = finite_group_from_json(j.at("quotient"));
    const int n = ex.quotient.order();
    ex.action.resize(n);
    if (j.contains("action"))
      for (const auto& entry : j.at("action")) {
        int q = element_from_json(ex.quotient, entry.at("q"));
        ex.action[q] = aut_from_json(*ex.base, entry.at("aut"));
      }
    ex.cocycle.assign(n, std::vector<GroupValue>(n, gid(*ex.base)));
    if (j.contains("cocycle"))
      for (const auto& entry : j.at("cocycle")) {
        int p = element_from_json(ex.quotient, entry.at("p"));
        int q = element_from_json(ex.quotient, entry.at("q"));
        ex.cocycle[p][q] = value_from_json(*ex.base, entry.at("value"));
      }
    out = GroupStructure(GroupStructure::Variant(std::move(ex)));
  } else {
    fail("unknown group kind '" + kind + "'");
  }
  if (j.contains("automorphisms"))
    for (const auto& [tag, aj] : j.at("automorphisms").items())
      out.automorphisms.emplace(tag, aut_from_json(out, aj));
  return out;
}

json structure_to_json(const GroupStructure& g) {
  json out;
  if (const auto* fin = g.finite()) {
    out = finite_group_to_json(fin->group);
    out["kind"] = "finite";
  } else if (const auto* ab = g.free_abelian()) {
    out = json{{"kind", "free_abelian"}, {"rank", ab->rank}};
  } else if (const auto* fr = g.free()) {
    out = json{{"kind", "free"},
               {"rank", fr->rank},
               {"bound", fr->bound},
               {"generators", fr->gen_names}};
  } else if (const auto* pr = g.product()) {
    json factors = json::array();
    for (const auto& f : pr->factors) factors.push_back(structure_to_json(f));
    out = json{{"kind", "product"}, {"factors", factors}};
  } else {
    const auto& ex = *g.extension();
    out = json{{"kind", "extension"},
               {"base", structure_to_json(*ex.base)},
               {"quotient", finite_group_to_json(ex.quotient)}};
    json action = json::array();
    for (int q = 0; q < ex.quotient.order(); ++q)
      if (ex.action[q])
        action.push_back(json{{"q", ex.quotient.name_of(q)}, {"aut", aut_to_json(*ex.base, ex.action[q])}});
    if (!action.empty()) out["action"] = action;
    json cocycle = json::array();
    for (int p = 0; p < ex.quotient.order(); ++p)
      for (int q = 0; q < ex.quotient.order(); ++q)
        if (!is_identity_value(*ex.base, ex.cocycle[p][q]))
          cocycle.push_back(json{{"p", ex.quotient.name_of(p)},
                                 {"q", ex.quotient.name_of(q)},
                                 {"value", value_to_json(*ex.base, ex.cocycle[p][q])}});
    if (!cocycle.empty()) out["cocycle"] = cocycle;
  }
  if (!g.automorphisms.empty()) {
    json auts = json::object();
    for (const auto& [tag, a] : g.automorphisms) auts[tag] = aut_to_json(g, a);
    out["automorphisms"] = auts;
  }
  return out;
}

}  // namespace

RecSet recset_from_json(const GroupStructure& g, const json& j) {
  RecSet out;
  for (const auto& b : j.at("boxes")) out.boxes.push_back(recbox_from_json(g, b));
  return out;
}

json group_to_json(const GroupEnv& env) {
  json out = structure_to_json(env.structure);
  if (!env.name.empty()) out["name"] = env.name;
  if (!env.labels.empty()) {
    json labels = json::object();
    for (const auto& [label, v] : env.labels) labels[label] = value_to_json(env.structure, v);
    out["labels"] = labels;
  }
  if (!env.recsets.empty()) {
    json sets = json::object();
    for (const auto& [name, set] : env.recsets) sets[name] = recset_to_json(env.structure, set);
    out["recsets"] = sets;
  }
  return out;
}

GroupEnv group_from_json(const json& j) {
  GroupEnv env;
  env.structure = structure_from_json(j);
  validate_structure(env.structure);
  env.name = j.value("name", "");
  if (j.contains("labels"))
    for (const auto& [label, vj] : j.at("labels").items())
      env.labels.emplace(label, value_from_json(env.structure, vj));
  if (j.contains("recsets"))
    for (const auto& [name, sj] : j.at("recsets").items()) {
      RecSet set = recset_from_json(env.structure, sj);
      validate_recset(env.structure, set);
      env.recsets.emplace(name, std::move(set));
    }
  return env;
}

std::string save_group(const GroupEnv& env) { return group_to_json(env).dump(2) + "\n"; }

GroupEnv load_group(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("group file: ") + e.what());
  }
  return group_from_json(j);
}

GroupEnv load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open group file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return load_group(text);
}

void save_group_file(const GroupEnv& env, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write group file: " + path);
  out << save_group(env);
}

}  // namespace groupeq
