#include "groupeq/solve.hpp"
#include "groupeq/zoo.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace groupeq;
using namespace groupeq::testing;

namespace {

IntVec vec1(long x) {
  IntVec v(1);
  v << x;
  return v;
}

Occurrence occ(const std::string& var, int exp) { return Occurrence{var, exp, nullptr, ""}; }

GroupValue dinf_z(const GroupEnv&, long n) {
  return GroupValue::ext(GroupValue::vector(vec1(n)), 0);
}

GroupEnv c2_env() { return make_finite_from_perms({{"a", Perm({1, 0})}}, 2); }

GroupEnv s3_env() {
  return make_finite_from_perms(
      {{"r", Perm::from_cycles("(1 2 3)", 3)}, {"s", Perm::from_cycles("(1 2)", 3)}}, 3);
}

}  // namespace

TEST_CASE("direct product worked examples") {
  GroupEnv c2 = c2_env();
  GroupStructure::Product pp;
  pp.factors.assign(2, c2.structure);
  GroupStructure c2xc2{GroupStructure::Variant(std::move(pp))};

  SUBCASE("X = (a, a) solved componentwise") {
    System s;
    s.declare("X");
    GroupValue target = GroupValue::tuple({GroupValue::finite(1), GroupValue::finite(1)});
    s.equations.push_back({occ("X", 1), ginv(c2xc2, target)});
    Verdict v = solve_direct_product(c2xc2, s);
    REQUIRE(v.is_sat());
    CHECK(value_eq(v.witness.at("X"), target));
  }
  SUBCASE("Z x Z: a bare inequation is satisfiable") {
    GroupStructure z{GroupStructure::FreeAbelian{1}};
    GroupStructure::Product zz;
    zz.factors.assign(2, z);
    GroupStructure zxz{GroupStructure::Variant(std::move(zz))};
    System s;
    s.declare("X");
    s.inequations.push_back({occ("X", 1)});
    Verdict v = solve_direct_product(zxz, s);
    REQUIRE(v.is_sat());
    CHECK(!is_identity_value(zxz, v.witness.at("X")));
  }
  SUBCASE("excluding all four elements of C2 x C2 is unsat") {
    System s;
    s.declare("X");
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        GroupValue g = GroupValue::tuple({GroupValue::finite(a), GroupValue::finite(b)});
        s.inequations.push_back({occ("X", 1), ginv(c2xc2, g)});
      }
    CHECK(solve_direct_product(c2xc2, s).is_unsat());
  }
  SUBCASE("factor-permuting twists are rejected here") {
    System s;
    s.declare("X");
    AutPtr swap = Automorphism::product(Perm({1, 0}), std::vector<AutPtr>(2));
    s.equations.push_back({Occurrence{"X", 1, swap, "swap"}});
    CHECK_THROWS_AS(solve_direct_product(c2xc2, s), std::invalid_argument);
  }
}

TEST_CASE("infinite dihedral worked examples") {
  GroupEnv dinf = make_dihedral_infinite();
  auto square_equals = [&](const GroupValue& rhs) {
    System s;
    s.declare("X");
    s.equations.push_back({occ("X", 1), occ("X", 1), ginv(dinf.structure, rhs)});
    return s;
  };
  SUBCASE("X^2 = z^2 is sat with X = z") {
    Verdict v = solve_extension(dinf.structure, square_equals(dinf_z(dinf, 2)));
    REQUIRE(v.is_sat());
    CHECK(value_eq(v.witness.at("X"), dinf_z(dinf, 1)));
  }
  SUBCASE("X^2 = z is unsat: both quotient branches refuted") {
    CHECK(solve_extension(dinf.structure, square_equals(dinf_z(dinf, 1))).is_unsat());
  }
  SUBCASE("even powers sat, odd powers unsat") {
    for (int k = 0; k <= 5; ++k) {
      CHECK(solve_extension(dinf.structure, square_equals(dinf_z(dinf, 2 * k))).is_sat());
      CHECK(solve_extension(dinf.structure, square_equals(dinf_z(dinf, 2 * k + 1))).is_unsat());
    }
  }
  SUBCASE("reflections square to the identity") {
    System s;
    s.declare("X");
    s.equations.push_back({occ("X", 1), occ("X", 1)});
    s.inequations.push_back({occ("X", 1)});
    Verdict v = solve_extension(dinf.structure, s);
    REQUIRE(v.is_sat());
    CHECK(ext_top(v.witness.at("X")) == 1);
  }
}

TEST_CASE("DA4: X^2 = z is solved by the transversal letter y2") {
  GroupEnv da4 = make_dihedral_artin_even(4, 4);
  System s;
  s.declare("X");
  s.equations.push_back({occ("X", 1), occ("X", 1), ginv(da4.structure, da4.labels.at("z"))});
  Verdict v = solve(da4.structure, s);
  REQUIRE(v.is_sat());
  CHECK(value_eq(v.witness.at("X"), da4.labels.at("y2")));
  // And the defining relation instance: X z X^-1 z^-1 = 1 at X = identity.
  System rel;
  rel.declare("X");
  rel.equations.push_back({occ("X", 1), da4.labels.at("z"), occ("X", -1),
                           ginv(da4.structure, da4.labels.at("z"))});
  Verdict vr = solve(da4.structure, rel);
  REQUIRE(vr.is_sat());
  CHECK(is_identity_value(da4.structure, vr.witness.at("X")));
}

TEST_CASE("swap product of Z: Y^2 = ((1,1), e)") {
  GroupEnv sp = make_swap_product(GroupStructure{GroupStructure::FreeAbelian{1}});
  System s;
  s.declare("Y");
  GroupValue target = GroupValue::ext(
      GroupValue::tuple({GroupValue::vector(vec1(1)), GroupValue::vector(vec1(1))}), 0);
  s.equations.push_back({occ("Y", 1), occ("Y", 1), ginv(sp.structure, target)});
  Verdict v = solve(sp.structure, s);
  REQUIRE(v.is_sat());
  CHECK(ext_top(v.witness.at("Y")) == 1);  // only the swap branch works
  CHECK(check_witness(sp.structure, s, v.witness));
}

TEST_CASE("finite oracle equivalence on random systems") {
  std::vector<GroupStructure> structures;
  structures.push_back(c2_env().structure);
  structures.push_back(s3_env().structure);
  {
    GroupStructure::Product pp;
    pp.factors.push_back(c2_env().structure);
    pp.factors.push_back(s3_env().structure);
    structures.push_back(GroupStructure{GroupStructure::Variant(std::move(pp))});
  }
  {
    // D6 = C6 extended by the inverting involution.
    GroupEnv c6 = make_finite_from_perms({{"r", Perm::from_cycles("(1 2 3 4 5 6)", 6)}}, 6);
    const FiniteGroup& fg = c6.structure.finite()->group;
    std::vector<int> inv_map(fg.order());
    for (int i = 0; i < fg.order(); ++i) inv_map[i] = fg.inv(i);
    GroupStructure::Extension ex;
    ex.base = Box<GroupStructure>(c6.structure);
    ex.quotient = FiniteGroup::closure({{"t", Perm({1, 0})}}, 2);
    ex.action.resize(2);
    ex.action[1] = Automorphism::finite_map(inv_map);
    ex.cocycle.assign(2, std::vector<GroupValue>(2, gid(c6.structure)));
    GroupStructure d6{GroupStructure::Variant(std::move(ex))};
    validate_structure(d6);
    structures.push_back(std::move(d6));
  }
  structures.push_back(
      build_wreath(c2_env().structure, FiniteGroup::closure({{"s", Perm({1, 0})}}, 2)));
  structures.push_back(make_swap_product(c2_env().structure).structure);

  std::mt19937 rng(101);
  int total = 0, sats = 0;
  for (const auto& g : structures) {
    FlatGroup flat = flatten(g);
    auto values = enumerate_values(g);
    for (int iter = 0; iter < 25; ++iter) {
      System s = random_system(g, values, rng, 2, 6);
      Verdict mine = solve(g, s);
      Verdict truth = brute_force(g, flat, s);
      CHECK(!mine.is_unknown());
      CHECK(mine.is_sat() == truth.is_sat());
      if (mine.is_sat()) {
        CHECK(check_witness(g, s, mine.witness));
        ++sats;
      }
      ++total;
    }
  }
  CHECK(total == 150);
  CHECK(sats > 20);
}

TEST_CASE("wreath embedding properties") {
  std::mt19937 rng(55);

  SUBCASE("swap product of Z embeds into Z wr C2 bijectively") {
    GroupEnv sp = make_swap_product(GroupStructure{GroupStructure::FreeAbelian{1}});
    WreathEmbedding emb(sp.structure, {0, 1});
    const GroupStructure& w = emb.wreath();
    validate_structure(w);
    auto rand_val = [&] {
      std::uniform_int_distribution<int> top(0, 1), c(-5, 5);
      return GroupValue::ext(GroupValue::tuple({GroupValue::vector(vec1(c(rng))),
                                                GroupValue::vector(vec1(c(rng)))}),
                             top(rng));
    };
    RecSet image = emb.image();
    for (int i = 0; i < 1000; ++i) {
      GroupValue a = rand_val(), b = rand_val();
      CHECK(value_eq(emb.embed(gmul(sp.structure, a, b)),
                     gmul(w, emb.embed(a), emb.embed(b))));
    }
    for (int i = 0; i < 200; ++i) {
      GroupValue a = rand_val();
      GroupValue wa = emb.embed(a);
      CHECK(recset_member(w, image, wa));
      // Pull-back inverts the embedding.
      int q = emb.recover_quotient(wa);
      CHECK(q == ext_top(a));
      std::vector<GroupValue> parts(2);
      emb.recover_base(wa, q, parts);
      CHECK(value_eq(GroupValue::ext(GroupValue::tuple(parts), q), a));
    }
  }

  SUBCASE("swap product of C2: embedding and image membership") {
    GroupEnv sp = make_swap_product(c2_env().structure);
    WreathEmbedding emb(sp.structure, {0, 1});
    const GroupStructure& w = emb.wreath();
    auto values = enumerate_values(sp.structure);
    RecSet image = emb.image();
    for (const auto& a : values)
      for (const auto& b : values)
        CHECK(value_eq(emb.embed(gmul(sp.structure, a, b)),
                       gmul(w, emb.embed(a), emb.embed(b))));
    for (const auto& a : values) {
      GroupValue wa = emb.embed(a);
      CHECK(recset_member(w, image, wa));
      int q = emb.recover_quotient(wa);
      std::vector<GroupValue> parts(2);
      emb.recover_base(wa, q, parts);
      CHECK(value_eq(GroupValue::ext(GroupValue::tuple(parts), q), a));
    }
  }

  SUBCASE("D-infinity: single factor, trivial orbit") {
    GroupEnv dinf = make_dihedral_infinite();
    WreathEmbedding emb(dinf.structure, {0});
    std::uniform_int_distribution<int> top(0, 1), c(-5, 5);
    for (int i = 0; i < 300; ++i) {
      GroupValue a = GroupValue::ext(GroupValue::vector(vec1(c(rng))), top(rng));
      GroupValue b = GroupValue::ext(GroupValue::vector(vec1(c(rng))), top(rng));
      CHECK(value_eq(emb.embed(gmul(dinf.structure, a, b)),
                     gmul(emb.wreath(), emb.embed(a), emb.embed(b))));
    }
  }
}

TEST_CASE("pipeline and direct extension solving agree") {
  std::mt19937 rng(77);

  SUBCASE("on D-infinity") {
    GroupEnv dinf = make_dihedral_infinite();
    for (int iter = 0; iter < 25; ++iter) {
      System s;
      s.declare("X");
      std::uniform_int_distribution<int> toks(1, 4), pick(0, 2), c(-3, 3), top(0, 1);
      EqWord w;
      const int l = toks(rng);
      for (int i = 0; i < l; ++i) {
        int k = pick(rng);
        if (k == 0)
          w.push_back(GroupValue::ext(GroupValue::vector(vec1(c(rng))), top(rng)));
        else
          w.push_back(occ("X", k == 1 ? 1 : -1));
      }
      s.equations.push_back(w);
      Verdict direct = solve_extension(dinf.structure, s);
      Verdict pipeline = solve_virtually_direct_product(dinf.structure, s);
      CHECK(direct.kind == pipeline.kind);
    }
  }

  SUBCASE("on the swap product of C2") {
    GroupEnv sp = make_swap_product(c2_env().structure);
    auto values = enumerate_values(sp.structure);
    FlatGroup flat = flatten(sp.structure);
    for (int iter = 0; iter < 25; ++iter) {
      System s = random_system(sp.structure, values, rng, 2, 5);
      Verdict direct = solve(sp.structure, s);
      Verdict pipeline = solve_virtually_direct_product(sp.structure, s);
      CHECK(direct.kind == pipeline.kind);
      Verdict truth = brute_force(sp.structure, flat, s);
      CHECK(pipeline.is_sat() == truth.is_sat());
      if (pipeline.is_sat()) CHECK(check_witness(sp.structure, s, pipeline.witness));
    }
  }
}

TEST_CASE("branch budget turns runaway search into honest unknown") {
  GroupEnv dinf = make_dihedral_infinite();
  // X must be a nontrivial involution (a reflection), so the quotient
  // branches with top(X) = e fail first; the sat branch is the third.
  System s;
  s.declare("X");
  s.declare("Y");
  s.equations.push_back({occ("X", 1), occ("X", 1)});
  s.inequations.push_back({occ("X", 1)});
  s.equations.push_back({occ("Y", 1), occ("Y", 1), ginv(dinf.structure, dinf_z(dinf, 2))});
  SolveOptions opts;
  opts.branch_budget = 2;
  Verdict v = solve(dinf.structure, s, opts);
  CHECK(v.is_unknown());
  CHECK(v.reason == "branch budget");
  // The same system solves with the default budget.
  CHECK(solve(dinf.structure, s).is_sat());
}

TEST_CASE("free factors inside products keep their semi-decision honesty") {
  // Z x F2 with an equation solvable only in the free part.
  GroupEnv f2 = make_free(2, 3);
  GroupStructure::Product pp;
  pp.factors.push_back(GroupStructure{GroupStructure::FreeAbelian{1}});
  pp.factors.push_back(f2.structure);
  GroupStructure zxf{GroupStructure::Variant(std::move(pp))};
  System s;
  s.declare("X");
  // X^2 = (0, commutator): abelianization cannot refute, search exhausts.
  GroupValue rhs = GroupValue::tuple(
      {GroupValue::vector(IntVec::Zero(1)), GroupValue::word(FreeWord({1, 2, -1, -2}))});
  s.equations.push_back({occ("X", 1), occ("X", 1), ginv(zxf, rhs)});
  Verdict v = solve(zxf, s);
  CHECK(v.is_unknown());
  CHECK(v.reason == "bound B exhausted");
  // X^2 = (2, b^2) is found.
  IntVec two(1);
  two << 2;
  GroupValue rhs2 =
      GroupValue::tuple({GroupValue::vector(two), GroupValue::word(FreeWord({2, 2}))});
  System s2;
  s2.declare("X");
  s2.equations.push_back({occ("X", 1), occ("X", 1), ginv(zxf, rhs2)});
  Verdict v2 = solve(zxf, s2);
  REQUIRE(v2.is_sat());
  CHECK(check_witness(zxf, s2, v2.witness));
}

TEST_CASE("the via_embedding option applies the pipeline once, then solves directly") {
  GroupEnv dinf = make_dihedral_infinite();
  SolveOptions opts;
  opts.via_embedding = true;
  System s;
  s.declare("X");
  s.equations.push_back({occ("X", 1), occ("X", 1), ginv(dinf.structure, dinf_z(dinf, 2))});
  Verdict v = solve(dinf.structure, s, opts);
  REQUIRE(v.is_sat());
  CHECK(value_eq(v.witness.at("X"), dinf_z(dinf, 1)));
  // Nested wreaths reached through the embedding solve without looping.
  GroupEnv sp = make_swap_product(GroupStructure{GroupStructure::FreeAbelian{1}});
  System sw;
  sw.declare("Y");
  GroupValue target = GroupValue::ext(
      GroupValue::tuple({GroupValue::vector(vec1(1)), GroupValue::vector(vec1(1))}), 0);
  sw.equations.push_back({occ("Y", 1), occ("Y", 1), ginv(sp.structure, target)});
  Verdict vw = solve(sp.structure, sw, opts);
  REQUIRE(vw.is_sat());
  CHECK(check_witness(sp.structure, sw, vw.witness));
}

TEST_CASE("pipeline handles several one-index orbits") {
  // Extension over Z x C2 with a factor-preserving action: negation on
  // the Z part, identity on the finite part. Two singleton orbits.
  GroupEnv c2 = c2_env();
  GroupStructure::Product pp;
  pp.factors.push_back(GroupStructure{GroupStructure::FreeAbelian{1}});
  pp.factors.push_back(c2.structure);
  GroupStructure base{GroupStructure::Variant(std::move(pp))};
  GroupStructure::Extension ex;
  ex.base = Box<GroupStructure>(base);
  ex.quotient = FiniteGroup::closure({{"t", Perm({1, 0})}}, 2);
  ex.action.resize(2);
  IntMatrix neg(1, 1);
  neg(0, 0) = -1;
  ex.action[1] = Automorphism::product(
      Perm::identity(2), {Automorphism::matrix(neg), nullptr});
  ex.cocycle.assign(2, std::vector<GroupValue>(2, gid(base)));
  GroupStructure g{GroupStructure::Variant(std::move(ex))};
  validate_structure(g);
  CHECK(factor_orbits(g).size() == 2);

  auto elt = [&](long n, int c, int top) {
    return GroupValue::ext(
        GroupValue::tuple({GroupValue::vector(vec1(n)), GroupValue::finite(c)}), top);
  };
  std::mt19937 rng(91);
  std::uniform_int_distribution<int> toks(1, 4), pick(0, 2), cc(-3, 3), bit(0, 1);
  for (int iter = 0; iter < 30; ++iter) {
    System s;
    s.declare("X");
    EqWord w;
    const int l = toks(rng);
    for (int i = 0; i < l; ++i) {
      int k = pick(rng);
      if (k == 0)
        w.push_back(elt(cc(rng), bit(rng), bit(rng)));
      else
        w.push_back(occ("X", k == 1 ? 1 : -1));
    }
    s.equations.push_back(w);
    Verdict direct = solve_extension(g, s);
    Verdict pipeline = solve_virtually_direct_product(g, s);
    CHECK(direct.kind == pipeline.kind);
    if (pipeline.is_sat()) CHECK(check_witness(g, s, pipeline.witness));
  }
}

TEST_CASE("DA4 through the embedding pipeline") {
  GroupEnv da4 = make_dihedral_artin_even(4, 4);
  // Central commutation at X = identity.
  System rel;
  rel.declare("X");
  rel.equations.push_back({occ("X", 1), da4.labels.at("z"), occ("X", -1),
                           ginv(da4.structure, da4.labels.at("z"))});
  Verdict v = solve_virtually_direct_product(da4.structure, rel);
  REQUIRE(v.is_sat());
  CHECK(check_witness(da4.structure, rel, v.witness));
  // X^2 = z agrees with the direct route.
  System sq;
  sq.declare("X");
  sq.equations.push_back({occ("X", 1), occ("X", 1), ginv(da4.structure, da4.labels.at("z"))});
  Verdict vp = solve_virtually_direct_product(da4.structure, sq);
  REQUIRE(vp.is_sat());
  CHECK(check_witness(da4.structure, sq, vp.witness));
}

TEST_CASE("trivial and degenerate structures") {
  SUBCASE("free abelian of rank zero") {
    GroupEnv triv = make_free_abelian(0);
    CHECK(finite_order(triv.structure) == size_t{1});
    System s;
    s.declare("X");
    s.equations.push_back({occ("X", 1)});
    Verdict v = solve(triv.structure, s);
    REQUIRE(v.is_sat());
    s.inequations.push_back({occ("X", 1)});
    CHECK(solve(triv.structure, s).is_unsat());
  }
  SUBCASE("odd dihedral Artin index is rejected") {
    CHECK_THROWS_AS(make_dihedral_artin_even(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(make_dihedral_artin_even(0, 4), std::invalid_argument);
  }
  SUBCASE("variable-free systems") {
    GroupEnv z = make_free_abelian(1);
    System s;
    s.equations.push_back({GroupValue::vector(IntVec::Zero(1))});
    CHECK(solve(z.structure, s).is_sat());
    System bad;
    bad.equations.push_back({GroupValue::vector(vec1(1))});
    CHECK(solve(z.structure, bad).is_unsat());
  }
}

TEST_CASE("extension branch filtering: unsatisfiable quotient constraint") {
  GroupEnv dinf = make_dihedral_infinite();
  System s;
  s.declare("X");
  s.equations.push_back({occ("X", 1), occ("X", 1), ginv(dinf.structure, dinf_z(dinf, 2))});
  // Constrain X to reflection-topped values only: X^2 = z^2 becomes unsat.
  CongruenceBox anything{IntVec::Zero(1), IntMatrix::Identity(1, 1)};
  s.constraints["X"] =
      RecSet{{RecBox(RecBox::ExtBox{1, Box<RecBox>(RecBox(anything))})}};
  SolveStats stats;
  Verdict v = solve(dinf.structure, s, {}, &stats);
  CHECK(v.is_unsat());
  CHECK(stats.branches == 1);  // only the constraint-compatible branch
}
