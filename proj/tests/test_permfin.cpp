#include "groupeq/finite_solver.hpp"
#include "groupeq/zoo.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace groupeq;
using namespace groupeq::testing;

namespace {

Perm cyc(const std::string& s, int degree) { return Perm::from_cycles(s, degree); }

GroupEnv s3() {
  return make_finite_from_perms({{"r", cyc("(1 2 3)", 3)}, {"s", cyc("(1 2)", 3)}}, 3);
}

}  // namespace

TEST_CASE("perm composition convention (p*q)(i) = p(q(i))") {
  Perm swap12 = cyc("(1 2)", 3);
  CHECK((swap12 * swap12).is_identity());
  // (1 2 3) after (1 2): 1->2->3, 2->1->2, 3->3->1, i.e. (1 3).
  Perm r = cyc("(1 2 3)", 3);
  CHECK((r * swap12) == cyc("(1 3)", 3));
  CHECK((r * Perm::identity(3)) == r);
  CHECK_THROWS_AS(cyc("(1 2)", 2) * Perm::identity(3), std::invalid_argument);
}

TEST_CASE("closure sizes and determinism") {
  CHECK(FiniteGroup::closure({}, 1).order() == 1);
  CHECK(FiniteGroup::closure({{"s", cyc("(1 2)", 2)}}, 2).order() == 2);
  FiniteGroup g = FiniteGroup::closure({{"r", cyc("(1 2 3)", 3)}, {"s", cyc("(1 2)", 3)}}, 3);
  CHECK(g.order() == 6);
  CHECK(g.name_of(0) == "e");
  // Closed under product and inverse, contains the generators.
  for (int a = 0; a < g.order(); ++a) {
    CHECK(g.mul(a, g.inv(a)) == 0);
    for (int b = 0; b < g.order(); ++b) {
      CHECK(g.mul(a, b) >= 0);
      CHECK(g.mul(a, b) < g.order());
    }
  }
  CHECK(g.generators().count("r") == 1);
  CHECK(g.generators().count("s") == 1);
}

TEST_CASE("from_table rejects broken tables") {
  // Constant row: not a group.
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteGroup::from_table({{1, 0}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("solve_finite worked examples") {
  GroupEnv env = s3();
  const FiniteGroup& g = env.structure.finite()->group;
  const int r = g.index_of_name("r");  // (1 2 3)
  const int s = g.index_of_name("s");  // (1 2)

  SUBCASE("X*X = (1 2 3) has the square root (1 3 2)") {
    System sys;
    sys.declare("X");
    sys.equations.push_back(
        {Occurrence{"X", 1, nullptr, ""}, Occurrence{"X", 1, nullptr, ""},
         ginv(env.structure, GroupValue::finite(r))});
    Verdict v = solve_finite(env.structure, sys);
    REQUIRE(v.is_sat());
    int x = std::get<FiniteElt>(v.witness.at("X").v).index;
    CHECK(g.mul(x, x) == r);
    CHECK(g.perm_of(x) == cyc("(1 3 2)", 3));
  }
  SUBCASE("X*X = (1 2) is unsat: transpositions are not squares") {
    System sys;
    sys.declare("X");
    sys.equations.push_back(
        {Occurrence{"X", 1, nullptr, ""}, Occurrence{"X", 1, nullptr, ""},
         ginv(env.structure, GroupValue::finite(s))});
    CHECK(solve_finite(env.structure, sys).is_unsat());
  }
  SUBCASE("constraint picks the witness in C2") {
    GroupEnv c2 = make_finite_from_perms({{"a", cyc("(1 2)", 2)}}, 2);
    System sys;
    sys.declare("X");
    sys.equations.push_back({Occurrence{"X", 1, nullptr, ""}, Occurrence{"X", 1, nullptr, ""}});
    sys.constraints["X"] = RecSet{{RecBox(RecBox::FiniteSubset{{1}})}};
    Verdict v = solve_finite(c2.structure, sys);
    REQUIRE(v.is_sat());
    CHECK(std::get<FiniteElt>(v.witness.at("X").v).index == 1);
  }
}

TEST_CASE("enumerate_assignments is deterministic and lexicographic") {
  AssignmentEnumerator e({{0, 1}, {0, 1}});
  std::vector<std::vector<int>> seen;
  while (auto a = e.next()) seen.push_back(*a);
  CHECK(seen == std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  AssignmentEnumerator empty({{0, 1}, {}});
  CHECK(!empty.next().has_value());
  AssignmentEnumerator single({{0, 1}});
  CHECK(single.count() == 2);
  // The stream is restartable.
  e.reset();
  std::vector<std::vector<int>> again;
  while (auto a = e.next()) again.push_back(*a);
  CHECK(again == seen);
}

TEST_CASE("solve_finite agrees with the check_witness brute force") {
  GroupEnv env = s3();
  FlatGroup flat = flatten(env.structure);
  std::mt19937 rng(17);
  auto values = enumerate_values(env.structure);
  int sat_seen = 0;
  for (int iter = 0; iter < 120; ++iter) {
    System sys = random_system(env.structure, values, rng, 2, 6);
    Verdict mine = solve_finite(env.structure, sys);
    // Independent oracle: try every assignment with check_witness.
    bool truth = false;
    std::vector<size_t> cursor(sys.variables.size(), 0);
    for (;;) {
      Assignment a;
      for (size_t k = 0; k < sys.variables.size(); ++k)
        a.emplace(sys.variables[k], values[cursor[k]]);
      if (check_witness(env.structure, sys, a)) {
        truth = true;
        break;
      }
      size_t k = cursor.size();
      bool done = false;
      for (;;) {
        if (k == 0) {
          done = true;
          break;
        }
        --k;
        if (++cursor[k] < values.size()) break;
        cursor[k] = 0;
      }
      if (done) break;
    }
    CHECK(mine.is_sat() == truth);
    if (mine.is_sat()) {
      ++sat_seen;
      CHECK(check_witness(env.structure, sys, mine.witness));
    }
  }
  CHECK(sat_seen > 10);
}

TEST_CASE("solve_finite is invariant under relabeling by an automorphism") {
  GroupEnv env = s3();
  const FiniteGroup& g = env.structure.finite()->group;
  // Conjugation by any element is an automorphism.
  std::mt19937 rng(19);
  auto values = enumerate_values(env.structure);
  for (int c = 1; c < g.order(); ++c) {
    std::vector<int> images(g.order());
    for (int x = 0; x < g.order(); ++x) images[x] = g.mul(g.mul(c, x), g.inv(c));
    AutPtr phi = Automorphism::finite_map(images);
    validate_automorphism(phi, env.structure);
    for (int iter = 0; iter < 20; ++iter) {
      System sys = random_system(env.structure, values, rng, 2, 6);
      // Mix in a twisted occurrence: conjugation by r on the first variable.
      std::vector<int> conj_r(g.order());
      int r = g.index_of_name("r");
      for (int x = 0; x < g.order(); ++x) conj_r[x] = g.mul(g.mul(r, x), g.inv(r));
      AutPtr tw = Automorphism::finite_map(conj_r);
      sys.equations.push_back(
          {Occurrence{sys.variables[0], 1, tw, ""}, Occurrence{sys.variables[0], -1, nullptr, ""}});
      // Apply phi simultaneously to constants, constraints and twists:
      // a twist psi relabels to phi ∘ psi ∘ phi^{-1}.
      System mapped = sys;
      auto map_word = [&](EqWord& w) {
        for (auto& tok : w) {
          if (auto* cv = std::get_if<GroupValue>(&tok)) {
            *cv = apply_aut(phi, env.structure, *cv);
          } else {
            auto& o = std::get<Occurrence>(tok);
            if (o.twist)
              o.twist = compose_auts(
                  compose_auts(phi, o.twist, env.structure),
                  inverse_aut(phi, env.structure), env.structure);
          }
        }
      };
      for (auto& w : mapped.equations) map_word(w);
      for (auto& w : mapped.inequations) map_word(w);
      for (auto& [var, set] : mapped.constraints)
        for (auto& box : set.boxes) box = box_image(env.structure, phi, box);
      CHECK(solve_finite(env.structure, sys).kind ==
            solve_finite(env.structure, mapped).kind);
    }
  }
}

TEST_CASE("solve_finite oversize is an input error, not a verdict") {
  GroupEnv env = s3();
  System sys;
  for (int v = 0; v < 9; ++v) sys.declare("X" + std::to_string(v));
  sys.equations.push_back({Occurrence{"X0", 1, nullptr, ""}});
  FiniteSolveOptions opts;
  opts.assignment_cap = 1000;
  CHECK_THROWS_AS(solve_finite(env.structure, sys, opts), std::runtime_error);
}
