#include "groupeq/solve.hpp"
#include "groupeq/system_parser.hpp"
#include "groupeq/zoo.hpp"

#include <doctest.h>

using namespace groupeq;

namespace {

GroupEnv z_env() {
  GroupEnv env = make_free_abelian(1);
  IntVec one(1);
  one << 1;
  env.labels.emplace("z", GroupValue::vector(one));
  IntMatrix neg(1, 1);
  neg(0, 0) = -1;
  env.structure.automorphisms["neg"] = Automorphism::matrix(neg);
  CongruenceBox evens{IntVec::Zero(1), IntMatrix::Identity(1, 1) * Int(2)};
  env.recsets["evens"] = RecSet{{RecBox(evens)}};
  return env;
}

}  // namespace

TEST_CASE("parse worked examples") {
  GroupEnv env = z_env();
  SUBCASE("2x = 1 over Z") {
    System s = parse_system("vars X\neq X X z^-1\n", env);
    CHECK(s.variables == std::vector<std::string>{"X"});
    REQUIRE(s.equations.size() == 1);
    CHECK(s.equations[0].size() == 3);
    CHECK(solve(env.structure, s).is_unsat());  // parity
  }
  SUBCASE("bare inequation") {
    System s = parse_system("vars X\nneq X\n", env);
    CHECK(s.inequations.size() == 1);
    Verdict v = solve(env.structure, s);
    REQUIRE(v.is_sat());
    CHECK(!is_identity_value(env.structure, v.witness.at("X")));
  }
  SUBCASE("twisted equation alpha(x) + x = 0") {
    System s = parse_system("vars X\neq twist(neg, X) X\n", env);
    REQUIRE(s.equations.size() == 1);
    const auto& o = std::get<Occurrence>(s.equations[0][0]);
    CHECK(o.twist_tag == "neg");
    CHECK(o.twist != nullptr);
    // Always satisfiable: -x + x = 0.
    CHECK(solve(env.structure, s).is_sat());
  }
  SUBCASE("equality sugar") {
    System a = parse_system("vars X\neq X X = z z z\n", env);
    System b = parse_system("vars X\neq X X z^-1 z^-1 z^-1\n", env);
    CHECK(system_equal(a, b));
  }
  SUBCASE("constraints resolve recset names") {
    System s = parse_system("vars X\nconstrain X in evens\nneq X\n", env);
    Verdict v = solve(env.structure, s);
    REQUIRE(v.is_sat());
    IntVec x = std::get<IntVec>(v.witness.at("X").v);
    CHECK(x[0] % 2 == 0);
    CHECK(x[0] != 0);
  }
  SUBCASE("comments and blank lines are ignored") {
    System s = parse_system("# a comment\n\nvars X  # trailing\neq X\n", env);
    CHECK(s.equations.size() == 1);
  }
  SUBCASE("empty equation is accepted and trivially true") {
    System s = parse_system("vars X\neq\n", env);
    CHECK(s.equations.size() == 1);
    CHECK(s.equations[0].empty());
    CHECK(solve(env.structure, s).is_sat());
  }
}

TEST_CASE("parse errors carry line numbers") {
  GroupEnv env = z_env();
  auto line_of = [](const auto& fn) {
    try {
      fn();
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of([&] { parse_system("vars X\neq X Y\n", env); }) == 2);
  CHECK(line_of([&] { parse_system("vars X\n\neq nope\n", env); }) == 3);
  CHECK(line_of([&] { parse_system("vars X\neq twist(zap, X)\n", env); }) == 2);
  CHECK(line_of([&] { parse_system("constrain X in evens\n", env); }) == 1);
  CHECK(line_of([&] { parse_system("vars X\nconstrain X in odds\n", env); }) == 2);
  CHECK(line_of([&] { parse_system("frobnicate\n", env); }) == 1);
}

TEST_CASE("print/parse round trip is structurally identical") {
  GroupEnv env = z_env();
  std::vector<std::string> sources{
      "vars X\neq X X z^-1\n",
      "vars X Y\neq X Y X^-1 Y^-1\nneq X\nconstrain X in evens\n",
      "vars X\neq twist(neg, X) X\nneq X z^-1\n",
      "vars X\neq twist(neg, X)^-1 z\n",
  };
  for (const auto& src : sources) {
    System s = parse_system(src, env);
    std::string printed = print_system(s, env);
    System reparsed = parse_system(printed, env);
    CHECK(system_equal(s, reparsed));
    CHECK(print_system(reparsed, env) == printed);
  }
}

TEST_CASE("twist token forms") {
  GroupEnv env = z_env();
  System a = parse_system("vars X\neq twist(neg, X^-1)\n", env);
  System b = parse_system("vars X\neq twist(neg, X)^-1\n", env);
  CHECK(system_equal(a, b));
  const auto& o = std::get<Occurrence>(a.equations[0][0]);
  CHECK(o.exponent == -1);
  // Double inversion cancels.
  System c = parse_system("vars X\neq twist(neg, X^-1)^-1\n", env);
  CHECK(std::get<Occurrence>(c.equations[0][0]).exponent == 1);
}
