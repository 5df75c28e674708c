#include "groupeq/free_solver.hpp"
#include "groupeq/zoo.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace groupeq;
using namespace groupeq::testing;

namespace {

FreeWord w(std::initializer_list<int> letters) { return FreeWord(std::vector<int>(letters)); }

FreeWord random_word(std::mt19937& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(1, rank), sign(0, 1);
  std::vector<int> letters;
  const int l = len(rng);
  for (int i = 0; i < l; ++i) letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return FreeWord(std::move(letters));
}

}  // namespace

TEST_CASE("free reduction and multiplication") {
  CHECK((w({1}) * w({-1})).empty());
  CHECK(w({1, 2}) * w({-2, 1}) == w({1, 1}));
  FreeWord u = w({1, 2, -1});
  CHECK(u * FreeWord() == u);
  CHECK(FreeWord({1, -1, 2}) == w({2}));  // reduced on construction
}

TEST_CASE("free_mul properties on random words") {
  std::mt19937 rng(5);
  for (int iter = 0; iter < 1000; ++iter) {
    FreeWord a = random_word(rng, 2, 6), b = random_word(rng, 2, 6), c = random_word(rng, 2, 6);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * FreeWord() == a);
    CHECK(FreeWord() * a == a);
    CHECK((a * b).inverse() == b.inverse() * a.inverse());
    CHECK((a * a.inverse()).empty());
    CHECK((a * b).length() <= a.length() + b.length());
  }
}

TEST_CASE("abelianize") {
  CHECK(vec_eq(abelianize(w({1, 2, -1, 2}), 2), [] {
    IntVec v(2);
    v << 0, 2;
    return v;
  }()));
  CHECK(is_zero(IntMatrix(abelianize(FreeWord(), 2))));
  CHECK(is_zero(IntMatrix(abelianize(w({1, 2, -1, -2}), 2))));
  std::mt19937 rng(6);
  for (int iter = 0; iter < 200; ++iter) {
    FreeWord a = random_word(rng, 3, 6), b = random_word(rng, 3, 6);
    CHECK(vec_eq(abelianize(a * b, 3), IntVec(abelianize(a, 3) + abelianize(b, 3))));
  }
}

TEST_CASE("finite quotient evaluation is a homomorphism") {
  FiniteGroup c2 = FiniteGroup::closure({{"s", Perm({1, 0})}}, 2);
  std::vector<int> targets{1, 1};  // a, b -> the involution
  CHECK(finite_image(w({1, 2}), c2, targets) == 0);
  CHECK(finite_image(FreeWord(), c2, targets) == 0);
  std::mt19937 rng(7);
  for (int iter = 0; iter < 100; ++iter) {
    FreeWord a = random_word(rng, 2, 6), b = random_word(rng, 2, 6);
    CHECK(finite_image(a * b, c2, targets) ==
          c2.mul(finite_image(a, c2, targets), finite_image(b, c2, targets)));
  }
}

TEST_CASE("word string round trip") {
  std::vector<std::string> names{"a", "b"};
  CHECK(word_to_string(w({1, -2, 1}), names) == "a b^-1 a");
  CHECK(word_from_string("a b^-1 a", names) == w({1, -2, 1}));
  CHECK(word_from_string("", names).empty());
  CHECK_THROWS_AS(word_from_string("c", names), std::invalid_argument);
}

namespace {

System one_equation(const GroupEnv&, const EqWord& word) {
  System s;
  s.declare("X");
  s.equations.push_back(word);
  return s;
}

Occurrence occ(const std::string& var, int exp) { return Occurrence{var, exp, nullptr, ""}; }

}  // namespace

TEST_CASE("solve_free_bounded worked examples") {
  GroupEnv f2 = make_free(2, 4);
  GroupValue a = GroupValue::word(w({1})), b = GroupValue::word(w({2}));

  SUBCASE("commuting with a: X = empty word found at bound 0") {
    System s = one_equation(f2, {occ("X", 1), a, occ("X", -1), ginv(f2.structure, a)});
    FreeSolveOptions opts;
    opts.bound_override = 0;
    Verdict v = solve_free_bounded(f2.structure, s, opts);
    REQUIRE(v.is_sat());
    CHECK(std::get<FreeWord>(v.witness.at("X").v).empty());
  }
  SUBCASE("X^2 = a is refuted by parity") {
    System s = one_equation(f2, {occ("X", 1), occ("X", 1), ginv(f2.structure, a)});
    CHECK(solve_free_bounded(f2.structure, s).is_unsat());
  }
  SUBCASE("X a X^-1 = b is refuted by conjugacy abelianization") {
    System s = one_equation(f2, {occ("X", 1), a, occ("X", -1), ginv(f2.structure, b)});
    CHECK(solve_free_bounded(f2.structure, s).is_unsat());
  }
  SUBCASE("X^2 = commutator: honest unknown at any bound") {
    GroupValue comm = GroupValue::word(w({1, 2, -1, -2}));
    System s = one_equation(f2, {occ("X", 1), occ("X", 1), ginv(f2.structure, comm)});
    for (int bound : {0, 2, 4}) {
      FreeSolveOptions opts;
      opts.bound_override = bound;
      Verdict v = solve_free_bounded(f2.structure, s, opts);
      CHECK(v.is_unknown());
      CHECK(v.reason == "bound B exhausted");
    }
  }
}

TEST_CASE("solve_free_bounded is sound against exhaustive enumeration") {
  GroupEnv f2 = make_free(2, 3);
  std::mt19937 rng(13);
  auto words = reduced_words_upto(2, 3);
  int agreements_sat = 0, agreements_unsat = 0;
  for (int iter = 0; iter < 100; ++iter) {
    // Random small system over F2.
    System s;
    std::uniform_int_distribution<int> nvars(1, 2), neqs(1, 2), sign(0, 1), toks(1, 4);
    const int m = nvars(rng);
    for (int v = 0; v < m; ++v) s.declare("X" + std::to_string(v));
    auto rand_word = [&] {
      EqWord word;
      const int l = toks(rng);
      for (int i = 0; i < l; ++i) {
        if (sign(rng)) {
          word.push_back(GroupValue::word(random_word(rng, 2, 3)));
        } else {
          word.push_back(occ("X" + std::to_string(std::uniform_int_distribution<int>(
                                        0, m - 1)(rng)),
                             sign(rng) ? 1 : -1));
        }
      }
      return word;
    };
    const int ne = neqs(rng);
    for (int i = 0; i < ne; ++i) s.equations.push_back(rand_word());
    if (sign(rng)) s.inequations.push_back(rand_word());

    Verdict v = solve_free_bounded(f2.structure, s);
    // Exhaustive <=3 search with the independent checker.
    bool found = false;
    std::vector<size_t> cursor(m, 0);
    for (;;) {
      Assignment a;
      for (int k = 0; k < m; ++k)
        a.emplace("X" + std::to_string(k), GroupValue::word(words[cursor[k]]));
      if (check_witness(f2.structure, s, a)) {
        found = true;
        break;
      }
      int k = m;
      bool done = false;
      for (;;) {
        if (k == 0) {
          done = true;
          break;
        }
        --k;
        if (++cursor[k] < words.size()) break;
        cursor[k] = 0;
      }
      if (done) break;
    }
    if (v.is_sat()) {
      CHECK(check_witness(f2.structure, s, v.witness));
      CHECK(found);  // no false sat relative to the bound
      ++agreements_sat;
    }
    if (v.is_unsat()) {
      CHECK(!found);  // no false unsat
      ++agreements_unsat;
    }
    if (found) CHECK(v.is_sat());  // bounded completeness
  }
  CHECK(agreements_sat > 10);
  CHECK(agreements_unsat > 3);
}

TEST_CASE("raising the bound never flips a decided verdict") {
  GroupEnv f2 = make_free(2, 2);
  std::mt19937 rng(29);
  for (int iter = 0; iter < 40; ++iter) {
    System s;
    s.declare("X");
    EqWord word;
    std::uniform_int_distribution<int> toks(1, 4), sign(0, 1);
    const int l = toks(rng);
    for (int i = 0; i < l; ++i) {
      if (sign(rng))
        word.push_back(GroupValue::word(random_word(rng, 2, 2)));
      else
        word.push_back(occ("X", sign(rng) ? 1 : -1));
    }
    s.equations.push_back(word);
    FreeSolveOptions low, high;
    low.bound_override = 1;
    high.bound_override = 3;
    Verdict vl = solve_free_bounded(f2.structure, s, low);
    Verdict vh = solve_free_bounded(f2.structure, s, high);
    if (vl.is_sat()) CHECK(vh.is_sat());
    if (vl.is_unsat()) CHECK(vh.is_unsat());
  }
}

TEST_CASE("free twists: substitution automorphisms") {
  GroupEnv f2 = make_free(2, 3);
  SUBCASE("exchange automorphism fixes only the empty word") {
    AutPtr ex = Automorphism::free_subst({w({2}), w({1})}, {w({2}), w({1})});
    validate_automorphism(ex, f2.structure);
    // ex(X) = X with X != 1: unsatisfiable over all of F2, but the
    // abelianization filter cannot see it, so the verdict stays unknown.
    System s;
    s.declare("X");
    s.equations.push_back({Occurrence{"X", 1, ex, "ex"}, occ("X", -1)});
    s.inequations.push_back({occ("X", 1)});
    CHECK(solve_free_bounded(f2.structure, s).is_unknown());
  }
  SUBCASE("conjugation automorphism has small fixed words") {
    // phi(w) = a w a^-1; its fixed words are the powers of a.
    AutPtr conj = Automorphism::free_subst({w({1}), w({1, 2, -1})}, {w({1}), w({-1, 2, 1})});
    validate_automorphism(conj, f2.structure);
    System s;
    s.declare("X");
    s.equations.push_back({Occurrence{"X", 1, conj, "conj_a"}, occ("X", -1)});
    s.inequations.push_back({occ("X", 1)});
    Verdict v = solve_free_bounded(f2.structure, s);
    REQUIRE(v.is_sat());
    FreeWord xw = std::get<FreeWord>(v.witness.at("X").v);
    CHECK(substitute(xw, {w({1}), w({1, 2, -1})}) == xw);
    CHECK(xw == w({1}));  // first in length-lex order
  }
  SUBCASE("non-automorphisms are rejected") {
    CHECK_THROWS_AS(validate_automorphism(
                        Automorphism::free_subst({w({1, 1}), w({2})}, {w({1}), w({2})}),
                        f2.structure),
                    std::invalid_argument);
  }
}
