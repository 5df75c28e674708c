// Regenerates the example corpus: one group file per structure kind plus
// paired system files. Usage: groupeq-mkcorpus <output-dir>

#include "groupeq/group_io.hpp"
#include "groupeq/wreath.hpp"
#include "groupeq/zoo.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace groupeq;

namespace {

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

IntVec vec1(long x) {
  IntVec v(1);
  v << x;
  return v;
}

RecSet even_set(int rank) {
  CongruenceBox box{IntVec::Zero(rank), IntMatrix::Identity(rank, rank) * Int(2)};
  return RecSet{{RecBox(box)}};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: groupeq-mkcorpus <output-dir>\n";
    return 2;
  }
  std::filesystem::path dir(argv[1]);
  std::filesystem::create_directories(dir);

  // --- finite groups -------------------------------------------------
  {
    GroupEnv c2 = make_finite_from_perms({{"a", Perm::from_cycles("(1 2)", 2)}}, 2);
    c2.name = "C2";
    save_group_file(c2, (dir / "c2.group.json").string());
  }
  {
    GroupEnv c6 = make_finite_from_perms({{"r", Perm::from_cycles("(1 2 3 4 5 6)", 6)}}, 6);
    c6.name = "C6";
    save_group_file(c6, (dir / "c6.group.json").string());
  }
  {
    GroupEnv s3 = make_finite_from_perms(
        {{"r", Perm::from_cycles("(1 2 3)", 3)}, {"s", Perm::from_cycles("(1 2)", 3)}}, 3);
    s3.name = "S3";
    const FiniteGroup& g = s3.structure.finite()->group;
    RecBox::FiniteSubset transpositions;
    for (int i = 0; i < g.order(); ++i)
      if (g.mul(i, i) == 0 && i != 0) transpositions.elements.push_back(i);
    s3.recsets["involutions"] = RecSet{{RecBox(transpositions)}};
    save_group_file(s3, (dir / "s3.group.json").string());
    write_text(dir / "s3_sqrt.sys", "vars X\neq X X = r\n");
    write_text(dir / "s3_involution.sys", "vars X\nconstrain X in involutions\neq X X\n");
  }
  {
    GroupEnv d4 = make_finite_from_perms(
        {{"r", Perm::from_cycles("(1 2 3 4)", 4)}, {"s", Perm::from_cycles("(1 3)", 4)}}, 4);
    d4.name = "D4";
    save_group_file(d4, (dir / "d4.group.json").string());
  }
  {
    GroupEnv q8 = make_finite_from_perms(
        {{"i", Perm::from_cycles("(1 2 3 4)(5 8 7 6)", 8)},
         {"j", Perm::from_cycles("(1 5 3 7)(2 6 4 8)", 8)}},
        8);
    q8.name = "Q8";
    // The central involution -1 = i^2.
    const FiniteGroup& g = q8.structure.finite()->group;
    int i_idx = g.generators().at("i");
    q8.labels.emplace("m1", GroupValue::finite(g.mul(i_idx, i_idx)));
    save_group_file(q8, (dir / "q8.group.json").string());
    write_text(dir / "q8_central.sys", "vars X\neq X X = m1\n");
  }

  // --- free abelian ---------------------------------------------------
  {
    GroupEnv z = make_free_abelian(1);
    z.name = "Z";
    z.labels.emplace("z", GroupValue::vector(vec1(1)));
    IntMatrix neg(1, 1);
    neg(0, 0) = -1;
    z.structure.automorphisms["neg"] = Automorphism::matrix(neg);
    z.recsets["evens"] = even_set(1);
    save_group_file(z, (dir / "z.group.json").string());
    write_text(dir / "z_even_nonzero.sys", "vars X\nconstrain X in evens\nneq X\n");
    write_text(dir / "z_parity.sys", "vars X\neq X X = z\n");
  }
  {
    GroupEnv z2 = make_free_abelian(2);
    z2.name = "Z^2";
    IntMatrix swap(2, 2);
    swap << 0, 1, 1, 0;
    z2.structure.automorphisms["swap"] = Automorphism::matrix(swap);
    z2.recsets["evens"] = even_set(2);
    save_group_file(z2, (dir / "z2.group.json").string());
    write_text(dir / "z2_twist.sys", "vars X\neq twist(swap, X) X = e1 e2\n");
  }

  // --- free ------------------------------------------------------------
  {
    GroupEnv f2 = make_free(2, 6);
    f2.name = "F2";
    FiniteGroup c2 = FiniteGroup::closure({{"s", Perm::from_cycles("(1 2)", 2)}}, 2);
    RecBox::FreeQuot even_len{c2, {1, 1}, {0}};
    f2.recsets["even_length"] = RecSet{{RecBox(even_len)}};
    save_group_file(f2, (dir / "f2.group.json").string());
    write_text(dir / "f2_commutator_square.sys", "vars X\neq X X = a b a^-1 b^-1\n");
    write_text(dir / "f2_conjugate.sys", "vars X\neq X a X^-1 = b\n");
    write_text(dir / "f2_centralizer.sys",
               "vars X\neq X a X^-1 = a\nneq X\nconstrain X in even_length\n");
  }

  // --- products ---------------------------------------------------------
  {
    GroupEnv c2 = make_finite_from_perms({{"a", Perm::from_cycles("(1 2)", 2)}}, 2);
    GroupStructure::Product pp;
    pp.factors.assign(2, c2.structure);
    GroupEnv env;
    env.name = "C2xC2";
    env.structure = GroupStructure(GroupStructure::Variant(std::move(pp)));
    env.labels.emplace("a1",
                       GroupValue::tuple({GroupValue::finite(1), GroupValue::finite(0)}));
    env.labels.emplace("a2",
                       GroupValue::tuple({GroupValue::finite(0), GroupValue::finite(1)}));
    validate_structure(env.structure);
    save_group_file(env, (dir / "c2xc2.group.json").string());
    write_text(dir / "c2xc2_all_neq.sys",
               "vars X\nneq X\nneq X a1^-1\nneq X a2^-1\nneq X a1^-1 a2^-1\n");
  }
  {
    GroupStructure::Product pp;
    pp.factors.push_back(GroupStructure{GroupStructure::FreeAbelian{1}});
    pp.factors.push_back(GroupStructure{GroupStructure::Free{2, 6, {"a", "b"}}});
    GroupEnv env;
    env.name = "ZxF2";
    env.structure = GroupStructure(GroupStructure::Variant(std::move(pp)));
    env.labels.emplace("u", GroupValue::tuple({GroupValue::vector(vec1(1)),
                                               GroupValue::word(FreeWord())}));
    env.labels.emplace("a", GroupValue::tuple({GroupValue::vector(IntVec::Zero(1)),
                                               GroupValue::word(FreeWord({1}))}));
    env.labels.emplace("b", GroupValue::tuple({GroupValue::vector(IntVec::Zero(1)),
                                               GroupValue::word(FreeWord({2}))}));
    validate_structure(env.structure);
    save_group_file(env, (dir / "zxf2.group.json").string());
    write_text(dir / "zxf2_square.sys", "vars X\neq X X = u u b b\n");
  }

  // --- extensions --------------------------------------------------------
  {
    GroupEnv dinf = make_dihedral_infinite();
    dinf.name = "Dinf";
    RecSet translations{{RecBox(RecBox::ExtBox{
        0, Box<RecBox>(RecBox(CongruenceBox{IntVec::Zero(1), IntMatrix::Identity(1, 1)}))})}};
    dinf.recsets["translations"] = translations;
    save_group_file(dinf, (dir / "dinf.group.json").string());
    write_text(dir / "dinf_sq_z2.sys", "vars X\neq X X = z z\n");
    write_text(dir / "dinf_sq_z.sys", "vars X\neq X X = z\n");
    write_text(dir / "dinf_reflection.sys", "vars X\neq X X\nneq X\n");
  }
  {
    GroupEnv da4 = make_dihedral_artin_even(4, 6);
    da4.name = "DA4";
    save_group_file(da4, (dir / "da4.group.json").string());
    write_text(dir / "da4_sq_z.sys", "vars X\neq X X = z\n");
    write_text(dir / "da4_braid.sys", "vars X\neq X y1 y2 y2 = y2 y2 y1 X\n");
  }
  {
    GroupEnv da6 = make_dihedral_artin_even(6, 6);
    da6.name = "DA6";
    save_group_file(da6, (dir / "da6.group.json").string());
  }
  {
    GroupEnv sp = make_swap_product(GroupStructure{GroupStructure::FreeAbelian{1}});
    sp.name = "SwapProdZ";
    sp.labels.emplace("g11",
                      GroupValue::ext(GroupValue::tuple({GroupValue::vector(vec1(1)),
                                                         GroupValue::vector(vec1(1))}),
                                      0));
    sp.labels.emplace("g10",
                      GroupValue::ext(GroupValue::tuple({GroupValue::vector(vec1(1)),
                                                         GroupValue::vector(IntVec::Zero(1))}),
                                      0));
    save_group_file(sp, (dir / "swapz.group.json").string());
    write_text(dir / "swapz_sq.sys", "vars Y\neq Y Y = g11\n");
    write_text(dir / "swapz_conj.sys", "vars Y\neq Y g10 Y^-1 = s g10 s\n");
  }
  {
    GroupEnv c2 = make_finite_from_perms({{"a", Perm::from_cycles("(1 2)", 2)}}, 2);
    GroupEnv sp = make_swap_product(c2.structure);
    sp.name = "SwapProdC2";
    sp.labels.emplace("a1", GroupValue::ext(GroupValue::tuple({GroupValue::finite(1),
                                                               GroupValue::finite(0)}),
                                            0));
    save_group_file(sp, (dir / "swapc2.group.json").string());
    write_text(dir / "swapc2_conj.sys", "vars X\neq X a1 X^-1 = s a1 s\n");
  }
  {
    // Q8 again, this time as an extension of C4 by C2 with a cocycle.
    GroupEnv c4 = make_finite_from_perms({{"r", Perm::from_cycles("(1 2 3 4)", 4)}}, 4);
    const FiniteGroup& g = c4.structure.finite()->group;
    std::vector<int> inv_map(g.order());
    for (int i = 0; i < g.order(); ++i) inv_map[i] = g.inv(i);
    GroupStructure::Extension ex;
    ex.base = Box<GroupStructure>(c4.structure);
    ex.quotient = FiniteGroup::closure({{"t", Perm::from_cycles("(1 2)", 2)}}, 2);
    ex.action.resize(2);
    ex.action[1] = Automorphism::finite_map(inv_map);
    ex.cocycle.assign(2, std::vector<GroupValue>(2, gid(c4.structure)));
    int r = g.generators().at("r");
    ex.cocycle[1][1] = GroupValue::finite(g.mul(r, r));  // t^2 = r^2
    GroupEnv env;
    env.name = "Q8ext";
    env.structure = GroupStructure(GroupStructure::Variant(std::move(ex)));
    validate_structure(env.structure);
    env.labels.emplace("r", GroupValue::ext(GroupValue::finite(r), 0));
    env.labels.emplace("t", GroupValue::ext(GroupValue::finite(0), 1));
    save_group_file(env, (dir / "q8ext.group.json").string());
    write_text(dir / "q8ext_sq.sys", "vars X\neq X X = r r\nneq X r^-1\nneq X r\n");
  }
  {
    GroupEnv wz;
    wz.name = "WreathZC2";
    wz.structure = build_wreath(GroupStructure{GroupStructure::FreeAbelian{1}},
                                FiniteGroup::closure({{"s", Perm::from_cycles("(1 2)", 2)}}, 2));
    wz.labels.emplace("x1",
                      GroupValue::ext(GroupValue::tuple({GroupValue::vector(vec1(1)),
                                                         GroupValue::vector(IntVec::Zero(1))}),
                                      0));
    wz.labels.emplace("x2",
                      GroupValue::ext(GroupValue::tuple({GroupValue::vector(IntVec::Zero(1)),
                                                         GroupValue::vector(vec1(1))}),
                                      0));
    wz.labels.emplace("s", GroupValue::ext(GroupValue::tuple({GroupValue::vector(IntVec::Zero(1)),
                                                              GroupValue::vector(IntVec::Zero(1))}),
                                           1));
    save_group_file(wz, (dir / "wreath_z_c2.group.json").string());
    write_text(dir / "wreath_balanced.sys", "vars Y\neq Y Y = x1 x2\nneq Y x1^-1\n");
  }

  std::cout << "corpus written to " << dir << "\n";
  return 0;
}
