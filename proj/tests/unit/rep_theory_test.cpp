#include <gtest/gtest.h>

#include "isospec/rep_theory.hpp"

using namespace isospec;

namespace {

const FiniteGroup& gerst() {
  static const FiniteGroup g = build_gerst_group();
  return g;
}

const CharacterTable& table() {
  static const CharacterTable t = character_table(gerst());
  return t;
}

// Rows 1, 1^{+-+}, 1^{++-}, 1^{+--}, 1^-, 1^{--+}, 1^{-+-}, 1^{---}, W+, W-, X over
// classes 1, s^4, s^2, v, s^2v, s, t, u, st, su, sv.
const int kTable[11][11] = {
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {1, 1, 1, -1, -1, 1, -1, 1, -1, 1, -1},
    {1, 1, 1, -1, -1, 1, 1, -1, 1, -1, -1},
    {1, 1, 1, 1, 1, 1, -1, -1, -1, -1, 1},
    {1, 1, 1, 1, 1, -1, 1, 1, -1, -1, -1},
    {1, 1, 1, -1, -1, -1, -1, 1, 1, -1, 1},
    {1, 1, 1, -1, -1, -1, 1, -1, -1, 1, 1},
    {1, 1, 1, 1, 1, -1, -1, -1, 1, 1, -1},
    {2, 2, -2, 2, -2, 0, 0, 0, 0, 0, 0},
    {2, 2, -2, -2, 2, 0, 0, 0, 0, 0, 0},
    {4, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0},
};
const int kInduced[11] = {8, 0, 0, 4, 0, 0, 2, 2, 0, 0, 0};

ClassFunction from_ints(const int* v) {
  ClassFunction f;
  for (int i = 0; i < 11; ++i) f.values.emplace_back(v[i]);
  return f;
}

RationalVector apply(const RationalMatrix& m, const RationalVector& x) { return m * x; }

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

}  // namespace

TEST(CharacterTable, MatchesReferenceCellForCell) {
  const auto& t = table();
  ASSERT_EQ(t.rows.size(), 11u);
  ASSERT_EQ(t.classes.size(), 11u);
  for (int r = 0; r < 11; ++r)
    for (int c = 0; c < 11; ++c)
      EXPECT_EQ(t.rows[r].values[c], GaussRational(kTable[r][c])) << t.irrep_names[r] << " @ " << t.class_names[c];
}

TEST(CharacterTable, ColumnRepresentativesBelongToNamedClasses) {
  const auto& t = table();
  const Element s = gerst_element(1, 0), tt = gerst_element(0, 1), u = gerst_element(0, 2);
  const Element v = gerst().mul(tt, u);
  const auto& g = gerst();
  const std::vector<Element> reps = {g.identity(), g.power(s, 4), g.power(s, 2), v, g.mul(g.power(s, 2), v),
                                     s, tt, u, g.mul(s, tt), g.mul(s, u), g.mul(s, v)};
  for (int c = 0; c < 11; ++c) EXPECT_EQ(t.class_of(reps[c]), c) << t.class_names[c];
}

TEST(CharacterTable, XRowAtFirstThreeClasses) {
  const int x = table().row_of("X");
  EXPECT_EQ(table().rows[x].values[0], GaussRational(4));
  EXPECT_EQ(table().rows[x].values[1], GaussRational(-4));
  EXPECT_EQ(table().rows[x].values[2], GaussRational(0));
}

TEST(CharacterTable, WRowsAtV) {
  const int v = 3;
  EXPECT_EQ(table().rows[table().row_of("W+")].values[v], GaussRational(2));
  EXPECT_EQ(table().rows[table().row_of("W-")].values[v], GaussRational(-2));
}

TEST(CharacterTable, RowsAreOrthonormal) {
  const auto& t = table();
  for (std::size_t a = 0; a < t.rows.size(); ++a)
    for (std::size_t b = 0; b < t.rows.size(); ++b)
      EXPECT_EQ(inner_product(t, t.rows[a], t.rows[b]), GaussRational(a == b ? 1 : 0));
}

TEST(CharacterTable, ClassSizesSumToOrder) {
  int total = 0;
  for (int s : table().class_sizes) total += s;
  EXPECT_EQ(total, 32);
}

TEST(Irreps, WPlusGeneratorMatrices) {
  const auto w = irreducible_matrices("W+");
  ASSERT_EQ(w.dim, 2);
  EXPECT_EQ(w.s(0, 0), GaussRational::i());
  EXPECT_EQ(w.s(1, 1), -GaussRational::i());
  EXPECT_TRUE(w.s(0, 1).is_zero() && w.s(1, 0).is_zero());
  for (const auto* m : {&w.t, &w.u}) {
    EXPECT_TRUE((*m)(0, 0).is_zero() && (*m)(1, 1).is_zero());
    EXPECT_EQ((*m)(0, 1), GaussRational(1));
    EXPECT_EQ((*m)(1, 0), GaussRational(1));
  }
}

TEST(Irreps, XHasTracelessS) { EXPECT_TRUE(trace(irreducible_matrices("X").s).is_zero()); }

TEST(Irreps, XSatisfiesTstEqualsSSeven) {
  const auto x = irreducible_matrices("X");
  GaussMatrix s7 = GaussMatrix::identity(4);
  for (int i = 0; i < 7; ++i) s7 = s7 * x.s;
  EXPECT_EQ(x.t * x.s * x.t, s7);
}

TEST(Irreps, AllSatisfyRelations) {
  for (const auto& n : gerst_irrep_names()) EXPECT_TRUE(satisfies_gerst_relations(irreducible_matrices(n))) << n;
  EXPECT_THROW(irreducible_matrices("Y"), std::invalid_argument);
}

TEST(Irreps, RepresentationIsAHomomorphism) {
  const auto x = irreducible_matrices("X");
  for (int a = 0; a < 32; a += 3)
    for (int b = 0; b < 32; b += 5)
      EXPECT_EQ(representation_matrix(x, gerst().mul(a, b)), representation_matrix(x, a) * representation_matrix(x, b));
}

TEST(InducedCharacter, GammaOneMatchesReferenceRow) {
  EXPECT_EQ(induced_character(gerst(), gerst_gamma1(gerst()), table()), from_ints(kInduced));
}

TEST(InducedCharacter, GammaTwoEqualsGammaOne) {
  EXPECT_EQ(induced_character(gerst(), gerst_gamma2(gerst()), table()),
            induced_character(gerst(), gerst_gamma1(gerst()), table()));
}

TEST(InducedCharacter, WholeGroupGivesTrivialCharacter) {
  std::vector<Element> all(32);
  for (int i = 0; i < 32; ++i) all[i] = i;
  const auto chi = induced_character(gerst(), Subgroup(gerst(), all), table());
  for (const auto& v : chi.values) EXPECT_EQ(v, GaussRational(1));
}

TEST(Decompose, InducedCharacterSplitsIntoFourIrreducibles) {
  const auto m = decompose(table(), from_ints(kInduced));
  for (int r = 0; r < 11; ++r) {
    const auto& n = table().irrep_names[r];
    const bool in = n == "1" || n == "1^-" || n == "W+" || n == "X";
    EXPECT_EQ(m[r], in ? 1 : 0) << n;
  }
}

TEST(Decompose, TrivialCharacter) {
  const auto m = decompose(table(), table().rows[0]);
  EXPECT_EQ(m[0], 1);
  for (int r = 1; r < 11; ++r) EXPECT_EQ(m[r], 0);
}

TEST(Decompose, RegularCharacterGivesDimensions) {
  ClassFunction reg;
  reg.values.assign(11, GaussRational(0));
  reg.values[0] = GaussRational(32);
  const auto m = decompose(table(), reg);
  const std::vector<int> dims = {1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 4};
  EXPECT_EQ(m, dims);
}

TEST(Decompose, RejectsNonCharacter) {
  ClassFunction f;
  f.values.assign(11, GaussRational(0));
  f.values[0] = GaussRational(3);
  EXPECT_THROW(decompose(table(), f), std::domain_error);
}

TEST(Idempotents, EThreeIsAlternatingEvenCosets) {
  const auto b = idempotent_basis(gerst(), gerst_gamma1(gerst()), table());
  const RationalVector want = {q(1, 4), 0, q(-1, 4), 0, q(1, 4), 0, q(-1, 4), 0};
  EXPECT_EQ(b.e[2], want);
}

TEST(Idempotents, BasisMatchesClosedForms) {
  const auto b = idempotent_basis(gerst(), gerst_gamma1(gerst()), table());
  ASSERT_EQ(b.e.size(), 8u);
  for (int i = 0; i < 8; ++i) {
    EXPECT_EQ(b.e[0][i], q(1, 8));
    EXPECT_EQ(b.e[1][i], q(i % 2 ? -1 : 1, 8));
  }
  for (int j = 0; j < 4; ++j) {
    RationalVector want(8, Rational(0));
    want[j] = q(1, 2);
    want[j + 4] = q(-1, 2);
    EXPECT_EQ(b.e[4 + j], want);
  }
}

TEST(Idempotents, TrivialIdempotentFixesEOne) {
  std::vector<Element> all(32);
  for (int i = 0; i < 32; ++i) all[i] = i;
  const auto full = coset_action(gerst(), gerst_gamma1(gerst()), all, {}, gerst_coset_reps());
  const auto eps = central_idempotent(gerst(), table(), "1", full);
  const auto b = idempotent_basis(gerst(), gerst_gamma1(gerst()), table());
  for (int r = 0; r < 8; ++r) {
    GaussRational acc(0);
    for (int c = 0; c < 8; ++c) acc += eps(r, c) * GaussRational(b.e[0][c]);
    EXPECT_EQ(acc, GaussRational(b.e[0][r]));
  }
}

TEST(Idempotents, XSummandIsInvariant) {
  const auto gens = gerst_generators(gerst(), GeneratorSet::SigmaTU);
  const auto p = perm_rep(coset_action(gerst(), gerst_gamma1(gerst()), gens.elements, gens.labels, gerst_coset_reps()));
  const auto b = idempotent_basis(gerst(), gerst_gamma1(gerst()), table());
  for (const auto& m : p.matrices) {
    for (int j = 4; j < 8; ++j) {
      RationalMatrix stacked(8, 5);
      const auto image = apply(m, b.e[j]);
      for (int r = 0; r < 8; ++r) {
        for (int c = 0; c < 4; ++c) stacked(r, c) = b.e[4 + c][r];
        stacked(r, 4) = image[r];
      }
      EXPECT_EQ(rank(stacked), 4u);
    }
  }
}

namespace {

PermRep rep_for(const Subgroup& h) {
  const auto gens = gerst_generators(gerst(), GeneratorSet::SigmaTU);
  return perm_rep(coset_action(gerst(), h, gens.elements, gens.labels, gerst_coset_reps()));
}

}  // namespace

TEST(Intertwiners, SpaceHasDimensionFour) {
  EXPECT_EQ(intertwiner_space(rep_for(gerst_gamma1(gerst())), rep_for(gerst_gamma2(gerst()))).size(), 4u);
}

TEST(Intertwiners, BasisSatisfiesDefiningEquations) {
  const auto p1 = rep_for(gerst_gamma1(gerst()));
  const auto p2 = rep_for(gerst_gamma2(gerst()));
  for (const auto& a : intertwiner_space(p1, p2))
    for (std::size_t k = 0; k < p1.matrices.size(); ++k) EXPECT_EQ(a * p1.matrices[k], p2.matrices[k] * a);
}

TEST(Intertwiners, GenericElementHasSymbolPattern) {
  const auto m = transplantation_matrix(q(3), q(5), q(7), q(11));
  const std::vector<Rational> row0 = {m.alpha, m.beta, m.gamma, m.delta, m.alpha, m.delta, m.gamma, m.beta};
  for (int c = 0; c < 8; ++c) EXPECT_EQ(m.entries(0, c), row0[c]);
  EXPECT_EQ(m.alpha, q(3 + 5 + 14, 8));
  EXPECT_EQ(m.beta, q(3 - 5 + 44, 8));
  EXPECT_EQ(m.gamma, q(3 + 5 - 14, 8));
  EXPECT_EQ(m.delta, q(3 - 5 - 44, 8));
  const auto p1 = rep_for(gerst_gamma1(gerst()));
  const auto p2 = rep_for(gerst_gamma2(gerst()));
  for (std::size_t k = 0; k < p1.matrices.size(); ++k) EXPECT_EQ(m.entries * p1.matrices[k], p2.matrices[k] * m.entries);
  EXPECT_EQ(transplant_parameters(m.entries), (std::array<Rational, 4>{q(3), q(5), q(7), q(11)}));
}

TEST(Intertwiners, SpanEqualsParametrisedFamily) {
  const auto basis = intertwiner_space(rep_for(gerst_gamma1(gerst())), rep_for(gerst_gamma2(gerst())));
  for (const auto& a : basis) EXPECT_NO_THROW(transplant_parameters(a));
}

TEST(TransplantMatrix, DefaultParameters) {
  const auto m = transplantation_matrix(q(6), q(-2), q(2), q(2));
  EXPECT_EQ(m.alpha, q(1));
  EXPECT_EQ(m.beta, q(2));
  EXPECT_EQ(m.gamma, q(0));
  EXPECT_EQ(m.delta, q(0));
  EXPECT_FALSE(m.singular);
  const std::vector<int> col0 = {1, 2, 0, 0, 1, 0, 0, 2};
  for (int r = 0; r < 8; ++r) EXPECT_EQ(m.entries(r, 0), q(col0[r])) << r;
  EXPECT_NO_THROW(inverse(m.entries));
}

TEST(TransplantMatrix, DegenerateParametersAreFlagged) {
  const auto m = transplantation_matrix(q(8), q(0), q(0), q(0));
  EXPECT_EQ(m.gamma, m.alpha);
  EXPECT_EQ(m.delta, m.beta);
  EXPECT_TRUE(m.singular);
  EXPECT_THROW(inverse(m.entries), std::domain_error);
}

TEST(TransplantMatrix, NonPatternMatrixIsRejected) {
  EXPECT_THROW(transplant_parameters(RationalMatrix::identity(8)), std::invalid_argument);
}
