#pragma once

#include <array>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "isospec/exact.hpp"
#include "isospec/finite_group.hpp"

namespace isospec {

/// Values of a class function, indexed by the classes of a CharacterTable.
struct ClassFunction {
  std::vector<GaussRational> values;
  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;
};

struct CharacterTable {
  int group_order = 0;
  std::vector<ConjugacyClass> classes;
  std::vector<std::string> class_names;
  std::vector<int> class_sizes;
  std::vector<std::string> irrep_names;
  std::vector<ClassFunction> rows;

  /// Column index of the class containing g.
  int class_of(Element g) const;
  int row_of(const std::string& irrep) const;
};

/// Irreducible representation of the Gerst group given by the images of s, t, u.
struct IrrepMatrices {
  std::string name;
  int dim = 0;
  GaussMatrix s, t, u;
};

/// Names in the row order of the character table: the eight 1^{abc}, W+, W-, X.
const std::vector<std::string>& gerst_irrep_names();

/// Throws std::invalid_argument for an unknown name. Accepts "1^{+++}" and
/// "1^{-++}" as aliases of "1" and "1^-".
IrrepMatrices irreducible_matrices(const std::string& name);

/// Image of the Gerst element s^i·h.
GaussMatrix representation_matrix(const IrrepMatrices& rep, Element g);

/// Checks s^8 = t^2 = u^2 = [t,u] = 1, tst = s^7, usu = s^3.
bool satisfies_gerst_relations(const IrrepMatrices& rep);

/// Character table of the Gerst group, columns in the order
/// 1, s^4, s^2, v, s^2v, s, t, u, st, su, sv (v = tu), built from traces of the
/// irreducible matrices.
CharacterTable character_table(const FiniteGroup& gerst);

/// ⟨χ,ψ⟩ = (1/|G|) Σ_g χ(g) conj(ψ(g)).
GaussRational inner_product(const CharacterTable& table, const ClassFunction& a, const ClassFunction& b);

/// Character of C[G/H] on the table's classes: number of cosets fixed by g.
ClassFunction induced_character(const FiniteGroup& g, const Subgroup& h, const CharacterTable& table);

/// Multiplicity of each irreducible; throws std::domain_error if χ is not a character.
std::vector<int> decompose(const CharacterTable& table, const ClassFunction& chi);

/// 0/1 matrices of the coset permutation representation, one per generator of
/// the action; column x has its 1 in row perm[x].
struct PermRep {
  int degree = 0;
  std::vector<RationalMatrix> matrices;
};

PermRep perm_rep(const CosetAction& action);

/// Primitive central idempotent ε_V acting on C[G/H] (coset basis).
GaussMatrix central_idempotent(const FiniteGroup& g, const CharacterTable& table, const std::string& irrep,
                               const CosetAction& full_action);

struct IdempotentBasis {
  /// e_1..e_8 (or f_1..f_8): ε_1 u_0, ε_{1-} u_0, ε_{W+} u_0, ε_{W+} u_1, ε_X u_0..u_3.
  std::vector<RationalVector> e;
  /// h_i = f_i for i <= 4; h5 = f6-f8, h6 = f5+f7, h7 = f6+f8, h8 = -f5+f7.
  std::vector<RationalVector> h;
};

/// H must be Γ1 or Γ2 of the Gerst group (cosets represented by 1, s, ..., s^7).
IdempotentBasis idempotent_basis(const FiniteGroup& gerst, const Subgroup& h, const CharacterTable& table);

/// Basis of {A : A P1(g) = P2(g) A for all generators g}.
std::vector<RationalMatrix> intertwiner_space(const PermRep& p1, const PermRep& p2);

struct TransplantMatrix {
  Rational a, b, c, d;
  Rational alpha, beta, gamma, delta;
  RationalMatrix entries;
  bool singular = false;
};

/// The 8x8 intertwiner with α=(a+b+2c)/8, β=(a-b+4d)/8, γ=(a+b-2c)/8, δ=(a-b-4d)/8.
/// `singular` is set when abcd = 0.
TransplantMatrix transplantation_matrix(Rational a, Rational b, Rational c, Rational d);

/// Recovers (a, b, c, d) when `m` has the α/β/γ/δ pattern; throws std::invalid_argument otherwise.
std::array<Rational, 4> transplant_parameters(const RationalMatrix& m);

/// Symbol index (0=α, 1=β, 2=γ, 3=δ) at row r, column c of the pattern.
int transplant_pattern(int r, int c);

std::string format_character_table(const CharacterTable& table, const std::vector<ClassFunction>& extra_rows = {},
                                   const std::vector<std::string>& extra_names = {});
std::string character_table_csv(const CharacterTable& table, const std::vector<ClassFunction>& extra_rows = {},
                                const std::vector<std::string>& extra_names = {});

nlohmann::json to_json(const RationalMatrix& m);

}  // namespace isospec
