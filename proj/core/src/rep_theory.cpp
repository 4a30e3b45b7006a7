#include "isospec/rep_theory.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace isospec {

namespace {

GaussMatrix gm(std::initializer_list<std::initializer_list<GaussRational>> rows) {
  GaussMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (const auto& v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

GaussMatrix mat_pow(const GaussMatrix& m, int n) {
  GaussMatrix r = GaussMatrix::identity(m.rows());
  for (int k = 0; k < n; ++k) r = r * m;
  return r;
}

const GaussRational I = GaussRational::i();

}  // namespace

int CharacterTable::class_of(Element g) const {
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (std::binary_search(classes[c].members.begin(), classes[c].members.end(), g)) return static_cast<int>(c);
  throw std::invalid_argument("CharacterTable: element not in any class");
}

int CharacterTable::row_of(const std::string& irrep) const {
  auto it = std::find(irrep_names.begin(), irrep_names.end(), irrep);
  if (it == irrep_names.end()) throw std::invalid_argument("unknown irreducible representation: " + irrep);
  return static_cast<int>(it - irrep_names.begin());
}

const std::vector<std::string>& gerst_irrep_names() {
  static const std::vector<std::string> names = {"1",       "1^{+-+}", "1^{++-}", "1^{+--}", "1^-", "1^{--+}",
                                                 "1^{-+-}", "1^{---}", "W+",      "W-",      "X"};
  return names;
}

IrrepMatrices irreducible_matrices(const std::string& name_in) {
  std::string name = name_in;
  if (name == "1^{+++}") name = "1";
  if (name == "1^{-++}") name = "1^-";

  // One-dimensional: s, t, u act by the signs a, b, c.
  static const std::vector<std::pair<std::string, std::array<int, 3>>> linear = {
      {"1", {1, 1, 1}},        {"1^{+-+}", {1, -1, 1}},  {"1^{++-}", {1, 1, -1}},  {"1^{+--}", {1, -1, -1}},
      {"1^-", {-1, 1, 1}},     {"1^{--+}", {-1, -1, 1}}, {"1^{-+-}", {-1, 1, -1}}, {"1^{---}", {-1, -1, -1}}};
  for (const auto& [n, abc] : linear) {
    if (n == name) return {name, 1, gm({{abc[0]}}), gm({{abc[1]}}), gm({{abc[2]}})};
  }
  if (name == "W+") return {name, 2, gm({{I, 0}, {0, -I}}), gm({{0, 1}, {1, 0}}), gm({{0, 1}, {1, 0}})};
  if (name == "W-") return {name, 2, gm({{I, 0}, {0, -I}}), gm({{0, 1}, {1, 0}}), gm({{0, -1}, {-1, 0}})};
  if (name == "X") {
    // Action on Q[ζ] in the basis 1, ζ, ζ², ζ³ (ζ⁴ = -1).
    return {name, 4,
            gm({{0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}),
            gm({{1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, -1, 0}, {0, -1, 0, 0}}),
            gm({{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0}})};
  }
  throw std::invalid_argument("unknown irreducible representation: " + name_in);
}

GaussMatrix representation_matrix(const IrrepMatrices& rep, Element g) {
  const int i = g / 4;
  const int h = g % 4;
  GaussMatrix m = mat_pow(rep.s, i);
  if (h & 1) m = m * rep.t;
  if (h & 2) m = m * rep.u;
  return m;
}

bool satisfies_gerst_relations(const IrrepMatrices& rep) {
  const auto id = GaussMatrix::identity(rep.dim);
  return mat_pow(rep.s, 8) == id && rep.t * rep.t == id && rep.u * rep.u == id &&
         rep.t * rep.u == rep.u * rep.t && rep.t * rep.s * rep.t == mat_pow(rep.s, 7) &&
         rep.u * rep.s * rep.u == mat_pow(rep.s, 3);
}

CharacterTable character_table(const FiniteGroup& gerst) {
  if (gerst.order() != 32) throw std::invalid_argument("character_table: expects the Gerst group");
  CharacterTable table;
  table.group_order = gerst.order();
  const auto classes = conjugacy_classes(gerst);
  const auto cls = class_index(gerst, classes);
  const std::vector<std::pair<std::string, Element>> columns = {
      {"1", gerst_element(0, 0)},   {"s^4", gerst_element(4, 0)}, {"s^2", gerst_element(2, 0)},
      {"v", gerst_element(0, 3)},   {"s^2v", gerst_element(2, 3)}, {"s", gerst_element(1, 0)},
      {"t", gerst_element(0, 1)},   {"u", gerst_element(0, 2)},   {"st", gerst_element(1, 1)},
      {"su", gerst_element(1, 2)},  {"sv", gerst_element(1, 3)}};
  if (classes.size() != columns.size()) throw std::logic_error("character_table: unexpected class count");
  for (const auto& [name, rep] : columns) {
    table.classes.push_back(classes[cls[rep]]);
    table.class_names.push_back(name);
    table.class_sizes.push_back(static_cast<int>(classes[cls[rep]].members.size()));
  }
  for (const auto& name : gerst_irrep_names()) {
    const auto rep = irreducible_matrices(name);
    ClassFunction row;
    for (const auto& [cname, g] : columns) row.values.push_back(trace(representation_matrix(rep, g)));
    table.irrep_names.push_back(name);
    table.rows.push_back(std::move(row));
  }
  return table;
}

GaussRational inner_product(const CharacterTable& table, const ClassFunction& a, const ClassFunction& b) {
  if (a.values.size() != table.classes.size() || b.values.size() != table.classes.size())
    throw std::invalid_argument("inner_product: class function length mismatch");
  GaussRational sum(0);
  for (std::size_t c = 0; c < table.classes.size(); ++c)
    sum += GaussRational(table.class_sizes[c]) * a.values[c] * b.values[c].conj();
  return sum / GaussRational(table.group_order);
}

ClassFunction induced_character(const FiniteGroup& g, const Subgroup& h, const CharacterTable& table) {
  ClassFunction chi;
  for (const auto& c : table.classes) {
    const Element x = c.representative;
    // x fixes yH  <=>  y^-1 x y ∈ H; each fixed coset is counted |H| times.
    int count = 0;
    for (Element y = 0; y < g.order(); ++y)
      if (h.contains(g.mul(g.inv(y), g.mul(x, y)))) ++count;
    chi.values.push_back(GaussRational(Rational(count, h.order())));
  }
  return chi;
}

std::vector<int> decompose(const CharacterTable& table, const ClassFunction& chi) {
  std::vector<int> mult;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const GaussRational m = inner_product(table, chi, table.rows[r]);
    if (!m.is_real() || m.real().denominator() != 1 || m.real() < 0)
      throw std::domain_error("decompose: not a character (multiplicity " + to_string(m) + " for " +
                              table.irrep_names[r] + ")");
    mult.push_back(static_cast<int>(m.real().numerator()));
  }
  return mult;
}

PermRep perm_rep(const CosetAction& action) {
  PermRep p;
  p.degree = action.coset_count;
  for (const auto& perm : action.perm) {
    RationalMatrix m(p.degree, p.degree);
    for (int x = 0; x < p.degree; ++x) m(perm[x], x) = 1;
    p.matrices.push_back(std::move(m));
  }
  return p;
}

GaussMatrix central_idempotent(const FiniteGroup& g, const CharacterTable& table, const std::string& irrep,
                               const CosetAction& full_action) {
  if (static_cast<int>(full_action.generators.size()) != g.order())
    throw std::invalid_argument("central_idempotent: action must list every group element");
  const int row = table.row_of(irrep);
  const auto& chi = table.rows[row].values;
  const GaussRational dim = chi[0];
  const int n = full_action.coset_count;
  GaussMatrix eps(n, n);
  for (std::size_t k = 0; k < full_action.generators.size(); ++k) {
    const Element x = full_action.generators[k];
    const GaussRational coeff = chi[table.class_of(g.inv(x))];
    if (coeff.is_zero()) continue;
    for (int c = 0; c < n; ++c) eps(full_action.perm[k][c], c) += coeff;
  }
  return scaled(eps, dim / GaussRational(g.order()));
}

namespace {

RationalVector column_of(const GaussMatrix& m, int c) {
  RationalVector v;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (!m(r, c).is_real()) throw std::logic_error("idempotent_basis: non-real coefficient");
    v.push_back(m(r, c).real());
  }
  return v;
}

RationalVector lin(const RationalVector& a, Rational ca, const RationalVector& b, Rational cb) {
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = ca * a[i] + cb * b[i];
  return r;
}

}  // namespace

IdempotentBasis idempotent_basis(const FiniteGroup& gerst, const Subgroup& h, const CharacterTable& table) {
  std::vector<Element> all(gerst.order());
  for (Element x = 0; x < gerst.order(); ++x) all[x] = x;
  const auto action = coset_action(gerst, h, all, {}, gerst_coset_reps());
  const auto e1 = central_idempotent(gerst, table, "1", action);
  const auto e2 = central_idempotent(gerst, table, "1^-", action);
  const auto ew = central_idempotent(gerst, table, "W+", action);
  const auto ex = central_idempotent(gerst, table, "X", action);
  IdempotentBasis b;
  b.e = {column_of(e1, 0), column_of(e2, 0), column_of(ew, 0), column_of(ew, 1),
         column_of(ex, 0), column_of(ex, 1), column_of(ex, 2), column_of(ex, 3)};
  b.h = {b.e[0], b.e[1], b.e[2], b.e[3],
         lin(b.e[5], 1, b.e[7], -1), lin(b.e[4], 1, b.e[6], 1),
         lin(b.e[5], 1, b.e[7], 1), lin(b.e[4], -1, b.e[6], 1)};
  return b;
}

std::vector<RationalMatrix> intertwiner_space(const PermRep& p1, const PermRep& p2) {
  if (p1.matrices.size() != p2.matrices.size()) throw std::invalid_argument("intertwiner_space: generator mismatch");
  const int n1 = p1.degree;
  const int n2 = p2.degree;
  // Unknown A is n2 x n1, entry (i, j) at column i*n1 + j.
  const std::size_t unknowns = static_cast<std::size_t>(n1) * n2;
  RationalMatrix sys(p1.matrices.size() * unknowns, unknowns);
  std::size_t row = 0;
  for (std::size_t g = 0; g < p1.matrices.size(); ++g) {
    const auto& P1 = p1.matrices[g];
    const auto& P2 = p2.matrices[g];
    for (int i = 0; i < n2; ++i) {
      for (int j = 0; j < n1; ++j, ++row) {
        // (A P1)(i,j) - (P2 A)(i,j) = Σ_k A(i,k) P1(k,j) - Σ_k P2(i,k) A(k,j)
        for (int k = 0; k < n1; ++k)
          if (P1(k, j) != 0) sys(row, i * n1 + k) += P1(k, j);
        for (int k = 0; k < n2; ++k)
          if (P2(i, k) != 0) sys(row, k * n1 + j) -= P2(i, k);
      }
    }
  }
  std::vector<RationalMatrix> basis;
  for (const auto& v : null_space(sys)) {
    RationalMatrix a(n2, n1);
    for (int i = 0; i < n2; ++i)
      for (int j = 0; j < n1; ++j) a(i, j) = v[i * n1 + j];
    basis.push_back(std::move(a));
  }
  return basis;
}

int transplant_pattern(int r, int c) {
  static constexpr int kPattern[8][8] = {
      {0, 1, 2, 3, 0, 3, 2, 1}, {1, 0, 1, 2, 3, 0, 3, 2}, {2, 1, 0, 1, 2, 3, 0, 3}, {3, 2, 1, 0, 1, 2, 3, 0},
      {0, 3, 2, 1, 0, 1, 2, 3}, {3, 0, 3, 2, 1, 0, 1, 2}, {2, 3, 0, 3, 2, 1, 0, 1}, {1, 2, 3, 0, 3, 2, 1, 0}};
  return kPattern[r][c];
}

TransplantMatrix transplantation_matrix(Rational a, Rational b, Rational c, Rational d) {
  TransplantMatrix t;
  t.a = a;
  t.b = b;
  t.c = c;
  t.d = d;
  t.alpha = (a + b + 2 * c) / 8;
  t.beta = (a - b + 4 * d) / 8;
  t.gamma = (a + b - 2 * c) / 8;
  t.delta = (a - b - 4 * d) / 8;
  t.singular = a * b * c * d == 0;
  const Rational sym[4] = {t.alpha, t.beta, t.gamma, t.delta};
  t.entries = RationalMatrix(8, 8);
  for (int r = 0; r < 8; ++r)
    for (int col = 0; col < 8; ++col) t.entries(r, col) = sym[transplant_pattern(r, col)];
  return t;
}

std::array<Rational, 4> transplant_parameters(const RationalMatrix& m) {
  if (m.rows() != 8 || m.cols() != 8) throw std::invalid_argument("transplant_parameters: expects an 8x8 matrix");
  const Rational sym[4] = {m(0, 0), m(1, 0), m(2, 0), m(3, 0)};
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c)
      if (m(r, c) != sym[transplant_pattern(r, c)])
        throw std::invalid_argument("transplant_parameters: matrix does not follow the transplantation pattern");
  const Rational& alpha = sym[0];
  const Rational& beta = sym[1];
  const Rational& gamma = sym[2];
  const Rational& delta = sym[3];
  return {2 * (alpha + gamma + beta + delta), 2 * (alpha + gamma - beta - delta), 2 * (alpha - gamma),
          beta - delta};
}

namespace {

std::vector<std::vector<std::string>> table_cells(const CharacterTable& table, const std::vector<ClassFunction>& extra,
                                                  const std::vector<std::string>& extra_names) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{""};
  header.insert(header.end(), table.class_names.begin(), table.class_names.end());
  cells.push_back(header);
  auto add = [&](const std::string& name, const ClassFunction& f) {
    std::vector<std::string> row{name};
    for (const auto& v : f.values) row.push_back(to_string(v));
    cells.push_back(row);
  };
  for (std::size_t r = 0; r < table.rows.size(); ++r) add(table.irrep_names[r], table.rows[r]);
  for (std::size_t r = 0; r < extra.size(); ++r) add(r < extra_names.size() ? extra_names[r] : "extra", extra[r]);
  return cells;
}

}  // namespace

std::string format_character_table(const CharacterTable& table, const std::vector<ClassFunction>& extra_rows,
                                   const std::vector<std::string>& extra_names) {
  const auto cells = table_cells(table, extra_rows, extra_names);
  std::vector<std::size_t> width(cells[0].size(), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << (c == 0 ? "" : "  ") << std::setw(static_cast<int>(width[c])) << (c == 0 ? std::left : std::right)
         << row[c];
    }
    os << "\n";
  }
  return os.str();
}

std::string character_table_csv(const CharacterTable& table, const std::vector<ClassFunction>& extra_rows,
                                const std::vector<std::string>& extra_names) {
  auto cells = table_cells(table, extra_rows, extra_names);
  cells[0][0] = "irrep";
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << row[c];
    os << "\n";
  }
  return os.str();
}

nlohmann::json to_json(const RationalMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace isospec
