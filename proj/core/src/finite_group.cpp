#include "isospec/finite_group.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace isospec {

FiniteGroup::FiniteGroup(std::vector<std::vector<Element>> mul, std::vector<std::string> names)
    : mul_(std::move(mul)), names_(std::move(names)) {
  const int n = static_cast<int>(mul_.size());
  if (n == 0) throw std::invalid_argument("FiniteGroup: empty table");
  if (n > 4096) throw std::invalid_argument("FiniteGroup: order exceeds 4096");
  for (const auto& row : mul_) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("FiniteGroup: table is not square");
    for (Element x : row)
      if (x < 0 || x >= n) throw std::invalid_argument("FiniteGroup: entry out of range");
  }

  int ident = -1;
  for (int e = 0; e < n && ident < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = mul_[e][x] == x && mul_[x][e] == x;
    if (ok) ident = e;
  }
  if (ident < 0) throw std::invalid_argument("FiniteGroup: no identity element");
  identity_ = ident;

  inv_.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (mul_[x][y] == identity_) {
        if (mul_[y][x] != identity_) throw std::invalid_argument("FiniteGroup: one-sided inverse");
        inv_[x] = y;
        break;
      }
    }
    if (inv_[x] < 0) throw std::invalid_argument("FiniteGroup: element without inverse");
  }

  // Exhaustive associativity is affordable for the groups this library targets.
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
            throw std::invalid_argument("FiniteGroup: multiplication is not associative");
  }

  if (names_.empty()) {
    names_.resize(n);
    for (int x = 0; x < n; ++x) names_[x] = "g" + std::to_string(x);
  } else if (static_cast<int>(names_.size()) != n) {
    throw std::invalid_argument("FiniteGroup: name count does not match order");
  }
}

Element FiniteGroup::power(Element a, int n) const {
  Element r = identity_;
  Element base = n < 0 ? inv(a) : a;
  for (int k = 0; k < std::abs(n); ++k) r = mul(r, base);
  return r;
}

int FiniteGroup::element_order(Element a) const {
  int k = 1;
  for (Element x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

Element FiniteGroup::by_name(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw std::invalid_argument("unknown group element: " + name);
  return static_cast<Element>(it - names_.begin());
}

FiniteGroup trivial_group() { return FiniteGroup({{0}}, {"1"}); }

FiniteGroup cyclic_group(int n) {
  if (n <= 0) throw std::invalid_argument("cyclic_group: order must be positive");
  std::vector<std::vector<Element>> mul(n, std::vector<Element>(n));
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    names[a] = a == 0 ? "1" : (a == 1 ? "a" : "a^" + std::to_string(a));
    for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  }
  return FiniteGroup(std::move(mul), std::move(names));
}

namespace {

// Exponent by which h in {1, t, u, tu} acts on s: h s h^-1 = s^k.
constexpr std::array<int, 4> kGerstMultiplier = {1, 7, 3, 5};
constexpr std::array<const char*, 4> kGerstHName = {"", "t", "u", "tu"};

std::string gerst_name(int i, int h) {
  std::string s;
  if (i == 1) s = "s";
  if (i > 1) s = "s^" + std::to_string(i);
  if (h == 0) return s.empty() ? "1" : s;
  if (s.empty()) return kGerstHName[h];
  return s + "·" + kGerstHName[h];
}

}  // namespace

Element gerst_element(int s_power, int h) { return 4 * (((s_power % 8) + 8) % 8) + h; }

FiniteGroup build_gerst_group() {
  std::vector<std::vector<Element>> mul(32, std::vector<Element>(32));
  std::vector<std::string> names(32);
  for (int i = 0; i < 8; ++i) {
    for (int h = 0; h < 4; ++h) {
      const Element a = gerst_element(i, h);
      names[a] = gerst_name(i, h);
      for (int j = 0; j < 8; ++j) {
        for (int k = 0; k < 4; ++k) {
          // s^i h s^j k = s^(i + m(h) j) (h k); the Klein group composes by xor.
          mul[a][gerst_element(j, k)] = gerst_element(i + kGerstMultiplier[h] * j, h ^ k);
        }
      }
    }
  }
  return FiniteGroup(std::move(mul), std::move(names));
}

Subgroup::Subgroup(const FiniteGroup& group, std::vector<Element> elements)
    : parent_(&group), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (Element x : elements_)
    if (x < 0 || x >= group.order()) throw std::invalid_argument("Subgroup: element out of range");
  if (!contains(group.identity())) throw std::invalid_argument("Subgroup: missing identity");
  for (Element a : elements_) {
    if (!contains(group.inv(a))) throw std::invalid_argument("Subgroup: not closed under inverses");
    for (Element b : elements_)
      if (!contains(group.mul(a, b))) throw std::invalid_argument("Subgroup: not closed under multiplication");
  }
}

Subgroup Subgroup::generated_by(const FiniteGroup& group, const std::vector<Element>& generators) {
  std::vector<bool> in(group.order(), false);
  std::vector<Element> members{group.identity()};
  in[group.identity()] = true;
  for (std::size_t idx = 0; idx < members.size(); ++idx) {
    for (Element g : generators) {
      const Element x = group.mul(g, members[idx]);
      if (!in[x]) {
        in[x] = true;
        members.push_back(x);
      }
    }
  }
  return Subgroup(group, std::move(members));
}

bool Subgroup::contains(Element g) const { return std::binary_search(elements_.begin(), elements_.end(), g); }

Subgroup gerst_gamma1(const FiniteGroup& gerst) {
  return Subgroup(gerst, {gerst_element(0, 0), gerst_element(0, 1), gerst_element(0, 2), gerst_element(0, 3)});
}

Subgroup gerst_gamma2(const FiniteGroup& gerst) {
  return Subgroup(gerst, {gerst_element(0, 0), gerst_element(0, 1), gerst_element(4, 2), gerst_element(4, 3)});
}

Subgroup gerst_cyclic8(const FiniteGroup& gerst) { return Subgroup::generated_by(gerst, {gerst_element(1, 0)}); }

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<ConjugacyClass> classes;
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    ConjugacyClass c{x, {}};
    for (Element y = 0; y < g.order(); ++y) {
      const Element z = g.conjugate(y, x);
      if (!seen[z]) {
        seen[z] = true;
        c.members.push_back(z);
      }
    }
    std::sort(c.members.begin(), c.members.end());
    classes.push_back(std::move(c));
  }
  return classes;
}

std::vector<int> class_index(const FiniteGroup& g, const std::vector<ConjugacyClass>& classes) {
  std::vector<int> idx(g.order(), -1);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (Element x : classes[c].members) idx[x] = static_cast<int>(c);
  return idx;
}

AlmostConjugacyVerdict almost_conjugate(const FiniteGroup& g, const Subgroup& h1, const Subgroup& h2) {
  const auto classes = conjugacy_classes(g);
  const auto cls = class_index(g, classes);
  AlmostConjugacyVerdict v;
  v.counts1.assign(classes.size(), 0);
  v.counts2.assign(classes.size(), 0);
  for (Element x : h1.elements()) ++v.counts1[cls[x]];
  for (Element x : h2.elements()) ++v.counts2[cls[x]];
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (v.counts1[c] != v.counts2[c]) {
      v.failing_class = static_cast<int>(c);
      return v;
    }
  }
  v.almost_conjugate = true;

  // Pair up the elements of H1 ∩ C and H2 ∩ C in ascending order, class by class.
  for (std::size_t c = 0; c < classes.size(); ++c) {
    std::vector<Element> a, b;
    for (Element x : h1.elements())
      if (cls[x] == static_cast<int>(c)) a.push_back(x);
    for (Element x : h2.elements())
      if (cls[x] == static_cast<int>(c)) b.push_back(x);
    for (std::size_t k = 0; k < a.size(); ++k) {
      Element conj = -1;
      for (Element y = 0; y < g.order() && conj < 0; ++y)
        if (g.conjugate(y, a[k]) == b[k]) conj = y;
      v.witness.push_back({a[k], b[k], conj});
    }
  }
  return v;
}

std::optional<Element> conjugating_element(const FiniteGroup& g, const Subgroup& h1, const Subgroup& h2) {
  if (h1.order() != h2.order()) return std::nullopt;
  for (Element y = 0; y < g.order(); ++y) {
    bool ok = true;
    for (Element x : h1.elements()) {
      if (!h2.contains(g.conjugate(y, x))) {
        ok = false;
        break;
      }
    }
    if (ok) return y;
  }
  return std::nullopt;
}

bool are_conjugate_subgroups(const FiniteGroup& g, const Subgroup& h1, const Subgroup& h2) {
  return conjugating_element(g, h1, h2).has_value();
}

bool CosetAction::is_involutive(std::size_t k) const {
  for (int x = 0; x < coset_count; ++x)
    if (perm[k][perm[k][x]] != x) return false;
  return true;
}

bool CosetAction::is_transitive() const {
  if (coset_count == 0) return true;
  std::vector<bool> seen(coset_count, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (const auto& p : perm) {
      if (!seen[p[x]]) {
        seen[p[x]] = true;
        ++reached;
        stack.push_back(p[x]);
      }
    }
  }
  return reached == coset_count;
}

CosetAction coset_action(const FiniteGroup& g, const Subgroup& h, const std::vector<Element>& generators,
                         const std::vector<std::string>& labels, const std::vector<Element>& reps) {
  if (&h.parent() != &g) {
    // Rebuild membership against g to make sure h really is a subgroup of g.
    Subgroup check(g, h.elements());
    (void)check;
  }
  if (!labels.empty() && labels.size() != generators.size())
    throw std::invalid_argument("coset_action: label count does not match generator count");
  for (Element x : generators)
    if (x < 0 || x >= g.order()) throw std::invalid_argument("coset_action: generator out of range");

  // coset_of[x] = coset index of x·H
  std::vector<int> coset_of(g.order(), -1);
  CosetAction a;
  auto claim = [&](Element rep) {
    const int idx = static_cast<int>(a.reps.size());
    for (Element y : h.elements()) {
      const Element z = g.mul(rep, y);
      if (coset_of[z] >= 0) throw std::invalid_argument("coset_action: representatives are not a transversal");
      coset_of[z] = idx;
    }
    a.reps.push_back(rep);
  };
  if (reps.empty()) {
    for (Element x = 0; x < g.order(); ++x)
      if (coset_of[x] < 0) claim(x);
  } else {
    for (Element r : reps) claim(r);
    if (std::find(coset_of.begin(), coset_of.end(), -1) != coset_of.end())
      throw std::invalid_argument("coset_action: representatives do not cover G");
  }
  a.coset_count = static_cast<int>(a.reps.size());
  a.generators = generators;
  a.generator_labels = labels;
  if (a.generator_labels.empty())
    for (Element x : generators) a.generator_labels.push_back(g.name(x));
  for (Element s : generators) {
    std::vector<int> p(a.coset_count);
    for (int c = 0; c < a.coset_count; ++c) p[c] = coset_of[g.mul(s, a.reps[c])];
    a.perm.push_back(std::move(p));
  }
  return a;
}

std::vector<Element> gerst_coset_reps() {
  std::vector<Element> reps;
  for (int i = 0; i < 8; ++i) reps.push_back(gerst_element(i, 0));
  return reps;
}

NamedGenerators gerst_generators(const FiniteGroup& gerst, GeneratorSet set) {
  const Element s = gerst_element(1, 0);
  const Element t = gerst_element(0, 1);
  const Element u = gerst_element(0, 2);
  const Element st = gerst.mul(s, t);
  if (set == GeneratorSet::SigmaTU) return {{st, t, u}, {"Σ", "T", "U"}};
  return {{st, t, gerst.mul(t, u)}, {"Σ", "T", "U"}};
}

nlohmann::json to_json(const FiniteGroup& g) {
  nlohmann::json j;
  j["order"] = g.order();
  j["identity"] = g.identity();
  std::vector<std::string> names;
  std::vector<Element> inv;
  for (Element x = 0; x < g.order(); ++x) {
    names.push_back(g.name(x));
    inv.push_back(g.inv(x));
  }
  j["names"] = names;
  j["inv"] = inv;
  j["mul"] = g.table();
  return j;
}

nlohmann::json to_json(const Subgroup& h) {
  nlohmann::json j;
  j["elements"] = h.elements();
  std::vector<std::string> names;
  for (Element x : h.elements()) names.push_back(h.parent().name(x));
  j["names"] = names;
  return j;
}

nlohmann::json to_json(const CosetAction& a) {
  nlohmann::json j;
  j["coset_count"] = a.coset_count;
  j["reps"] = a.reps;
  j["generators"] = a.generators;
  j["labels"] = a.generator_labels;
  j["perm"] = a.perm;
  return j;
}

nlohmann::json to_json(const FiniteGroup& g, const AlmostConjugacyVerdict& v) {
  nlohmann::json j;
  j["almost_conjugate"] = v.almost_conjugate;
  j["class_counts_h1"] = v.counts1;
  j["class_counts_h2"] = v.counts2;
  if (v.failing_class) j["failing_class"] = *v.failing_class;
  nlohmann::json w = nlohmann::json::array();
  for (const auto& e : v.witness)
    w.push_back({{"from", g.name(e.from)}, {"to", g.name(e.to)}, {"conjugator", g.name(e.conjugator)}});
  j["witness"] = w;
  return j;
}

}  // namespace isospec
