#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace isospec {

using Element = int;

/// A finite group stored as its full multiplication table.
///
/// Elements are the integers 0..order()-1. The table is validated on
/// construction (closure, identity, inverses, associativity), so every
/// FiniteGroup instance satisfies the group axioms.
class FiniteGroup {
 public:
  /// Throws std::invalid_argument if `mul` is not the table of a group.
  FiniteGroup(std::vector<std::vector<Element>> mul, std::vector<std::string> names = {});

  int order() const { return static_cast<int>(mul_.size()); }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return mul_[a][b]; }
  Element inv(Element a) const { return inv_[a]; }
  Element conjugate(Element g, Element x) const { return mul(mul(g, x), inv(g)); }
  Element power(Element a, int n) const;
  int element_order(Element a) const;

  const std::string& name(Element a) const { return names_[a]; }
  /// Looks up an element by display name; throws if absent.
  Element by_name(const std::string& name) const;

  const std::vector<std::vector<Element>>& table() const { return mul_; }

 private:
  std::vector<std::vector<Element>> mul_;
  std::vector<Element> inv_;
  std::vector<std::string> names_;
  Element identity_ = 0;
};

FiniteGroup trivial_group();
FiniteGroup cyclic_group(int n);

/// Z8 ⋊ Aut(Z8): pairs (i, h) with i in Z8 and h in {1, t, u, tu},
/// where t acts by s -> s^7 and u by s -> s^3. Element index is 4*i + h.
FiniteGroup build_gerst_group();

/// Index of s^i·h in the Gerst group; h is 0..3 for {1, t, u, tu}.
Element gerst_element(int s_power, int h);

class Subgroup {
 public:
  /// Validates closure; throws std::invalid_argument otherwise.
  Subgroup(const FiniteGroup& group, std::vector<Element> elements);

  static Subgroup generated_by(const FiniteGroup& group, const std::vector<Element>& generators);

  const FiniteGroup& parent() const { return *parent_; }
  const std::vector<Element>& elements() const { return elements_; }
  int order() const { return static_cast<int>(elements_.size()); }
  bool contains(Element g) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements_ == b.elements_; }

 private:
  const FiniteGroup* parent_;
  std::vector<Element> elements_;  // sorted
};

/// Γ1 = {1, t, u, tu}
Subgroup gerst_gamma1(const FiniteGroup& gerst);
/// Γ2 = {1, t, s^4 u, s^4 tu}
Subgroup gerst_gamma2(const FiniteGroup& gerst);
/// ⟨s⟩, cyclic of order 8
Subgroup gerst_cyclic8(const FiniteGroup& gerst);

struct ConjugacyClass {
  Element representative;         // least member
  std::vector<Element> members;   // sorted
};

/// Classes ordered by representative.
std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g);
/// class_index[x] = index into conjugacy_classes(g) of the class containing x.
std::vector<int> class_index(const FiniteGroup& g, const std::vector<ConjugacyClass>& classes);

struct AlmostConjugacyVerdict {
  bool almost_conjugate = false;
  /// Pairs (γ, γ') with γ' = g γ g^-1 for the listed conjugator g.
  struct WitnessEntry {
    Element from;
    Element to;
    Element conjugator;
  };
  std::vector<WitnessEntry> witness;
  /// Per class: |H1 ∩ C| and |H2 ∩ C|.
  std::vector<int> counts1;
  std::vector<int> counts2;
  std::optional<int> failing_class;
};

AlmostConjugacyVerdict almost_conjugate(const FiniteGroup& g, const Subgroup& h1, const Subgroup& h2);

/// Exhaustive search for g with g H1 g^-1 = H2. Returns the conjugator if one exists.
std::optional<Element> conjugating_element(const FiniteGroup& g, const Subgroup& h1, const Subgroup& h2);
bool are_conjugate_subgroups(const FiniteGroup& g, const Subgroup& h1, const Subgroup& h2);

/// Left multiplication action of chosen generators on the left cosets G/H.
struct CosetAction {
  int coset_count = 0;
  std::vector<Element> reps;
  std::vector<Element> generators;
  std::vector<std::string> generator_labels;
  /// perm[k][x] = index of the coset generators[k]·reps[x]·H.
  std::vector<std::vector<int>> perm;

  bool is_involutive(std::size_t k) const;
  bool is_transitive() const;
};

/// Representatives default to the least element of each coset, cosets
/// ordered by that element. Explicit representatives must form a transversal.
CosetAction coset_action(const FiniteGroup& g, const Subgroup& h, const std::vector<Element>& generators,
                         const std::vector<std::string>& labels = {},
                         const std::vector<Element>& reps = {});

/// The transversal 1, s, ..., s^7 used for both Gerst subgroups.
std::vector<Element> gerst_coset_reps();

enum class GeneratorSet { SigmaTU, StTTu };

struct NamedGenerators {
  std::vector<Element> elements;
  std::vector<std::string> labels;
};

/// {σ=st, t, u} labeled Σ,T,U or {st, t, tu} labeled Σ,T,U.
NamedGenerators gerst_generators(const FiniteGroup& gerst, GeneratorSet set);

nlohmann::json to_json(const FiniteGroup& g);
nlohmann::json to_json(const Subgroup& h);
nlohmann::json to_json(const CosetAction& a);
nlohmann::json to_json(const FiniteGroup& g, const AlmostConjugacyVerdict& v);

}  // namespace isospec
