#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skernel/simpset.hpp"

namespace skernel {

/// Edge-path presentation of the fundamental groupoid: objects are the 0-cells,
/// generators the nondegenerate 1-cells, one relation per nondegenerate 2-cell.
struct GroupoidPresentation {
  struct Generator {
    std::string name;
    int source = 0;  // vertex of ∂₁
    int target = 0;  // vertex of ∂₀
    friend auto operator<=>(const Generator&, const Generator&) = default;
  };
  /// Arrow of a relation: a generator index, or nullopt for the identity of `vertex`.
  struct Arrow {
    std::optional<int> generator;
    int vertex = 0;
    friend auto operator<=>(const Arrow&, const Arrow&) = default;
  };
  /// composite = second ∘ first, read from a 2-cell τ as (∂₁τ, ∂₀τ, ∂₂τ).
  struct Relation {
    Arrow composite;
    Arrow second;
    Arrow first;
    /// True when the relation holds formally (an identity factor and matching sides).
    bool trivial() const;
    friend auto operator<=>(const Relation&, const Relation&) = default;
  };

  std::vector<std::string> objects;
  std::vector<Generator> generators;
  std::vector<Relation> relations;
};

GroupoidPresentation groupoid_presentation(const SimplicialSet& x);

/// The arrow assigned to a 1-simplex (identity for degenerate ones).
GroupoidPresentation::Arrow arrow_of(const SimplicialSet& x, const SimplexRef& edge);

/// Letters are ±(g+1) for generator g and its inverse.
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<std::vector<int>> relators;
};

/// Vertex group at `base`, by contracting a spanning tree of its component.
GroupPresentation pi1_presentation(const SimplicialSet& x, CellId base);

/// Free and cyclic reduction, removal of trivial relators and generators that can
/// be solved for (single occurrence with exponent ±1).
GroupPresentation simplify(const GroupPresentation& g);

HomologyGroup abelianization(const GroupPresentation& g);

/// Finite group given by its multiplication table, identity at index 0.
struct FiniteGroup {
  std::string name;
  std::vector<std::vector<int>> table;
  std::vector<int> inverse;
  int order() const { return static_cast<int>(table.size()); }
};

/// All groups of order ≤ 6 up to isomorphism: Z1, Z2, Z3, Z4, Z2², Z5, Z6, S3.
const std::vector<FiniteGroup>& small_groups();

/// Number of homomorphisms from the presented group into g, or nullopt when the
/// search space exceeds `limit` assignments.
std::optional<long long> count_homs(const GroupPresentation& p, const FiniteGroup& g,
                                    long long limit = 2'000'000);

}  // namespace skernel
