#pragma once

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "skernel/simpset.hpp"

namespace skernel {

/// A nondegenerate bisimplex of horizontal degree p and vertical degree q.
struct BiCell {
  int p = 0;
  int q = 0;
  int index = 0;
  friend auto operator<=>(const BiCell&, const BiCell&) = default;
};

/// s^h_{H} s^v_{V} applied to a nondegenerate bisimplex; both words descending.
struct BiRef {
  std::vector<int> hword;
  std::vector<int> vword;
  BiCell base;

  int p() const { return base.p + static_cast<int>(hword.size()); }
  int q() const { return base.q + static_cast<int>(vword.size()); }
  static BiRef of(BiCell c) { return BiRef{{}, {}, c}; }
  friend auto operator<=>(const BiRef&, const BiRef&) = default;
};

/// Finite bisimplicial set stored through its nondegenerate bisimplices.
class BisimplicialSet {
 public:
  BisimplicialSet();

  int max_p() const;
  int max_q() const;
  std::size_t cell_count(int p, int q) const;
  const std::string& name(BiCell c) const;
  const BiRef& hface(BiCell c, int i) const;
  const BiRef& vface(BiCell c, int j) const;

  /// (θ_h, θ_v)*(x) in normal form.
  BiRef pullback(const BiRef& x, const delta::Map& theta_h, const delta::Map& theta_v) const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
  friend class BisimplicialSetBuilder;
};

class BisimplicialSetBuilder {
 public:
  BisimplicialSetBuilder();
  /// hfaces has p+1 entries of bidegree (p−1, q) when p > 0; vfaces has q+1 entries of
  /// bidegree (p, q−1) when q > 0.
  BiCell add_cell(int p, int q, std::string name, std::vector<BiRef> hfaces,
                  std::vector<BiRef> vfaces);
  /// Validates the horizontal and vertical identities and their commutation.
  BisimplicialSet build();

 private:
  struct State;
  std::shared_ptr<State> state_;
};

/// Vertically constant bisimplicial set with X in every row.
BisimplicialSet vertically_constant(const SimplicialSet& x);
/// (X ⊠ Y)_{p,q} = X_p × Y_q.
BisimplicialSet external_product(const SimplicialSet& x, const SimplicialSet& y);

struct DiagonalSpace {
  SimplicialSet object;
  /// Normal form (hword, vword, base) with disjoint words for each diagonal cell.
  std::vector<std::vector<BiRef>> cells;
  std::shared_ptr<const std::map<BiRef, CellId>> index;
  /// The diagonal simplex represented by a bisimplex of bidegree (n, n).
  SimplexRef ref(const BiRef& x) const;
};

/// Δ(B)_n = B_{n,n} with d_i = d^h_i d^v_i and s_j = s^h_j s^v_j.
DiagonalSpace diagonal(const BisimplicialSet& b);

}  // namespace skernel
