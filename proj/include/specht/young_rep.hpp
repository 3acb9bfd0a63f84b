#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "specht/algebra.hpp"
#include "specht/diagram.hpp"
#include "specht/linalg.hpp"
#include "specht/numbers.hpp"
#include "specht/partition.hpp"

namespace specht {

/// Young's natural representation: integer matrices on the standard
/// polytabloid basis, built by straightening inside the tabloid module.
class YoungNaturalRep {
 public:
  using SparseColumn = std::vector<std::pair<std::uint32_t, std::int64_t>>;

  /// Throws CapacityError if the dimension exceeds max_dimension.
  explicit YoungNaturalRep(const Partition& shape, std::size_t max_dimension = 1000);

  const Partition& shape() const { return shape_; }
  int degree() const { return n_; }
  std::size_t dimension() const { return tableaux_.size(); }
  /// Standard tableaux indexing the basis, labels in row-major cell order.
  const std::vector<std::vector<int>>& tableaux() const { return tableaux_; }

  /// Column k lists the coordinates of s_i e_{T_k}, s_i = (i i+1).
  const std::vector<SparseColumn>& adjacent(int i) const { return adjacent_[i - 1]; }
  linalg::Matrix<std::int64_t> adjacent_matrix(int i) const;

  /// rho(g) v.
  std::vector<Integer> apply(const Permutation& g, const std::vector<Integer>& v) const;
  /// rho(e) v for a sparse element with integer coefficients; twist
  /// multiplies each coefficient by the sign of its permutation.
  std::vector<Integer> apply(const AlgebraElement& e, const std::vector<Integer>& v, bool twist = false) const;
  std::vector<Integer> apply(const FactoredElement& f, const std::vector<Integer>& v, bool twist = false) const;

 private:
  std::vector<Integer> apply_adjacent(int i, const std::vector<Integer>& v) const;

  Partition shape_;
  int n_ = 0;
  std::vector<std::vector<int>> tableaux_;
  std::vector<std::vector<SparseColumn>> adjacent_;
};

/// Shared representations, built once per shape. Thread-safe.
const YoungNaturalRep& young_natural_rep(const Partition& shape);

/// Number of semistandard tableaux of the given shape and content.
std::uint64_t kostka_number(const Partition& shape, const std::vector<int>& content);

/// Multiplicity of the irreducible for lambda in S^d, computed as the rank of
/// the image of the Young symmetrizer of d in the natural representation.
std::int64_t multiplicity_targeted(const Diagram& d, const Partition& lambda);

/// All multiplicities of S^d by the targeted route.
MultiplicityVector decompose_targeted(const Diagram& d);

}  // namespace specht
