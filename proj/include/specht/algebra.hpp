#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "specht/diagram.hpp"
#include "specht/numbers.hpp"
#include "specht/permutation.hpp"

namespace specht {

/// Injective tableau: labels[k] is the label of the k-th cell of shape in
/// row-major order. As a permutation it sends position k+1 to labels[k].
class Tableau {
 public:
  Tableau() = default;
  /// Throws DomainError unless labels is a permutation of 1..|shape|.
  Tableau(Diagram shape, std::vector<int> labels);
  /// Labels given per cell, in any order.
  static Tableau from_cells(const Diagram& shape, const std::vector<std::pair<Cell, int>>& entries);
  static Tableau from_permutation(const Diagram& shape, const Permutation& p);
  /// Reference labeling: cell k carries label k+1.
  static Tableau reference(const Diagram& shape);

  const Diagram& shape() const { return shape_; }
  const std::vector<int>& labels() const { return labels_; }
  int size() const { return static_cast<int>(labels_.size()); }
  int at(Cell c) const;
  Cell cell_of(int label) const;
  Permutation as_permutation() const;

  /// Right action: position p receives the label T had at sigma(p).
  Tableau act_right(const Permutation& sigma) const;
  /// Left action: label l becomes pi(l).
  Tableau act_left(const Permutation& pi) const;
  /// Labels of boxes a and b exchanged.
  Tableau swapped(Cell a, Cell b) const;

  bool operator==(const Tableau& o) const { return labels_ == o.labels_ && shape_ == o.shape_; }
  bool operator<(const Tableau& o) const {
    return shape_ == o.shape_ ? labels_ < o.labels_ : shape_ < o.shape_;
  }

 private:
  Diagram shape_;
  std::vector<int> labels_;
};

/// "214/3/.5"-style rendering: rows joined by '/', '.' for empty cells, labels
/// above 9 in braces.
std::string to_string(const Tableau& t);

/// Sparse rational combination of permutations of {1..n}.
class AlgebraElement {
 public:
  using Terms = std::map<Permutation, Rational>;

  explicit AlgebraElement(int degree = 0) : degree_(degree) {}
  static AlgebraElement identity(int degree);
  static AlgebraElement single(const Permutation& p, const Rational& c = 1);

  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Permutation& p) const;

  void add(const Permutation& p, const Rational& c);
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator*(const AlgebraElement& o) const;
  AlgebraElement operator*(const Rational& c) const;
  /// Left and right multiplication by a group element.
  AlgebraElement left(const Permutation& g) const;
  AlgebraElement right(const Permutation& g) const;

  bool operator==(const AlgebraElement& o) const { return degree_ == o.degree_ && terms_ == o.terms_; }

 private:
  int degree_;
  Terms terms_;
};

/// Ordered product of sparse factors, expanded only on request.
struct FactoredElement {
  int degree = 0;
  std::vector<AlgebraElement> factors;

  AlgebraElement expand() const;
};

/// Sum (or signed sum) over all permutations of the given positions, as the
/// coset product (1 +- sum_{a<k} (p_a p_k)) over k, largest k leftmost.
FactoredElement symmetrizer(int degree, const std::vector<int>& positions, bool signed_sum);

/// Sum over the row group of d, one symmetrizer per row.
FactoredElement row_group_sum(const Diagram& d);
/// Signed sum over the column group of d.
FactoredElement column_group_signed_sum(const Diagram& d);
/// e_T = T * signed column sum * row sum, expanded.
AlgebraElement specht_vector(const Tableau& t);

/// Positions (1-based reference labels) of the cells of each row / column.
std::vector<std::vector<int>> row_positions(const Diagram& d);
std::vector<std::vector<int>> column_positions(const Diagram& d);

// ---------------------------------------------------------------------------
// Dense integer vectors over the whole group, indexed by permutation rank.

using DenseVector = std::vector<std::int64_t>;

DenseVector to_dense(const AlgebraElement& e);
/// Replaces v by g * v.
DenseVector left_multiply(const PermutationSpace& space, const Permutation& g, const DenseVector& v);
DenseVector right_multiply(const PermutationSpace& space, const DenseVector& v, const Permutation& g);
/// f * v for a factored element with integer coefficients.
DenseVector left_apply(const PermutationSpace& space, const FactoredElement& f, const DenseVector& v);

/// Signed column sum times row sum of d as a dense vector.
DenseVector young_symmetrizer_dense(const Diagram& d);
/// Dense e_T, obtained by reindexing the symmetrizer of T's shape.
DenseVector specht_vector_dense(const Tableau& t, const DenseVector& symmetrizer);

}  // namespace specht
