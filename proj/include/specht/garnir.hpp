#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "specht/algebra.hpp"
#include "specht/diagram.hpp"
#include "specht/transversal.hpp"

namespace specht {

/// Columns j_1..j_{m+1} and disjoint box sets A_1..A_m, A_i inside columns
/// j_i and j_{i+1}.
struct GarnirDatum {
  std::vector<int> columns;
  std::vector<BoxSet> sets;

  int total() const;
  /// Index of the set holding c, or -1.
  int set_of(Cell c) const;
  auto operator<=>(const GarnirDatum&) const = default;
};

std::string to_string(const GarnirDatum& g);

/// Throws DomainError unless g is structurally well formed inside d.
void check_garnir_structure(const Diagram& d, const GarnirDatum& g);
/// c_{j_1} + ... + c_{j_{m+1}} - c, measured in d.
int garnir_bound(const Diagram& d, const GarnirDatum& g);
/// The strict inequality total() > garnir_bound(d, g). Throws on malformed data.
bool validate_garnir(const Diagram& d, const GarnirDatum& g);
/// Valid, and no proper run A_i..A_j (with columns j_i..j_{j+1}) is valid.
bool is_minimal(const Diagram& d, const GarnirDatum& g);

/// g with box x removed from its set.
GarnirDatum without_box(const GarnirDatum& g, Cell x);
/// Same sets and columns listed in the opposite order.
GarnirDatum reversed(const GarnirDatum& g);

/// Signed sum over the stabilizer of the sets, one symmetrizer per set.
FactoredElement stab_signed_sum(const Diagram& d, const GarnirDatum& g);
/// T * signed stabilizer sum * signed column sum * row sum. Throws on invalid data.
AlgebraElement garnir_element(const Tableau& t, const GarnirDatum& g);
/// The same relation summed over left coset representatives of
/// (stabilizer meet column group) only.
AlgebraElement coset_garnir_element(const Tableau& t, const GarnirDatum& g);
/// Dense T * signed stabilizer sum * symmetrizer, no validity check.
DenseVector garnir_element_dense(const Tableau& t, const GarnirDatum& g, const DenseVector& symmetrizer);

/// Formal combinations of tableaux of one shape modulo the one-column
/// relations [T sigma] = sgn(sigma) [T]. Each class is stored by its
/// representative with labels increasing down every column.
class ColumnQuotient {
 public:
  using Key = std::vector<std::uint8_t>;
  using Vector = std::map<Key, Rational>;

  explicit ColumnQuotient(Diagram d);

  const Diagram& diagram() const { return d_; }
  /// n! / |column group|.
  std::uint64_t dimension() const;

  /// Column-sorted labels and the sign of the sorting permutation.
  std::pair<Key, int> normalize(const std::vector<int>& labels) const;
  Key key(const Tableau& t) const { return normalize(t.labels()).first; }
  Tableau tableau(const Key& k) const;

  void add(Vector& v, const std::vector<int>& labels, const Rational& c) const;
  /// c * [T * signed stabilizer sum of g]; g may be any structurally sound
  /// datum, valid or not.
  void add_stab(Vector& v, const Tableau& t, const GarnirDatum& g, const Rational& c) const;
  Vector stab(const Tableau& t, const GarnirDatum& g) const;

  /// All column-increasing tableaux, sorted.
  std::vector<Key> basis() const;

 private:
  Diagram d_;
  std::vector<std::vector<int>> columns_;  // cell indices per column, top to bottom
};

void axpy(ColumnQuotient::Vector& y, const Rational& a, const ColumnQuotient::Vector& x);
bool is_zero(const ColumnQuotient::Vector& v);

/// One rearrangement step inside a single set, a transfer between adjacent
/// sets, or the vanishing case. For tableau U:
///   [U Stab(G_from)] = scalar [U (from to) Stab(G_to)] + garnir_scalar [U Stab(G)]
/// modulo one-column relations, where G = datum (valid).
struct MoveStep {
  enum class Kind { SameColumn, CrossColumn, Transfer, Vanish };
  Kind kind = Kind::SameColumn;
  GarnirDatum datum;
  Cell from;
  Cell to;
  Rational scalar = 1;
  Rational garnir_scalar = 0;
};

std::string to_string(MoveStep::Kind k);

struct MoveResult {
  GarnirDatum datum;  // A' with y in place
  Permutation pi;     // pi(y) = x, on box positions
  Rational scalar;    // 0 when the relation vanishes
  std::vector<MoveStep> steps;
};

/// Stab(A_x) C R = scalar * pi * Stab(A'_y) C R. Zig-zag boxes are chosen
/// smallest row first; scalars are measured in the column quotient.
MoveResult move_relation(const Diagram& d, const GarnirDatum& g, Cell x, Cell y);

/// Measures the scalars of one step for tableau u; fills scalar and
/// garnir_scalar and returns false if no such identity holds.
bool measure_step(const ColumnQuotient& q, const Tableau& u, MoveStep& step);

}  // namespace specht
