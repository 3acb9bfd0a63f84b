#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "specht/algebra.hpp"
#include "specht/diagram.hpp"
#include "specht/numbers.hpp"
#include "specht/partition.hpp"
#include "specht/transversal.hpp"

namespace specht {

/// Largest diagram handled inside the regular module. Defaults to 7 and can
/// be overridden with SPECHT_ORACLE_BOUND.
int oracle_bound();
/// Largest diagram handled by the targeted multiplicity route.
inline constexpr int kTargetedBound = 10;

/// Echelon basis of S^d inside the group algebra, reduced modulo a large
/// prime. dimension is certified against the targeted multiplicities.
struct SpechtBasis {
  Diagram diagram;
  std::size_t dimension = 0;
  std::vector<std::vector<std::uint64_t>> rows;
  std::vector<std::size_t> pivots;  // permutation ranks
};

/// Throws CapacityError past oracle_bound().
SpechtBasis specht_basis(const Diagram& d);
/// Trace of left multiplication by g on S^d.
std::int64_t character_value(const SpechtBasis& basis, const Permutation& g);
/// Left multiplication by the generators (1 2) and (1 2 ... n) preserves the span.
bool closed_under_generators(const SpechtBasis& basis);

/// Irreducible multiplicities from traces on the regular-module basis.
MultiplicityVector decompose(const Diagram& d);
/// decompose(d) pushed through the branching rule for irreducibles.
MultiplicityVector restriction_decompose(const Diagram& d);

/// Targeted multiplicities, cached per equivalence class. Thread-safe.
const MultiplicityVector& cached_decomposition(const Diagram& d);
/// Sum of the decompositions of d minus x over x in b.
MultiplicityVector branch_sum(const Diagram& d, const BoxSet& b);
/// Res S^d equals the branch sum, as multisets of irreducibles.
bool verify_branching(const Diagram& d, const BoxSet& b);
MultiplicityVector add(const MultiplicityVector& a, const MultiplicityVector& b);

/// Multiplicity of lambda (a partition of n-1) in Res S^d, summed over the
/// partitions mu of n that contain lambda.
std::int64_t restriction_multiplicity_targeted(const Diagram& d, const Partition& lambda);
/// Sum over x in b of the multiplicity of lambda in S^{d minus x}.
std::int64_t branch_multiplicity_targeted(const Diagram& d, const BoxSet& b, const Partition& lambda);

struct FiltrationReport {
  std::vector<Cell> order;                 // b_1..b_k
  std::vector<std::size_t> subspace_dims;  // dim V_1..V_{k+1}
  std::vector<std::size_t> quotient_dims;  // dim V_i - dim V_{i+1}
  std::vector<std::size_t> child_dims;     // dim S^{d minus b_i}
  std::size_t module_dim = 0;
  bool spans = false;                      // V_1 = S^d
  std::vector<bool> quotient_equal;
  bool all_hold = false;
  std::string certified_by;                // "sandwich" or "exact"
  std::optional<std::size_t> first_failure;
};

/// Filtration of S^d by the position of the largest label among the boxes of b.
/// Throws DomainError unless b is a special transversal.
FiltrationReport verify_filtration(const Diagram& d, const BoxSet& b);

/// Dense e_T for every column-increasing tableau T of shape d.
std::vector<DenseVector> spanning_vectors(const Diagram& d);
/// Exact rank of integer vectors.
std::size_t exact_rank(const std::vector<DenseVector>& vectors);
/// Coordinates c with sum c_k basis[k] = target, if basis is independent and
/// target lies in its span.
std::optional<std::vector<Rational>> solve_in_span(const std::vector<DenseVector>& basis, const DenseVector& target);

}  // namespace specht
