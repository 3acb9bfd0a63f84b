#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "specht/permutation.hpp"

namespace specht {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;

/// Multiplicities of irreducibles, zero entries omitted.
using MultiplicityVector = std::map<Partition, std::int64_t>;

bool is_partition(const Partition& p);
int partition_size(const Partition& p);
/// Partitions of n, largest first in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);
Partition conjugate(const Partition& p);
/// Partitions obtained by removing one corner box.
std::vector<Partition> remove_corners(const Partition& p);

/// Number of standard tableaux, from the hook length formula.
std::uint64_t hook_length_dimension(const Partition& p);

/// Standard tableaux of shape p; each lists labels of the cells in row-major order.
std::vector<std::vector<int>> standard_tableaux(const Partition& p);

/// "(3,2,1)".
std::string to_string(const Partition& p);
/// Accepts "3,2,1", "(3,2,1)", "321" (single digits) and exponent forms like "5,1^4".
Partition parse_partition(const std::string& text);

/// Character value by the Murnaghan-Nakayama rule. Memoized; thread-safe.
std::int64_t irreducible_character(const Partition& shape, const Partition& cycle_type);

struct ConjugacyClass {
  Partition cycle_type;
  std::uint64_t size = 0;
  Permutation representative;
};

/// Classes of S_n with consecutive-cycle representatives.
std::vector<ConjugacyClass> conjugacy_classes(int n);

/// Pushes a decomposition through the classical branching rule for irreducibles.
MultiplicityVector restrict_multiplicities(const MultiplicityVector& m);

std::uint64_t dimension_of(const MultiplicityVector& m);

}  // namespace specht
