#include "specht/oracle.hpp"

#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include "specht/errors.hpp"
#include "specht/garnir.hpp"
#include "specht/linalg.hpp"
#include "specht/young_rep.hpp"

namespace specht {

int oracle_bound() {
  static const int bound = [] {
    if (const char* env = std::getenv("SPECHT_ORACLE_BOUND")) {
      const int v = std::atoi(env);
      if (v >= 1 && v <= 8) return v;
    }
    return 7;
  }();
  return bound;
}

namespace {

void require_bound(const Diagram& d) {
  if (static_cast<int>(d.size()) > oracle_bound())
    throw CapacityError("diagram has " + std::to_string(d.size()) + " boxes; the regular-module oracle allows " +
                        std::to_string(oracle_bound()));
}

void require_targeted(const Diagram& d) {
  if (static_cast<int>(d.size()) > kTargetedBound)
    throw CapacityError("diagram has " + std::to_string(d.size()) + " boxes; targeted ranks allow " +
                        std::to_string(kTargetedBound));
}

std::vector<Tableau> column_increasing(const Diagram& d) {
  const ColumnQuotient q(d);
  std::vector<Tableau> out;
  for (const auto& k : q.basis()) out.push_back(q.tableau(k));
  return out;
}

}  // namespace

std::vector<DenseVector> spanning_vectors(const Diagram& d) {
  require_bound(d);
  const DenseVector c = young_symmetrizer_dense(d);
  std::vector<DenseVector> out;
  for (const Tableau& t : column_increasing(d)) out.push_back(specht_vector_dense(t, c));
  return out;
}

SpechtBasis specht_basis(const Diagram& d) {
  require_bound(d);
  SpechtBasis b;
  b.diagram = d;
  const std::size_t target = dimension_of(cached_decomposition(d));
  const PermutationSpace& space = permutation_space(static_cast<int>(d.size()));
  const DenseVector c = young_symmetrizer_dense(d);
  linalg::ModEchelon echelon(space.size());
  for (const Tableau& t : column_increasing(d)) {
    if (echelon.rank() == target) break;
    echelon.insert(linalg::to_mod(specht_vector_dense(t, c)));
  }
  if (echelon.rank() != target)
    throw ConsistencyError("regular-module rank " + std::to_string(echelon.rank()) +
                           " differs from the targeted dimension " + std::to_string(target));
  b.dimension = target;
  b.rows = echelon.rows();
  b.pivots = echelon.pivots();
  return b;
}

std::int64_t character_value(const SpechtBasis& basis, const Permutation& g) {
  const PermutationSpace& space = permutation_space(g.size());
  const Permutation inv = g.inverse();
  std::uint64_t tr = 0;
  for (std::size_t k = 0; k < basis.rows.size(); ++k) {
    // (g v)[h] = v[g^-1 h]
    const std::size_t src = space.index(inv * space.at(basis.pivots[k]));
    tr = linalg::mod_add(tr, basis.rows[k][src]);
  }
  return linalg::mod_lift(tr);
}

bool closed_under_generators(const SpechtBasis& basis) {
  const int n = static_cast<int>(basis.diagram.size());
  if (n < 2) return true;
  const PermutationSpace& space = permutation_space(n);
  std::vector<int> cyc(n);
  for (int k = 0; k < n; ++k) cyc[k] = (k + 1) % n + 1;
  linalg::ModEchelon echelon(space.size());
  for (const auto& row : basis.rows) echelon.insert(row);
  for (const Permutation& g : {Permutation::transposition(n, 1, 2), Permutation(cyc)}) {
    const std::vector<std::uint32_t> map = space.left_map(g);
    for (const auto& row : basis.rows) {
      std::vector<std::uint64_t> moved(row.size(), 0);
      for (std::size_t r = 0; r < row.size(); ++r) moved[map[r]] = row[r];
      if (!echelon.contains(moved)) return false;
    }
  }
  return true;
}

MultiplicityVector decompose(const Diagram& d) {
  const int n = static_cast<int>(d.size());
  MultiplicityVector out;
  if (n == 0) {
    out[{}] = 1;
    return out;
  }
  const SpechtBasis basis = specht_basis(d);
  const std::vector<ConjugacyClass> classes = conjugacy_classes(n);
  std::vector<std::int64_t> chi(classes.size());
  for (std::size_t k = 0; k < classes.size(); ++k) chi[k] = character_value(basis, classes[k].representative);
  const Integer order(factorial(n));
  std::uint64_t dim = 0;
  for (const Partition& lam : partitions_of(n)) {
    Integer sum = 0;
    for (std::size_t k = 0; k < classes.size(); ++k)
      sum += Integer(classes[k].size) * irreducible_character(lam, classes[k].cycle_type) * chi[k];
    if (sum % order != 0) throw ConsistencyError("character inner product is not an integer for " + to_string(lam));
    const Integer m = sum / order;
    if (m < 0) throw ConsistencyError("negative multiplicity for " + to_string(lam));
    if (m > 0) {
      out[lam] = static_cast<std::int64_t>(m);
      dim += static_cast<std::uint64_t>(m) * hook_length_dimension(lam);
    }
  }
  if (dim != basis.dimension) throw ConsistencyError("multiplicities do not add up to the dimension");
  return out;
}

MultiplicityVector restriction_decompose(const Diagram& d) {
  if (d.empty()) throw DomainError("restriction needs at least one box");
  return restrict_multiplicities(decompose(d));
}

const MultiplicityVector& cached_decomposition(const Diagram& d) {
  require_targeted(d);
  static std::shared_mutex mutex;
  static std::map<std::string, std::unique_ptr<MultiplicityVector>> cache;
  const std::string key = canonical_key(d);
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto value = std::make_unique<MultiplicityVector>(decompose_targeted(canonical_form(d).diagram));
  std::unique_lock lock(mutex);
  return *cache.try_emplace(key, std::move(value)).first->second;
}

MultiplicityVector add(const MultiplicityVector& a, const MultiplicityVector& b) {
  MultiplicityVector out = a;
  for (const auto& [lam, m] : b) out[lam] += m;
  return out;
}

std::int64_t restriction_multiplicity_targeted(const Diagram& d, const Partition& lambda) {
  if (!is_partition(lambda) || partition_size(lambda) + 1 != static_cast<int>(d.size()))
    throw DomainError("target must be a partition of n - 1");
  std::int64_t total = 0;
  for (std::size_t i = 0; i <= lambda.size(); ++i) {
    Partition mu = lambda;
    if (i == lambda.size())
      mu.push_back(1);
    else if (i == 0 || lambda[i - 1] > lambda[i])
      ++mu[i];
    else
      continue;
    total += multiplicity_targeted(d, mu);
  }
  return total;
}

std::int64_t branch_multiplicity_targeted(const Diagram& d, const BoxSet& b, const Partition& lambda) {
  std::int64_t total = 0;
  for (const Cell& x : b) {
    if (!d.contains(x)) throw DomainError("box " + to_string(x) + " is not in the diagram");
    total += multiplicity_targeted(d.without(x), lambda);
  }
  return total;
}

MultiplicityVector branch_sum(const Diagram& d, const BoxSet& b) {
  MultiplicityVector out;
  for (const Cell& x : b) {
    if (!d.contains(x)) throw DomainError("box " + to_string(x) + " is not in the diagram");
    out = add(out, cached_decomposition(d.without(x)));
  }
  return out;
}

bool verify_branching(const Diagram& d, const BoxSet& b) {
  if (d.empty()) throw DomainError("branching needs at least one box");
  require_targeted(d);
  return restrict_multiplicities(cached_decomposition(d)) == branch_sum(d, b);
}

std::size_t exact_rank(const std::vector<DenseVector>& vectors) {
  if (vectors.empty()) return 0;
  // Drop all-zero coordinates first; they never hold a pivot.
  std::vector<std::size_t> live;
  for (std::size_t j = 0; j < vectors[0].size(); ++j)
    for (const DenseVector& v : vectors)
      if (v[j] != 0) {
        live.push_back(j);
        break;
      }
  linalg::Matrix<Integer> m(static_cast<Eigen::Index>(vectors.size()), static_cast<Eigen::Index>(live.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < live.size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = vectors[i][live[j]];
  return static_cast<std::size_t>(linalg::bareiss_rank(m));
}

FiltrationReport verify_filtration(const Diagram& d, const BoxSet& b) {
  const TransversalResult st = is_special_transversal(d, b);
  if (!st.accepted) throw DomainError("not a special transversal: " + st.reason);
  require_bound(d);
  const int n = static_cast<int>(d.size());
  FiltrationReport r;
  r.order = st.order;
  const std::size_t k = r.order.size();
  r.module_dim = dimension_of(cached_decomposition(d));
  for (const Cell& x : r.order) r.child_dims.push_back(dimension_of(cached_decomposition(d.without(x))));

  // Group spanning vectors by the column holding n.
  const DenseVector c = young_symmetrizer_dense(d);
  std::vector<std::vector<DenseVector>> groups(k);
  for (const Tableau& t : column_increasing(d)) {
    const int col = t.cell_of(n).col;
    for (std::size_t i = 0; i < k; ++i)
      if (r.order[i].col == col) groups[i].push_back(specht_vector_dense(t, c));
  }
  const PermutationSpace& space = permutation_space(n);
  linalg::ModEchelon echelon(space.size());
  r.subspace_dims.assign(k + 1, 0);
  for (std::size_t i = k; i-- > 0;) {
    for (const DenseVector& v : groups[i]) echelon.insert(linalg::to_mod(v));
    r.subspace_dims[i] = echelon.rank();
  }
  auto evaluate = [&] {
    r.quotient_dims.clear();
    r.quotient_equal.clear();
    r.first_failure.reset();
    for (std::size_t i = 0; i < k; ++i) {
      r.quotient_dims.push_back(r.subspace_dims[i] - r.subspace_dims[i + 1]);
      r.quotient_equal.push_back(r.quotient_dims[i] == r.child_dims[i]);
    }
    r.spans = r.subspace_dims[0] == r.module_dim;
    r.all_hold = r.spans;
    for (std::size_t i = 0; i < k; ++i) r.all_hold = r.all_hold && r.quotient_equal[i];
    if (!r.spans) {
      r.first_failure = 0;
    } else {
      for (std::size_t i = 0; i < k && !r.first_failure; ++i)
        if (!r.quotient_equal[i]) r.first_failure = i + 1;
    }
  };
  evaluate();
  if (r.all_hold) {
    // Each true quotient is at least the child dimension and the true total
    // is at most dim S^d, so equality modulo p forces exact equality.
    r.certified_by = "sandwich";
    return r;
  }
  std::vector<DenseVector> acc;
  for (std::size_t i = k; i-- > 0;) {
    acc.insert(acc.end(), groups[i].begin(), groups[i].end());
    r.subspace_dims[i] = exact_rank(acc);
  }
  evaluate();
  r.certified_by = "exact";
  return r;
}

std::optional<std::vector<Rational>> solve_in_span(const std::vector<DenseVector>& basis, const DenseVector& target) {
  const std::size_t k = basis.size();
  if (k == 0) {
    for (std::int64_t x : target)
      if (x != 0) return std::nullopt;
    return std::vector<Rational>{};
  }
  const std::size_t len = target.size();
  linalg::ModEchelon echelon(len);
  for (const DenseVector& v : basis)
    if (!echelon.insert(linalg::to_mod(v))) return std::nullopt;  // dependent modulo p
  // The pivot coordinates give a square subsystem that is invertible mod p,
  // hence over the rationals.
  const std::vector<std::size_t>& piv = echelon.pivots();
  const auto kk = static_cast<Eigen::Index>(k);
  linalg::Matrix<Rational> a(kk, kk);
  linalg::Vector<Rational> rhs(kk);
  for (Eigen::Index i = 0; i < kk; ++i) {
    for (Eigen::Index j = 0; j < kk; ++j) a(i, j) = Rational(static_cast<long long>(basis[j][piv[i]]));
    rhs(i) = Rational(static_cast<long long>(target[piv[i]]));
  }
  const auto x = linalg::solve(a, rhs);
  if (!x) return std::nullopt;
  std::vector<Rational> coords(k);
  for (std::size_t j = 0; j < k; ++j) coords[j] = (*x)(static_cast<Eigen::Index>(j));
  for (std::size_t p = 0; p < len; ++p) {
    Rational s = 0;
    for (std::size_t j = 0; j < k; ++j)
      if (basis[j][p] != 0) s += coords[j] * Rational(static_cast<long long>(basis[j][p]));
    if (s != Rational(static_cast<long long>(target[p]))) return std::nullopt;
  }
  return coords;
}

}  // namespace specht
