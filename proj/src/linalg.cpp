#include "specht/linalg.hpp"

namespace specht::linalg {

std::uint64_t mod_of(const Integer& x) {
  Integer r = x % Integer(kPrime);
  if (r < 0) r += Integer(kPrime);
  return static_cast<std::uint64_t>(r);
}

void ModEchelon::reduce(std::vector<std::uint64_t>& v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::uint64_t f = v[pivots_[k]];
    if (f == 0) continue;
    const std::vector<std::uint64_t>& row = rows_[k];
    for (std::size_t j = 0; j < dim_; ++j)
      if (row[j] != 0) v[j] = mod_sub(v[j], mod_mul(f, row[j]));
  }
}

bool ModEchelon::contains(std::vector<std::uint64_t> v) const {
  reduce(v);
  for (std::uint64_t x : v)
    if (x != 0) return false;
  return true;
}

bool ModEchelon::insert(std::vector<std::uint64_t> v) {
  reduce(v);
  std::size_t piv = 0;
  while (piv < dim_ && v[piv] == 0) ++piv;
  if (piv == dim_) return false;
  const std::uint64_t inv = mod_inv(v[piv]);
  for (std::uint64_t& x : v) x = mod_mul(x, inv);
  for (std::vector<std::uint64_t>& row : rows_) {
    const std::uint64_t f = row[piv];
    if (f == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (v[j] != 0) row[j] = mod_sub(row[j], mod_mul(f, v[j]));
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

std::vector<std::uint64_t> to_mod(const std::vector<std::int64_t>& v) {
  std::vector<std::uint64_t> out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = mod_of(v[k]);
  return out;
}

}  // namespace specht::linalg
