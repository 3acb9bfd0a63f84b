#include "specht/algebra.hpp"

#include <algorithm>

#include "specht/errors.hpp"

namespace specht {

Tableau::Tableau(Diagram shape, std::vector<int> labels) : shape_(std::move(shape)), labels_(std::move(labels)) {
  if (labels_.size() != shape_.size()) throw DomainError("tableau needs one label per box");
  std::vector<bool> seen(labels_.size() + 1, false);
  for (int l : labels_) {
    if (l < 1 || l > size() || seen[l]) throw DomainError("tableau labels must be 1..n, each once");
    seen[l] = true;
  }
}

Tableau Tableau::from_cells(const Diagram& shape, const std::vector<std::pair<Cell, int>>& entries) {
  std::vector<int> labels(shape.size(), 0);
  for (const auto& [c, l] : entries) {
    const int k = shape.index_of(c);
    if (k < 0) throw DomainError("box " + to_string(c) + " is not in the diagram");
    if (labels[k] != 0) throw DomainError("box " + to_string(c) + " labeled twice");
    labels[k] = l;
  }
  return Tableau(shape, std::move(labels));
}

Tableau Tableau::from_permutation(const Diagram& shape, const Permutation& p) {
  if (p.size() != static_cast<int>(shape.size())) throw DomainError("permutation degree differs from diagram size");
  return Tableau(shape, p.images());
}

Tableau Tableau::reference(const Diagram& shape) {
  std::vector<int> labels(shape.size());
  for (std::size_t k = 0; k < labels.size(); ++k) labels[k] = static_cast<int>(k) + 1;
  return Tableau(shape, std::move(labels));
}

int Tableau::at(Cell c) const {
  const int k = shape_.index_of(c);
  if (k < 0) throw DomainError("box " + to_string(c) + " is not in the diagram");
  return labels_[k];
}

Cell Tableau::cell_of(int label) const {
  for (std::size_t k = 0; k < labels_.size(); ++k)
    if (labels_[k] == label) return shape_.cells()[k];
  throw DomainError("label " + std::to_string(label) + " not present");
}

Permutation Tableau::as_permutation() const { return Permutation(labels_); }

Tableau Tableau::act_right(const Permutation& sigma) const {
  std::vector<int> out(labels_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = labels_[sigma(static_cast<int>(k) + 1) - 1];
  Tableau t;
  t.shape_ = shape_;
  t.labels_ = std::move(out);
  return t;
}

Tableau Tableau::act_left(const Permutation& pi) const {
  Tableau t = *this;
  for (int& l : t.labels_) l = pi(l);
  return t;
}

Tableau Tableau::swapped(Cell a, Cell b) const {
  Tableau t = *this;
  const int ia = shape_.index_of(a);
  const int ib = shape_.index_of(b);
  if (ia < 0 || ib < 0) throw DomainError("swap outside the diagram");
  std::swap(t.labels_[ia], t.labels_[ib]);
  return t;
}

std::string to_string(const Tableau& t) {
  std::string out;
  const Diagram& d = t.shape();
  for (int r = 1; r <= d.num_rows(); ++r) {
    if (r > 1) out += '/';
    const std::vector<Cell> cells = d.row_cells(r);
    const int last = cells.empty() ? 0 : cells.back().col;
    for (int c = 1; c <= last; ++c) {
      if (!d.contains({r, c})) {
        out += '.';
        continue;
      }
      const int l = t.at({r, c});
      out += l < 10 ? std::to_string(l) : "{" + std::to_string(l) + "}";
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

AlgebraElement AlgebraElement::identity(int degree) { return single(Permutation(degree)); }

AlgebraElement AlgebraElement::single(const Permutation& p, const Rational& c) {
  AlgebraElement e(p.size());
  e.add(p, c);
  return e;
}

Rational AlgebraElement::coefficient(const Permutation& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add(const Permutation& p, const Rational& c) {
  if (p.size() != degree_) throw DomainError("permutation degree differs from algebra degree");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [p, c] : o.terms_) add(p, -c);
  return *this;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  r += o;
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  r -= o;
  return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  if (degree_ != o.degree_) throw DomainError("degree mismatch in product");
  AlgebraElement r(degree_);
  for (const auto& [p, c] : terms_)
    for (const auto& [q, d] : o.terms_) r.add(p * q, c * d);
  return r;
}

AlgebraElement AlgebraElement::operator*(const Rational& c) const {
  AlgebraElement r(degree_);
  if (c == 0) return r;
  for (const auto& [p, d] : terms_) r.terms_.emplace(p, d * c);
  return r;
}

AlgebraElement AlgebraElement::left(const Permutation& g) const {
  AlgebraElement r(degree_);
  for (const auto& [p, c] : terms_) r.terms_.emplace(g * p, c);
  return r;
}

AlgebraElement AlgebraElement::right(const Permutation& g) const {
  AlgebraElement r(degree_);
  for (const auto& [p, c] : terms_) r.terms_.emplace(p * g, c);
  return r;
}

AlgebraElement FactoredElement::expand() const {
  AlgebraElement r = AlgebraElement::identity(degree);
  for (const AlgebraElement& f : factors) r = r * f;
  return r;
}

FactoredElement symmetrizer(int degree, const std::vector<int>& positions, bool signed_sum) {
  FactoredElement f;
  f.degree = degree;
  for (std::size_t k = positions.size(); k-- > 1;) {
    AlgebraElement factor = AlgebraElement::identity(degree);
    for (std::size_t a = 0; a < k; ++a)
      factor.add(Permutation::transposition(degree, positions[a], positions[k]), signed_sum ? -1 : 1);
    f.factors.push_back(std::move(factor));
  }
  return f;
}

std::vector<std::vector<int>> row_positions(const Diagram& d) {
  std::vector<std::vector<int>> out;
  for (int r : d.occupied_rows()) {
    std::vector<int> pos;
    for (const Cell& c : d.row_cells(r)) pos.push_back(d.index_of(c) + 1);
    out.push_back(std::move(pos));
  }
  return out;
}

std::vector<std::vector<int>> column_positions(const Diagram& d) {
  std::vector<std::vector<int>> out;
  for (int col : d.occupied_cols()) {
    std::vector<int> pos;
    for (const Cell& c : d.col_cells(col)) pos.push_back(d.index_of(c) + 1);
    out.push_back(std::move(pos));
  }
  return out;
}

namespace {

FactoredElement group_sum(const Diagram& d, const std::vector<std::vector<int>>& blocks, bool signed_sum) {
  FactoredElement f;
  f.degree = static_cast<int>(d.size());
  for (const auto& block : blocks) {
    FactoredElement part = symmetrizer(f.degree, block, signed_sum);
    for (auto& x : part.factors) f.factors.push_back(std::move(x));
  }
  return f;
}

}  // namespace

FactoredElement row_group_sum(const Diagram& d) { return group_sum(d, row_positions(d), false); }

FactoredElement column_group_signed_sum(const Diagram& d) { return group_sum(d, column_positions(d), true); }

AlgebraElement specht_vector(const Tableau& t) {
  const AlgebraElement c = column_group_signed_sum(t.shape()).expand();
  const AlgebraElement r = row_group_sum(t.shape()).expand();
  return (c * r).left(t.as_permutation());
}

// ---------------------------------------------------------------------------

DenseVector to_dense(const AlgebraElement& e) {
  const PermutationSpace& space = permutation_space(e.degree());
  DenseVector v(space.size(), 0);
  for (const auto& [p, c] : e.terms()) {
    if (boost::multiprecision::denominator(c) != 1) throw DomainError("dense vectors need integer coefficients");
    v[space.index(p)] = static_cast<std::int64_t>(boost::multiprecision::numerator(c));
  }
  return v;
}

DenseVector left_multiply(const PermutationSpace& space, const Permutation& g, const DenseVector& v) {
  const std::vector<std::uint32_t> map = space.left_map(g);
  DenseVector out(v.size(), 0);
  for (std::size_t r = 0; r < v.size(); ++r) out[map[r]] = v[r];
  return out;
}

DenseVector right_multiply(const PermutationSpace& space, const DenseVector& v, const Permutation& g) {
  const std::vector<std::uint32_t> map = space.right_map(g);
  DenseVector out(v.size(), 0);
  for (std::size_t r = 0; r < v.size(); ++r) out[map[r]] = v[r];
  return out;
}

DenseVector left_apply(const PermutationSpace& space, const FactoredElement& f, const DenseVector& v) {
  DenseVector cur = v;
  for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it) {
    DenseVector next(cur.size(), 0);
    for (const auto& [g, c] : it->terms()) {
      if (boost::multiprecision::denominator(c) != 1) throw DomainError("dense vectors need integer coefficients");
      const auto k = static_cast<std::int64_t>(boost::multiprecision::numerator(c));
      const std::vector<std::uint32_t> map = space.left_map(g);
      for (std::size_t r = 0; r < cur.size(); ++r)
        if (cur[r] != 0) next[map[r]] += k * cur[r];
    }
    cur = std::move(next);
  }
  return cur;
}

DenseVector young_symmetrizer_dense(const Diagram& d) {
  const PermutationSpace& space = permutation_space(static_cast<int>(d.size()));
  DenseVector v(space.size(), 0);
  v[0] = 1;  // identity has rank 0
  v = left_apply(space, row_group_sum(d), v);
  return left_apply(space, column_group_signed_sum(d), v);
}

DenseVector specht_vector_dense(const Tableau& t, const DenseVector& symmetrizer) {
  return left_multiply(permutation_space(t.size()), t.as_permutation(), symmetrizer);
}

}  // namespace specht
