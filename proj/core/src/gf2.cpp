#include "sgal/gf2.hpp"

#include "sgal/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace sgal {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

Gf2Matrix::Gf2Matrix(std::vector<BitVec> rows, std::size_t cols) : cols_(cols), rows_(std::move(rows)) {
  for (const auto& r : rows_)
    if (r.size() != cols_) throw PreconditionError("Gf2Matrix: rows of unequal length");
}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

Gf2Matrix Gf2Matrix::from_strings(const std::vector<std::string>& rows) {
  std::vector<BitVec> r;
  for (const auto& s : rows) r.push_back(BitVec::from_string(s));
  const std::size_t cols = r.empty() ? 0 : r.front().size();
  return Gf2Matrix(std::move(r), cols);
}

BitVec Gf2Matrix::column(std::size_t c) const {
  BitVec v(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (rows_[r].get(c)) v.set(r);
  return v;
}

Gf2Matrix Gf2Matrix::transpose() const {
  Gf2Matrix t(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = rows_[r].find_first(); c != BitVec::npos; c = rows_[r].find_next(c + 1)) t.set(c, r);
  return t;
}

BitVec Gf2Matrix::apply(const BitVec& v) const {
  if (v.size() != cols_) throw PreconditionError("apply: dimension mismatch");
  BitVec out(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (rows_[r].dot(v)) out.set(r);
  return out;
}

BitVec Gf2Matrix::left_apply(const BitVec& v) const {
  if (v.size() != rows_.size()) throw PreconditionError("left_apply: dimension mismatch");
  BitVec out(cols_);
  for (std::size_t r = v.find_first(); r != BitVec::npos; r = v.find_next(r + 1)) out ^= rows_[r];
  return out;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& rhs) const {
  if (cols_ != rhs.rows()) throw PreconditionError("matrix product: dimension mismatch");
  std::vector<BitVec> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(rhs.left_apply(r));
  return Gf2Matrix(std::move(out), rhs.cols());
}

std::size_t Gf2Matrix::rank() const { return rref(*this).dim(); }

bool Gf2Matrix::is_invertible() const { return rows_.size() == cols_ && rank() == cols_; }

std::optional<Gf2Matrix> Gf2Matrix::inverse() const {
  const std::size_t n = rows_.size();
  if (n != cols_) throw PreconditionError("inverse: matrix is not square");
  std::vector<BitVec> a = rows_;
  std::vector<BitVec> inv = identity(n).rows_;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && !a[p].get(col)) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[col]);
    std::swap(inv[p], inv[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != col && a[r].get(col)) {
        a[r] ^= a[col];
        inv[r] ^= inv[col];
      }
    }
  }
  return Gf2Matrix(std::move(inv), n);
}

Gf2Subspace Gf2Subspace::full(std::size_t ambient_dim) {
  Gf2Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.basis_.push_back(BitVec::unit(ambient_dim, i));
    s.pivots_.push_back(i);
  }
  return s;
}

std::vector<std::size_t> Gf2Subspace::free_positions() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < ambient_; ++i) {
    if (k < pivots_.size() && pivots_[k] == i)
      ++k;
    else
      out.push_back(i);
  }
  return out;
}

BitVec Gf2Subspace::reduce(BitVec v) const {
  if (v.size() != ambient_) throw PreconditionError("subspace: length mismatch");
  for (std::size_t k = 0; k < basis_.size(); ++k)
    if (v.get(pivots_[k])) v ^= basis_[k];
  return v;
}

bool Gf2Subspace::contains(const BitVec& v) const { return reduce(v).none(); }

bool Gf2Subspace::insert(BitVec v) {
  v = reduce(std::move(v));
  const std::size_t p = v.find_first();
  if (p == BitVec::npos) return false;
  for (auto& row : basis_)
    if (row.get(p)) row ^= v;
  const auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  const auto offset = it - pivots_.begin();
  pivots_.insert(it, p);
  basis_.insert(basis_.begin() + offset, std::move(v));
  return true;
}

bool Gf2Subspace::is_subspace_of(const Gf2Subspace& other) const {
  return std::all_of(basis_.begin(), basis_.end(), [&](const BitVec& b) { return other.contains(b); });
}

Gf2Subspace Gf2Subspace::sum(const Gf2Subspace& other) const {
  Gf2Subspace s = *this;
  for (const auto& b : other.basis_) s.insert(b);
  return s;
}

Gf2Subspace Gf2Subspace::intersection(const Gf2Subspace& other) const {
  return orthogonal_complement(orthogonal_complement(*this).sum(orthogonal_complement(other)));
}

std::vector<BitVec> Gf2Subspace::elements() const {
  if (dim() > 24) throw GuardrailError("subspace too large to enumerate", "dim <= 24");
  std::vector<BitVec> out;
  out.reserve(std::size_t{1} << dim());
  out.emplace_back(ambient_);
  for (const auto& b : basis_) {
    const std::size_t half = out.size();
    for (std::size_t i = 0; i < half; ++i) out.push_back(out[i] ^ b);
  }
  return out;
}

BitVec Gf2Subspace::random_element(std::mt19937_64& rng) const {
  BitVec v(ambient_);
  for (const auto& b : basis_)
    if (rng() & 1U) v ^= b;
  return v;
}

Gf2Subspace span_of(const std::vector<BitVec>& vectors, std::size_t ambient_dim) {
  Gf2Subspace s(ambient_dim);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Gf2Subspace rref(const Gf2Matrix& m) { return span_of(m.row_vectors(), m.cols()); }

bool contains(const Gf2Subspace& s, const BitVec& v) {
  if (v.size() != s.ambient_dim()) throw PreconditionError("contains: length mismatch");
  return s.contains(v);
}

Gf2Subspace orthogonal_complement(const Gf2Subspace& s) {
  Gf2Subspace out(s.ambient_dim());
  for (std::size_t f : s.free_positions()) {
    BitVec w(s.ambient_dim());
    w.set(f);
    for (std::size_t k = 0; k < s.dim(); ++k)
      if (s.basis()[k].get(f)) w.set(s.pivots()[k]);
    out.insert(std::move(w));
  }
  return out;
}

std::optional<BitVec> solve(const Gf2Matrix& m, const BitVec& rhs) {
  if (rhs.size() != m.rows()) throw PreconditionError("solve: rhs length must equal the number of rows");
  const std::size_t n = m.cols();
  std::vector<BitVec> aug;
  aug.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BitVec row(n + 1);
    const BitVec& src = m.row(r);
    for (std::size_t c = src.find_first(); c != BitVec::npos; c = src.find_next(c + 1)) row.set(c);
    if (rhs.get(r)) row.set(n);
    aug.push_back(std::move(row));
  }
  const Gf2Subspace s = span_of(aug, n + 1);
  BitVec x(n);
  for (std::size_t k = 0; k < s.dim(); ++k) {
    if (s.pivots()[k] == n) return std::nullopt;
    if (s.basis()[k].get(n)) x.set(s.pivots()[k]);
  }
  return x;
}

Gf2Subspace kernel(const Gf2Matrix& m) { return orthogonal_complement(rref(m)); }

Gf2Matrix random_invertible(std::size_t n, std::mt19937_64& rng) {
  while (true) {
    Gf2Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (rng() & 1U) m.set(r, c);
    if (m.is_invertible()) return m;
  }
}

std::vector<Gf2Subspace> all_subspaces(std::size_t n) {
  if (n > 6) throw GuardrailError("subspace enumeration is limited to small ambient dimensions", "n <= 6");
  auto key = [](const Gf2Subspace& s) {
    std::vector<std::string> k{std::to_string(s.dim())};
    for (const auto& b : s.basis()) k.push_back(b.to_string());
    return k;
  };
  std::set<std::vector<std::string>> seen;
  std::vector<Gf2Subspace> out;
  std::deque<Gf2Subspace> queue{Gf2Subspace(n)};
  seen.insert(key(queue.front()));
  while (!queue.empty()) {
    Gf2Subspace s = std::move(queue.front());
    queue.pop_front();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      Gf2Subspace t = s;
      if (!t.insert(BitVec::from_mask(mask, n))) continue;
      if (seen.insert(key(t)).second) queue.push_back(std::move(t));
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [&](const Gf2Subspace& a, const Gf2Subspace& b) { return key(a) < key(b); });
  return out;
}

Gf2Matrix complete_to_basis(const std::vector<BitVec>& independent, std::size_t n) {
  Gf2Subspace span(n);
  std::vector<BitVec> rows;
  for (const auto& v : independent) {
    if (!span.insert(v)) throw PreconditionError("complete_to_basis: vectors are linearly dependent");
    rows.push_back(v);
  }
  for (std::size_t i = 0; i < n && rows.size() < n; ++i) {
    BitVec e = BitVec::unit(n, i);
    if (span.insert(e)) rows.push_back(std::move(e));
  }
  return Gf2Matrix(std::move(rows), n);
}

IncrementalEliminator::IncrementalEliminator(std::size_t ambient_dim)
    : ambient_(ambient_dim), pivot_row_(ambient_dim, -1) {}

BitVec IncrementalEliminator::reduce(const BitVec& v) const {
  BitVec r = v;
  for (std::size_t i = v.find_first(); i != BitVec::npos; i = v.find_next(i + 1))
    if (pivot_row_[i] >= 0) r ^= rows_[static_cast<std::size_t>(pivot_row_[i])];
  return r;
}

bool IncrementalEliminator::insert_reduced(BitVec r) {
  const std::size_t p = r.find_first();
  if (p == BitVec::npos) return false;
  for (auto& row : rows_)
    if (row.get(p)) row ^= r;
  pivot_row_[p] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

bool IncrementalEliminator::insert(const BitVec& v) {
  if (v.size() != ambient_) throw PreconditionError("eliminator: length mismatch");
  return insert_reduced(reduce(v));
}

bool IncrementalEliminator::insert_sparse(const std::size_t* positions, std::size_t count) {
  if (full()) return false;
  BitVec r(ambient_);
  for (std::size_t k = 0; k < count; ++k) r.flip(positions[k]);
  // Fully reduced rows: only original coordinates can hit pivots.
  BitVec orig = r;
  for (std::size_t i = orig.find_first(); i != BitVec::npos; i = orig.find_next(i + 1))
    if (pivot_row_[i] >= 0) r ^= rows_[static_cast<std::size_t>(pivot_row_[i])];
  return insert_reduced(std::move(r));
}

Gf2Subspace IncrementalEliminator::to_subspace() const { return span_of(rows_, ambient_); }

}  // namespace sgal
