#pragma once

#include "sgal/bitvec.hpp"

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

namespace sgal {

/// Dense matrix over F2 stored as rows.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);
  /// All rows must share `cols` coordinates.
  Gf2Matrix(std::vector<BitVec> rows, std::size_t cols);

  static Gf2Matrix identity(std::size_t n);
  static Gf2Matrix from_strings(const std::vector<std::string>& rows);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  const BitVec& row(std::size_t i) const { return rows_.at(i); }
  BitVec& row(std::size_t i) { return rows_.at(i); }
  const std::vector<BitVec>& row_vectors() const noexcept { return rows_; }
  bool get(std::size_t r, std::size_t c) const { return rows_.at(r).get(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_.at(r).set(c, v); }

  BitVec column(std::size_t c) const;
  Gf2Matrix transpose() const;

  /// Matrix-vector product M * v with v a column vector.
  BitVec apply(const BitVec& v) const;
  /// Row-vector product v * M.
  BitVec left_apply(const BitVec& v) const;
  Gf2Matrix operator*(const Gf2Matrix& rhs) const;

  std::size_t rank() const;
  bool is_invertible() const;
  /// Inverse of a square matrix, or nullopt when singular.
  std::optional<Gf2Matrix> inverse() const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

/// A subspace of F2^m held as a canonical reduced row-echelon basis.
///
/// Basis rows have strictly increasing pivots and every pivot column is zero
/// in all other rows, so two subspaces are equal iff their bases are equal.
class Gf2Subspace {
 public:
  Gf2Subspace() = default;
  explicit Gf2Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static Gf2Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<BitVec>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  /// Coordinates that are not pivots, in increasing order.
  std::vector<std::size_t> free_positions() const;

  bool contains(const BitVec& v) const;
  /// Unique representative of v + span: zero on every pivot coordinate.
  BitVec reduce(BitVec v) const;
  /// Adds v to the span; returns false when v was already contained.
  bool insert(BitVec v);

  bool is_subspace_of(const Gf2Subspace& other) const;
  Gf2Subspace sum(const Gf2Subspace& other) const;
  Gf2Subspace intersection(const Gf2Subspace& other) const;

  /// All 2^dim elements; guarded to dim <= 24.
  std::vector<BitVec> elements() const;
  BitVec random_element(std::mt19937_64& rng) const;

  friend bool operator==(const Gf2Subspace&, const Gf2Subspace&) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<BitVec> basis_;
  std::vector<std::size_t> pivots_;
};

/// Row space of m in canonical form.
Gf2Subspace rref(const Gf2Matrix& m);
Gf2Subspace span_of(const std::vector<BitVec>& vectors, std::size_t ambient_dim);

/// Membership test; throws PreconditionError on a length mismatch.
bool contains(const Gf2Subspace& s, const BitVec& v);

/// {w : w . v = 0 for all v in s}.
Gf2Subspace orthogonal_complement(const Gf2Subspace& s);

/// Some x with m * x = rhs, or nullopt if the system is inconsistent.
std::optional<BitVec> solve(const Gf2Matrix& m, const BitVec& rhs);

/// Kernel {x : m * x = 0}.
Gf2Subspace kernel(const Gf2Matrix& m);

/// Uniformly random invertible n x n matrix.
Gf2Matrix random_invertible(std::size_t n, std::mt19937_64& rng);

/// Every subspace of F2^n in canonical form, ordered by dimension then basis.
/// Guarded to n <= 6.
std::vector<Gf2Subspace> all_subspaces(std::size_t n);

/// Greedy completion of linearly independent rows to a basis of F2^n:
/// the given rows come first, followed by unit vectors in index order.
Gf2Matrix complete_to_basis(const std::vector<BitVec>& independent, std::size_t n);

/// Rank accumulator for long streams of sparse equations.
///
/// Rows are kept fully reduced, so reducing a new vector only needs the
/// pivot rows matching its own nonzero coordinates.
class IncrementalEliminator {
 public:
  explicit IncrementalEliminator(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool full() const noexcept { return rows_.size() == ambient_; }

  /// Inserts the vector with ones at `positions` (repeats cancel).
  bool insert_sparse(const std::size_t* positions, std::size_t count);
  bool insert(const BitVec& v);
  BitVec reduce(const BitVec& v) const;

  Gf2Subspace to_subspace() const;

 private:
  bool insert_reduced(BitVec r);

  std::size_t ambient_;
  std::vector<BitVec> rows_;
  std::vector<long> pivot_row_;
};

}  // namespace sgal
