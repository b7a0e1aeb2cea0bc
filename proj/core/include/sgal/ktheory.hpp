#pragma once

#include "sgal/gf2.hpp"
#include "sgal/psg.hpp"

#include <utility>
#include <vector>

namespace sgal {

/// Number of unordered pairs i < j among n indices.
constexpr std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }
/// Dimension of the space of quadratic forms in n variables.
constexpr std::size_t p2_dim(std::size_t n) { return n * (n + 1) / 2; }
/// Position of the pair (i, j), i < j, in lexicographic pair order.
constexpr std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

/// Linear form sum c_i z_i.
struct P1Vector {
  BitVec coeffs;
  std::size_t n() const { return coeffs.size(); }
  friend bool operator==(const P1Vector&, const P1Vector&) = default;
};

/// Quadratic form sum a_i z_i^2 + sum_{i<j} b_ij z_i z_j.
///
/// The flat layout puts the square coefficients first and the mixed ones
/// after them in pair order; every subspace of quadratic forms uses it.
struct P2Vector {
  BitVec sq;
  BitVec mixed;

  std::size_t n() const { return sq.size(); }
  BitVec flat() const { return BitVec::concat(sq, mixed); }
  static P2Vector from_flat(std::size_t n, const BitVec& flat);
  friend bool operator==(const P2Vector&, const P2Vector&) = default;
};

/// Product of the linear forms with coefficient vectors a and b.
P2Vector q_poly_coords(const BitVec& a, const BitVec& b);

/// An ordered basis of a PSG: row i holds the native coordinates of
/// basis element i.
class Basis {
 public:
  static Basis native(std::size_t n);
  /// Throws PreconditionError when the rows are not a basis.
  explicit Basis(Gf2Matrix rows);

  std::size_t n() const noexcept { return rows_.rows(); }
  const Gf2Matrix& rows() const noexcept { return rows_; }
  const Gf2Matrix& inverse() const noexcept { return inverse_; }
  bool is_native() const;

  /// Coordinates of x in this basis.
  BitVec coords(Element x) const;
  BitVec coords(const BitVec& native) const { return inverse_.left_apply(native); }
  /// Element with the given coordinates in this basis.
  Element element(const BitVec& coords) const;

  friend bool operator==(const Basis& a, const Basis& b) { return a.rows_ == b.rows_; }

 private:
  Gf2Matrix rows_;
  Gf2Matrix inverse_;
};

/// q-polynomial of (a, b) over the given basis (native by default).
P2Vector q_poly(const Psg& p, Element a, Element b);
P2Vector q_poly(const Basis& basis, Element a, Element b);

/// Q = span{ q(a, b) : b in V(-a) } and the dimension of k2 = P2 / Q.
struct RelationModule {
  std::size_t n = 0;
  Gf2Subspace q;
  std::size_t k2_dim = 0;

  bool contains(const P2Vector& v) const { return q.contains(v.flat()); }
};

RelationModule relation_module(const Psg& p);
RelationModule relation_module(const Psg& p, const Basis& basis);

/// Every pair (a, b) with b in V(-a).
std::vector<std::pair<Element, Element>> relation_pairs(const Psg& p);
/// A smaller spanning family: for each a != 1, a basis of span V(-a).
std::vector<std::pair<Element, Element>> relation_generators(const Psg& p);

/// l(a) l(b) = 0 in k2, i.e. q(a, b) lies in Q.
bool k2_product_is_zero(const Psg& p, Element a, Element b);
bool k2_product_is_zero(const Psg& p, const RelationModule& rm, Element a, Element b);

struct KStabilityReport {
  /// Pairs where q(a, b) in Q disagrees with a in V(ab).
  std::vector<std::pair<Element, Element>> violations;
  bool ok() const noexcept { return violations.empty(); }
};
KStabilityReport k_stable_check(const Psg& p);

/// Substitution matrix taking coordinates over basis B to coordinates over
/// basis B2: x_{B2} = x_B * T.
Gf2Matrix substitution_matrix(const Basis& from, const Basis& to);

/// Linear maps on flat P1 / P2 coordinates induced by the substitution
/// z_k -> sum_j T_kj z'_j; they act on column vectors.
Gf2Matrix base_change_m1(const Gf2Matrix& t);
Gf2Matrix base_change_m2(const Gf2Matrix& t);

}  // namespace sgal
