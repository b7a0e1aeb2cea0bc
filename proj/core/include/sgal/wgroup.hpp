#pragma once

#include "sgal/gf2.hpp"
#include "sgal/ktheory.hpp"
#include "sgal/small_group.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <random>
#include <vector>

namespace sgal {

/// Element (t_i^alpha_i)(t_ij^beta_ij)(x_1^gamma_1 ... x_n^gamma_n) of the
/// free C-group W(n) on n generators.
struct WElement {
  BitVec alpha;
  BitVec beta;
  BitVec gamma;

  explicit WElement(std::size_t n = 0) : alpha(n), beta(pair_count(n)), gamma(n) {}
  WElement(BitVec a, BitVec b, BitVec g);

  std::size_t n() const noexcept { return gamma.size(); }
  bool is_identity() const noexcept { return alpha.none() && beta.none() && gamma.none(); }
  bool in_frattini() const noexcept { return gamma.none(); }

  /// The (alpha, beta) block, laid out like a quadratic form.
  BitVec phi() const { return BitVec::concat(alpha, beta); }
  /// alpha, beta, gamma concatenated.
  BitVec full() const;
  static WElement from_full(std::size_t n, const BitVec& v);
  static WElement from_phi(std::size_t n, const BitVec& phi, const BitVec& gamma);

  friend bool operator==(const WElement&, const WElement&) = default;
  friend auto operator<=>(const WElement& a, const WElement& b) { return a.full() <=> b.full(); }
};

/// Length of the full coordinate vector of W(n).
constexpr std::size_t w_coord_dim(std::size_t n) { return 2 * n + pair_count(n); }

WElement w_identity(std::size_t n);
WElement w_x(std::size_t n, std::size_t i);
WElement w_t(std::size_t n, std::size_t i);
WElement w_t(std::size_t n, std::size_t i, std::size_t j);
WElement w_random(std::size_t n, std::mt19937_64& rng);

WElement w_mul(const WElement& g, const WElement& h);
WElement w_inv(const WElement& g);
WElement w_square(const WElement& g);
/// h^g = g h g^-1.
WElement w_conj(const WElement& h, const WElement& g);
/// [g, h] = g h g^-1 h^-1.
WElement w_comm(const WElement& g, const WElement& h);
WElement w_pow(const WElement& g, std::size_t k);

/// |W(n)| = 2^((n^2 + 3n) / 2); guarded to n <= 20.
boost::multiprecision::cpp_int w_order_count(std::size_t n);
std::size_t w_order_log2(std::size_t n);
/// Every element of W(n); guarded to n <= 4.
std::vector<WElement> w_enumerate(std::size_t n);

/// Subgroup of W(n) cut out by linear conditions on the full coordinates.
struct LinearSpec {
  std::size_t n = 0;
  std::vector<BitVec> functionals;

  bool member(const WElement& g) const;
  Gf2Subspace solution_space() const;
  Gf2Subspace functional_span() const;
};

struct SubgroupSpec {
  enum class Kind { M, S, D, Phi, Custom };
  Kind kind = Kind::Phi;
  std::size_t i = 0;
  std::size_t j = 0;
  LinearSpec custom;

  static SubgroupSpec M(std::size_t i) { return {Kind::M, i, 0, {}}; }
  static SubgroupSpec S(std::size_t i) { return {Kind::S, i, 0, {}}; }
  /// Requires i < j.
  static SubgroupSpec D(std::size_t i, std::size_t j) { return {Kind::D, i, j, {}}; }
  static SubgroupSpec Phi() { return {Kind::Phi, 0, 0, {}}; }
  static SubgroupSpec Custom(LinearSpec spec) { return {Kind::Custom, 0, 0, std::move(spec)}; }

  LinearSpec to_linear(std::size_t n) const;
};

bool subgroup_member(const SubgroupSpec& spec, const WElement& g);

/// Closed under products (hence a subgroup of the finite group).
bool is_subgroup(const LinearSpec& spec);
/// Subgroup invariant under conjugation by every generator.
bool is_normal(const LinearSpec& spec);
/// Every element of `inner` lies in `outer`.
bool spec_contains(const LinearSpec& outer, const LinearSpec& inner);

/// Cosets of a normal linear subgroup N of W(n), with canonical representatives.
class CosetSpace {
 public:
  /// Throws PreconditionError if N is not a normal subgroup.
  explicit CosetSpace(LinearSpec normal);

  std::size_t n() const noexcept { return spec_.n; }
  const LinearSpec& spec() const noexcept { return spec_; }
  /// log2 of |W(n) / N|.
  std::size_t order_log2() const;
  /// The unique point of gN that is zero on the pivots of gN - g.
  WElement canonical(const WElement& g) const;

 private:
  const Gf2Subspace& direction(const WElement& g) const;

  LinearSpec spec_;
  Gf2Subspace solutions_;
  mutable std::map<BitVec, Gf2Subspace> cache_;
};

struct QuotientResult {
  std::size_t order_log2 = 0;
  /// Coset representatives when enumerated (order <= enumeration limit).
  std::vector<WElement> reps;
  std::optional<FiniteGroup> table;
  std::optional<SmallGroup> small;
};

/// W(n)/N. The table is built for orders <= 2^table_log2 and identified for
/// orders <= 16; larger quotients only report their order.
QuotientResult quotient(const LinearSpec& normal, std::size_t table_log2 = 4);
QuotientResult quotient(std::size_t n, const SubgroupSpec& normal, std::size_t table_log2 = 4);
/// H/N for linear subgroups N <= H, N normal in W(n).
QuotientResult subquotient(const LinearSpec& h, const LinearSpec& normal, std::size_t table_log2 = 4);

/// Pairing of Phi with quadratic forms; requires gamma(g) = 0.
bool pairing_phi(const WElement& g, const P2Vector& q);
/// Pairing of W/Phi with linear forms.
bool pairing_p1(const WElement& g, const P1Vector& q);

/// Homomorphism W(source_n) -> W(target_n) fixed by the images of the x_i.
class WHom {
 public:
  WHom(std::size_t source_n, std::size_t target_n, std::vector<WElement> images);

  static WHom identity(std::size_t n);
  /// x_j -> (0; 0; column j of m).
  static WHom from_gamma_matrix(const Gf2Matrix& m);

  std::size_t source_n() const noexcept { return source_n_; }
  std::size_t target_n() const noexcept { return target_n_; }
  const std::vector<WElement>& images() const noexcept { return images_; }

  WElement apply(const WElement& g) const;
  /// Target-by-source matrix of the induced map on W/Phi.
  Gf2Matrix gamma_matrix() const;
  /// Matrix of the restriction Phi(source) -> Phi(target) on phi blocks.
  Gf2Matrix phi_matrix() const;

  /// this o inner.
  WHom compose(const WHom& inner) const;
  /// Inverse of a bijective endomorphism; throws PreconditionError otherwise.
  WHom inverse() const;

  friend bool operator==(const WHom&, const WHom&) = default;

 private:
  std::size_t source_n_;
  std::size_t target_n_;
  std::vector<WElement> images_;
};

}  // namespace sgal
