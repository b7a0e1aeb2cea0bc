#pragma once

#include "sgal/galois.hpp"

#include <optional>
#include <vector>

namespace sgal {

/// Cohomology of the finite group Gal(G) with trivial F2 coefficients.
///
/// Cochains are indexed by GalGroup::index. The context caches a
/// multiplication table for groups of order <= 4096.
class CohomologyContext {
 public:
  /// Guarded to order <= 2^max_log2.
  explicit CohomologyContext(const GalGroup& g, std::size_t max_log2 = 14);

  const GalGroup& group() const noexcept { return g_; }
  std::size_t order() const noexcept { return order_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  const std::vector<std::uint32_t>& generator_indices() const noexcept { return gens_; }

 private:
  const GalGroup& g_;
  std::size_t order_;
  std::vector<GalElement> elements_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> gens_;
};

struct Cochain1 {
  BitVec values;  ///< length |Gal|
  bool at(std::uint32_t g) const { return values.get(g); }
};

struct Cochain2 {
  std::size_t order = 0;
  BitVec values;  ///< entry g * order + h
  bool at(std::uint32_t g, std::uint32_t h) const { return values.get(std::size_t{g} * order + h); }
  void set(std::uint32_t g, std::uint32_t h, bool v) { values.set(std::size_t{g} * order + h, v); }
};

/// A character of Gal(G), evaluated through the Frattini quotient.
struct GalCharacter {
  BitVec functional;  ///< in the group's basis coordinates
  bool operator()(const GalElement& g) const { return g.gamma.dot(functional); }
};

/// chi_a, whose kernel is M_a.
GalCharacter character_of(const GalGroup& g, Element a);

struct PointedGroup {
  std::size_t order = 0;
  std::uint32_t distinguished = 0;
};

/// Fixed points of the trivial action: Z2 pointed at its generator.
PointedGroup h0(const GalGroup& g);

struct H1Group {
  std::size_t dim = 0;
  /// chi_{e_i} for the native basis vectors e_i.
  std::vector<GalCharacter> basis;
  GalCharacter distinguished;  ///< chi_{-1}
};
H1Group h1(const GalGroup& g);
/// Dimension of the space of 1-cocycles, computed by linear algebra.
std::size_t h1_dim_by_cocycles(const CohomologyContext& ctx);

Cochain1 cochain_of(const CohomologyContext& ctx, const GalCharacter& chi);
Cochain2 cup(const CohomologyContext& ctx, const GalCharacter& a, const GalCharacter& b);
Cochain2 d1(const CohomologyContext& ctx, const Cochain1& f);
/// d2 c evaluated at one triple.
bool d2_at(const CohomologyContext& ctx, const Cochain2& c, std::uint32_t g1, std::uint32_t g2, std::uint32_t g3);
bool is_cocycle(const CohomologyContext& ctx, const Cochain2& c);

/// Some f with d1 f = c, or nullopt when c is not a coboundary.
std::optional<Cochain1> is_coboundary(const CohomologyContext& ctx, const Cochain2& c);

/// dim H^2 from ranks of the bar complex; guarded to order <= 2^max_log2.
std::size_t h2_dim(const GalGroup& g, std::size_t max_log2 = 6);
/// dim H^2 from a minimal free resolution of F2 over F2[Gal].
std::size_t h2_dim_by_resolution(const GalGroup& g, std::size_t max_log2 = 10);

struct MilnorRow {
  Element a;
  Element b;
  bool cup_is_coboundary = false;
};

struct MilnorReport {
  std::vector<MilnorRow> rows;
  /// Every relation generator maps to zero in H^2.
  bool well_defined() const noexcept;
};

/// For every relation pair (a, b), b in V(-a), a, b != 1: whether
/// chi_a cup chi_b is a coboundary.
MilnorReport milnor_map_experiment(const Psg& p, std::size_t max_log2 = 14);

}  // namespace sgal
