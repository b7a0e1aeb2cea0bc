#pragma once

#include "sgal/ktheory.hpp"
#include "sgal/psg.hpp"
#include "sgal/small_group.hpp"
#include "sgal/wgroup.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sgal {

/// Coset of V in W(B), stored by its canonical representative.
struct GalElement {
  BitVec gamma;
  BitVec phi;  ///< zero on every pivot coordinate of V

  friend bool operator==(const GalElement&, const GalElement&) = default;
  friend auto operator<=>(const GalElement& a, const GalElement& b) {
    if (auto c = a.gamma <=> b.gamma; c != 0) return c;
    return a.phi <=> b.phi;
  }
};

struct GalElementHash {
  std::size_t operator()(const GalElement& g) const noexcept { return g.gamma.hash() * 31 + g.phi.hash(); }
};

/// Gal(G) = W(B) / V(B) for a pre-special group G and an ordered basis B,
/// where V(B) is the annihilator of the relation module Q(B).
class GalGroup {
 public:
  GalGroup(PsgPtr psg, Basis basis);

  const Psg& psg() const noexcept { return *psg_; }
  const PsgPtr& psg_ptr() const noexcept { return psg_; }
  const Basis& basis() const noexcept { return basis_; }
  std::size_t n() const noexcept { return basis_.n(); }
  std::size_t phi_dim() const noexcept { return p2_dim(n()); }
  const RelationModule& relations() const noexcept { return relations_; }
  const Gf2Subspace& v() const noexcept { return v_; }

  std::size_t order_log2() const noexcept { return n() + relations_.q.dim(); }
  /// Throws GuardrailError when the order does not fit in 63 bits.
  std::uint64_t order() const;

  GalElement identity() const;
  GalElement generator(std::size_t i) const;
  GalElement reduce(const WElement& g) const;
  WElement lift(const GalElement& g) const { return WElement::from_phi(n(), g.phi, g.gamma); }

  GalElement mul(const GalElement& g, const GalElement& h) const { return reduce(w_mul(lift(g), lift(h))); }
  GalElement inv(const GalElement& g) const { return reduce(w_inv(lift(g))); }
  GalElement square(const GalElement& g) const { return reduce(w_square(lift(g))); }
  GalElement comm(const GalElement& g, const GalElement& h) const { return reduce(w_comm(lift(g), lift(h))); }
  /// h^g = g h g^-1.
  GalElement conj(const GalElement& h, const GalElement& g) const { return reduce(w_conj(lift(h), lift(g))); }
  GalElement pow(const GalElement& g, std::size_t k) const;
  bool is_identity(const GalElement& g) const { return g.gamma.none() && g.phi.none(); }
  bool in_frattini(const GalElement& g) const { return g.gamma.none(); }
  std::size_t element_order(const GalElement& g) const;

  /// Dense numbering 0 .. order-1, identity first; guarded to order <= 2^30.
  std::uint64_t index(const GalElement& g) const;
  GalElement element(std::uint64_t index) const;
  std::vector<GalElement> elements(std::size_t max_log2 = 20) const;
  FiniteGroup table(std::size_t max_log2 = 12) const;

  /// Coordinates of a in this group's basis.
  BitVec coords(Element a) const { return basis_.coords(a); }
  /// Value of the character chi_a (kernel M_a) at g.
  bool chi(Element a, const GalElement& g) const { return g.gamma.dot(coords(a)); }

 private:
  PsgPtr psg_;
  Basis basis_;
  RelationModule relations_;
  Gf2Subspace v_;
  std::vector<std::size_t> free_;
};

/// Gal(G) on the native basis of p.
GalGroup gal_group(const Psg& p);
GalGroup gal_group(const Psg& p, const Basis& basis);

/// Small-group label for order <= 16, otherwise "order 2^k".
std::string fingerprint_label(const GalGroup& g);
std::optional<SmallGroup> identify_small(const GalGroup& g);

/// Homomorphism of Galois groups given by generator images.
class GalHom {
 public:
  GalHom(GalGroup source, GalGroup target, std::vector<GalElement> images);
  /// Descends a hom W(source) -> W(target) to the quotients.
  static GalHom from_w(GalGroup source, GalGroup target, const WHom& w);

  const GalGroup& source() const noexcept { return source_; }
  const GalGroup& target() const noexcept { return target_; }
  const std::vector<GalElement>& images() const noexcept { return images_; }

  GalElement apply_w(const WElement& g) const;
  GalElement apply(const GalElement& g) const { return apply_w(source_.lift(g)); }

  /// True iff every element of V(source) maps to the identity.
  bool well_defined() const;
  /// Map on Frattini quotients, in basis coordinates (target n x source n).
  Gf2Matrix gamma_matrix() const;
  bool is_surjective() const;
  bool is_bijective() const;

  /// this o inner.
  GalHom compose(const GalHom& inner) const;
  bool same_as(const GalHom& other) const;

 private:
  GalGroup source_;
  GalGroup target_;
  std::vector<GalElement> images_;
};

/// Base-change isomorphism Gal(G, C) -> Gal(G, B), routed through the
/// native basis. Satisfies mu_BB = id and mu_BD = mu_BC o mu_CD exactly.
GalHom base_change_mu(const GalGroup& target_b, const GalGroup& source_c);
/// Single-step variant: x^C_j -> (0; 0; column j of the substitution matrix).
GalHom base_change_mu_direct(const GalGroup& target_b, const GalGroup& source_c);
/// Hom W(C) -> W(B) underlying base_change_mu.
WHom base_change_w(const Basis& target_b, const Basis& source_c);

/// Index-2 subgroup M_a = ker chi_a.
struct MaximalSubgroup {
  Element a;
  BitVec functional;  ///< coordinates of a in the group's basis

  bool contains(const GalElement& g) const { return !g.gamma.dot(functional); }
};

/// Throws PreconditionError for a = 1.
MaximalSubgroup maximal_subgroup(const GalGroup& g, Element a);
std::vector<MaximalSubgroup> maximal_subgroups(const GalGroup& g);

/// Nonzero gamma whose coset gamma*Phi contains an involution (V membership test).
std::vector<BitVec> involution_cosets(const GalGroup& g);
/// Same set via (gamma.a)(gamma.b) = 0 on all relation generators.
std::vector<BitVec> involution_cosets_by_relations(const GalGroup& g);

/// Characters chi_gamma of the involution cosets, in native coordinates.
/// Throws PreconditionError when the group is not k-stable.
std::vector<Character> orderings_via_galois(const GalGroup& g);

bool is_formally_real(const GalGroup& g);
/// Involution cosets span the Frattini quotient.
bool is_pythagorean(const GalGroup& g);
/// BFS closure of all involutions; guarded to order <= 2^20.
bool is_pythagorean_by_closure(const GalGroup& g, std::size_t max_log2 = 20);

/// Enumeration-based facts about involutions; guarded to order <= 2^max_log2.
struct InvolutionStructure {
  std::size_t involutions = 0;
  bool all_in_frattini = true;
  bool all_central = true;
  /// For each involution coset: number of conjugacy classes of involutions in it.
  std::vector<std::pair<BitVec, std::size_t>> classes_per_coset;
};
InvolutionStructure involution_structure(const GalGroup& g, std::size_t max_log2 = 16);

/// A normal subgroup of Gal(G) built over a basis that starts with the
/// given elements, together with the checks that were run on it.
struct NormalSubgroupWitness {
  std::string kind;
  std::vector<Element> elements;
  Basis basis = Basis::native(0);
  LinearSpec spec;  ///< in W(basis)
  std::optional<SmallGroup> quotient;
  std::optional<D4Witness> d4;
  std::vector<std::pair<std::string, bool>> checks;

  bool ok() const;
};

/// Needs a != 1 and l(a)l(a) = 0.
NormalSubgroupWitness z4_subgroup_for(const GalGroup& g, Element a);
/// Needs a, b != 1, a != b and l(a)l(b) = 0.
NormalSubgroupWitness d4_subgroup_for(const GalGroup& g, Element a, Element b);

struct StandardEntry {
  std::vector<Element> elements;  ///< {a} or {a, b}
  bool relation = false;          ///< l(a)l(b) = 0 in k2
  bool quotient_exists = false;   ///< a suitable Z4 / D4 quotient exists
  std::vector<std::uint32_t> images;  ///< generator images of one witness hom
};

struct StandardReport {
  bool k_stable = false;
  std::vector<StandardEntry> z4;
  std::vector<StandardEntry> d4;
  std::vector<std::string> failures;
  bool standard() const noexcept { return k_stable && failures.empty(); }
};

/// Decides standardness by enumerating homs into Z4 and D4; guarded to n <= 5.
StandardReport is_standard(const Psg& p);

/// Contravariant map Gal(target) -> Gal(source) of an injective morphism.
GalHom induced_gal_map(const PsgMorphism& f);

/// Linear map G -> G' (native coordinates, n' x n) dual to theta on
/// Frattini quotients. Throws PreconditionError if theta is not well defined.
Gf2Matrix dual_map(const GalHom& theta);

/// Base-change invariance over seeded random bases B_1..B_k plus the native one.
struct BaseChangeReport {
  std::size_t bases = 0;
  std::size_t order_mismatches = 0;
  std::size_t fingerprint_mismatches = 0;
  std::size_t non_bijective = 0;
  std::size_t cocycle_failures = 0;  ///< mu_BD != mu_BC . mu_CD on generators
  bool ok() const noexcept {
    return order_mismatches == 0 && fingerprint_mismatches == 0 && non_bijective == 0 && cocycle_failures == 0;
  }
};
BaseChangeReport base_change_check(const Psg& p, std::size_t k, std::uint64_t seed = 0);

struct LatticeReport {
  std::size_t subgroups_checked = 0;
  std::size_t double_perp_failures = 0;
  std::size_t saturated = 0;
  std::size_t involution_generated = 0;
  std::size_t correspondence_failures = 0;
  bool ok() const noexcept { return double_perp_failures == 0 && correspondence_failures == 0 && saturated == involution_generated; }
};

/// Delta -> Delta^perp on all subgroups (sampled when there are more than
/// `sample` of them); guarded to n <= max_n.
LatticeReport lattice_correspondence_check(const Psg& p, std::size_t sample = 100, std::uint64_t seed = 0,
                                           std::size_t max_n = 4);

/// Subgroup of the Frattini quotient annihilated by delta, in basis coordinates.
Gf2Subspace perp_of_subgroup(const GalGroup& g, const Gf2Subspace& delta);
/// Elements of G annihilated by a subspace of the Frattini quotient.
Gf2Subspace perp_of_frattini_subspace(const GalGroup& g, const Gf2Subspace& t);
/// Involutions lying over t generate the preimage of t modulo Phi(Gal).
bool generated_by_involutions(const GalGroup& g, const Gf2Subspace& t);

}  // namespace sgal
