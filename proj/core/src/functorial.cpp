#include "sgal/errors.hpp"
#include "sgal/galois.hpp"

#include <random>

namespace sgal {

GalHom induced_gal_map(const PsgMorphism& f) {
  if (!f.is_injective()) throw PreconditionError("induced map needs an injective morphism");
  if (!f.preserves_minus_one) throw PreconditionError("induced map needs a morphism preserving -1");
  if (!check_morphism(f).ok()) throw PreconditionError("map is not a morphism of pre-special groups");
  const GalGroup source = GalGroup(f.target, Basis::native(f.target->n()));
  const GalGroup target = GalGroup(f.source, Basis::native(f.source->n()));
  // x'_k (dual to the k-th target coordinate) goes to the character x -> f(x)_k.
  WHom w = WHom::from_gamma_matrix(f.matrix.transpose());
  GalHom h = GalHom::from_w(source, target, w);
  if (!h.well_defined()) throw PreconditionError("induced map does not vanish on V");
  return h;
}

Gf2Matrix dual_map(const GalHom& theta) {
  if (!theta.well_defined()) throw PreconditionError("theta is not a well-defined homomorphism");
  const GalGroup& src = theta.source();  // Gal(G')
  const GalGroup& tgt = theta.target();  // Gal(G)
  const Gf2Matrix t = theta.gamma_matrix();
  const Gf2Matrix tt = t.transpose();
  // chi_a o theta = chi_{a'} with coords(a') = T^t coords(a).
  Gf2Matrix out(src.n(), tgt.n());
  for (std::size_t j = 0; j < tgt.n(); ++j) {
    const BitVec a_coords = tgt.basis().coords(BitVec::unit(tgt.n(), j));
    const BitVec img = src.basis().rows().left_apply(tt.apply(a_coords));
    for (std::size_t i = 0; i < src.n(); ++i)
      if (img.get(i)) out.set(i, j);
  }
  return out;
}

BaseChangeReport base_change_check(const Psg& p, std::size_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<GalGroup> groups{gal_group(p)};
  for (std::size_t i = 0; i < k; ++i) groups.push_back(gal_group(p, Basis(random_invertible(p.n(), rng))));
  BaseChangeReport r;
  r.bases = groups.size();
  const std::string label = fingerprint_label(groups.front());
  for (const auto& g : groups) {
    if (g.order_log2() != groups.front().order_log2()) ++r.order_mismatches;
    if (fingerprint_label(g) != label) ++r.fingerprint_mismatches;
  }
  for (std::size_t b = 0; b < groups.size(); ++b)
    for (std::size_t c = 0; c < groups.size(); ++c) {
      const GalHom bc = base_change_mu(groups[b], groups[c]);
      if (!bc.is_bijective()) ++r.non_bijective;
      for (std::size_t d = 0; d < groups.size(); ++d) {
        const GalHom bd = base_change_mu(groups[b], groups[d]);
        if (!bd.same_as(bc.compose(base_change_mu(groups[c], groups[d])))) ++r.cocycle_failures;
      }
    }
  return r;
}

}  // namespace sgal
