#include "sgal/galois.hpp"

#include "sgal/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>

namespace sgal {

GalGroup::GalGroup(PsgPtr psg, Basis basis) : psg_(std::move(psg)), basis_(std::move(basis)) {
  if (!psg_) throw PreconditionError("GalGroup needs a pre-special group");
  if (basis_.n() != psg_->n()) throw PreconditionError("basis size differs from the group's");
  relations_ = relation_module(*psg_, basis_);
  v_ = orthogonal_complement(relations_.q);
  free_ = v_.free_positions();
}

std::uint64_t GalGroup::order() const {
  if (order_log2() > 63) throw GuardrailError("Galois group order does not fit in 64 bits", "order <= 2^63");
  return std::uint64_t{1} << order_log2();
}

GalElement GalGroup::identity() const { return GalElement{BitVec(n()), BitVec(phi_dim())}; }

GalElement GalGroup::generator(std::size_t i) const { return reduce(w_x(n(), i)); }

GalElement GalGroup::reduce(const WElement& g) const {
  if (g.n() != n()) throw PreconditionError("W element has the wrong rank for this Galois group");
  return GalElement{g.gamma, v_.reduce(g.phi())};
}

GalElement GalGroup::pow(const GalElement& g, std::size_t k) const {
  GalElement r = identity();
  for (std::size_t i = 0; i < k; ++i) r = mul(r, g);
  return r;
}

std::size_t GalGroup::element_order(const GalElement& g) const {
  std::size_t k = 1;
  for (GalElement x = g; !is_identity(x); x = mul(x, g)) ++k;
  return k;
}

std::uint64_t GalGroup::index(const GalElement& g) const {
  if (order_log2() > 30) throw GuardrailError("element numbering is limited to order <= 2^30", "order <= 2^30");
  std::uint64_t idx = g.gamma.to_mask();
  for (std::size_t k = 0; k < free_.size(); ++k)
    if (g.phi.get(free_[k])) idx |= std::uint64_t{1} << (n() + k);
  return idx;
}

GalElement GalGroup::element(std::uint64_t idx) const {
  if (order_log2() > 30) throw GuardrailError("element numbering is limited to order <= 2^30", "order <= 2^30");
  GalElement g{BitVec::from_mask(idx & ((std::uint64_t{1} << n()) - 1), n()), BitVec(phi_dim())};
  for (std::size_t k = 0; k < free_.size(); ++k)
    if ((idx >> (n() + k)) & 1U) g.phi.set(free_[k]);
  return g;
}

std::vector<GalElement> GalGroup::elements(std::size_t max_log2) const {
  if (order_log2() > max_log2)
    throw GuardrailError("Galois group of order 2^" + std::to_string(order_log2()) + " is too large to enumerate",
                         "order <= 2^" + std::to_string(max_log2));
  std::vector<GalElement> out;
  const std::uint64_t ord = order();
  out.reserve(ord);
  for (std::uint64_t i = 0; i < ord; ++i) out.push_back(element(i));
  return out;
}

FiniteGroup GalGroup::table(std::size_t max_log2) const {
  const auto els = elements(max_log2);
  const std::size_t ord = els.size();
  std::vector<std::uint32_t> t(ord * ord);
  for (std::size_t a = 0; a < ord; ++a)
    for (std::size_t b = 0; b < ord; ++b) t[a * ord + b] = static_cast<std::uint32_t>(index(mul(els[a], els[b])));
  return FiniteGroup(ord, std::move(t));
}

GalGroup gal_group(const Psg& p) { return GalGroup(std::make_shared<const Psg>(p), Basis::native(p.n())); }

GalGroup gal_group(const Psg& p, const Basis& basis) { return GalGroup(std::make_shared<const Psg>(p), basis); }

std::optional<SmallGroup> identify_small(const GalGroup& g) {
  if (g.order_log2() > 4) return std::nullopt;
  return make_small_group(g.table(4));
}

std::string fingerprint_label(const GalGroup& g) {
  if (auto sg = identify_small(g)) return to_string(sg->cls);
  return "order 2^" + std::to_string(g.order_log2());
}

GalHom::GalHom(GalGroup source, GalGroup target, std::vector<GalElement> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.n()) throw PreconditionError("one image per generator is required");
  for (auto& y : images_) {
    if (y.gamma.size() != target_.n() || y.phi.size() != target_.phi_dim())
      throw PreconditionError("generator image has the wrong shape");
    y = target_.reduce(target_.lift(y));
  }
}

GalHom GalHom::from_w(GalGroup source, GalGroup target, const WHom& w) {
  if (w.source_n() != source.n() || w.target_n() != target.n()) throw PreconditionError("W hom has the wrong ranks");
  std::vector<GalElement> imgs;
  for (const auto& y : w.images()) imgs.push_back(target.reduce(y));
  return GalHom(std::move(source), std::move(target), std::move(imgs));
}

GalElement GalHom::apply_w(const WElement& g) const {
  std::vector<WElement> lifts;
  for (const auto& y : images_) lifts.push_back(target_.lift(y));
  return target_.reduce(WHom(source_.n(), target_.n(), std::move(lifts)).apply(g));
}

bool GalHom::well_defined() const {
  for (const auto& v : source_.v().basis())
    if (!target_.is_identity(apply_w(WElement::from_phi(source_.n(), v, BitVec(source_.n()))))) return false;
  return true;
}

Gf2Matrix GalHom::gamma_matrix() const {
  Gf2Matrix m(target_.n(), source_.n());
  for (std::size_t j = 0; j < images_.size(); ++j)
    for (std::size_t i = 0; i < target_.n(); ++i)
      if (images_[j].gamma.get(i)) m.set(i, j);
  return m;
}

bool GalHom::is_surjective() const { return gamma_matrix().rank() == target_.n(); }

bool GalHom::is_bijective() const { return is_surjective() && source_.order_log2() == target_.order_log2(); }

GalHom GalHom::compose(const GalHom& inner) const {
  std::vector<GalElement> imgs;
  for (const auto& y : inner.images_) imgs.push_back(apply(y));
  return GalHom(inner.source_, target_, std::move(imgs));
}

bool GalHom::same_as(const GalHom& other) const {
  return source_.basis() == other.source_.basis() && target_.basis() == other.target_.basis() &&
         images_ == other.images_;
}

WHom base_change_w(const Basis& target_b, const Basis& source_c) {
  const std::size_t n = target_b.n();
  const Basis native = Basis::native(n);
  const WHom to_native = WHom::from_gamma_matrix(substitution_matrix(native, source_c));
  const WHom from_native = WHom::from_gamma_matrix(substitution_matrix(native, target_b)).inverse();
  return from_native.compose(to_native);
}

GalHom base_change_mu(const GalGroup& target_b, const GalGroup& source_c) {
  if (target_b.psg_ptr() != source_c.psg_ptr() && target_b.psg().name() != source_c.psg().name())
    throw PreconditionError("base change relates two bases of the same group");
  return GalHom::from_w(source_c, target_b, base_change_w(target_b.basis(), source_c.basis()));
}

GalHom base_change_mu_direct(const GalGroup& target_b, const GalGroup& source_c) {
  return GalHom::from_w(source_c, target_b,
                        WHom::from_gamma_matrix(substitution_matrix(target_b.basis(), source_c.basis())));
}

MaximalSubgroup maximal_subgroup(const GalGroup& g, Element a) {
  if (a.is_one()) throw PreconditionError("M_1 is the whole group, not a maximal subgroup");
  if (a.bits >= g.psg().size()) throw PreconditionError("element outside the group");
  return MaximalSubgroup{a, g.coords(a)};
}

std::vector<MaximalSubgroup> maximal_subgroups(const GalGroup& g) {
  std::vector<MaximalSubgroup> out;
  for (std::uint32_t a = 1; a < g.psg().size(); ++a) out.push_back(maximal_subgroup(g, Element{a}));
  return out;
}

namespace {

std::vector<BitVec> nonzero_vectors(std::size_t n) {
  std::vector<BitVec> out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) out.push_back(BitVec::from_mask(m, n));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<BitVec> involution_cosets(const GalGroup& g) {
  std::vector<BitVec> out;
  for (const auto& gamma : nonzero_vectors(g.n())) {
    WElement x(g.n());
    x.gamma = gamma;
    if (g.v().contains(w_square(x).phi())) out.push_back(gamma);
  }
  return out;
}

std::vector<BitVec> involution_cosets_by_relations(const GalGroup& g) {
  std::vector<std::pair<BitVec, BitVec>> gens;
  for (const auto& [a, b] : relation_generators(g.psg())) gens.emplace_back(g.coords(a), g.coords(b));
  std::vector<BitVec> out;
  for (const auto& gamma : nonzero_vectors(g.n())) {
    const bool ok = std::all_of(gens.begin(), gens.end(),
                                [&](const auto& ab) { return !(gamma.dot(ab.first) && gamma.dot(ab.second)); });
    if (ok) out.push_back(gamma);
  }
  return out;
}

std::vector<Character> orderings_via_galois(const GalGroup& g) {
  const auto ks = k_stable_check(g.psg());
  if (!ks.ok())
    throw PreconditionError("orderings via the Galois group need a k-stable group; " +
                            std::to_string(ks.violations.size()) + " violating pairs");
  std::vector<Character> out;
  for (const auto& gamma : involution_cosets(g)) {
    const Character chi{static_cast<std::uint32_t>(g.basis().inverse().apply(gamma).to_mask())};
    if (chi(g.psg().minus_one())) out.push_back(chi);
  }
  const std::size_t n = g.n();
  std::sort(out.begin(), out.end(),
            [&](Character a, Character b) { return BitVec::from_mask(a.coeffs, n) < BitVec::from_mask(b.coeffs, n); });
  return out;
}

bool is_formally_real(const GalGroup& g) { return !involution_cosets(g).empty(); }

bool is_pythagorean(const GalGroup& g) { return span_of(involution_cosets(g), g.n()).dim() == g.n(); }

bool is_pythagorean_by_closure(const GalGroup& g, std::size_t max_log2) {
  const auto els = g.elements(max_log2);
  std::vector<GalElement> gens;
  for (const auto& x : els)
    if (!g.is_identity(x) && g.is_identity(g.square(x))) gens.push_back(x);
  std::unordered_set<GalElement, GalElementHash> seen{g.identity()};
  std::deque<GalElement> queue{g.identity()};
  while (!queue.empty()) {
    const GalElement x = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      GalElement y = g.mul(x, s);
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  return seen.size() == els.size();
}

InvolutionStructure involution_structure(const GalGroup& g, std::size_t max_log2) {
  const auto els = g.elements(max_log2);
  std::vector<GalElement> gens;
  for (std::size_t i = 0; i < g.n(); ++i) gens.push_back(g.generator(i));
  InvolutionStructure s;
  std::vector<GalElement> invs;
  for (const auto& x : els)
    if (!g.is_identity(x) && g.is_identity(g.square(x))) invs.push_back(x);
  s.involutions = invs.size();
  for (const auto& x : invs) {
    if (!g.in_frattini(x)) s.all_in_frattini = false;
    for (const auto& y : gens)
      if (!g.is_identity(g.comm(x, y))) s.all_central = false;
  }
  std::unordered_set<GalElement, GalElementHash> assigned;
  std::map<BitVec, std::size_t> classes;
  for (const auto& x : invs) {
    if (x.gamma.none() || assigned.count(x)) continue;
    ++classes[x.gamma];
    std::deque<GalElement> queue{x};
    assigned.insert(x);
    while (!queue.empty()) {
      const GalElement c = queue.front();
      queue.pop_front();
      for (const auto& y : gens) {
        GalElement d = g.conj(c, y);
        if (assigned.insert(d).second) queue.push_back(std::move(d));
      }
    }
  }
  for (auto& [gamma, count] : classes) s.classes_per_coset.emplace_back(gamma, count);
  return s;
}

Gf2Subspace perp_of_subgroup(const GalGroup& g, const Gf2Subspace& delta) {
  if (delta.ambient_dim() != g.n()) throw PreconditionError("subgroup has the wrong ambient dimension");
  Gf2Subspace coords(g.n());
  for (const auto& a : delta.basis()) coords.insert(g.basis().coords(a));
  return orthogonal_complement(coords);
}

Gf2Subspace perp_of_frattini_subspace(const GalGroup& g, const Gf2Subspace& t) {
  if (t.ambient_dim() != g.n()) throw PreconditionError("subspace has the wrong ambient dimension");
  Gf2Subspace out(g.n());
  const Gf2Subspace complement = orthogonal_complement(t);
  for (const auto& c : complement.basis()) out.insert(g.basis().rows().left_apply(c));
  return out;
}

bool generated_by_involutions(const GalGroup& g, const Gf2Subspace& t) {
  Gf2Subspace span(g.n());
  for (const auto& gamma : involution_cosets(g))
    if (t.contains(gamma)) span.insert(gamma);
  return span == t;
}

}  // namespace sgal
