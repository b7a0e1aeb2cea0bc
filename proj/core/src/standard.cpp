#include "sgal/errors.hpp"
#include "sgal/galois.hpp"

#include <map>

namespace sgal {

namespace {

std::string describe(const std::vector<Element>& els, std::size_t n) {
  std::string s = "{";
  for (std::size_t i = 0; i < els.size(); ++i) s += (i ? "," : "") + to_bitstring(els[i], n);
  return s + "}";
}

}  // namespace

StandardReport is_standard(const Psg& p) {
  if (p.n() > 5) throw GuardrailError("standardness check enumerates 8^n homs; limited to n <= 5", "n <= 5");
  StandardReport report;
  report.k_stable = k_stable_check(p).ok();
  if (!report.k_stable) {
    report.failures.push_back("group is not k-stable");
    return report;
  }
  const std::size_t n = p.n();
  const GalGroup g = gal_group(p);
  const RelationModule& rm = g.relations();
  const std::size_t sz = p.size();
  const std::size_t mixed_off = n;

  // Z4 targets: x_i -> k_i. The obstruction on Phi is the vector of odd k_i.
  std::map<std::uint32_t, std::vector<std::uint32_t>> z4_found;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 4;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<std::uint32_t> imgs(n);
    BitVec parity(n);
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= 4) {
      imgs[i] = static_cast<std::uint32_t>(c % 4);
      if (imgs[i] & 1U) parity.set(i);
    }
    if (parity.none()) continue;
    BitVec lambda(p2_dim(n));
    for (std::size_t i = parity.find_first(); i != BitVec::npos; i = parity.find_next(i + 1)) lambda.set(i);
    if (!rm.q.contains(lambda)) continue;
    const Element a = g.basis().element(parity);
    z4_found.try_emplace(a.bits, imgs);
  }

  // D4 targets: x_i -> r^k s^e (index k + 4e).
  const FiniteGroup d4 = FiniteGroup::dihedral8();
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> d4_found;
  total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 8;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<std::uint32_t> imgs(n);
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= 8) imgs[i] = static_cast<std::uint32_t>(c % 8);
    BitVec rot(n), kpar(n);
    Gf2Subspace frattini_image(2);
    for (std::size_t i = 0; i < n; ++i) {
      const bool e = imgs[i] / 4, k = (imgs[i] % 4) & 1U;
      if (e) rot.set(i);
      if (k) kpar.set(i);
      BitVec v(2);
      v.set(0, k);
      v.set(1, e);
      frattini_image.insert(v);
    }
    if (frattini_image.dim() != 2) continue;
    BitVec lambda(p2_dim(n));
    for (std::size_t i = 0; i < n; ++i) {
      if (d4.mul(imgs[i], imgs[i]) == 2) lambda.set(i);
      for (std::size_t j = i + 1; j < n; ++j) {
        const auto ab = d4.mul(imgs[i], imgs[j]), ba = d4.mul(imgs[j], imgs[i]);
        if (ab != ba) lambda.set(mixed_off + pair_index(n, i, j));
      }
    }
    if (!rm.q.contains(lambda)) continue;
    // Characters of D4 with kernels <r^2, s> and <r^2, sr> pull back to the pair.
    const Element c2 = g.basis().element(kpar);
    const Element c3 = g.basis().element(kpar ^ rot);
    const auto key = std::minmax(c2.bits, c3.bits);
    d4_found.try_emplace(key, imgs);
  }

  for (std::uint32_t a = 1; a < sz; ++a) {
    StandardEntry e;
    e.elements = {Element{a}};
    e.relation = k2_product_is_zero(p, rm, Element{a}, Element{a});
    if (auto it = z4_found.find(a); it != z4_found.end()) {
      e.quotient_exists = true;
      e.images = it->second;
    }
    if (e.relation != e.quotient_exists)
      report.failures.push_back("Z4 criterion fails at " + describe(e.elements, n));
    report.z4.push_back(std::move(e));
  }
  for (std::uint32_t a = 1; a < sz; ++a)
    for (std::uint32_t b = a + 1; b < sz; ++b) {
      StandardEntry e;
      e.elements = {Element{a}, Element{b}};
      e.relation = k2_product_is_zero(p, rm, Element{a}, Element{b});
      if (auto it = d4_found.find({a, b}); it != d4_found.end()) {
        e.quotient_exists = true;
        e.images = it->second;
      }
      if (e.relation != e.quotient_exists)
        report.failures.push_back("D4 criterion fails at " + describe(e.elements, n));
      report.d4.push_back(std::move(e));
    }
  return report;
}

}  // namespace sgal
