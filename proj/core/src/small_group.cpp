#include "sgal/small_group.hpp"

#include "sgal/errors.hpp"

#include <numeric>

namespace sgal {

FiniteGroup::FiniteGroup(std::size_t order, std::vector<std::uint32_t> table)
    : order_(order), table_(std::move(table)) {
  if (order_ == 0 || table_.size() != order_ * order_) throw PreconditionError("group table has the wrong size");
  for (auto v : table_)
    if (v >= order_) throw PreconditionError("group table entry out of range");
  for (std::uint32_t a = 0; a < order_; ++a)
    if (mul(0, a) != a || mul(a, 0) != a) throw PreconditionError("element 0 is not the identity");
  for (std::uint32_t a = 0; a < order_; ++a) {
    std::vector<bool> seen(order_, false);
    for (std::uint32_t b = 0; b < order_; ++b) {
      if (seen[mul(a, b)]) throw PreconditionError("group table row is not a permutation");
      seen[mul(a, b)] = true;
    }
  }
  if (order_ <= 256) {
    for (std::uint32_t a = 0; a < order_; ++a)
      for (std::uint32_t b = 0; b < order_; ++b)
        for (std::uint32_t c = 0; c < order_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw PreconditionError("group table is not associative");
  }
}

FiniteGroup FiniteGroup::cyclic(std::size_t k) {
  std::vector<std::uint32_t> t(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) t[a * k + b] = static_cast<std::uint32_t>((a + b) % k);
  return FiniteGroup(k, std::move(t));
}

FiniteGroup FiniteGroup::dihedral8() {
  // r^k1 s^e1 * r^k2 s^e2 = r^(k1 + (-1)^e1 k2) s^(e1+e2)
  std::vector<std::uint32_t> t(64);
  for (std::uint32_t a = 0; a < 8; ++a)
    for (std::uint32_t b = 0; b < 8; ++b) {
      const std::uint32_t k1 = a % 4, e1 = a / 4, k2 = b % 4, e2 = b / 4;
      const std::uint32_t k = (k1 + (e1 ? 4 - k2 : k2)) % 4;
      t[a * 8 + b] = k + 4 * ((e1 + e2) % 2);
    }
  return FiniteGroup(8, std::move(t));
}

FiniteGroup FiniteGroup::quaternion8() {
  // Elements (sign, unit) with unit in {1, i, j, k}; index = unit + 4 * sign.
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::uint32_t> t(64);
  for (std::uint32_t a = 0; a < 8; ++a)
    for (std::uint32_t b = 0; b < 8; ++b) {
      const int u = unit_mul[a % 4][b % 4];
      const int s = (static_cast<int>(a / 4) + static_cast<int>(b / 4) + unit_sign[a % 4][b % 4]) % 2;
      t[a * 8 + b] = static_cast<std::uint32_t>(u + 4 * s);
    }
  return FiniteGroup(8, std::move(t));
}

std::uint32_t FiniteGroup::inverse(std::uint32_t a) const {
  for (std::uint32_t b = 0; b < order_; ++b)
    if (mul(a, b) == 0) return b;
  throw PreconditionError("element has no inverse");
}

std::uint32_t FiniteGroup::power(std::uint32_t a, std::size_t k) const {
  std::uint32_t r = 0;
  for (std::size_t i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

std::size_t FiniteGroup::element_order(std::uint32_t a) const {
  std::size_t k = 1;
  for (std::uint32_t x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (std::uint32_t a = 0; a < order_; ++a)
    for (std::uint32_t b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (std::uint32_t a = 0; a < order_; ++a) e = std::lcm(e, element_order(a));
  return e;
}

std::size_t FiniteGroup::involution_count() const {
  std::size_t c = 0;
  for (std::uint32_t a = 1; a < order_; ++a)
    if (mul(a, a) == 0) ++c;
  return c;
}

std::string to_string(GroupClass c) {
  switch (c) {
    case GroupClass::Trivial: return "TRIVIAL";
    case GroupClass::Z2: return "Z2";
    case GroupClass::Z4: return "Z4";
    case GroupClass::Z2xZ2: return "Z2xZ2";
    case GroupClass::Z8: return "Z8";
    case GroupClass::Z4xZ2: return "Z4xZ2";
    case GroupClass::Z2xZ2xZ2: return "Z2^3";
    case GroupClass::D4: return "D4";
    case GroupClass::Q8: return "Q8";
    case GroupClass::Other: return "OTHER";
  }
  return "OTHER";
}

Fingerprint fingerprint(const FiniteGroup& g) {
  return Fingerprint{g.order(), g.is_abelian(), g.exponent(), g.involution_count()};
}

GroupClass identify(const Fingerprint& f) {
  switch (f.order) {
    case 1: return GroupClass::Trivial;
    case 2: return GroupClass::Z2;
    case 4: return f.exponent == 4 ? GroupClass::Z4 : GroupClass::Z2xZ2;
    case 8:
      if (f.abelian) {
        if (f.exponent == 8) return GroupClass::Z8;
        if (f.exponent == 4) return GroupClass::Z4xZ2;
        return GroupClass::Z2xZ2xZ2;
      }
      return f.involutions == 5 ? GroupClass::D4 : GroupClass::Q8;
    default: return GroupClass::Other;
  }
}

SmallGroup make_small_group(FiniteGroup g) {
  if (g.order() > 16) throw GuardrailError("small group identification needs order <= 16", "order <= 16");
  SmallGroup sg;
  sg.fp = fingerprint(g);
  sg.cls = identify(sg.fp);
  sg.group = std::move(g);
  return sg;
}

std::optional<D4Witness> find_d4_witness(const FiniteGroup& g) {
  for (std::uint32_t r = 1; r < g.order(); ++r) {
    if (g.element_order(r) != 4) continue;
    for (std::uint32_t s = 1; s < g.order(); ++s) {
      if (g.element_order(s) != 2) continue;
      bool in_r = false;
      for (std::size_t k = 0; k < 4; ++k) in_r = in_r || g.power(r, k) == s;
      if (in_r) continue;
      const std::uint32_t sr = g.mul(s, r);
      if (g.mul(sr, sr) == 0) return D4Witness{r, s};
    }
  }
  return std::nullopt;
}

}  // namespace sgal
