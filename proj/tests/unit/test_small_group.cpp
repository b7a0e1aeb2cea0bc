#include <doctest.h>

#include "sgal/errors.hpp"
#include "sgal/small_group.hpp"

using namespace sgal;

namespace {

// Direct product table of two groups.
FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t n = a.order() * b.order();
  std::vector<std::uint32_t> t(n * n);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) {
      const auto ax = x / b.order(), bx = x % b.order(), ay = y / b.order(), by = y % b.order();
      t[x * n + y] = static_cast<std::uint32_t>(a.mul(ax, ay) * b.order() + b.mul(bx, by));
    }
  return FiniteGroup(n, t);
}

}  // namespace

TEST_CASE("identification of the groups of order at most 8") {
  CHECK(make_small_group(FiniteGroup::cyclic(1)).cls == GroupClass::Trivial);
  CHECK(make_small_group(FiniteGroup::cyclic(2)).cls == GroupClass::Z2);
  CHECK(make_small_group(FiniteGroup::cyclic(4)).cls == GroupClass::Z4);
  CHECK(make_small_group(FiniteGroup::cyclic(8)).cls == GroupClass::Z8);
  const FiniteGroup z2 = FiniteGroup::cyclic(2);
  CHECK(make_small_group(product(z2, z2)).cls == GroupClass::Z2xZ2);
  CHECK(make_small_group(product(FiniteGroup::cyclic(4), z2)).cls == GroupClass::Z4xZ2);
  CHECK(make_small_group(product(product(z2, z2), z2)).cls == GroupClass::Z2xZ2xZ2);
  CHECK(make_small_group(FiniteGroup::dihedral8()).cls == GroupClass::D4);
  CHECK(make_small_group(FiniteGroup::quaternion8()).cls == GroupClass::Q8);
  CHECK(make_small_group(product(FiniteGroup::dihedral8(), z2)).cls == GroupClass::Other);
  CHECK(to_string(GroupClass::D4) == "D4");
}

TEST_CASE("group invariants") {
  const FiniteGroup d4 = FiniteGroup::dihedral8();
  CHECK_FALSE(d4.is_abelian());
  CHECK(d4.exponent() == 4);
  CHECK(d4.involution_count() == 5);
  CHECK(d4.element_order(1) == 4);
  CHECK(d4.element_order(4) == 2);
  for (std::uint32_t a = 0; a < 8; ++a) CHECK(d4.mul(a, d4.inverse(a)) == 0);
  const FiniteGroup q8 = FiniteGroup::quaternion8();
  CHECK(q8.involution_count() == 1);
  CHECK(FiniteGroup::cyclic(4).power(1, 3) == 3);
}

TEST_CASE("D4 witnesses") {
  const auto w = find_d4_witness(FiniteGroup::dihedral8());
  REQUIRE(w.has_value());
  const FiniteGroup d4 = FiniteGroup::dihedral8();
  CHECK(d4.element_order(w->r) == 4);
  CHECK(d4.element_order(w->s) == 2);
  CHECK(d4.element_order(d4.mul(w->s, w->r)) == 2);
  CHECK_FALSE(find_d4_witness(FiniteGroup::quaternion8()).has_value());
  CHECK_FALSE(find_d4_witness(FiniteGroup::cyclic(8)).has_value());
}

TEST_CASE("table validation") {
  CHECK_THROWS_AS(FiniteGroup(2, {0, 1, 1, 1}), PreconditionError);
  CHECK_THROWS_AS(FiniteGroup(2, {1, 0, 0, 1}), PreconditionError);
  CHECK_THROWS_AS(make_small_group(FiniteGroup::cyclic(32)), GuardrailError);
}
