#include <doctest.h>

#include "sgal/cohomology.hpp"
#include "sgal/errors.hpp"

#include <random>

using namespace sgal;

namespace {

Element e(std::uint32_t bits) { return Element{bits}; }

const std::vector<std::string> kEntries = {"TRIVIAL_SG", "Z2_REAL", "F3LIKE", "FAN2", "FAN(3)",
                                            "PRODUCT(Z2_REAL,F3LIKE)", "PRODUCT(FAN2,Z2_REAL)"};

Cochain1 random_cochain1(std::size_t n, std::mt19937_64& rng) {
  Cochain1 f{BitVec(n)};
  for (std::size_t i = 0; i < n; ++i) f.values.set(i, rng() & 1u);
  return f;
}

Cochain2 random_cochain2(std::size_t n, std::mt19937_64& rng) {
  Cochain2 c{n, BitVec(n * n)};
  for (std::size_t i = 0; i < n * n; ++i) c.values.set(i, rng() & 1u);
  return c;
}

Cochain2 add(const Cochain2& a, const Cochain2& b) { return Cochain2{a.order, a.values ^ b.values}; }

// Exhaustive search over all 1-cochains of a group of order <= 16.
bool coboundary_by_search(const CohomologyContext& ctx, const Cochain2& c) {
  const std::size_t n = ctx.order();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
    if (d1(ctx, Cochain1{BitVec::from_mask(mask, n)}).values == c.values) return true;
  return false;
}

}  // namespace

TEST_CASE("H0 and H1 of the catalog") {
  for (const auto& name : kEntries) {
    CAPTURE(name);
    const Psg p = catalog(name);
    const GalGroup g = gal_group(p);
    CHECK(h0(g).order == 2);
    CHECK(h0(g).distinguished == 1);
    const H1Group h = h1(g);
    CHECK(h.dim == p.n());
    CHECK(h1_dim_by_cocycles(CohomologyContext(g)) == p.n());
    CHECK(h.distinguished.functional == g.coords(p.minus_one()));
    for (const auto& s : g.elements()) CHECK(h.distinguished(s) == g.chi(p.minus_one(), s));
  }
  CHECK(h1(gal_group(catalog("F3LIKE"))).dim == 1);
  CHECK(h1(gal_group(catalog("TRIVIAL_SG"))).dim == 0);
  CHECK(h1(gal_group(catalog("FAN2"))).dim == 2);
}

TEST_CASE("complex and cup-product properties") {
  std::mt19937_64 rng(12);
  for (const auto& name : {"Z2_REAL", "F3LIKE", "FAN2", "PRODUCT(Z2_REAL,F3LIKE)"}) {
    CAPTURE(name);
    const GalGroup g = gal_group(catalog(name));
    const CohomologyContext ctx(g);
    const std::size_t n = ctx.order();
    for (int trial = 0; trial < 5; ++trial) {
      const Cochain2 c = d1(ctx, random_cochain1(n, rng));
      CHECK(is_cocycle(ctx, c));
      const auto f = is_coboundary(ctx, c);
      REQUIRE(f.has_value());
      CHECK(d1(ctx, *f).values == c.values);
    }
    const Cochain2 zero{n, BitVec(n * n)};
    const auto f0 = is_coboundary(ctx, zero);
    REQUIRE(f0.has_value());
    CHECK(f0->values.none());
    const H1Group h = h1(g);
    const GalCharacter none{BitVec(g.n())};
    for (const auto& a : h.basis) {
      CHECK(cup(ctx, a, none).values.none());
      for (const auto& b : h.basis) {
        const Cochain2 ab = cup(ctx, a, b), ba = cup(ctx, b, a);
        CHECK(is_cocycle(ctx, ab));
        CHECK(is_coboundary(ctx, add(ab, ba)).has_value());
        for (const auto& c : h.basis) {
          const GalCharacter bc{b.functional ^ c.functional};
          CHECK(cup(ctx, a, bc).values == (ab.values ^ cup(ctx, a, c).values));
        }
      }
    }
  }
}

TEST_CASE("is_coboundary agrees with exhaustive search on random cochains") {
  std::mt19937_64 rng(99);
  for (const auto& name : {"Z2_REAL", "F3LIKE", "FAN2"}) {
    CAPTURE(name);
    const GalGroup g = gal_group(catalog(name));
    const CohomologyContext ctx(g);
    std::size_t hits = 0;
    for (int trial = 0; trial < 60; ++trial) {
      // mix cocycles from cup products with coboundaries and noise
      Cochain2 c = d1(ctx, random_cochain1(ctx.order(), rng));
      if (trial % 3 == 0) c = add(c, random_cochain2(ctx.order(), rng));
      if (trial % 3 == 1) c = add(c, cup(ctx, h1(g).basis.front(), h1(g).basis.back()));
      const bool lib = is_coboundary(ctx, c).has_value();
      CHECK(lib == coboundary_by_search(ctx, c));
      hits += lib;
    }
    CHECK(hits > 0);
  }
}

TEST_CASE("cup square on Z2 and Z4") {
  const GalGroup z2 = gal_group(catalog("Z2_REAL"));
  const CohomologyContext c2(z2);
  CHECK_FALSE(is_coboundary(c2, cup(c2, character_of(z2, e(1)), character_of(z2, e(1)))).has_value());

  // On Z4 the square of the nonzero character is a coboundary.
  const GalGroup z4 = gal_group(catalog("F3LIKE"));
  const CohomologyContext c4(z4);
  const GalCharacter chi = character_of(z4, e(1));
  const Cochain2 sq = cup(c4, chi, chi);
  const auto f = is_coboundary(c4, sq);
  REQUIRE(f.has_value());
  CHECK(d1(c4, *f).values == sq.values);
  CHECK(coboundary_by_search(c4, sq));
  const GalElement x = z4.generator(0);
  for (std::size_t k = 0; k < 4; ++k) CHECK(f->at(static_cast<std::uint32_t>(z4.index(z4.pow(x, k)))) == (k >= 2));

  // The carry cocycle of Z8 -> Z4 is the nonzero class.
  std::vector<std::uint32_t> idx(4);
  for (std::size_t k = 0; k < 4; ++k) idx[k] = static_cast<std::uint32_t>(z4.index(z4.pow(x, k)));
  Cochain2 carry{4, BitVec(16)};
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) carry.set(idx[a], idx[b], a + b >= 4);
  CHECK(is_cocycle(c4, carry));
  CHECK_FALSE(is_coboundary(c4, carry).has_value());
  CHECK_FALSE(coboundary_by_search(c4, carry));
}

TEST_CASE("second cohomology") {
  CHECK(h2_dim(gal_group(catalog("TRIVIAL_SG"))) == 0);
  CHECK(h2_dim(gal_group(catalog("Z2_REAL"))) == 1);
  CHECK(h2_dim(gal_group(catalog("F3LIKE"))) == 1);
  CHECK(h2_dim(gal_group(catalog("FAN2"))) == 3);
  CHECK(h2_dim(gal_group(catalog("FAN(3)"))) == 6);
  for (const auto& name : kEntries) {
    CAPTURE(name);
    const GalGroup g = gal_group(catalog(name));
    if (g.order_log2() <= 6) CHECK(h2_dim(g) == h2_dim_by_resolution(g));
  }
  CHECK_THROWS_AS(h2_dim(gal_group(catalog("FAN(4)")), 6), GuardrailError);
}

TEST_CASE("cup products on relation pairs") {
  CHECK(milnor_map_experiment(catalog("TRIVIAL_SG")).rows.empty());
  CHECK(milnor_map_experiment(catalog("TRIVIAL_SG")).well_defined());
  const MilnorReport f3 = milnor_map_experiment(catalog("F3LIKE"));
  REQUIRE(f3.rows.size() == 1);
  CHECK(f3.rows.front().a == e(1));
  CHECK(f3.rows.front().b == e(1));
  CHECK(f3.rows.front().cup_is_coboundary);
  const MilnorReport fan2 = milnor_map_experiment(catalog("FAN2"));
  CHECK(fan2.rows.size() == 2);
  for (const auto& row : fan2.rows) {
    CHECK((row.a * row.b) == catalog("FAN2").minus_one());
    CHECK(k2_product_is_zero(catalog("FAN2"), row.a, row.b));
  }
  for (const auto& name : kEntries) {
    CAPTURE(name);
    const MilnorReport r = milnor_map_experiment(catalog(name));
    MESSAGE(name << ": " << r.rows.size() << " pairs, well defined = " << r.well_defined());
  }
}
