#include <doctest.h>

#include "sgal/errors.hpp"
#include "sgal/galois.hpp"

using namespace sgal;

namespace {

PsgPtr ptr(const std::string& name) { return std::make_shared<const Psg>(catalog(name)); }

PsgMorphism compose(const PsgMorphism& outer, const PsgMorphism& inner) {
  return PsgMorphism{inner.source, outer.target, outer.matrix * inner.matrix};
}

}  // namespace

TEST_CASE("identity morphism induces the identity") {
  for (const auto& name : {"Z2_REAL", "F3LIKE", "FAN2", "FAN(3)"}) {
    CAPTURE(name);
    const PsgPtr p = ptr(name);
    const PsgMorphism id{p, p, Gf2Matrix::identity(p->n())};
    const GalHom h = induced_gal_map(id);
    for (std::size_t i = 0; i < p->n(); ++i) CHECK(h.images()[i] == h.source().generator(i));
    CHECK(dual_map(h) == Gf2Matrix::identity(p->n()));
  }
}

TEST_CASE("inclusions along the coordinate chain") {
  const PsgPtr z2 = ptr("Z2_REAL"), fan2 = ptr("FAN2"), fan3 = ptr("FAN(3)");
  const PsgMorphism f{z2, fan2, Gf2Matrix::from_strings({"1", "0"})};
  const PsgMorphism g{fan2, fan3, Gf2Matrix::from_strings({"10", "01", "00"})};
  REQUIRE(check_morphism(f).ok());
  REQUIRE(check_morphism(g).ok());
  const GalHom hf = induced_gal_map(f), hg = induced_gal_map(g);
  CHECK(hf.is_surjective());
  CHECK(hg.is_surjective());
  CHECK(hf.well_defined());
  // contravariance: (g o f)^* = f^* o g^*
  const GalHom hgf = induced_gal_map(compose(g, f));
  CHECK(hgf.same_as(hf.compose(hg)));
  // duals recover the morphisms and compose covariantly
  CHECK(dual_map(hf) == f.matrix);
  CHECK(dual_map(hg) == g.matrix);
  CHECK(dual_map(hgf) == g.matrix * f.matrix);
  CHECK(dual_map(hf.compose(hg)) == dual_map(hg) * dual_map(hf));
}

TEST_CASE("non-coordinate embeddings are functorial modulo the Frattini subgroup") {
  const PsgPtr fan2 = ptr("FAN2"), fan3 = ptr("FAN(3)"), z2 = ptr("Z2_REAL");
  const PsgMorphism f{z2, fan2, Gf2Matrix::from_strings({"1", "0"})};
  const PsgMorphism g{fan2, fan3, Gf2Matrix::from_strings({"10", "01", "01"})};
  REQUIRE(check_morphism(g).ok());
  const GalHom hg = induced_gal_map(g);
  CHECK(hg.well_defined());
  CHECK(dual_map(hg) == g.matrix);
  const GalHom hgf = induced_gal_map(compose(g, f));
  CHECK(hgf.gamma_matrix() == induced_gal_map(f).compose(hg).gamma_matrix());

  // two non-coordinate steps: generator images differ by Frattini elements
  const PsgPtr fan4 = ptr("FAN(4)");
  const PsgMorphism k{fan3, fan4, Gf2Matrix::from_strings({"100", "010", "011", "001"})};
  REQUIRE(check_morphism(k).ok());
  const GalHom direct = induced_gal_map(PsgMorphism{fan2, fan4, k.matrix * g.matrix});
  const GalHom composite = hg.compose(induced_gal_map(k));
  CHECK(direct.gamma_matrix() == composite.gamma_matrix());
  CHECK_FALSE(direct.same_as(composite));
  const GalGroup& src = direct.source();
  for (std::size_t i = 0; i < src.n(); ++i)
    CHECK(direct.target().in_frattini(
        direct.target().mul(direct.images()[i], direct.target().inv(composite.images()[i]))));
}

TEST_CASE("preconditions") {
  const PsgPtr z2 = ptr("Z2_REAL"), fan2 = ptr("FAN2");
  CHECK_THROWS_AS(induced_gal_map(PsgMorphism{z2, fan2, Gf2Matrix::from_strings({"0", "1"})}), PreconditionError);
  CHECK_THROWS_AS(induced_gal_map(PsgMorphism{fan2, z2, Gf2Matrix::from_strings({"11"})}), PreconditionError);
  PsgMorphism no_minus{z2, fan2, Gf2Matrix::from_strings({"1", "0"})};
  no_minus.preserves_minus_one = false;
  CHECK_THROWS_AS(induced_gal_map(no_minus), PreconditionError);
}
