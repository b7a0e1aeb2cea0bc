#include <doctest.h>

#include "oracle.hpp"
#include "sgal/galois.hpp"

#include <map>
#include <set>

using namespace sgal;

namespace {

const std::vector<std::string> kEntries = {"TRIVIAL_SG", "Z2_REAL", "F3LIKE", "FAN2", "FAN(3)",
                                            "PRODUCT(Z2_REAL,F3LIKE)", "PRODUCT(F3LIKE,F3LIKE)",
                                            "PRODUCT(FAN2,Z2_REAL)", "PRODUCT(FAN2,F3LIKE)",
                                            "PRODUCT(Z2_REAL,PRODUCT(Z2_REAL,Z2_REAL))", "FAN(4)"};

WElement from_tuple(const oracle::WTuple& t) {
  const std::size_t n = t.alpha.size();
  return WElement::from_full(n, BitVec::from_mask(oracle::w_encode(t), w_coord_dim(n)));
}

BitVec gamma_vec(const std::vector<int>& g) {
  BitVec v(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) v.set(i, g[i]);
  return v;
}

}  // namespace

TEST_CASE("symbolic Galois groups agree with explicit coset tables") {
  for (const auto& name : kEntries) {
    CAPTURE(name);
    const Psg p = catalog(name);
    const GalGroup g = gal_group(p);
    REQUIRE(g.order_log2() <= 10);
    const oracle::CosetTable t = oracle::coset_table(p);
    CHECK(t.order == g.order());

    // reduce() and the explicit coset partition define the same map on W
    std::map<GalElement, std::uint32_t> lib_to_oracle;
    bool consistent = true;
    for (const auto& [w, id] : t.coset_of) {
      const auto [it, fresh] = lib_to_oracle.emplace(g.reduce(from_tuple(w)), id);
      if (!fresh && it->second != id) consistent = false;
    }
    CHECK(consistent);
    CHECK(lib_to_oracle.size() == t.order);

    // multiplication matches the table
    std::vector<GalElement> by_id(t.order);
    for (const auto& [el, id] : lib_to_oracle) by_id[id] = el;
    for (std::uint32_t a = 0; a < t.order; ++a)
      for (std::uint32_t b = 0; b < t.order; ++b) REQUIRE(lib_to_oracle.at(g.mul(by_id[a], by_id[b])) == t.mul[a][b]);

    // identification and invariants
    const oracle::GroupFacts f = oracle::facts(t.mul);
    if (t.order <= 8) CHECK(fingerprint_label(g) == f.label);
    std::map<std::size_t, std::size_t> hist;
    for (const auto& el : g.elements()) ++hist[g.element_order(el)];
    CHECK(hist == f.order_histogram);
  }
}

TEST_CASE("maximal subgroups agree with kernels of homomorphisms to F2") {
  for (const auto& name : kEntries) {
    CAPTURE(name);
    const Psg p = catalog(name);
    const GalGroup g = gal_group(p);
    const oracle::CosetTable t = oracle::coset_table(p);
    std::map<GalElement, std::uint32_t> ids;
    for (const auto& [w, id] : t.coset_of) ids.emplace(g.reduce(from_tuple(w)), id);
    std::set<std::vector<int>> kernels;
    for (const auto& h : oracle::homs_to_f2(t)) {
      bool zero = true;
      for (int v : h) zero = zero && v == 0;
      if (!zero) kernels.insert(h);
    }
    std::set<std::vector<int>> symbolic;
    for (const auto& m : maximal_subgroups(g)) {
      std::vector<int> v(t.order);
      for (const auto& [el, id] : ids) v[id] = m.contains(el) ? 0 : 1;
      symbolic.insert(v);
    }
    CHECK(kernels == symbolic);
    CHECK(kernels.size() + 1 == (std::size_t{1} << p.n()));
  }
}

TEST_CASE("involution queries agree with enumeration") {
  for (const auto& name : kEntries) {
    CAPTURE(name);
    const Psg p = catalog(name);
    const GalGroup g = gal_group(p);
    const oracle::CosetTable t = oracle::coset_table(p);
    const auto inv = oracle::involutions(t);

    std::set<BitVec> cosets;
    for (auto s : inv) {
      const BitVec gamma = gamma_vec(t.gamma_of[s]);
      if (gamma.any()) cosets.insert(gamma);
    }
    const auto lib = involution_cosets(g);
    CHECK(std::vector<BitVec>(cosets.begin(), cosets.end()) == lib);

    // generation by involutions
    const auto gen = oracle::generated(t, inv);
    bool all = true;
    for (int v : gen) all = all && v;
    CHECK(all == is_pythagorean(g));
    CHECK(all == is_pythagorean_by_closure(g));

    // subgroups above the Frattini subgroup: involutions inside generate them modulo Phi
    for (const auto& sub : all_subspaces(p.n())) {
      std::vector<std::uint32_t> inside;
      for (auto s : inv)
        if (sub.contains(gamma_vec(t.gamma_of[s]))) inside.push_back(s);
      const auto closure = oracle::generated(t, inside);
      Gf2Subspace reached(p.n());
      for (std::uint32_t s = 0; s < t.order; ++s)
        if (closure[s]) reached.insert(gamma_vec(t.gamma_of[s]));
      CHECK((reached == sub) == generated_by_involutions(g, sub));
    }
  }
}
