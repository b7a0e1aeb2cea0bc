#include <doctest.h>

#include "sgal/errors.hpp"
#include "sgal/gf2.hpp"

#include <random>
#include <set>

using namespace sgal;

namespace {

BitVec bv(const char* s) { return BitVec::from_string(s); }

// All vectors of F2^m orthogonal to every vector of s, by enumeration.
std::set<std::string> brute_complement(const Gf2Subspace& s) {
  std::set<std::string> out;
  const std::size_t m = s.ambient_dim();
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x) {
    const BitVec v = BitVec::from_mask(x, m);
    bool ok = true;
    for (const auto& b : s.basis()) ok = ok && !v.dot(b);
    if (ok) out.insert(v.to_string());
  }
  return out;
}

std::set<std::string> element_strings(const Gf2Subspace& s) {
  std::set<std::string> out;
  for (const auto& e : s.elements()) out.insert(e.to_string());
  return out;
}

}  // namespace

TEST_CASE("bitvec basics") {
  BitVec v(130);
  CHECK(v.none());
  v.set(0);
  v.set(64);
  v.set(129);
  CHECK(v.count() == 3);
  CHECK(v.find_first() == 0);
  CHECK(v.find_next(1) == 64);
  CHECK(v.find_next(65) == 129);
  CHECK(v.find_next(130) == BitVec::npos);
  v.flip(64);
  CHECK_FALSE(v.get(64));
  CHECK(bv("1011").to_string() == "1011");
  CHECK(bv("1011").dot(bv("0011")) == false);
  CHECK(bv("1011").dot(bv("0010")) == true);
  CHECK(BitVec::concat(bv("10"), bv("011")) == bv("10011"));
  CHECK(bv("110100").slice(2, 3) == bv("010"));
  CHECK(BitVec::from_mask(0b101, 3) == bv("101"));
  CHECK(bv("101").to_mask() == 0b101u);
  CHECK(bv("01") < bv("10"));
  CHECK(bv("101").hash() == bv("101").hash());
}

TEST_CASE("rref examples") {
  CHECK(rref(Gf2Matrix::from_strings({"11", "01"})).basis() == std::vector<BitVec>{bv("10"), bv("01")});
  const Gf2Subspace empty = span_of({}, 3);
  CHECK(empty.dim() == 0);
  CHECK(empty.ambient_dim() == 3);
  const Gf2Subspace dup = rref(Gf2Matrix::from_strings({"110", "110"}));
  CHECK(dup.dim() == 1);
  CHECK(dup.basis().front() == bv("110"));
}

TEST_CASE("membership examples") {
  const Gf2Subspace s = span_of({bv("0110"), bv("1001")}, 4);
  CHECK(s.contains(BitVec(4)));
  CHECK_FALSE(span_of({bv("01")}, 2).contains(bv("10")));
  CHECK(s.contains(bv("1111")));
  CHECK_THROWS_AS(contains(s, bv("011")), PreconditionError);
}

TEST_CASE("orthogonal complement examples") {
  CHECK(orthogonal_complement(Gf2Subspace::full(3)).dim() == 0);
  CHECK(orthogonal_complement(Gf2Subspace(3)).dim() == 3);
  const Gf2Subspace c = orthogonal_complement(span_of({bv("110")}, 3));
  CHECK(c.dim() == 2);
  CHECK(c.contains(bv("110")));
  CHECK(c.contains(bv("001")));
  CHECK(element_strings(c) == brute_complement(span_of({bv("110")}, 3)));
}

TEST_CASE("orthogonal complement agrees with enumeration on every subspace of F2^4") {
  for (const auto& s : all_subspaces(4)) {
    const Gf2Subspace c = orthogonal_complement(s);
    CHECK(c.dim() + s.dim() == 4);
    CHECK(element_strings(c) == brute_complement(s));
    CHECK(orthogonal_complement(c) == s);
  }
}

TEST_CASE("all_subspaces counts Gaussian binomials") {
  // number of subspaces of F2^n: 1, 2, 5, 16, 67
  CHECK(all_subspaces(0).size() == 1);
  CHECK(all_subspaces(1).size() == 2);
  CHECK(all_subspaces(2).size() == 5);
  CHECK(all_subspaces(3).size() == 16);
  CHECK(all_subspaces(4).size() == 67);
}

TEST_CASE("solve examples") {
  std::mt19937_64 rng(11);
  const BitVec rhs = bv("1011");
  CHECK(solve(Gf2Matrix::identity(4), rhs) == rhs);
  CHECK_FALSE(solve(Gf2Matrix(3, 3), bv("010")).has_value());
  for (int trial = 0; trial < 50; ++trial) {
    Gf2Matrix m(5, 7);
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t c = 0; c < 7; ++c) m.set(r, c, rng() & 1u);
    BitVec x(7);
    for (std::size_t c = 0; c < 7; ++c) x.set(c, rng() & 1u);
    const BitVec b = m.apply(x);
    const auto sol = solve(m, b);
    REQUIRE(sol.has_value());
    CHECK(m.apply(*sol) == b);
  }
}

TEST_CASE("matrix algebra") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Gf2Matrix a = random_invertible(6, rng);
    REQUIRE(a.is_invertible());
    const auto inv = a.inverse();
    REQUIRE(inv.has_value());
    CHECK(a * *inv == Gf2Matrix::identity(6));
    CHECK(*inv * a == Gf2Matrix::identity(6));
    CHECK(a.transpose().transpose() == a);
    BitVec v = BitVec::from_mask(rng() & 63u, 6);
    CHECK(a.left_apply(v) == a.transpose().apply(v));
  }
  CHECK_FALSE(Gf2Matrix::from_strings({"11", "11"}).inverse().has_value());
}

TEST_CASE("kernel is the null space") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    Gf2Matrix m(4, 6);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 6; ++c) m.set(r, c, rng() & 1u);
    const Gf2Subspace k = kernel(m);
    CHECK(k.dim() + m.rank() == 6);
    for (const auto& v : k.basis()) CHECK(m.apply(v).none());
  }
}

TEST_CASE("subspace lattice operations") {
  const auto subs = all_subspaces(3);
  for (const auto& a : subs)
    for (const auto& b : subs) {
      const Gf2Subspace s = a.sum(b), i = a.intersection(b);
      CHECK(s.dim() + i.dim() == a.dim() + b.dim());
      CHECK(a.is_subspace_of(s));
      CHECK(i.is_subspace_of(a));
      CHECK(i.is_subspace_of(b));
    }
}

TEST_CASE("reduce gives canonical coset representatives") {
  const Gf2Subspace s = span_of({bv("1100"), bv("0011")}, 4);
  CHECK(s.reduce(bv("1000")) == s.reduce(bv("0100")));
  CHECK(s.reduce(bv("1111")).none());
  CHECK(s.reduce(bv("1000")) != s.reduce(bv("0010")));
}

TEST_CASE("incremental eliminator matches rref rank") {
  std::mt19937_64 rng(3);
  IncrementalEliminator el(40);
  std::vector<BitVec> rows;
  for (int i = 0; i < 60; ++i) {
    std::size_t pos[3] = {rng() % 40, rng() % 40, rng() % 40};
    BitVec v(40);
    for (auto p : pos) v.flip(p);
    rows.push_back(v);
    el.insert_sparse(pos, 3);
  }
  CHECK(el.rank() == span_of(rows, 40).dim());
  CHECK(el.to_subspace() == span_of(rows, 40));
}

TEST_CASE("complete_to_basis keeps the given rows first") {
  const Gf2Matrix m = complete_to_basis({bv("0110"), bv("0011")}, 4);
  CHECK(m.row(0) == bv("0110"));
  CHECK(m.row(1) == bv("0011"));
  CHECK(m.is_invertible());
}
