#include "sgal/errors.hpp"
#include "sgal/galois.hpp"

#include <algorithm>
#include <random>

namespace sgal {

bool NormalSubgroupWitness::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

namespace {

/// Nonzero gamma-functionals c with the witness inside {gamma . c = 0}.
std::vector<BitVec> maximal_functionals_above(const LinearSpec& spec) {
  const std::size_t n = spec.n;
  const std::size_t offset = n + pair_count(n);
  const Gf2Subspace span = spec.functional_span();
  std::vector<BitVec> out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    const BitVec c = BitVec::from_mask(m, n);
    BitVec f(w_coord_dim(n));
    for (std::size_t i = c.find_first(); i != BitVec::npos; i = c.find_next(i + 1)) f.set(offset + i);
    if (span.contains(f)) out.push_back(c);
  }
  return out;
}

LinearSpec gamma_functional_spec(std::size_t n, const BitVec& c) {
  BitVec f(w_coord_dim(n));
  const std::size_t offset = n + pair_count(n);
  for (std::size_t i = c.find_first(); i != BitVec::npos; i = c.find_next(i + 1)) f.set(offset + i);
  return LinearSpec{n, {f}};
}

bool v_inside(const GalGroup& g, const LinearSpec& spec) {
  for (const auto& v : g.v().basis())
    if (!spec.member(WElement::from_phi(g.n(), v, BitVec(g.n())))) return false;
  return true;
}

/// Images of the generators of the witness subgroup under the base change
/// back to `original` all lie in M_x.
bool lands_in_maximal(const GalGroup& original, const GalGroup& built, const LinearSpec& spec, Element x) {
  const GalHom mu = base_change_mu(original, built);
  const MaximalSubgroup m = maximal_subgroup(original, x);
  const Gf2Subspace members = spec.solution_space();
  for (const auto& b : members.basis())
    if (!m.contains(mu.apply_w(WElement::from_full(spec.n, b)))) return false;
  return true;
}

}  // namespace

NormalSubgroupWitness z4_subgroup_for(const GalGroup& g, Element a) {
  const Psg& p = g.psg();
  if (a.is_one()) throw PreconditionError("Z4 witness needs a != 1");
  if (!k2_product_is_zero(p, a, a)) throw PreconditionError("Z4 witness needs l(a)l(a) = 0 in k2");
  const std::size_t n = p.n();
  NormalSubgroupWitness w;
  w.kind = "Z4";
  w.elements = {a};
  w.basis = Basis(complete_to_basis({to_bitvec(a, n)}, n));
  const GalGroup built(g.psg_ptr(), w.basis);
  w.spec = SubgroupSpec::S(0).to_linear(n);

  const bool normal = is_normal(w.spec);
  w.checks.emplace_back("normal in W", normal);
  w.checks.emplace_back("contains V", v_inside(built, w.spec));
  if (normal) {
    const QuotientResult q = quotient(w.spec);
    w.quotient = q.small;
    w.checks.emplace_back("quotient is Z4", q.small && q.small->cls == GroupClass::Z4);
  }
  w.checks.emplace_back("contained in M_a", spec_contains(SubgroupSpec::M(0).to_linear(n), w.spec));
  const auto above = maximal_functionals_above(w.spec);
  w.checks.emplace_back("M_a is the unique maximal subgroup above it",
                        above.size() == 1 && above.front() == BitVec::unit(n, 0));
  w.checks.emplace_back("image lies in M_a over the original basis", lands_in_maximal(g, built, w.spec, a));
  return w;
}

NormalSubgroupWitness d4_subgroup_for(const GalGroup& g, Element a, Element b) {
  const Psg& p = g.psg();
  if (a.is_one() || b.is_one()) throw PreconditionError("D4 witness needs a, b != 1");
  if (a == b) throw PreconditionError("D4 witness needs a != b");
  if (!k2_product_is_zero(p, a, b)) throw PreconditionError("D4 witness needs l(a)l(b) = 0 in k2");
  const std::size_t n = p.n();
  NormalSubgroupWitness w;
  w.kind = "D4";
  w.elements = {a, b};
  w.basis = Basis(complete_to_basis({to_bitvec(a, n), to_bitvec(b, n)}, n));
  const GalGroup built(g.psg_ptr(), w.basis);
  w.spec = SubgroupSpec::D(0, 1).to_linear(n);

  const bool normal = is_normal(w.spec);
  w.checks.emplace_back("normal in W", normal);
  w.checks.emplace_back("contains V", v_inside(built, w.spec));
  if (normal) {
    const QuotientResult q = quotient(w.spec);
    w.quotient = q.small;
    if (q.table) w.d4 = find_d4_witness(*q.table);
    w.checks.emplace_back("quotient is D4", q.small && q.small->cls == GroupClass::D4 && w.d4.has_value());
  }
  w.checks.emplace_back("contained in M_a and M_b", spec_contains(SubgroupSpec::M(0).to_linear(n), w.spec) &&
                                                         spec_contains(SubgroupSpec::M(1).to_linear(n), w.spec));

  const BitVec e0 = BitVec::unit(n, 0), e1 = BitVec::unit(n, 1), e01 = e0 ^ e1;
  auto above = maximal_functionals_above(w.spec);
  std::sort(above.begin(), above.end());
  std::vector<BitVec> expected{e0, e1, e01};
  std::sort(expected.begin(), expected.end());
  w.checks.emplace_back("maximal subgroups above it are M_a, M_b, M_ab", above == expected);

  bool mab_z4 = false;
  std::size_t z4_count = 0;
  for (const auto& c : above) {
    const QuotientResult sq = subquotient(gamma_functional_spec(n, c), w.spec);
    const bool z4 = sq.small && sq.small->cls == GroupClass::Z4;
    if (z4) ++z4_count;
    if (c == e01) mab_z4 = z4;
  }
  w.checks.emplace_back("M_ab / D is Z4", mab_z4);
  w.checks.emplace_back("{M_a, M_b} is the unique pair with Z4 complement", mab_z4 && z4_count == 1);
  w.checks.emplace_back("image lies in M_a and M_b over the original basis",
                        lands_in_maximal(g, built, w.spec, a) && lands_in_maximal(g, built, w.spec, b));
  return w;
}

LatticeReport lattice_correspondence_check(const Psg& p, std::size_t sample, std::uint64_t seed, std::size_t max_n) {
  if (p.n() > max_n)
    throw GuardrailError("lattice check is limited to n <= " + std::to_string(max_n), "n <= " + std::to_string(max_n));
  const GalGroup g = gal_group(p);
  auto subs = all_subspaces(p.n());
  if (subs.size() > sample) {
    std::mt19937_64 rng(seed);
    std::shuffle(subs.begin(), subs.end(), rng);
    subs.resize(sample);
  }
  LatticeReport r;
  for (const auto& delta : subs) {
    ++r.subgroups_checked;
    const Gf2Subspace t = perp_of_subgroup(g, delta);
    if (perp_of_frattini_subspace(g, t) != delta) ++r.double_perp_failures;
    const bool sat = is_saturated(p, delta);
    const bool inv = generated_by_involutions(g, t);
    if (sat) ++r.saturated;
    if (inv) ++r.involution_generated;
    if (sat != inv) ++r.correspondence_failures;
  }
  return r;
}

}  // namespace sgal
