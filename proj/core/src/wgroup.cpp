#include "sgal/wgroup.hpp"

#include "sgal/errors.hpp"

#include <deque>
#include <unordered_map>

namespace sgal {

WElement::WElement(BitVec a, BitVec b, BitVec g) : alpha(std::move(a)), beta(std::move(b)), gamma(std::move(g)) {
  if (alpha.size() != gamma.size() || beta.size() != pair_count(gamma.size()))
    throw PreconditionError("W element coordinates have inconsistent lengths");
}

BitVec WElement::full() const { return BitVec::concat(BitVec::concat(alpha, beta), gamma); }

WElement WElement::from_full(std::size_t n, const BitVec& v) {
  if (v.size() != w_coord_dim(n)) throw PreconditionError("W coordinate vector has the wrong length");
  const std::size_t m = pair_count(n);
  return WElement(v.slice(0, n), v.slice(n, m), v.slice(n + m, n));
}

WElement WElement::from_phi(std::size_t n, const BitVec& phi, const BitVec& gamma) {
  if (phi.size() != p2_dim(n)) throw PreconditionError("phi block has the wrong length");
  return WElement(phi.slice(0, n), phi.slice(n, pair_count(n)), gamma);
}

WElement w_identity(std::size_t n) { return WElement(n); }

WElement w_x(std::size_t n, std::size_t i) {
  WElement g(n);
  g.gamma.set(i);
  return g;
}

WElement w_t(std::size_t n, std::size_t i) {
  WElement g(n);
  g.alpha.set(i);
  return g;
}

WElement w_t(std::size_t n, std::size_t i, std::size_t j) {
  if (!(i < j && j < n)) throw PreconditionError("t_ij needs i < j < n");
  WElement g(n);
  g.beta.set(pair_index(n, i, j));
  return g;
}

WElement w_random(std::size_t n, std::mt19937_64& rng) {
  WElement g(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng() & 1U) g.alpha.set(i);
    if (rng() & 1U) g.gamma.set(i);
  }
  for (std::size_t k = 0; k < pair_count(n); ++k)
    if (rng() & 1U) g.beta.set(k);
  return g;
}

namespace {

void check_same(const WElement& g, const WElement& h) {
  if (g.n() != h.n()) throw PreconditionError("W elements have different ranks");
}

/// beta_ij += u_i v_j for all i < j.
void add_outer_upper(BitVec& beta, const BitVec& u, const BitVec& v) {
  const std::size_t n = u.size();
  for (std::size_t i = u.find_first(); i != BitVec::npos; i = u.find_next(i + 1))
    for (std::size_t j = v.find_next(i + 1); j != BitVec::npos; j = v.find_next(j + 1)) beta.flip(pair_index(n, i, j));
}

/// beta_ij += u_i v_j + v_i u_j for all i < j.
void add_symmetric(BitVec& beta, const BitVec& u, const BitVec& v) {
  add_outer_upper(beta, u, v);
  add_outer_upper(beta, v, u);
}

}  // namespace

WElement w_mul(const WElement& g, const WElement& h) {
  check_same(g, h);
  WElement r(g.alpha ^ h.alpha ^ (g.gamma & h.gamma), g.beta ^ h.beta, g.gamma ^ h.gamma);
  add_outer_upper(r.beta, h.gamma, g.gamma);
  return r;
}

WElement w_inv(const WElement& g) {
  WElement r(g.alpha ^ g.gamma, g.beta, g.gamma);
  add_outer_upper(r.beta, g.gamma, g.gamma);
  return r;
}

WElement w_square(const WElement& g) {
  WElement r(g.gamma, BitVec(pair_count(g.n())), BitVec(g.n()));
  add_outer_upper(r.beta, g.gamma, g.gamma);
  return r;
}

WElement w_conj(const WElement& h, const WElement& g) {
  check_same(g, h);
  WElement r = h;
  add_symmetric(r.beta, g.gamma, h.gamma);
  return r;
}

WElement w_comm(const WElement& g, const WElement& h) {
  check_same(g, h);
  WElement r(g.n());
  add_symmetric(r.beta, g.gamma, h.gamma);
  return r;
}

WElement w_pow(const WElement& g, std::size_t k) {
  WElement r(g.n());
  for (std::size_t i = 0; i < k; ++i) r = w_mul(r, g);
  return r;
}

boost::multiprecision::cpp_int w_order_count(std::size_t n) {
  if (n > 20) throw GuardrailError("closed-form order is limited to n <= 20", "n <= 20");
  return boost::multiprecision::cpp_int(1) << w_order_log2(n);
}

std::size_t w_order_log2(std::size_t n) { return (n * n + 3 * n) / 2; }

std::vector<WElement> w_enumerate(std::size_t n) {
  if (n > 4) throw GuardrailError("explicit enumeration of W(n) is limited to n <= 4", "n <= 4");
  const std::size_t bits = w_coord_dim(n);
  std::vector<WElement> out;
  out.reserve(std::size_t{1} << bits);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << bits); ++m)
    out.push_back(WElement::from_full(n, BitVec::from_mask(m, bits)));
  return out;
}

bool LinearSpec::member(const WElement& g) const {
  const BitVec v = g.full();
  for (const auto& f : functionals)
    if (f.dot(v)) return false;
  return true;
}

Gf2Subspace LinearSpec::functional_span() const { return span_of(functionals, w_coord_dim(n)); }

Gf2Subspace LinearSpec::solution_space() const { return orthogonal_complement(functional_span()); }

LinearSpec SubgroupSpec::to_linear(std::size_t n) const {
  const std::size_t dim = w_coord_dim(n);
  const std::size_t m = pair_count(n);
  auto alpha = [&](std::size_t k) { return BitVec::unit(dim, k); };
  auto beta = [&](std::size_t a, std::size_t b) { return BitVec::unit(dim, n + pair_index(n, a, b)); };
  auto gamma = [&](std::size_t k) { return BitVec::unit(dim, n + m + k); };
  switch (kind) {
    case Kind::M:
      if (i >= n) throw PreconditionError("M_i index out of range");
      return {n, {gamma(i)}};
    case Kind::S:
      if (i >= n) throw PreconditionError("S_i index out of range");
      return {n, {alpha(i), gamma(i)}};
    case Kind::D:
      if (!(i < j && j < n)) throw PreconditionError("D_ij needs i < j < n");
      return {n, {beta(i, j), gamma(i), gamma(j)}};
    case Kind::Phi: {
      LinearSpec s{n, {}};
      for (std::size_t k = 0; k < n; ++k) s.functionals.push_back(gamma(k));
      return s;
    }
    case Kind::Custom:
      if (custom.n != n) throw PreconditionError("custom subgroup spec has a different rank");
      for (const auto& f : custom.functionals)
        if (f.size() != dim) throw PreconditionError("custom functional has the wrong length");
      return custom;
  }
  throw PreconditionError("unknown subgroup kind");
}

bool subgroup_member(const SubgroupSpec& spec, const WElement& g) { return spec.to_linear(g.n()).member(g); }

bool is_subgroup(const LinearSpec& spec) {
  const Gf2Subspace sol = spec.solution_space();
  std::vector<WElement> basis;
  for (const auto& b : sol.basis()) basis.push_back(WElement::from_full(spec.n, b));
  for (const auto& u : basis)
    for (const auto& v : basis) {
      const BitVec correction = w_mul(u, v).full() ^ u.full() ^ v.full();
      if (!sol.contains(correction)) return false;
    }
  return true;
}

bool is_normal(const LinearSpec& spec) {
  if (!is_subgroup(spec)) return false;
  const Gf2Subspace sol = spec.solution_space();
  for (std::size_t k = 0; k < spec.n; ++k) {
    const WElement x = w_x(spec.n, k);
    for (const auto& b : sol.basis())
      if (!sol.contains(w_conj(WElement::from_full(spec.n, b), x).full())) return false;
  }
  return true;
}

bool spec_contains(const LinearSpec& outer, const LinearSpec& inner) {
  if (outer.n != inner.n) throw PreconditionError("subgroup specs have different ranks");
  const Gf2Subspace span = inner.functional_span();
  for (const auto& f : outer.functionals)
    if (!span.contains(f)) return false;
  return true;
}

CosetSpace::CosetSpace(LinearSpec normal) : spec_(std::move(normal)) {
  if (!is_normal(spec_)) throw PreconditionError("subgroup is not normal in W(n)");
  solutions_ = spec_.solution_space();
}

std::size_t CosetSpace::order_log2() const { return w_coord_dim(spec_.n) - solutions_.dim(); }

const Gf2Subspace& CosetSpace::direction(const WElement& g) const {
  auto it = cache_.find(g.gamma);
  if (it != cache_.end()) return it->second;
  Gf2Subspace dir(w_coord_dim(spec_.n));
  for (const auto& b : solutions_.basis()) dir.insert(w_mul(g, WElement::from_full(spec_.n, b)).full() ^ g.full());
  return cache_.emplace(g.gamma, std::move(dir)).first->second;
}

WElement CosetSpace::canonical(const WElement& g) const {
  return WElement::from_full(spec_.n, direction(g).reduce(g.full()));
}

namespace {

constexpr std::size_t kEnumerationLimitLog2 = 20;

QuotientResult enumerate_cosets(const CosetSpace& cosets, const std::vector<WElement>& generators,
                                std::size_t expected_log2, std::size_t table_log2) {
  QuotientResult res;
  res.order_log2 = expected_log2;
  if (expected_log2 > table_log2 || expected_log2 > kEnumerationLimitLog2) return res;
  const std::size_t n = cosets.n();
  std::unordered_map<BitVec, std::uint32_t, BitVecHash> index;
  std::deque<std::uint32_t> queue;
  const WElement id = cosets.canonical(w_identity(n));
  index.emplace(id.full(), 0);
  res.reps.push_back(id);
  queue.push_back(0);
  while (!queue.empty()) {
    const std::uint32_t a = queue.front();
    queue.pop_front();
    for (const auto& gen : generators) {
      WElement c = cosets.canonical(w_mul(res.reps[a], gen));
      BitVec key = c.full();
      if (index.find(key) == index.end()) {
        index.emplace(std::move(key), static_cast<std::uint32_t>(res.reps.size()));
        queue.push_back(static_cast<std::uint32_t>(res.reps.size()));
        res.reps.push_back(std::move(c));
      }
    }
  }
  if (res.reps.size() != (std::size_t{1} << expected_log2))
    throw Error("coset enumeration found " + std::to_string(res.reps.size()) + " cosets, expected 2^" +
                std::to_string(expected_log2));
  const std::size_t order = res.reps.size();
  std::vector<std::uint32_t> table(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      table[a * order + b] = index.at(cosets.canonical(w_mul(res.reps[a], res.reps[b])).full());
  res.table = FiniteGroup(order, std::move(table));
  if (order <= 16) res.small = make_small_group(*res.table);
  return res;
}

}  // namespace

QuotientResult quotient(const LinearSpec& normal, std::size_t table_log2) {
  const CosetSpace cosets(normal);
  std::vector<WElement> gens;
  for (std::size_t i = 0; i < normal.n; ++i) gens.push_back(w_x(normal.n, i));
  return enumerate_cosets(cosets, gens, cosets.order_log2(), table_log2);
}

QuotientResult quotient(std::size_t n, const SubgroupSpec& normal, std::size_t table_log2) {
  return quotient(normal.to_linear(n), table_log2);
}

QuotientResult subquotient(const LinearSpec& h, const LinearSpec& normal, std::size_t table_log2) {
  if (!is_subgroup(h)) throw PreconditionError("outer spec is not a subgroup");
  if (!spec_contains(h, normal)) throw PreconditionError("normal subgroup is not contained in the outer subgroup");
  const CosetSpace cosets(normal);
  const Gf2Subspace hs = h.solution_space();
  std::vector<WElement> gens;
  for (const auto& b : hs.basis()) gens.push_back(WElement::from_full(h.n, b));
  return enumerate_cosets(cosets, gens, hs.dim() - normal.solution_space().dim(), table_log2);
}

bool pairing_phi(const WElement& g, const P2Vector& q) {
  if (!g.in_frattini()) throw PreconditionError("pairing with quadratic forms needs an element of Phi");
  if (q.n() != g.n()) throw PreconditionError("pairing: rank mismatch");
  return g.alpha.dot(q.sq) != g.beta.dot(q.mixed);
}

bool pairing_p1(const WElement& g, const P1Vector& q) {
  if (q.n() != g.n()) throw PreconditionError("pairing: rank mismatch");
  return g.gamma.dot(q.coeffs);
}

WHom::WHom(std::size_t source_n, std::size_t target_n, std::vector<WElement> images)
    : source_n_(source_n), target_n_(target_n), images_(std::move(images)) {
  if (images_.size() != source_n_) throw PreconditionError("one image per generator is required");
  for (const auto& y : images_)
    if (y.n() != target_n_) throw PreconditionError("generator image has the wrong rank");
}

WHom WHom::identity(std::size_t n) {
  std::vector<WElement> imgs;
  for (std::size_t i = 0; i < n; ++i) imgs.push_back(w_x(n, i));
  return WHom(n, n, std::move(imgs));
}

WHom WHom::from_gamma_matrix(const Gf2Matrix& m) {
  std::vector<WElement> imgs;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    WElement y(m.rows());
    y.gamma = m.column(j);
    imgs.push_back(std::move(y));
  }
  return WHom(m.cols(), m.rows(), std::move(imgs));
}

WElement WHom::apply(const WElement& g) const {
  if (g.n() != source_n_) throw PreconditionError("hom applied to an element of the wrong rank");
  const std::size_t n = source_n_;
  WElement central(target_n_);
  for (std::size_t i = g.alpha.find_first(); i != BitVec::npos; i = g.alpha.find_next(i + 1))
    central = w_mul(central, w_square(images_[i]));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g.beta.get(pair_index(n, i, j))) central = w_mul(central, w_comm(images_[i], images_[j]));
  WElement r = central;
  for (std::size_t i = g.gamma.find_first(); i != BitVec::npos; i = g.gamma.find_next(i + 1))
    r = w_mul(r, images_[i]);
  return r;
}

Gf2Matrix WHom::gamma_matrix() const {
  Gf2Matrix m(target_n_, source_n_);
  for (std::size_t j = 0; j < source_n_; ++j)
    for (std::size_t i = images_[j].gamma.find_first(); i != BitVec::npos; i = images_[j].gamma.find_next(i + 1))
      m.set(i, j);
  return m;
}

Gf2Matrix WHom::phi_matrix() const {
  const std::size_t rows = p2_dim(target_n_);
  const std::size_t cols = p2_dim(source_n_);
  Gf2Matrix m(rows, cols);
  auto put = [&](std::size_t col, const WElement& img) {
    const BitVec phi = img.phi();
    for (std::size_t r = phi.find_first(); r != BitVec::npos; r = phi.find_next(r + 1)) m.set(r, col);
  };
  for (std::size_t i = 0; i < source_n_; ++i) put(i, w_square(images_[i]));
  for (std::size_t i = 0; i < source_n_; ++i)
    for (std::size_t j = i + 1; j < source_n_; ++j)
      put(source_n_ + pair_index(source_n_, i, j), w_comm(images_[i], images_[j]));
  return m;
}

WHom WHom::compose(const WHom& inner) const {
  if (inner.target_n_ != source_n_) throw PreconditionError("hom composition: rank mismatch");
  std::vector<WElement> imgs;
  for (const auto& y : inner.images_) imgs.push_back(apply(y));
  return WHom(inner.source_n_, target_n_, std::move(imgs));
}

WHom WHom::inverse() const {
  if (source_n_ != target_n_) throw PreconditionError("only endomorphisms of W(n) can be inverted");
  const std::size_t n = source_n_;
  const auto ginv = gamma_matrix().inverse();
  const auto pinv = phi_matrix().inverse();
  if (!ginv || !pinv) throw PreconditionError("hom is not bijective");
  std::vector<WElement> imgs;
  for (std::size_t k = 0; k < n; ++k) {
    WElement y(n);
    y.gamma = ginv->column(k);
    const WElement hy = apply(y);
    // hy = phi0 * x_k with phi0 central; cancel phi0 by a preimage in Phi.
    const BitVec z = pinv->apply(hy.phi());
    imgs.push_back(w_mul(WElement::from_phi(n, z, BitVec(n)), y));
  }
  return WHom(n, n, std::move(imgs));
}

}  // namespace sgal
