#include "sgal/cohomology.hpp"

#include "sgal/errors.hpp"

#include <algorithm>
#include <deque>

namespace sgal {

CohomologyContext::CohomologyContext(const GalGroup& g, std::size_t max_log2) : g_(g) {
  elements_ = g.elements(max_log2);
  order_ = elements_.size();
  if (order_ <= 4096) {
    table_.resize(order_ * order_);
    for (std::size_t a = 0; a < order_; ++a)
      for (std::size_t b = 0; b < order_; ++b)
        table_[a * order_ + b] = static_cast<std::uint32_t>(g.index(g.mul(elements_[a], elements_[b])));
  }
  for (std::size_t i = 0; i < g.n(); ++i) gens_.push_back(static_cast<std::uint32_t>(g.index(g.generator(i))));
}

std::uint32_t CohomologyContext::mul(std::uint32_t a, std::uint32_t b) const {
  if (!table_.empty()) return table_[std::size_t{a} * order_ + b];
  return static_cast<std::uint32_t>(g_.index(g_.mul(elements_[a], elements_[b])));
}

GalCharacter character_of(const GalGroup& g, Element a) { return GalCharacter{g.coords(a)}; }

PointedGroup h0(const GalGroup&) { return PointedGroup{2, 1}; }

H1Group h1(const GalGroup& g) {
  H1Group h;
  h.dim = g.n();
  for (std::size_t i = 0; i < g.n(); ++i) h.basis.push_back(character_of(g, Element{std::uint32_t{1} << i}));
  h.distinguished = character_of(g, g.psg().minus_one());
  return h;
}

std::size_t h1_dim_by_cocycles(const CohomologyContext& ctx) {
  const std::size_t n = ctx.order();
  IncrementalEliminator el(n);
  for (std::uint32_t a = 0; a < n && !el.full(); ++a)
    for (std::uint32_t b = 0; b < n && !el.full(); ++b) {
      const std::size_t pos[3] = {a, b, ctx.mul(a, b)};
      el.insert_sparse(pos, 3);
    }
  return n - el.rank();
}

Cochain1 cochain_of(const CohomologyContext& ctx, const GalCharacter& chi) {
  Cochain1 f{BitVec(ctx.order())};
  for (std::uint32_t a = 0; a < ctx.order(); ++a)
    if (chi(ctx.group().element(a))) f.values.set(a);
  return f;
}

Cochain2 cup(const CohomologyContext& ctx, const GalCharacter& a, const GalCharacter& b) {
  const std::size_t n = ctx.order();
  const Cochain1 fa = cochain_of(ctx, a), fb = cochain_of(ctx, b);
  Cochain2 c{n, BitVec(n * n)};
  for (std::uint32_t g = 0; g < n; ++g)
    if (fa.at(g))
      for (std::uint32_t h = 0; h < n; ++h)
        if (fb.at(h)) c.set(g, h, true);
  return c;
}

Cochain2 d1(const CohomologyContext& ctx, const Cochain1& f) {
  const std::size_t n = ctx.order();
  Cochain2 c{n, BitVec(n * n)};
  for (std::uint32_t g = 0; g < n; ++g)
    for (std::uint32_t h = 0; h < n; ++h) c.set(g, h, f.at(g) != (f.at(h) != f.at(ctx.mul(g, h))));
  return c;
}

bool d2_at(const CohomologyContext& ctx, const Cochain2& c, std::uint32_t g1, std::uint32_t g2, std::uint32_t g3) {
  return c.at(g2, g3) ^ c.at(ctx.mul(g1, g2), g3) ^ c.at(g1, ctx.mul(g2, g3)) ^ c.at(g1, g2);
}

bool is_cocycle(const CohomologyContext& ctx, const Cochain2& c) {
  const std::size_t n = ctx.order();
  if (n > 256) throw GuardrailError("exhaustive cocycle check is limited to order <= 256", "order <= 256");
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t d = 0; d < n; ++d)
        if (d2_at(ctx, c, a, b, d)) return false;
  return true;
}

std::optional<Cochain1> is_coboundary(const CohomologyContext& ctx, const Cochain2& c) {
  const std::size_t n = ctx.order();
  if (c.order != n) throw PreconditionError("cochain belongs to a different group");
  // Solutions differ by homomorphisms, which are free on the generators,
  // so f may be taken to vanish on every generator.
  Cochain1 f{BitVec(n)};
  std::vector<bool> known(n, false);
  f.values.set(0, c.at(0, 0));
  known[0] = true;
  std::deque<std::uint32_t> queue{0};
  while (!queue.empty()) {
    const std::uint32_t s = queue.front();
    queue.pop_front();
    for (std::uint32_t x : ctx.generator_indices()) {
      const std::uint32_t sx = ctx.mul(s, x);
      if (known[sx]) continue;
      known[sx] = true;
      f.values.set(sx, f.at(s) != c.at(s, x));
      queue.push_back(sx);
    }
  }
  for (std::uint32_t x : ctx.generator_indices())
    if (f.at(x)) return std::nullopt;
  for (std::uint32_t g = 0; g < n; ++g)
    for (std::uint32_t h = 0; h < n; ++h)
      if ((f.at(g) != (f.at(h) != f.at(ctx.mul(g, h)))) != c.at(g, h)) return std::nullopt;
  return f;
}

std::size_t h2_dim(const GalGroup& g, std::size_t max_log2) {
  const CohomologyContext ctx(g, max_log2);
  const std::size_t n = ctx.order();
  IncrementalEliminator e1(n);
  for (std::uint32_t a = 0; a < n && !e1.full(); ++a)
    for (std::uint32_t b = 0; b < n && !e1.full(); ++b) {
      const std::size_t pos[3] = {a, b, ctx.mul(a, b)};
      e1.insert_sparse(pos, 3);
    }
  IncrementalEliminator e2(n * n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      const std::uint32_t ab = ctx.mul(a, b);
      for (std::uint32_t d = 0; d < n; ++d) {
        const std::size_t pos[4] = {std::size_t{b} * n + d, std::size_t{ab} * n + d,
                                    std::size_t{a} * n + ctx.mul(b, d), std::size_t{a} * n + b};
        e2.insert_sparse(pos, 4);
      }
    }
  return n * n - e2.rank() - e1.rank();
}

std::size_t h2_dim_by_resolution(const GalGroup& g, std::size_t max_log2) {
  const CohomologyContext ctx(g, max_log2);
  const std::size_t n = ctx.order();
  const auto& gens = ctx.generator_indices();
  const std::size_t d = gens.size();
  // d1: F2[G]^d -> F2[G], h e_i -> h x_i - h; rows indexed by group elements.
  Gf2Matrix boundary(n, d * n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::uint32_t h = 0; h < n; ++h) {
      const std::size_t col = i * n + h;
      boundary.row(ctx.mul(h, gens[i])).flip(col);
      boundary.row(h).flip(col);
    }
  const Gf2Subspace k1 = kernel(boundary);
  Gf2Subspace ik1(d * n);
  for (std::uint32_t x : gens)
    for (const auto& k : k1.basis()) {
      BitVec v(d * n);
      for (std::size_t pos = k.find_first(); pos != BitVec::npos; pos = k.find_next(pos + 1)) {
        const std::size_t comp = pos / n;
        const auto h = static_cast<std::uint32_t>(pos % n);
        v.flip(comp * n + ctx.mul(x, h));
        v.flip(pos);
      }
      ik1.insert(std::move(v));
    }
  return k1.dim() - ik1.dim();
}

bool MilnorReport::well_defined() const noexcept {
  return std::all_of(rows.begin(), rows.end(), [](const MilnorRow& r) { return r.cup_is_coboundary; });
}

MilnorReport milnor_map_experiment(const Psg& p, std::size_t max_log2) {
  const GalGroup g = gal_group(p);
  MilnorReport report;
  if (p.n() == 0) return report;
  const CohomologyContext ctx(g, max_log2);
  for (const auto& [a, b] : relation_pairs(p)) {
    if (a.is_one() || b.is_one()) continue;
    const Cochain2 c = cup(ctx, character_of(g, a), character_of(g, b));
    report.rows.push_back({a, b, is_coboundary(ctx, c).has_value()});
  }
  return report;
}

}  // namespace sgal
