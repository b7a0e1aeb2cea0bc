#include "sgal/ktheory.hpp"

#include "sgal/errors.hpp"

namespace sgal {

P2Vector P2Vector::from_flat(std::size_t n, const BitVec& flat) {
  if (flat.size() != p2_dim(n)) throw PreconditionError("P2 vector has the wrong length");
  return P2Vector{flat.slice(0, n), flat.slice(n, pair_count(n))};
}

P2Vector q_poly_coords(const BitVec& a, const BitVec& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw PreconditionError("q_poly: length mismatch");
  P2Vector q{a & b, BitVec(pair_count(n))};
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l)
      if ((a.get(k) && b.get(l)) != (a.get(l) && b.get(k))) q.mixed.set(pair_index(n, k, l));
  return q;
}

Basis Basis::native(std::size_t n) { return Basis(Gf2Matrix::identity(n)); }

Basis::Basis(Gf2Matrix rows) : rows_(std::move(rows)) {
  if (rows_.rows() != rows_.cols()) throw PreconditionError("basis matrix must be square");
  auto inv = rows_.inverse();
  if (!inv) throw PreconditionError("basis matrix is singular");
  inverse_ = std::move(*inv);
}

bool Basis::is_native() const { return rows_ == Gf2Matrix::identity(n()); }

BitVec Basis::coords(Element x) const { return inverse_.left_apply(to_bitvec(x, n())); }

Element Basis::element(const BitVec& c) const { return element_from_bitvec(rows_.left_apply(c)); }

P2Vector q_poly(const Psg& p, Element a, Element b) {
  return q_poly_coords(to_bitvec(a, p.n()), to_bitvec(b, p.n()));
}

P2Vector q_poly(const Basis& basis, Element a, Element b) { return q_poly_coords(basis.coords(a), basis.coords(b)); }

std::vector<std::pair<Element, Element>> relation_pairs(const Psg& p) {
  std::vector<std::pair<Element, Element>> out;
  for (std::uint32_t a = 0; a < p.size(); ++a)
    for (Element b : p.value_set_elements(p.minus_one() * Element{a})) out.emplace_back(Element{a}, b);
  return out;
}

std::vector<std::pair<Element, Element>> relation_generators(const Psg& p) {
  std::vector<std::pair<Element, Element>> out;
  for (std::uint32_t a = 1; a < p.size(); ++a) {
    Gf2Subspace span(p.n());
    for (Element b : p.value_set_elements(p.minus_one() * Element{a}))
      if (span.insert(to_bitvec(b, p.n()))) out.emplace_back(Element{a}, b);
  }
  return out;
}

RelationModule relation_module(const Psg& p, const Basis& basis) {
  if (basis.n() != p.n()) throw PreconditionError("basis size differs from the group's");
  RelationModule rm;
  rm.n = p.n();
  rm.q = Gf2Subspace(p2_dim(p.n()));
  for (const auto& [a, b] : relation_generators(p)) rm.q.insert(q_poly(basis, a, b).flat());
  rm.k2_dim = p2_dim(p.n()) - rm.q.dim();
  return rm;
}

RelationModule relation_module(const Psg& p) { return relation_module(p, Basis::native(p.n())); }

bool k2_product_is_zero(const Psg& p, const RelationModule& rm, Element a, Element b) {
  return rm.contains(q_poly(p, a, b));
}

bool k2_product_is_zero(const Psg& p, Element a, Element b) {
  return k2_product_is_zero(p, relation_module(p), a, b);
}

KStabilityReport k_stable_check(const Psg& p) {
  const RelationModule rm = relation_module(p);
  KStabilityReport report;
  for (std::uint32_t a = 0; a < p.size(); ++a)
    for (std::uint32_t b = 0; b < p.size(); ++b) {
      const Element ea{a}, eb{b};
      if (k2_product_is_zero(p, rm, ea, eb) != p.represents(ea * eb, ea)) report.violations.emplace_back(ea, eb);
    }
  return report;
}

Gf2Matrix substitution_matrix(const Basis& from, const Basis& to) { return from.rows() * to.inverse(); }

Gf2Matrix base_change_m1(const Gf2Matrix& t) {
  if (!t.is_invertible()) throw PreconditionError("base change matrix is singular");
  return t.transpose();
}

Gf2Matrix base_change_m2(const Gf2Matrix& t) {
  if (!t.is_invertible()) throw PreconditionError("base change matrix is singular");
  const std::size_t n = t.rows();
  const std::size_t dim = p2_dim(n);
  Gf2Matrix m(dim, dim);
  // Column k: image of z_k^2.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      if (t.get(k, j)) m.set(j, k);
  // Column n + pair(k, l): image of z_k z_l.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l) {
      const std::size_t col = n + pair_index(n, k, l);
      for (std::size_t j = 0; j < n; ++j)
        if (t.get(k, j) && t.get(l, j)) m.set(j, col);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t r = j + 1; r < n; ++r)
          if ((t.get(k, j) && t.get(l, r)) != (t.get(k, r) && t.get(l, j))) m.set(n + pair_index(n, j, r), col);
    }
  return m;
}

}  // namespace sgal
