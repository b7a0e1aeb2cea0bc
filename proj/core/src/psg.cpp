#include "sgal/psg.hpp"

#include "sgal/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>

namespace sgal {

BitVec to_bitvec(Element x, std::size_t n) { return BitVec::from_mask(x.bits, n); }

Element element_from_bitvec(const BitVec& v) {
  if (v.size() > kMaxPsgBasis) throw PreconditionError("element has too many coordinates");
  return Element{static_cast<std::uint32_t>(v.to_mask())};
}

std::string to_bitstring(Element x, std::size_t n) { return to_bitvec(x, n).to_string(); }

Element parse_element(const std::string& bits, std::size_t n) {
  if (bits.size() != n)
    throw ParseError("bitstring '" + bits + "' has length " + std::to_string(bits.size()) + ", expected " +
                     std::to_string(n));
  return element_from_bitvec(BitVec::from_string(bits));
}

bool Character::operator()(Element x) const noexcept { return std::popcount(coeffs & x.bits) & 1; }

Psg::Psg(std::string name, std::size_t n, Element minus_one, std::vector<BitVec> value_sets)
    : name_(std::move(name)), n_(n), minus_one_(minus_one), value_sets_(std::move(value_sets)) {
  if (n_ > kMaxPsgBasis)
    throw GuardrailError("basis size " + std::to_string(n_) + " exceeds the supported maximum",
                         "n <= " + std::to_string(kMaxPsgBasis));
  const std::size_t sz = size();
  if (minus_one_.bits >= sz) throw ParseError("-1 is not an element of the group");
  if (value_sets_.size() != sz)
    throw ParseError("expected " + std::to_string(sz) + " value sets, got " + std::to_string(value_sets_.size()));
  for (const auto& v : value_sets_)
    if (v.size() != sz) throw ParseError("value set membership vector has the wrong length");
}

Psg Psg::from_lists(std::string name, std::size_t n, Element minus_one,
                    const std::vector<std::vector<Element>>& value_sets) {
  if (n > kMaxPsgBasis)
    throw GuardrailError("basis size exceeds the supported maximum", "n <= " + std::to_string(kMaxPsgBasis));
  const std::size_t sz = std::size_t{1} << n;
  std::vector<BitVec> sets;
  sets.reserve(value_sets.size());
  for (const auto& list : value_sets) {
    BitVec v(sz);
    for (Element e : list) {
      if (e.bits >= sz) throw ParseError("value set contains an element outside the group");
      v.set(e.bits);
    }
    sets.push_back(std::move(v));
  }
  return Psg(std::move(name), n, minus_one, std::move(sets));
}

std::vector<Element> Psg::value_set_elements(Element x) const {
  std::vector<Element> out;
  const BitVec& v = value_sets_.at(x.bits);
  for (std::size_t i = v.find_first(); i != BitVec::npos; i = v.find_next(i + 1))
    out.push_back(Element{static_cast<std::uint32_t>(i)});
  return out;
}

Psg Psg::renamed(std::string name) const {
  Psg copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

namespace {

class Recorder {
 public:
  Recorder(ValidationReport& r, std::size_t cap) : report_(r), cap_(cap) {}
  void add(const std::string& axiom, std::vector<Element> witness, std::string detail) {
    std::size_t& c = counts_[axiom];
    if (c++ < cap_) report_.violations.push_back({axiom, std::move(witness), std::move(detail)});
  }

 private:
  ValidationReport& report_;
  std::size_t cap_;
  std::map<std::string, std::size_t> counts_;
};

Element el(std::size_t i) { return Element{static_cast<std::uint32_t>(i)}; }

}  // namespace

ValidationReport validate(const Psg& p, std::size_t max_witnesses) {
  ValidationReport report;
  Recorder rec(report, max_witnesses);
  const std::size_t sz = p.size();
  const Element m1 = p.minus_one();

  for (std::size_t x = 0; x < sz; ++x) {
    if (!p.represents(el(x), Element{0}))
      rec.add("SG0 reflexivity", {el(x)}, "1 is not in V(x)");
    if (!p.represents(el(x), el(x)))
      rec.add("SG1 symmetry", {el(x)}, "x is not in V(x)");
  }
  for (std::size_t s = 0; s < sz; ++s) {
    const auto members = p.value_set_elements(el(s));
    Gf2Subspace span(p.n());
    for (Element y : members) span.insert(to_bitvec(y, p.n()));
    const bool closed = p.represents(el(s), Element{0}) && (std::size_t{1} << span.dim()) == members.size();
    if (closed) continue;
    bool found = false;
    for (std::size_t i = 0; i < members.size() && !found; ++i)
      for (std::size_t j = i; j < members.size() && !found; ++j)
        if (!p.represents(el(s), members[i] * members[j])) {
          rec.add("SG0 transitivity", {el(s), members[i], members[j]}, "V(s) contains y and z but not yz");
          found = true;
        }
  }
  for (std::size_t x = 0; x < sz; ++x)
    if (!p.represents(m1, el(x))) rec.add("SG2", {el(x)}, "x is not in V(-1)");
  for (std::size_t s = 0; s < sz; ++s)
    for (Element y : p.value_set_elements(el(s)))
      if (!p.represents(m1 * y, m1 * el(s)))
        rec.add("SG4", {el(s), y}, "y in V(s) but -s not in V(-y)");
  return report;
}

bool isometry2(const Psg& p, Element a, Element b, Element c, Element d) {
  return (a * b) == (c * d) && p.represents(a * b, a * c);
}

bool isometry3(const Psg& p, Element a1, Element a2, Element a3, Element b1, Element b2, Element b3) {
  for (std::size_t xi = 0; xi < p.size(); ++xi) {
    const Element x = el(xi);
    const Element y = a1 * x * b1;
    const Element z = a2 * a3 * x;
    if (isometry2(p, a1, x, b1, y) && isometry2(p, a2, a3, x, z) && isometry2(p, b2, b3, y, z)) return true;
  }
  return false;
}

ValidationReport validate_special(const Psg& p, std::size_t max_witnesses) {
  if (p.n() > 3) throw GuardrailError("3-form transitivity check is limited to n <= 3", "n <= 3");
  ValidationReport report;
  Recorder rec(report, max_witnesses);
  const std::size_t sz = p.size();
  const std::size_t forms = sz * sz * sz;
  auto split = [&](std::size_t f) { return std::array<Element, 3>{el(f % sz), el((f / sz) % sz), el(f / (sz * sz))}; };
  std::vector<BitVec> rel(forms, BitVec(forms));
  for (std::size_t f = 0; f < forms; ++f) {
    const auto a = split(f);
    for (std::size_t g = 0; g < forms; ++g) {
      const auto b = split(g);
      if (isometry3(p, a[0], a[1], a[2], b[0], b[1], b[2])) rel[f].set(g);
    }
  }
  for (std::size_t f = 0; f < forms; ++f) {
    for (std::size_t g = rel[f].find_first(); g != BitVec::npos; g = rel[f].find_next(g + 1)) {
      const BitVec missing = rel[g] ^ (rel[g] & rel[f]);
      const std::size_t h = missing.find_first();
      if (h != BitVec::npos) {
        auto a = split(f), b = split(g), c = split(h);
        rec.add("SG6", {a[0], a[1], a[2], b[0], b[1], b[2], c[0], c[1], c[2]},
                "3-form isometry is not transitive");
      }
    }
  }
  return report;
}

std::vector<Character> orderings(const Psg& p) {
  std::vector<Character> out;
  const std::size_t sz = p.size();
  for (std::size_t c = 0; c < sz; ++c) {
    const Character chi{static_cast<std::uint32_t>(c)};
    if (!chi(p.minus_one())) continue;
    bool saturated = true;
    for (std::size_t a = 0; a < sz && saturated; ++a) {
      if (chi(el(a))) continue;
      const BitVec& v = p.value_set(el(a));
      for (std::size_t x = v.find_first(); x != BitVec::npos; x = v.find_next(x + 1))
        if (chi(el(x))) {
          saturated = false;
          break;
        }
    }
    if (saturated) out.push_back(chi);
  }
  std::sort(out.begin(), out.end(), [&](Character a, Character b) {
    return BitVec::from_mask(a.coeffs, p.n()) < BitVec::from_mask(b.coeffs, p.n());
  });
  return out;
}

bool is_saturated(const Psg& p, const Gf2Subspace& delta) {
  if (delta.ambient_dim() != p.n()) throw PreconditionError("subgroup has the wrong ambient dimension");
  for (const auto& a : delta.elements())
    for (Element x : p.value_set_elements(element_from_bitvec(a)))
      if (!delta.contains(to_bitvec(x, p.n()))) return false;
  return true;
}

std::vector<Gf2Subspace> saturated_subgroups(const Psg& p) {
  if (p.n() > 6) throw GuardrailError("saturated subgroup enumeration is limited to n <= 6", "n <= 6");
  std::vector<Gf2Subspace> out;
  for (auto& s : all_subspaces(p.n()))
    if (is_saturated(p, s)) out.push_back(std::move(s));
  return out;
}

bool is_reduced(const Psg& p) {
  for (std::size_t a = 1; a < p.size(); ++a)
    if (isometry2(p, el(a), el(a), Element{0}, Element{0})) return false;
  return true;
}

Psg product(const Psg& p, const Psg& q) {
  const std::size_t n = p.n() + q.n();
  if (n > kMaxPsgBasis)
    throw GuardrailError("product basis size exceeds the supported maximum", "n <= " + std::to_string(kMaxPsgBasis));
  const std::size_t sz = std::size_t{1} << n;
  const std::uint32_t shift = static_cast<std::uint32_t>(p.n());
  const std::uint32_t low = static_cast<std::uint32_t>(p.size() - 1);
  std::vector<BitVec> sets(sz, BitVec(sz));
  for (std::size_t x = 0; x < sz; ++x) {
    const Element xp{static_cast<std::uint32_t>(x) & low};
    const Element xq{static_cast<std::uint32_t>(x) >> shift};
    for (Element yp : p.value_set_elements(xp))
      for (Element yq : q.value_set_elements(xq)) sets[x].set(yp.bits | (yq.bits << shift));
  }
  const Element m1{p.minus_one().bits | (q.minus_one().bits << shift)};
  return Psg("PRODUCT(" + p.name() + "," + q.name() + ")", n, m1, std::move(sets));
}

Element PsgMorphism::apply(Element x) const {
  return element_from_bitvec(matrix.apply(to_bitvec(x, source->n())));
}

ValidationReport check_morphism(const PsgMorphism& f, std::size_t max_witnesses) {
  if (!f.source || !f.target) throw PreconditionError("morphism is missing its source or target");
  if (f.matrix.rows() != f.target->n() || f.matrix.cols() != f.source->n())
    throw PreconditionError("morphism matrix must be n_target x n_source");
  ValidationReport report;
  Recorder rec(report, max_witnesses);
  if (f.preserves_minus_one && f.apply(f.source->minus_one()) != f.target->minus_one())
    rec.add("minus_one", {f.source->minus_one()}, "f(-1) differs from -1");
  for (std::size_t a = 0; a < f.source->size(); ++a) {
    const Element fa = f.apply(el(a));
    for (Element b : f.source->value_set_elements(el(a)))
      if (!f.target->represents(fa, f.apply(b)))
        rec.add("representation", {el(a), b}, "b in V(a) but f(b) not in V(f(a))");
  }
  return report;
}

}  // namespace sgal
