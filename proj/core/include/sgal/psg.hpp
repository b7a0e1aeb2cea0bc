#pragma once

#include "sgal/bitvec.hpp"
#include "sgal/gf2.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace sgal {

/// Largest supported basis size of a pre-special group.
inline constexpr std::size_t kMaxPsgBasis = 12;

/// Element of an exponent-2 group given by its coordinates over a fixed
/// ordered basis: bit i of `bits` is the exponent of basis element i.
struct Element {
  std::uint32_t bits = 0;

  bool is_one() const noexcept { return bits == 0; }
  friend Element operator*(Element a, Element b) noexcept { return Element{a.bits ^ b.bits}; }
  friend bool operator==(Element, Element) = default;
  friend auto operator<=>(Element, Element) = default;
};

BitVec to_bitvec(Element x, std::size_t n);
Element element_from_bitvec(const BitVec& v);
std::string to_bitstring(Element x, std::size_t n);
/// Parses a bitstring of exactly n characters (leftmost = basis element 0).
Element parse_element(const std::string& bits, std::size_t n);

/// Homomorphism G -> F2 given by its coefficient vector.
struct Character {
  std::uint32_t coeffs = 0;

  bool operator()(Element x) const noexcept;
  friend bool operator==(Character, Character) = default;
};

/// A finite pre-special group presented through its value sets V(x) = D(1, x).
class Psg {
 public:
  /// `value_sets[x.bits]` is the membership vector (length 2^n) of V(x).
  /// Throws ParseError on structurally malformed data.
  Psg(std::string name, std::size_t n, Element minus_one, std::vector<BitVec> value_sets);

  static Psg from_lists(std::string name, std::size_t n, Element minus_one,
                        const std::vector<std::vector<Element>>& value_sets);

  const std::string& name() const noexcept { return name_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return std::size_t{1} << n_; }
  Element minus_one() const noexcept { return minus_one_; }

  /// True iff y lies in V(x).
  bool represents(Element x, Element y) const { return value_sets_[x.bits].get(y.bits); }
  const BitVec& value_set(Element x) const { return value_sets_.at(x.bits); }
  std::vector<Element> value_set_elements(Element x) const;

  Psg renamed(std::string name) const;

 private:
  std::string name_;
  std::size_t n_;
  Element minus_one_;
  std::vector<BitVec> value_sets_;
};

using PsgPtr = std::shared_ptr<const Psg>;

/// An axiom failure together with the elements that exhibit it.
struct Violation {
  std::string axiom;
  std::vector<Element> witness;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Checks the pre-special group axioms on the derived binary isometry.
/// At most `max_witnesses` violations are recorded per axiom.
ValidationReport validate(const Psg& p, std::size_t max_witnesses = 8);

/// Checks transitivity of the derived isometry of 3-dimensional forms.
/// Only meaningful for a valid p; guarded to n <= 3.
ValidationReport validate_special(const Psg& p, std::size_t max_witnesses = 8);

/// <a,b> is isometric to <c,d>: ab = cd and c lies in a * V(ab).
bool isometry2(const Psg& p, Element a, Element b, Element c, Element d);

/// Isometry of <a1,a2,a3> and <b1,b2,b3> as a chain of binary isometries.
bool isometry3(const Psg& p, Element a1, Element a2, Element a3, Element b1, Element b2, Element b3);

/// Characters with chi(-1) = 1 and saturated kernel, sorted by coefficients.
std::vector<Character> orderings(const Psg& p);

bool is_saturated(const Psg& p, const Gf2Subspace& delta);
/// Exhaustive; guarded to n <= 6.
std::vector<Gf2Subspace> saturated_subgroups(const Psg& p);

/// a * a isometric to 1 * 1 only for a = 1.
bool is_reduced(const Psg& p);

/// Basis concatenation; V((x, y)) = V(x) x V(y).
Psg product(const Psg& p, const Psg& q);

/// Names accepted by catalog(): TRIVIAL_SG, Z2_REAL, F3LIKE, FAN2, FAN(k)
/// and PRODUCT(A, B, ...) with nested arguments.
Psg catalog(const std::string& name);
std::vector<std::string> catalog_names();
Psg fan(std::size_t n);

/// Linear map between two pre-special groups.
struct PsgMorphism {
  PsgPtr source;
  PsgPtr target;
  Gf2Matrix matrix;  ///< n_target x n_source, acting on column vectors
  bool preserves_minus_one = true;

  Element apply(Element x) const;
  bool is_injective() const { return matrix.rank() == source->n(); }
};

/// Violations of -1 preservation and of b in V(a) => f(b) in V(f(a)).
ValidationReport check_morphism(const PsgMorphism& f, std::size_t max_witnesses = 8);

}  // namespace sgal
