#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sgal {

/// Finite group given by a full multiplication table; element 0 is the identity.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  /// `table[a * order + b]` is the index of a*b. Throws PreconditionError
  /// unless the table defines a group with identity 0.
  FiniteGroup(std::size_t order, std::vector<std::uint32_t> table);

  static FiniteGroup cyclic(std::size_t k);
  /// Dihedral group of order 8; index k + 4e stands for r^k s^e.
  static FiniteGroup dihedral8();
  static FiniteGroup quaternion8();

  std::size_t order() const noexcept { return order_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a * order_ + b]; }
  std::uint32_t inverse(std::uint32_t a) const;
  std::uint32_t power(std::uint32_t a, std::size_t k) const;
  std::size_t element_order(std::uint32_t a) const;
  bool is_abelian() const;
  std::size_t exponent() const;
  std::size_t involution_count() const;
  const std::vector<std::uint32_t>& table() const noexcept { return table_; }

 private:
  std::size_t order_ = 0;
  std::vector<std::uint32_t> table_;
};

enum class GroupClass { Trivial, Z2, Z4, Z2xZ2, Z8, Z4xZ2, Z2xZ2xZ2, D4, Q8, Other };

std::string to_string(GroupClass c);

struct Fingerprint {
  std::size_t order = 0;
  bool abelian = true;
  std::size_t exponent = 1;
  std::size_t involutions = 0;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const FiniteGroup& g);
/// Exact for groups of order <= 8; everything else is Other.
GroupClass identify(const Fingerprint& f);

/// A group of order at most 16 with its invariant-based identification.
struct SmallGroup {
  FiniteGroup group;
  Fingerprint fp;
  GroupClass cls = GroupClass::Other;
};

/// Throws GuardrailError when the group has more than 16 elements.
SmallGroup make_small_group(FiniteGroup g);

/// r of order 4 and s of order 2 outside <r> with (sr)^2 = 1.
struct D4Witness {
  std::uint32_t r = 0;
  std::uint32_t s = 0;
};
std::optional<D4Witness> find_d4_witness(const FiniteGroup& g);

}  // namespace sgal
