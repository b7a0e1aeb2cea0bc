#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace sgal {

/// Fixed-length vector over F2, packed into 64-bit words.
///
/// Index 0 is the first coordinate. Bits beyond `size()` are always zero,
/// so word-wise comparison and hashing are exact.
class BitVec {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BitVec() = default;
  explicit BitVec(std::size_t length);

  /// Parses a string of '0'/'1' characters; character i is coordinate i.
  static BitVec from_string(std::string_view bits);
  /// Coordinate i is bit i of `mask`; requires length <= 64.
  static BitVec from_mask(std::uint64_t mask, std::size_t length);
  static BitVec unit(std::size_t length, std::size_t index);
  static BitVec concat(const BitVec& head, const BitVec& tail);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool get(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool value = true) noexcept {
    const Word m = Word{1} << (i % kWordBits);
    if (value)
      words_[i / kWordBits] |= m;
    else
      words_[i / kWordBits] &= ~m;
  }
  void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  bool none() const noexcept;
  bool any() const noexcept { return !none(); }
  std::size_t count() const noexcept;

  /// Index of the lowest set coordinate at or after `from`, or npos.
  std::size_t find_next(std::size_t from) const noexcept;
  std::size_t find_first() const noexcept { return find_next(0); }

  /// Standard dot product over F2.
  bool dot(const BitVec& other) const;

  BitVec& operator^=(const BitVec& other);
  BitVec& operator&=(const BitVec& other);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }

  BitVec slice(std::size_t offset, std::size_t length) const;
  std::string to_string() const;
  std::uint64_t to_mask() const;

  std::size_t word_count() const noexcept { return words_.size(); }
  const Word* words() const noexcept { return words_.data(); }
  Word* words() noexcept { return words_.data(); }

  friend bool operator==(const BitVec& a, const BitVec& b) noexcept {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }
  /// Orders like the bitstrings produced by to_string().
  friend std::strong_ordering operator<=>(const BitVec& a, const BitVec& b) noexcept;

  std::size_t hash() const noexcept;

 private:
  std::size_t size_ = 0;
  boost::container::small_vector<Word, 2> words_;
};

struct BitVecHash {
  std::size_t operator()(const BitVec& v) const noexcept { return v.hash(); }
};

}  // namespace sgal

template <>
struct std::hash<sgal::BitVec> {
  std::size_t operator()(const sgal::BitVec& v) const noexcept { return v.hash(); }
};
