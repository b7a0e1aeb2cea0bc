#include "sgal/bitvec.hpp"

#include "sgal/errors.hpp"

#include <bit>

namespace sgal {

namespace {
std::size_t words_for(std::size_t bits) { return (bits + BitVec::kWordBits - 1) / BitVec::kWordBits; }
}  // namespace

BitVec::BitVec(std::size_t length) : size_(length), words_(words_for(length), 0) {}

BitVec BitVec::from_string(std::string_view bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i);
    else if (bits[i] != '0')
      throw ParseError("bitstring contains a character other than 0/1: '" + std::string(bits) + "'");
  }
  return v;
}

BitVec BitVec::from_mask(std::uint64_t mask, std::size_t length) {
  if (length > kWordBits) throw PreconditionError("from_mask supports at most 64 coordinates");
  BitVec v(length);
  if (length > 0) v.words_[0] = length == kWordBits ? mask : (mask & ((Word{1} << length) - 1));
  return v;
}

BitVec BitVec::unit(std::size_t length, std::size_t index) {
  if (index >= length) throw PreconditionError("unit vector index out of range");
  BitVec v(length);
  v.set(index);
  return v;
}

BitVec BitVec::concat(const BitVec& head, const BitVec& tail) {
  BitVec v(head.size() + tail.size());
  for (std::size_t w = 0; w < head.words_.size(); ++w) v.words_[w] = head.words_[w];
  for (std::size_t i = tail.find_first(); i != npos; i = tail.find_next(i + 1)) v.set(head.size() + i);
  return v;
}

bool BitVec::none() const noexcept {
  for (Word w : words_)
    if (w) return false;
  return true;
}

std::size_t BitVec::count() const noexcept {
  std::size_t c = 0;
  for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t BitVec::find_next(std::size_t from) const noexcept {
  if (from >= size_) return npos;
  std::size_t wi = from / kWordBits;
  Word w = words_[wi] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (w) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
    if (++wi >= words_.size()) return npos;
    w = words_[wi];
  }
}

bool BitVec::dot(const BitVec& other) const {
  if (other.size_ != size_) throw PreconditionError("dot: length mismatch");
  Word acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
  return std::popcount(acc) & 1;
}

BitVec& BitVec::operator^=(const BitVec& other) {
  if (other.size_ != size_) throw PreconditionError("xor: length mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

BitVec& BitVec::operator&=(const BitVec& other) {
  if (other.size_ != size_) throw PreconditionError("and: length mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

BitVec BitVec::slice(std::size_t offset, std::size_t length) const {
  if (offset + length > size_) throw PreconditionError("slice out of range");
  BitVec v(length);
  for (std::size_t i = find_next(offset); i != npos && i < offset + length; i = find_next(i + 1)) v.set(i - offset);
  return v;
}

std::string BitVec::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = find_first(); i != npos; i = find_next(i + 1)) s[i] = '1';
  return s;
}

std::uint64_t BitVec::to_mask() const {
  if (size_ > kWordBits) throw PreconditionError("to_mask supports at most 64 coordinates");
  return words_.empty() ? 0 : words_[0];
}

std::strong_ordering operator<=>(const BitVec& a, const BitVec& b) noexcept {
  if (a.size_ != b.size_) return a.size_ <=> b.size_;
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    const BitVec::Word d = a.words_[w] ^ b.words_[w];
    if (d) {
      const auto bit = static_cast<unsigned>(std::countr_zero(d));
      return ((a.words_[w] >> bit) & 1U) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

std::size_t BitVec::hash() const noexcept {
  std::size_t h = size_ * 0x9E3779B97F4A7C15ULL;
  for (Word w : words_) h ^= std::hash<Word>{}(w) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace sgal
