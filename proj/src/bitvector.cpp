#include "scismm/bitvector.hpp"

#include <algorithm>

namespace scismm {

BitVector::BitVector(std::size_t length, bool fill) {
  if (length == 0) throw InvalidParameter("BitVector length must be >= 1");
  bits_.assign(length, fill ? 1 : 0);
}

BitVector::BitVector(std::initializer_list<int> bits) {
  if (bits.size() == 0) throw InvalidParameter("BitVector length must be >= 1");
  bits_.reserve(bits.size());
  for (int b : bits) {
    if (b != 0 && b != 1) throw InvalidParameter("bit must be 0 or 1");
    bits_.push_back(static_cast<std::uint8_t>(b));
  }
}

BitVector BitVector::from_bits(std::vector<std::uint8_t> bits) {
  if (bits.empty()) throw InvalidParameter("BitVector length must be >= 1");
  for (auto b : bits)
    if (b > 1) throw InvalidParameter("bit must be 0 or 1");
  BitVector v(bits.size());
  v.bits_ = std::move(bits);
  return v;
}

BitVector BitVector::from_index(std::uint64_t index, std::size_t length) {
  if (length == 0 || length > 64) throw InvalidParameter("length must be in [1,64]");
  if (length < 64 && (index >> length) != 0)
    throw InvalidParameter("index does not fit in the requested length");
  BitVector v(length);
  for (std::size_t i = 0; i < length; ++i)
    v.bits_[i] = static_cast<std::uint8_t>((index >> (length - 1 - i)) & 1u);
  return v;
}

std::uint8_t BitVector::at(std::size_t i) const {
  if (i >= bits_.size()) throw IndexOutOfRange("bit index out of range");
  return bits_[i];
}

void BitVector::set(std::size_t i, bool v) {
  if (i >= bits_.size()) throw IndexOutOfRange("bit index out of range");
  bits_[i] = v ? 1 : 0;
}

void BitVector::flip(std::size_t i) {
  if (i >= bits_.size()) throw IndexOutOfRange("bit index out of range");
  bits_[i] ^= 1u;
}

std::uint64_t BitVector::to_index() const {
  if (bits_.size() > 64) throw InvalidParameter("state too wide for an index");
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    idx |= static_cast<std::uint64_t>(bits_[i]) << (bits_.size() - 1 - i);
  return idx;
}

std::string BitVector::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

bool BitVector::all_equal() const {
  return std::all_of(bits_.begin(), bits_.end(),
                     [&](std::uint8_t b) { return b == bits_.front(); });
}

std::size_t hamming_distance(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) throw LengthMismatch("bit vectors differ in length");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

}  // namespace scismm
