#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "scismm/errors.hpp"

namespace scismm {

// Fixed-length vector over {0,1}. The length is set at construction and never
// changes afterwards; every mutation stays within the existing cells.
class BitVector {
 public:
  explicit BitVector(std::size_t length, bool fill = false);
  BitVector(std::initializer_list<int> bits);

  static BitVector from_bits(std::vector<std::uint8_t> bits);
  // Unpacks `length` bits of `index`, bit 0 of the vector being the most
  // significant. Inverse of to_index().
  static BitVector from_index(std::uint64_t index, std::size_t length);

  std::size_t size() const { return bits_.size(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  std::uint8_t at(std::size_t i) const;
  void set(std::size_t i, bool v);
  void flip(std::size_t i);

  const std::vector<std::uint8_t>& bits() const { return bits_; }
  std::vector<std::uint8_t>& bits() { return bits_; }

  std::uint64_t to_index() const;  // requires size() <= 64
  std::string to_string() const;

  bool all_equal() const;  // every bit identical

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// Number of differing positions; LengthMismatch when sizes differ.
std::size_t hamming_distance(const BitVector& a, const BitVector& b);

}  // namespace scismm
