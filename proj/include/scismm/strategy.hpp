#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "scismm/errors.hpp"

namespace scismm {

// A sequence over [0, alphabet) selecting which component updates at each
// step. Finite strategies expose exactly their materialized terms. Cyclic
// strategies repeat their base block forever; shifting rotates the block, so
// shifting a cyclic strategy block-size times is the structural identity.
class Strategy {
 public:
  enum class Extension { finite, cyclic };

  Strategy(std::uint32_t alphabet, std::vector<std::uint32_t> terms,
           Extension extension = Extension::finite);

  std::uint32_t alphabet() const { return alphabet_; }
  Extension extension() const { return extension_; }
  bool cyclic() const { return extension_ == Extension::cyclic; }

  // Number of accessible terms; unbounded for cyclic strategies.
  std::size_t materialized() const {
    return cyclic() ? std::numeric_limits<std::size_t>::max() : terms_.size();
  }
  bool has_terms(std::size_t n) const { return n <= materialized(); }

  std::uint32_t term(std::size_t i) const;
  Strategy shifted() const;

  const std::vector<std::uint32_t>& block() const { return terms_; }

  // True when term(i) agrees for every i < depth.
  bool equal_prefix(const Strategy& other, std::size_t depth) const;

  friend bool operator==(const Strategy&, const Strategy&) = default;

 private:
  std::uint32_t alphabet_;
  std::vector<std::uint32_t> terms_;
  Extension extension_;
};

}  // namespace scismm
