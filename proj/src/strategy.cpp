#include "scismm/strategy.hpp"

#include <algorithm>
#include <utility>

namespace scismm {

Strategy::Strategy(std::uint32_t alphabet, std::vector<std::uint32_t> terms,
                   Extension extension)
    : alphabet_(alphabet), terms_(std::move(terms)), extension_(extension) {
  if (alphabet_ == 0) throw InvalidParameter("strategy alphabet must be >= 1");
  for (auto t : terms_)
    if (t >= alphabet_)
      throw InvalidParameter("strategy term outside [0, alphabet)");
  if (cyclic() && terms_.empty())
    throw InvalidParameter("cyclic strategy needs a nonempty block");
}

std::uint32_t Strategy::term(std::size_t i) const {
  if (cyclic()) return terms_[i % terms_.size()];
  if (i >= terms_.size())
    throw InsufficientStrategy("strategy has too few materialized terms");
  return terms_[i];
}

Strategy Strategy::shifted() const {
  if (terms_.empty())
    throw InsufficientStrategy("cannot shift an exhausted strategy");
  std::vector<std::uint32_t> next(terms_.begin() + 1, terms_.end());
  if (cyclic()) next.push_back(terms_.front());
  return Strategy(alphabet_, std::move(next), extension_);
}

bool Strategy::equal_prefix(const Strategy& other, std::size_t depth) const {
  if (!has_terms(depth) || !other.has_terms(depth))
    throw InsufficientStrategy("prefix comparison beyond materialized terms");
  for (std::size_t i = 0; i < depth; ++i)
    if (term(i) != other.term(i)) return false;
  return true;
}

}  // namespace scismm
