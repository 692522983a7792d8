#include "mulpart/pattern.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace mulpart {

MultiplicityPattern::MultiplicityPattern(std::initializer_list<unsigned> parts)
    : MultiplicityPattern(std::vector<unsigned>(parts)) {}

MultiplicityPattern::MultiplicityPattern(std::vector<unsigned> parts)
    : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("pattern needs at least one part");
  if (std::find(parts_.begin(), parts_.end(), 0u) != parts_.end()) {
    throw std::invalid_argument("pattern parts must be >= 1");
  }
  std::sort(parts_.begin(), parts_.end());
  k_ = std::accumulate(parts_.begin(), parts_.end(), 0u);
}

std::string to_string(const MultiplicityPattern& beta) {
  std::string s = "{";
  for (std::size_t i = 0; i < beta.r(); ++i) {
    if (i) s += ',';
    s += std::to_string(beta.parts()[i]);
  }
  return s + '}';
}

std::vector<MultiplicityPattern> patterns_of(unsigned k) {
  std::vector<MultiplicityPattern> out;
  std::vector<unsigned> cur;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned left, unsigned min_part) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (unsigned p = min_part; p <= left; ++p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  if (k > 0) rec(k, 1);
  return out;
}

}  // namespace mulpart
