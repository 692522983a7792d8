#ifndef MULPART_PATTERN_HPP
#define MULPART_PATTERN_HPP

#include <initializer_list>
#include <string>
#include <vector>

namespace mulpart {

/// Multiset of factor multiplicities {beta_1, ..., beta_r}, kept sorted.
/// A factorization m = m_1^beta_1 ... m_r^beta_r over distinct bases has
/// this pattern; the parts sum to the number of factors k.
class MultiplicityPattern {
 public:
  MultiplicityPattern(std::initializer_list<unsigned> parts);
  explicit MultiplicityPattern(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned k() const { return k_; }
  std::size_t r() const { return parts_.size(); }

  friend bool operator==(const MultiplicityPattern&, const MultiplicityPattern&) = default;
  friend auto operator<=>(const MultiplicityPattern&, const MultiplicityPattern&) = default;

 private:
  std::vector<unsigned> parts_;
  unsigned k_ = 0;
};

std::string to_string(const MultiplicityPattern& beta);

/// Every pattern with parts summing to k (the partitions of k).
std::vector<MultiplicityPattern> patterns_of(unsigned k);

}  // namespace mulpart

#endif  // MULPART_PATTERN_HPP
