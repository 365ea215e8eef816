#pragma once

// Exact joint distributions as integer count tables, and exact independence
// testing on them. Outcomes are tuples of small integers in [0, radix); a
// tuple is packed into one 64-bit mixed-radix code, so radix^arity must fit
// in 64 bits.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace graphspir {

class ExactDistribution {
 public:
  using Outcome = std::vector<std::uint32_t>;

  ExactDistribution(std::uint32_t radix, std::size_t arity);

  std::uint32_t radix() const { return radix_; }
  std::size_t arity() const { return arity_; }
  std::uint64_t total() const { return total_; }
  std::size_t support_size() const { return counts_.size(); }
  bool empty() const { return total_ == 0; }

  void Add(std::span<const std::uint32_t> outcome, std::uint64_t count = 1);
  void AddCode(std::uint64_t code, std::uint64_t count = 1);
  void Merge(const ExactDistribution& other);

  std::uint64_t Count(std::span<const std::uint32_t> outcome) const;
  std::uint64_t Encode(std::span<const std::uint32_t> outcome) const;
  Outcome Decode(std::uint64_t code) const;

  // Marginal over the listed components, in the listed order.
  ExactDistribution Project(std::span<const std::size_t> components) const;

  const std::unordered_map<std::uint64_t, std::uint64_t>& counts() const {
    return counts_;
  }
  // Support codes in increasing order.
  std::vector<std::uint64_t> SortedSupport() const;

  friend bool operator==(const ExactDistribution& a, const ExactDistribution& b) {
    return a.radix_ == b.radix_ && a.arity_ == b.arity_ && a.total_ == b.total_ &&
           a.counts_ == b.counts_;
  }

 private:
  std::uint32_t radix_;
  std::size_t arity_;
  std::uint64_t total_ = 0;
  std::unordered_map<std::uint64_t, std::uint64_t> counts_;
};

// A cell where count(a, b) * total != count(a) * count(b).
struct DependenceWitness {
  ExactDistribution::Outcome a;
  ExactDistribution::Outcome b;
  std::uint64_t joint_count = 0;
  std::uint64_t count_a = 0;
  std::uint64_t count_b = 0;
  std::uint64_t total = 0;
};

// Cells are ordered by the B outcome first, then the A outcome.
struct IndependenceVerdict {
  bool independent = true;
  std::optional<DependenceWitness> witness;  // smallest failing cell
};

// Decides I(A; B) = 0 with integer arithmetic only. group_a and group_b must
// be disjoint and together cover every component of the joint.
IndependenceVerdict TestIndependence(const ExactDistribution& joint,
                                     std::span<const std::size_t> group_a,
                                     std::span<const std::size_t> group_b);

// The same test on a joint where every realization has weight 1, given as one
// code per realization: code = a + radix^arity_a * b. Sorts `codes` in place,
// so memory stays at one word per realization.
IndependenceVerdict TestIndependenceOfCodes(std::vector<std::uint64_t>& codes,
                                            std::uint32_t radix, std::size_t arity_a,
                                            std::size_t arity_b);

// The mutual information in bits. Uses floating point; only for display.
double MutualInformationBits(const ExactDistribution& joint,
                             std::span<const std::size_t> group_a,
                             std::span<const std::size_t> group_b);

}  // namespace graphspir
