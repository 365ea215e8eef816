#include "graphspir/distribution.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

namespace graphspir {

namespace {

// Codes run from 0 to radix^arity - 1.
bool FitsIn64Bits(std::uint32_t radix, std::size_t arity) {
  if (radix <= 1) return true;
  const unsigned __int128 limit =
      static_cast<unsigned __int128>(std::numeric_limits<std::uint64_t>::max()) + 1;
  unsigned __int128 size = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    size *= radix;
    if (size > limit) return false;
  }
  return true;
}

void CheckPartition(const ExactDistribution& joint,
                    std::span<const std::size_t> group_a,
                    std::span<const std::size_t> group_b) {
  if (joint.empty()) throw std::invalid_argument("empty distribution");
  std::vector<int> seen(joint.arity(), 0);
  for (auto groups : {group_a, group_b}) {
    for (std::size_t c : groups) {
      if (c >= joint.arity()) throw std::out_of_range("component out of range");
      ++seen[c];
    }
  }
  if (std::any_of(seen.begin(), seen.end(), [](int s) { return s != 1; })) {
    throw std::invalid_argument(
        "partition must cover every component exactly once");
  }
}

struct Marginals {
  std::map<std::uint64_t, std::uint64_t> a;
  std::map<std::uint64_t, std::uint64_t> b;
  std::unordered_map<std::uint64_t, std::unordered_map<std::uint64_t, std::uint64_t>>
      joint;  // a-code -> b-code -> count
  ExactDistribution da;
  ExactDistribution db;
};

Marginals Split(const ExactDistribution& joint, std::span<const std::size_t> group_a,
                std::span<const std::size_t> group_b) {
  Marginals m{{}, {}, {}, ExactDistribution(joint.radix(), group_a.size()),
              ExactDistribution(joint.radix(), group_b.size())};
  std::vector<std::uint32_t> pa(group_a.size());
  std::vector<std::uint32_t> pb(group_b.size());
  for (const auto& [code, count] : joint.counts()) {
    const auto outcome = joint.Decode(code);
    for (std::size_t i = 0; i < group_a.size(); ++i) pa[i] = outcome[group_a[i]];
    for (std::size_t i = 0; i < group_b.size(); ++i) pb[i] = outcome[group_b[i]];
    const std::uint64_t ca = m.da.Encode(pa);
    const std::uint64_t cb = m.db.Encode(pb);
    m.a[ca] += count;
    m.b[cb] += count;
    m.joint[ca][cb] += count;
  }
  return m;
}

}  // namespace

ExactDistribution::ExactDistribution(std::uint32_t radix, std::size_t arity)
    : radix_(radix), arity_(arity) {
  if (radix < 1) throw std::invalid_argument("radix must be positive");
  if (!FitsIn64Bits(radix, arity)) {
    throw std::length_error("outcome space " + std::to_string(radix) + "^" +
                            std::to_string(arity) + " does not fit 64-bit codes");
  }
}

std::uint64_t ExactDistribution::Encode(std::span<const std::uint32_t> outcome) const {
  if (outcome.size() != arity_) {
    throw std::invalid_argument("outcome has " + std::to_string(outcome.size()) +
                                " components, expected " + std::to_string(arity_));
  }
  std::uint64_t code = 0;
  for (std::size_t i = outcome.size(); i-- > 0;) {
    if (outcome[i] >= radix_) throw std::out_of_range("outcome component >= radix");
    code = code * radix_ + outcome[i];
  }
  return code;
}

ExactDistribution::Outcome ExactDistribution::Decode(std::uint64_t code) const {
  Outcome out(arity_);
  for (std::size_t i = 0; i < arity_; ++i) {
    out[i] = static_cast<std::uint32_t>(code % radix_);
    code /= radix_;
  }
  return out;
}

void ExactDistribution::Add(std::span<const std::uint32_t> outcome,
                            std::uint64_t count) {
  AddCode(Encode(outcome), count);
}

void ExactDistribution::AddCode(std::uint64_t code, std::uint64_t count) {
  if (count == 0) return;
  counts_[code] += count;
  total_ += count;
}

void ExactDistribution::Merge(const ExactDistribution& other) {
  if (other.radix_ != radix_ || other.arity_ != arity_) {
    throw std::invalid_argument("merging distributions of different shapes");
  }
  for (const auto& [code, count] : other.counts_) counts_[code] += count;
  total_ += other.total_;
}

std::uint64_t ExactDistribution::Count(std::span<const std::uint32_t> outcome) const {
  const auto it = counts_.find(Encode(outcome));
  return it == counts_.end() ? 0 : it->second;
}

ExactDistribution ExactDistribution::Project(
    std::span<const std::size_t> components) const {
  ExactDistribution out(radix_, components.size());
  std::vector<std::uint32_t> part(components.size());
  for (const auto& [code, count] : counts_) {
    const Outcome full = Decode(code);
    for (std::size_t i = 0; i < components.size(); ++i) {
      part[i] = full.at(components[i]);
    }
    out.Add(part, count);
  }
  return out;
}

std::vector<std::uint64_t> ExactDistribution::SortedSupport() const {
  std::vector<std::uint64_t> codes;
  codes.reserve(counts_.size());
  for (const auto& [code, count] : counts_) codes.push_back(code);
  std::sort(codes.begin(), codes.end());
  return codes;
}

IndependenceVerdict TestIndependence(const ExactDistribution& joint,
                                     std::span<const std::size_t> group_a,
                                     std::span<const std::size_t> group_b) {
  CheckPartition(joint, group_a, group_b);
  const Marginals m = Split(joint, group_a, group_b);
  const unsigned __int128 total = joint.total();
  // Every cell of support(A) x support(B) is checked, including cells the
  // joint never hits.
  for (const auto& [cb, count_b] : m.b) {
    for (const auto& [ca, count_a] : m.a) {
      const auto& row = m.joint.at(ca);
      const auto it = row.find(cb);
      const std::uint64_t joint_count = it == row.end() ? 0 : it->second;
      if (static_cast<unsigned __int128>(joint_count) * total !=
          static_cast<unsigned __int128>(count_a) * count_b) {
        return {false, DependenceWitness{m.da.Decode(ca), m.db.Decode(cb),
                                         joint_count, count_a, count_b,
                                         joint.total()}};
      }
    }
  }
  return {true, std::nullopt};
}

IndependenceVerdict TestIndependenceOfCodes(std::vector<std::uint64_t>& codes,
                                            std::uint32_t radix, std::size_t arity_a,
                                            std::size_t arity_b) {
  if (codes.empty()) throw std::invalid_argument("empty distribution");
  if (arity_a == 0 || arity_b == 0) throw std::invalid_argument("empty component group");
  if (radix < 1 || !FitsIn64Bits(radix, arity_a + arity_b)) {
    throw std::length_error("joint outcome space does not fit 64-bit codes");
  }
  std::uint64_t base = 1;
  for (std::size_t i = 0; i < arity_a; ++i) base *= radix;

  std::sort(codes.begin(), codes.end());
  std::unordered_map<std::uint64_t, std::uint64_t> count_a;
  for (std::uint64_t code : codes) ++count_a[code % base];
  std::vector<std::uint64_t> support_a;
  support_a.reserve(count_a.size());
  for (const auto& [a, c] : count_a) support_a.push_back(a);
  std::sort(support_a.begin(), support_a.end());

  const std::uint64_t total = codes.size();
  const auto holds = [&](std::uint64_t joint, std::uint64_t ca, std::uint64_t cb) {
    return static_cast<unsigned __int128>(joint) * total ==
           static_cast<unsigned __int128>(ca) * cb;
  };
  const ExactDistribution da(radix, arity_a);
  const ExactDistribution db(radix, arity_b);

  for (std::size_t begin = 0; begin < codes.size();) {
    const std::uint64_t b = codes[begin] / base;
    std::size_t end = begin;
    while (end < codes.size() && codes[end] / base == b) ++end;
    const std::uint64_t count_b = end - begin;

    bool ok = true;
    std::size_t distinct = 0;
    for (std::size_t i = begin; ok && i < end;) {
      std::size_t j = i;
      while (j < end && codes[j] == codes[i]) ++j;
      ok = holds(j - i, count_a.at(codes[i] % base), count_b);
      ++distinct;
      i = j;
    }
    if (ok && distinct == support_a.size()) {
      begin = end;
      continue;
    }

    // Walk support(A) against this group to find the smallest failing cell,
    // which may be a cell the joint never hits.
    std::size_t i = begin;
    for (std::uint64_t a : support_a) {
      std::uint64_t joint = 0;
      while (i < end && codes[i] % base < a) ++i;
      while (i < end && codes[i] % base == a) {
        ++joint;
        ++i;
      }
      if (!holds(joint, count_a.at(a), count_b)) {
        return {false, DependenceWitness{da.Decode(a), db.Decode(b), joint,
                                         count_a.at(a), count_b, total}};
      }
    }
    begin = end;
  }
  return {true, std::nullopt};
}

double MutualInformationBits(const ExactDistribution& joint,
                             std::span<const std::size_t> group_a,
                             std::span<const std::size_t> group_b) {
  CheckPartition(joint, group_a, group_b);
  const Marginals m = Split(joint, group_a, group_b);
  const long double total = static_cast<long double>(joint.total());
  long double bits = 0;
  for (const auto& [ca, row] : m.joint) {
    for (const auto& [cb, count] : row) {
      const long double p = count / total;
      const long double pa = m.a.at(ca) / total;
      const long double pb = m.b.at(cb) / total;
      bits += p * std::log2(p / (pa * pb));
    }
  }
  return static_cast<double>(bits);
}

}  // namespace graphspir
