#pragma once

// Arithmetic over a prime field F_q. Every message symbol, pad symbol and
// query coefficient in the retrieval scheme is an element of F_q.

#include <cstdint>
#include <random>
#include <ranges>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphspir {

class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool IsPrime(std::uint64_t n);

class FieldElement;

// Descriptor of F_q. The modulus is checked for primality on construction.
class FieldSpec {
 public:
  explicit FieldSpec(std::uint32_t modulus);

  std::uint32_t modulus() const { return modulus_; }

  FieldElement Element(std::uint64_t value) const;
  FieldElement Zero() const;
  FieldElement One() const;
  // Embeds a sign (+1, 0, -1) of a signed incidence entry.
  FieldElement FromSign(int sign) const;

  // Every element 0, 1, ..., q-1 exactly once, in increasing order.
  auto Elements() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint32_t modulus_;
};

class FieldElement {
 public:
  FieldElement() = default;

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }
  FieldSpec field() const { return FieldSpec(modulus_); }
  bool is_zero() const { return value_ == 0; }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  friend class FieldSpec;
  friend FieldElement Add(const FieldElement& a, const FieldElement& b);
  friend FieldElement Neg(const FieldElement& a);
  friend FieldElement Mul(const FieldElement& a, const FieldElement& b);
  FieldElement(std::uint32_t value, std::uint32_t modulus)
      : value_(value), modulus_(modulus) {}

  std::uint32_t value_ = 0;
  std::uint32_t modulus_ = 0;
};

inline void RequireSameField(const FieldElement& a, const FieldElement& b) {
  if (a.modulus() != b.modulus()) {
    throw FieldMismatch("field mismatch: F_" + std::to_string(a.modulus()) +
                        " vs F_" + std::to_string(b.modulus()));
  }
}

inline FieldElement Add(const FieldElement& a, const FieldElement& b) {
  RequireSameField(a, b);
  const std::uint32_t q = a.modulus_;
  const std::uint64_t sum = std::uint64_t{a.value_} + b.value_;
  return FieldElement(static_cast<std::uint32_t>(sum >= q ? sum - q : sum), q);
}

inline FieldElement Neg(const FieldElement& a) {
  return FieldElement(a.value_ == 0 ? 0 : a.modulus_ - a.value_, a.modulus_);
}

inline FieldElement Sub(const FieldElement& a, const FieldElement& b) {
  RequireSameField(a, b);
  return Add(a, Neg(b));
}

inline FieldElement Mul(const FieldElement& a, const FieldElement& b) {
  RequireSameField(a, b);
  const std::uint64_t product = std::uint64_t{a.value_} * b.value_;
  return FieldElement(static_cast<std::uint32_t>(product % a.modulus_), a.modulus_);
}

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return Add(a, b);
}
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return Sub(a, b);
}
inline FieldElement operator-(const FieldElement& a) { return Neg(a); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return Mul(a, b);
}
inline FieldElement& operator+=(FieldElement& a, const FieldElement& b) {
  return a = Add(a, b);
}

// Seeded source of uniform field symbols. Sampling is done by rejection on
// raw 64-bit Mersenne Twister output so a seed produces the same sequence on
// every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t UniformBelow(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

FieldElement SampleUniform(Rng& rng, const FieldSpec& field);
std::vector<FieldElement> SampleUniformVector(Rng& rng, const FieldSpec& field,
                                              std::size_t count);

inline auto FieldSpec::Elements() const {
  const std::uint32_t q = modulus_;
  return std::views::iota(std::uint32_t{0}, q) |
         std::views::transform(
             [q](std::uint32_t v) { return FieldElement(v, q); });
}

}  // namespace graphspir
