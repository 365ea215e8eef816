#include "graphspir/field.h"

#include <limits>

namespace graphspir {

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(std::uint32_t modulus) : modulus_(modulus) {
  if (!IsPrime(modulus)) {
    throw std::invalid_argument("field modulus " + std::to_string(modulus) +
                                " is not prime");
  }
}

FieldElement FieldSpec::Element(std::uint64_t value) const {
  return FieldElement(static_cast<std::uint32_t>(value % modulus_), modulus_);
}

FieldElement FieldSpec::Zero() const { return FieldElement(0, modulus_); }

FieldElement FieldSpec::One() const { return FieldElement(1 % modulus_, modulus_); }

FieldElement FieldSpec::FromSign(int sign) const {
  if (sign == 0) return Zero();
  if (sign == 1) return One();
  if (sign == -1) return Neg(One());
  throw std::invalid_argument("sign must be one of -1, 0, +1");
}

std::uint64_t Rng::UniformBelow(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty sampling range");
  // Largest multiple of bound representable; draws above it are rejected.
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound + 1) % bound;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw > limit);
  return draw % bound;
}

FieldElement SampleUniform(Rng& rng, const FieldSpec& field) {
  return field.Element(rng.UniformBelow(field.modulus()));
}

std::vector<FieldElement> SampleUniformVector(Rng& rng, const FieldSpec& field,
                                              std::size_t count) {
  std::vector<FieldElement> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(SampleUniform(rng, field));
  return out;
}

}  // namespace graphspir
