#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "selfdual/errors.hpp"

namespace selfdual {

class Field;
class FieldElement;
using FieldPtr = std::shared_ptr<const Field>;

// F_{p^s} with a fixed monic irreducible modulus over F_p (the degenerate
// modulus x for s = 1). Elements are handled as integer encodings
// sum(c_i * p^i) in [0, p^s); all arithmetic is exact.
class Field : public std::enable_shared_from_this<Field> {
 public:
  std::uint64_t characteristic() const { return p_; }
  unsigned extension_degree() const { return s_; }
  std::uint64_t order() const { return order_; }
  // Coefficients of the modulus over F_p, constant term first, size s+1, monic.
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  // Operations on element encodings.
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t inv(std::uint64_t a) const;  // division_by_zero on 0
  std::uint64_t pow(std::uint64_t a, std::int64_t e) const;

  std::uint64_t encode(const std::vector<std::uint64_t>& coeffs) const;
  std::vector<std::uint64_t> decode(std::uint64_t code) const;

  // Interchangeable iff (p, s, modulus) match exactly.
  bool same_field(const Field& other) const;

  FieldElement element(std::uint64_t code) const;
  FieldElement from_int(std::int64_t v) const;  // reduced mod p, prime-subfield value
  FieldElement zero() const;
  FieldElement one() const;

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  Field(std::uint64_t p, unsigned s, std::vector<std::uint64_t> modulus);

  std::uint64_t ext_mul_generic(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t ext_inv_generic(std::uint64_t a) const;
  void check_code(std::uint64_t a) const;

  std::uint64_t p_;
  unsigned s_;
  std::uint64_t order_;
  std::vector<std::uint64_t> modulus_;
  bool lut_ = false;
  std::vector<std::uint32_t> mul_tab_;
  std::vector<std::uint32_t> inv_tab_;

  friend FieldPtr make_field(std::uint64_t p, unsigned s);
  friend FieldPtr make_field_with_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus);
};

// Deterministic constructor: modulus is the lexicographically smallest monic
// irreducible polynomial of degree s over F_p, coefficient tuples compared
// constant term first. Cached per (p, s); the same pointer is returned.
FieldPtr make_field(std::uint64_t p, unsigned s);

// Explicit-modulus constructor (validated); mainly for tests.
FieldPtr make_field_with_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus);

class FieldElement {
 public:
  FieldElement(FieldPtr field, std::uint64_t code);

  const FieldPtr& field() const { return field_; }
  std::uint64_t code() const { return code_; }
  std::vector<std::uint64_t> coeffs() const { return field_->decode(code_); }

  bool is_zero() const { return code_ == 0; }
  bool is_one() const { return code_ == 1; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(std::int64_t e) const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  FieldPtr field_;
  std::uint64_t code_;
};

// Smallest-encoding root of x^2 + 1 = 0, if any. Characteristic 2 is refused.
std::optional<FieldElement> solve_x2_plus_1(const FieldPtr& field);

// Euler-criterion quadratic residue test modulo an odd prime q, gcd(a, q) = 1.
bool is_quadratic_residue(std::int64_t a, std::uint64_t q);

// Shared small-number helpers (exact, 64-bit with 128-bit intermediates).
std::uint64_t mul_mod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
bool is_prime_u64(std::uint64_t n);

}  // namespace selfdual
