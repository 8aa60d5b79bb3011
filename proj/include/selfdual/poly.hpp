#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "selfdual/gf.hpp"

namespace selfdual {

// Dense univariate polynomial over a fixed field. Coefficients are stored as
// element encodings, index = degree, no trailing zeros. degree() of the zero
// polynomial is -1.
class Poly {
 public:
  explicit Poly(FieldPtr field);  // zero
  Poly(FieldPtr field, std::vector<std::uint64_t> codes);

  static Poly zero(const FieldPtr& field) { return Poly(field); }
  static Poly one(const FieldPtr& field) { return Poly(field, {1}); }
  static Poly x(const FieldPtr& field) { return Poly(field, {0, 1}); }
  // Convenience: integer coefficients reduced into the prime subfield.
  static Poly from_ints(const FieldPtr& field, const std::vector<std::int64_t>& coeffs);

  const FieldPtr& field() const { return field_; }
  int degree() const { return int(codes_.size()) - 1; }
  bool is_zero() const { return codes_.empty(); }
  bool is_one() const { return codes_.size() == 1 && codes_[0] == 1; }
  bool is_monic() const { return !codes_.empty() && codes_.back() == 1; }

  std::uint64_t code_at(int i) const {
    return (i >= 0 && i < int(codes_.size())) ? codes_[size_t(i)] : 0;
  }
  FieldElement coeff(int i) const { return field_->element(code_at(i)); }
  FieldElement leading() const;
  FieldElement constant() const { return field_->element(code_at(0)); }
  const std::vector<std::uint64_t>& codes() const { return codes_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const FieldElement& c) const;
  Poly operator-() const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }
  // Ordering for canonical containers: by degree, then coefficient codes
  // from the highest degree down.
  bool operator<(const Poly& o) const;

  Poly monic() const;
  Poly pow(std::uint64_t e) const;
  FieldElement eval(const FieldElement& at) const;

  std::string str() const;
  static Poly parse(const FieldPtr& field, std::string_view text);

 private:
  void normalize();
  FieldPtr field_;
  std::vector<std::uint64_t> codes_;
};

// Quotient and remainder; g must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);
Poly operator/(const Poly& f, const Poly& g);
Poly operator%(const Poly& f, const Poly& g);
bool divides(const Poly& g, const Poly& f);  // g | f

// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

// Monic normalization of x^deg(f) * f(1/x); requires f(0) != 0 and f monic.
Poly reciprocal(const Poly& f);
bool is_self_reciprocal(const Poly& f);

// f(c x) with c != 0; not normalized.
Poly scale_substitute(const Poly& f, const FieldElement& c);

// Monic scalar multiple of f(-x); f must be nonzero.
Poly negate_variable(const Poly& f);

// Deterministic Rabin criterion over the coefficient field; deg(f) >= 1.
bool is_irreducible(const Poly& f);

// h^e mod f (f nonzero, deg f >= 1).
Poly pow_mod(const Poly& h, std::uint64_t e, const Poly& f);

}  // namespace selfdual
