#include "selfdual/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "selfdual/errors.hpp"

namespace selfdual {

namespace {

void require_same(const Poly& a, const Poly& b) {
  if (!a.field()->same_field(*b.field()))
    fail(Errc::field_mismatch, "polynomials over different fields");
}

}  // namespace

Poly::Poly(FieldPtr field) : field_(std::move(field)) {
  if (!field_) fail(Errc::invalid_input, "polynomial requires a field");
}

Poly::Poly(FieldPtr field, std::vector<std::uint64_t> codes)
    : field_(std::move(field)), codes_(std::move(codes)) {
  if (!field_) fail(Errc::invalid_input, "polynomial requires a field");
  for (auto c : codes_) (void)field_->element(c);  // range check
  normalize();
}

Poly Poly::from_ints(const FieldPtr& field, const std::vector<std::int64_t>& coeffs) {
  std::vector<std::uint64_t> codes;
  codes.reserve(coeffs.size());
  for (auto v : coeffs) codes.push_back(field->from_int(v).code());
  return Poly(field, std::move(codes));
}

void Poly::normalize() {
  while (!codes_.empty() && codes_.back() == 0) codes_.pop_back();
}

FieldElement Poly::leading() const {
  if (codes_.empty()) fail(Errc::invalid_input, "zero polynomial has no leading coefficient");
  return field_->element(codes_.back());
}

Poly Poly::operator+(const Poly& o) const {
  require_same(*this, o);
  std::vector<std::uint64_t> out(std::max(codes_.size(), o.codes_.size()), 0);
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = field_->add(code_at(int(i)), o.code_at(int(i)));
  return Poly(field_, std::move(out));
}

Poly Poly::operator-(const Poly& o) const {
  require_same(*this, o);
  std::vector<std::uint64_t> out(std::max(codes_.size(), o.codes_.size()), 0);
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = field_->sub(code_at(int(i)), o.code_at(int(i)));
  return Poly(field_, std::move(out));
}

Poly Poly::operator*(const Poly& o) const {
  require_same(*this, o);
  if (codes_.empty() || o.codes_.empty()) return Poly(field_);
  std::vector<std::uint64_t> out(codes_.size() + o.codes_.size() - 1, 0);
  for (size_t i = 0; i < codes_.size(); ++i) {
    if (codes_[i] == 0) continue;
    for (size_t j = 0; j < o.codes_.size(); ++j) {
      if (o.codes_[j] == 0) continue;
      out[i + j] = field_->add(out[i + j], field_->mul(codes_[i], o.codes_[j]));
    }
  }
  return Poly(field_, std::move(out));
}

Poly Poly::operator*(const FieldElement& c) const {
  if (!field_->same_field(*c.field()))
    fail(Errc::field_mismatch, "scalar from a different field");
  std::vector<std::uint64_t> out(codes_.size());
  for (size_t i = 0; i < codes_.size(); ++i) out[i] = field_->mul(codes_[i], c.code());
  return Poly(field_, std::move(out));
}

Poly Poly::operator-() const {
  std::vector<std::uint64_t> out(codes_.size());
  for (size_t i = 0; i < codes_.size(); ++i) out[i] = field_->neg(codes_[i]);
  return Poly(field_, std::move(out));
}

bool Poly::operator==(const Poly& o) const {
  return field_->same_field(*o.field_) && codes_ == o.codes_;
}

bool Poly::operator<(const Poly& o) const {
  if (codes_.size() != o.codes_.size()) return codes_.size() < o.codes_.size();
  for (size_t i = codes_.size(); i-- > 0;)
    if (codes_[i] != o.codes_[i]) return codes_[i] < o.codes_[i];
  return false;
}

Poly Poly::monic() const {
  if (codes_.empty()) fail(Errc::division_by_zero, "cannot normalize the zero polynomial");
  if (codes_.back() == 1) return *this;
  std::uint64_t s = field_->inv(codes_.back());
  std::vector<std::uint64_t> out(codes_.size());
  for (size_t i = 0; i < codes_.size(); ++i) out[i] = field_->mul(codes_[i], s);
  return Poly(field_, std::move(out));
}

Poly Poly::pow(std::uint64_t e) const {
  Poly result = Poly::one(field_);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

FieldElement Poly::eval(const FieldElement& at) const {
  if (!field_->same_field(*at.field()))
    fail(Errc::field_mismatch, "evaluation point from a different field");
  std::uint64_t acc = 0;
  for (size_t i = codes_.size(); i-- > 0;)
    acc = field_->add(field_->mul(acc, at.code()), codes_[i]);
  return field_->element(acc);
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
  require_same(f, g);
  if (g.is_zero()) fail(Errc::division_by_zero, "polynomial division by zero");
  const auto& field = f.field();
  std::vector<std::uint64_t> rem(f.codes());
  int dg = g.degree();
  if (f.degree() < dg) return {Poly(field), f};
  std::vector<std::uint64_t> quot(size_t(f.degree() - dg) + 1, 0);
  std::uint64_t inv_lead = field->inv(g.codes().back());
  for (int i = f.degree(); i >= dg; --i) {
    std::uint64_t c = rem[size_t(i)];
    if (c == 0) continue;
    std::uint64_t q = field->mul(c, inv_lead);
    quot[size_t(i - dg)] = q;
    for (int j = 0; j <= dg; ++j)
      rem[size_t(i - dg + j)] =
          field->sub(rem[size_t(i - dg + j)], field->mul(q, g.codes()[size_t(j)]));
  }
  return {Poly(field, std::move(quot)), Poly(field, std::move(rem))};
}

Poly operator/(const Poly& f, const Poly& g) { return divmod(f, g).first; }
Poly operator%(const Poly& f, const Poly& g) { return divmod(f, g).second; }

bool divides(const Poly& g, const Poly& f) {
  if (g.is_zero()) return f.is_zero();
  return (f % g).is_zero();
}

Poly gcd(const Poly& a, const Poly& b) {
  require_same(a, b);
  Poly r0 = a, r1 = b;
  while (!r1.is_zero()) {
    Poly r2 = r0 % r1;
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  return r0.is_zero() ? r0 : r0.monic();
}

Poly reciprocal(const Poly& f) {
  if (f.is_zero()) fail(Errc::zero_constant_term, "zero polynomial has no reciprocal");
  if (f.code_at(0) == 0)
    fail(Errc::zero_constant_term, "reciprocal requires a nonzero constant term");
  std::vector<std::uint64_t> rev(f.codes().rbegin(), f.codes().rend());
  return Poly(f.field(), std::move(rev)).monic();
}

bool is_self_reciprocal(const Poly& f) { return reciprocal(f) == f.monic(); }

Poly scale_substitute(const Poly& f, const FieldElement& c) {
  if (!f.field()->same_field(*c.field()))
    fail(Errc::field_mismatch, "scale factor from a different field");
  if (c.code() == 0) fail(Errc::invalid_scale, "scale factor must be nonzero");
  const auto& field = f.field();
  std::vector<std::uint64_t> out(f.codes().size());
  std::uint64_t power = 1;
  for (size_t i = 0; i < out.size(); ++i) {
    out[i] = field->mul(f.codes()[i], power);
    power = field->mul(power, c.code());
  }
  return Poly(field, std::move(out));
}

Poly negate_variable(const Poly& f) {
  if (f.is_zero()) fail(Errc::invalid_input, "cannot substitute into the zero polynomial");
  return scale_substitute(f, -f.field()->one()).monic();
}

Poly pow_mod(const Poly& h, std::uint64_t e, const Poly& f) {
  if (f.degree() < 1) fail(Errc::invalid_degree, "modulus must have degree at least 1");
  Poly result = Poly::one(h.field()) % f;
  Poly base = h % f;
  while (e > 0) {
    if (e & 1) result = (result * base) % f;
    base = (base * base) % f;
    e >>= 1;
  }
  return result;
}

bool is_irreducible(const Poly& f) {
  int d = f.degree();
  if (d < 1) fail(Errc::invalid_degree, "irreducibility is defined for degree >= 1");
  if (d == 1) return true;
  const auto& field = f.field();
  Poly fm = f.monic();
  std::uint64_t q = field->order();
  // f is reducible iff it has an irreducible factor of degree k <= d/2, which
  // is exactly a nontrivial common divisor with x^(q^k) - x; stopping at the
  // first such k makes rejection cheap, which the modulus search relies on.
  Poly x = Poly::x(field) % fm;
  Poly xq = x;  // x^(q^k) mod f, by repeated q-th powers
  for (int k = 1; k <= d / 2; ++k) {
    xq = pow_mod(xq, q, fm);
    if (gcd(xq - x, fm).degree() != 0) return false;
  }
  return true;
}

namespace {

std::string coeff_to_str(const FieldPtr& field, std::uint64_t code) {
  if (field->extension_degree() == 1) return std::to_string(code);
  std::uint64_t p = field->characteristic();
  std::string out = "[";
  for (std::uint64_t i = 0; i < field->extension_degree(); ++i) {
    if (i) out += ',';
    out += std::to_string(code % p);
    code /= p;
  }
  out += ']';
  return out;
}

struct Cursor {
  std::string_view s;
  size_t pos = 0;
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  char get() {
    skip_ws();
    if (pos >= s.size()) fail(Errc::invalid_input, "unexpected end of polynomial text");
    return s[pos++];
  }
  // Unsigned decimal integer reduced modulo m (m = 0 means exact, capped).
  std::uint64_t integer(std::uint64_t m) {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail(Errc::invalid_input, "expected an integer in polynomial text");
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + std::uint64_t(s[pos] - '0');
      if (m)
        v %= m;
      else if (v > 10'000'000)
        fail(Errc::range_exceeded, "exponent too large in polynomial text");
      ++pos;
    }
    return v;
  }
};

}  // namespace

std::string Poly::str() const {
  if (codes_.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < codes_.size(); ++i) {
    if (i) out += " + ";
    out += coeff_to_str(field_, codes_[i]);
    if (i == 1)
      out += "*x";
    else if (i > 1)
      out += "*x^" + std::to_string(i);
  }
  return out;
}

Poly Poly::parse(const FieldPtr& field, std::string_view text) {
  Cursor cur{text};
  std::uint64_t p = field->characteristic();
  std::map<std::uint64_t, std::uint64_t> acc;  // exponent -> accumulated code
  if (cur.done()) fail(Errc::invalid_input, "empty polynomial text");
  bool negative = false;
  if (cur.peek() == '+' || cur.peek() == '-') negative = (cur.get() == '-');
  for (;;) {
    std::uint64_t code;
    bool have_coeff = false;
    char c = cur.peek();
    if (c == '[') {
      cur.get();
      std::uint64_t value = 0, scale = 1, count = 0;
      for (;;) {
        bool entry_neg = false;
        if (cur.peek() == '-') {
          cur.get();
          entry_neg = true;
        }
        std::uint64_t digit = cur.integer(p);
        if (entry_neg && digit) digit = p - digit;
        if (++count > field->extension_degree())
          fail(Errc::invalid_input, "too many entries in coefficient bracket");
        value += digit * scale;
        scale *= p;
        char sep = cur.get();
        if (sep == ']') break;
        if (sep != ',') fail(Errc::invalid_input, "expected ',' or ']' in coefficient bracket");
      }
      code = value;
      have_coeff = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      code = cur.integer(p);
      have_coeff = true;
    } else {
      code = 1;
    }
    std::uint64_t exp = 0;
    if (have_coeff && cur.peek() == '*') {
      cur.get();
      if (cur.peek() != 'x') fail(Errc::invalid_input, "expected 'x' after '*'");
    }
    if (cur.peek() == 'x') {
      cur.get();
      exp = 1;
      if (cur.peek() == '^') {
        cur.get();
        exp = cur.integer(0);
      }
    } else if (!have_coeff) {
      fail(Errc::invalid_input, "expected a term in polynomial text");
    }
    if (negative) code = field->neg(code);
    auto [it, inserted] = acc.emplace(exp, code);
    if (!inserted) it->second = field->add(it->second, code);
    if (cur.done()) break;
    char sep = cur.get();
    if (sep == '+')
      negative = false;
    else if (sep == '-')
      negative = true;
    else
      fail(Errc::invalid_input, "expected '+' or '-' between terms");
    if (cur.done()) fail(Errc::invalid_input, "dangling sign in polynomial text");
  }
  std::vector<std::uint64_t> codes(acc.empty() ? 0 : size_t(acc.rbegin()->first) + 1, 0);
  for (auto& [e, v] : acc) codes[size_t(e)] = v;
  return Poly(field, std::move(codes));
}

}  // namespace selfdual
