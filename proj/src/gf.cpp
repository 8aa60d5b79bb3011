#include "selfdual/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace selfdual {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kMaxOrder = std::uint64_t(1) << 32;
constexpr u64 kLutMaxOrder = 1024;

// --- raw F_p[t] helpers used only for modulus search and generic extension ops ---

std::vector<u64> fp_trim(std::vector<u64> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

std::vector<u64> fp_mulmod(const std::vector<u64>& a, const std::vector<u64>& b,
                           const std::vector<u64>& mod, u64 p) {
  if (a.empty() || b.empty()) return {};
  std::vector<u64> prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + u128(a[i]) * b[j]) % p;
    }
  }
  // mod is monic; long division keeping only the remainder.
  size_t d = mod.size() - 1;
  for (size_t i = prod.size(); i-- > d;) {
    u64 c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (size_t j = 0; j < d; ++j) {
      u64 sub = u128(c) * mod[j] % p;
      prod[i - d + j] = (prod[i - d + j] + p - sub) % p;
    }
  }
  prod.resize(d);
  return fp_trim(prod);
}

std::vector<u64> fp_powmod(std::vector<u64> base, u64 e, const std::vector<u64>& mod, u64 p) {
  std::vector<u64> r{1};
  while (e) {
    if (e & 1) r = fp_mulmod(r, base, mod, p);
    base = fp_mulmod(base, base, mod, p);
    e >>= 1;
  }
  return r;
}

std::vector<u64> fp_gcd(std::vector<u64> a, std::vector<u64> b, u64 p) {
  a = fp_trim(std::move(a));
  b = fp_trim(std::move(b));
  while (!b.empty()) {
    // a mod b
    u64 lead_inv = pow_mod_u64(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      u64 c = mul_mod_u64(a.back(), lead_inv, p);
      size_t shift = a.size() - b.size();
      for (size_t j = 0; j < b.size(); ++j) {
        u64 sub = mul_mod_u64(c, b[j], p);
        a[shift + j] = (a[shift + j] + p - sub) % p;
      }
      a = fp_trim(std::move(a));
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

// Rabin test: f irreducible over F_p of degree d iff t^(p^d) == t (mod f) and
// gcd(t^(p^(d/l)) - t, f) = 1 for every prime l | d.
bool fp_irreducible(const std::vector<u64>& f, u64 p) {
  size_t d = f.size() - 1;
  if (d == 0) return false;
  if (d == 1) return true;
  std::vector<unsigned> prime_divs;
  {
    size_t m = d;
    for (unsigned q = 2; u64(q) * q <= m; ++q) {
      if (m % q == 0) {
        prime_divs.push_back(q);
        while (m % q == 0) m /= q;
      }
    }
    if (m > 1) prime_divs.push_back(unsigned(m));
  }
  std::vector<std::vector<u64>> frob(d + 1);
  frob[0] = {0, 1};  // t
  for (size_t k = 1; k <= d; ++k) frob[k] = fp_powmod(frob[k - 1], p, f, p);
  if (fp_trim(frob[d]) != std::vector<u64>{0, 1}) return false;
  for (unsigned l : prime_divs) {
    std::vector<u64> diff = frob[d / l];
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    diff = fp_trim(std::move(diff));
    std::vector<u64> g = fp_gcd(diff, f, p);
    if (!(g.size() == 1)) return false;
  }
  return true;
}

u64 checked_pow_order(u64 p, unsigned s) {
  u128 acc = 1;
  for (unsigned i = 0; i < s; ++i) {
    acc *= p;
    if (acc > kMaxOrder) fail(Errc::invalid_degree, "field order exceeds 2^32");
  }
  return u64(acc);
}

}  // namespace

u64 mul_mod_u64(u64 a, u64 b, u64 m) { return u64(u128(a) * b % m); }

u64 pow_mod_u64(u64 a, u64 e, u64 m) {
  if (m == 1) return 0;
  u64 r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod_u64(r, a, m);
    a = mul_mod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d : {2ull, 3ull, 5ull, 7ull}) {
    if (n == d) return true;
    if (n % d == 0) return false;
  }
  for (u64 d = 11; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Field::Field(u64 p, unsigned s, std::vector<u64> modulus)
    : p_(p), s_(s), order_(checked_pow_order(p, s)), modulus_(std::move(modulus)) {
  if (s_ >= 2 && order_ <= kLutMaxOrder) {
    lut_ = true;
    mul_tab_.assign(size_t(order_) * order_, 0);
    inv_tab_.assign(size_t(order_), 0);
    for (u64 a = 0; a < order_; ++a) {
      for (u64 b = a; b < order_; ++b) {
        u64 r = ext_mul_generic(a, b);
        mul_tab_[size_t(a) * order_ + b] = std::uint32_t(r);
        mul_tab_[size_t(b) * order_ + a] = std::uint32_t(r);
      }
    }
    for (u64 a = 1; a < order_; ++a) inv_tab_[size_t(a)] = std::uint32_t(ext_inv_generic(a));
  }
}

void Field::check_code(u64 a) const {
  if (a >= order_) fail(Errc::invalid_input, "element code out of range");
}

u64 Field::add(u64 a, u64 b) const {
  check_code(a);
  check_code(b);
  if (s_ == 1) {
    u64 r = a + b;
    return r >= p_ ? r - p_ : r;
  }
  // digitwise mod p, base-p encodings
  u64 r = 0, mult = 1;
  for (unsigned i = 0; i < s_; ++i) {
    u64 da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    u64 dr = da + db;
    if (dr >= p_) dr -= p_;
    r += dr * mult;
    mult *= p_;
  }
  return r;
}

u64 Field::neg(u64 a) const {
  check_code(a);
  if (s_ == 1) return a == 0 ? 0 : p_ - a;
  u64 r = 0, mult = 1;
  for (unsigned i = 0; i < s_; ++i) {
    u64 da = a % p_;
    a /= p_;
    r += (da == 0 ? 0 : p_ - da) * mult;
    mult *= p_;
  }
  return r;
}

u64 Field::sub(u64 a, u64 b) const { return add(a, neg(b)); }

u64 Field::ext_mul_generic(u64 a, u64 b) const {
  std::vector<u64> da = decode(a), db = decode(b);
  std::vector<u64> r = fp_mulmod(fp_trim(std::move(da)), fp_trim(std::move(db)), modulus_, p_);
  r.resize(s_, 0);
  return encode(r);
}

u64 Field::ext_inv_generic(u64 a) const {
  // extended Euclid in F_p[t] against the modulus
  std::vector<u64> r0 = modulus_, r1 = fp_trim(decode(a));
  std::vector<u64> t0{}, t1{1};
  while (!r1.empty()) {
    // divmod r0 by r1
    std::vector<u64> q;
    std::vector<u64> rem = r0;
    u64 lead_inv = pow_mod_u64(r1.back(), p_ - 2, p_);
    if (rem.size() >= r1.size()) q.assign(rem.size() - r1.size() + 1, 0);
    while (rem.size() >= r1.size() && !rem.empty()) {
      u64 c = mul_mod_u64(rem.back(), lead_inv, p_);
      size_t shift = rem.size() - r1.size();
      q[shift] = c;
      for (size_t j = 0; j < r1.size(); ++j) {
        u64 sub = mul_mod_u64(c, r1[j], p_);
        rem[shift + j] = (rem[shift + j] + p_ - sub) % p_;
      }
      rem = fp_trim(std::move(rem));
    }
    // t2 = t0 - q*t1
    std::vector<u64> qt1;
    if (!q.empty() && !t1.empty()) {
      qt1.assign(q.size() + t1.size() - 1, 0);
      for (size_t i = 0; i < q.size(); ++i) {
        if (q[i] == 0) continue;
        for (size_t j = 0; j < t1.size(); ++j)
          qt1[i + j] = (qt1[i + j] + u128(q[i]) * t1[j]) % p_;
      }
    }
    std::vector<u64> t2(std::max(t0.size(), qt1.size()), 0);
    for (size_t i = 0; i < t2.size(); ++i) {
      u64 x = i < t0.size() ? t0[i] : 0;
      u64 y = i < qt1.size() ? qt1[i] : 0;
      t2[i] = (x + p_ - y) % p_;
    }
    t0 = std::move(t1);
    t1 = fp_trim(std::move(t2));
    r0 = fp_trim(std::move(r1));
    r1 = fp_trim(std::move(rem));
  }
  // r0 = gcd (degree 0 since modulus irreducible and a != 0)
  u64 scale = pow_mod_u64(r0[0], p_ - 2, p_);
  std::vector<u64> res(s_, 0);
  for (size_t i = 0; i < t0.size() && i < res.size(); ++i) res[i] = mul_mod_u64(t0[i], scale, p_);
  return encode(res);
}

u64 Field::mul(u64 a, u64 b) const {
  check_code(a);
  check_code(b);
  if (s_ == 1) return mul_mod_u64(a, b, p_);
  if (lut_) return mul_tab_[size_t(a) * order_ + b];
  return ext_mul_generic(a, b);
}

u64 Field::inv(u64 a) const {
  check_code(a);
  if (a == 0) fail(Errc::division_by_zero, "inverse of zero");
  if (s_ == 1) return pow_mod_u64(a, p_ - 2, p_);
  if (lut_) return inv_tab_[size_t(a)];
  return ext_inv_generic(a);
}

u64 Field::pow(u64 a, std::int64_t e) const {
  check_code(a);
  if (e < 0) {
    if (a == 0) fail(Errc::division_by_zero, "zero to a negative power");
    return pow(inv(a), -e);
  }
  u64 r = 1, base = a;
  u64 ue = u64(e);
  while (ue) {
    if (ue & 1) r = mul(r, base);
    base = mul(base, base);
    ue >>= 1;
  }
  return r;
}

u64 Field::encode(const std::vector<u64>& coeffs) const {
  if (coeffs.size() > s_) fail(Errc::invalid_input, "too many coefficients for field degree");
  u64 r = 0, mult = 1;
  for (unsigned i = 0; i < s_; ++i) {
    u64 c = i < coeffs.size() ? coeffs[i] : 0;
    if (c >= p_) fail(Errc::invalid_input, "coefficient not reduced mod p");
    r += c * mult;
    mult *= p_;
  }
  return r;
}

std::vector<u64> Field::decode(u64 code) const {
  check_code(code);
  std::vector<u64> c(s_);
  for (unsigned i = 0; i < s_; ++i) {
    c[i] = code % p_;
    code /= p_;
  }
  return c;
}

bool Field::same_field(const Field& other) const {
  return p_ == other.p_ && s_ == other.s_ && modulus_ == other.modulus_;
}

FieldElement Field::element(u64 code) const {
  check_code(code);
  return FieldElement(shared_from_this(), code);
}

FieldElement Field::from_int(std::int64_t v) const {
  std::int64_t m = std::int64_t(p_);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return FieldElement(shared_from_this(), u64(r));
}

FieldElement Field::zero() const { return FieldElement(shared_from_this(), 0); }
FieldElement Field::one() const { return FieldElement(shared_from_this(), 1); }

FieldPtr make_field(u64 p, unsigned s) {
  static std::mutex mu;
  static std::map<std::pair<u64, unsigned>, FieldPtr> cache;

  if (!is_prime_u64(p)) fail(Errc::invalid_characteristic, "p must be prime");
  if (s < 1) fail(Errc::invalid_degree, "extension degree must be >= 1");
  checked_pow_order(p, s);

  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, s);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::vector<u64> modulus;
  if (s == 1) {
    modulus = {0, 1};  // x
  } else {
    // Lexicographic scan over (c_0, ..., c_{s-1}), c_0 most significant,
    // stopping at the first irreducible monic candidate.
    std::vector<u64> c(s, 0);
    bool found = false;
    while (!found) {
      if (c[0] != 0) {  // zero constant term is divisible by t
        std::vector<u64> f(c);
        f.push_back(1);
        if (fp_irreducible(f, p)) {
          modulus = std::move(f);
          found = true;
          break;
        }
      }
      // odometer with the last coordinate fastest
      int i = int(s) - 1;
      while (i >= 0) {
        if (++c[size_t(i)] < p) break;
        c[size_t(i)] = 0;
        --i;
      }
      if (i < 0) fail(Errc::invalid_degree, "no irreducible modulus found");
    }
  }

  FieldPtr f(new Field(p, s, std::move(modulus)));
  cache.emplace(key, f);
  return f;
}

FieldPtr make_field_with_modulus(u64 p, std::vector<u64> modulus) {
  if (!is_prime_u64(p)) fail(Errc::invalid_characteristic, "p must be prime");
  if (modulus.size() < 2) fail(Errc::invalid_degree, "modulus must have degree >= 1");
  for (u64 c : modulus)
    if (c >= p) fail(Errc::invalid_input, "modulus coefficient not reduced mod p");
  if (modulus.back() != 1) fail(Errc::invalid_input, "modulus must be monic");
  unsigned s = unsigned(modulus.size() - 1);
  if (s == 1) {
    if (modulus != std::vector<u64>{0, 1})
      fail(Errc::invalid_input, "degree-1 modulus must be x");
  } else if (!fp_irreducible(modulus, p)) {
    fail(Errc::invalid_input, "modulus is reducible");
  }
  return FieldPtr(new Field(p, s, std::move(modulus)));
}

FieldElement::FieldElement(FieldPtr field, u64 code) : field_(std::move(field)), code_(code) {
  if (!field_) fail(Errc::invalid_input, "element without a field");
  if (code_ >= field_->order()) fail(Errc::invalid_input, "element code out of range");
}

namespace {
const Field& common_field(const FieldElement& a, const FieldElement& b) {
  if (a.field().get() != b.field().get() && !a.field()->same_field(*b.field()))
    fail(Errc::field_mismatch, "operands belong to different fields");
  return *a.field();
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  const Field& f = common_field(*this, o);
  return FieldElement(field_, f.add(code_, o.code_));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  const Field& f = common_field(*this, o);
  return FieldElement(field_, f.sub(code_, o.code_));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  const Field& f = common_field(*this, o);
  return FieldElement(field_, f.mul(code_, o.code_));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  const Field& f = common_field(*this, o);
  return FieldElement(field_, f.mul(code_, f.inv(o.code_)));
}

FieldElement FieldElement::operator-() const { return FieldElement(field_, field_->neg(code_)); }

FieldElement FieldElement::inv() const { return FieldElement(field_, field_->inv(code_)); }

FieldElement FieldElement::pow(std::int64_t e) const {
  return FieldElement(field_, field_->pow(code_, e));
}

bool FieldElement::operator==(const FieldElement& o) const {
  common_field(*this, o);
  return code_ == o.code_;
}

std::optional<FieldElement> solve_x2_plus_1(const FieldPtr& field) {
  const u64 p = field->characteristic();
  if (p == 2) fail(Errc::characteristic_two_unsupported, "x^2+1 = (x+1)^2 in characteristic 2");
  const u64 q = field->order();
  if (q % 4 != 1) return std::nullopt;

  if (field->extension_degree() == 1) {
    for (u64 a = 2; a < p; ++a) {
      if (mul_mod_u64(a, a, p) == p - 1) return field->element(a);  // ascending scan: minimal
    }
    fail(Errc::invalid_input, "internal: q = 1 mod 4 but no root found");
  }

  // Deterministic splitting of x^2 + 1 over the extension:
  // h = (x + t)^((q-1)/2) mod (x^2 + 1); gcd(h - 1, x^2 + 1) is linear for
  // roughly half of all t. t is scanned in encoding order.
  const u64 half = (q - 1) / 2;
  for (u64 t = 0; t < q; ++t) {
    // poly arithmetic on pairs (c0, c1) mod x^2 + 1: x^2 == -1
    auto mul2 = [&](std::pair<u64, u64> a, std::pair<u64, u64> b) {
      u64 c0 = field->sub(field->mul(a.first, b.first), field->mul(a.second, b.second));
      u64 c1 = field->add(field->mul(a.first, b.second), field->mul(a.second, b.first));
      return std::make_pair(c0, c1);
    };
    std::pair<u64, u64> acc{1, 0}, base{t, 1};
    u64 e = half;
    while (e) {
      if (e & 1) acc = mul2(acc, base);
      base = mul2(base, base);
      e >>= 1;
    }
    // gcd(acc - 1, x^2+1): acc - 1 = (c0 - 1) + c1 x
    u64 c0 = field->sub(acc.first, 1), c1 = acc.second;
    if (c1 != 0) {
      // linear: root of c0 + c1 x is -c0/c1; it must satisfy r^2 = -1
      u64 r = field->neg(field->mul(c0, field->inv(c1)));
      if (field->mul(r, r) == field->neg(1)) {
        u64 other = field->neg(r);
        return field->element(std::min(r, other));
      }
    }
  }
  fail(Errc::invalid_input, "internal: q = 1 mod 4 but splitting failed");
}

bool is_quadratic_residue(std::int64_t a, u64 q) {
  if (q < 3 || q % 2 == 0) fail(Errc::invalid_input, "q must be an odd prime");
  if (!is_prime_u64(q)) fail(Errc::invalid_input, "q must be an odd prime");
  std::int64_t m = std::int64_t(q);
  std::int64_t r = a % m;
  if (r < 0) r += m;
  if (r == 0) fail(Errc::invalid_input, "a must be coprime to q");
  return pow_mod_u64(u64(r), (q - 1) / 2, q) == 1;
}

}  // namespace selfdual
