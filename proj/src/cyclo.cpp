#include "selfdual/cyclo.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "selfdual/errors.hpp"

namespace selfdual {

namespace {

using u64 = std::uint64_t;

constexpr u64 kMaxCosetModulus = 10'000'000;
constexpr u64 kMaxBinomialDegree = 65'536;

std::vector<u64> distinct_prime_divisors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Splitting extension K = F_q[y]/(M) with M monic irreducible of degree d;
// elements are Polys over the base field reduced mod M. Degree 1 uses M = y,
// which makes K the base field itself.
struct SplitField {
  FieldPtr base;
  Poly modulus;
  u64 d;

  SplitField(FieldPtr b, Poly m) : base(std::move(b)), modulus(std::move(m)), d(u64(modulus.degree())) {}

  Poly mul(const Poly& a, const Poly& b) const { return (a * b) % modulus; }

  Poly pow(const Poly& a, u64 e) const {
    Poly r = Poly::one(base) % modulus;
    Poly t = a % modulus;
    while (e) {
      if (e & 1) r = mul(r, t);
      t = mul(t, t);
      e >>= 1;
    }
    return r;
  }
};

// Lexicographically smallest monic irreducible of degree d over the base,
// coefficient code tuples compared constant term first. Memoized per
// (field, d); only reached under split_context's lock.
Poly find_split_modulus(const FieldPtr& base, u64 d) {
  if (d == 1) return Poly::x(base);
  static std::map<std::tuple<u64, unsigned, std::vector<u64>, u64>, std::vector<u64>> memo;
  const auto key =
      std::make_tuple(base->characteristic(), base->extension_degree(), base->modulus(), d);
  if (auto it = memo.find(key); it != memo.end()) return Poly(base, it->second);
  const u64 q = base->order();
  std::vector<u64> c(size_t(d), 0);
  c[0] = 1;  // candidates with zero constant term are divisible by y
  for (;;) {
    std::vector<u64> coeffs(c);
    coeffs.push_back(1);
    Poly cand(base, std::move(coeffs));
    if (is_irreducible(cand)) {
      memo.emplace(key, cand.codes());
      return cand;
    }
    int i = int(d) - 1;
    while (i >= 0) {
      if (++c[size_t(i)] < q) break;
      c[size_t(i)] = 0;
      --i;
    }
    if (i < 0) fail(Errc::invalid_input, "internal: no irreducible modulus of the requested degree");
  }
}

struct SplitContext {
  SplitField K;
  std::vector<Poly> alpha_pow;  // alpha^0 .. alpha^(m-1)
  u64 m;
};

// Canonical primitive m-th root of unity: for z = 1, 2, ... in encoding order
// over K, take the first z with ord(z^E) = m, E = (q^d - 1)/m. Every z != 0
// gives z^E of order dividing m, so the scan needs only a handful of steps.
const SplitContext& split_context(const FieldPtr& field, u64 m) {
  static std::mutex mu;
  static std::map<std::tuple<u64, unsigned, std::vector<u64>, u64>, std::unique_ptr<SplitContext>>
      memo;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(field->characteristic(), field->extension_degree(), field->modulus(), m);
  auto it = memo.find(key);
  if (it != memo.end()) return *it->second;

  const u64 q = field->order();
  const u64 d = mult_order(q, m);
  SplitField K(field, find_split_modulus(field, d));

  // digits of E = (q^d - 1)/m in base q: long division of (q-1, ..., q-1) by m
  std::vector<u64> digits(size_t(d), 0);
  u64 rem = 0;
  for (size_t i = size_t(d); i-- > 0;) {
    u64 cur = rem * q + (q - 1);
    digits[i] = cur / m;
    rem = cur % m;
  }
  if (rem != 0) fail(Errc::invalid_input, "internal: m does not divide q^d - 1");

  auto prime_divs = distinct_prime_divisors(m);
  Poly alpha = Poly::zero(field);
  bool found = false;
  for (u64 z_code = 1; z_code < 100'000 && !found; ++z_code) {
    // decode z_code into base-q digit coefficients
    std::vector<u64> zc;
    u64 t = z_code;
    while (t) {
      zc.push_back(t % q);
      t /= q;
    }
    if (zc.size() > size_t(d)) break;  // exhausted the field (tiny K)
    Poly z(field, std::move(zc));
    // z^E through the Frobenius ladder: z^E = prod (z^(q^i))^(digits[i])
    Poly w = Poly::one(field) % K.modulus;
    Poly frob = z % K.modulus;
    for (size_t i = 0; i < size_t(d); ++i) {
      if (digits[i]) w = K.mul(w, K.pow(frob, digits[i]));
      if (i + 1 < size_t(d)) frob = K.pow(frob, q);
    }
    if (K.pow(w, m) != Poly::one(field) % K.modulus)
      fail(Errc::invalid_input, "internal: z^E is not an m-th root of unity");
    bool full_order = true;
    for (u64 ell : prime_divs) {
      if (K.pow(w, m / ell) == Poly::one(field) % K.modulus) {
        full_order = false;
        break;
      }
    }
    if (full_order) {
      alpha = w;
      found = true;
    }
  }
  if (!found) fail(Errc::invalid_input, "internal: no primitive root of unity found");

  auto ctx = std::make_unique<SplitContext>(SplitContext{std::move(K), {}, m});
  ctx->alpha_pow.reserve(size_t(m));
  Poly acc = Poly::one(field) % ctx->K.modulus;
  for (u64 j = 0; j < m; ++j) {
    ctx->alpha_pow.push_back(acc);
    acc = ctx->K.mul(acc, alpha);
  }
  if (acc != Poly::one(field) % ctx->K.modulus)
    fail(Errc::invalid_input, "internal: root order drifted during power table build");
  auto [pos, inserted] = memo.emplace(std::move(key), std::move(ctx));
  (void)inserted;
  return *pos->second;
}

}  // namespace

u64 mult_order(u64 q, u64 m) {
  if (m < 1) fail(Errc::invalid_input, "order modulus must be >= 1");
  if (m == 1) return 1;
  u64 qr = q % m;
  if (gcd_u64(qr, m) != 1) fail(Errc::not_coprime, "mult_order requires gcd(q, m) = 1");
  u64 acc = qr, k = 1;
  while (acc != 1) {
    acc = mul_mod_u64(acc, qr, m);
    ++k;
    if (k > m) fail(Errc::invalid_input, "internal: multiplicative order did not terminate");
  }
  return k;
}

std::vector<Coset> cosets(u64 q, u64 m, CosetScope scope) {
  if (m < 1) fail(Errc::invalid_input, "coset modulus must be >= 1");
  if (m > kMaxCosetModulus) fail(Errc::range_exceeded, "coset modulus too large");
  u64 qr = q % m;
  if (gcd_u64(qr, m) != 1) fail(Errc::not_coprime, "cosets require gcd(q, m) = 1");
  if (scope == CosetScope::odd_residues && m % 2 != 0)
    fail(Errc::invalid_input, "odd-residue cosets require an even modulus");
  std::vector<char> seen(size_t(m), 0);
  std::vector<Coset> out;
  const u64 start = scope == CosetScope::odd_residues ? 1 : 0;
  const u64 step = scope == CosetScope::odd_residues ? 2 : 1;
  for (u64 r = start; r < m; r += step) {
    if (seen[size_t(r)]) continue;
    Coset c;
    c.modulus = m;
    u64 x = r;
    do {
      c.members.push_back(x);
      seen[size_t(x)] = 1;
      x = mul_mod_u64(x, qr, m);
    } while (x != r);
    std::sort(c.members.begin(), c.members.end());
    c.representative = c.members.front();
    out.push_back(std::move(c));
  }
  return out;
}

bool coset_is_self_paired(const Coset& c) {
  for (u64 x : c.members) {
    u64 neg = x == 0 ? 0 : c.modulus - x;
    if (!std::binary_search(c.members.begin(), c.members.end(), neg)) return false;
  }
  return true;
}

CosetPairing coset_pairing(const std::vector<Coset>& cs) {
  CosetPairing out;
  if (cs.empty()) return out;
  const u64 m = cs[0].modulus;
  std::map<u64, std::size_t> owner;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i].modulus != m) fail(Errc::invalid_input, "cosets with mixed moduli");
    for (u64 x : cs[i].members) owner[x] = i;
  }
  std::vector<char> assigned(cs.size(), 0);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (assigned[i]) continue;
    u64 rep = cs[i].representative;
    u64 neg = rep == 0 ? 0 : m - rep;
    auto it = owner.find(neg);
    if (it == owner.end())
      fail(Errc::invalid_input, "coset domain is not closed under negation");
    std::size_t j = it->second;
    if (j == i) {
      out.self_paired.push_back(i);
      assigned[i] = 1;
    } else {
      if (assigned[j]) fail(Errc::invalid_input, "internal: negation pairing is not involutive");
      out.mirror_pairs.emplace_back(std::min(i, j), std::max(i, j));
      assigned[i] = assigned[j] = 1;
    }
  }
  return out;
}

Poly minimal_poly(const Coset& c, const FieldPtr& field, u64 root_order) {
  if (c.modulus != root_order)
    fail(Errc::invalid_input, "coset modulus must equal the root order");
  if (c.members.empty()) fail(Errc::invalid_input, "empty coset");
  for (u64 x : c.members)
    if (x >= root_order) fail(Errc::invalid_input, "coset member out of range");
  if (root_order % field->characteristic() == 0)
    fail(Errc::wild_ramification, "root order divisible by the characteristic");

  const SplitContext& ctx = split_context(field, root_order);
  // product of (X - alpha^j) with coefficients in K
  std::vector<Poly> prod{Poly::one(field) % ctx.K.modulus};
  for (u64 j : c.members) {
    const Poly& beta = ctx.alpha_pow[size_t(j)];
    std::vector<Poly> next(prod.size() + 1, Poly::zero(field));
    for (std::size_t k = 0; k < prod.size(); ++k) {
      next[k + 1] = next[k + 1] + prod[k];
      next[k] = next[k] - ctx.K.mul(beta, prod[k]);
    }
    prod = std::move(next);
  }
  // coefficients must descend to the base field
  std::vector<u64> codes(prod.size(), 0);
  for (std::size_t k = 0; k < prod.size(); ++k) {
    if (prod[k].degree() > 0)
      fail(Errc::invalid_input, "internal: minimal polynomial coefficient outside the base field");
    codes[k] = prod[k].code_at(0);
  }
  return Poly(field, std::move(codes));
}

Factorization factor_unity(const FieldPtr& field, u64 m, int sign) {
  if (sign != 1 && sign != -1) fail(Errc::invalid_input, "sign must be +1 or -1");
  if (m < 1) fail(Errc::invalid_input, "binomial degree must be >= 1");
  if (m > kMaxBinomialDegree) fail(Errc::range_exceeded, "binomial degree too large");
  const u64 p = field->characteristic();
  if (m % p == 0) fail(Errc::wild_ramification, "degree divisible by the characteristic");

  // over F_2 the two targets coincide: x^m + 1 = x^m - 1
  const int eff = (p == 2) ? 1 : sign;
  const u64 q = field->order();
  std::vector<Coset> cs;
  u64 root_order;
  if (eff == 1) {
    root_order = m;
    cs = cosets(q, m, CosetScope::all_residues);
  } else {
    root_order = 2 * m;
    cs = cosets(q, 2 * m, CosetScope::odd_residues);
  }

  std::vector<u64> tc(size_t(m) + 1, 0);
  tc[0] = sign == 1 ? field->neg(1) : 1;
  tc[size_t(m)] = 1;
  Factorization out{field, Poly(field, std::move(tc)), {}, {}, {}};

  for (const Coset& c : cs) out.factors.push_back({minimal_poly(c, field, root_order), 1});

  Poly prod = Poly::one(field);
  for (const auto& f : out.factors) prod = prod * f.poly;
  if (prod != out.target)
    fail(Errc::invalid_input, "internal: factor product does not reconstruct the target");

  std::map<Poly, std::size_t> index;
  for (std::size_t i = 0; i < out.factors.size(); ++i) index.emplace(out.factors[i].poly, i);
  std::vector<char> done(out.factors.size(), 0);
  for (std::size_t i = 0; i < out.factors.size(); ++i) {
    if (done[i]) continue;
    Poly r = reciprocal(out.factors[i].poly);
    if (r == out.factors[i].poly) {
      out.self_paired.push_back(i);
      done[i] = 1;
    } else {
      auto it = index.find(r);
      if (it == index.end() || done[it->second])
        fail(Errc::invalid_input, "internal: factor set not closed under reciprocal");
      out.mirror_pairs.emplace_back(i, it->second);
      done[i] = done[it->second] = 1;
    }
  }
  return out;
}

Factorization factor_xn_minus_a(const FieldPtr& field, u64 n, int a) {
  if (a != 1 && a != -1) fail(Errc::invalid_input, "constant must be +1 or -1");
  if (n < 1) fail(Errc::invalid_input, "length must be >= 1");
  if (n > kMaxBinomialDegree) fail(Errc::range_exceeded, "length too large");
  const u64 p = field->characteristic();
  if (a == -1 && p == 2)
    fail(Errc::negacyclic_trivial_in_char_two, "x^n + 1 = x^n - 1 in characteristic 2");

  static std::mutex mu;
  static std::map<std::tuple<u64, unsigned, std::vector<u64>, u64, int>, Factorization> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(field->characteristic(), field->extension_degree(), field->modulus(),
                             n, a);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  u64 eta = n, pr = 1;
  while (eta % p == 0) {
    eta /= p;
    pr *= p;
  }
  Factorization core = factor_unity(field, eta, a);

  std::vector<u64> tc(size_t(n) + 1, 0);
  tc[0] = a == 1 ? field->neg(1) : 1;
  tc[size_t(n)] = 1;
  Factorization out{field, Poly(field, std::move(tc)), std::move(core.factors),
                    std::move(core.self_paired), std::move(core.mirror_pairs)};
  for (auto& f : out.factors) f.multiplicity = pr;

  Poly prod = Poly::one(field);
  for (const auto& f : out.factors) prod = prod * f.poly.pow(f.multiplicity);
  if (prod != out.target)
    fail(Errc::invalid_input, "internal: lifted product does not reconstruct the target");

  memo.emplace(std::move(key), out);
  return out;
}

}  // namespace selfdual
