#include "selfdual/codes.hpp"

#include <algorithm>
#include <map>

#include "selfdual/errors.hpp"

namespace selfdual {

namespace {

using u64 = std::uint64_t;

constexpr u64 kMaxLength = 65'536;
constexpr u64 kMaxEnumeration = u64(1) << 20;
constexpr u64 kCountCrossCheckLimit = 4'096;
// generators materialized at once are capped at ~2^26 coefficients
constexpr u64 kMaxEnumerationCoeffs = u64(1) << 26;

bool enumeration_fits(u64 total, u64 n) {
  return total <= kMaxEnumeration && total <= kMaxEnumerationCoeffs / (n + 1);
}

Poly binomial_target(const FieldPtr& field, u64 n, int a) {
  std::vector<u64> tc(size_t(n) + 1, 0);
  tc[0] = a == 1 ? field->neg(1) : 1;
  tc[size_t(n)] = 1;
  return Poly(field, std::move(tc));
}

void validate_params(const FieldPtr& field, u64 n, int a) {
  if (a != 1 && a != -1) fail(Errc::invalid_input, "shift constant must be +1 or -1");
  if (n < 1) fail(Errc::invalid_input, "length must be >= 1");
  if (n > kMaxLength) fail(Errc::range_exceeded, "length too large");
  if (a == -1 && field->characteristic() == 2)
    fail(Errc::negacyclic_trivial_in_char_two,
         "negacyclic equals cyclic in characteristic 2; use a = +1");
}

// (base)^e with overflow guard.
u64 checked_pow_u64(u64 base, u64 e) {
  u64 r = 1;
  for (u64 i = 0; i < e; ++i) {
    if (r > u64(-1) / base) fail(Errc::range_exceeded, "count overflows 64 bits");
    r *= base;
  }
  return r;
}

}  // namespace

ConstacyclicCode make_code(const FieldPtr& field, u64 n, int a, Poly generator) {
  validate_params(field, n, a);
  if (!field->same_field(*generator.field()))
    fail(Errc::field_mismatch, "generator over a different field");
  if (generator.is_zero()) fail(Errc::invalid_input, "generator must be nonzero");
  Poly g = generator.monic();
  Poly target = binomial_target(field, n, a);
  if (!divides(g, target)) fail(Errc::not_a_divisor, "generator does not divide x^n - a");
  return ConstacyclicCode{field, n, a, g, n - u64(g.degree())};
}

Matrix generator_matrix(const ConstacyclicCode& code) {
  if (code.dimension == 0) fail(Errc::empty_code, "zero code has no generator matrix");
  Matrix out(code.field, size_t(code.dimension), size_t(code.n));
  for (std::size_t i = 0; i < out.rows; ++i)
    for (int j = 0; j <= code.generator.degree(); ++j)
      out.set(i, i + size_t(j), code.generator.code_at(j));
  return out;
}

ConstacyclicCode dual(const ConstacyclicCode& code) {
  Poly b = binomial_target(code.field, code.n, code.a) / code.generator;
  return make_code(code.field, code.n, code.a, reciprocal(b));
}

bool is_self_dual(const ConstacyclicCode& code) {
  if (code.n % 2 != 0) return false;
  if (2 * code.dimension != code.n) return false;
  return dual(code).generator == code.generator;
}

Poly divisor_from_exponents(const Factorization& fx, const std::vector<u64>& exps) {
  if (exps.size() != fx.factors.size())
    fail(Errc::shape_mismatch, "one exponent per factor required");
  Poly g = Poly::one(fx.field);
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] > fx.factors[i].multiplicity)
      fail(Errc::invalid_input, "exponent exceeds factor multiplicity");
    if (exps[i]) g = g * fx.factors[i].poly.pow(exps[i]);
  }
  return g;
}

std::vector<Poly> enumerate_selfdual_negacyclic(const FieldPtr& field, u64 n) {
  validate_params(field, n, -1);
  Factorization fx = factor_xn_minus_a(field, n, -1);
  if (!fx.self_paired.empty()) return {};
  const u64 pr = fx.factors.empty() ? 1 : fx.factors[0].multiplicity;
  const std::size_t t = fx.mirror_pairs.size();

  u64 total = 1;
  for (std::size_t j = 0; j < t; ++j) {
    total *= pr + 1;  // total stays <= 2^20 * (pr+1), far from u64 overflow
    if (!enumeration_fits(total, n)) fail(Errc::range_exceeded, "enumeration too large");
  }

  // precompute factor powers h^e for e = 0..pr
  std::vector<std::vector<Poly>> powers(fx.factors.size());
  for (std::size_t i = 0; i < fx.factors.size(); ++i) {
    powers[i].reserve(size_t(pr) + 1);
    powers[i].push_back(Poly::one(field));
    for (u64 e = 1; e <= pr; ++e) powers[i].push_back(powers[i].back() * fx.factors[i].poly);
  }

  std::vector<Poly> out;
  out.reserve(size_t(total));
  std::vector<u64> b(t, 0);
  for (;;) {
    Poly g = Poly::one(field);
    for (std::size_t j = 0; j < t; ++j) {
      auto [hi, hj] = fx.mirror_pairs[j];
      g = g * powers[hi][size_t(b[j])] * powers[hj][size_t(pr - b[j])];
    }
    ConstacyclicCode code = make_code(field, n, -1, g);
    if (!is_self_dual(code))
      fail(Errc::invalid_input, "internal: enumerated generator failed the self-duality check");
    out.push_back(code.generator);
    // advance b lexicographically, last coordinate fastest
    std::size_t j = t;
    while (j > 0) {
      if (++b[j - 1] <= pr) break;
      b[j - 1] = 0;
      --j;
    }
    if (j == 0) break;
  }
  if (out.size() != total)
    fail(Errc::invalid_input, "internal: enumeration size mismatch");
  return out;
}

u64 count_selfdual_negacyclic(const FieldPtr& field, u64 n) {
  validate_params(field, n, -1);
  Factorization fx = factor_xn_minus_a(field, n, -1);
  if (!fx.self_paired.empty()) return 0;
  const u64 pr = fx.factors.empty() ? 1 : fx.factors[0].multiplicity;
  u64 count = checked_pow_u64(pr + 1, fx.mirror_pairs.size());
  if (count <= kCountCrossCheckLimit && enumeration_fits(count, n) &&
      count != enumerate_selfdual_negacyclic(field, n).size())
    fail(Errc::invalid_input, "internal: closed-form count disagrees with enumeration");
  return count;
}

std::vector<Poly> enumerate_selfdual_cyclic_char2(const FieldPtr& field, u64 n) {
  if (field->characteristic() != 2) fail(Errc::invalid_input, "characteristic 2 required");
  validate_params(field, n, 1);
  if (n % 2 != 0) return {};  // self-dual needs even length
  Factorization fx = factor_xn_minus_a(field, n, 1);
  const u64 mult = fx.factors[0].multiplicity;  // 2^r with r >= 1, so even
  const std::size_t t = fx.mirror_pairs.size();

  u64 total = 1;
  for (std::size_t j = 0; j < t; ++j) {
    total *= mult + 1;
    if (!enumeration_fits(total, n)) fail(Errc::range_exceeded, "enumeration too large");
  }

  std::vector<std::vector<Poly>> powers(fx.factors.size());
  for (std::size_t i = 0; i < fx.factors.size(); ++i) {
    powers[i].reserve(std::size_t(mult) + 1);
    powers[i].push_back(Poly::one(field));
    for (u64 e = 1; e <= mult; ++e) powers[i].push_back(powers[i].back() * fx.factors[i].poly);
  }

  // self-reciprocal factors are pinned to half their multiplicity
  Poly fixed = Poly::one(field);
  for (std::size_t i : fx.self_paired) fixed = fixed * powers[i][std::size_t(mult / 2)];

  std::vector<Poly> out;
  out.reserve(std::size_t(total));
  std::vector<u64> b(t, 0);
  for (;;) {
    Poly g = fixed;
    for (std::size_t j = 0; j < t; ++j) {
      auto [hi, hj] = fx.mirror_pairs[j];
      g = g * powers[hi][std::size_t(b[j])] * powers[hj][std::size_t(mult - b[j])];
    }
    ConstacyclicCode code = make_code(field, n, 1, g);
    if (!is_self_dual(code))
      fail(Errc::invalid_input, "internal: enumerated generator failed the self-duality check");
    out.push_back(code.generator);
    std::size_t j = t;
    while (j > 0) {
      if (++b[j - 1] <= mult) break;
      b[j - 1] = 0;
      --j;
    }
    if (j == 0) break;
  }
  if (out.size() != total)
    fail(Errc::invalid_input, "internal: enumeration size mismatch");
  return out;
}

CyclicSplitStructure cyclic_divisor_structure(const FieldPtr& field, u64 n) {
  const u64 p = field->characteristic();
  if (p == 2) fail(Errc::shape_mismatch, "odd characteristic required");
  if (n < 2 || n > kMaxLength) fail(Errc::shape_mismatch, "length must be 2·m·p^r");
  u64 core = n, pr = 1;
  while (core % p == 0) {
    core /= p;
    pr *= p;
  }
  if (core % 2 != 0 || (core / 2) % 2 == 0)
    fail(Errc::shape_mismatch, "length must be 2·m·p^r with m odd");
  const u64 m = core / 2;

  CyclicSplitStructure out{factor_xn_minus_a(field, n, 1), m, pr, {}};
  Poly xm1 = binomial_target(field, m, 1);
  std::map<Poly, std::size_t> index;
  for (std::size_t i = 0; i < out.fact.factors.size(); ++i)
    index.emplace(out.fact.factors[i].poly, i);
  for (std::size_t i = 0; i < out.fact.factors.size(); ++i) {
    if (!divides(out.fact.factors[i].poly, xm1)) continue;
    auto it = index.find(negate_variable(out.fact.factors[i].poly));
    if (it == index.end() || it->second == i)
      fail(Errc::invalid_input, "internal: variable negation did not pair the factors");
    out.negation_pairs.emplace_back(i, it->second);
  }
  if (2 * out.negation_pairs.size() != out.fact.factors.size())
    fail(Errc::invalid_input, "internal: negation pairing is not a perfect matching");
  return out;
}

TransportedIdeal mu_transport(const ConstacyclicCode& code, MuDirection direction) {
  if (code.a != 1) fail(Errc::shape_mismatch, "transport is defined on cyclic codes");
  const u64 m = code.n;
  const u64 p = code.field->characteristic();
  if (m % 2 == 0 || m % p == 0)
    fail(Errc::shape_mismatch, "transport requires odd length coprime to the characteristic");
  auto gamma_opt = solve_x2_plus_1(code.field);
  if (!gamma_opt)
    fail(Errc::no_square_root_of_minus_one, "the field contains no square root of -1");
  FieldElement gamma = *gamma_opt;

  // scale delta with delta^m = shift^(-1), so x -> delta*x maps x^m - 1 onto
  // a scalar multiple of x^m - shift
  FieldElement shift = direction == MuDirection::to_minus_gamma ? gamma : -gamma;
  FieldElement delta = (m % 4 == 3) == (direction == MuDirection::to_minus_gamma) ? gamma : -gamma;

  Poly image = scale_substitute(code.generator, delta).monic();
  std::vector<u64> mc(size_t(m) + 1, 0);
  mc[0] = (-shift).code();
  mc[size_t(m)] = 1;
  Poly modulus(code.field, std::move(mc));
  if (!divides(image, modulus))
    fail(Errc::invalid_input, "internal: transported generator is not a divisor");
  return TransportedIdeal{code.field, m, shift, modulus, image, code.dimension};
}

}  // namespace selfdual
