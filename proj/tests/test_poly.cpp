#include <functional>
#include <random>

#include "doctest.h"
#include "selfdual/errors.hpp"
#include "selfdual/poly.hpp"

using namespace selfdual;

namespace {

bool fails_with(Errc want, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == want;
  }
  return false;
}

Poly random_poly(const FieldPtr& f, int max_deg, std::mt19937_64& rng) {
  int deg = int(rng() % std::uint64_t(max_deg + 1));
  std::vector<std::uint64_t> codes(size_t(deg) + 1);
  for (auto& c : codes) c = rng() % f->order();
  return Poly(f, std::move(codes));
}

Poly random_monic_nonzero_const(const FieldPtr& f, int max_deg, std::mt19937_64& rng) {
  int deg = 1 + int(rng() % std::uint64_t(max_deg));
  std::vector<std::uint64_t> codes(size_t(deg) + 1);
  codes[0] = 1 + rng() % (f->order() - 1);
  for (size_t i = 1; i + 1 < codes.size(); ++i) codes[i] = rng() % f->order();
  codes.back() = 1;
  return Poly(f, std::move(codes));
}

}  // namespace

TEST_CASE("construction and normalization") {
  auto f5 = make_field(5, 1);
  Poly p(f5, {1, 2, 0, 0});
  CHECK(p.degree() == 1);
  CHECK(Poly::zero(f5).degree() == -1);
  CHECK(Poly::zero(f5).is_zero());
  CHECK(Poly::one(f5).is_one());
  CHECK(Poly::x(f5).degree() == 1);
  CHECK(Poly::from_ints(f5, {-1, 1}) == Poly(f5, {4, 1}));
  CHECK(Poly::from_ints(f5, {7, 0, 12}) == Poly(f5, {2, 0, 2}));
  CHECK(p.coeff(0).code() == 1);
  CHECK(p.coeff(7).code() == 0);
  CHECK(p.leading().code() == 2);
  CHECK(fails_with(Errc::invalid_input, [&] { Poly(f5, {9}); }));
  CHECK(fails_with(Errc::invalid_input, [&] { Poly::zero(f5).leading(); }));
}

TEST_CASE("ring arithmetic matches hand results") {
  auto f3 = make_field(3, 1);
  // (x+1)(x+2) = x^2+2 over F_3
  CHECK(Poly(f3, {1, 1}) * Poly(f3, {2, 1}) == Poly(f3, {2, 0, 1}));
  auto f5 = make_field(5, 1);
  Poly a(f5, {1, 1});   // x+1
  Poly b(f5, {4, 1});   // x+4
  CHECK(a * b == Poly(f5, {4, 0, 1}));
  CHECK(a + b == Poly(f5, {0, 2}));
  CHECK(a - b == Poly(f5, {2}));
  CHECK(-a == Poly(f5, {4, 4}));
  CHECK(a * f5->element(3) == Poly(f5, {3, 3}));
  CHECK((a * Poly::zero(f5)).is_zero());
  CHECK(a.pow(0).is_one());
  CHECK(a.pow(5) == Poly(f5, {1, 0, 0, 0, 0, 1}));  // (x+1)^5 = x^5+1 in char 5
  CHECK(a.eval(f5->element(4)).code() == 0);
  CHECK(Poly(f5, {1, 0, 1}).eval(f5->element(2)).code() == 0);  // 2^2+1 = 5
  CHECK(Poly(f5, {1, 0, 1}).eval(f5->element(1)).code() == 2);
}

TEST_CASE("division with remainder") {
  auto f2 = make_field(2, 1);
  // (x^3+1)^2 = x^6+1 in characteristic 2
  auto [q, r] = divmod(Poly(f2, {1, 0, 0, 0, 0, 0, 1}), Poly(f2, {1, 0, 0, 1}));
  CHECK(q == Poly(f2, {1, 0, 0, 1}));
  CHECK(r.is_zero());

  auto f5 = make_field(5, 1);
  Poly f(f5, {3, 2, 0, 1});  // x^3+2x+3
  Poly g(f5, {1, 2});        // 2x+1
  auto [q2, r2] = divmod(f, g);
  CHECK(q2 * g + r2 == f);
  CHECK(r2.degree() < g.degree());
  CHECK(divmod(g, f).first.is_zero());
  CHECK(divmod(g, f).second == g);
  CHECK(fails_with(Errc::division_by_zero, [&] { divmod(f, Poly::zero(f5)); }));
  CHECK(divides(Poly(f5, {1, 1}), Poly(f5, {4, 0, 1})));   // (x+1) | (x^2-1)
  CHECK(!divides(Poly(f5, {2, 1}), Poly(f5, {4, 0, 1})));
}

TEST_CASE("monic gcd") {
  auto f5 = make_field(5, 1);
  Poly a(f5, {4, 0, 1});  // (x-1)(x+1)
  Poly b(f5, {1, 3, 1});  // (x-1)^2 = x^2+3x+1
  CHECK(gcd(a, b) == Poly(f5, {4, 1}));  // x-1
  CHECK(gcd(a, Poly::zero(f5)) == a.monic());
  CHECK(gcd(Poly::zero(f5), Poly::zero(f5)).is_zero());
  CHECK(gcd(Poly(f5, {2}), a).is_one());
  // gcd result is monic even when inputs are not
  CHECK(gcd(a * f5->element(3), b * f5->element(2)) == Poly(f5, {4, 1}));
}

TEST_CASE("reciprocal operator") {
  auto f5 = make_field(5, 1);
  CHECK(reciprocal(Poly(f5, {3, 1})) == Poly(f5, {2, 1}));  // (x-2)* ~ x+2
  auto f2 = make_field(2, 1);
  CHECK(reciprocal(Poly(f2, {1, 0, 0, 1})) == Poly(f2, {1, 0, 0, 1}));  // x^3+1
  CHECK(is_self_reciprocal(Poly(f5, {1, 1})));
  CHECK(!is_self_reciprocal(Poly(f5, {3, 1})));
  auto f3 = make_field(3, 1);
  CHECK(is_self_reciprocal(Poly(f3, {1, 0, 1})));
  CHECK(fails_with(Errc::zero_constant_term, [&] { reciprocal(Poly::x(f5)); }));
  CHECK(fails_with(Errc::zero_constant_term, [&] { reciprocal(Poly::zero(f5)); }));
  // roots invert: roots of f=(x-2)(x-3) are 2,3; roots of f* are 3,2
  Poly f = Poly(f5, {3, 1}) * Poly(f5, {2, 1});
  Poly fr = reciprocal(f);
  CHECK(fr.eval(f5->element(3)).code() == 0);
  CHECK(fr.eval(f5->element(2)).code() == 0);
}

TEST_CASE("variable scaling and negation") {
  auto f5 = make_field(5, 1);
  Poly f(f5, {4, 1});  // x-1
  CHECK(scale_substitute(f, f5->element(2)) == Poly(f5, {4, 2}));  // 2x-1, not normalized
  CHECK(scale_substitute(f, f5->one()) == f);
  CHECK(fails_with(Errc::invalid_scale, [&] { scale_substitute(f, f5->zero()); }));
  Poly g(f5, {1, 1, 1});
  CHECK(negate_variable(g) == Poly(f5, {1, 4, 1}));
  CHECK(negate_variable(Poly(f5, {1, 0, 1})) == Poly(f5, {1, 0, 1}));  // even polynomial
  auto f3 = make_field(3, 1);
  CHECK(negate_variable(Poly(f3, {2, 1})) == Poly(f3, {1, 1}));  // x-1 -> x+1
  CHECK(negate_variable(Poly(f3, {1, 0, 0, 1})) == Poly(f3, {2, 0, 0, 1}));  // x^3+1 -> x^3+2
  CHECK(fails_with(Errc::invalid_input, [&] { negate_variable(Poly::zero(f3)); }));
  // composition scale(scale(f,c), 1/c) = f for nonzero c
  std::mt19937_64 rng(0xFACE5);
  auto f9 = make_field(3, 2);
  for (int i = 0; i < 100; ++i) {
    Poly h = random_poly(f9, 6, rng);
    auto c = f9->element(1 + rng() % 8);
    CHECK(scale_substitute(scale_substitute(h, c), c.inv()) == h);
  }
}

TEST_CASE("irreducibility test") {
  auto f3 = make_field(3, 1);
  auto f5 = make_field(5, 1);
  auto f2 = make_field(2, 1);
  CHECK(is_irreducible(Poly(f3, {1, 0, 1})));        // x^2+1 over F_3
  CHECK(!is_irreducible(Poly(f5, {1, 0, 1})));       // roots 2,3
  CHECK(is_irreducible(Poly(f2, {1, 1, 1})));        // x^2+x+1
  CHECK(is_irreducible(Poly(f2, {1, 0, 0, 1, 1})));  // x^4+x^3+1
  CHECK(!is_irreducible(Poly(f2, {1, 0, 1, 0, 1}))); // (x^2+x+1)^2
  CHECK(is_irreducible(Poly(f3, {1, 0, 2, 1})));     // x^3+2x^2+1
  CHECK(is_irreducible(Poly(f5, {2, 1})));           // linear
  CHECK(is_irreducible(Poly::x(f5)));
  CHECK(!is_irreducible(Poly(f2, {0, 0, 1})));       // x^2
  CHECK(fails_with(Errc::invalid_degree, [&] { is_irreducible(Poly(f5, {3})); }));
  CHECK(fails_with(Errc::invalid_degree, [&] { is_irreducible(Poly::zero(f5)); }));
  // over an extension field: x^2+1 splits in F_9, stays prime nowhere it has roots
  auto f9 = make_field(3, 2);
  CHECK(!is_irreducible(Poly(f9, {1, 0, 1})));
  auto f4 = make_field(2, 2);
  CHECK(is_irreducible(Poly(f4, {2, 1, 1})));  // x^2+x+w has no root in F_4
  // non-monic inputs are accepted and judged by their monic associate
  CHECK(!is_irreducible(Poly(f5, {2, 0, 2})));  // 2(x^2+1), and x^2+1 splits
  CHECK(is_irreducible(Poly(f5, {4, 0, 2})));   // 2(x^2+2), and x^2+2 is prime
}

TEST_CASE("modular exponentiation") {
  auto f3 = make_field(3, 1);
  Poly mod(f3, {1, 0, 1});  // x^2+1
  CHECK(pow_mod(Poly::x(f3), 9, mod) == Poly::x(f3));      // x^9 = x
  CHECK(pow_mod(Poly::x(f3), 3, mod) == Poly(f3, {0, 2})); // x^3 = -x
  CHECK(pow_mod(Poly::x(f3), 0, mod).is_one());
  CHECK(fails_with(Errc::invalid_degree, [&] { pow_mod(mod, 2, Poly(f3, {2})); }));
}

TEST_CASE("text format round-trips") {
  auto f5 = make_field(5, 1);
  CHECK(Poly::zero(f5).str() == "0");
  CHECK(Poly(f5, {4, 0, 1}).str() == "4 + 0*x + 1*x^2");
  CHECK(Poly(f5, {2, 3}).str() == "2 + 3*x");
  CHECK(Poly::parse(f5, "0").is_zero());
  CHECK(Poly::parse(f5, "4 + 0*x + 1*x^2") == Poly(f5, {4, 0, 1}));
  CHECK(Poly::parse(f5, "x^2 - 1") == Poly(f5, {4, 0, 1}));
  CHECK(Poly::parse(f5, "x^2-1") == Poly(f5, {4, 0, 1}));
  CHECK(Poly::parse(f5, "-x") == Poly(f5, {0, 4}));
  CHECK(Poly::parse(f5, "3x + 2") == Poly(f5, {2, 3}));
  CHECK(Poly::parse(f5, "x + x") == Poly(f5, {0, 2}));
  CHECK(Poly::parse(f5, "7") == Poly(f5, {2}));
  CHECK(Poly::parse(f5, "  1*x^3 ") == Poly(f5, {0, 0, 0, 1}));
  auto f9 = make_field(3, 2);
  Poly w(f9, {5, 0, 3});  // (2+w) + w*x^2
  CHECK(w.str() == "[2,1] + [0,0]*x + [0,1]*x^2");
  CHECK(Poly::parse(f9, w.str()) == w);
  CHECK(Poly::parse(f9, "[1] + [0,1]*x") == Poly(f9, {1, 3}));
  CHECK(Poly::parse(f9, "[-1,2]") == Poly(f9, {8}));  // -1 -> 2, 2*3=6; 2+6
  CHECK(fails_with(Errc::invalid_input, [&] { Poly::parse(f5, ""); }));
  CHECK(fails_with(Errc::invalid_input, [&] { Poly::parse(f5, "2 +"); }));
  CHECK(fails_with(Errc::invalid_input, [&] { Poly::parse(f5, "y + 1"); }));
  CHECK(fails_with(Errc::invalid_input, [&] { Poly::parse(f5, "2**x"); }));
  CHECK(fails_with(Errc::invalid_input, [&] { Poly::parse(f9, "[1,2,3]"); }));
  CHECK(fails_with(Errc::range_exceeded, [&] { Poly::parse(f5, "x^99999999"); }));
  // canonical print always lists every coefficient from degree 0 upward
  std::mt19937_64 rng(0xB00);
  for (int i = 0; i < 200; ++i) {
    Poly h = random_poly(f9, 10, rng);
    CHECK(Poly::parse(f9, h.str()) == h);
    Poly h5 = random_poly(f5, 10, rng);
    CHECK(Poly::parse(f5, h5.str()) == h5);
  }
}

TEST_CASE("ordering is by degree then high coefficients") {
  auto f5 = make_field(5, 1);
  CHECK(Poly(f5, {0, 1}) < Poly(f5, {0, 0, 1}));
  CHECK(Poly(f5, {3, 1}) < Poly(f5, {1, 2}));
  CHECK(!(Poly(f5, {1, 2}) < Poly(f5, {1, 2})));
  CHECK(Poly(f5, {1, 2}) < Poly(f5, {2, 2}));
}

TEST_CASE("algebraic identities on random samples") {
  std::mt19937_64 rng(0x5EED);
  for (auto [p, s] : std::vector<std::pair<std::uint64_t, unsigned>>{
           {2, 1}, {3, 1}, {5, 1}, {3, 2}, {2, 2}, {5, 2}}) {
    auto f = make_field(p, s);
    for (int i = 0; i < 120; ++i) {
      Poly a = random_poly(f, 7, rng), b = random_poly(f, 7, rng), c = random_poly(f, 7, rng);
      CHECK((a + b) * c == a * c + b * c);
      CHECK(a * b == b * a);
      if (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
      }
      Poly g = gcd(a, b);
      if (!g.is_zero()) {
        CHECK(divides(g, a));
        CHECK(divides(g, b));
      }
      // reciprocal identities on monic polynomials with nonzero constant term
      Poly m1 = random_monic_nonzero_const(f, 6, rng);
      Poly m2 = random_monic_nonzero_const(f, 6, rng);
      CHECK(reciprocal(reciprocal(m1)) == m1);
      CHECK(reciprocal(m1 * m2) == reciprocal(m1) * reciprocal(m2));
      CHECK(negate_variable(negate_variable(m1)) == m1);
      // substitution is a ring homomorphism
      auto sc = f->element(1 + rng() % (f->order() - 1));
      CHECK(scale_substitute(a + b, sc) == scale_substitute(a, sc) + scale_substitute(b, sc));
      CHECK(scale_substitute(a * b, sc) == scale_substitute(a, sc) * scale_substitute(b, sc));
    }
  }
}
