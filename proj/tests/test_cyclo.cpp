#include <functional>
#include <set>

#include "doctest.h"
#include "selfdual/cyclo.hpp"
#include "selfdual/errors.hpp"

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
}  // namespace

TEST_CASE("multiplicative orders") {
  CHECK(mult_order(5, 7) == 6);
  CHECK(mult_order(2, 17) == 8);
  CHECK(mult_order(9, 1) == 1);
  CHECK(mult_order(2, 7) == 3);
  CHECK(mult_order(9, 20) == 2);  // 81 = 1 mod 20
  CHECK(mult_order(3, 4) == 2);
  CHECK(mult_order(5, 4) == 1);
  CHECK(mult_order(5, 676) == 52);
  CHECK(mult_order(25, 676) == 26);
  CHECK(fails_with(Errc::not_coprime, [] { mult_order(2, 4); }));
  CHECK(fails_with(Errc::not_coprime, [] { mult_order(6, 9); }));
  CHECK(fails_with(Errc::invalid_input, [] { mult_order(2, 0); }));
}

TEST_CASE("cyclotomic cosets") {
  auto cs = cosets(2, 7, CosetScope::all_residues);
  REQUIRE(cs.size() == 3);
  CHECK(cs[0].members == std::vector<std::uint64_t>{0});
  CHECK(cs[1].members == std::vector<std::uint64_t>{1, 2, 4});
  CHECK(cs[2].members == std::vector<std::uint64_t>{3, 5, 6});
  CHECK(cs[1].representative == 1);
  CHECK(cs[1].modulus == 7);

  auto trivial = cosets(11, 1, CosetScope::all_residues);
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].members == std::vector<std::uint64_t>{0});

  auto odd = cosets(9, 20, CosetScope::odd_residues);
  REQUIRE(odd.size() == 6);
  CHECK(odd[0].members == std::vector<std::uint64_t>{1, 9});
  CHECK(odd[1].members == std::vector<std::uint64_t>{3, 7});
  CHECK(odd[2].members == std::vector<std::uint64_t>{5});
  CHECK(odd[3].members == std::vector<std::uint64_t>{11, 19});
  CHECK(odd[4].members == std::vector<std::uint64_t>{13, 17});
  CHECK(odd[5].members == std::vector<std::uint64_t>{15});

  CHECK(cosets(5, 2, CosetScope::odd_residues).size() == 1);
  CHECK(fails_with(Errc::not_coprime, [] { cosets(2, 4, CosetScope::all_residues); }));
  CHECK(fails_with(Errc::invalid_input, [] { cosets(3, 5, CosetScope::odd_residues); }));
  CHECK(fails_with(Errc::invalid_input, [] { cosets(3, 0, CosetScope::all_residues); }));
}

TEST_CASE("negation pairing of cosets") {
  auto cs7 = cosets(5, 7, CosetScope::all_residues);
  auto pr7 = coset_pairing(cs7);
  CHECK(pr7.self_paired == std::vector<std::size_t>{0, 1});
  CHECK(pr7.mirror_pairs.empty());
  CHECK(coset_is_self_paired(cs7[1]));

  auto odd = cosets(9, 20, CosetScope::odd_residues);
  auto pr = coset_pairing(odd);
  CHECK(pr.self_paired.empty());
  REQUIRE(pr.mirror_pairs.size() == 3);
  CHECK(pr.mirror_pairs[0] == std::pair<std::size_t, std::size_t>{0, 3});
  CHECK(pr.mirror_pairs[1] == std::pair<std::size_t, std::size_t>{1, 4});
  CHECK(pr.mirror_pairs[2] == std::pair<std::size_t, std::size_t>{2, 5});
  for (const auto& c : odd) CHECK(!coset_is_self_paired(c));

  auto two = cosets(7, 2, CosetScope::odd_residues);
  CHECK(coset_pairing(two).self_paired == std::vector<std::size_t>{0});
}

TEST_CASE("minimal polynomials over splitting extensions") {
  auto f2 = make_field(2, 1);
  auto f9 = make_field(3, 2);
  Coset zero{1, 0, {0}};
  CHECK(minimal_poly(zero, f2, 1) == Poly(f2, {1, 1}));
  CHECK(minimal_poly(zero, make_field(5, 1), 1) == Poly(make_field(5, 1), {4, 1}));

  Coset c124{7, 1, {1, 2, 4}};
  Coset c356{7, 3, {3, 5, 6}};
  Poly m1 = minimal_poly(c124, f2, 7);
  Poly m2 = minimal_poly(c356, f2, 7);
  CHECK(m1 == Poly(f2, {1, 0, 1, 1}));  // x^3+x^2+1 under the canonical root
  CHECK(m2 == Poly(f2, {1, 1, 0, 1}));
  CHECK(m1 * m2 * Poly(f2, {1, 1}) == Poly(f2, {1, 0, 0, 0, 0, 0, 0, 1}));
  CHECK(reciprocal(m1) == m2);

  // coset {5} mod 20 over F_9: linear, root of multiplicative order 4,
  // divides x^10 + 1
  Coset c5{20, 5, {5}};
  Poly lin = minimal_poly(c5, f9, 20);
  REQUIRE(lin.degree() == 1);
  auto root = -lin.coeff(0);
  CHECK(root.pow(4).code() == 1);
  CHECK(root.pow(2).code() != 1);
  Poly x10p1 = Poly(f9, {1}) + Poly::x(f9).pow(10);
  CHECK(divides(lin, x10p1));

  CHECK(fails_with(Errc::invalid_input, [&] { minimal_poly(c5, f9, 10); }));
  CHECK(fails_with(Errc::wild_ramification,
                   [&] { minimal_poly(Coset{6, 1, {1, 3}}, make_field(3, 1), 6); }));
}

TEST_CASE("square-free binomial factorizations") {
  auto f5 = make_field(5, 1);
  auto fx = factor_unity(f5, 2, -1);  // x^2+1 = (x-2)(x+2)
  CHECK(fx.target == Poly(f5, {1, 0, 1}));
  REQUIRE(fx.factors.size() == 2);
  CHECK(fx.factors[0].poly == Poly(f5, {3, 1}));
  CHECK(fx.factors[1].poly == Poly(f5, {2, 1}));
  CHECK(fx.factors[0].multiplicity == 1);
  CHECK(fx.self_paired.empty());
  CHECK(fx.mirror_pairs == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});

  auto f3 = make_field(3, 1);
  auto f3x = factor_unity(f3, 2, -1);  // x^2+1 irreducible
  REQUIRE(f3x.factors.size() == 1);
  CHECK(f3x.factors[0].poly == Poly(f3, {1, 0, 1}));
  CHECK(f3x.self_paired == std::vector<std::size_t>{0});
  CHECK(f3x.mirror_pairs.empty());

  auto f2 = make_field(2, 1);
  auto f2x = factor_unity(f2, 3, 1);  // x^3-1 = (x+1)(x^2+x+1)
  REQUIRE(f2x.factors.size() == 2);
  CHECK(f2x.factors[0].poly == Poly(f2, {1, 1}));
  CHECK(f2x.factors[1].poly == Poly(f2, {1, 1, 1}));
  CHECK(f2x.self_paired == std::vector<std::size_t>{0, 1});

  auto f9 = make_field(3, 2);
  auto f9x = factor_unity(f9, 10, -1);
  CHECK(f9x.factors.size() == 6);
  CHECK(f9x.self_paired.empty());
  CHECK(f9x.mirror_pairs.size() == 3);

  CHECK(fails_with(Errc::wild_ramification, [&] { factor_unity(f5, 10, -1); }));
  CHECK(fails_with(Errc::invalid_input, [&] { factor_unity(f5, 2, 0); }));
  CHECK(fails_with(Errc::invalid_input, [&] { factor_unity(f5, 0, 1); }));
}

TEST_CASE("repeated-root binomial factorizations") {
  auto f5 = make_field(5, 1);
  auto fx = factor_xn_minus_a(f5, 10, -1);  // (x-2)^5 (x+2)^5
  CHECK(fx.target == Poly(f5, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}));
  REQUIRE(fx.factors.size() == 2);
  CHECK(fx.factors[0].poly == Poly(f5, {3, 1}));
  CHECK(fx.factors[0].multiplicity == 5);
  CHECK(fx.factors[1].poly == Poly(f5, {2, 1}));
  CHECK(fx.factors[1].multiplicity == 5);
  CHECK(fx.mirror_pairs == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});

  auto f2 = make_field(2, 1);
  auto f2x = factor_xn_minus_a(f2, 6, 1);  // (x+1)^2 (x^2+x+1)^2
  REQUIRE(f2x.factors.size() == 2);
  CHECK(f2x.factors[0].poly == Poly(f2, {1, 1}));
  CHECK(f2x.factors[1].poly == Poly(f2, {1, 1, 1}));
  CHECK(f2x.factors[0].multiplicity == 2);
  CHECK(f2x.factors[1].multiplicity == 2);

  auto f3 = make_field(3, 1);
  auto f3x = factor_xn_minus_a(f3, 6, -1);  // (x^2+1)^3
  REQUIRE(f3x.factors.size() == 1);
  CHECK(f3x.factors[0].poly == Poly(f3, {1, 0, 1}));
  CHECK(f3x.factors[0].multiplicity == 3);
  CHECK(f3x.self_paired == std::vector<std::size_t>{0});

  // pure p-power length: x^8 - 1 = (x+1)^8 over F_2
  auto f2p = factor_xn_minus_a(f2, 8, 1);
  REQUIRE(f2p.factors.size() == 1);
  CHECK(f2p.factors[0].poly == Poly(f2, {1, 1}));
  CHECK(f2p.factors[0].multiplicity == 8);

  CHECK(fails_with(Errc::negacyclic_trivial_in_char_two,
                   [&] { factor_xn_minus_a(f2, 6, -1); }));
  CHECK(fails_with(Errc::invalid_input, [&] { factor_xn_minus_a(f5, 0, 1); }));
  CHECK(fails_with(Errc::invalid_input, [&] { factor_xn_minus_a(f5, 10, 2); }));
}

TEST_CASE("factorization sweep keeps structural invariants") {
  // moderate sweep; the wide one lives in the acceptance suite
  for (auto [p, s] : std::vector<std::pair<std::uint64_t, unsigned>>{
           {2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}}) {
    auto f = make_field(p, s);
    for (std::uint64_t m = 1; m <= 24; ++m) {
      if (m % p == 0) continue;
      for (int sign : {1, -1}) {
        if (sign == -1 && p == 2) continue;
        auto fx = factor_unity(f, m, sign);
        // reconstruction
        Poly prod = Poly::one(f);
        std::uint64_t degsum = 0;
        for (const auto& fe : fx.factors) {
          CHECK(is_irreducible(fe.poly));
          CHECK(fe.poly.is_monic());
          prod = prod * fe.poly;
          degsum += std::uint64_t(fe.poly.degree());
        }
        CHECK(prod == fx.target);
        CHECK(degsum == m);
        // pairing annotations match the polynomial-level predicates
        CHECK(fx.self_paired.size() + 2 * fx.mirror_pairs.size() == fx.factors.size());
        for (auto i : fx.self_paired) CHECK(is_self_reciprocal(fx.factors[i].poly));
        for (auto [i, j] : fx.mirror_pairs) {
          CHECK(i < j);
          CHECK(reciprocal(fx.factors[i].poly) == fx.factors[j].poly);
          CHECK(reciprocal(fx.factors[j].poly) == fx.factors[i].poly);
          CHECK(!is_self_reciprocal(fx.factors[i].poly));
        }
        // factor sets agree with the coset picture: self-paired coset iff
        // self-reciprocal minimal polynomial
        std::uint64_t root_order = (sign == 1) ? m : 2 * m;
        auto cs = cosets(f->order(), root_order,
                         sign == 1 ? CosetScope::all_residues : CosetScope::odd_residues);
        REQUIRE(cs.size() == fx.factors.size());
        for (std::size_t i = 0; i < cs.size(); ++i) {
          CHECK(std::uint64_t(fx.factors[i].poly.degree()) == cs[i].members.size());
          CHECK(coset_is_self_paired(cs[i]) == is_self_reciprocal(fx.factors[i].poly));
        }
      }
    }
  }
}

TEST_CASE("factor caching is stable across calls") {
  auto f5 = make_field(5, 1);
  auto a = factor_xn_minus_a(f5, 20, -1);
  auto b = factor_xn_minus_a(f5, 20, -1);
  REQUIRE(a.factors.size() == b.factors.size());
  for (std::size_t i = 0; i < a.factors.size(); ++i) {
    CHECK(a.factors[i].poly == b.factors[i].poly);
    CHECK(a.factors[i].multiplicity == b.factors[i].multiplicity);
  }
  CHECK(a.mirror_pairs == b.mirror_pairs);
  CHECK(a.self_paired == b.self_paired);
}
