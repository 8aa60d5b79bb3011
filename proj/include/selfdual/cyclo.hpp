#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "selfdual/poly.hpp"

namespace selfdual {

// Orbit of a residue under multiplication by q modulo `modulus`.
struct Coset {
  std::uint64_t modulus = 0;
  std::uint64_t representative = 0;       // smallest member
  std::vector<std::uint64_t> members;     // sorted ascending
};

enum class CosetScope { all_residues, odd_residues };

// Smallest k >= 1 with q^k = 1 (mod m); ord_1(q) = 1. Requires gcd(q, m) = 1.
std::uint64_t mult_order(std::uint64_t q, std::uint64_t m);

// All q-cyclotomic cosets partitioning Z_m (all_residues) or the odd residues
// modulo an even m (odd_residues), sorted by representative.
std::vector<Coset> cosets(std::uint64_t q, std::uint64_t m, CosetScope scope);

// True iff the member set is closed under negation modulo the coset modulus.
bool coset_is_self_paired(const Coset& c);

// Partition of a coset list into self-paired entries and mirror pairs (i, j),
// i < j, matched through negation of representatives.
struct CosetPairing {
  std::vector<std::size_t> self_paired;
  std::vector<std::pair<std::size_t, std::size_t>> mirror_pairs;
};
CosetPairing coset_pairing(const std::vector<Coset>& cs);

// Monic irreducible polynomial over `field` whose roots are alpha^j for j in
// c.members, alpha the canonical primitive root_order-th root of unity in the
// splitting extension. Requires root_order == c.modulus and gcd(root_order, p) = 1.
Poly minimal_poly(const Coset& c, const FieldPtr& field, std::uint64_t root_order);

struct FactorEntry {
  Poly poly;                    // monic irreducible
  std::uint64_t multiplicity;
};

// Factorization of a binomial target with reciprocal-pairing annotations.
// Indices in self_paired / mirror_pairs refer to `factors`; a factor index is
// self-paired iff the factor is self-reciprocal, and pairs (i, j) satisfy
// reciprocal(factors[i].poly) == factors[j].poly.
struct Factorization {
  FieldPtr field;
  Poly target;
  std::vector<FactorEntry> factors;
  std::vector<std::size_t> self_paired;
  std::vector<std::pair<std::size_t, std::size_t>> mirror_pairs;
};

// Square-free factorization of x^m - 1 (sign = +1) or x^m + 1 (sign = -1)
// over `field`; requires gcd(m, p) = 1. Factors are listed by ascending coset
// representative and carry multiplicity 1.
Factorization factor_unity(const FieldPtr& field, std::uint64_t m, int sign);

// Factorization of x^n - a for a = +1 / -1, n = eta * p^r with gcd(eta, p) = 1:
// the square-free core's factors each carry multiplicity p^r.
// a = -1 in characteristic 2 is rejected (x^n + 1 = x^n - 1 there).
Factorization factor_xn_minus_a(const FieldPtr& field, std::uint64_t n, int a);

}  // namespace selfdual
