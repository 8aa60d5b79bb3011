#pragma once

#include <cstdint>
#include <vector>

#include "selfdual/cyclo.hpp"
#include "selfdual/linalg.hpp"
#include "selfdual/poly.hpp"

namespace selfdual {

// Principal ideal of F_q[x]/(x^n - a), a in {+1 (cyclic), -1 (negacyclic)}.
struct ConstacyclicCode {
  FieldPtr field;
  std::uint64_t n = 0;
  int a = 1;
  Poly generator;                 // monic divisor of x^n - a
  std::uint64_t dimension = 0;    // n - deg(generator)
};

// Validates the divisor property; generator is monic-normalized.
ConstacyclicCode make_code(const FieldPtr& field, std::uint64_t n, int a, Poly generator);

// k x n matrix with rows x^i * g(x), 0 <= i < k = dimension.
Matrix generator_matrix(const ConstacyclicCode& code);

// Dual code under the standard inner product: generated by the monic
// reciprocal of (x^n - a) / generator; same length and shift constant.
ConstacyclicCode dual(const ConstacyclicCode& code);

bool is_self_dual(const ConstacyclicCode& code);

// Generator for the divisor prod factors[i]^exps[i]; exps[i] <= multiplicity.
Poly divisor_from_exponents(const Factorization& fx, const std::vector<std::uint64_t>& exps);

// All generators of self-dual negacyclic codes of length n, each verified;
// empty when a self-reciprocal factor of x^n + 1 exists. Ordered by the
// exponent vector over mirror pairs, lexicographic, first pair most
// significant. Enumerations beyond 2^20 codes are rejected.
std::vector<Poly> enumerate_selfdual_negacyclic(const FieldPtr& field, std::uint64_t n);

// (p^r + 1)^t when the factorization of x^n + 1 has no self-reciprocal
// factor, else 0; cross-validated against enumeration when small.
std::uint64_t count_selfdual_negacyclic(const FieldPtr& field, std::uint64_t n);

// All generators of self-dual cyclic codes over a characteristic-2 field:
// self-reciprocal factors of x^n - 1 are pinned to half their multiplicity,
// mirror pairs enumerated as in the negacyclic case. Empty for odd n.
std::vector<Poly> enumerate_selfdual_cyclic_char2(const FieldPtr& field, std::uint64_t n);

// Factorization of x^n - 1 for n = 2m p^r (m odd, p odd) annotated with the
// involution f(x) -> monic f(-x), which exchanges the divisors of x^m - 1
// with those of x^m + 1.
struct CyclicSplitStructure {
  Factorization fact;   // of x^n - 1; every multiplicity is p^r
  std::uint64_t m = 0;  // odd part of n / 2
  std::uint64_t pr = 0; // p^r
  // (i, j): factors[i] divides x^m - 1 and factors[j] = monic factors[i](-x)
  std::vector<std::pair<std::size_t, std::size_t>> negation_pairs;
};
CyclicSplitStructure cyclic_divisor_structure(const FieldPtr& field, std::uint64_t n);

// Ring isomorphism F[x]/(x^m - 1) -> F[x]/(x^m -+ gamma) applied to a cyclic
// code's generator, gamma the canonical square root of -1. The substitution
// scale depends on m mod 4; the image generator divides the target modulus.
enum class MuDirection { to_minus_gamma, to_plus_gamma };

struct TransportedIdeal {
  FieldPtr field;
  std::uint64_t m = 0;
  FieldElement shift;     // the target modulus is x^m - shift
  Poly modulus;           // x^m - shift
  Poly generator;         // monic, divides modulus
  std::uint64_t dimension = 0;
};
TransportedIdeal mu_transport(const ConstacyclicCode& code, MuDirection direction);

}  // namespace selfdual
