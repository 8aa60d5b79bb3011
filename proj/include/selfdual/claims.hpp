#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "selfdual/gf.hpp"
#include "selfdual/poly.hpp"

namespace selfdual {

// Pairing shape of the factorization of x^n + 1: s self-reciprocal factors,
// t mirror pairs, common multiplicity p^r.
struct PairingEvidence {
  std::uint64_t self_reciprocal = 0;
  std::uint64_t mirror_pairs = 0;
  std::uint64_t multiplicity = 1;
};

// Authoritative existence criterion: self-dual negacyclic codes of length n
// exist over the field iff x^n + 1 has no self-reciprocal irreducible factor.
// Decided at the cyclotomic-coset level, so it stays cheap at large n.
bool negacyclic_selfdual_exists(const FieldPtr& field, std::uint64_t n,
                                PairingEvidence* evidence = nullptr);

// Advisory order-parity criterion for length 2*m*p^r (m odd, coprime to p):
// predicts existence iff the field contains a square root of -1 and
// ord_m(q) is odd. Kept separate from the criterion above; the claims
// harness adjudicates the two against brute force.
bool negacyclic_selfdual_exists_by_order(const FieldPtr& field, std::uint64_t m);

// Number of self-dual cyclic codes of even length n over a char-2 field:
// (2^r + 1)^t where n = 2^r * eta (eta odd) and t counts the mirror pairs
// of the factorization of x^eta - 1.
std::uint64_t count_selfdual_cyclic_char2(const FieldPtr& field, std::uint64_t n);

// The claimed unique self-dual cyclic generator (x^{p^alpha}+1)^{2^{r-1}}
// of length 2^r p^alpha over F_{2^s}, present only when (p, s) lies in one
// of the stated congruence cases; absent means no uniqueness is claimed.
std::optional<Poly> char2_unique_cyclic_generator(std::uint64_t p, std::uint64_t alpha,
                                                  std::uint64_t r, std::uint64_t s);

// ord_q(p) for p a quadratic non-residue mod q, with the congruence its
// order must satisfy: divisible by 4 when q = 1 mod 4, by 2 when q = 3 mod 4.
struct OrderCongruence {
  std::uint64_t order = 0;
  std::uint64_t required_divisor = 0;
};
OrderCongruence order_congruence_for_nonresidue(std::uint64_t p, std::uint64_t q);

// Lengths 2*p*q^alpha (alpha <= alpha_max) over F_p and F_{p^2} that are
// claimed to carry no self-dual negacyclic code, under the hypotheses
// p = q = 1 mod 4, p a non-residue mod q. Forwarded for adjudication.
struct LengthInstance {
  std::uint64_t p = 0, s = 0, n = 0;
};
std::vector<LengthInstance> nonresidue_length_family(std::uint64_t p, std::uint64_t q,
                                                     std::uint64_t alpha_max);

// For p = 1 mod 8: ord_p(2) = 2^k * e with e odd, and the verified tower
// orders[l] = ord_p(2^(2^l)) = 2^(k-l) * e for 0 <= l <= k.
struct OrderTower {
  std::uint64_t k = 0, e = 0;
  std::vector<std::uint64_t> orders;
};
OrderTower order_halving_tower(std::uint64_t p);

// Exhaustive sweep outcomes: empty counterexample means the property held
// on every checked instance.
struct SweepOutcome {
  std::uint64_t checked = 0;
  std::string counterexample;
  bool ok() const { return counterexample.empty(); }
};
// mult_order(q, m) even <=> some coset mod m with nonzero representative is
// self-paired; odd m, gcd(m, q) = 1.
SweepOutcome sweep_order_parity_vs_pairing(std::uint64_t max_m,
                                           const std::vector<std::uint64_t>& bases);
// ord_n(q^2) = ord_n(q)/2 when ord_n(q) is even, else ord_n(q); gcd(n, q) = 1.
SweepOutcome sweep_order_halving(std::uint64_t max_n,
                                 const std::vector<std::uint64_t>& bases);
// the non-residue order congruence over all valid prime pairs p != q <= bound
SweepOutcome sweep_order_congruence(std::uint64_t max_prime);
// the order-halving tower over all primes p = 1 mod 8, p <= bound
SweepOutcome sweep_order_tower(std::uint64_t max_prime);

// One adjudicated claim instance.
struct ClaimVerdict {
  std::string claim_id;    // stable row identifier
  std::string statement;   // what is being claimed, in words
  std::string instance;    // parameters, e.g. "field=F_5 n=70 a=-1"
  std::string claimed;     // the stated outcome
  std::string engine;      // outcome computed by the structural criterion
  std::string oracle;      // outcome computed by brute force; "-" when skipped
  std::string status;      // confirmed | refuted-by-oracle | oracle-skipped
  bool authoritative = false;          // engine column is the authoritative criterion
  bool engine_oracle_mismatch = false; // authoritative engine disagrees with oracle
};

struct ClaimsConfig {
  std::uint64_t max_oracle_n = 512;
  std::uint64_t max_oracle_field_order = 16;
};

// Evaluates every built-in claim instance and the order-criterion sweeps; deterministic,
// sorted by claim_id. Individual failures are captured as verdicts, not thrown.
std::vector<ClaimVerdict> run_claims_report(const ClaimsConfig& config = {});

// Aligned-column text rendering of a verdict list.
std::string claims_table(const std::vector<ClaimVerdict>& verdicts);

}  // namespace selfdual
