#pragma once

#include <cstdint>
#include <vector>

#include "selfdual/codes.hpp"
#include "selfdual/cyclo.hpp"
#include "selfdual/linalg.hpp"
#include "selfdual/poly.hpp"

namespace selfdual {

// Streams every monic divisor of the factored binomial exactly once, in
// lexicographic exponent-vector order (first factor most significant, last
// coordinate advancing fastest).
class DivisorIterator {
 public:
  explicit DivisorIterator(Factorization fz);

  bool done() const { return done_; }
  std::uint64_t total() const { return total_; }
  const std::vector<std::uint64_t>& exponents() const { return exps_; }
  std::uint64_t current_degree() const { return degree_; }
  // materializes the divisor and verifies it divides the target
  Poly current();
  void advance();

 private:
  Factorization fact_;
  std::vector<std::uint64_t> exps_;
  std::vector<std::vector<Poly>> powers_;  // powers_[i][e] = f_i^e
  std::vector<Poly> prefix_;               // prefix_[i] = prod_{j<i} f_j^{e_j}
  std::size_t dirty_ = 0;                  // prefix_ entries < dirty_+1 are valid
  std::uint64_t degree_ = 0;
  std::uint64_t total_ = 1;
  bool done_ = false;
};

DivisorIterator all_divisors(const Factorization& fz);

// Exhaustive ground truth: scans every divisor of x^n - a, keeps those of
// degree n/2 whose cyclic-shift generator matrix G satisfies G·G^T = 0.
std::vector<Poly> oracle_selfdual_search(const FieldPtr& field, std::uint64_t n, int a);

// Second, independent dual computation: basis of the null space of the
// generator matrix. Its row space must match generator_matrix(dual(code)).
Matrix nullspace_dual(const ConstacyclicCode& code);

}  // namespace selfdual
