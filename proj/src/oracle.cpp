#include "selfdual/oracle.hpp"

#include "selfdual/errors.hpp"

namespace selfdual {

namespace {

using u64 = std::uint64_t;

constexpr u64 kMaxOracleLength = 512;
constexpr u64 kMaxOracleDivisors = u64(1) << 20;

// G·G^T = 0 for the k x n matrix whose row i is x^i * g laid out by
// coefficient; row i and row j overlap in the autocorrelation of g at shift
// j - i, so the product is evaluated entry by entry with early exit.
bool generator_matrix_self_orthogonal(const FieldPtr& f, const Poly& g, u64 k) {
  const int d = g.degree();
  for (u64 shift = 0; shift < k; ++shift) {
    u64 acc = 0;
    for (int t = 0; t + int(shift) <= d; ++t)
      acc = f->add(acc, f->mul(g.code_at(t), g.code_at(t + int(shift))));
    if (acc != 0) return false;
  }
  return true;
}

}  // namespace

DivisorIterator::DivisorIterator(Factorization fz) : fact_(std::move(fz)) {
  if (fact_.target.degree() > 4096)
    fail(Errc::range_exceeded, "target degree exceeds the scan guard");
  exps_.assign(fact_.factors.size(), 0);
  powers_.resize(fact_.factors.size());
  for (std::size_t i = 0; i < fact_.factors.size(); ++i) {
    const auto& fe = fact_.factors[i];
    // total_ <= 2^20 entering each step, so this product never overflows
    total_ *= fe.multiplicity + 1;
    if (total_ > kMaxOracleDivisors)
      fail(Errc::range_exceeded, "divisor count exceeds the scan guard");
    powers_[i].reserve(std::size_t(fe.multiplicity) + 1);
    powers_[i].push_back(Poly::one(fact_.field));
    for (u64 e = 1; e <= fe.multiplicity; ++e)
      powers_[i].push_back(powers_[i].back() * fe.poly);
  }
  prefix_.assign(fact_.factors.size() + 1, Poly::one(fact_.field));
}

Poly DivisorIterator::current() {
  if (done_) fail(Errc::invalid_input, "iterator is exhausted");
  for (std::size_t i = dirty_; i < exps_.size(); ++i)
    prefix_[i + 1] = prefix_[i] * powers_[i][std::size_t(exps_[i])];
  dirty_ = exps_.size();
  const Poly& g = prefix_[exps_.size()];
  if (!divides(g, fact_.target))
    fail(Errc::invalid_input, "internal: assembled divisor does not divide the target");
  return g;
}

void DivisorIterator::advance() {
  if (done_) fail(Errc::invalid_input, "iterator is exhausted");
  std::size_t j = exps_.size();
  while (j > 0) {
    const std::size_t i = j - 1;
    const u64 deg_i = u64(fact_.factors[i].poly.degree());
    if (++exps_[i] <= fact_.factors[i].multiplicity) {
      degree_ += deg_i;
      break;
    }
    degree_ -= deg_i * fact_.factors[i].multiplicity;
    exps_[i] = 0;
    --j;
  }
  if (j == 0) {
    done_ = true;
    return;
  }
  dirty_ = std::min(dirty_, j - 1);
}

DivisorIterator all_divisors(const Factorization& fz) { return DivisorIterator(fz); }

std::vector<Poly> oracle_selfdual_search(const FieldPtr& field, u64 n, int a) {
  if (a != 1 && a != -1) fail(Errc::invalid_input, "shift constant must be +1 or -1");
  if (n < 1) fail(Errc::invalid_input, "length must be >= 1");
  if (a == -1 && field->characteristic() == 2)
    fail(Errc::negacyclic_trivial_in_char_two,
         "negacyclic equals cyclic in characteristic 2; use a = +1");
  if (n > kMaxOracleLength) fail(Errc::range_exceeded, "length exceeds the scan guard");

  DivisorIterator it = all_divisors(factor_xn_minus_a(field, n, a));
  std::vector<Poly> out;
  if (n % 2 != 0) return out;  // no divisor can have degree n/2
  const u64 half = n / 2;
  for (; !it.done(); it.advance()) {
    if (it.current_degree() != half) continue;
    Poly g = it.current();
    if (generator_matrix_self_orthogonal(field, g, half)) out.push_back(g);
  }
  return out;
}

Matrix nullspace_dual(const ConstacyclicCode& code) {
  return nullspace(generator_matrix(code));
}

}  // namespace selfdual
