#pragma once

#include <stdexcept>
#include <string>

namespace selfdual {

enum class Errc {
  invalid_characteristic,
  invalid_degree,
  division_by_zero,
  field_mismatch,
  characteristic_two_unsupported,
  invalid_input,
  zero_constant_term,
  invalid_scale,
  not_coprime,
  wild_ramification,
  negacyclic_trivial_in_char_two,
  not_a_divisor,
  empty_code,
  shape_mismatch,
  hypothesis_unmet,
  no_square_root_of_minus_one,
  range_exceeded,
  catalog_corrupt,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

}  // namespace selfdual
