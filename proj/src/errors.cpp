#include "selfdual/errors.hpp"

namespace selfdual {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_characteristic: return "invalid_characteristic";
    case Errc::invalid_degree: return "invalid_degree";
    case Errc::division_by_zero: return "division_by_zero";
    case Errc::field_mismatch: return "field_mismatch";
    case Errc::characteristic_two_unsupported: return "characteristic_two_unsupported";
    case Errc::invalid_input: return "invalid_input";
    case Errc::zero_constant_term: return "zero_constant_term";
    case Errc::invalid_scale: return "invalid_scale";
    case Errc::not_coprime: return "not_coprime";
    case Errc::wild_ramification: return "wild_ramification";
    case Errc::negacyclic_trivial_in_char_two: return "negacyclic_trivial_in_char_two";
    case Errc::not_a_divisor: return "not_a_divisor";
    case Errc::empty_code: return "empty_code";
    case Errc::shape_mismatch: return "shape_mismatch";
    case Errc::hypothesis_unmet: return "hypothesis_unmet";
    case Errc::no_square_root_of_minus_one: return "no_square_root_of_minus_one";
    case Errc::range_exceeded: return "range_exceeded";
    case Errc::catalog_corrupt: return "catalog_corrupt";
  }
  return "unknown";
}

}  // namespace selfdual
