#ifndef FEQ_ERROR_HPP
#define FEQ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace feq {

enum class errc {
  not_prime,
  degree_out_of_range,
  division_by_zero,
  field_mismatch,
  index_out_of_range,
  field_too_large,
  zero_polynomial,
  not_square,
  dimension_mismatch,
  zero_parameter,
  not_a_subfield,
  too_large,
  unsupported_case,
  bad_parameter_shape,
  not_a_solution,
  bad_indices,
  not_squarefree,
  parse_error,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace feq

#endif
