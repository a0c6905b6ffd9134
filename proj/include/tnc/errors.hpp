#ifndef TNC_ERRORS_HPP
#define TNC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tnc {

/// Error categories raised by the library. Each value corresponds to a
/// documented failure mode of one of the public operations.
enum class Errc {
    not_prime,
    field_too_large,
    invalid_divisibility,
    division_by_zero,
    degree_not_dividing,
    not_in_subfield,
    zero_argument,
    not_semiprimitive,
    order_two,
    even_characteristic,
    zero_b,
    not_integral,
    unsupported_case,
    empty_defining_set,
    already_shortened,
    wrong_subfield,
    hypothesis_mismatch,
    degenerate_case,
    non_integral_solution,
    non_integral_mu,
    not_projective,
    parameter_mismatch,
    invalid_argument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

} // namespace tnc

#endif
