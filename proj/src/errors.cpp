#include "tnc/errors.hpp"

namespace tnc {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::not_prime: return "NotPrime";
        case Errc::field_too_large: return "FieldTooLarge";
        case Errc::invalid_divisibility: return "InvalidDivisibility";
        case Errc::division_by_zero: return "DivisionByZero";
        case Errc::degree_not_dividing: return "DegreeNotDividing";
        case Errc::not_in_subfield: return "NotInSubfield";
        case Errc::zero_argument: return "ZeroArgument";
        case Errc::not_semiprimitive: return "NotSemiprimitive";
        case Errc::order_two: return "OrderTwo";
        case Errc::even_characteristic: return "EvenCharacteristic";
        case Errc::zero_b: return "ZeroB";
        case Errc::not_integral: return "NotIntegral";
        case Errc::unsupported_case: return "UnsupportedCase";
        case Errc::empty_defining_set: return "EmptyDefiningSet";
        case Errc::already_shortened: return "AlreadyShortened";
        case Errc::wrong_subfield: return "WrongSubfield";
        case Errc::hypothesis_mismatch: return "HypothesisMismatch";
        case Errc::degenerate_case: return "DegenerateCase";
        case Errc::non_integral_solution: return "NonIntegralSolution";
        case Errc::non_integral_mu: return "NonIntegralMu";
        case Errc::not_projective: return "NotProjective";
        case Errc::parameter_mismatch: return "ParameterMismatch";
        case Errc::invalid_argument: return "InvalidArgument";
    }
    return "UnknownError";
}

} // namespace tnc
