#ifndef TNC_INTMATH_HPP
#define TNC_INTMATH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tnc {

using i64 = std::int64_t;
using i128 = __int128;

std::string i128_to_string(i128 v);

/// base^exp with overflow detection (throws std::overflow_error).
i64 ipow(i64 base, i64 exp);

/// Ceiling of a/b for positive b.
inline i64 ceil_div(i64 a, i64 b) { return (a + b - 1) / b; }

bool is_prime(i64 n);

/// Prime factorization by trial division, (prime, multiplicity) pairs.
std::vector<std::pair<i64, int>> factorize(i64 n);

/// num/den where den must divide num exactly; throws std::logic_error otherwise.
/// Used for closed-form table values whose integrality is guaranteed.
i64 exact_div(i128 num, i128 den);

} // namespace tnc

#endif
