#include "tnc/intmath.hpp"

#include <algorithm>

namespace tnc {

std::string i128_to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    std::string s;
    while (u > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

i64 ipow(i64 base, i64 exp) {
    if (exp < 0) throw std::overflow_error("ipow: negative exponent");
    i128 r = 1;
    for (i64 i = 0; i < exp; ++i) {
        r *= base;
        if (r > i128(INT64_MAX)) throw std::overflow_error("ipow: overflow");
    }
    return static_cast<i64>(r);
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
    std::vector<std::pair<i64, int>> out;
    for (i64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int mult = 0;
            while (n % d == 0) {
                n /= d;
                ++mult;
            }
            out.emplace_back(d, mult);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

i64 exact_div(i128 num, i128 den) {
    if (den == 0 || num % den != 0)
        throw std::logic_error("exact_div: " + i128_to_string(num) + " not divisible by " + i128_to_string(den));
    i128 r = num / den;
    if (r > i128(INT64_MAX) || r < i128(INT64_MIN)) throw std::overflow_error("exact_div: overflow");
    return static_cast<i64>(r);
}

} // namespace tnc
