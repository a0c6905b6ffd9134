#ifndef TNC_CODES_HPP
#define TNC_CODES_HPP

#include <string>
#include <vector>

#include "tnc/char_sums.hpp"
#include "tnc/field.hpp"

namespace tnc {

/// The ordered defining set D = {x in F_{q^m}^* : Tr(N(x)) + a = 0}, where the
/// norm goes down to F_{q^m2} and the trace from there to F_q. Elements are
/// kept in ascending exponent order, which fixes the codeword coordinate
/// order.
struct DefiningSet {
    FieldPtr field;
    Elem a_value;   // the shift a: zero or an element of F_q^*
    bool shortened = false;
    std::vector<i64> exps; // exponents of the elements, ascending

    const TowerSpec& spec() const { return field->spec(); }
    i64 size() const { return static_cast<i64>(exps.size()); }
    Elem element(i64 i) const { return Elem{exps[static_cast<size_t>(i)]}; }
    bool is_a0() const { return a_value.is_zero(); }
    bool is_a1() const { return a_value == kOne; }
};

/// Weight histogram of a code, (w, A_w) pairs in ascending weight order
/// including (0, A_0). n is the code length and k the actual dimension
/// (k = m1 exactly when no nonzero message gives the zero codeword).
struct WeightDistribution {
    i64 n = 0;
    i64 k = 0;
    std::vector<std::pair<i64, i64>> counts;

    i64 total() const;
    std::vector<std::pair<i64, i64>> nonzero() const;
    i64 w_min() const; // least nonzero weight
    i64 w_max() const;
    i64 a0() const;
    /// "1 + A_{w1} z^{w1} + ..." in ascending weight order.
    std::string enumerator() const;
    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

struct LinearCode {
    DefiningSet D;
    WeightDistribution wd;

    i64 n() const { return wd.n; }
    i64 k() const { return wd.k; }
    i64 q() const { return D.spec().q; }
};

/// D for a in {0, 1}. a = 0 requires m2 > 1 (otherwise D is empty).
DefiningSet defining_set(FieldPtr field, i64 a);

/// D for an arbitrary a in F_q^*; equal as a set to c^-1 * D(1) for any c
/// with N(c) = 1/a.
DefiningSet defining_set_general_a(FieldPtr field, Elem a);

/// One representative per F_q^*-orbit (minimum exponent), giving the
/// shortened set D_1 with D = F_q^* * D_1. Requires a = 0 and an unshortened
/// input.
DefiningSet shorten(const DefiningSet& D);

/// Codeword c(b) = (Tr_{q^m1/q}(b * N_{q^m/q^m1}(d_i)))_i for b in F_{q^m1}.
std::vector<Elem> codeword(const DefiningSet& D, Elem b);

/// Exact weight histogram by full enumeration of all q^m1 messages.
WeightDistribution weight_distribution(const DefiningSet& D);

LinearCode build_code(const DefiningSet& D);

/// Weight of c(b) computed from the closed expression in delta(b) (a = 0) or
/// omega(b) (a = 1) instead of coordinate counting.
i64 weight_via_sums(const ExpSums& sums, Elem b, i64 a);

/// Which closed-form weight table a parameter set falls under.
enum class EnumeratorCase {
    one_weight,
    theorem_4_2,
    theorem_4_5,
    theorem_4_8,
    corollary_4_10,
};

const char* enumerator_case_name(EnumeratorCase c);

struct PredictedEnumerator {
    EnumeratorCase label;
    i64 n = 0;
    i64 k = 0;
    std::vector<std::pair<i64, i64>> weights; // (w, frequency), ascending by w

    std::string enumerator() const;
    /// As a WeightDistribution including the zero word, for direct comparison.
    WeightDistribution to_distribution() const;
};

/// Exact integer weights/frequencies from the closed-form tables. Throws
/// hypothesis_mismatch when no case applies (the message names the failing
/// condition) and degenerate_case for a = 0 with (m1, m2) = (2, 2).
PredictedEnumerator predicted_enumerator(const TowerSpec& spec, i64 a, bool shortened);

} // namespace tnc

#endif
