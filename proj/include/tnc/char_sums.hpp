#ifndef TNC_CHAR_SUMS_HPP
#define TNC_CHAR_SUMS_HPP

#include <complex>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tnc/field.hpp"

namespace tnc {

using Cplx = std::complex<double>;

/// Comparison tolerance for complex values that are asserted to be integers
/// (or to match a closed form). Magnitudes stay far below 2^53, so the
/// defaults leave a wide safety margin.
struct Tolerance {
    double rel = 1e-6;
    double abs = 1e-9;
};

/// Nearest integer to z, which must be real and integral within tol;
/// throws Error(not_integral) otherwise.
i64 round_to_integer(Cplx z, Tolerance tol = {}, const char* what = "value");

bool approx_equal(Cplx a, Cplx b, Tolerance tol = {});

/// Exact integer (value, frequency) pairs, sorted by value.
struct ValueDistribution {
    std::vector<std::pair<i64, i64>> pairs;

    i64 total() const;
    std::string to_string() const;
    friend bool operator==(const ValueDistribution&, const ValueDistribution&) = default;
};

/// Character evaluation on the subfield F_{q^d} of a tower field, d | m.
/// Precomputes the absolute-trace table of the subfield and the root-of-unity
/// tables, so single evaluations and Gauss sums are table lookups. Summation
/// is always in ascending exponent order.
class Characters {
  public:
    Characters(FieldPtr field, i64 d);

    i64 degree() const { return d_; }
    i64 field_order() const { return sub_order_; }

    /// Canonical additive character: zeta_p^(Tr to F_p). Requires x in F_{q^d}.
    Cplx additive(Elem x) const;

    /// lambda_d^j(x) for nonzero x in F_{q^d}; index 0 is the trivial character.
    Cplx multiplicative(i64 j, Elem x) const;

    /// Direct Gauss sum over F_{q^d}: sum of lambda^j(x) * chi(x) over x != 0.
    Cplx gauss_direct(i64 j) const;

    /// All Gauss sums G(lambda^j), j = 0..q^d-2 (computed once and cached).
    const std::vector<Cplx>& all_gauss() const;

    /// Absolute trace of the i-th power of the subfield generator.
    i64 trace_table(i64 i) const { return trace_to_p_[static_cast<size_t>(i)]; }

    Cplx zeta_p(i64 k) const { return zeta_p_[static_cast<size_t>(k % p_)]; }
    Cplx zeta_group(i64 k) const { return zeta_group_[static_cast<size_t>(k)]; }

  private:
    FieldPtr field_;
    i64 d_;
    i64 p_;
    i64 sub_order_;              // q^d
    std::vector<int32_t> trace_to_p_; // index i -> Tr(alpha_d^i) in [0, p)
    std::vector<Cplx> zeta_p_;
    std::vector<Cplx> zeta_group_;    // zeta_{q^d-1}^k
    mutable std::once_flag gauss_once_;
    mutable std::vector<Cplx> gauss_cache_;
};

/// Least j >= 1 with p^j = -1 (mod N), or nullopt when none exists.
std::optional<i64> semiprimitive_least_j(i64 p, i64 N);

/// Closed-form semi-primitive Gauss sum G(phi^s) of order N over F_r:
/// N >= 3, p^j = -1 (mod N) for a least j >= 1, r = p^(2*j*gamma),
/// 1 <= s <= N-1. Throws order_two for N = 2 and not_semiprimitive when no
/// such j exists.
Cplx gauss_sum_semiprimitive(i64 N, i64 s, i64 p, i64 r);

/// Closed-form quadratic Gauss sum over F_{p^t}, p odd.
Cplx gauss_quadratic(i64 p, i64 t);

/// The two exponential sums attached to a tower, evaluated for b in
/// F_{q^m1}^*:
///
///   omega(b) = sum over x in F_{q^m}^*, y, z in F_q^* of
///              chi1(y*b*x^((q^m-1)/(q^m1-1))) * chi2(z*x^((q^m-1)/(q^m2-1))) * chi(z)
///   delta(b) = the same sum without the chi(z) factor.
///
/// Both are integers; evaluation asserts integrality within the tolerance.
/// The evaluator is immutable after construction and safe to share.
class ExpSums {
  public:
    explicit ExpSums(FieldPtr field, Tolerance tol = {});

    const TowerSpec& spec() const { return field_->spec(); }

    i64 omega(Elem b) const; // throws zero_b / not_in_subfield
    i64 delta(Elem b) const;

    /// Value multisets over all b in F_{q^m1}^* (exact, order-independent).
    ValueDistribution omega_distribution() const;
    ValueDistribution delta_distribution() const;

  private:
    std::pair<Cplx, Cplx> raw_sums(i64 s) const; // (omega, delta) before rounding
    void compute_distributions() const;
    i64 b_index(Elem b) const;

    FieldPtr field_;
    Tolerance tol_;
    i64 M1_, M2_, d_, mult_;
    std::vector<Cplx> z_omega_;  // z-side factor with chi(z), indexed mod M2
    std::vector<Cplx> z_delta_;  // z-side factor without chi(z)
    std::vector<Cplx> w_cosets_; // y-side factor summed over cosets mod d = gcd(M1, M2)
    // exact integer path for p = 2, where every character value is +-1
    bool binary_ = false;
    std::vector<i64> iw_cosets_;
    std::vector<int16_t> szo_, szd_;
    mutable std::once_flag dist_once_;
    mutable ValueDistribution omega_dist_, delta_dist_;
};

/// Exact value distribution of omega(b) per the closed forms, supported for
/// (e, l) in {(1,1), (2,1), (1,2)}; throws unsupported_case otherwise.
ValueDistribution omega_closed_distribution(const TowerSpec& spec);

/// Exact value distribution of delta(b), supported for e in {1, 2}.
ValueDistribution delta_closed_distribution(const TowerSpec& spec);

/// Self-checks of the character layer on F_{q^d}: orthogonality relations,
/// G(trivial) = -1, |G| = sqrt(field order), the conjugation identity,
/// the Fourier expansion of the additive character, and closed-form vs
/// direct Gauss sums (semi-primitive orders and, for odd p, quadratic).
struct CharLayerReport {
    i64 field_order = 0;
    bool additive_orthogonality = false;
    bool multiplicative_orthogonality = false;
    bool trivial_gauss = false;
    bool gauss_modulus = false;
    bool conjugation = false;
    bool fourier = false;
    bool semiprimitive = false;
    i64 semiprimitive_cases = 0;
    bool quadratic = false; // true when p = 2 (vacuous)
    std::string first_failure;

    bool all_ok() const {
        return additive_orthogonality && multiplicative_orthogonality && trivial_gauss && gauss_modulus &&
               conjugation && fourier && semiprimitive && quadratic;
    }
};

CharLayerReport check_character_layer(FieldPtr field, i64 d, Tolerance tol = {});

} // namespace tnc

#endif
