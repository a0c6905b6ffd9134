#ifndef TNC_FIELD_HPP
#define TNC_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tnc/errors.hpp"
#include "tnc/intmath.hpp"

namespace tnc {

inline constexpr i64 kDefaultTableCap = i64(1) << 20;

/// Parameter bundle for the field tower F_p <= F_q <= F_{q^m1}, F_{q^m2} <= F_{q^m},
/// with q = p^t. The derived quantities e = gcd(m1, m2) and l = gcd(m1/e, q-1)
/// are always recomputed here, never accepted from callers.
struct TowerSpec {
    i64 p = 0;
    i64 t = 0;
    i64 q = 0; // p^t
    i64 m1 = 0;
    i64 m2 = 0;
    i64 m = 0;
    i64 e = 0;
    i64 l = 0;
    i64 table_cap = kDefaultTableCap;

    /// Validates and derives (q, e, l). Throws Error with code not_prime,
    /// invalid_divisibility or field_too_large.
    static TowerSpec make(i64 p, i64 t, i64 m1, i64 m2, i64 m, i64 table_cap = kDefaultTableCap);

    i64 big_order() const { return ipow(q, m); } // |F_{q^m}|

    std::string to_string() const;

    friend bool operator==(const TowerSpec&, const TowerSpec&) = default;
};

/// Element of the big field, held as a discrete-log exponent relative to the
/// field's primitive element. ZERO is the sentinel exp = -1. The coordinate
/// vector over F_p is cached in the owning Field's antilog table.
struct Elem {
    i64 exp = -1;

    bool is_zero() const { return exp < 0; }
    friend bool operator==(const Elem&, const Elem&) = default;
};

inline constexpr Elem kZero{-1};
inline constexpr Elem kOne{0};

/// F_{p^{t*m}} realized with full log/antilog tables over a deterministic
/// irreducible modulus. All subfields of the tower live inside this one field:
/// x belongs to F_{q^d} (d | m) iff x = 0 or (q^m-1)/(q^d-1) divides exp(x).
///
/// Immutable after construction; safe to share across threads.
class Field {
  public:
    explicit Field(const TowerSpec& spec);

    const TowerSpec& spec() const { return spec_; }
    i64 p() const { return spec_.p; }
    i64 q() const { return spec_.q; }
    i64 order() const { return order_; }        // q^m
    i64 group_order() const { return order_ - 1; }

    /// Modulus coefficients c_0..c_n (c_n = 1) over F_p.
    const std::vector<i64>& modulus() const { return modulus_; }

    Elem zero() const { return kZero; }
    Elem one() const { return kOne; }
    Elem alpha() const { return Elem{1}; } // primitive element

    Elem from_exp(i64 e) const;
    /// Element with the given coordinate vector, encoded as sum c_i * p^i.
    Elem from_coords(i64 coords) const;
    i64 coords(Elem x) const { return x.is_zero() ? 0 : (*antilog_)[static_cast<size_t>(x.exp)]; }

    // Arithmetic. mul/inv/pow work on exponents, add on coordinate vectors.
    Elem add(Elem x, Elem y) const;
    Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }
    Elem neg(Elem x) const;
    Elem mul(Elem x, Elem y) const;
    Elem inv(Elem x) const; // throws division_by_zero on ZERO
    Elem pow(Elem x, i64 k) const;

    // --- subfield structure (degrees d are counted over F_q, d | m) ---

    /// Generator of F_{q^d}^*, i.e. alpha^((q^m-1)/(q^d-1)).
    Elem subfield_generator(i64 d) const;
    i64 subfield_order(i64 d) const { return ipow(spec_.q, d); }
    bool in_subfield(Elem x, i64 d) const;
    /// Index i such that x = subfield_generator(d)^i; throws not_in_subfield.
    i64 subfield_index(Elem x, i64 d) const;
    Elem subfield_element(i64 d, i64 index) const;

    /// Trace from F_{q^from} to F_{q^to}: sum of the from/to conjugates
    /// x^((q^to)^j). Requires to | from | m and x in F_{q^from}.
    Elem trace(Elem x, i64 from_deg, i64 to_deg) const;

    /// Absolute trace of x in F_{q^d} down to the prime field, as an integer
    /// in [0, p).
    i64 trace_to_prime(Elem x, i64 d) const;

    /// Norm from F_{q^m} to F_{q^to}: x^((q^m-1)/(q^to-1)), with norm(0) = 0.
    Elem norm(Elem x, i64 to_deg) const;

    /// Value of a prime-field element as an integer in [0, p).
    i64 prime_value(Elem x) const;

    /// Canonical rendering of an F_q scalar: digits for prime q, otherwise
    /// "0", "1", "g", "g^2", ... in powers of the canonical F_q generator.
    std::string fq_scalar_token(Elem x) const;

    struct Tables {
        std::vector<i64> modulus;
        i64 alpha_coords = 0;
        std::vector<uint32_t> antilog; // exponent -> coordinate vector
        std::vector<uint32_t> log;     // coordinate vector -> exponent
    };

  private:
    TowerSpec spec_;
    i64 order_ = 0;     // p^(t*m)
    i64 prime_deg_ = 0; // t*m
    std::shared_ptr<const Tables> tables_;
    const std::vector<uint32_t>* antilog_ = nullptr;
    const std::vector<uint32_t>* log_ = nullptr;
    std::vector<i64> modulus_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Builds the field for a validated spec. Construction is deterministic:
/// fixed modulus search order, fixed primitive-element search order. Results
/// are cached per (p, t*m), so repeated builds share tables.
FieldPtr build_field(const TowerSpec& spec);
FieldPtr build_field(i64 p, i64 t, i64 m1, i64 m2, i64 m, i64 table_cap = kDefaultTableCap);

} // namespace tnc

#endif
