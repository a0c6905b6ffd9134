// Test-only reference implementations, kept independent of the production
// code paths: field arithmetic is done directly on coefficient vectors (no
// log/antilog tables), and the exponential sums are evaluated as literal
// triple loops over the definitions. The only shared input is the modulus
// polynomial, so table-driven arithmetic is checked against schoolbook
// arithmetic in the same concrete field.

#ifndef TNC_TESTS_ORACLES_HPP
#define TNC_TESTS_ORACLES_HPP

#include <complex>
#include <numbers>
#include <vector>

#include "tnc/char_sums.hpp"
#include "tnc/field.hpp"

namespace tnc::oracle {

struct PolyField {
    i64 p = 0;
    i64 n = 0;             // extension degree over F_p
    i64 order = 0;         // p^n
    std::vector<i64> mod;  // modulus coefficients, degree n

    using Elt = std::vector<i64>; // length n, coefficients in [0, p)

    static PolyField attached_to(const Field& f) {
        PolyField pf;
        pf.p = f.p();
        pf.mod = f.modulus();
        pf.n = static_cast<i64>(pf.mod.size()) - 1;
        pf.order = 1;
        for (i64 i = 0; i < pf.n; ++i) pf.order *= pf.p;
        return pf;
    }

    Elt zero() const { return Elt(static_cast<size_t>(n), 0); }
    Elt one() const {
        Elt e = zero();
        e[0] = 1;
        return e;
    }

    Elt from_coords(i64 c) const {
        Elt e = zero();
        for (i64 i = 0; i < n; ++i) {
            e[static_cast<size_t>(i)] = c % p;
            c /= p;
        }
        return e;
    }

    i64 to_coords(const Elt& e) const {
        i64 c = 0;
        for (size_t i = e.size(); i-- > 0;) c = c * p + e[i];
        return c;
    }

    Elt add(const Elt& a, const Elt& b) const {
        Elt c = zero();
        for (i64 i = 0; i < n; ++i) c[static_cast<size_t>(i)] = (a[static_cast<size_t>(i)] + b[static_cast<size_t>(i)]) % p;
        return c;
    }

    Elt mul(const Elt& a, const Elt& b) const {
        std::vector<i64> prod(static_cast<size_t>(2 * n - 1), 0);
        for (i64 i = 0; i < n; ++i) {
            if (a[static_cast<size_t>(i)] == 0) continue;
            for (i64 j = 0; j < n; ++j)
                prod[static_cast<size_t>(i + j)] =
                    (prod[static_cast<size_t>(i + j)] + a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)]) % p;
        }
        // reduce by the monic modulus
        for (i64 d = 2 * n - 2; d >= n; --d) {
            i64 c = prod[static_cast<size_t>(d)];
            if (c == 0) continue;
            prod[static_cast<size_t>(d)] = 0;
            for (i64 i = 0; i < n; ++i)
                prod[static_cast<size_t>(d - n + i)] =
                    ((prod[static_cast<size_t>(d - n + i)] - c * mod[static_cast<size_t>(i)]) % p + p) % p;
        }
        prod.resize(static_cast<size_t>(n));
        return prod;
    }

    bool is_zero(const Elt& a) const {
        for (i64 c : a)
            if (c != 0) return false;
        return true;
    }

    Elt pow(Elt base, i128 k) const {
        Elt r = one();
        while (k > 0) {
            if (k & 1) r = mul(r, base);
            base = mul(base, base);
            k >>= 1;
        }
        return r;
    }

    /// Absolute trace down to F_p of an element of the subfield of order
    /// p^sub_deg, as an integer (sums the Frobenius conjugates).
    i64 trace_to_prime(const Elt& x, i64 sub_deg) const {
        Elt acc = zero();
        Elt conj = x;
        for (i64 j = 0; j < sub_deg; ++j) {
            acc = add(acc, conj);
            conj = pow(conj, p);
        }
        for (i64 i = 1; i < n; ++i)
            if (acc[static_cast<size_t>(i)] != 0) throw std::logic_error("oracle trace not in the prime field");
        return acc[0];
    }
};

inline Cplx zeta(i64 p, i64 k) {
    double a = 2.0 * std::numbers::pi * static_cast<double>(((k % p) + p) % p) / static_cast<double>(p);
    return Cplx(std::cos(a), std::sin(a));
}

/// Literal triple sums for both exponential sums over a tower field,
/// evaluated with oracle arithmetic only.
struct TripleSums {
    Cplx omega;
    Cplx delta;
};

inline TripleSums naive_triple_sums(const Field& f, Elem b) {
    const TowerSpec& sp = f.spec();
    PolyField pf = PolyField::attached_to(f);
    const i64 A = f.group_order() / (f.subfield_order(sp.m1) - 1);
    const i64 B = f.group_order() / (f.subfield_order(sp.m2) - 1);

    // collect F_q^* = elements fixed by x -> x^q, via oracle arithmetic
    std::vector<PolyField::Elt> fq_star;
    for (i64 c = 1; c < pf.order; ++c) {
        PolyField::Elt x = pf.from_coords(c);
        PolyField::Elt xq = pf.pow(x, sp.q);
        if (xq == x) fq_star.push_back(x);
    }

    PolyField::Elt bo = pf.from_coords(f.coords(b));
    Cplx om(0, 0), de(0, 0);
    for (i64 c = 1; c < pf.order; ++c) {
        PolyField::Elt x = pf.from_coords(c);
        PolyField::Elt xa = pf.pow(x, A); // in F_{q^m1}
        PolyField::Elt xb = pf.pow(x, B); // in F_{q^m2}
        for (const auto& y : fq_star) {
            for (const auto& z : fq_star) {
                Cplx chi1 = zeta(sp.p, pf.trace_to_prime(pf.mul(pf.mul(y, bo), xa), sp.t * sp.m1));
                Cplx chi2 = zeta(sp.p, pf.trace_to_prime(pf.mul(z, xb), sp.t * sp.m2));
                Cplx chi = zeta(sp.p, pf.trace_to_prime(z, sp.t));
                om += chi1 * chi2 * chi;
                de += chi1 * chi2;
            }
        }
    }
    return TripleSums{om, de};
}

} // namespace tnc::oracle

#endif
