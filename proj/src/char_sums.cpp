#include "tnc/char_sums.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>

#include "parallel.hpp"

namespace tnc {

namespace {

std::vector<Cplx> unit_roots(i64 n) {
    std::vector<Cplx> z(static_cast<size_t>(n));
    for (i64 k = 0; k < n; ++k) {
        double a = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        z[static_cast<size_t>(k)] = Cplx(std::cos(a), std::sin(a));
    }
    return z;
}

} // namespace

i64 round_to_integer(Cplx z, Tolerance tol, const char* what) {
    double re = z.real();
    i64 k = static_cast<i64>(std::llround(re));
    double bound = std::max(tol.abs, tol.rel * (1.0 + std::abs(z)));
    if (std::abs(re - static_cast<double>(k)) > bound || std::abs(z.imag()) > bound) {
        std::ostringstream os;
        os << what << " = (" << z.real() << ", " << z.imag() << ") is not integral within tolerance";
        throw Error(Errc::not_integral, os.str());
    }
    return k;
}

bool approx_equal(Cplx a, Cplx b, Tolerance tol) {
    double bound = std::max(tol.abs, tol.rel * (1.0 + std::max(std::abs(a), std::abs(b))));
    return std::abs(a - b) <= bound;
}

i64 ValueDistribution::total() const {
    i64 t = 0;
    for (auto& [v, f] : pairs) t += f;
    return t;
}

std::string ValueDistribution::to_string() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto& [v, f] : pairs) {
        if (!first) os << ", ";
        first = false;
        os << v << ": " << f;
    }
    os << "}";
    return os.str();
}

Characters::Characters(FieldPtr field, i64 d) : field_(std::move(field)), d_(d), p_(field_->p()) {
    sub_order_ = field_->subfield_order(d);
    const i64 M = sub_order_ - 1;
    (void)field_->subfield_generator(d); // validates d | m
    trace_to_p_.resize(static_cast<size_t>(M));
    for (i64 i = 0; i < M; ++i)
        trace_to_p_[static_cast<size_t>(i)] =
            static_cast<int32_t>(field_->trace_to_prime(field_->subfield_element(d_, i), d_));
    zeta_p_ = unit_roots(p_);
    zeta_group_ = unit_roots(M);
}

Cplx Characters::additive(Elem x) const {
    if (x.is_zero()) return Cplx(1.0, 0.0);
    i64 i = field_->subfield_index(x, d_);
    return zeta_p_[static_cast<size_t>(trace_to_p_[static_cast<size_t>(i)])];
}

Cplx Characters::multiplicative(i64 j, Elem x) const {
    if (x.is_zero()) throw Error(Errc::zero_argument, "multiplicative character of zero");
    const i64 M = sub_order_ - 1;
    i64 i = field_->subfield_index(x, d_);
    i64 k = static_cast<i64>(i128(((j % M) + M) % M) * i % M);
    return zeta_group_[static_cast<size_t>(k)];
}

Cplx Characters::gauss_direct(i64 j) const {
    const i64 M = sub_order_ - 1;
    j = ((j % M) + M) % M;
    Cplx acc(0.0, 0.0);
    i64 ji = 0;
    for (i64 i = 0; i < M; ++i) {
        acc += zeta_group_[static_cast<size_t>(ji)] * zeta_p_[static_cast<size_t>(trace_to_p_[static_cast<size_t>(i)])];
        ji += j;
        if (ji >= M) ji -= M;
    }
    return acc;
}

const std::vector<Cplx>& Characters::all_gauss() const {
    std::call_once(gauss_once_, [this] {
        const i64 M = sub_order_ - 1;
        gauss_cache_.resize(static_cast<size_t>(M));
        auto chunks = detail::map_ranges<int>(M, [this, M](i64 lo, i64 hi) {
            for (i64 j = lo; j < hi; ++j) gauss_cache_[static_cast<size_t>(j)] = gauss_direct(j);
            return 0;
        });
        (void)chunks;
    });
    return gauss_cache_;
}

std::optional<i64> semiprimitive_least_j(i64 p, i64 N) {
    if (N < 3) return std::nullopt;
    i64 v = 1;
    for (i64 j = 1; j <= 2 * N; ++j) {
        v = v * (p % N) % N;
        if (v == N - 1) return j;
        if (v == 1) return std::nullopt; // cycled back without reaching -1
        if (v == 0) return std::nullopt; // p shares a factor with N
    }
    return std::nullopt;
}

Cplx gauss_sum_semiprimitive(i64 N, i64 s, i64 p, i64 r) {
    if (N == 2) throw Error(Errc::order_two, "order 2 is excluded; use the quadratic closed form");
    if (N < 2) throw Error(Errc::invalid_argument, "character order must be at least 3");
    if (!is_prime(p)) throw Error(Errc::invalid_argument, "p must be prime");
    if (s < 1 || s > N - 1) throw Error(Errc::invalid_argument, "power index s must satisfy 1 <= s <= N-1");
    auto j = semiprimitive_least_j(p, N);
    if (!j) throw Error(Errc::not_semiprimitive, "no j with p^j = -1 (mod N) for p = " + std::to_string(p) +
                                                     ", N = " + std::to_string(N));
    // r = p^(2*j*gamma)
    i64 E = 0;
    for (i64 v = 1; v < r; v *= p) ++E;
    if (ipow(p, E) != r || E % (2 * *j) != 0)
        throw Error(Errc::invalid_argument, "field size r must be p^(2*j*gamma), j = " + std::to_string(*j));
    const i64 gamma = E / (2 * *j);
    // parity of (p^j + 1)/N via p^j mod 2N
    i64 v2n = 1;
    for (i64 i = 0; i < *j; ++i) v2n = v2n * (p % (2 * N)) % (2 * N);
    const bool quotient_odd = (v2n + 1) % (2 * N) == N;
    i64 sign;
    if (N % 2 == 0 && p % 2 == 1 && gamma % 2 == 1 && quotient_odd)
        sign = (s % 2 == 0) ? 1 : -1;
    else
        sign = (gamma % 2 == 1) ? 1 : -1; // (-1)^(gamma-1)
    return Cplx(static_cast<double>(sign) * std::sqrt(static_cast<double>(r)), 0.0);
}

Cplx gauss_quadratic(i64 p, i64 t) {
    if (p == 2) throw Error(Errc::even_characteristic, "quadratic character requires odd characteristic");
    if (!is_prime(p) || t < 1) throw Error(Errc::invalid_argument, "p must be an odd prime and t >= 1");
    double root = std::sqrt(static_cast<double>(ipow(p, t)));
    double lead = (t % 2 == 1) ? 1.0 : -1.0; // (-1)^(t-1)
    if (p % 4 == 1) return Cplx(lead * root, 0.0);
    // p = 3 (mod 4): extra factor i^t
    switch (t % 4) {
        case 0: return Cplx(lead * root, 0.0);
        case 1: return Cplx(0.0, lead * root);
        case 2: return Cplx(-lead * root, 0.0);
        default: return Cplx(0.0, -lead * root);
    }
}

ExpSums::ExpSums(FieldPtr field, Tolerance tol) : field_(std::move(field)), tol_(tol) {
    const TowerSpec& sp = field_->spec();
    const i64 q = sp.q;
    M1_ = field_->subfield_order(sp.m1) - 1;
    M2_ = field_->subfield_order(sp.m2) - 1;
    d_ = std::gcd(M1_, M2_); // = q^e - 1

    Characters c1(field_, sp.m1);
    Characters c2(field_, sp.m2);
    Characters cq(field_, 1);

    const i64 du = M1_ / (q - 1);
    const i64 dv = M2_ / (q - 1);

    // The triple sum factors through x = alpha^i into a y-side term indexed
    // by i mod M1 and a z-side term indexed by i mod M2. Grouped by the
    // z-side residue r, the y-side indices sweep a coset of d*Z_{M1},
    // d = gcd(M1, M2), hitting each entry (q^m-1)d/(M1 M2) times because
    // lcm(M1, M2) divides q^m - 1. That leaves an O(M2) kernel per b.
    mult_ = exact_div(i128(field_->group_order()) * d_, i128(M1_) * M2_);

    z_omega_.assign(static_cast<size_t>(M2_), Cplx(0, 0));
    z_delta_.assign(static_cast<size_t>(M2_), Cplx(0, 0));
    for (i64 i = 0; i < M2_; ++i) {
        Cplx ao(0, 0), ad(0, 0);
        for (i64 v = 0; v < q - 1; ++v) {
            i64 tz = c2.trace_table((i + dv * v) % M2_);
            ad += c2.zeta_p(tz);
            ao += c2.zeta_p((tz + cq.trace_table(v)) % field_->p());
        }
        z_omega_[static_cast<size_t>(i)] = ao;
        z_delta_[static_cast<size_t>(i)] = ad;
    }
    w_cosets_.assign(static_cast<size_t>(d_), Cplx(0, 0));
    for (i64 k = 0; k < M1_; ++k) {
        Cplx acc(0, 0);
        for (i64 u = 0; u < q - 1; ++u) acc += c1.zeta_p(c1.trace_table((k + du * u) % M1_));
        w_cosets_[static_cast<size_t>(k % d_)] += acc;
    }

    if (field_->p() == 2) {
        // every character value is +-1, so all factors are small integers and
        // the evaluation is exact
        binary_ = true;
        iw_cosets_.assign(static_cast<size_t>(d_), 0);
        szo_.resize(static_cast<size_t>(M2_));
        szd_.resize(static_cast<size_t>(M2_));
        for (i64 j = 0; j < d_; ++j)
            iw_cosets_[static_cast<size_t>(j)] = std::llround(w_cosets_[static_cast<size_t>(j)].real());
        for (i64 i = 0; i < M2_; ++i) {
            szo_[static_cast<size_t>(i)] =
                static_cast<int16_t>(std::lround(z_omega_[static_cast<size_t>(i)].real()));
            szd_[static_cast<size_t>(i)] =
                static_cast<int16_t>(std::lround(z_delta_[static_cast<size_t>(i)].real()));
        }
    }
}

std::pair<Cplx, Cplx> ExpSums::raw_sums(i64 s) const {
    i64 j = s % d_;
    if (binary_) {
        i64 om = 0, de = 0;
        for (i64 r = 0; r < M2_; ++r) {
            i64 wv = iw_cosets_[static_cast<size_t>(j)];
            om += wv * szo_[static_cast<size_t>(r)];
            de += wv * szd_[static_cast<size_t>(r)];
            if (++j == d_) j = 0;
        }
        return {Cplx(static_cast<double>(om * mult_), 0.0), Cplx(static_cast<double>(de * mult_), 0.0)};
    }
    Cplx om(0, 0), de(0, 0);
    for (i64 r = 0; r < M2_; ++r) {
        Cplx wv = w_cosets_[static_cast<size_t>(j)];
        om += wv * z_omega_[static_cast<size_t>(r)];
        de += wv * z_delta_[static_cast<size_t>(r)];
        if (++j == d_) j = 0;
    }
    return {om * static_cast<double>(mult_), de * static_cast<double>(mult_)};
}

i64 ExpSums::b_index(Elem b) const {
    if (b.is_zero()) throw Error(Errc::zero_b, "b must be a nonzero element of F_q^m1");
    return field_->subfield_index(b, field_->spec().m1);
}

i64 ExpSums::omega(Elem b) const { return round_to_integer(raw_sums(b_index(b)).first, tol_, "omega(b)"); }

i64 ExpSums::delta(Elem b) const { return round_to_integer(raw_sums(b_index(b)).second, tol_, "delta(b)"); }

void ExpSums::compute_distributions() const {
    using Hist = std::map<i64, i64>;
    struct Two {
        Hist om, de;
    };
    auto chunks = detail::map_ranges<Two>(M1_, [this](i64 lo, i64 hi) {
        Two h;
        for (i64 s = lo; s < hi; ++s) {
            auto [o, d] = raw_sums(s);
            ++h.om[round_to_integer(o, tol_, "omega(b)")];
            ++h.de[round_to_integer(d, tol_, "delta(b)")];
        }
        return h;
    });
    Hist om, de;
    for (auto& c : chunks) {
        for (auto& [v, f] : c.om) om[v] += f;
        for (auto& [v, f] : c.de) de[v] += f;
    }
    omega_dist_.pairs.assign(om.begin(), om.end());
    delta_dist_.pairs.assign(de.begin(), de.end());
}

ValueDistribution ExpSums::omega_distribution() const {
    std::call_once(dist_once_, [this] { compute_distributions(); });
    return omega_dist_;
}

ValueDistribution ExpSums::delta_distribution() const {
    std::call_once(dist_once_, [this] { compute_distributions(); });
    return delta_dist_;
}

ValueDistribution omega_closed_distribution(const TowerSpec& sp) {
    const i64 q = sp.q;
    const i128 Qm1 = ipow(q, sp.m) - 1;
    const i128 den = i128(ipow(q, sp.m1) - 1) * (ipow(q, sp.m2) - 1);
    const i64 M1 = ipow(q, sp.m1) - 1;
    ValueDistribution out;
    if (sp.e == 1 && sp.l == 1) {
        out.pairs.emplace_back(exact_div(-Qm1 * (q - 1), den), M1);
    } else if (sp.e == 2 && sp.l == 1) {
        const i64 h = (sp.m1 + sp.m2) / 2;
        const i64 sigma = (h % 2 == 0) ? 1 : -1;
        i64 v1 = exact_div(-Qm1 * (q - 1) * (1 + i128(sigma) * ipow(q, h + 1)), den);
        i64 v2 = exact_div(-Qm1 * (q - 1) * (1 - i128(sigma) * ipow(q, h)), den);
        out.pairs.emplace_back(v1, M1 / (q + 1));
        out.pairs.emplace_back(v2, q * (M1 / (q + 1)));
    } else if (sp.e == 1 && sp.l == 2) {
        const i64 h2 = (sp.m1 + sp.m2 + 1) / 2;
        i64 v1 = exact_div(Qm1 * (q - 1) * (-1 - i128(ipow(q, h2))), den);
        i64 v2 = exact_div(Qm1 * (q - 1) * (-1 + i128(ipow(q, h2))), den);
        out.pairs.emplace_back(v1, M1 / 2);
        out.pairs.emplace_back(v2, M1 / 2);
    } else {
        throw Error(Errc::unsupported_case,
                    "no closed form for (e, l) = (" + std::to_string(sp.e) + ", " + std::to_string(sp.l) + ")");
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    if (out.total() != M1) throw std::logic_error("omega distribution frequencies do not sum to q^m1 - 1");
    return out;
}

ValueDistribution delta_closed_distribution(const TowerSpec& sp) {
    const i64 q = sp.q;
    const i128 Qm1 = ipow(q, sp.m) - 1;
    const i128 den = i128(ipow(q, sp.m1) - 1) * (ipow(q, sp.m2) - 1);
    const i64 M1 = ipow(q, sp.m1) - 1;
    const i128 qm1sq = i128(q - 1) * (q - 1);
    ValueDistribution out;
    if (sp.e == 1) {
        out.pairs.emplace_back(exact_div(Qm1 * qm1sq, den), M1);
    } else if (sp.e == 2) {
        const i64 h = (sp.m1 + sp.m2) / 2;
        const i64 sigma = (h % 2 == 0) ? 1 : -1;
        i64 v1 = exact_div(Qm1 * qm1sq * (1 + i128(sigma) * ipow(q, h + 1)), den);
        i64 v2 = exact_div(Qm1 * qm1sq * (1 - i128(sigma) * ipow(q, h)), den);
        out.pairs.emplace_back(v1, M1 / (q + 1));
        out.pairs.emplace_back(v2, q * (M1 / (q + 1)));
    } else {
        throw Error(Errc::unsupported_case, "no closed form for e = " + std::to_string(sp.e));
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    if (out.total() != M1) throw std::logic_error("delta distribution frequencies do not sum to q^m1 - 1");
    return out;
}

CharLayerReport check_character_layer(FieldPtr field, i64 d, Tolerance tol) {
    Characters ch(field, d);
    const i64 r = ch.field_order();
    const i64 M = r - 1;
    const i64 p = field->p();
    CharLayerReport rep;
    rep.field_order = r;
    auto fail = [&rep](const std::string& msg) {
        if (rep.first_failure.empty()) rep.first_failure = msg;
    };

    // additive orthogonality: sum over the whole field of chi(a*x)
    rep.additive_orthogonality = true;
    for (i64 a = -1; a < M; ++a) { // a = -1 encodes a = 0
        Cplx acc(1.0, 0.0);        // x = 0 term
        if (a < 0) {
            acc = Cplx(static_cast<double>(r), 0.0);
        } else {
            for (i64 i = 0; i < M; ++i) acc += ch.zeta_p(ch.trace_table((a + i) % M));
        }
        Cplx want = (a < 0) ? Cplx(static_cast<double>(r), 0.0) : Cplx(0.0, 0.0);
        if (!approx_equal(acc, want, tol)) {
            rep.additive_orthogonality = false;
            fail("additive orthogonality at a-index " + std::to_string(a));
            break;
        }
    }

    // multiplicative orthogonality: sum over F^* of lambda^j(x)
    rep.multiplicative_orthogonality = true;
    for (i64 j = 0; j < M; ++j) {
        Cplx acc(0, 0);
        i64 ji = 0;
        for (i64 i = 0; i < M; ++i) {
            acc += ch.zeta_group(ji);
            ji += j;
            if (ji >= M) ji -= M;
        }
        Cplx want = (j == 0) ? Cplx(static_cast<double>(M), 0.0) : Cplx(0.0, 0.0);
        if (!approx_equal(acc, want, tol)) {
            rep.multiplicative_orthogonality = false;
            fail("multiplicative orthogonality at index " + std::to_string(j));
            break;
        }
    }

    const auto& G = ch.all_gauss();
    rep.trivial_gauss = approx_equal(G[0], Cplx(-1.0, 0.0), tol);
    if (!rep.trivial_gauss) fail("G(trivial) != -1");

    rep.gauss_modulus = true;
    const double root = std::sqrt(static_cast<double>(r));
    for (i64 j = 1; j < M; ++j) {
        if (std::abs(std::abs(G[static_cast<size_t>(j)]) - root) > std::max(tol.abs, tol.rel * (1.0 + root))) {
            rep.gauss_modulus = false;
            fail("|G| != sqrt(r) at index " + std::to_string(j));
            break;
        }
    }

    // G(conj(psi)) = psi(-1) * conj(G(psi))
    rep.conjugation = true;
    for (i64 j = 0; j < M; ++j) {
        Cplx lhs = G[static_cast<size_t>((M - j) % M)];
        double sign = (p == 2) ? 1.0 : ((i128(j) * (M / 2) % M == 0) ? 1.0 : -1.0);
        Cplx rhs = sign * std::conj(G[static_cast<size_t>(j)]);
        if (!approx_equal(lhs, rhs, tol)) {
            rep.conjugation = false;
            fail("conjugation identity at index " + std::to_string(j));
            break;
        }
    }

    // Fourier expansion of the additive character on F^*
    rep.fourier = true;
    for (i64 i = 0; i < M && rep.fourier; ++i) {
        Cplx acc(0, 0);
        for (i64 j = 0; j < M; ++j) {
            i64 ji = static_cast<i64>(i128(j) * i % M);
            acc += G[static_cast<size_t>((M - j) % M)] * ch.zeta_group(ji);
        }
        acc /= static_cast<double>(M);
        if (!approx_equal(acc, ch.zeta_p(ch.trace_table(i)), tol)) {
            rep.fourier = false;
            fail("fourier expansion at element index " + std::to_string(i));
        }
    }

    rep.semiprimitive = true;
    for (i64 N = 3; N <= M; ++N) {
        if (M % N != 0) continue;
        if (!semiprimitive_least_j(p, N)) continue;
        for (i64 s = 1; s < N; ++s) {
            Cplx closed = gauss_sum_semiprimitive(N, s, p, r);
            Cplx direct = G[static_cast<size_t>(s * (M / N) % M)];
            if (!approx_equal(closed, direct, tol)) {
                rep.semiprimitive = false;
                fail("semiprimitive closed form at N = " + std::to_string(N) + ", s = " + std::to_string(s));
                break;
            }
            ++rep.semiprimitive_cases;
        }
        if (!rep.semiprimitive) break;
    }

    if (p == 2) {
        rep.quadratic = true;
    } else {
        Cplx closed = gauss_quadratic(p, field->spec().t * d);
        rep.quadratic = approx_equal(closed, G[static_cast<size_t>(M / 2)], tol);
        if (!rep.quadratic) fail("quadratic closed form");
    }
    return rep;
}

} // namespace tnc
