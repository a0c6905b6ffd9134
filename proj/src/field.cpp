#include "tnc/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace tnc {

TowerSpec TowerSpec::make(i64 p, i64 t, i64 m1, i64 m2, i64 m, i64 table_cap) {
    if (!is_prime(p)) throw Error(Errc::not_prime, "p = " + std::to_string(p) + " is not prime");
    if (t < 1 || m1 < 1 || m2 < 1 || m < 1)
        throw Error(Errc::invalid_argument, "t, m1, m2, m must all be positive");
    if (m % m1 != 0 || m % m2 != 0)
        throw Error(Errc::invalid_divisibility,
                    "m1 = " + std::to_string(m1) + " and m2 = " + std::to_string(m2) +
                        " must both divide m = " + std::to_string(m));
    TowerSpec s;
    s.p = p;
    s.t = t;
    s.m1 = m1;
    s.m2 = m2;
    s.m = m;
    s.table_cap = table_cap;
    // q = p^t and q^m within the table budget.
    i128 q = 1;
    for (i64 i = 0; i < t * m; ++i) {
        q *= p;
        if (q > i128(table_cap))
            throw Error(Errc::field_too_large, "p^(t*m) = " + std::to_string(p) + "^" + std::to_string(t * m) +
                                                   " exceeds the table cap " + std::to_string(table_cap));
    }
    s.q = ipow(p, t);
    s.e = std::gcd(m1, m2);
    s.l = std::gcd(m1 / s.e, s.q - 1);
    return s;
}

std::string TowerSpec::to_string() const {
    std::ostringstream os;
    os << "p=" << p << " t=" << t << " q=" << q << " m1=" << m1 << " m2=" << m2 << " m=" << m << " e=" << e
       << " l=" << l;
    return os.str();
}

namespace {

// Dense polynomial arithmetic over F_p, used only during table construction.
using Poly = std::vector<i64>; // coefficients, index = degree

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& mod, i64 p) {
    const i64 dm = static_cast<i64>(mod.size()) - 1;
    while (static_cast<i64>(a.size()) - 1 >= dm) {
        i64 d = static_cast<i64>(a.size()) - 1;
        i64 c = a.back() % p;
        if (c != 0) {
            for (i64 i = 0; i <= dm; ++i) {
                i64 idx = d - dm + i;
                a[static_cast<size_t>(idx)] = ((a[static_cast<size_t>(idx)] - c * mod[static_cast<size_t>(i)]) % p + p) % p;
            }
        }
        a.pop_back();
        poly_trim(a);
        if (a.empty()) break;
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, i64 p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    poly_trim(c);
    return poly_mod(std::move(c), mod, p);
}

Poly poly_powmod(Poly base, i64 k, const Poly& mod, i64 p) {
    Poly r{1};
    while (k > 0) {
        if (k & 1) r = poly_mulmod(r, base, mod, p);
        base = poly_mulmod(base, base, mod, p);
        k >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, i64 p) {
    auto inv_mod_p = [p](i64 c) {
        i64 r = 1, b2 = c % p, e = p - 2;
        while (e > 0) {
            if (e & 1) r = r * b2 % p;
            b2 = b2 * b2 % p;
            e >>= 1;
        }
        return r;
    };
    while (!b.empty()) {
        // a mod b with b made monic first
        i64 lead_inv = inv_mod_p(b.back());
        Poly bm = b;
        for (auto& c : bm) c = c * lead_inv % p;
        a = poly_mod(std::move(a), bm, p);
        std::swap(a, b);
    }
    return a;
}

bool poly_irreducible(const Poly& f, i64 p) {
    const i64 n = static_cast<i64>(f.size()) - 1;
    if (n < 1) return false;
    if (n == 1) return true; // monic linear polynomials
    if (f[0] == 0) return false; // divisible by x
    // x^(p^n) == x mod f, and gcd(x^(p^(n/r)) - x, f) == 1 for prime r | n.
    Poly x{0, 1};
    Poly fr = x; // x^(p^j) after j steps
    std::vector<Poly> frob(static_cast<size_t>(n) + 1);
    frob[0] = x;
    for (i64 j = 1; j <= n; ++j) {
        fr = poly_powmod(fr, p, f, p);
        frob[static_cast<size_t>(j)] = fr;
    }
    Poly diff = frob[static_cast<size_t>(n)];
    // subtract x
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    poly_trim(diff);
    diff = poly_mod(std::move(diff), f, p);
    if (!diff.empty()) return false;
    for (auto [r, mult] : factorize(n)) {
        (void)mult;
        Poly g = frob[static_cast<size_t>(n / r)];
        if (g.size() < 2) g.resize(2, 0);
        g[1] = ((g[1] - 1) % p + p) % p;
        poly_trim(g);
        Poly gc = poly_gcd(f, g, p);
        if (static_cast<i64>(gc.size()) - 1 != 0) return false;
    }
    return true;
}

i64 poly_to_coords(const Poly& a, i64 p) {
    i64 v = 0;
    for (size_t i = a.size(); i-- > 0;) v = v * p + a[i];
    return v;
}

Poly coords_to_poly(i64 v, i64 p) {
    Poly a;
    while (v > 0) {
        a.push_back(v % p);
        v /= p;
    }
    return a;
}

std::shared_ptr<const Field::Tables> build_tables(i64 p, i64 n) {
    auto tables = std::make_shared<Field::Tables>();
    const i64 N = ipow(p, n);

    // First irreducible monic polynomial of degree n, candidates ordered by
    // their coefficient vector read as a base-p integer.
    Poly f;
    for (i64 k = 1; k < N; ++k) {
        Poly cand = coords_to_poly(k, p);
        cand.resize(static_cast<size_t>(n) + 1, 0);
        cand[static_cast<size_t>(n)] = 1;
        if (poly_irreducible(cand, p)) {
            f = cand;
            break;
        }
    }
    if (f.empty()) throw std::logic_error("no irreducible polynomial found"); // cannot happen
    tables->modulus.assign(f.begin(), f.end());

    // First primitive element in coordinate order.
    const auto factors = factorize(N - 1);
    Poly alpha;
    for (i64 c = 1; c < N; ++c) {
        Poly cand = coords_to_poly(c, p);
        bool primitive = true;
        for (auto [r, mult] : factors) {
            (void)mult;
            Poly pw = poly_powmod(cand, (N - 1) / r, f, p);
            if (pw.size() == 1 && pw[0] == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            alpha = cand;
            break;
        }
    }
    if (alpha.empty()) throw std::logic_error("no primitive element found"); // cannot happen
    tables->alpha_coords = poly_to_coords(alpha, p);

    tables->antilog.assign(static_cast<size_t>(N - 1), 0);
    tables->log.assign(static_cast<size_t>(N), 0);
    Poly acc{1};
    for (i64 i = 0; i < N - 1; ++i) {
        i64 v = poly_to_coords(acc, p);
        tables->antilog[static_cast<size_t>(i)] = static_cast<uint32_t>(v);
        tables->log[static_cast<size_t>(v)] = static_cast<uint32_t>(i);
        acc = poly_mulmod(acc, alpha, f, p);
    }
    // log/antilog must be mutually inverse on all nonzero vectors, and alpha
    // must have full order.
    std::vector<bool> seen(static_cast<size_t>(N), false);
    for (i64 i = 0; i < N - 1; ++i) {
        i64 v = tables->antilog[static_cast<size_t>(i)];
        if (v <= 0 || v >= N || seen[static_cast<size_t>(v)])
            throw std::logic_error("antilog table is not a bijection");
        seen[static_cast<size_t>(v)] = true;
    }
    for (auto [r, mult] : factors) {
        (void)mult;
        if (tables->antilog[static_cast<size_t>((N - 1) / r)] == 1)
            throw std::logic_error("primitive element has non-maximal order");
    }
    return tables;
}

std::shared_ptr<const Field::Tables> cached_tables(i64 p, i64 n) {
    static std::mutex mu;
    static std::map<std::pair<i64, i64>, std::shared_ptr<const Field::Tables>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto t = build_tables(p, n);
    cache.emplace(key, t);
    return t;
}

} // namespace

Field::Field(const TowerSpec& spec) : spec_(spec) {
    prime_deg_ = spec_.t * spec_.m;
    order_ = ipow(spec_.p, prime_deg_);
    tables_ = cached_tables(spec_.p, prime_deg_);
    antilog_ = &tables_->antilog;
    log_ = &tables_->log;
    modulus_ = tables_->modulus;
}

Elem Field::from_exp(i64 e) const {
    i64 g = group_order();
    e %= g;
    if (e < 0) e += g;
    return Elem{e};
}

Elem Field::from_coords(i64 c) const {
    if (c < 0 || c >= order_) throw Error(Errc::invalid_argument, "coordinate vector out of range");
    if (c == 0) return kZero;
    return Elem{static_cast<i64>((*log_)[static_cast<size_t>(c)])};
}

Elem Field::add(Elem x, Elem y) const {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    i64 a = coords(x), b = coords(y);
    i64 c;
    if (spec_.p == 2) {
        c = a ^ b;
    } else {
        c = 0;
        i64 scale = 1;
        while (a > 0 || b > 0) {
            c += (a % spec_.p + b % spec_.p) % spec_.p * scale;
            a /= spec_.p;
            b /= spec_.p;
            scale *= spec_.p;
        }
    }
    return c == 0 ? kZero : Elem{static_cast<i64>((*log_)[static_cast<size_t>(c)])};
}

Elem Field::neg(Elem x) const {
    if (x.is_zero() || spec_.p == 2) return x;
    // -1 = alpha^((order-1)/2)
    return Elem{(x.exp + group_order() / 2) % group_order()};
}

Elem Field::mul(Elem x, Elem y) const {
    if (x.is_zero() || y.is_zero()) return kZero;
    return Elem{(x.exp + y.exp) % group_order()};
}

Elem Field::inv(Elem x) const {
    if (x.is_zero()) throw Error(Errc::division_by_zero, "inverse of zero");
    return Elem{(group_order() - x.exp) % group_order()};
}

Elem Field::pow(Elem x, i64 k) const {
    if (x.is_zero()) {
        if (k == 0) return kOne;
        if (k < 0) throw Error(Errc::division_by_zero, "negative power of zero");
        return kZero;
    }
    i64 g = group_order();
    i128 e = i128(x.exp) * (k % g) % g;
    if (e < 0) e += g;
    return Elem{static_cast<i64>(e)};
}

Elem Field::subfield_generator(i64 d) const {
    if (d < 1 || spec_.m % d != 0)
        throw Error(Errc::degree_not_dividing, "degree " + std::to_string(d) + " does not divide m");
    return Elem{group_order() / (subfield_order(d) - 1)};
}

bool Field::in_subfield(Elem x, i64 d) const {
    if (d < 1 || spec_.m % d != 0)
        throw Error(Errc::degree_not_dividing, "degree " + std::to_string(d) + " does not divide m");
    if (x.is_zero()) return true;
    return x.exp % (group_order() / (subfield_order(d) - 1)) == 0;
}

i64 Field::subfield_index(Elem x, i64 d) const {
    if (x.is_zero()) throw Error(Errc::zero_argument, "zero has no discrete log");
    i64 step = group_order() / (subfield_order(d) - 1);
    if (x.exp % step != 0)
        throw Error(Errc::not_in_subfield, "element is not in F_q^" + std::to_string(d));
    return x.exp / step;
}

Elem Field::subfield_element(i64 d, i64 index) const {
    i64 sub = subfield_order(d) - 1;
    index %= sub;
    if (index < 0) index += sub;
    return Elem{group_order() / sub * index};
}

Elem Field::trace(Elem x, i64 from_deg, i64 to_deg) const {
    if (to_deg < 1 || from_deg % to_deg != 0 || spec_.m % from_deg != 0)
        throw Error(Errc::degree_not_dividing, "trace requires to_deg | from_deg | m");
    if (!in_subfield(x, from_deg))
        throw Error(Errc::not_in_subfield, "trace argument outside F_q^" + std::to_string(from_deg));
    if (x.is_zero()) return kZero;
    const i64 s = from_deg / to_deg;
    const i64 g = group_order();
    const i64 qt = subfield_order(to_deg);
    Elem acc = kZero;
    i64 conj = x.exp;
    for (i64 j = 0; j < s; ++j) {
        acc = add(acc, Elem{conj});
        conj = static_cast<i64>(i128(conj) * qt % g);
    }
    return acc;
}

i64 Field::trace_to_prime(Elem x, i64 d) const {
    if (d < 1 || spec_.m % d != 0)
        throw Error(Errc::degree_not_dividing, "degree " + std::to_string(d) + " does not divide m");
    if (!in_subfield(x, d))
        throw Error(Errc::not_in_subfield, "trace argument outside F_q^" + std::to_string(d));
    if (x.is_zero()) return 0;
    const i64 g = group_order();
    Elem acc = kZero;
    i64 conj = x.exp;
    for (i64 j = 0; j < spec_.t * d; ++j) {
        acc = add(acc, Elem{conj});
        conj = static_cast<i64>(i128(conj) * spec_.p % g);
    }
    return prime_value(acc);
}

Elem Field::norm(Elem x, i64 to_deg) const {
    if (to_deg < 1 || spec_.m % to_deg != 0)
        throw Error(Errc::degree_not_dividing, "norm requires to_deg | m");
    if (x.is_zero()) return kZero;
    return Elem{x.exp % (subfield_order(to_deg) - 1) * (group_order() / (subfield_order(to_deg) - 1))};
}

i64 Field::prime_value(Elem x) const {
    i64 c = coords(x);
    if (c >= spec_.p) throw Error(Errc::not_in_subfield, "element is not in the prime field");
    return c;
}

std::string Field::fq_scalar_token(Elem x) const {
    if (!in_subfield(x, 1)) throw Error(Errc::not_in_subfield, "scalar is not in F_q");
    if (x.is_zero()) return "0";
    if (spec_.t == 1) return std::to_string(prime_value(x));
    i64 k = subfield_index(x, 1);
    if (k == 0) return "1";
    if (k == 1) return "g";
    return "g^" + std::to_string(k);
}

FieldPtr build_field(const TowerSpec& spec) { return std::make_shared<Field>(spec); }

FieldPtr build_field(i64 p, i64 t, i64 m1, i64 m2, i64 m, i64 table_cap) {
    return build_field(TowerSpec::make(p, t, m1, m2, m, table_cap));
}

} // namespace tnc
