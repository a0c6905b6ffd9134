#include "tnc/analysis.hpp"

#include <algorithm>

namespace tnc {

namespace {

i64 griesmer_sum(i64 d, i64 k, i64 q) {
    i64 sum = 0;
    i64 qi = 1;
    for (i64 i = 0; i < k; ++i) {
        sum += ceil_div(d, qi);
        if (qi > d) { // remaining terms are all 1
            sum += k - i - 1;
            break;
        }
        qi *= q;
    }
    return sum;
}

} // namespace

GriesmerReport griesmer_bound(i64 n, i64 k, i64 d, i64 q) {
    if (n < 1 || k < 1 || d < 1 || q < 2) throw Error(Errc::invalid_argument, "need n, k, d >= 1 and q >= 2");
    GriesmerReport r;
    r.n = n;
    r.k = k;
    r.d = d;
    r.q = q;
    r.bound = griesmer_sum(d, k, q);
    i64 dp = d + 1;
    while (griesmer_sum(dp, k, q) <= n) ++dp;
    r.next_violating_d = dp;
    r.optimal = (dp == d + 1);
    return r;
}

std::pair<i64, i64> power_moment_B1_B2(i64 n, i64 k, i64 q, const WeightDistribution& wd) {
    auto nz = wd.nonzero();
    i128 s1 = 0, s2 = 0, s0 = 0;
    for (auto& [w, A] : nz) {
        s0 += A;
        s1 += i128(w) * A;
        s2 += i128(w) * w * A;
    }
    if (s0 != i128(ipow(q, k)) - 1)
        throw Error(Errc::non_integral_solution, "frequencies do not sum to q^k - 1");
    const i128 nq = i128(n) * (q - 1);
    // s1 = (n(q-1) - B1) q^(k-1)
    const i64 qk1 = ipow(q, k - 1);
    if (s1 % qk1 != 0) throw Error(Errc::non_integral_solution, "first moment is not divisible by q^(k-1)");
    i128 B1 = nq - s1 / qk1;
    // s2 = (n(q-1)(n(q-1)+1) - B1(q + 2(n-1)(q-1)) + 2 B2) q^(k-2)
    const i64 qk2 = (k >= 2) ? ipow(q, k - 2) : 1;
    i128 s2q = s2;
    if (k >= 2) {
        if (s2 % qk2 != 0) throw Error(Errc::non_integral_solution, "second moment is not divisible by q^(k-2)");
        s2q = s2 / qk2;
    } else {
        s2q = s2 * q; // k = 1: multiply through instead of dividing
    }
    i128 twoB2 = s2q - nq * (nq + 1) + B1 * (q + 2 * (i128(n) - 1) * (q - 1));
    if (twoB2 % 2 != 0) throw Error(Errc::non_integral_solution, "B2 is not integral");
    i128 B2 = twoB2 / 2;
    if (B1 < 0 || B2 < 0) throw Error(Errc::non_integral_solution, "negative dual weight count");
    return {static_cast<i64>(B1), static_cast<i64>(B2)};
}

ColumnReport projectivity_by_columns(const DefiningSet& D) {
    const Field& f = *D.field;
    const TowerSpec& sp = f.spec();
    const i64 M1 = f.subfield_order(sp.m1) - 1;
    const i64 cls = M1 / (sp.q - 1); // u_i / u_j in F_q^* iff indices agree mod M1/(q-1)
    std::vector<i64> hist(static_cast<size_t>(cls), 0);
    for (i64 e : D.exps) ++hist[static_cast<size_t>(e % M1 % cls)];
    ColumnReport r;
    r.zero_column = false; // norms of nonzero elements are nonzero
    for (i64 h : hist) r.proportional_pairs += h * (h - 1) / 2;
    r.dual_distance_lower_bound = r.proportional_pairs == 0 ? 3 : 2;
    return r;
}

ProjectivityReport projectivity_report(const LinearCode& code) {
    ProjectivityReport r;
    r.columns = projectivity_by_columns(code.D);
    auto [b1, b2] = power_moment_B1_B2(code.n(), code.k(), code.q(), code.wd);
    r.B1 = b1;
    r.B2 = b2;
    r.methods_agree = ((b1 == 0) == !r.columns.zero_column) && ((b2 == 0) == (r.columns.proportional_pairs == 0));
    return r;
}

MinimalityReport minimality_check(const WeightDistribution& wd, i64 q) {
    MinimalityReport r;
    r.w_min = wd.w_min();
    r.w_max = wd.w_max();
    r.ratio_exceeds = i128(r.w_min) * q > i128(r.w_max) * (q - 1);
    return r;
}

SrgWitness srg_params_from_code(i64 n, i64 k, i64 w1, i64 w2, i64 q) {
    SrgWitness s;
    s.N = ipow(q, k);
    s.K = n * (q - 1);
    i128 K = s.K;
    i128 lam = K * K + 3 * K - i128(q) * (w1 + w2) - K * q * (w1 + w2) + i128(q) * q * w1 * w2;
    if (lam < 0 || lam > i128(INT64_MAX)) throw Error(Errc::parameter_mismatch, "lambda out of range");
    s.lambda = static_cast<i64>(lam);
    i128 mu_num = i128(q) * q * w1 * w2;
    if (mu_num % s.N != 0) throw Error(Errc::non_integral_mu, "q^2 w1 w2 is not divisible by q^k");
    s.mu = static_cast<i64>(mu_num / s.N);
    return s;
}

SrgCounts count_cayley_graph(const Field& f, i64 d, const std::vector<i64>& connection_exps) {
    const i64 N = f.subfield_order(d);
    SrgCounts out;
    out.N = N;
    out.K = static_cast<i64>(connection_exps.size());

    // dense vertex indexing via coordinate vectors
    std::vector<int32_t> dense(static_cast<size_t>(f.order()), -1);
    std::vector<i64> coords_of(static_cast<size_t>(N));
    dense[0] = 0;
    coords_of[0] = 0;
    for (i64 i = 0; i < N - 1; ++i) {
        i64 c = f.coords(f.subfield_element(d, i));
        dense[static_cast<size_t>(c)] = static_cast<int32_t>(i + 1);
        coords_of[static_cast<size_t>(i + 1)] = c;
    }
    std::vector<uint8_t> in_conn(static_cast<size_t>(N), 0);
    std::vector<Elem> conn;
    conn.reserve(connection_exps.size());
    for (i64 e : connection_exps) {
        Elem x{e};
        if (!f.in_subfield(x, d)) throw Error(Errc::invalid_argument, "connection element outside the subfield");
        i64 idx = dense[static_cast<size_t>(f.coords(x))];
        if (in_conn[static_cast<size_t>(idx)])
            throw Error(Errc::invalid_argument, "connection set has repeated elements");
        in_conn[static_cast<size_t>(idx)] = 1;
        conn.push_back(x);
    }
    // symmetric, 0-free
    if (in_conn[0]) throw Error(Errc::invalid_argument, "connection set contains zero");
    for (Elem x : conn)
        if (!in_conn[static_cast<size_t>(dense[static_cast<size_t>(f.coords(f.neg(x)))])])
            throw Error(Errc::invalid_argument, "connection set is not symmetric");

    // common neighbors of a pair at difference delta:
    //   #{ w in conn : w - delta in conn }
    out.regular = true;
    out.lambda_constant = true;
    out.mu_constant = true;
    for (i64 v = 1; v < N && (out.lambda_constant && out.mu_constant); ++v) {
        Elem delta = f.from_coords(coords_of[static_cast<size_t>(v)]);
        i64 cn = 0;
        for (Elem w : conn) {
            Elem x = f.sub(w, delta);
            if (!x.is_zero() && in_conn[static_cast<size_t>(dense[static_cast<size_t>(f.coords(x))])]) ++cn;
        }
        if (in_conn[static_cast<size_t>(v)]) {
            if (out.lambda < 0) out.lambda = cn;
            else if (out.lambda != cn) out.lambda_constant = false;
        } else {
            if (out.mu < 0) out.mu = cn;
            else if (out.mu != cn) out.mu_constant = false;
        }
    }
    return out;
}

SrgWitness srg_build_and_verify(const LinearCode& code, i64 vertex_cap) {
    const Field& f = *code.D.field;
    const TowerSpec& sp = f.spec();
    auto cols = projectivity_by_columns(code.D);
    if (cols.proportional_pairs > 0 || cols.zero_column)
        throw Error(Errc::not_projective, "code has proportional generator columns");
    if (code.k() != sp.m1)
        throw Error(Errc::invalid_argument, "graph construction requires dimension k = m1");
    auto nzw = code.wd.nonzero();
    if (nzw.size() != 2) throw Error(Errc::invalid_argument, "graph construction requires a two-weight code");

    SrgWitness want = srg_params_from_code(code.n(), code.k(), nzw[0].first, nzw[1].first, sp.q);

    // connection set: all F_q^* multiples of the norm images
    const i64 M1 = f.subfield_order(sp.m1) - 1;
    const i64 step1 = f.group_order() / M1;
    const i64 beta_step = f.group_order() / (sp.q - 1);
    std::vector<i64> conn;
    conn.reserve(static_cast<size_t>(code.n() * (sp.q - 1)));
    for (i64 e : code.D.exps) {
        i64 u = e % M1 * step1; // exponent of N(d_i)
        for (i64 y = 0; y < sp.q - 1; ++y) conn.push_back((u + y * beta_step) % f.group_order());
    }
    std::sort(conn.begin(), conn.end());
    conn.erase(std::unique(conn.begin(), conn.end()), conn.end());
    if (static_cast<i64>(conn.size()) != want.K)
        throw Error(Errc::parameter_mismatch, "connection set size differs from n(q-1)");

    want.connection_exps = conn;
    if (want.N > vertex_cap) {
        want.verified = false;
        return want; // parameters only
    }
    SrgCounts got = count_cayley_graph(f, sp.m1, conn);
    if (!got.lambda_constant || !got.mu_constant || got.K != want.K || got.lambda != want.lambda ||
        got.mu != want.mu)
        throw Error(Errc::parameter_mismatch, "exhaustive counting disagrees with the closed-form parameters");
    want.verified = true;
    return want;
}

SrgWitness srg_params_theorem_5_5(i64 q, i64 m) {
    if (m % 2 != 0) throw Error(Errc::hypothesis_mismatch, "2 | m is required");
    const i64 h = m / 2;
    const i64 sg = (h % 2 == 0) ? 1 : -1;
    SrgWitness s;
    s.N = ipow(q, m);
    s.K = exact_div(i128(q) * (ipow(q, m) - 1), q + 1);
    s.lambda = exact_div(i128(ipow(q, m)) * q * q - 2 * q * q - 3 * q - i128(sg) * ipow(q, h) * (1 - q),
                         i128(q + 1) * (q + 1));
    s.mu = exact_div(i128(q) * (ipow(q, h) - sg) * (i128(ipow(q, h)) * q + sg), i128(q + 1) * (q + 1));
    return s;
}

SrgWitness srg_params_theorem_5_6(i64 q, i64 m) {
    if (m % 2 != 0) throw Error(Errc::hypothesis_mismatch, "2 | m is required");
    const i64 h = m / 2;
    const i64 sg = (h % 2 == 0) ? 1 : -1;
    SrgWitness s;
    s.N = ipow(q, m);
    s.K = exact_div(i128(ipow(q, m)) - 1, q + 1);
    s.lambda = exact_div(i128(ipow(q, m)) - 3 * q - 2 - i128(sg) * ipow(q, h + 1) * (q - 1),
                         i128(q + 1) * (q + 1));
    s.mu = exact_div(i128(q) * (ipow(q, h) - sg) * (ipow(q, h) / q + sg), i128(q + 1) * (q + 1));
    return s;
}

} // namespace tnc
