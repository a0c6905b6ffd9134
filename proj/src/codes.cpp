#include "tnc/codes.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "parallel.hpp"

namespace tnc {

i64 WeightDistribution::total() const {
    i64 t = 0;
    for (auto& [w, c] : counts) t += c;
    return t;
}

std::vector<std::pair<i64, i64>> WeightDistribution::nonzero() const {
    std::vector<std::pair<i64, i64>> out;
    for (auto& [w, c] : counts)
        if (w > 0) out.emplace_back(w, c);
    return out;
}

i64 WeightDistribution::w_min() const {
    for (auto& [w, c] : counts)
        if (w > 0) return w;
    throw Error(Errc::invalid_argument, "no nonzero weights");
}

i64 WeightDistribution::w_max() const {
    for (auto it = counts.rbegin(); it != counts.rend(); ++it)
        if (it->first > 0) return it->first;
    throw Error(Errc::invalid_argument, "no nonzero weights");
}

i64 WeightDistribution::a0() const {
    for (auto& [w, c] : counts)
        if (w == 0) return c;
    return 0;
}

namespace {

std::string enumerator_string(const std::vector<std::pair<i64, i64>>& counts) {
    std::ostringstream os;
    bool first = true;
    for (auto& [w, c] : counts) {
        if (!first) os << " + ";
        first = false;
        if (w == 0) {
            os << c;
        } else {
            if (c != 1) os << c;
            os << "z^" << w;
        }
    }
    return os.str();
}

} // namespace

std::string WeightDistribution::enumerator() const {
    auto counts_with_zero = counts;
    if (a0() == 0) counts_with_zero.insert(counts_with_zero.begin(), {0, 1});
    return enumerator_string(counts_with_zero);
}

std::string PredictedEnumerator::enumerator() const {
    std::vector<std::pair<i64, i64>> counts;
    counts.emplace_back(0, 1);
    counts.insert(counts.end(), weights.begin(), weights.end());
    return enumerator_string(counts);
}

WeightDistribution PredictedEnumerator::to_distribution() const {
    WeightDistribution wd;
    wd.n = n;
    wd.k = k;
    wd.counts.emplace_back(0, 1);
    wd.counts.insert(wd.counts.end(), weights.begin(), weights.end());
    return wd;
}

const char* enumerator_case_name(EnumeratorCase c) {
    switch (c) {
        case EnumeratorCase::one_weight: return "one-weight";
        case EnumeratorCase::theorem_4_2: return "Theorem 4.2";
        case EnumeratorCase::theorem_4_5: return "Theorem 4.5";
        case EnumeratorCase::theorem_4_8: return "Theorem 4.8";
        case EnumeratorCase::corollary_4_10: return "Corollary 4.10";
    }
    return "?";
}

namespace {

// Condition flags over F_{q^m2}: entry k says whether Tr(alpha_2^k) equals
// the target value -a.
std::vector<uint8_t> trace_condition_flags(const Field& f, Elem a) {
    const TowerSpec& sp = f.spec();
    const i64 M2 = f.subfield_order(sp.m2) - 1;
    Elem target = f.neg(a);
    std::vector<uint8_t> flags(static_cast<size_t>(M2));
    for (i64 k = 0; k < M2; ++k)
        flags[static_cast<size_t>(k)] = f.trace(f.subfield_element(sp.m2, k), sp.m2, 1) == target;
    return flags;
}

DefiningSet build_defining_set(FieldPtr field, Elem a) {
    const Field& f = *field;
    const TowerSpec& sp = f.spec();
    const i64 M2 = f.subfield_order(sp.m2) - 1;
    auto flags = trace_condition_flags(f, a);
    DefiningSet D;
    D.field = std::move(field);
    D.a_value = a;
    const i64 G = f.group_order();
    i64 per_residue = G / M2;
    i64 hits = 0;
    for (i64 k = 0; k < M2; ++k) hits += flags[static_cast<size_t>(k)];
    D.exps.reserve(static_cast<size_t>(hits * per_residue));
    i64 r = 0;
    for (i64 i = 0; i < G; ++i) {
        if (flags[static_cast<size_t>(r)]) D.exps.push_back(i);
        if (++r == M2) r = 0;
    }
    return D;
}

} // namespace

DefiningSet defining_set(FieldPtr field, i64 a) {
    if (a != 0 && a != 1)
        throw Error(Errc::invalid_argument, "a must be 0 or 1 here; see defining_set_general_a");
    const TowerSpec& sp = field->spec();
    if (a == 0 && sp.m2 == 1)
        throw Error(Errc::empty_defining_set, "a = 0 with m2 = 1 gives an empty defining set");
    Elem av = (a == 0) ? kZero : kOne;
    DefiningSet D = build_defining_set(field, av);
    // size per the kernel counting law
    i64 q = sp.q, qm2 = ipow(q, sp.m2);
    i64 expect = (a == 0) ? exact_div(i128(field->group_order()) * (qm2 / q - 1), qm2 - 1)
                          : exact_div(i128(field->group_order()) * (qm2 / q), qm2 - 1);
    if (D.size() != expect) throw std::logic_error("defining set size disagrees with the kernel counting law");
    return D;
}

DefiningSet defining_set_general_a(FieldPtr field, Elem a) {
    if (a.is_zero()) throw Error(Errc::invalid_argument, "a must be nonzero; use defining_set(field, 0)");
    if (!field->in_subfield(a, 1)) throw Error(Errc::not_in_subfield, "a must lie in F_q");
    return build_defining_set(field, a);
}

DefiningSet shorten(const DefiningSet& D) {
    if (D.shortened) throw Error(Errc::already_shortened, "defining set is already shortened");
    if (!D.is_a0()) throw Error(Errc::invalid_argument, "shortening applies to the a = 0 defining set");
    const Field& f = *D.field;
    const i64 q = f.q();
    const i64 step = f.group_order() / (q - 1); // F_q^* = <alpha^step>
    DefiningSet S;
    S.field = D.field;
    S.a_value = D.a_value;
    S.shortened = true;
    std::vector<uint8_t> taken(static_cast<size_t>(step), 0);
    for (i64 e : D.exps) {
        i64 key = e % step;
        if (!taken[static_cast<size_t>(key)]) {
            taken[static_cast<size_t>(key)] = 1;
            S.exps.push_back(e);
        }
    }
    if (S.size() * (q - 1) != D.size())
        throw std::logic_error("orbits of F_q^* on the defining set are not all full");
    return S;
}

std::vector<Elem> codeword(const DefiningSet& D, Elem b) {
    const Field& f = *D.field;
    const TowerSpec& sp = f.spec();
    if (!f.in_subfield(b, sp.m1)) throw Error(Errc::wrong_subfield, "b must lie in F_q^m1");
    std::vector<Elem> c;
    c.reserve(static_cast<size_t>(D.size()));
    for (i64 e : D.exps) c.push_back(f.trace(f.mul(b, f.norm(Elem{e}, sp.m1)), sp.m1, 1));
    return c;
}

WeightDistribution weight_distribution(const DefiningSet& D) {
    const Field& f = *D.field;
    const TowerSpec& sp = f.spec();
    const i64 M1 = f.subfield_order(sp.m1) - 1;
    const i64 n = D.size();

    // trace-kernel table over F_{q^m1}: is Tr(alpha_1^k) zero?
    std::vector<uint8_t> ker(static_cast<size_t>(M1));
    for (i64 k = 0; k < M1; ++k)
        ker[static_cast<size_t>(k)] = f.trace(f.subfield_element(sp.m1, k), sp.m1, 1).is_zero();

    // group the norm images of the defining set by subfield index; simple
    // columns (multiplicity 1) get a flat array for the hot loop
    std::vector<i64> cnt(static_cast<size_t>(M1), 0);
    for (i64 e : D.exps) ++cnt[static_cast<size_t>(e % M1)];
    std::vector<int32_t> cols1;
    std::vector<std::pair<i64, i64>> colsm; // (index, multiplicity > 1)
    for (i64 j = 0; j < M1; ++j) {
        if (cnt[static_cast<size_t>(j)] == 1) cols1.push_back(static_cast<int32_t>(j));
        else if (cnt[static_cast<size_t>(j)] > 1) colsm.emplace_back(j, cnt[static_cast<size_t>(j)]);
    }

    using Hist = std::map<i64, i64>;
    auto chunks = detail::map_ranges<Hist>(M1, [&](i64 lo, i64 hi) {
        Hist h;
        for (i64 s = lo; s < hi; ++s) {
            i64 zeros = 0;
            for (int32_t j : cols1) {
                i64 idx = s + j;
                if (idx >= M1) idx -= M1;
                zeros += ker[static_cast<size_t>(idx)];
            }
            for (auto& [j, c] : colsm) {
                i64 idx = s + j;
                if (idx >= M1) idx -= M1;
                if (ker[static_cast<size_t>(idx)]) zeros += c;
            }
            ++h[n - zeros];
        }
        return h;
    });
    Hist hist;
    hist[0] = 1; // b = 0
    for (auto& c : chunks)
        for (auto& [w, cn] : c) hist[w] += cn;

    WeightDistribution wd;
    wd.n = n;
    wd.counts.assign(hist.begin(), hist.end());
    // dimension from the number of zero codewords (a power of q)
    i64 zero_words = wd.a0();
    i64 rad = 0;
    while (ipow(sp.q, rad) < zero_words) ++rad;
    if (ipow(sp.q, rad) != zero_words) throw std::logic_error("zero-codeword count is not a power of q");
    wd.k = sp.m1 - rad;
    if (wd.total() != ipow(sp.q, sp.m1)) throw std::logic_error("weight counts do not sum to q^m1");
    return wd;
}

LinearCode build_code(const DefiningSet& D) { return LinearCode{D, weight_distribution(D)}; }

i64 weight_via_sums(const ExpSums& sums, Elem b, i64 a) {
    const TowerSpec& sp = sums.spec();
    const i64 q = sp.q;
    const i128 Qm1 = ipow(q, sp.m) - 1;
    const i128 den = i128(ipow(q, sp.m1) - 1) * (ipow(q, sp.m2) - 1);
    if (a == 0) {
        i128 core = i128(ipow(q, sp.m1 + sp.m2)) - ipow(q, sp.m1 + 1) + q - 1;
        return exact_div((q - 1) * Qm1 * core - i128(sums.delta(b)) * den, den * q * q);
    }
    if (a == 1) {
        i128 core = i128(ipow(q, sp.m1 + sp.m2)) - 1;
        return exact_div((q - 1) * Qm1 * core - i128(sums.omega(b)) * den, den * q * q);
    }
    throw Error(Errc::invalid_argument, "a must be 0 or 1");
}

PredictedEnumerator predicted_enumerator(const TowerSpec& sp, i64 a, bool shortened) {
    if (a != 0 && a != 1) throw Error(Errc::invalid_argument, "a must be 0 or 1");
    const i64 q = sp.q;
    const i128 Qm1 = ipow(q, sp.m) - 1;
    const i64 M1 = ipow(q, sp.m1) - 1;
    const i128 den = i128(M1) * (ipow(q, sp.m2) - 1);

    PredictedEnumerator pe;
    pe.k = sp.m1;

    if (shortened && a != 0)
        throw Error(Errc::hypothesis_mismatch, "shortened codes are defined for a = 0 only");

    if (a == 0) {
        if (sp.m2 == 1) throw Error(Errc::empty_defining_set, "a = 0 with m2 = 1 gives an empty code");
        const i64 qm2 = ipow(q, sp.m2);
        const i128 kernel = qm2 / q - 1; // q^(m2-1) - 1
        if (sp.e == 2 && sp.m1 == 2 && sp.m2 == 2)
            throw Error(Errc::degenerate_case, "(m1, m2) = (2, 2) with a = 0 has zero codewords for nonzero b");
        if (sp.e == 1) {
            if (shortened)
                throw Error(Errc::hypothesis_mismatch,
                            "shortened closed form requires e = 2; got e = " + std::to_string(sp.e));
            pe.label = EnumeratorCase::one_weight;
            pe.n = exact_div(Qm1 * kernel, qm2 - 1);
            i64 w = exact_div(i128(ipow(q, sp.m1 - 1)) * (q - 1) * Qm1 * kernel, den);
            pe.weights.emplace_back(w, M1);
            return pe;
        }
        if (sp.e != 2)
            throw Error(Errc::hypothesis_mismatch,
                        "closed forms for a = 0 cover e in {1, 2}; got e = " + std::to_string(sp.e));
        const i64 h = (sp.m1 + sp.m2) / 2;
        const i64 sigma = (h % 2 == 0) ? 1 : -1;
        const i128 base = i128(ipow(q, sp.m1 - 1)) * (qm2 / q - 1);
        i128 lead = shortened ? i128(1) : i128(q - 1);
        pe.label = shortened ? EnumeratorCase::corollary_4_10 : EnumeratorCase::theorem_4_2;
        pe.n = shortened ? exact_div(Qm1 * kernel, i128(qm2 - 1) * (q - 1)) : exact_div(Qm1 * kernel, qm2 - 1);
        i64 w1 = exact_div(lead * Qm1 * (base - i128(sigma) * (q - 1) * ipow(q, h - 1)), den);
        i64 w2 = exact_div(lead * Qm1 * (base + i128(sigma) * (q - 1) * ipow(q, h - 2)), den);
        pe.weights.emplace_back(w1, M1 / (q + 1));
        pe.weights.emplace_back(w2, q * (M1 / (q + 1)));
    } else {
        const i64 qm2 = ipow(q, sp.m2);
        pe.n = exact_div(i128(qm2 / q) * Qm1, qm2 - 1);
        if (sp.e == 1 && sp.l == 1) {
            pe.label = EnumeratorCase::one_weight;
            i64 w = exact_div(i128(q - 1) * Qm1 * ipow(q, sp.m1 + sp.m2 - 2), den);
            pe.weights.emplace_back(w, M1);
            return pe;
        }
        if (sp.e == 2 && sp.l == 1) {
            pe.label = EnumeratorCase::theorem_4_5;
            const i64 h = (sp.m1 + sp.m2) / 2;
            const i64 sigma = (h % 2 == 0) ? 1 : -1;
            i64 w1 = exact_div(i128(q - 1) * Qm1 * (ipow(q, sp.m1 + sp.m2) + i128(sigma) * ipow(q, h + 1)),
                               den * q * q);
            i64 w2 =
                exact_div(i128(q - 1) * Qm1 * (ipow(q, sp.m1 + sp.m2) - i128(sigma) * ipow(q, h)), den * q * q);
            pe.weights.emplace_back(w1, M1 / (q + 1));
            pe.weights.emplace_back(w2, q * (M1 / (q + 1)));
        } else if (sp.e == 1 && sp.l == 2) {
            pe.label = EnumeratorCase::theorem_4_8;
            const i64 h2 = (sp.m1 + sp.m2 + 1) / 2;
            i64 w1 =
                exact_div(i128(q - 1) * Qm1 * (ipow(q, sp.m1 + sp.m2) - i128(ipow(q, h2))), den * q * q);
            i64 w2 =
                exact_div(i128(q - 1) * Qm1 * (ipow(q, sp.m1 + sp.m2) + i128(ipow(q, h2))), den * q * q);
            pe.weights.emplace_back(w1, M1 / 2);
            pe.weights.emplace_back(w2, M1 / 2);
        } else if (sp.e == 2 && sp.l == 2) {
            throw Error(Errc::hypothesis_mismatch,
                        "l = e = 2 needs Gauss sums of order 2(q+1), which have no closed form");
        } else {
            throw Error(Errc::hypothesis_mismatch, "no closed form for (e, l) = (" + std::to_string(sp.e) + ", " +
                                                       std::to_string(sp.l) + ")");
        }
    }
    std::sort(pe.weights.begin(), pe.weights.end());
    return pe;
}

} // namespace tnc
