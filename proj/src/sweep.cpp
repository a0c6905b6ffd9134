#include "tnc/sweep.hpp"

#include <algorithm>
#include <set>

namespace tnc {

namespace {

std::pair<i64, i64> prime_power(i64 q) {
    for (i64 p = 2; p <= q; ++p) {
        if (!is_prime(p) || q % p != 0) continue;
        i64 t = 0, v = q;
        while (v % p == 0) {
            v /= p;
            ++t;
        }
        if (v == 1) return {p, t};
        break;
    }
    throw Error(Errc::invalid_argument, "q = " + std::to_string(q) + " is not a prime power");
}

} // namespace

std::vector<SweepCase> enumerate_sweep(const std::vector<i64>& qs, i64 max_field_order,
                                       bool include_one_weight) {
    std::vector<SweepCase> out;
    for (i64 q : qs) {
        auto [p, t] = prime_power(q);
        for (i64 m = 1;; ++m) {
            i128 qm = 1;
            for (i64 i = 0; i < m; ++i) qm *= q;
            if (qm > max_field_order) break;
            std::vector<i64> divisors;
            for (i64 d = 1; d <= m; ++d)
                if (m % d == 0) divisors.push_back(d);
            for (i64 m1 : divisors) {
                for (i64 m2 : divisors) {
                    TowerSpec spec = TowerSpec::make(p, t, m1, m2, m);
                    struct Probe {
                        i64 a;
                        bool shortened;
                    };
                    for (Probe pr : {Probe{0, false}, Probe{0, true}, Probe{1, false}}) {
                        try {
                            PredictedEnumerator pe = predicted_enumerator(spec, pr.a, pr.shortened);
                            if (!include_one_weight && pe.label == EnumeratorCase::one_weight) continue;
                            out.push_back(SweepCase{spec, pr.a, pr.shortened, pe.label});
                        } catch (const Error&) {
                            // no closed form for this case
                        }
                    }
                }
            }
        }
    }
    return out;
}

std::vector<SweepCase> worked_example_cases() {
    std::vector<SweepCase> out;
    auto add = [&out](i64 p, i64 t, i64 m1, i64 m2, i64 m, i64 a, bool shortened) {
        TowerSpec spec = TowerSpec::make(p, t, m1, m2, m);
        out.push_back(SweepCase{spec, a, shortened, predicted_enumerator(spec, a, shortened).label});
    };
    add(2, 1, 2, 4, 4, 0, false);   // [7,2,4]
    add(3, 1, 2, 4, 4, 0, false);   // [26,2,18]
    add(2, 1, 4, 6, 12, 0, false);  // [2015,4,1040]
    add(2, 1, 2, 4, 4, 1, false);   // [8,2,4]
    add(3, 1, 2, 4, 4, 1, false);   // [27,2,18]
    add(2, 1, 4, 6, 12, 1, false);  // [2080,4,1040]
    add(3, 1, 2, 3, 6, 1, false);   // [252,2,168]
    add(3, 1, 2, 4, 4, 0, true);    // [13,2,9]
    return out;
}

std::vector<std::pair<i64, i64>> sweep_subfields(const std::vector<SweepCase>& cases, i64 max_order) {
    std::set<std::pair<i64, i64>> fields;
    for (const auto& c : cases) {
        for (i64 d : {i64(1), c.spec.m1, c.spec.m2, c.spec.m}) {
            i128 sz = 1;
            bool fits = true;
            for (i64 i = 0; i < c.spec.t * d && fits; ++i) {
                sz *= c.spec.p;
                if (sz > max_order) fits = false;
            }
            if (fits) fields.insert({c.spec.p, c.spec.t * d});
        }
    }
    return {fields.begin(), fields.end()};
}

} // namespace tnc
