#include <doctest.h>

#include <functional>

#include <algorithm>
#include <map>

#include "tnc/analysis.hpp"
#include "tnc/codes.hpp"
#include "tnc/sweep.hpp"

using namespace tnc;

namespace {

Errc thrown_code(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return Errc::invalid_argument;
}

using WF = std::vector<std::pair<i64, i64>>;

WeightDistribution enumerate_via_codewords(const DefiningSet& D) {
    const Field& f = *D.field;
    const TowerSpec& sp = f.spec();
    std::map<i64, i64> hist;
    ++hist[0];
    const i64 M1 = f.subfield_order(sp.m1) - 1;
    for (i64 s = 0; s < M1; ++s) {
        auto cw = codeword(D, f.subfield_element(sp.m1, s));
        i64 w = 0;
        for (Elem c : cw) w += !c.is_zero();
        ++hist[w];
    }
    WeightDistribution wd;
    wd.n = D.size();
    wd.k = sp.m1;
    wd.counts.assign(hist.begin(), hist.end());
    return wd;
}

} // namespace

TEST_SUITE("defining sets") {
    TEST_CASE("membership, order, and size law") {
        for (auto [p, t, m1, m2, m, a] : {std::tuple<i64, i64, i64, i64, i64, i64>{2, 1, 2, 4, 4, 0},
                                          {2, 1, 2, 4, 4, 1},
                                          {3, 1, 2, 3, 6, 1},
                                          {3, 1, 2, 3, 6, 0},
                                          {2, 2, 2, 2, 4, 1},
                                          {5, 1, 2, 1, 2, 1}}) {
            FieldPtr f = build_field(p, t, m1, m2, m);
            DefiningSet D = defining_set(f, a);
            const TowerSpec& sp = f->spec();
            const i64 qm2 = ipow(sp.q, m2);
            i64 expect = (a == 0) ? (f->group_order() / (qm2 - 1)) * (qm2 / sp.q - 1)
                                  : exact_div(i128(qm2 / sp.q) * f->group_order(), qm2 - 1);
            CHECK(D.size() == expect);
            CHECK(std::is_sorted(D.exps.begin(), D.exps.end()));
            Elem target = f->neg(a == 0 ? f->zero() : f->one());
            for (i64 i = 0; i < D.size(); i += std::max<i64>(1, D.size() / 50)) {
                Elem x = D.element(i);
                CHECK(f->trace(f->norm(x, m2), m2, 1) == target);
            }
        }
    }

    TEST_CASE("known sizes from the worked examples") {
        CHECK(defining_set(build_field(2, 1, 2, 4, 4), 0).size() == 7);
        CHECK(defining_set(build_field(2, 1, 2, 4, 4), 1).size() == 8);
        CHECK(defining_set(build_field(3, 1, 2, 3, 6), 1).size() == 252);
    }

    TEST_CASE("a = 0 with m2 = 1 is empty and rejected") {
        CHECK(thrown_code([] { defining_set(build_field(2, 1, 2, 1, 2), 0); }) == Errc::empty_defining_set);
        // a = 1 with m2 = 1 is fine: the norm fiber over -1
        DefiningSet D = defining_set(build_field(2, 1, 2, 1, 2), 1);
        CHECK(D.size() == 3); // (q^m - 1)/(q - 1)
    }

    TEST_CASE("general a: scaling relation and distribution equality") {
        FieldPtr f = build_field(3, 1, 2, 3, 6);
        DefiningSet D1 = defining_set(f, 1);
        Elem two = f->subfield_element(1, 1); // the scalar 2 in F_3
        DefiningSet D2 = defining_set_general_a(f, two);
        CHECK(D2.size() == D1.size());
        CHECK(defining_set_general_a(f, f->one()).exps == D1.exps);

        // find c with N(c) = 1/a, then D(a) = c^-1 D(1) as sets
        Elem a_inv = f->inv(two);
        Elem c = f->zero();
        for (i64 e = 0; e < f->group_order(); ++e) {
            if (f->norm(f->from_exp(e), 3) == a_inv) {
                c = f->from_exp(e);
                break;
            }
        }
        REQUIRE(!c.is_zero());
        std::vector<i64> scaled;
        for (i64 e : D1.exps) scaled.push_back(f->mul(f->inv(c), Elem{e}).exp);
        std::sort(scaled.begin(), scaled.end());
        CHECK(scaled == D2.exps);

        CHECK(weight_distribution(D2) == weight_distribution(D1));
        CHECK(thrown_code([&] { defining_set_general_a(f, f->zero()); }) == Errc::invalid_argument);
    }

    TEST_CASE("shortening") {
        FieldPtr f = build_field(3, 1, 2, 4, 4);
        DefiningSet D = defining_set(f, 0);
        CHECK(D.size() == 26);
        DefiningSet S = shorten(D);
        CHECK(S.size() == 13);
        CHECK(S.shortened);
        // no two representatives differ by an F_q^* factor
        const i64 cls = f->group_order() / (f->q() - 1);
        for (size_t i = 0; i < S.exps.size(); ++i)
            for (size_t j = i + 1; j < S.exps.size(); ++j)
                CHECK((S.exps[i] - S.exps[j]) % cls != 0);
        CHECK(thrown_code([&] { shorten(S); }) == Errc::already_shortened);
        CHECK(thrown_code([&] { shorten(defining_set(f, 1)); }) == Errc::invalid_argument);

        // q = 2: orbits are singletons
        DefiningSet D2 = defining_set(build_field(2, 1, 2, 4, 4), 0);
        CHECK(shorten(D2).exps == D2.exps);
    }
}

TEST_SUITE("codewords and weight distributions") {
    TEST_CASE("codeword coordinates follow the trace-of-product rule") {
        FieldPtr f = build_field(2, 1, 2, 4, 4);
        DefiningSet D = defining_set(f, 0);
        CHECK(codeword(D, f->zero()) == std::vector<Elem>(7, kZero));
        Elem b = f->subfield_element(2, 1);
        auto cw = codeword(D, b);
        for (i64 i = 0; i < D.size(); ++i)
            CHECK(cw[static_cast<size_t>(i)] == f->trace(f->mul(b, f->norm(D.element(i), 2)), 2, 1));
        // additivity
        for (i64 sa = 0; sa < 3; ++sa) {
            for (i64 sb = 0; sb < 3; ++sb) {
                Elem x = f->subfield_element(2, sa), y = f->subfield_element(2, sb);
                auto cx = codeword(D, x), cy = codeword(D, y), cs = codeword(D, f->add(x, y));
                for (size_t i = 0; i < cx.size(); ++i) CHECK(f->add(cx[i], cy[i]) == cs[i]);
            }
        }
        CHECK(thrown_code([&] { codeword(D, f->alpha()); }) == Errc::wrong_subfield);
    }

    TEST_CASE("weight distribution equals the per-codeword enumeration") {
        for (auto [p, t, m1, m2, m, a] : {std::tuple<i64, i64, i64, i64, i64, i64>{2, 1, 2, 4, 4, 0},
                                          {2, 1, 2, 4, 4, 1},
                                          {3, 1, 2, 2, 4, 1},
                                          {2, 2, 2, 2, 2, 1}}) {
            FieldPtr f = build_field(p, t, m1, m2, m);
            DefiningSet D = defining_set(f, a);
            CHECK(weight_distribution(D) == enumerate_via_codewords(D));
        }
    }

    TEST_CASE("worked examples reproduce exactly") {
        auto check_example = [](i64 p, i64 t, i64 m1, i64 m2, i64 m, i64 a, bool shortened, i64 n, i64 k,
                                const WF& nonzero) {
            FieldPtr f = build_field(p, t, m1, m2, m);
            DefiningSet D = defining_set(f, a);
            if (shortened) D = shorten(D);
            WeightDistribution wd = weight_distribution(D);
            CHECK(wd.n == n);
            CHECK(wd.k == k);
            CHECK(wd.nonzero() == nonzero);
        };
        check_example(2, 1, 2, 4, 4, 0, false, 7, 2, WF{{4, 2}, {6, 1}});
        check_example(3, 1, 2, 4, 4, 0, false, 26, 2, WF{{18, 6}, {24, 2}});
        check_example(2, 1, 4, 6, 12, 0, false, 2015, 4, WF{{1040, 10}, {1144, 5}});
        check_example(2, 1, 2, 4, 4, 1, false, 8, 2, WF{{4, 1}, {6, 2}});
        check_example(2, 1, 4, 6, 12, 1, false, 2080, 4, WF{{1040, 5}, {1144, 10}});
        check_example(3, 1, 2, 3, 6, 1, false, 252, 2, WF{{168, 4}, {210, 4}});
        check_example(3, 1, 2, 4, 4, 0, true, 13, 2, WF{{9, 6}, {12, 2}});
    }

    TEST_CASE("enumerator strings use the standard form") {
        FieldPtr f = build_field(2, 1, 2, 4, 4);
        CHECK(weight_distribution(defining_set(f, 0)).enumerator() == "1 + 2z^4 + z^6");
        CHECK(weight_distribution(defining_set(f, 1)).enumerator() == "1 + z^4 + 2z^6");
    }

    TEST_CASE("degenerate (m1, m2) = (2, 2) with a = 0 is constructible but flagged") {
        FieldPtr f = build_field(2, 1, 2, 2, 2);
        DefiningSet D = defining_set(f, 0);
        CHECK(D.size() == 1);
        WeightDistribution wd = weight_distribution(D);
        CHECK(wd.counts == WF{{0, 2}, {1, 2}});
        CHECK(wd.k == 1); // dimension collapses below m1
        CHECK(thrown_code([&] { predicted_enumerator(f->spec(), 0, false); }) == Errc::degenerate_case);
    }
}

TEST_SUITE("weights via exponential sums") {
    TEST_CASE("closed expression equals the Hamming weight for every b") {
        for (auto [p, t, m1, m2, m] : {std::tuple<i64, i64, i64, i64, i64>{2, 1, 2, 4, 4}, {3, 1, 2, 3, 6},
                                       {2, 2, 2, 2, 4}, {3, 1, 4, 2, 4}}) {
            FieldPtr f = build_field(p, t, m1, m2, m);
            ExpSums sums(f);
            const i64 M1 = f->subfield_order(m1) - 1;
            for (i64 a : {i64(0), i64(1)}) {
                if (a == 0 && m2 == 1) continue;
                DefiningSet D = defining_set(f, a);
                for (i64 s = 0; s < M1; ++s) {
                    Elem b = f->subfield_element(m1, s);
                    auto cw = codeword(D, b);
                    i64 wh = 0;
                    for (Elem c : cw) wh += !c.is_zero();
                    CHECK(weight_via_sums(sums, b, a) == wh);
                }
            }
        }
    }

    TEST_CASE("the two omega values of the [8,2,4] code map to weights 4 and 6") {
        FieldPtr f = build_field(2, 1, 2, 4, 4);
        ExpSums sums(f);
        for (i64 s = 0; s < 3; ++s) {
            Elem b = f->subfield_element(2, s);
            i64 om = sums.omega(b);
            i64 w = weight_via_sums(sums, b, 1);
            CHECK(((om == 5 && w == 4) || (om == -3 && w == 6)));
            // a = 0: the lone delta = -5 value lands on the lone weight-6 word
            CHECK(weight_via_sums(sums, b, 0) == ((sums.delta(b) == -5) ? 6 : 4));
        }
        CHECK(thrown_code([&] { weight_via_sums(sums, f->zero(), 1); }) == Errc::zero_b);
    }
}

TEST_SUITE("predicted enumerators") {
    TEST_CASE("labels and values for each closed-form family") {
        // a = 0, e = 2
        PredictedEnumerator t42 = predicted_enumerator(TowerSpec::make(2, 1, 2, 4, 4), 0, false);
        CHECK(t42.label == EnumeratorCase::theorem_4_2);
        CHECK(t42.n == 7);
        CHECK(t42.weights == WF{{4, 2}, {6, 1}});
        // a = 1, e = 2, l = 1
        PredictedEnumerator t45 = predicted_enumerator(TowerSpec::make(3, 1, 2, 4, 4), 1, false);
        CHECK(t45.label == EnumeratorCase::theorem_4_5);
        CHECK(t45.n == 27);
        CHECK(t45.weights == WF{{18, 2}, {21, 6}});
        // a = 1, e = 1, l = 2
        PredictedEnumerator t48 = predicted_enumerator(TowerSpec::make(3, 1, 2, 3, 6), 1, false);
        CHECK(t48.label == EnumeratorCase::theorem_4_8);
        CHECK(t48.n == 252);
        CHECK(t48.weights == WF{{168, 4}, {210, 4}});
        // a = 0 shortened, e = 2
        PredictedEnumerator c410 = predicted_enumerator(TowerSpec::make(3, 1, 2, 4, 4), 0, true);
        CHECK(c410.label == EnumeratorCase::corollary_4_10);
        CHECK(c410.n == 13);
        CHECK(c410.weights == WF{{9, 6}, {12, 2}});
        CHECK(c410.enumerator() == "1 + 6z^9 + 2z^12");
        // one-weight families
        PredictedEnumerator ow0 = predicted_enumerator(TowerSpec::make(3, 1, 2, 3, 6), 0, false);
        CHECK(ow0.label == EnumeratorCase::one_weight);
        CHECK(ow0.n == 224);
        CHECK(ow0.weights == WF{{168, 8}});
        PredictedEnumerator ow1 = predicted_enumerator(TowerSpec::make(2, 1, 2, 3, 6), 1, false);
        CHECK(ow1.label == EnumeratorCase::one_weight);
        CHECK(ow1.n == 36);
        CHECK(ow1.weights == WF{{24, 3}});
    }

    TEST_CASE("hypothesis failures are reported by name") {
        CHECK(thrown_code([] { predicted_enumerator(TowerSpec::make(3, 1, 4, 2, 4), 1, false); }) ==
              Errc::hypothesis_mismatch); // l = e = 2
        CHECK(thrown_code([] { predicted_enumerator(TowerSpec::make(2, 1, 4, 8, 8), 0, false); }) ==
              Errc::hypothesis_mismatch); // e = 4
        CHECK(thrown_code([] { predicted_enumerator(TowerSpec::make(3, 1, 2, 3, 6), 0, true); }) ==
              Errc::hypothesis_mismatch); // shortened needs e = 2
        CHECK(thrown_code([] { predicted_enumerator(TowerSpec::make(2, 1, 2, 3, 6), 1, true); }) ==
              Errc::hypothesis_mismatch); // shortened needs a = 0
        CHECK(thrown_code([] { predicted_enumerator(TowerSpec::make(2, 1, 2, 1, 2), 0, false); }) ==
              Errc::empty_defining_set);
        CHECK(thrown_code([] { predicted_enumerator(TowerSpec::make(3, 1, 2, 2, 2), 0, false); }) ==
              Errc::degenerate_case);
    }

    TEST_CASE("one-weight codes meet the Griesmer bound with equality headroom") {
        // the classic optimality of the one-weight family, checked exactly
        for (auto [p, t, m1, m2, m, a] :
             {std::tuple<i64, i64, i64, i64, i64, i64>{3, 1, 2, 3, 6, 0}, {2, 1, 2, 3, 6, 1}}) {
            TowerSpec spec = TowerSpec::make(p, t, m1, m2, m);
            PredictedEnumerator pe = predicted_enumerator(spec, a, false);
            GriesmerReport gr = griesmer_bound(pe.n, pe.k, pe.weights[0].first, spec.q);
            CHECK(gr.optimal);
        }
    }
}

TEST_SUITE("sweep enumeration") {
    TEST_CASE("every closed-form case in a small sweep matches enumeration") {
        auto cases = enumerate_sweep({2, 3}, 1 << 10, true);
        CHECK(cases.size() > 10);
        for (const auto& c : cases) {
            FieldPtr f = build_field(c.spec);
            DefiningSet D = defining_set(f, c.a);
            if (c.shortened) D = shorten(D);
            WeightDistribution wd = weight_distribution(D);
            PredictedEnumerator pe = predicted_enumerator(c.spec, c.a, c.shortened);
            INFO(c.spec.to_string(), " a=", c.a, c.shortened ? " shortened" : "");
            CHECK(pe.to_distribution() == wd);
            CHECK(wd.k == c.spec.m1);
            if (pe.label != EnumeratorCase::one_weight) CHECK(wd.nonzero().size() == 2);
        }
    }
}
