#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tnc/analysis.hpp"
#include "tnc/char_sums.hpp"
#include "tnc/codes.hpp"
#include "tnc/field.hpp"

namespace py = pybind11;
using namespace tnc;

PYBIND11_MODULE(_tncodes, m) {
    m.doc() = "q-ary two-weight linear codes from trace/norm defining sets: "
              "finite field towers, Gauss and exponential sums, exact weight "
              "distributions, and graph-theoretic verification.";

    py::register_exception<Error>(m, "Error");

    py::class_<TowerSpec>(m, "TowerSpec")
        .def(py::init([](i64 p, i64 t, i64 m1, i64 m2, i64 mm, i64 cap) {
                 return TowerSpec::make(p, t, m1, m2, mm, cap);
             }),
             py::arg("p"), py::arg("t"), py::arg("m1"), py::arg("m2"), py::arg("m"),
             py::arg("table_cap") = kDefaultTableCap)
        .def_readonly("p", &TowerSpec::p)
        .def_readonly("t", &TowerSpec::t)
        .def_readonly("q", &TowerSpec::q)
        .def_readonly("m1", &TowerSpec::m1)
        .def_readonly("m2", &TowerSpec::m2)
        .def_readonly("m", &TowerSpec::m)
        .def_readonly("e", &TowerSpec::e)
        .def_readonly("l", &TowerSpec::l)
        .def("__repr__", [](const TowerSpec& s) { return "TowerSpec(" + s.to_string() + ")"; });

    py::class_<Elem>(m, "Elem")
        .def_readonly("exp", &Elem::exp)
        .def("is_zero", &Elem::is_zero)
        .def("__eq__", [](const Elem& a, const Elem& b) { return a == b; })
        .def("__repr__", [](const Elem& e) {
            return e.is_zero() ? std::string("Elem(zero)") : "Elem(alpha^" + std::to_string(e.exp) + ")";
        });

    py::class_<Field, std::shared_ptr<Field>>(m, "Field")
        .def(py::init([](const TowerSpec& s) { return std::make_shared<Field>(s); }), py::arg("spec"))
        .def_property_readonly("spec", &Field::spec)
        .def_property_readonly("order", &Field::order)
        .def_property_readonly("modulus", &Field::modulus)
        .def("zero", &Field::zero)
        .def("one", &Field::one)
        .def("alpha", &Field::alpha)
        .def("from_exp", &Field::from_exp)
        .def("from_coords", &Field::from_coords)
        .def("coords", &Field::coords)
        .def("add", &Field::add)
        .def("sub", &Field::sub)
        .def("neg", &Field::neg)
        .def("mul", &Field::mul)
        .def("inv", &Field::inv)
        .def("pow", &Field::pow)
        .def("trace", &Field::trace, py::arg("x"), py::arg("from_deg"), py::arg("to_deg"))
        .def("trace_to_prime", &Field::trace_to_prime, py::arg("x"), py::arg("d"))
        .def("norm", &Field::norm, py::arg("x"), py::arg("to_deg"))
        .def("in_subfield", &Field::in_subfield)
        .def("subfield_index", &Field::subfield_index)
        .def("subfield_element", &Field::subfield_element)
        .def("subfield_generator", &Field::subfield_generator)
        .def("prime_value", &Field::prime_value)
        .def("fq_scalar_token", &Field::fq_scalar_token);

    m.def(
        "build_field",
        [](i64 p, i64 t, i64 m1, i64 m2, i64 mm, i64 cap) {
            return std::make_shared<Field>(TowerSpec::make(p, t, m1, m2, mm, cap));
        },
        py::arg("p"), py::arg("t"), py::arg("m1"), py::arg("m2"), py::arg("m"),
        py::arg("table_cap") = kDefaultTableCap);

    py::class_<ValueDistribution>(m, "ValueDistribution")
        .def_readonly("pairs", &ValueDistribution::pairs)
        .def("total", &ValueDistribution::total)
        .def("__eq__", [](const ValueDistribution& a, const ValueDistribution& b) { return a == b; })
        .def("__repr__", &ValueDistribution::to_string);

    py::class_<Characters>(m, "Characters")
        .def(py::init([](std::shared_ptr<Field> f, i64 d) {
                 return std::make_unique<Characters>(FieldPtr(std::move(f)), d);
             }),
             py::arg("field"), py::arg("d"))
        .def("additive", &Characters::additive)
        .def("multiplicative", &Characters::multiplicative, py::arg("j"), py::arg("x"))
        .def("gauss_direct", &Characters::gauss_direct)
        .def_property_readonly("field_order", &Characters::field_order);

    m.def("gauss_sum_semiprimitive", &gauss_sum_semiprimitive, py::arg("N"), py::arg("s"), py::arg("p"),
          py::arg("r"));
    m.def("gauss_quadratic", &gauss_quadratic, py::arg("p"), py::arg("t"));

    py::class_<ExpSums>(m, "ExpSums")
        .def(py::init([](std::shared_ptr<Field> f) { return std::make_unique<ExpSums>(FieldPtr(std::move(f))); }),
             py::arg("field"))
        .def("omega", &ExpSums::omega)
        .def("delta", &ExpSums::delta)
        .def("omega_distribution", &ExpSums::omega_distribution)
        .def("delta_distribution", &ExpSums::delta_distribution);

    m.def("omega_closed_distribution", &omega_closed_distribution);
    m.def("delta_closed_distribution", &delta_closed_distribution);

    py::class_<DefiningSet>(m, "DefiningSet")
        .def_readonly("exps", &DefiningSet::exps)
        .def_readonly("shortened", &DefiningSet::shortened)
        .def_property_readonly("size", &DefiningSet::size)
        .def("element", &DefiningSet::element)
        .def("__len__", &DefiningSet::size);

    py::class_<WeightDistribution>(m, "WeightDistribution")
        .def_readonly("n", &WeightDistribution::n)
        .def_readonly("k", &WeightDistribution::k)
        .def_readonly("counts", &WeightDistribution::counts)
        .def("w_min", &WeightDistribution::w_min)
        .def("w_max", &WeightDistribution::w_max)
        .def("enumerator", &WeightDistribution::enumerator)
        .def("__eq__", [](const WeightDistribution& a, const WeightDistribution& b) { return a == b; });

    py::class_<LinearCode>(m, "LinearCode")
        .def_readonly("D", &LinearCode::D)
        .def_readonly("wd", &LinearCode::wd)
        .def_property_readonly("n", &LinearCode::n)
        .def_property_readonly("k", &LinearCode::k);

    py::class_<PredictedEnumerator>(m, "PredictedEnumerator")
        .def_property_readonly("label",
                               [](const PredictedEnumerator& p) { return enumerator_case_name(p.label); })
        .def_readonly("n", &PredictedEnumerator::n)
        .def_readonly("k", &PredictedEnumerator::k)
        .def_readonly("weights", &PredictedEnumerator::weights)
        .def("enumerator", &PredictedEnumerator::enumerator);

    m.def(
        "defining_set", [](std::shared_ptr<Field> f, i64 a) { return defining_set(FieldPtr(std::move(f)), a); },
        py::arg("field"), py::arg("a"));
    m.def(
        "defining_set_general_a",
        [](std::shared_ptr<Field> f, Elem a) { return defining_set_general_a(FieldPtr(std::move(f)), a); },
        py::arg("field"), py::arg("a"));
    m.def("shorten", &shorten);
    m.def("codeword", &codeword, py::arg("D"), py::arg("b"));
    m.def("weight_distribution", &weight_distribution);
    m.def("build_code", &build_code);
    m.def("weight_via_sums", &weight_via_sums, py::arg("sums"), py::arg("b"), py::arg("a"));
    m.def("predicted_enumerator", &predicted_enumerator, py::arg("spec"), py::arg("a"), py::arg("shortened"));

    py::class_<GriesmerReport>(m, "GriesmerReport")
        .def_readonly("n", &GriesmerReport::n)
        .def_readonly("k", &GriesmerReport::k)
        .def_readonly("d", &GriesmerReport::d)
        .def_readonly("bound", &GriesmerReport::bound)
        .def_readonly("optimal", &GriesmerReport::optimal)
        .def_readonly("next_violating_d", &GriesmerReport::next_violating_d);
    m.def("griesmer_bound", &griesmer_bound, py::arg("n"), py::arg("k"), py::arg("d"), py::arg("q"));

    m.def("power_moment_B1_B2", &power_moment_B1_B2, py::arg("n"), py::arg("k"), py::arg("q"), py::arg("wd"));

    py::class_<ColumnReport>(m, "ColumnReport")
        .def_readonly("zero_column", &ColumnReport::zero_column)
        .def_readonly("proportional_pairs", &ColumnReport::proportional_pairs)
        .def_readonly("dual_distance_lower_bound", &ColumnReport::dual_distance_lower_bound);
    m.def("projectivity_by_columns", &projectivity_by_columns);

    py::class_<ProjectivityReport>(m, "ProjectivityReport")
        .def_readonly("B1", &ProjectivityReport::B1)
        .def_readonly("B2", &ProjectivityReport::B2)
        .def_readonly("columns", &ProjectivityReport::columns)
        .def_readonly("methods_agree", &ProjectivityReport::methods_agree);
    m.def("projectivity_report", &projectivity_report);

    py::class_<MinimalityReport>(m, "MinimalityReport")
        .def_readonly("w_min", &MinimalityReport::w_min)
        .def_readonly("w_max", &MinimalityReport::w_max)
        .def_readonly("ratio_exceeds", &MinimalityReport::ratio_exceeds);
    m.def("minimality_check", &minimality_check, py::arg("wd"), py::arg("q"));

    py::class_<SrgWitness>(m, "SrgWitness")
        .def_readonly("N", &SrgWitness::N)
        .def_readonly("K", &SrgWitness::K)
        .def_readonly("lambda_", &SrgWitness::lambda)
        .def_readonly("mu", &SrgWitness::mu)
        .def_readonly("verified", &SrgWitness::verified)
        .def_readonly("connection_exps", &SrgWitness::connection_exps)
        .def("__repr__", [](const SrgWitness& s) {
            return "SrgWitness(N=" + std::to_string(s.N) + ", K=" + std::to_string(s.K) +
                   ", lambda=" + std::to_string(s.lambda) + ", mu=" + std::to_string(s.mu) +
                   (s.verified ? ", verified" : "") + ")";
        });
    m.def("srg_params_from_code", &srg_params_from_code, py::arg("n"), py::arg("k"), py::arg("w1"),
          py::arg("w2"), py::arg("q"));
    m.def("srg_build_and_verify", &srg_build_and_verify, py::arg("code"),
          py::arg("vertex_cap") = i64(1) << 16);
    m.def("srg_params_theorem_5_5", &srg_params_theorem_5_5, py::arg("q"), py::arg("m"));
    m.def("srg_params_theorem_5_6", &srg_params_theorem_5_6, py::arg("q"), py::arg("m"));

    py::class_<CharLayerReport>(m, "CharLayerReport")
        .def_readonly("field_order", &CharLayerReport::field_order)
        .def_readonly("semiprimitive_cases", &CharLayerReport::semiprimitive_cases)
        .def_readonly("first_failure", &CharLayerReport::first_failure)
        .def("all_ok", &CharLayerReport::all_ok);
    m.def(
        "check_character_layer",
        [](std::shared_ptr<Field> f, i64 d) { return check_character_layer(FieldPtr(std::move(f)), d); },
        py::arg("field"), py::arg("d"));
}
