"""Two-weight linear codes from trace/norm defining sets over finite fields.

Thin wrapper around the C++ extension module. The heavy lifting (field
tables, character sums, exhaustive enumeration, graph counting) happens in
native code; this package re-exports the bound API.
"""

try:
    from ._tncodes import *  # installed package layout
    from ._tncodes import __doc__ as _core_doc
except ImportError:  # in-tree build: the extension sits on sys.path directly
    from _tncodes import *  # noqa: F401,F403
    from _tncodes import __doc__ as _core_doc

__version__ = "0.1.0"

__all__ = [
    "TowerSpec",
    "Field",
    "Elem",
    "build_field",
    "Characters",
    "ExpSums",
    "ValueDistribution",
    "gauss_sum_semiprimitive",
    "gauss_quadratic",
    "omega_closed_distribution",
    "delta_closed_distribution",
    "check_character_layer",
    "CharLayerReport",
    "DefiningSet",
    "LinearCode",
    "WeightDistribution",
    "PredictedEnumerator",
    "defining_set",
    "defining_set_general_a",
    "shorten",
    "codeword",
    "weight_distribution",
    "build_code",
    "weight_via_sums",
    "predicted_enumerator",
    "GriesmerReport",
    "griesmer_bound",
    "power_moment_B1_B2",
    "ColumnReport",
    "projectivity_by_columns",
    "ProjectivityReport",
    "projectivity_report",
    "MinimalityReport",
    "minimality_check",
    "SrgWitness",
    "srg_params_from_code",
    "srg_build_and_verify",
    "srg_params_theorem_5_5",
    "srg_params_theorem_5_6",
    "Error",
]
