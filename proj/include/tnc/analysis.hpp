#ifndef TNC_ANALYSIS_HPP
#define TNC_ANALYSIS_HPP

#include <utility>
#include <vector>

#include "tnc/codes.hpp"

namespace tnc {

struct GriesmerReport {
    i64 n = 0, k = 0, d = 0, q = 0;
    i64 bound = 0;            // sum of ceil(d / q^i), i < k
    bool optimal = false;     // no [n, k, d+1] code passes the bound
    i64 next_violating_d = 0; // least d' > d with bound(d') > n
};

GriesmerReport griesmer_bound(i64 n, i64 k, i64 d, i64 q);

/// Dual weight counts B1, B2 from the first three power moments of a
/// two-weight distribution, solved in exact integer arithmetic. Throws
/// non_integral_solution when the system has no nonnegative integer solution.
std::pair<i64, i64> power_moment_B1_B2(i64 n, i64 k, i64 q, const WeightDistribution& wd);

struct ColumnReport {
    bool zero_column = false;
    i64 proportional_pairs = 0;
    int dual_distance_lower_bound = 0; // 3 when no proportional pair, else 2
};

/// Generator-column test on the norm images u_i = N_{q^m/q^m1}(d_i): counts
/// pairs i < j with u_i / u_j in F_q^*.
ColumnReport projectivity_by_columns(const DefiningSet& D);

struct ProjectivityReport {
    i64 B1 = 0, B2 = 0;
    ColumnReport columns;
    bool methods_agree = false; // B1 = 0 iff no zero column, B2 = 0 iff no proportional pair
};

ProjectivityReport projectivity_report(const LinearCode& code);

struct MinimalityReport {
    i64 w_min = 0, w_max = 0;
    bool ratio_exceeds = false; // w_min * q > w_max * (q - 1), exactly
};

MinimalityReport minimality_check(const WeightDistribution& wd, i64 q);

struct SrgWitness {
    i64 N = 0, K = 0, lambda = 0, mu = 0;
    std::vector<i64> connection_exps; // exponents of the connection set (empty when parameters only)
    bool verified = false;            // true after exhaustive counting
};

/// Strongly-regular-graph parameters of a projective two-weight [n, k] code
/// with nonzero weights w1, w2. Throws non_integral_mu when q^2*w1*w2 is not
/// divisible by q^k.
SrgWitness srg_params_from_code(i64 n, i64 k, i64 w1, i64 w2, i64 q);

/// Builds the Cayley graph on (F_{q^m1}, +) with connection set
/// F_q^* * {u_i} and verifies regularity and the common-neighbor counts
/// against srg_params_from_code by exhaustive counting. Requires a projective
/// code with k = m1. Instances with more than vertex_cap vertices report
/// parameters only (verified = false).
SrgWitness srg_build_and_verify(const LinearCode& code, i64 vertex_cap = i64(1) << 16);

struct SrgCounts {
    i64 N = 0, K = 0;
    bool regular = false;
    bool lambda_constant = false, mu_constant = false;
    i64 lambda = -1, mu = -1;
};

/// Exhaustive common-neighbor counting for the Cayley graph on the additive
/// group of F_{q^d} with the given symmetric connection set.
SrgCounts count_cayley_graph(const Field& field, i64 d, const std::vector<i64>& connection_exps);

/// Closed-form graph parameters for the two families attached to the
/// m1 = m, m2 = 2 codes (requires 2 | m; the second family needs m >= 4).
SrgWitness srg_params_theorem_5_5(i64 q, i64 m);
SrgWitness srg_params_theorem_5_6(i64 q, i64 m);

} // namespace tnc

#endif
