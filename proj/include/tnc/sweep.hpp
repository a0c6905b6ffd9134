#ifndef TNC_SWEEP_HPP
#define TNC_SWEEP_HPP

#include <vector>

#include "tnc/codes.hpp"

namespace tnc {

/// One constructible code case: a tower, the shift a, and whether the
/// defining set is shortened; label says which closed-form table applies.
struct SweepCase {
    TowerSpec spec;
    i64 a = 0;
    bool shortened = false;
    EnumeratorCase label = EnumeratorCase::one_weight;
};

/// All cases with q in qs and q^m <= max_field_order for which a closed-form
/// prediction exists, in deterministic order (q, m, m1, m2, case). Set
/// include_one_weight = false to keep only the two-weight tables.
std::vector<SweepCase> enumerate_sweep(const std::vector<i64>& qs, i64 max_field_order,
                                       bool include_one_weight);

/// The towers behind the worked-example fixtures, in fixture order.
std::vector<SweepCase> worked_example_cases();

/// (p, t * d) of every subfield F_{q^d} with at most max_order elements that
/// appears in the given cases (d ranging over 1, m1, m2, m), deduplicated.
std::vector<std::pair<i64, i64>> sweep_subfields(const std::vector<SweepCase>& cases, i64 max_order);

} // namespace tnc

#endif
