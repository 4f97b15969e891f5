#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cayspec/cayley.hpp"
#include "cayspec/spectrum.hpp"

namespace cayspec {

// One row of the per-divisor breakdown behind a unitary cyclic bound.
struct DivisorBound {
    std::int64_t divisor = 1;
    std::int64_t phi = 1;         // multiplicity contribution phi(d)
    std::int64_t eigenvalue = 0;  // closed-form eigenvalue of the class
    bool pooled_zero = false;     // d has a square factor: pools into 0
};

// A maximum-nullity lower bound together with its audit trail. The claimed
// bound is reported, never asserted; when oracle data is present the verdict
// records whether the claim stayed within the measured maximum multiplicity.
struct BoundReport {
    std::int64_t order = 0;
    std::int64_t claimed_bound = 0;
    std::optional<std::int64_t> oracle_max_multiplicity;
    std::optional<bool> consistent;
    std::int64_t mr_upper = 0;  // order - claimed_bound
    std::vector<DivisorBound> per_divisor;
};

// Largest multiplicity across the spectrum's eigenvalues.
std::int64_t max_multiplicity_bound(const Spectrum& spectrum);

// Nullity lower bound for the unitary Cayley graph of cyclic(n):
//   square-free n:         max over d | n of phi(d)
//   n with a square factor: max(sum of phi(d) over d | n with a square
//                              factor, max over d | n of phi(d))
// Includes the per-divisor breakdown. Requires n >= 2.
BoundReport unitary_cyclic_bound(std::int64_t n);

// Census count and generator-set size of one non-cyclic product factor.
struct FactorBoundData {
    std::int64_t census_count = 1;  // N_G(l) for the chosen l
    std::int64_t set_size = 1;      // |S_k|
};

// The product-group bound as published: the unitary cyclic bound of n scaled
// by the product of census_count * set_size over the extra factors. This is
// a claim to be audited (it can exceed the true maximum multiplicity), so
// the report carries no oracle fields until checked.
BoundReport product_group_bound(std::int64_t n, const std::vector<FactorBoundData>& factor_data,
                             std::int64_t graph_order);

// Fills the oracle side of a report: eigensolves the graph, measures the
// maximum multiplicity and records whether the claim is consistent with it.
BoundReport check_bound_against_oracle(const GroupSpec& group, const ConnectionSet& s,
                                       std::int64_t claimed,
                                       double gap_tol = kDefaultGroupTol,
                                       std::int64_t dense_cap = kDefaultDenseCap);

}  // namespace cayspec
