#include "cayspec/nullity.hpp"

#include <algorithm>
#include <string>

#include "cayspec/numtheory.hpp"
#include "cayspec/oracle.hpp"

namespace cayspec {

std::int64_t max_multiplicity_bound(const Spectrum& spectrum) {
    if (spectrum.pairs.empty()) {
        throw InvalidInput("max_multiplicity_bound: empty spectrum");
    }
    std::int64_t best = 0;
    for (const SpectrumPair& p : spectrum.pairs) best = std::max(best, p.multiplicity);
    return best;
}

BoundReport unitary_cyclic_bound(std::int64_t n) {
    if (n < 2) {
        throw InvalidInput("unitary_cyclic_bound: n must be >= 2, got " + std::to_string(n));
    }
    const std::int64_t phi_n = numtheory::euler_phi(n);

    BoundReport report;
    report.order = n;

    std::int64_t max_phi = 0;
    std::int64_t pooled_zero = 0;
    for (std::int64_t d : numtheory::divisors(n)) {
        const std::int64_t phi_d = numtheory::euler_phi(d);
        const int mu = numtheory::moebius(d);
        DivisorBound row;
        row.divisor = d;
        row.phi = phi_d;
        row.eigenvalue = phi_n / phi_d * mu;
        row.pooled_zero = (mu == 0);
        report.per_divisor.push_back(row);

        max_phi = std::max(max_phi, phi_d);
        if (mu == 0) pooled_zero += phi_d;
    }

    report.claimed_bound = std::max(max_phi, pooled_zero);
    report.mr_upper = report.order - report.claimed_bound;
    return report;
}

BoundReport product_group_bound(std::int64_t n, const std::vector<FactorBoundData>& factor_data,
                             std::int64_t graph_order) {
    BoundReport report = unitary_cyclic_bound(n);
    for (const FactorBoundData& fd : factor_data) {
        if (fd.census_count < 1 || fd.set_size < 1) {
            throw InvalidInput("product_group_bound: factor data entries must be positive");
        }
        report.claimed_bound *= fd.census_count * fd.set_size;
    }
    report.order = graph_order;
    report.mr_upper = report.order - report.claimed_bound;
    return report;
}

BoundReport check_bound_against_oracle(const GroupSpec& group, const ConnectionSet& s,
                                       std::int64_t claimed, double gap_tol,
                                       std::int64_t dense_cap) {
    if (claimed < 1) {
        throw InvalidInput("check_bound_against_oracle: claimed bound must be >= 1");
    }
    BoundReport report;
    report.order = group.order();
    report.claimed_bound = claimed;
    report.mr_upper = report.order - claimed;

    const Matrix a = build_adjacency(group, s, dense_cap);
    const Spectrum oracle = oracle::group_multiplicities(oracle::symmetric_eigenvalues(a),
                                                         gap_tol);
    report.oracle_max_multiplicity = max_multiplicity_bound(oracle);
    report.consistent = claimed <= *report.oracle_max_multiplicity;
    return report;
}

}  // namespace cayspec
