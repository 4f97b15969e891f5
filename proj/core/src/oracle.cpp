#include "cayspec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace cayspec::oracle {

namespace {

double off_diagonal_norm(const Matrix& a) {
    const std::size_t n = a.rows();
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            sum += 2.0 * a(i, j) * a(i, j);
        }
    }
    return std::sqrt(sum);
}

double diagonal_scale(const Matrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) sum += a(i, i) * a(i, i);
    return std::max(1.0, std::sqrt(sum));
}

// One Jacobi rotation annihilating a(p, q).
void rotate(Matrix& a, std::size_t p, std::size_t q) {
    const double apq = a(p, q);
    if (apq == 0.0) return;
    const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                     (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    const std::size_t n = a.rows();
    a(p, p) -= t * apq;
    a(q, q) += t * apq;
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == p || i == q) continue;
        const double aip = a(i, p);
        const double aiq = a(i, q);
        a(i, p) = c * aip - s * aiq;
        a(p, i) = a(i, p);
        a(i, q) = s * aip + c * aiq;
        a(q, i) = a(i, q);
    }
}

}  // namespace

std::vector<double> symmetric_eigenvalues(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) {
        throw NotSymmetric("matrix is not square: " + std::to_string(m.rows()) + "x" +
                           std::to_string(m.cols()));
    }
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(m(i, j) - m(j, i)) > 1e-12) {
                throw NotSymmetric("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") differs from its transpose beyond 1e-12");
            }
        }
    }
    if (n == 0) return {};

    Matrix a = m;  // private working copy
    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) < tol * diagonal_scale(a)) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                rotate(a, p, q);
            }
        }
    }
    if (!converged && off_diagonal_norm(a) >= tol * diagonal_scale(a)) {
        throw ConvergenceFailure("Jacobi sweeps did not converge after " +
                                 std::to_string(kMaxSweeps) + " sweeps");
    }

    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i);
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

Spectrum group_multiplicities(const std::vector<double>& descending, double gap_tol) {
    for (std::size_t i = 1; i < descending.size(); ++i) {
        if (descending[i - 1] < descending[i]) {
            throw InvalidInput("group_multiplicities: input is not sorted descending at index " +
                               std::to_string(i));
        }
    }
    Spectrum out;
    std::size_t i = 0;
    while (i < descending.size()) {
        std::size_t j = i + 1;
        double sum = descending[i];
        while (j < descending.size() && descending[j - 1] - descending[j] <= gap_tol) {
            sum += descending[j];
            ++j;
        }
        out.pairs.push_back({sum / static_cast<double>(j - i),
                             static_cast<std::int64_t>(j - i), false});
        i = j;
    }
    return out;
}

VerificationReport compare_spectra(const Spectrum& closed, const Spectrum& oracle, double tol) {
    VerificationReport report;
    report.tolerance = tol;

    for (const SpectrumPair& c : closed.pairs) {
        double nearest = std::numeric_limits<double>::infinity();
        std::int64_t oracle_mult = 0;
        for (const SpectrumPair& o : oracle.pairs) {
            nearest = std::min(nearest, std::abs(c.value - o.value));
            if (std::abs(c.value - o.value) <= tol) oracle_mult += o.multiplicity;
        }
        report.max_value_error = std::max(report.max_value_error, nearest);
        if (oracle_mult != c.multiplicity) {
            report.mismatches.push_back({c.value, c.multiplicity, oracle_mult});
        }
    }
    // oracle values not accounted for by any closed pair
    for (const SpectrumPair& o : oracle.pairs) {
        bool covered = false;
        for (const SpectrumPair& c : closed.pairs) {
            if (std::abs(c.value - o.value) <= tol) {
                covered = true;
                break;
            }
        }
        if (!covered) report.mismatches.push_back({o.value, 0, o.multiplicity});
    }

    report.matched = report.mismatches.empty() && report.max_value_error <= tol;
    return report;
}

VerificationReport verify_spectrum(const Spectrum& closed, const GroupSpec& group,
                                   const ConnectionSet& s, double tol, double gap_tol,
                                   std::int64_t dense_cap) {
    const Matrix a = build_adjacency(group, s, dense_cap);
    const std::vector<double> values = symmetric_eigenvalues(a);
    const Spectrum oracle = group_multiplicities(values, gap_tol);
    return compare_spectra(closed, oracle, tol);
}

}  // namespace cayspec::oracle
