#pragma once

#include <cstdint>
#include <vector>

#include "cayspec/cayley.hpp"
#include "cayspec/matrix.hpp"
#include "cayspec/spectrum.hpp"

namespace cayspec::oracle {

inline constexpr double kDefaultEigenTol = 1e-10;
inline constexpr double kDefaultGapTol = 1e-6;
inline constexpr int kMaxSweeps = 100;

// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, sweeping
// the upper triangle in row-major order until the off-diagonal Frobenius norm
// drops below tol times the diagonal scale. Deterministic: identical inputs
// give bit-identical results on a fixed platform. Sorted descending.
std::vector<double> symmetric_eigenvalues(const Matrix& m, double tol = kDefaultEigenTol);

// Groups a descending eigenvalue list into (value, multiplicity) pairs:
// consecutive values within gap_tol merge, the group value is the mean.
Spectrum group_multiplicities(const std::vector<double>& descending,
                              double gap_tol = kDefaultGapTol);

struct MultiplicityMismatch {
    double closed_value = 0.0;
    std::int64_t closed_multiplicity = 0;
    std::int64_t oracle_multiplicity = 0;
};

struct VerificationReport {
    bool matched = false;
    double max_value_error = 0.0;
    std::vector<MultiplicityMismatch> mismatches;
    double tolerance = 0.0;
};

// Pairwise comparison of a closed-form spectrum against an oracle spectrum:
// each closed value is matched to the oracle values within tol; mismatched
// multiplicities and the worst value error are reported, never asserted.
VerificationReport compare_spectra(const Spectrum& closed, const Spectrum& oracle, double tol);

// Builds the adjacency matrix, eigensolves it, groups multiplicities and
// compares against the claimed closed-form spectrum.
VerificationReport verify_spectrum(const Spectrum& closed, const GroupSpec& group,
                                   const ConnectionSet& s, double tol = 1e-7,
                                   double gap_tol = kDefaultGapTol,
                                   std::int64_t dense_cap = kDefaultDenseCap);

}  // namespace cayspec::oracle
