#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cayspec/cayley.hpp"
#include "cayspec/characters.hpp"

namespace cayspec {

// Closed-form eigenvalue grouping tolerance; floating values closer than
// this merge into one multiplicity. Distinct exact integers never merge.
inline constexpr double kDefaultGroupTol = 1e-6;

struct SpectrumPair {
    double value = 0.0;
    std::int64_t multiplicity = 0;
    bool exact = false;  // value came from an integer closed form
};

// Multiset of adjacency eigenvalues, strictly descending by value.
struct Spectrum {
    std::vector<SpectrumPair> pairs;

    std::int64_t order() const;          // sum of multiplicities
    double trace() const;                // sum value * multiplicity
    double trace_of_square() const;      // sum value^2 * multiplicity
};

// Builds a Spectrum from loose pairs: sorts descending and merges values
// within gap_tol (group value is the multiplicity-weighted mean; two exact
// pairs with different integers are never merged).
Spectrum spectrum_from_pairs(std::vector<SpectrumPair> pairs, double gap_tol = kDefaultGroupTol);

// Unitary Cayley graph spectrum of cyclic(n) by the divisor closed form:
// each divisor d of n contributes eigenvalue moebius(d) * phi(n) / phi(d)
// with multiplicity phi(d); equal integers pool (all non-square-free d land
// on 0). All values exact integers. Requires n >= 2.
Spectrum unitary_cyclic_spectrum(std::int64_t n);

// j-th circulant eigenvalue sum_{i in S} cos(2 pi i j / n).
double circulant_eigenvalue(std::int64_t n, const std::vector<std::int64_t>& exponents,
                            std::int64_t j);

// Full circulant spectrum over j = 0..n-1 with tolerance-based grouping.
// The exponent set is validated as a cyclic connection set first.
Spectrum circulant_spectrum(std::int64_t n, const std::vector<std::int64_t>& exponents,
                            double gap_tol = kDefaultGroupTol);

// Power sum of the eigenvalue block of one irreducible character:
//   t = 1: sum over s in S of chi(s)
//   t = 2: sum over (s1, s2) in S x S of chi(s1 s2)
// S is the realized product set of a validated connection set. The imaginary
// part must cancel for inverse-closed S; the real part is returned.
double babai_power_sum(const CharacterTable& table, const ConnectionSet& s,
                       std::size_t character, int t);

// Recovers the two eigenvalues of a degree-2 block from p1 = l1 + l2 and
// p2 = l1^2 + l2^2; returned descending. Discriminants below -tol throw,
// tiny negatives clamp to zero.
std::pair<double, double> eigenpair_from_power_sums(double p1, double p2, double tol = 1e-9);

// Whole-group spectrum assembled from the standard character table: each
// degree-1 character contributes its t=1 power sum once; each degree-2
// character contributes its recovered eigenpair, each value twice. Product
// characters of degree > 2 (two or more dihedral degree-2 factors) are
// unsupported.
Spectrum group_spectrum(const GroupSpec& group, const ConnectionSet& s,
                        double gap_tol = kDefaultGroupTol);

// Spectrum of a tensor (Cartesian-product connection set) graph from its
// factor spectra: all pairwise eigenvalue products, multiplicities multiply.
Spectrum tensor_spectrum(const std::vector<Spectrum>& factors,
                         double gap_tol = kDefaultGroupTol);

}  // namespace cayspec
