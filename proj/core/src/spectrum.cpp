#include "cayspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <string>

#include "cayspec/numtheory.hpp"

namespace cayspec {

std::int64_t Spectrum::order() const {
    std::int64_t n = 0;
    for (const SpectrumPair& p : pairs) n += p.multiplicity;
    return n;
}

double Spectrum::trace() const {
    double t = 0.0;
    for (const SpectrumPair& p : pairs) t += p.value * static_cast<double>(p.multiplicity);
    return t;
}

double Spectrum::trace_of_square() const {
    double t = 0.0;
    for (const SpectrumPair& p : pairs) {
        t += p.value * p.value * static_cast<double>(p.multiplicity);
    }
    return t;
}

Spectrum spectrum_from_pairs(std::vector<SpectrumPair> pairs, double gap_tol) {
    std::sort(pairs.begin(), pairs.end(), [](const SpectrumPair& a, const SpectrumPair& b) {
        return a.value > b.value;
    });
    Spectrum out;
    for (const SpectrumPair& p : pairs) {
        if (!out.pairs.empty()) {
            SpectrumPair& last = out.pairs.back();
            const bool distinct_ints = last.exact && p.exact && last.value != p.value;
            if (!distinct_ints && last.value - p.value <= gap_tol) {
                const double total = static_cast<double>(last.multiplicity + p.multiplicity);
                last.value = (last.value * static_cast<double>(last.multiplicity) +
                              p.value * static_cast<double>(p.multiplicity)) /
                             total;
                last.multiplicity += p.multiplicity;
                last.exact = last.exact && p.exact;
                continue;
            }
        }
        out.pairs.push_back(p);
    }
    return out;
}

Spectrum unitary_cyclic_spectrum(std::int64_t n) {
    if (n < 2) {
        throw InvalidInput("unitary_cyclic_spectrum: n must be >= 2, got " + std::to_string(n));
    }
    const std::int64_t phi_n = numtheory::euler_phi(n);
    std::map<std::int64_t, std::int64_t, std::greater<>> merged;  // value -> multiplicity
    for (std::int64_t d : numtheory::divisors(n)) {
        const std::int64_t phi_d = numtheory::euler_phi(d);
        const std::int64_t value = phi_n / phi_d * numtheory::moebius(d);
        merged[value] += phi_d;
    }
    Spectrum out;
    for (const auto& [value, mult] : merged) {
        out.pairs.push_back({static_cast<double>(value), mult, true});
    }
    return out;
}

double circulant_eigenvalue(std::int64_t n, const std::vector<std::int64_t>& exponents,
                            std::int64_t j) {
    double sum = 0.0;
    for (std::int64_t i : exponents) {
        const std::int64_t e = ((i % n) * (j % n)) % n;
        sum += std::cos(2.0 * std::numbers::pi * static_cast<double>(e) /
                        static_cast<double>(n));
    }
    return sum;
}

Spectrum circulant_spectrum(std::int64_t n, const std::vector<std::int64_t>& exponents,
                            double gap_tol) {
    const GroupSpec group = GroupSpec::cyclic(n);
    ConnectionSet s;
    s.sets.push_back({});
    for (std::int64_t i : exponents) s.sets[0].elems.push_back({i, 0});
    const ConnectionSet canon = validate_connection_set(group, s);

    std::vector<std::int64_t> exps;
    for (const Coord& c : canon.sets[0].elems) exps.push_back(c.rot);

    std::vector<SpectrumPair> pairs;
    pairs.reserve(static_cast<std::size_t>(n));
    for (std::int64_t j = 0; j < n; ++j) {
        pairs.push_back({circulant_eigenvalue(n, exps, j), 1, false});
    }
    return spectrum_from_pairs(std::move(pairs), gap_tol);
}

double babai_power_sum(const CharacterTable& table, const ConnectionSet& s,
                       std::size_t character, int t) {
    if (t != 1 && t != 2) {
        throw UnsupportedPowerIndex("power sums implemented for t in {1, 2}, got " +
                                    std::to_string(t));
    }
    if (character >= table.characters.size()) {
        throw InvalidInput("babai_power_sum: character index out of range");
    }
    const GroupSpec& group = table.group;
    const ConnectionSet canon = validate_connection_set(group, s);
    const std::vector<GroupElement> gens = realize(group, canon);
    const Character& chi = table.characters[character];

    std::complex<double> acc{0.0, 0.0};
    if (t == 1) {
        for (const GroupElement& g : gens) {
            acc += chi.values[static_cast<std::size_t>(element_index(group, g))].value;
        }
    } else {
        for (const GroupElement& g : gens) {
            for (const GroupElement& h : gens) {
                const GroupElement gh = multiply(group, g, h);
                acc += chi.values[static_cast<std::size_t>(element_index(group, gh))].value;
            }
        }
    }
    if (std::abs(acc.imag()) >= 1e-9) {
        throw InternalInconsistency("babai_power_sum: imaginary residual " +
                                    std::to_string(acc.imag()));
    }
    return acc.real();
}

std::pair<double, double> eigenpair_from_power_sums(double p1, double p2, double tol) {
    const double disc = 2.0 * p2 - p1 * p1;  // (l1 - l2)^2
    if (disc < -tol) {
        throw InconsistentPowerSums("negative discriminant " + std::to_string(disc) +
                                    " from power sums p1=" + std::to_string(p1) +
                                    " p2=" + std::to_string(p2));
    }
    const double gap = std::sqrt(std::max(0.0, disc));
    return {(p1 + gap) / 2.0, (p1 - gap) / 2.0};
}

Spectrum group_spectrum(const GroupSpec& group, const ConnectionSet& s, double gap_tol) {
    const ConnectionSet canon = validate_connection_set(group, s);
    const CharacterTable table = standard_character_table(group);

    std::vector<SpectrumPair> pairs;
    for (std::size_t i = 0; i < table.characters.size(); ++i) {
        const int degree = table.characters[i].degree;
        if (degree == 1) {
            pairs.push_back({babai_power_sum(table, canon, i, 1), 1, false});
        } else if (degree == 2) {
            const double p1 = babai_power_sum(table, canon, i, 1);
            const double p2 = babai_power_sum(table, canon, i, 2);
            const auto [hi, lo] = eigenpair_from_power_sums(p1, p2);
            pairs.push_back({hi, 2, false});
            pairs.push_back({lo, 2, false});
        } else {
            throw UnsupportedDegree("character degree " + std::to_string(degree) +
                                    " needs power sums beyond t = 2 (at most one dihedral "
                                    "factor per product character is supported)");
        }
    }
    return spectrum_from_pairs(std::move(pairs), gap_tol);
}

Spectrum tensor_spectrum(const std::vector<Spectrum>& factors, double gap_tol) {
    if (factors.empty()) {
        throw InvalidInput("tensor_spectrum: empty factor list");
    }
    std::vector<SpectrumPair> acc = factors.front().pairs;
    for (std::size_t i = 1; i < factors.size(); ++i) {
        std::vector<SpectrumPair> next;
        next.reserve(acc.size() * factors[i].pairs.size());
        for (const SpectrumPair& a : acc) {
            for (const SpectrumPair& b : factors[i].pairs) {
                next.push_back({a.value * b.value, a.multiplicity * b.multiplicity,
                                a.exact && b.exact});
            }
        }
        acc = std::move(next);
    }
    return spectrum_from_pairs(std::move(acc), gap_tol);
}

}  // namespace cayspec
