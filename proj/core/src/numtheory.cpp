#include "cayspec/numtheory.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <string>

#include "cayspec/errors.hpp"

namespace cayspec::numtheory {

namespace {

void require_positive(std::int64_t n, const char* fn) {
    if (n < 1) {
        throw InvalidInput(std::string(fn) + ": n must be a positive integer, got " +
                           std::to_string(n));
    }
    if (n > kMaxInput) {
        throw InvalidInput(std::string(fn) + ": n exceeds the supported range, got " +
                           std::to_string(n));
    }
}

}  // namespace

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    require_positive(n, "factorize");
    std::vector<std::pair<std::int64_t, int>> factors;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        factors.emplace_back(p, e);
    }
    if (n > 1) factors.emplace_back(n, 1);
    return factors;
}

std::int64_t euler_phi(std::int64_t n) {
    require_positive(n, "euler_phi");
    std::int64_t phi = n;
    for (const auto& [p, e] : factorize(n)) {
        phi -= phi / p;
    }
    return phi;
}

int moebius(std::int64_t n) {
    require_positive(n, "moebius");
    int k = 0;
    for (const auto& [p, e] : factorize(n)) {
        if (e >= 2) return 0;
        ++k;
    }
    return (k % 2 == 0) ? 1 : -1;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    require_positive(n, "divisors");
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

int prime_omega(std::int64_t n) {
    require_positive(n, "prime_omega");
    return static_cast<int>(factorize(n).size());
}

std::vector<std::int64_t> residue_class(std::int64_t d, std::int64_t n) {
    require_positive(n, "residue_class");
    require_positive(d, "residue_class");
    if (n % d != 0) {
        throw InvalidInput("residue_class: " + std::to_string(d) + " does not divide " +
                           std::to_string(n));
    }
    std::vector<std::int64_t> cls;
    for (std::int64_t t = 1; t <= n; ++t) {
        if (std::gcd(t, n) == d) cls.push_back(t);
    }
    return cls;
}

std::int64_t ramanujan_hoelder(std::int64_t r, std::int64_t n) {
    require_positive(n, "ramanujan_hoelder");
    if (r < 0) {
        throw InvalidInput("ramanujan_hoelder: r must be nonnegative, got " + std::to_string(r));
    }
    r %= n;                                        // C(r, n) depends only on r mod n
    const std::int64_t g = (r == 0) ? n : std::gcd(r, n);
    const std::int64_t m = n / g;
    const std::int64_t phi_n = euler_phi(n);
    const std::int64_t phi_m = euler_phi(m);
    if (phi_n % phi_m != 0) {
        throw InternalInconsistency("ramanujan_hoelder: phi(" + std::to_string(m) +
                                    ") does not divide phi(" + std::to_string(n) + ")");
    }
    return phi_n / phi_m * moebius(m);
}

double ramanujan_direct(std::int64_t r, std::int64_t n, double tol) {
    require_positive(n, "ramanujan_direct");
    if (r < 0) {
        throw InvalidInput("ramanujan_direct: r must be nonnegative, got " + std::to_string(r));
    }
    r %= n;
    std::complex<double> acc{0.0, 0.0};
    for (std::int64_t k = 1; k <= n; ++k) {
        if (std::gcd(k, n) != 1) continue;
        const std::int64_t e = (k * r) % n;        // reduce the phase before evaluating
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) /
                             static_cast<double>(n);
        acc += std::complex<double>(std::cos(angle), std::sin(angle));
    }
    if (std::abs(acc.imag()) >= tol) {
        throw InternalInconsistency("ramanujan_direct: imaginary residual " +
                                    std::to_string(acc.imag()) + " at r=" + std::to_string(r) +
                                    " n=" + std::to_string(n));
    }
    return acc.real();
}

RamanujanValue ramanujan_value(std::int64_t r, std::int64_t n, double tol) {
    const std::int64_t value = ramanujan_hoelder(r, n);
    const double direct = ramanujan_direct(r, n, tol);
    if (std::abs(direct - static_cast<double>(value)) >= tol) {
        throw InternalInconsistency("ramanujan_value: routes disagree at r=" +
                                    std::to_string(r) + " n=" + std::to_string(n) + " (" +
                                    std::to_string(direct) + " vs " + std::to_string(value) +
                                    ")");
    }
    return {r % n, n, value};
}

}  // namespace cayspec::numtheory
