#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>

#include "cayspec/errors.hpp"
#include "cayspec/numtheory.hpp"

using namespace cayspec;
namespace nt = cayspec::numtheory;

namespace {

// Independent oracle: count coprime residues by direct gcd scan.
std::int64_t phi_by_scan(std::int64_t n) {
    std::int64_t count = 0;
    for (std::int64_t k = 1; k <= n; ++k) {
        if (std::gcd(k, n) == 1) ++count;
    }
    return count;
}

}  // namespace

TEST_SUITE_BEGIN("numtheory");

TEST_CASE("euler_phi on known inputs") {
    CHECK(nt::euler_phi(1) == 1);
    CHECK(nt::euler_phi(5) == 4);
    CHECK(nt::euler_phi(12) == 4);  // {1, 5, 7, 11}
    CHECK(nt::euler_phi(2147483647) == 2147483646);  // Mersenne prime at the cap
}

TEST_CASE("euler_phi agrees with a gcd scan up to 200") {
    for (std::int64_t n = 1; n <= 200; ++n) {
        CAPTURE(n);
        CHECK(nt::euler_phi(n) == phi_by_scan(n));
    }
}

TEST_CASE("euler_phi rejects nonpositive input") {
    CHECK_THROWS_AS(nt::euler_phi(0), InvalidInput);
    CHECK_THROWS_AS(nt::euler_phi(-3), InvalidInput);
}

TEST_CASE("moebius on known inputs") {
    CHECK(nt::moebius(1) == 1);
    CHECK(nt::moebius(12) == 0);   // 2^2 | 12
    CHECK(nt::moebius(30) == -1);  // 2 * 3 * 5
    CHECK(nt::moebius(6) == 1);
    CHECK_THROWS_AS(nt::moebius(0), InvalidInput);
}

TEST_CASE("moebius vanishes exactly on non-square-free integers") {
    for (std::int64_t n = 1; n <= 200; ++n) {
        bool square_free = true;
        for (const auto& [p, e] : nt::factorize(n)) {
            if (e >= 2) square_free = false;
        }
        CAPTURE(n);
        CHECK((nt::moebius(n) == 0) == !square_free);
    }
}

TEST_CASE("moebius equals the r=1 Ramanujan sum") {
    for (std::int64_t n = 1; n <= 100; ++n) {
        CAPTURE(n);
        CHECK(nt::ramanujan_hoelder(1, n) == nt::moebius(n));
        CHECK(nt::ramanujan_direct(1, n) == doctest::Approx(nt::moebius(n)).epsilon(1e-9));
    }
}

TEST_CASE("divisors lists are ascending and complete") {
    CHECK(nt::divisors(1) == std::vector<std::int64_t>{1});
    CHECK(nt::divisors(6) == std::vector<std::int64_t>{1, 2, 3, 6});
    CHECK(nt::divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
    for (std::int64_t n : {7, 36, 97, 120}) {
        const auto divs = nt::divisors(n);
        CHECK(divs.front() == 1);
        CHECK(divs.back() == n);
        for (std::size_t i = 0; i < divs.size(); ++i) {
            CHECK(n % divs[i] == 0);
            if (i > 0) CHECK(divs[i - 1] < divs[i]);
        }
    }
    CHECK_THROWS_AS(nt::divisors(0), InvalidInput);
}

TEST_CASE("prime_omega counts distinct primes") {
    CHECK(nt::prime_omega(1) == 0);
    CHECK(nt::prime_omega(12) == 2);  // 2^2 * 3
    CHECK(nt::prime_omega(30) == 3);  // 2 * 3 * 5
    CHECK(nt::prime_omega(8) == 1);
    CHECK_THROWS_AS(nt::prime_omega(0), InvalidInput);
}

TEST_CASE("residue_class on known inputs") {
    CHECK(nt::residue_class(1, 6) == std::vector<std::int64_t>{1, 5});
    CHECK(nt::residue_class(6, 6) == std::vector<std::int64_t>{6});
    CHECK(nt::residue_class(2, 6) == std::vector<std::int64_t>{2, 4});
    CHECK_THROWS_AS(nt::residue_class(4, 6), InvalidInput);
    CHECK_THROWS_AS(nt::residue_class(0, 6), InvalidInput);
}

TEST_CASE("residue_class cardinality is phi(n/d)") {
    for (std::int64_t n = 1; n <= 100; ++n) {
        for (std::int64_t d : nt::divisors(n)) {
            CAPTURE(n);
            CAPTURE(d);
            CHECK(static_cast<std::int64_t>(nt::residue_class(d, n).size()) ==
                  nt::euler_phi(n / d));
        }
    }
}

TEST_CASE("totient divisor sums telescope to n") {
    for (std::int64_t n = 1; n <= 200; ++n) {
        std::int64_t sum = 0;
        for (std::int64_t d : nt::divisors(n)) sum += nt::euler_phi(d);
        CAPTURE(n);
        CHECK(sum == n);
    }
}

TEST_CASE("ramanujan_hoelder on known inputs") {
    CHECK(nt::ramanujan_hoelder(0, 12) == 4);  // C(0, n) = phi(n)
    CHECK(nt::ramanujan_hoelder(0, 7) == 6);
    CHECK(nt::ramanujan_hoelder(1, 6) == 1);
    CHECK(nt::ramanujan_hoelder(2, 6) == -1);
    CHECK(nt::ramanujan_hoelder(3, 9) == -3);
    CHECK_THROWS_AS(nt::ramanujan_hoelder(1, 0), InvalidInput);
    CHECK_THROWS_AS(nt::ramanujan_hoelder(-1, 6), InvalidInput);
}

TEST_CASE("ramanujan_hoelder depends only on r mod n") {
    for (std::int64_t n : {6, 9, 12, 30}) {
        for (std::int64_t r = 0; r < n; ++r) {
            CHECK(nt::ramanujan_hoelder(r, n) == nt::ramanujan_hoelder(r + n, n));
            CHECK(nt::ramanujan_hoelder(r, n) == nt::ramanujan_hoelder(r + 3 * n, n));
        }
    }
}

TEST_CASE("ramanujan sums are constant on residue classes") {
    for (std::int64_t n = 1; n <= 100; ++n) {
        for (std::int64_t d : nt::divisors(n)) {
            const std::int64_t expected = nt::ramanujan_hoelder(d, n);
            for (std::int64_t t : nt::residue_class(d, n)) {
                CAPTURE(n);
                CAPTURE(d);
                CAPTURE(t);
                CHECK(nt::ramanujan_hoelder(t, n) == expected);
            }
        }
    }
}

TEST_CASE("ramanujan_direct on known inputs") {
    CHECK(nt::ramanujan_direct(0, 12) == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(nt::ramanujan_direct(1, 6) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(nt::ramanujan_direct(3, 9) ==
          doctest::Approx(static_cast<double>(nt::ramanujan_hoelder(3, 9))).epsilon(1e-9));
}

TEST_CASE("validated Ramanujan values carry the reduced arguments") {
    const nt::RamanujanValue v = nt::ramanujan_value(14, 6);
    CHECK(v.r == 2);
    CHECK(v.n == 6);
    CHECK(v.value == -1);
    for (std::int64_t n : {9, 12, 30}) {
        for (std::int64_t r = 0; r < n; ++r) {
            CHECK(nt::ramanujan_value(r, n).value == nt::ramanujan_hoelder(r, n));
        }
    }
}

TEST_CASE("direct summation matches the Hoelder form below 1e-8") {
    for (std::int64_t n = 1; n <= 100; ++n) {
        for (std::int64_t r = 0; r < n; ++r) {
            CAPTURE(n);
            CAPTURE(r);
            const double direct = nt::ramanujan_direct(r, n);
            const double hoelder = static_cast<double>(nt::ramanujan_hoelder(r, n));
            CHECK(std::abs(direct - hoelder) < 1e-8);
        }
    }
}

TEST_SUITE_END();
