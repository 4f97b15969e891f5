// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Everything verifies closed forms against the independent dense
// eigensolver at the tolerances promised in the README.

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "cayspec/cayley.hpp"
#include "cayspec/characters.hpp"
#include "cayspec/errors.hpp"
#include "cayspec/nullity.hpp"
#include "cayspec/numtheory.hpp"
#include "cayspec/oracle.hpp"
#include "cayspec/spectrum.hpp"

using namespace cayspec;
namespace nt = cayspec::numtheory;

namespace {

int failures = 0;

void report(int number, const char* title, bool ok, const std::string& detail = "") {
    std::printf("[%s] %d. %s%s%s\n", ok ? "PASS" : "FAIL", number, title,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

bool spectra_match(const Spectrum& closed, const GroupSpec& group, const ConnectionSet& s,
                   double tol, std::string* why = nullptr) {
    const auto r = oracle::verify_spectrum(closed, group, s, tol);
    if (!r.matched && why) {
        *why = "max value error " + std::to_string(r.max_value_error) + ", " +
               std::to_string(r.mismatches.size()) + " multiplicity mismatches";
    }
    return r.matched;
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(CAYSPEC_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// 1. Prime orders: unitary spectrum is the complete-graph spectrum, exactly,
//    and the eigensolver agrees below 1e-7 with exact multiplicities.
void criterion_prime_complete_graphs() {
    bool ok = true;
    std::string detail;
    for (std::int64_t p : {3, 5, 7, 11, 13}) {
        const Spectrum s = unitary_cyclic_spectrum(p);
        ok = ok && s.pairs.size() == 2;
        ok = ok && s.pairs[0].value == static_cast<double>(p - 1) &&
             s.pairs[0].multiplicity == 1 && s.pairs[0].exact;
        ok = ok && s.pairs[1].value == -1.0 && s.pairs[1].multiplicity == p - 1 &&
             s.pairs[1].exact;
        ok = ok && spectra_match(s, GroupSpec::cyclic(p), unitary_connection_set(p), 1e-7,
                                 &detail);
        if (!ok) {
            detail = "p = " + std::to_string(p) + (detail.empty() ? "" : ": " + detail);
            break;
        }
    }
    report(1, "prime unitary spectra equal the complete-graph spectrum and the oracle", ok,
           detail);
}

// 2. Every order 2..60: closed form matches the oracle with exact
//    multiplicities and integer eigenvalues.
void criterion_unitary_range() {
    bool ok = true;
    std::string detail;
    for (std::int64_t n = 2; n <= 60 && ok; ++n) {
        const Spectrum s = unitary_cyclic_spectrum(n);
        for (const SpectrumPair& p : s.pairs) {
            ok = ok && p.exact && p.value == std::floor(p.value);
        }
        ok = ok && spectra_match(s, GroupSpec::cyclic(n), unitary_connection_set(n), 1e-7,
                                 &detail);
        if (!ok) detail = "n = " + std::to_string(n) + ": " + detail;
    }
    report(2, "unitary cyclic spectra for n = 2..60 are integral and oracle-exact", ok, detail);
}

// 3. Ramanujan sums: the direct primitive-root summation matches the integer
//    Hoelder form below 1e-8 for all n <= 100.
void criterion_ramanujan_integrality() {
    bool ok = true;
    std::string detail;
    for (std::int64_t n = 1; n <= 100 && ok; ++n) {
        for (std::int64_t r = 0; r < n && ok; ++r) {
            const std::int64_t hoelder = nt::ramanujan_hoelder(r, n);
            const double direct = nt::ramanujan_direct(r, n);
            if (std::abs(direct - static_cast<double>(hoelder)) >= 1e-8) {
                ok = false;
                detail = "C(" + std::to_string(r) + "," + std::to_string(n) + ")";
            }
        }
    }
    report(3, "direct Ramanujan sums equal the integer Hoelder values below 1e-8", ok, detail);
}

// 4. Residue classes: |B(d,n)| = phi(n/d) and the Ramanujan sum is constant
//    on each class, exactly, for all n <= 100.
void criterion_residue_classes() {
    bool ok = true;
    std::string detail;
    for (std::int64_t n = 1; n <= 100 && ok; ++n) {
        for (std::int64_t d : nt::divisors(n)) {
            const std::vector<std::int64_t> cls = nt::residue_class(d, n);
            if (static_cast<std::int64_t>(cls.size()) != nt::euler_phi(n / d)) {
                ok = false;
                detail = "|B(" + std::to_string(d) + "," + std::to_string(n) + ")|";
                break;
            }
            const std::int64_t expected = nt::ramanujan_hoelder(d, n);
            for (std::int64_t t : cls) {
                if (nt::ramanujan_hoelder(t, n) != expected) {
                    ok = false;
                    detail = "C(t," + std::to_string(n) + ") not constant on class of " +
                             std::to_string(d);
                    break;
                }
            }
            if (!ok) break;
        }
    }
    report(4, "residue classes have phi(n/d) members and constant Ramanujan sums", ok, detail);
}

// 5. Totient sums over divisors telescope to n for all n <= 200.
void criterion_totient_sum() {
    bool ok = true;
    std::string detail;
    for (std::int64_t n = 1; n <= 200; ++n) {
        std::int64_t sum = 0;
        for (std::int64_t d : nt::divisors(n)) sum += nt::euler_phi(d);
        if (sum != n) {
            ok = false;
            detail = "n = " + std::to_string(n);
            break;
        }
    }
    report(5, "sum of phi over divisors equals n for n = 1..200", ok, detail);
}

// 6. Nullity bounds: spot values 5 -> 4, 12 -> 6, 6 -> 2 audited against the
//    oracle, and the closed-form bound equals the generic multiplicity bound
//    for every n <= 60.
void criterion_nullity_bounds() {
    bool ok = true;
    std::string detail;

    struct Spot {
        std::int64_t n;
        std::int64_t bound;
    };
    for (const Spot spot : {Spot{5, 4}, Spot{12, 6}, Spot{6, 2}}) {
        const BoundReport r = unitary_cyclic_bound(spot.n);
        ok = ok && r.claimed_bound == spot.bound;
        const BoundReport audit = check_bound_against_oracle(
            GroupSpec::cyclic(spot.n), unitary_connection_set(spot.n), r.claimed_bound);
        ok = ok && audit.oracle_max_multiplicity == spot.bound && audit.consistent == true;
        if (!ok) {
            detail = "n = " + std::to_string(spot.n);
            break;
        }
    }
    for (std::int64_t n = 2; n <= 60 && ok; ++n) {
        if (unitary_cyclic_bound(n).claimed_bound !=
            max_multiplicity_bound(unitary_cyclic_spectrum(n))) {
            ok = false;
            detail = "bound mismatch at n = " + std::to_string(n);
        }
    }
    report(6, "nullity bounds: 5 -> 4, 12 -> 6, 6 -> 2 and generic agreement to n = 60", ok,
           detail);
}

// 7. Dihedral tables for n in {3,5,7,9,11}: orthogonality below 1e-8, degree
//    squares summing to 2n, and the degree-2 eigenpair recovery for
//    S = {a, a^(n-1)} matching the oracle below 1e-6.
void criterion_dihedral_tables() {
    bool ok = true;
    std::string detail;
    for (std::int64_t n : {3, 5, 7, 9, 11}) {
        const CharacterTable table = dihedral_character_table(n);
        const std::int64_t order = 2 * n;

        std::int64_t degree_sq = 0;
        for (const Character& chi : table.characters) {
            degree_sq += static_cast<std::int64_t>(chi.degree) * chi.degree;
        }
        ok = ok && degree_sq == order;

        for (std::size_t i = 0; i < table.characters.size() && ok; ++i) {
            for (std::size_t j = 0; j < table.characters.size() && ok; ++j) {
                std::complex<double> ip{0.0, 0.0};
                for (std::int64_t e = 0; e < order; ++e) {
                    ip += table.characters[i].values[e].value *
                          std::conj(table.characters[j].values[e].value);
                }
                const std::complex<double> expected =
                    (i == j) ? std::complex<double>{static_cast<double>(order), 0.0}
                             : std::complex<double>{0.0, 0.0};
                ok = ok && std::abs(ip - expected) < 1e-8;
            }
        }

        // S = {a, a^(n-1)}: recover each degree-2 eigenpair and check it
        // against the dense eigensolver
        const GroupSpec d = GroupSpec::dihedral(n);
        ConnectionSet s{{FactorSet{{{1, 0}, {n - 1, 0}}}}};
        const std::vector<double> eig = oracle::symmetric_eigenvalues(build_adjacency(d, s));
        for (const std::size_t ci : {std::size_t{0}, table.characters.size() - 3}) {
            if (table.characters[ci].degree != 2) continue;
            const double p1 = babai_power_sum(table, s, ci, 1);
            const double p2 = babai_power_sum(table, s, ci, 2);
            const auto [hi, lo] = eigenpair_from_power_sums(p1, p2);
            for (double v : {hi, lo}) {
                bool appears = false;
                for (double e : eig) appears = appears || std::abs(e - v) < 1e-6;
                ok = ok && appears;
            }
        }
        ok = ok && spectra_match(group_spectrum(d, s), d, s, 1e-6, &detail);
        if (!ok) {
            detail = "n = " + std::to_string(n) + (detail.empty() ? "" : ": " + detail);
            break;
        }
    }
    report(7, "dihedral character tables are orthogonal and eigenpair recovery is oracle-exact",
           ok, detail);
}

// 8. Product-group audit on cyclic(5) x dihedral(5) with both factors over
//    B(1,5): the census finds two 1-index characters, the 50-vertex oracle
//    spectrum equals the tensor of the factor spectra, and the published
//    claim is emitted with an explicit consistency verdict.
void criterion_product_audit() {
    bool ok = true;
    std::string detail;
    const std::int64_t n = 5;

    const CharacterTable dihedral = dihedral_character_table(n);
    std::vector<GroupElement> rotations;
    for (std::int64_t i : nt::residue_class(1, n)) rotations.push_back(GroupElement{{{i, 0}}});
    const IndexCensus census = l_index_census(dihedral, rotations);
    ok = ok && census.count_of({1.0, 0.0}) == 2;
    if (!ok) detail = "census N(1) = " + std::to_string(census.count_of({1.0, 0.0}));

    const GroupSpec group = product(GroupSpec::cyclic(n), GroupSpec::dihedral(n));
    ConnectionSet s;
    s.sets.push_back(unitary_factor_set(n));
    s.sets.push_back(FactorSet{});
    for (std::int64_t i : nt::residue_class(1, n)) s.sets[1].elems.push_back({i, 0});
    s = validate_connection_set(group, s);

    // oracle spectrum of the 50-vertex graph vs the tensor of factor spectra
    const Spectrum cyclic_part = unitary_cyclic_spectrum(n);
    const Spectrum dihedral_part =
        group_spectrum(GroupSpec::dihedral(n), ConnectionSet{{s.sets[1]}});
    const Spectrum tensored = tensor_spectrum({cyclic_part, dihedral_part});
    if (ok) ok = spectra_match(tensored, group, s, 1e-6, &detail);

    // published claim 2 phi(n) phi(d) maximized over divisors = 32, with verdict
    std::int64_t max_phi = 0;
    for (std::int64_t d : nt::divisors(n)) max_phi = std::max(max_phi, nt::euler_phi(d));
    const std::int64_t expected_claim = 2 * nt::euler_phi(n) * max_phi;

    const BoundReport claim = product_group_bound(
        n, {{census.count_of({1.0, 0.0}), static_cast<std::int64_t>(s.sets[1].elems.size())}},
        group.order());
    ok = ok && claim.claimed_bound == expected_claim;

    const BoundReport audited =
        check_bound_against_oracle(group, s, claim.claimed_bound);
    ok = ok && audited.oracle_max_multiplicity.has_value() && audited.consistent.has_value() &&
         *audited.consistent ==
             (claim.claimed_bound <= *audited.oracle_max_multiplicity);
    if (ok) {
        detail = "claimed " + std::to_string(claim.claimed_bound) + ", oracle max " +
                 std::to_string(*audited.oracle_max_multiplicity) + ", consistent = " +
                 (*audited.consistent ? "true" : "false");
    }
    report(8, "product-group audit: census, tensor spectrum and bound verdict", ok, detail);
}

// 9. Negative controls: perturbed spectra fail verification, the CLI exits 3
//    on a corrupted fixture, and invalid connection sets raise the documented
//    error names.
void criterion_negative_controls() {
    bool ok = true;
    std::string detail;

    Spectrum wrong = unitary_cyclic_spectrum(6);
    wrong.pairs[1].multiplicity -= 1;
    const auto r = oracle::verify_spectrum(wrong, GroupSpec::cyclic(6),
                                           unitary_connection_set(6));
    ok = ok && !r.matched && !r.mismatches.empty();
    if (!ok) detail = "perturbed spectrum was not flagged";

    const GroupSpec c6 = GroupSpec::cyclic(6);
    try {
        validate_connection_set(c6, ConnectionSet{{FactorSet{{{1, 0}}}}});
        ok = false;
        detail = "missing NotInverseClosed";
    } catch (const Error& e) {
        ok = ok && e.name() == "NotInverseClosed";
    }
    try {
        validate_connection_set(c6, ConnectionSet{{FactorSet{{{0, 0}, {1, 0}, {5, 0}}}}});
        ok = false;
        detail = "missing IdentityInConnectionSet";
    } catch (const Error& e) {
        ok = ok && e.name() == "IdentityInConnectionSet";
    }

    // CLI: corrupt one multiplicity in a spectrum file, expect exit code 3
    const auto path = std::filesystem::temp_directory_path() / "cayspec_acceptance_fixture.json";
    {
        std::ofstream out(path);
        out << "{\"pairs\":[{\"value\":2,\"multiplicity\":1,\"exact\":true},"
               "{\"value\":1,\"multiplicity\":3,\"exact\":true},"
               "{\"value\":-1,\"multiplicity\":2,\"exact\":true},"
               "{\"value\":-2,\"multiplicity\":1,\"exact\":true}],\"order\":7,\"degree\":2}";
    }
    const int code = run_cli("verify --group cyclic:6 --connection unitary --spectrum-file " +
                             path.string());
    std::filesystem::remove(path);
    ok = ok && code == 3;
    if (code != 3) detail = "verify exit code " + std::to_string(code);

    report(9, "negative controls: perturbed spectra, corrupted fixture, invalid sets", ok,
           detail);
}

}  // namespace

int main() {
    criterion_prime_complete_graphs();
    criterion_unitary_range();
    criterion_ramanujan_integrality();
    criterion_residue_classes();
    criterion_totient_sum();
    criterion_nullity_bounds();
    criterion_dihedral_tables();
    criterion_product_audit();
    criterion_negative_controls();

    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria failed\n", failures);
    return 1;
}
