// cayspec command-line front end: closed-form Cayley graph spectra, nullity
// bounds, character tables, Ramanujan sum tables and oracle verification.
//
// Exit codes: 0 success/matched, 2 input error, 3 verification mismatch,
// 4 unsupported shape, 5 internal numerical failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "cayspec/cayley.hpp"
#include "cayspec/characters.hpp"
#include "cayspec/errors.hpp"
#include "cayspec/nullity.hpp"
#include "cayspec/numtheory.hpp"
#include "cayspec/oracle.hpp"
#include "cayspec/spectrum.hpp"

using json = nlohmann::json;
using namespace cayspec;
namespace nt = cayspec::numtheory;

namespace {

// Shapes the library can represent but the closed forms do not cover
// (mapped to exit code 4).
struct UnsupportedShape {
    std::string message;
};

struct Options {
    std::string group_text;
    std::string connection_text;
    std::string format = "table";
    double tol = 1e-7;
    double group_tol = kDefaultGroupTol;
    std::int64_t max_order = kDefaultDenseCap;
    bool verify = false;
    bool exact = false;
    bool per_divisor = false;
    std::int64_t ramanujan_n = 1;
    std::string spectrum_file;
};

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string format_value(const SpectrumPair& p) {
    if (p.exact) return std::to_string(static_cast<std::int64_t>(std::llround(p.value)));
    return format_real(p.value);
}

std::string format_complex(std::complex<double> z) {
    if (std::abs(z.imag()) < 1e-12) return format_real(z.real());
    return format_real(z.real()) + (z.imag() < 0 ? "-" : "+") +
           format_real(std::abs(z.imag())) + "i";
}

// ---------------------------------------------------------------- spectrum

// Exact integer circulant spectrum when the exponent set is a union of
// complete gcd classes B(d, n): the j-th eigenvalue is the sum of the
// Ramanujan sums C(j, n/d) over the classes.
std::optional<Spectrum> exact_circulant_spectrum(std::int64_t n,
                                                 const std::vector<std::int64_t>& exponents) {
    std::map<std::int64_t, std::int64_t> class_count;
    for (std::int64_t i : exponents) ++class_count[std::gcd(i, n)];
    for (const auto& [d, count] : class_count) {
        if (count != nt::euler_phi(n / d)) return std::nullopt;  // incomplete class
    }
    std::map<std::int64_t, std::int64_t, std::greater<>> merged;
    for (std::int64_t j = 0; j < n; ++j) {
        std::int64_t value = 0;
        for (const auto& [d, count] : class_count) value += nt::ramanujan_hoelder(j, n / d);
        ++merged[value];
    }
    Spectrum out;
    for (const auto& [value, mult] : merged) {
        out.pairs.push_back({static_cast<double>(value), mult, true});
    }
    return out;
}

Spectrum closed_spectrum(const GroupSpec& group, const ConnectionSet& conn, const Options& opt) {
    if (group.factors.size() == 1 && group.factors[0].kind == FactorKind::Cyclic) {
        const std::int64_t n = group.factors[0].n;
        std::vector<std::int64_t> exponents;
        for (const Coord& c : conn.sets[0].elems) exponents.push_back(c.rot);

        if (exponents == nt::residue_class(1, n)) {
            return unitary_cyclic_spectrum(n);  // divisor closed form, exact integers
        }
        if (opt.exact) {
            if (auto s = exact_circulant_spectrum(n, exponents)) return *s;
            throw UnsupportedShape{"--exact needs a union of complete gcd classes "
                                   "(unitary or gcdclass sets) on a cyclic group"};
        }
        return circulant_spectrum(n, exponents, opt.group_tol);
    }
    if (opt.exact) {
        throw UnsupportedShape{"--exact is available for cyclic groups only"};
    }
    return group_spectrum(group, conn, opt.group_tol);
}

json spectrum_to_json(const Spectrum& s, std::int64_t degree) {
    json pairs = json::array();
    for (const SpectrumPair& p : s.pairs) {
        pairs.push_back({{"value", p.value}, {"multiplicity", p.multiplicity}, {"exact", p.exact}});
    }
    return {{"pairs", pairs}, {"order", s.order()}, {"degree", degree}};
}

void render_spectrum(const Spectrum& s, std::int64_t degree, const Options& opt) {
    if (opt.format == "json") {
        std::cout << spectrum_to_json(s, degree).dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "value,multiplicity,exact\n";
        for (const SpectrumPair& p : s.pairs) {
            std::cout << format_value(p) << "," << p.multiplicity << ","
                      << (p.exact ? "true" : "false") << "\n";
        }
    } else {
        std::printf("%16s  %12s  %5s\n", "eigenvalue", "multiplicity", "exact");
        for (const SpectrumPair& p : s.pairs) {
            std::printf("%16s  %12lld  %5s\n", format_value(p).c_str(),
                        static_cast<long long>(p.multiplicity), p.exact ? "yes" : "no");
        }
        std::printf("order: %lld   degree: %lld\n", static_cast<long long>(s.order()),
                    static_cast<long long>(degree));
    }
}

Spectrum load_spectrum_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open spectrum file '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw InvalidInput("spectrum file '" + path + "': " + e.what());
    }
    if (!doc.contains("pairs") || !doc["pairs"].is_array()) {
        throw InvalidInput("spectrum file '" + path + "' has no pairs array");
    }
    std::vector<SpectrumPair> pairs;
    for (const json& p : doc["pairs"]) {
        pairs.push_back({p.at("value").get<double>(), p.at("multiplicity").get<std::int64_t>(),
                         p.value("exact", false)});
    }
    return spectrum_from_pairs(std::move(pairs), 0.0);
}

int run_spectrum(const Options& opt) {
    const GroupSpec group = parse_group(opt.group_text);
    const ConnectionSet conn = parse_connection(group, opt.connection_text);
    const Spectrum s = closed_spectrum(group, conn, opt);
    render_spectrum(s, conn.size(), opt);
    return 0;
}

// ----------------------------------------------------------------- nullity

json report_to_json(const BoundReport& r, bool with_divisors) {
    json doc = {{"order", r.order},
                {"claimed", r.claimed_bound},
                {"oracle_max_multiplicity",
                 r.oracle_max_multiplicity ? json(*r.oracle_max_multiplicity) : json(nullptr)},
                {"consistent", r.consistent ? json(*r.consistent) : json(nullptr)},
                {"mr_upper", r.mr_upper},
                {"per_divisor", json::array()}};
    if (with_divisors) {
        for (const DivisorBound& row : r.per_divisor) {
            doc["per_divisor"].push_back({{"divisor", row.divisor},
                                          {"phi", row.phi},
                                          {"eigenvalue", row.eigenvalue},
                                          {"pooled_zero", row.pooled_zero}});
        }
    }
    return doc;
}

void render_report(const BoundReport& r, const Options& opt) {
    const bool with_divisors = opt.per_divisor;
    const std::string oracle_text =
        r.oracle_max_multiplicity ? std::to_string(*r.oracle_max_multiplicity) : "";
    const std::string verdict_text =
        r.consistent ? (*r.consistent ? "true" : "false") : "";
    if (opt.format == "json") {
        std::cout << report_to_json(r, with_divisors).dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "order,claimed,oracle_max_multiplicity,consistent,mr_upper";
        if (with_divisors) std::cout << ",divisor,phi,eigenvalue,pooled_zero";
        std::cout << "\n";
        const std::string prefix = std::to_string(r.order) + "," +
                                   std::to_string(r.claimed_bound) + "," + oracle_text + "," +
                                   verdict_text + "," + std::to_string(r.mr_upper);
        if (!with_divisors) {
            std::cout << prefix << "\n";
        } else {
            for (const DivisorBound& row : r.per_divisor) {
                std::cout << prefix << "," << row.divisor << "," << row.phi << ","
                          << row.eigenvalue << "," << (row.pooled_zero ? "true" : "false")
                          << "\n";
            }
        }
    } else {
        std::printf("order:                    %lld\n", static_cast<long long>(r.order));
        std::printf("claimed nullity bound:    %lld\n", static_cast<long long>(r.claimed_bound));
        std::printf("mr upper bound:           %lld\n", static_cast<long long>(r.mr_upper));
        if (r.oracle_max_multiplicity) {
            std::printf("oracle max multiplicity:  %s\n", oracle_text.c_str());
            std::printf("consistent:               %s\n", verdict_text.c_str());
        }
        if (with_divisors) {
            std::printf("%10s  %10s  %12s  %12s\n", "divisor", "phi", "eigenvalue", "pooled");
            for (const DivisorBound& row : r.per_divisor) {
                std::printf("%10lld  %10lld  %12lld  %12s\n",
                            static_cast<long long>(row.divisor),
                            static_cast<long long>(row.phi),
                            static_cast<long long>(row.eigenvalue),
                            row.pooled_zero ? "zero-pool" : "-");
            }
        }
    }
}

int run_nullity(const Options& opt) {
    const GroupSpec group = parse_group(opt.group_text);
    const ConnectionSet conn = parse_connection(group, opt.connection_text);

    if (group.factors[0].kind != FactorKind::Cyclic) {
        throw UnsupportedShape{"nullity bounds need a cyclic first factor"};
    }
    const std::int64_t n = group.factors[0].n;
    if (conn.sets[0].elems != unitary_factor_set(n).elems) {
        throw UnsupportedShape{
            "nullity bounds need the unitary connection set on the cyclic factor"};
    }

    BoundReport report;
    if (group.factors.size() == 1) {
        report = unitary_cyclic_bound(n);
    } else {
        std::vector<FactorBoundData> data;
        for (std::size_t k = 1; k < group.factors.size(); ++k) {
            const GroupSpec factor_group{{group.factors[k]}};
            const CharacterTable table = standard_character_table(factor_group);
            std::vector<GroupElement> elems;
            for (const Coord& c : conn.sets[k].elems) elems.push_back(GroupElement{{c}});
            const IndexCensus census = l_index_census(table, elems);
            data.push_back({census.max_count(),
                            static_cast<std::int64_t>(conn.sets[k].elems.size())});
        }
        report = product_group_bound(n, data, group.order());
    }

    if (opt.verify) {
        const BoundReport audit = check_bound_against_oracle(group, conn, report.claimed_bound,
                                                             opt.group_tol, opt.max_order);
        report.oracle_max_multiplicity = audit.oracle_max_multiplicity;
        report.consistent = audit.consistent;
    }
    render_report(report, opt);
    return 0;
}

// ------------------------------------------------------------------ verify

void render_verification(const oracle::VerificationReport& r, const Options& opt) {
    if (opt.format == "json") {
        json mismatches = json::array();
        for (const auto& m : r.mismatches) {
            mismatches.push_back({{"value", m.closed_value},
                                  {"closed_multiplicity", m.closed_multiplicity},
                                  {"oracle_multiplicity", m.oracle_multiplicity}});
        }
        const json doc = {{"matched", r.matched},
                          {"max_value_error", r.max_value_error},
                          {"tolerance", r.tolerance},
                          {"mismatches", mismatches}};
        std::cout << doc.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "matched,max_value_error,tolerance,closed_value,closed_multiplicity,"
                     "oracle_multiplicity\n";
        const std::string prefix = std::string(r.matched ? "true" : "false") + "," +
                                   format_real(r.max_value_error) + "," +
                                   format_real(r.tolerance);
        if (r.mismatches.empty()) {
            std::cout << prefix << ",,,\n";
        } else {
            for (const auto& m : r.mismatches) {
                std::cout << prefix << "," << format_real(m.closed_value) << ","
                          << m.closed_multiplicity << "," << m.oracle_multiplicity << "\n";
            }
        }
    } else {
        std::printf("matched:          %s\n", r.matched ? "true" : "false");
        std::printf("max value error:  %s\n", format_real(r.max_value_error).c_str());
        std::printf("tolerance:        %s\n", format_real(r.tolerance).c_str());
        for (const auto& m : r.mismatches) {
            std::printf("mismatch at %s: closed multiplicity %lld, oracle %lld\n",
                        format_real(m.closed_value).c_str(),
                        static_cast<long long>(m.closed_multiplicity),
                        static_cast<long long>(m.oracle_multiplicity));
        }
    }
}

int run_verify(const Options& opt) {
    const GroupSpec group = parse_group(opt.group_text);
    const ConnectionSet conn = parse_connection(group, opt.connection_text);
    const Spectrum closed = opt.spectrum_file.empty() ? closed_spectrum(group, conn, opt)
                                                      : load_spectrum_json(opt.spectrum_file);
    const auto report =
        oracle::verify_spectrum(closed, group, conn, opt.tol, opt.group_tol, opt.max_order);
    render_verification(report, opt);
    return report.matched ? 0 : 3;
}

// --------------------------------------------------------------- ramanujan

int run_ramanujan(const Options& opt) {
    const std::int64_t n = opt.ramanujan_n;
    if (n < 1) throw InvalidInput("ramanujan: n must be a positive integer");
    std::vector<std::int64_t> values;
    for (std::int64_t r = 0; r < n; ++r) values.push_back(nt::ramanujan_hoelder(r, n));

    if (opt.format == "json") {
        const json doc = {{"n", n}, {"values", values}};
        std::cout << doc.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "r,value\n";
        for (std::int64_t r = 0; r < n; ++r) {
            std::cout << r << "," << values[static_cast<std::size_t>(r)] << "\n";
        }
    } else {
        std::printf("%8s  %12s\n", "r", "C(r,n)");
        for (std::int64_t r = 0; r < n; ++r) {
            std::printf("%8lld  %12lld\n", static_cast<long long>(r),
                        static_cast<long long>(values[static_cast<std::size_t>(r)]));
        }
    }
    return 0;
}

// --------------------------------------------------------------- chartable

int run_chartable(const Options& opt) {
    const GroupSpec group = parse_group(opt.group_text);
    const CharacterTable table = standard_character_table(group);
    const std::int64_t order = group.order();

    std::vector<std::string> labels;
    for (std::int64_t e = 0; e < order; ++e) {
        labels.push_back(element_key(group, element_at(group, e)));
    }

    if (opt.format == "json") {
        json characters = json::array();
        for (const Character& chi : table.characters) {
            json values = json::array();
            for (const CharValue& v : chi.values) {
                json entry = {{"re", v.value.real()}, {"im", v.value.imag()}, {"exact", v.exact}};
                if (v.exact) {
                    entry["num"] = v.num;
                    entry["den"] = v.den;
                }
                values.push_back(entry);
            }
            characters.push_back({{"degree", chi.degree}, {"values", values}});
        }
        const json doc = {{"group", group.to_string()},
                          {"order", order},
                          {"elements", labels},
                          {"characters", characters}};
        std::cout << doc.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "character,degree,element,re,im\n";
        for (std::size_t i = 0; i < table.characters.size(); ++i) {
            const Character& chi = table.characters[i];
            for (std::int64_t e = 0; e < order; ++e) {
                const CharValue& v = chi.values[static_cast<std::size_t>(e)];
                std::cout << i << "," << chi.degree << ","
                          << labels[static_cast<std::size_t>(e)] << ","
                          << format_real(v.value.real()) << "," << format_real(v.value.imag())
                          << "\n";
            }
        }
    } else {
        std::printf("group: %s   order: %lld   characters: %zu\n", group.to_string().c_str(),
                    static_cast<long long>(order), table.characters.size());
        std::printf("%8s  %6s", "", "degree");
        for (const std::string& l : labels) std::printf("  %14s", l.c_str());
        std::printf("\n");
        for (std::size_t i = 0; i < table.characters.size(); ++i) {
            const Character& chi = table.characters[i];
            std::printf("chi_%-4zu  %6d", i, chi.degree);
            for (const CharValue& v : chi.values) {
                std::printf("  %14s", format_complex(v.value).c_str());
            }
            std::printf("\n");
        }
    }
    return 0;
}

int exit_code_for(const Error& e) {
    const std::string& name = e.name();
    if (name == "UnsupportedDegree" || name == "UnsupportedPowerIndex") return 4;
    if (name == "NotSymmetric" || name == "ConvergenceFailure" ||
        name == "InconsistentPowerSums" || name == "InternalInconsistency") {
        return 5;
    }
    return 2;  // input-side errors
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cayley graph spectra, nullity bounds and brute-force verification"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&opt](CLI::App* sub, bool with_connection) {
        sub->add_option("--group", opt.group_text, "group grammar, e.g. 'cyclic:3 x dihedral:5'")
            ->required();
        if (with_connection) {
            sub->add_option("--connection", opt.connection_text,
                            "per-factor sets joined by ';': unitary | gcdclass:<d> | "
                            "explicit:<items>")
                ->required();
        }
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"table", "json", "csv"}));
        sub->add_option("--tol", opt.tol, "value comparison tolerance");
        sub->add_option("--group-tol", opt.group_tol, "eigenvalue grouping tolerance");
        sub->add_option("--max-order", opt.max_order, "dense eigensolver vertex cap");
    };

    CLI::App* spectrum = app.add_subcommand("spectrum", "closed-form spectrum of a Cayley graph");
    add_common(spectrum, true);
    spectrum->add_flag("--exact", opt.exact, "integer closed forms only; error if unavailable");

    CLI::App* nullity = app.add_subcommand("nullity", "maximum-nullity / minimum-rank bounds");
    add_common(nullity, true);
    nullity->add_flag("--verify", opt.verify, "audit the claimed bound against the eigensolver");
    nullity->add_flag("--per-divisor", opt.per_divisor, "include the per-divisor table");

    CLI::App* verify = app.add_subcommand("verify", "verify a spectrum against the eigensolver");
    add_common(verify, true);
    verify->add_option("--spectrum-file", opt.spectrum_file,
                       "verify this spectrum JSON instead of the closed form");

    CLI::App* ramanujan = app.add_subcommand("ramanujan", "table of C(r, n) for r = 0..n-1");
    ramanujan->add_option("--n", opt.ramanujan_n, "modulus n")->required();
    ramanujan->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));

    CLI::App* chartable = app.add_subcommand("chartable", "irreducible character table");
    add_common(chartable, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (spectrum->parsed()) return run_spectrum(opt);
        if (nullity->parsed()) return run_nullity(opt);
        if (verify->parsed()) return run_verify(opt);
        if (ramanujan->parsed()) return run_ramanujan(opt);
        if (chartable->parsed()) return run_chartable(opt);
    } catch (const UnsupportedShape& e) {
        std::cerr << "error: UnsupportedShape: " << e.message << "\n";
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    }
    return 0;
}
