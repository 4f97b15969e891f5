#include "cayspec/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <string>

namespace cayspec {

namespace {

// Character tables are materialized per element; keep requests desk scale.
constexpr std::int64_t kMaxTableOrder = 1 << 20;

std::complex<double> unit_root(std::int64_t num, std::int64_t den) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(num) /
                         static_cast<double>(den);
    return {std::cos(angle), std::sin(angle)};
}

void require_table_order(std::int64_t order) {
    if (order > kMaxTableOrder) {
        throw InvalidInput("character table for a group of order " + std::to_string(order) +
                           " is too large to materialize");
    }
}

}  // namespace

CharValue CharValue::root_of_unity(std::int64_t num, std::int64_t den) {
    num %= den;
    if (num < 0) num += den;
    const std::int64_t g = std::gcd(num == 0 ? den : num, den);
    num /= g;
    den /= g;
    return {unit_root(num, den), true, num, den};
}

CharValue CharValue::times(const CharValue& other) const {
    if (exact && other.exact) {
        // exponent addition: num/den + num'/den' mod 1
        return root_of_unity(num * other.den + other.num * den, den * other.den);
    }
    return approx(value * other.value);
}

bool CharValue::same_value(const CharValue& other, double tol) const {
    if (exact && other.exact) return num == other.num && den == other.den;
    return std::abs(value - other.value) <= tol;
}

CharacterTable cyclic_character_table(std::int64_t n) {
    const GroupSpec group = GroupSpec::cyclic(n);
    require_table_order(n);
    CharacterTable table{group, {}};
    table.characters.resize(static_cast<std::size_t>(n));
    for (std::int64_t j = 0; j < n; ++j) {
        Character& chi = table.characters[static_cast<std::size_t>(j)];
        chi.degree = 1;
        chi.values.reserve(static_cast<std::size_t>(n));
        for (std::int64_t k = 0; k < n; ++k) {
            chi.values.push_back(CharValue::root_of_unity(j * k % n, n));
        }
    }
    return table;
}

CharacterTable dihedral_character_table(std::int64_t n) {
    const GroupSpec group = GroupSpec::dihedral(n);  // rejects even or small n
    require_table_order(group.order());
    const std::int64_t m = (n - 1) / 2;
    CharacterTable table{group, {}};

    // chi_j, degree 2: 2 cos(2 pi j k / n) on rotations, 0 on reflections
    for (std::int64_t j = 1; j <= m; ++j) {
        Character chi;
        chi.degree = 2;
        chi.values.reserve(static_cast<std::size_t>(2 * n));
        for (std::int64_t k = 0; k < n; ++k) {
            const std::complex<double> w = unit_root(j * k % n, n);
            chi.values.push_back(CharValue::approx(w + std::conj(w)));
        }
        for (std::int64_t k = 0; k < n; ++k) {
            chi.values.push_back(CharValue::approx({0.0, 0.0}));
        }
        table.characters.push_back(std::move(chi));
    }

    // chi_{m+1}: 1 on rotations, -1 on reflections
    Character sign;
    sign.degree = 1;
    for (std::int64_t k = 0; k < 2 * n; ++k) {
        sign.values.push_back(k < n ? CharValue::root_of_unity(0, 1)
                                    : CharValue::root_of_unity(1, 2));
    }
    table.characters.push_back(std::move(sign));

    // chi_{m+2}: trivial
    Character trivial;
    trivial.degree = 1;
    trivial.values.assign(static_cast<std::size_t>(2 * n), CharValue::root_of_unity(0, 1));
    table.characters.push_back(std::move(trivial));
    return table;
}

CharacterTable product_character_table(const std::vector<CharacterTable>& tables) {
    if (tables.empty()) {
        throw InvalidInput("product_character_table: empty factor list");
    }
    if (tables.size() == 1) return tables.front();

    GroupSpec group = tables.front().group;
    for (std::size_t i = 1; i < tables.size(); ++i) group = product(group, tables[i].group);
    require_table_order(group.order());

    const std::size_t t = tables.size();
    std::vector<std::int64_t> orders(t);
    std::size_t char_count = 1;
    for (std::size_t i = 0; i < t; ++i) {
        orders[i] = tables[i].group.order();
        char_count *= tables[i].characters.size();
    }

    CharacterTable out{group, {}};
    out.characters.reserve(char_count);

    std::vector<std::size_t> ci(t, 0);  // character index per factor table
    for (;;) {
        Character chi;
        chi.degree = 1;
        for (std::size_t i = 0; i < t; ++i) chi.degree *= tables[i].characters[ci[i]].degree;
        chi.values.reserve(static_cast<std::size_t>(group.order()));
        for (std::int64_t e = 0; e < group.order(); ++e) {
            // decode e into per-table element indices, first table most significant
            std::vector<std::int64_t> ei(t);
            std::int64_t rem = e;
            for (std::size_t i = t; i-- > 0;) {
                ei[i] = rem % orders[i];
                rem /= orders[i];
            }
            CharValue v = tables[0].characters[ci[0]].values[static_cast<std::size_t>(ei[0])];
            for (std::size_t i = 1; i < t; ++i) {
                v = v.times(tables[i].characters[ci[i]].values[static_cast<std::size_t>(ei[i])]);
            }
            chi.values.push_back(v);
        }
        out.characters.push_back(std::move(chi));

        std::size_t i = t;
        bool done = true;
        while (i-- > 0) {
            if (++ci[i] < tables[i].characters.size()) {
                done = false;
                break;
            }
            ci[i] = 0;
        }
        if (done) break;
    }
    return out;
}

CharacterTable standard_character_table(const GroupSpec& group) {
    if (group.factors.empty()) throw InvalidInput("standard_character_table: empty group");
    std::vector<CharacterTable> tables;
    tables.reserve(group.factors.size());
    for (const Factor& f : group.factors) {
        tables.push_back(f.kind == FactorKind::Cyclic ? cyclic_character_table(f.n)
                                                      : dihedral_character_table(f.n));
    }
    return product_character_table(tables);
}

std::int64_t IndexCensus::count_of(std::complex<double> l, double tol) const {
    for (const Entry& e : entries) {
        if (std::abs(e.value.value - l) <= tol) return e.count;
    }
    return 0;
}

std::int64_t IndexCensus::max_count() const {
    std::int64_t best = 0;
    for (const Entry& e : entries) best = std::max(best, e.count);
    return best;
}

std::int64_t IndexCensus::total() const {
    std::int64_t sum = 0;
    for (const Entry& e : entries) sum += e.count;
    return sum;
}

IndexCensus l_index_census(const CharacterTable& table,
                           const std::vector<GroupElement>& connection) {
    if (connection.empty()) {
        throw InvalidInput("l_index_census: empty connection set");
    }
    // deduplicate and range-check (element_index validates membership)
    std::set<std::int64_t> indices;
    for (const GroupElement& g : connection) {
        indices.insert(element_index(table.group, g));
    }

    IndexCensus census;
    for (const Character& chi : table.characters) {
        if (chi.degree != 1) continue;
        const CharValue& first = chi.values[static_cast<std::size_t>(*indices.begin())];
        bool constant = true;
        for (std::int64_t idx : indices) {
            if (!chi.values[static_cast<std::size_t>(idx)].same_value(first)) {
                constant = false;
                break;
            }
        }
        if (!constant) continue;
        bool found = false;
        for (IndexCensus::Entry& e : census.entries) {
            if (e.value.same_value(first)) {
                ++e.count;
                found = true;
                break;
            }
        }
        if (!found) census.entries.push_back({first, 1});
    }
    return census;
}

}  // namespace cayspec
