#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "cayspec/cayley.hpp"

namespace cayspec {

// A character value. When the value is a single root of unity it carries the
// exact exponent num/den, meaning exp(2*pi*i*num/den), reduced to lowest
// terms with 0 <= num < den; exact values compare by exponent, everything
// else by complex distance.
struct CharValue {
    std::complex<double> value{0.0, 0.0};
    bool exact = false;
    std::int64_t num = 0;
    std::int64_t den = 1;

    static CharValue root_of_unity(std::int64_t num, std::int64_t den);
    static CharValue approx(std::complex<double> v) { return {v, false, 0, 1}; }

    CharValue times(const CharValue& other) const;
    bool same_value(const CharValue& other, double tol = 1e-9) const;
};

struct Character {
    int degree = 1;
    std::vector<CharValue> values;  // indexed by group element index
};

struct CharacterTable {
    GroupSpec group;
    std::vector<Character> characters;
};

// Table of cyclic(n): n degree-1 characters rho_j(a^k) = exp(2*pi*i*j*k/n),
// stored with exact exponents.
CharacterTable cyclic_character_table(std::int64_t n);

// Dihedral table for odd n = 2m+1: chi_1..chi_m of degree 2 with
// chi_j(a^k) = 2 cos(2*pi*j*k/n) and chi_j(a^k b) = 0, then the degree-1
// character that is -1 on reflections, then the trivial character.
CharacterTable dihedral_character_table(std::int64_t n);

// All tuple-wise products of the factor tables' characters; the first
// table's character index varies slowest.
CharacterTable product_character_table(const std::vector<CharacterTable>& tables);

// Factor tables for each factor of the group, multiplied together.
CharacterTable standard_character_table(const GroupSpec& group);

// Census of degree-1 characters constant on a connection set: maps each
// common value l to the number N_G(l) of characters attaining it.
struct IndexCensus {
    struct Entry {
        CharValue value;
        std::int64_t count = 0;
    };
    std::vector<Entry> entries;

    std::int64_t count_of(std::complex<double> l, double tol = 1e-9) const;
    std::int64_t max_count() const;
    std::int64_t total() const;
};

IndexCensus l_index_census(const CharacterTable& table,
                           const std::vector<GroupElement>& connection);

}  // namespace cayspec
