#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cayspec/errors.hpp"
#include "cayspec/matrix.hpp"

namespace cayspec {

// Adjacency matrices above this vertex count are refused (dense eigensolver
// budget); overridable per call.
inline constexpr std::int64_t kDefaultDenseCap = 4096;

enum class FactorKind { Cyclic, Dihedral };

// One direct-product factor: cyclic of order n, or dihedral with rotation
// order n (n odd, n >= 3; group order 2n).
struct Factor {
    FactorKind kind = FactorKind::Cyclic;
    std::int64_t n = 1;

    std::int64_t order() const { return kind == FactorKind::Cyclic ? n : 2 * n; }
    bool operator==(const Factor&) const = default;
};

struct GroupSpec {
    std::vector<Factor> factors;

    static GroupSpec cyclic(std::int64_t n);
    static GroupSpec dihedral(std::int64_t n);

    std::int64_t order() const;
    std::string to_string() const;  // e.g. "cyclic:3 x dihedral:5"
    bool operator==(const GroupSpec&) const = default;
};

// Direct product with the factors of rhs appended after those of lhs.
GroupSpec product(const GroupSpec& lhs, const GroupSpec& rhs);

// Per-factor coordinate: a^rot for cyclic, a^rot b^ref for dihedral
// (ref is 0 or 1 and always 0 on cyclic factors); 0 <= rot < n.
struct Coord {
    std::int64_t rot = 0;
    int ref = 0;

    auto operator<=>(const Coord&) const = default;
};

struct GroupElement {
    std::vector<Coord> coords;

    auto operator<=>(const GroupElement&) const = default;
};

GroupElement identity(const GroupSpec& group);

// Elements are enumerated factor-major lexicographically: the first factor's
// coordinate is most significant; within a dihedral factor rotations
// (ref = 0) come before reflections (ref = 1), rotation exponent ascending.
std::int64_t element_index(const GroupSpec& group, const GroupElement& g);
GroupElement element_at(const GroupSpec& group, std::int64_t index);

GroupElement multiply(const GroupSpec& group, const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupSpec& group, const GroupElement& g);

// Human-readable element label, e.g. "a^3", "a^1 b", "(a^2, a^0 b)".
std::string element_label(const GroupSpec& group, const GroupElement& g);
// Machine label without commas (CSV-safe): factors joined by '|'.
std::string element_key(const GroupSpec& group, const GroupElement& g);

// Generator subsets, one per factor; the realized connection set is their
// Cartesian product.
struct FactorSet {
    std::vector<Coord> elems;  // canonical form: sorted, deduplicated
};

struct ConnectionSet {
    std::vector<FactorSet> sets;

    // Size of the realized product set.
    std::int64_t size() const;
};

// Checks every factor set is nonempty, identity-free and inverse-closed
// within its factor, and returns the canonical (sorted, deduplicated) form.
ConnectionSet validate_connection_set(const GroupSpec& group, const ConnectionSet& s);

// S = {a^i : gcd(i, n) = 1} on cyclic(n); rejects n <= 1 where the set
// would contain the identity.
FactorSet unitary_factor_set(std::int64_t n);
ConnectionSet unitary_connection_set(std::int64_t n);

// Membership of g in the realized product set (assumes canonical form).
bool connection_contains(const ConnectionSet& s, const GroupElement& g);

// All realized connection-set elements in enumeration order.
std::vector<GroupElement> realize(const GroupSpec& group, const ConnectionSet& s);

// Adjacency matrix of the Cayley graph: entry (u, v) = 1 iff u * v^-1 lies
// in the realized connection set. Validates s and refuses groups larger
// than dense_cap vertices.
Matrix build_adjacency(const GroupSpec& group, const ConnectionSet& s,
                       std::int64_t dense_cap = kDefaultDenseCap);

// Textual grammar shared with the CLI.
//   group:      "cyclic:6", "dihedral:5", products joined by 'x'
//   connection: per-factor tokens joined by ';' --
//               "unitary" | "gcdclass:<d>" | "explicit:<items>"
//               items: cyclic exponents "1,5"; dihedral "r1,r4" / "s0,s2"
GroupSpec parse_group(const std::string& text);
ConnectionSet parse_connection(const GroupSpec& group, const std::string& text);

}  // namespace cayspec
