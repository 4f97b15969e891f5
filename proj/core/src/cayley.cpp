#include "cayspec/cayley.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>

#include "cayspec/numtheory.hpp"

namespace cayspec {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
    a %= n;
    return a < 0 ? a + n : a;
}

void require_factor(const Factor& f) {
    if (f.kind == FactorKind::Cyclic) {
        if (f.n < 1 || f.n > numtheory::kMaxInput) {
            throw InvalidInput("cyclic factor order must be in [1, 2^31-1], got " +
                               std::to_string(f.n));
        }
    } else {
        if (f.n < 3 || f.n % 2 == 0) {
            throw InvalidInput("dihedral factor requires odd rotation order >= 3, got " +
                               std::to_string(f.n));
        }
    }
}

void require_element(const GroupSpec& group, const GroupElement& g, const char* fn) {
    if (g.coords.size() != group.factors.size()) {
        throw InvalidInput(std::string(fn) + ": element has " + std::to_string(g.coords.size()) +
                           " coordinates but the group has " +
                           std::to_string(group.factors.size()) + " factors");
    }
    for (std::size_t i = 0; i < g.coords.size(); ++i) {
        const Factor& f = group.factors[i];
        const Coord& c = g.coords[i];
        const bool bad_ref = (f.kind == FactorKind::Cyclic) ? c.ref != 0
                                                            : (c.ref != 0 && c.ref != 1);
        if (c.rot < 0 || c.rot >= f.n || bad_ref) {
            throw InvalidInput(std::string(fn) + ": coordinate " + std::to_string(i) +
                               " is outside factor " + std::to_string(i));
        }
    }
}

Coord factor_multiply(const Factor& f, const Coord& a, const Coord& b) {
    if (f.kind == FactorKind::Cyclic) {
        return {mod(a.rot + b.rot, f.n), 0};
    }
    // a^k1 b^e1 * a^k2 b^e2 = a^(k1 + (-1)^e1 k2) b^(e1 xor e2)
    const std::int64_t k = (a.ref == 0) ? a.rot + b.rot : a.rot - b.rot;
    return {mod(k, f.n), a.ref ^ b.ref};
}

Coord factor_inverse(const Factor& f, const Coord& a) {
    if (f.kind == FactorKind::Cyclic) return {mod(-a.rot, f.n), 0};
    return (a.ref == 0) ? Coord{mod(-a.rot, f.n), 0} : a;  // reflections are involutions
}

std::string coord_label(const Factor& f, const Coord& c) {
    std::string s = "a^" + std::to_string(c.rot);
    if (f.kind == FactorKind::Dihedral && c.ref == 1) s += " b";
    return s;
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

std::int64_t parse_int(const std::string& token, const std::string& context) {
    if (token.empty()) throw InvalidInput(context + ": missing integer");
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(token, &pos);
    } catch (const std::exception&) {
        throw InvalidInput(context + ": '" + token + "' is not an integer");
    }
    if (pos != token.size()) {
        throw InvalidInput(context + ": '" + token + "' is not an integer");
    }
    return v;
}

}  // namespace

GroupSpec GroupSpec::cyclic(std::int64_t n) {
    GroupSpec g{{Factor{FactorKind::Cyclic, n}}};
    require_factor(g.factors[0]);
    return g;
}

GroupSpec GroupSpec::dihedral(std::int64_t n) {
    GroupSpec g{{Factor{FactorKind::Dihedral, n}}};
    require_factor(g.factors[0]);
    return g;
}

std::int64_t GroupSpec::order() const {
    std::int64_t n = 1;
    for (const Factor& f : factors) n *= f.order();
    return n;
}

std::string GroupSpec::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) s += " x ";
        s += (factors[i].kind == FactorKind::Cyclic ? "cyclic:" : "dihedral:") +
             std::to_string(factors[i].n);
    }
    return s;
}

GroupSpec product(const GroupSpec& lhs, const GroupSpec& rhs) {
    GroupSpec g = lhs;
    g.factors.insert(g.factors.end(), rhs.factors.begin(), rhs.factors.end());
    return g;
}

GroupElement identity(const GroupSpec& group) {
    return GroupElement{std::vector<Coord>(group.factors.size())};
}

std::int64_t element_index(const GroupSpec& group, const GroupElement& g) {
    require_element(group, g, "element_index");
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < group.factors.size(); ++i) {
        const Factor& f = group.factors[i];
        const Coord& c = g.coords[i];
        const std::int64_t local =
            (f.kind == FactorKind::Cyclic) ? c.rot : c.ref * f.n + c.rot;
        idx = idx * f.order() + local;
    }
    return idx;
}

GroupElement element_at(const GroupSpec& group, std::int64_t index) {
    if (index < 0 || index >= group.order()) {
        throw InvalidInput("element_at: index " + std::to_string(index) + " out of range");
    }
    GroupElement g{std::vector<Coord>(group.factors.size())};
    for (std::size_t i = group.factors.size(); i-- > 0;) {
        const Factor& f = group.factors[i];
        const std::int64_t local = index % f.order();
        index /= f.order();
        if (f.kind == FactorKind::Cyclic) {
            g.coords[i] = {local, 0};
        } else {
            g.coords[i] = {local % f.n, static_cast<int>(local / f.n)};
        }
    }
    return g;
}

GroupElement multiply(const GroupSpec& group, const GroupElement& g, const GroupElement& h) {
    require_element(group, g, "multiply");
    require_element(group, h, "multiply");
    GroupElement out{std::vector<Coord>(group.factors.size())};
    for (std::size_t i = 0; i < group.factors.size(); ++i) {
        out.coords[i] = factor_multiply(group.factors[i], g.coords[i], h.coords[i]);
    }
    return out;
}

GroupElement inverse(const GroupSpec& group, const GroupElement& g) {
    require_element(group, g, "inverse");
    GroupElement out{std::vector<Coord>(group.factors.size())};
    for (std::size_t i = 0; i < group.factors.size(); ++i) {
        out.coords[i] = factor_inverse(group.factors[i], g.coords[i]);
    }
    return out;
}

std::string element_label(const GroupSpec& group, const GroupElement& g) {
    require_element(group, g, "element_label");
    if (group.factors.size() == 1) return coord_label(group.factors[0], g.coords[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < g.coords.size(); ++i) {
        if (i > 0) s += ", ";
        s += coord_label(group.factors[i], g.coords[i]);
    }
    return s + ")";
}

std::string element_key(const GroupSpec& group, const GroupElement& g) {
    require_element(group, g, "element_key");
    std::string s;
    for (std::size_t i = 0; i < g.coords.size(); ++i) {
        if (i > 0) s += "|";
        s += coord_label(group.factors[i], g.coords[i]);
    }
    return s;
}

std::int64_t ConnectionSet::size() const {
    std::int64_t n = 1;
    for (const FactorSet& s : sets) n *= static_cast<std::int64_t>(s.elems.size());
    return n;
}

ConnectionSet validate_connection_set(const GroupSpec& group, const ConnectionSet& s) {
    if (s.sets.size() != group.factors.size()) {
        throw InvalidInput("connection set lists " + std::to_string(s.sets.size()) +
                           " factor sets but the group has " +
                           std::to_string(group.factors.size()) + " factors");
    }
    ConnectionSet out;
    out.sets.resize(s.sets.size());
    for (std::size_t i = 0; i < s.sets.size(); ++i) {
        const Factor& f = group.factors[i];
        std::vector<Coord> elems = s.sets[i].elems;
        if (elems.empty()) {
            throw EmptyFactorSet("factor " + std::to_string(i) + " has an empty generator set");
        }
        for (Coord& c : elems) {
            if (f.kind == FactorKind::Cyclic && c.ref != 0) {
                throw InvalidInput("reflection generator on cyclic factor " + std::to_string(i));
            }
            if (c.ref != 0 && c.ref != 1) {
                throw InvalidInput("bad reflection bit on factor " + std::to_string(i));
            }
            c.rot = mod(c.rot, f.n);
        }
        std::sort(elems.begin(), elems.end());
        elems.erase(std::unique(elems.begin(), elems.end()), elems.end());

        for (const Coord& c : elems) {
            if (c.rot == 0 && c.ref == 0) {
                throw IdentityInConnectionSet("factor " + std::to_string(i) +
                                              " contains the identity");
            }
        }
        for (const Coord& c : elems) {
            const Coord inv = factor_inverse(f, c);
            if (!std::binary_search(elems.begin(), elems.end(), inv)) {
                throw NotInverseClosed("factor " + std::to_string(i) + ": inverse of " +
                                       coord_label(f, c) + " (" + coord_label(f, inv) +
                                       ") is missing");
            }
        }
        out.sets[i].elems = std::move(elems);
    }
    return out;
}

FactorSet unitary_factor_set(std::int64_t n) {
    if (n <= 1) {
        throw EmptyFactorSet("unitary connection set needs n >= 2, got " + std::to_string(n));
    }
    FactorSet s;
    for (std::int64_t i : numtheory::residue_class(1, n)) s.elems.push_back({i, 0});
    return s;
}

ConnectionSet unitary_connection_set(std::int64_t n) {
    return ConnectionSet{{unitary_factor_set(n)}};
}

bool connection_contains(const ConnectionSet& s, const GroupElement& g) {
    if (g.coords.size() != s.sets.size()) return false;
    for (std::size_t i = 0; i < s.sets.size(); ++i) {
        const auto& elems = s.sets[i].elems;
        if (!std::binary_search(elems.begin(), elems.end(), g.coords[i])) return false;
    }
    return true;
}

std::vector<GroupElement> realize(const GroupSpec& group, const ConnectionSet& s) {
    if (s.sets.size() != group.factors.size()) {
        throw InvalidInput("realize: connection set does not match the group's factor count");
    }
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(s.size()));
    GroupElement cur{std::vector<Coord>(group.factors.size())};
    std::vector<std::size_t> pos(group.factors.size(), 0);
    if (s.size() == 0) return out;
    for (;;) {
        for (std::size_t i = 0; i < pos.size(); ++i) cur.coords[i] = s.sets[i].elems[pos[i]];
        out.push_back(cur);
        std::size_t i = pos.size();
        while (i-- > 0) {
            if (++pos[i] < s.sets[i].elems.size()) break;
            pos[i] = 0;
            if (i == 0) return out;
        }
    }
}

Matrix build_adjacency(const GroupSpec& group, const ConnectionSet& s, std::int64_t dense_cap) {
    const ConnectionSet canon = validate_connection_set(group, s);
    const std::int64_t n = group.order();
    if (n > dense_cap) {
        throw TooLargeForDenseOracle("group order " + std::to_string(n) +
                                     " exceeds the dense cap " + std::to_string(dense_cap));
    }
    const auto size = static_cast<std::size_t>(n);
    Matrix a(size, size, 0.0);
    const std::vector<GroupElement> gens = realize(group, canon);
    for (std::int64_t u = 0; u < n; ++u) {
        const GroupElement ue = element_at(group, u);
        for (const GroupElement& g : gens) {
            // u ~ v iff u v^-1 in S, i.e. v = s^-1 u
            const std::int64_t v = element_index(group, multiply(group, inverse(group, g), ue));
            a(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) = 1.0;
        }
    }
    return a;
}

GroupSpec parse_group(const std::string& text) {
    GroupSpec group;
    for (const std::string& token : split(text, 'x')) {
        if (token.empty()) throw InvalidInput("group: empty factor token in '" + text + "'");
        const std::size_t colon = token.find(':');
        if (colon == std::string::npos) {
            throw InvalidInput("group: factor '" + token + "' is missing ':<order>'");
        }
        const std::string name = trim(token.substr(0, colon));
        const std::int64_t n = parse_int(trim(token.substr(colon + 1)), "group factor '" + token + "'");
        Factor f;
        if (name == "cyclic") {
            f = {FactorKind::Cyclic, n};
        } else if (name == "dihedral") {
            f = {FactorKind::Dihedral, n};
        } else {
            throw InvalidInput("group: unknown factor kind '" + name +
                               "' (expected cyclic or dihedral)");
        }
        require_factor(f);
        group.factors.push_back(f);
    }
    if (group.factors.empty()) throw InvalidInput("group: no factors in '" + text + "'");
    return group;
}

namespace {

FactorSet parse_factor_set(const Factor& f, const std::string& token) {
    if (token == "unitary") {
        if (f.kind != FactorKind::Cyclic) {
            throw InvalidInput("connection: 'unitary' applies only to cyclic factors");
        }
        return unitary_factor_set(f.n);
    }
    if (token.rfind("gcdclass:", 0) == 0) {
        if (f.kind != FactorKind::Cyclic) {
            throw InvalidInput("connection: 'gcdclass' applies only to cyclic factors");
        }
        const std::int64_t d = parse_int(trim(token.substr(9)), "connection '" + token + "'");
        if (d < 1 || f.n % d != 0) {
            throw InvalidInput("connection: gcdclass divisor " + std::to_string(d) +
                               " does not divide " + std::to_string(f.n));
        }
        FactorSet s;
        for (std::int64_t i : numtheory::residue_class(d, f.n)) s.elems.push_back({i % f.n, 0});
        return s;
    }
    if (token.rfind("explicit:", 0) == 0) {
        FactorSet s;
        for (const std::string& item : split(token.substr(9), ',')) {
            if (item.empty()) {
                throw InvalidInput("connection: empty item in '" + token + "'");
            }
            if (f.kind == FactorKind::Cyclic) {
                s.elems.push_back({parse_int(item, "connection item '" + item + "'"), 0});
            } else if (item[0] == 'r' || item[0] == 's') {
                const std::int64_t k = parse_int(item.substr(1), "connection item '" + item + "'");
                s.elems.push_back({k, item[0] == 's' ? 1 : 0});
            } else {
                throw InvalidInput("connection: dihedral item '" + item +
                                   "' must start with r (rotation) or s (reflection)");
            }
        }
        return s;
    }
    throw InvalidInput("connection: unknown token '" + token +
                       "' (expected unitary, gcdclass:<d> or explicit:<items>)");
}

}  // namespace

ConnectionSet parse_connection(const GroupSpec& group, const std::string& text) {
    const std::vector<std::string> tokens = split(text, ';');
    if (tokens.size() != group.factors.size()) {
        throw InvalidInput("connection lists " + std::to_string(tokens.size()) +
                           " factor sets but the group has " +
                           std::to_string(group.factors.size()) + " factors");
    }
    ConnectionSet s;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        s.sets.push_back(parse_factor_set(group.factors[i], tokens[i]));
    }
    return validate_connection_set(group, s);
}

}  // namespace cayspec
