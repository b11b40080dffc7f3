#ifndef ROSTLAT_RENDER_HPP
#define ROSTLAT_RENDER_HPP

// Deterministic text rendering. Cocharacter maps use h-notation
// (`h2(-1) h5(-1) h7(-1)`, `h1(z) h3(z^2)`), cup products use the U+222A
// glyph; everything else is plain ASCII.

#include <sstream>
#include <string>

#include "rostlat/center.hpp"
#include "rostlat/cup.hpp"
#include "rostlat/matrix.hpp"
#include "rostlat/smith.hpp"

namespace rostlat {

// argument of h_i: "-1" for order two, otherwise a power of the primitive
// root z
inline std::string zeta_power(const Int& c, const Int& n) {
    if (n == 2) return "-1";
    if (c == 1) return "z";
    return "z^" + to_string(c);
}

inline std::string h_product(const CocharacterMap& z) {
    if (z.order == 1) return "1";
    std::string s;
    for (std::size_t i = 0; i < z.exponents.size(); ++i) {
        if (z.exponents[i] == 0) continue;
        if (!s.empty()) s += ' ';
        s += "h" + std::to_string(i + 1) + "(" + zeta_power(z.exponents[i], z.order) + ")";
    }
    return s.empty() ? "1" : s;
}

inline std::string render_set(const std::set<int>& s) {
    std::string out = "{";
    bool first = true;
    for (int v : s) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

inline std::string render_rational_vector(const RatVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += to_string(v[i]);
    }
    return out + ")";
}

inline std::string render_int_tuple(const std::vector<Int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += to_string(v[i]);
    }
    return out + ")";
}

inline std::string render_group(const FiniteAbelianGroup& g) {
    if (g.trivial()) return "trivial";
    std::string out;
    for (std::size_t i = 0; i < g.invariant_factors.size(); ++i) {
        if (i) out += " x ";
        out += "Z/" + to_string(g.invariant_factors[i]);
    }
    return out;
}

// rows like "[  2 -1  0 ]" with right-aligned entries
inline std::string render_matrix(const IntMatrix& m, const std::string& indent = "  ") {
    std::size_t width = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            width = std::max(width, to_string(m.at(i, j)).size());
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << indent << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::string e = to_string(m.at(i, j));
            out << ' ' << std::string(width - e.size(), ' ') << e;
        }
        out << " ]\n";
    }
    return out.str();
}

// "a∪[Q]", "a0∪[Q_5] + a1∪[Q_6]", "2 a∪[D]"; the unit
// flag renders as a formal unit m before the bracket: "a∪m[D]"
inline std::string render_expression(const FormalCupExpression& e) {
    if (e.zero()) return "0";
    std::string out;
    for (const auto& [term, c] : e.terms()) {
        if (!out.empty()) out += " + ";
        if (c != 1) out += to_string(c) + " ";
        out += term.torsor;
        out += "∪";
        if (e.unit_scaled()) out += "m";
        out += "[" + term.brauer + "]";
    }
    return out;
}

// "[Q] = [Q_7] + [Q_8]"
inline std::string render_relation(const CupRelation& rel) {
    std::string s = "[" + rel.head + "] = ";
    for (std::size_t i = 0; i < rel.rhs.size(); ++i) {
        if (i) s += " + ";
        if (rel.rhs[i].second != 1) s += to_string(rel.rhs[i].second) + " ";
        s += "[" + rel.rhs[i].first + "]";
    }
    return s;
}

inline std::string render_pairing(const PairingSpec& p) {
    if (p.kind == PairingKind::StandardModN) return "standard-mu-n mod " + to_string(p.modulus);
    std::ostringstream out;
    out << to_string(p.kind) << " gram [[" << p.gram[0][0] << "," << p.gram[0][1] << "],["
        << p.gram[1][0] << "," << p.gram[1][1] << "]]";
    return out.str();
}

} // namespace rostlat

#endif
