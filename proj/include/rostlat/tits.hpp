#ifndef ROSTLAT_TITS_HPP
#define ROSTLAT_TITS_HPP

// Tits-index handling and the subgroup G' obtained by deleting the vertices
// of Delta_r from the diagram: condition check, typed components with a
// diagram-path ordering, center restriction to components, Rost multipliers.

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rostlat/center.hpp"
#include "rostlat/root_system.hpp"

namespace rostlat {

enum class FormKind { Inner, Outer2, Outer3, Outer6 };

inline std::string to_string(FormKind k) {
    switch (k) {
        case FormKind::Inner: return "inner";
        case FormKind::Outer2: return "outer2";
        case FormKind::Outer3: return "outer3";
        case FormKind::Outer6: return "outer6";
    }
    throw Error("unreachable");
}

struct TitsIndex {
    SystemType type;
    std::set<int> circled;
    FormKind form = FormKind::Inner;
};

// `<family><rank>`, family A-G, rank decimal. Rank is capped at 64 at this
// parsing layer to bound CLI output; family bounds are checked by build().
inline SystemType parse_system_type(const std::string& s) {
    if (s.size() < 2 || s[0] < 'A' || s[0] > 'G')
        throw ParseError("bad system type '" + s + "': want <family-letter><rank> like E7");
    for (std::size_t i = 1; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("bad rank in system type '" + s + "'");
    const long rank = std::stol(s.substr(1));
    if (rank < 1 || rank > 64)
        throw ParseError("rank out of range 1..64 in '" + s + "'");
    SystemType t{static_cast<Family>(s[0]), static_cast<int>(rank)};
    try {
        validate_type(t);
    } catch (const InvalidRank& e) {
        throw ParseError(e.what());
    }
    return t;
}

// `<family><rank> [inner|outer2|outer3|outer6] circled=<comma-list>`;
// the form tag and the circled list are both optional.
inline TitsIndex parse_tits_index(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> tok;
    for (std::string w; in >> w;) tok.push_back(w);
    if (tok.empty()) throw ParseError("empty Tits index");

    TitsIndex idx;
    idx.type = parse_system_type(tok[0]);
    std::size_t k = 1;
    if (k < tok.size() && tok[k].rfind("circled=", 0) != 0) {
        const std::string& f = tok[k];
        if (f == "inner") idx.form = FormKind::Inner;
        else if (f == "outer2") idx.form = FormKind::Outer2;
        else if (f == "outer3") idx.form = FormKind::Outer3;
        else if (f == "outer6") idx.form = FormKind::Outer6;
        else throw ParseError("bad form tag '" + f + "': want inner|outer2|outer3|outer6");
        ++k;
    }
    if (k < tok.size()) {
        if (tok[k].rfind("circled=", 0) != 0)
            throw ParseError("unexpected token '" + tok[k] + "': want circled=<comma-list>");
        std::string list = tok[k].substr(8);
        ++k;
        if (!list.empty()) {
            std::istringstream ls(list);
            std::string item;
            while (std::getline(ls, item, ',')) {
                if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) {
                        return std::isdigit(static_cast<unsigned char>(c));
                    }))
                    throw ParseError("bad circled entry '" + item + "'");
                const long v = std::stol(item);
                if (v < 1 || v > idx.type.rank)
                    throw ParseError("circled vertex " + item + " outside 1.." +
                                     std::to_string(idx.type.rank));
                idx.circled.insert(static_cast<int>(v));
            }
        }
    }
    if (k != tok.size()) throw ParseError("trailing tokens in Tits index '" + s + "'");

    if (idx.form == FormKind::Outer2) {
        const Family f = idx.type.family;
        if (!(f == Family::A || f == Family::D || (f == Family::E && idx.type.rank == 6)))
            throw ParseError("outer2 only exists for A, D and E6");
    } else if (idx.form == FormKind::Outer3 || idx.form == FormKind::Outer6) {
        if (!(idx.type.family == Family::D && idx.type.rank == 4))
            throw ParseError("outer3/outer6 only exist for D4");
    }
    return idx;
}

inline std::string format_tits_index(const TitsIndex& idx) {
    std::string s = idx.type.name() + " " + to_string(idx.form) + " circled=";
    bool first = true;
    for (int v : idx.circled) {
        if (!first) s += ',';
        s += std::to_string(v);
        first = false;
    }
    return s;
}

// Condition: every vertex of Delta_r is circled.
inline std::set<int> condition_missing(const RootSystem& rs, const TitsIndex& idx) {
    std::set<int> missing;
    for (int j : delta_r(rs))
        if (!idx.circled.count(j)) missing.insert(j);
    return missing;
}

inline bool check_condition(const RootSystem& rs, const TitsIndex& idx) {
    return condition_missing(rs, idx).empty();
}

// Coroot-length ratio (a_v-check, a_v-check) / min over roots of
// (b-check, b-check): 1 on simply laced systems and long roots, 2 on the
// short roots of B/C/F, 3 on the short root of G. Requires v outside
// Delta_r; inside, the vertex never survives into G' and the ratio has no
// consumer, so asking for it is treated as a usage error.
inline int rost_multiplier(const RootSystem& rs, int vertex) {
    if (vertex < 1 || static_cast<std::size_t>(vertex) > rs.rank())
        throw Error("rost_multiplier: vertex out of range");
    if (delta_r(rs).count(vertex))
        throw Error("rost_multiplier: vertex " + std::to_string(vertex) + " lies in Delta_r");
    Rat min_coroot_len2;
    bool first = true;
    for (const Root& r : rs.roots()) {
        Rat c = Rat(4) / r.squared_length; // (b-check, b-check) = 4/(b,b)
        if (first || c < min_coroot_len2) {
            min_coroot_len2 = c;
            first = false;
        }
    }
    const Rat v_len2 = simple_root_lengths(rs.type())[static_cast<std::size_t>(vertex - 1)];
    const Rat m = (Rat(4) / v_len2) / min_coroot_len2;
    if (!is_integer(m)) throw Error("rost_multiplier: non-integral length ratio");
    return to_int(numerator(m));
}

struct GPrimeComponent {
    SystemType type;           // always A_k for the classified families
    std::vector<int> vertices; // ascending ambient indices
    std::vector<int> path;     // diagram-path order = local Bourbaki numbering
    int multiplier;
};

struct GPrimeDecomposition {
    std::vector<GPrimeComponent> components; // sorted by smallest vertex
    // [generator][component] = exponent sub-tuple along the component path
    std::vector<std::vector<std::vector<Int>>> center_restriction;

    std::vector<int> multipliers() const {
        std::vector<int> m;
        for (const auto& c : components) m.push_back(c.multiplier);
        return m;
    }
};

inline GPrimeDecomposition g_prime(const RootSystem& rs, const TitsIndex& idx) {
    {
        const std::set<int> missing = condition_missing(rs, idx);
        if (!missing.empty()) {
            std::string list;
            for (int v : missing) list += (list.empty() ? "" : ",") + std::to_string(v);
            throw ConditionViolated("uncircled Delta_r vertices: {" + list + "}");
        }
    }
    const std::size_t l = rs.rank();
    std::vector<int> alive; // the subgroup lives on the non-circled vertices
    for (int v = 1; v <= static_cast<int>(l); ++v)
        if (!idx.circled.count(v)) alive.push_back(v);

    auto adjacent = [&](int u, int v) {
        return rs.cartan().at(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1)) != 0;
    };

    GPrimeDecomposition out;
    std::set<int> visited;
    for (int start : alive) {
        if (visited.count(start)) continue;
        std::vector<int> comp{start};
        visited.insert(start);
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (int v : alive)
                if (!visited.count(v) && adjacent(comp[head], v)) {
                    visited.insert(v);
                    comp.push_back(v);
                }
        std::sort(comp.begin(), comp.end());

        // the induced subdiagram must be a single-bond path (type A)
        std::vector<int> path;
        if (comp.size() == 1) {
            path = comp;
        } else {
            auto degree = [&](int u) {
                int d = 0;
                for (int v : comp)
                    if (v != u && adjacent(u, v)) ++d;
                return d;
            };
            std::vector<int> ends;
            for (int u : comp)
                if (degree(u) == 1) ends.push_back(u);
            bool simple_bonds = true;
            for (int u : comp)
                for (int v : comp)
                    if (u < v && adjacent(u, v) &&
                        rs.cartan().at(u - 1, v - 1) * rs.cartan().at(v - 1, u - 1) != 1)
                        simple_bonds = false;
            if (ends.size() != 2 || !simple_bonds)
                throw UnsupportedShape("G' component on " + std::to_string(comp.size()) +
                                       " vertices is not a type-A path");
            int prev = -1, cur = ends[0];
            for (std::size_t n = 0; n < comp.size(); ++n) {
                path.push_back(cur);
                int nxt = -1;
                for (int v : comp)
                    if (v != prev && v != cur && adjacent(cur, v)) nxt = v;
                prev = cur;
                cur = nxt;
            }
        }

        GPrimeComponent c;
        c.type = SystemType{Family::A, static_cast<int>(comp.size())};
        c.vertices = comp;
        c.path = path;
        c.multiplier = rost_multiplier(rs, path.front());
        out.components.push_back(std::move(c));
    }
    std::sort(out.components.begin(), out.components.end(),
              [](const GPrimeComponent& a, const GPrimeComponent& b) {
                  return a.vertices.front() < b.vertices.front();
              });

    const CenterPresentation cp = center(rs);
    out.center_restriction.resize(cp.zmaps.size());
    for (std::size_t g = 0; g < cp.zmaps.size(); ++g)
        for (const GPrimeComponent& c : out.components) {
            std::vector<Int> sub;
            for (int v : c.path) sub.push_back(cp.zmaps[g].exponents[static_cast<std::size_t>(v - 1)]);
            out.center_restriction[g].push_back(std::move(sub));
        }
    return out;
}

} // namespace rostlat

#endif
