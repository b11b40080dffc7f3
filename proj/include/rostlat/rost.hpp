#ifndef ROSTLAT_ROST_HPP
#define ROSTLAT_ROST_HPP

// Mechanical reduction of the restricted invariant through G': per-generator
// formal cup expressions, the cup-with-Tits-class comparison under the
// family's pairing, and the answer-table verdict.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "rostlat/cup.hpp"
#include "rostlat/smith.hpp"
#include "rostlat/tits.hpp"

namespace rostlat {

enum class SubgroupVerdict { Zero, SameAsTitsClass };

inline std::string to_string(SubgroupVerdict v) {
    return v == SubgroupVerdict::Zero ? "Zero" : "SameAsTitsClass";
}

struct TheoremVerdict {
    SubgroupVerdict subgroup;
    PairingSpec pairing;
    std::string notes;
};

// Answer table: the restricted invariant and the Tits class generate the
// same subgroup for A, C (odd rank), D, E6, E7; the composition is zero for
// B, C (even rank) and the trivial-center types.
inline TheoremVerdict theorem_verdict(const SystemType& t) {
    validate_type(t);
    const Int center_exponent =
        lattice_quotient(cartan_matrix(t).transposed()).exponent();
    TheoremVerdict v{SubgroupVerdict::Zero, PairingSpec::standard(center_exponent), ""};
    switch (t.family) {
        case Family::A:
            v.subgroup = SubgroupVerdict::SameAsTitsClass;
            v.notes = "type A: same subgroup as the Tits class";
            break;
        case Family::B:
            v.notes = "type B: composition is zero";
            break;
        case Family::C:
            if (t.rank % 2 == 1) {
                v.subgroup = SubgroupVerdict::SameAsTitsClass;
                v.notes = "type C, odd rank: same subgroup as the Tits class";
            } else {
                v.notes = "type C, even rank: composition is zero";
            }
            break;
        case Family::D:
            v.subgroup = SubgroupVerdict::SameAsTitsClass;
            if (t.rank % 4 == 0) {
                v.pairing = PairingSpec::hyperbolic();
                v.notes = "type D, rank 0 mod 4: same subgroup, hyperbolic pairing";
            } else if (t.rank % 2 == 0) {
                v.pairing = PairingSpec::diagonal();
                v.notes = "type D, rank 2 mod 4: same subgroup, diagonal pairing";
            } else {
                v.notes = "type D, odd rank: same subgroup as the Tits class";
            }
            break;
        case Family::E:
            if (t.rank == 8) {
                v.notes = "trivial center: composition is automatically zero";
            } else {
                v.subgroup = SubgroupVerdict::SameAsTitsClass;
                v.notes = t.rank == 6 ? "type E6: same subgroup as the Tits class"
                                      : "type E7: same subgroup as the Tits class";
            }
            break;
        case Family::F:
        case Family::G:
            v.notes = "trivial center: composition is automatically zero";
            break;
    }
    return v;
}

struct RostRestriction {
    GPrimeDecomposition gprime;
    std::vector<std::string> torsor_names;      // one per center generator
    std::vector<std::string> component_symbols; // Brauer symbol per component
    std::vector<CupRelation> relations;
    std::vector<FormalCupExpression> expressions; // normalized, per generator
    std::vector<FormalCupExpression> tits_cup;    // cup with the Tits class
    SubgroupVerdict computed;
};

namespace detail {

// k with k * local_generator = restricted map on an A_r component: the local
// canonical z-map of A_r has exponent 1 at the far end of the path.
inline Int component_scalar(const std::vector<Int>& local_exponents,
                            const std::vector<Int>& restricted, const Int& n) {
    const Int k = mod_floor(restricted.back(), n);
    for (std::size_t i = 0; i < restricted.size(); ++i)
        if (mod_floor(k * local_exponents[i], n) != mod_floor(restricted[i], n))
            throw UnsupportedShape("component restriction is not a power of the local z-map");
    return k;
}

} // namespace detail

// Inner indices satisfying the circling condition only; components must be
// A1, or A2 inside the rank-6 E ambient. Everything else the source
// computations never treat, so it is refused rather than extrapolated.
inline RostRestriction restriction_composition(const RootSystem& rs, const TitsIndex& idx) {
    if (idx.type != rs.type()) throw Error("restriction_composition: index/system mismatch");
    if (idx.form != FormKind::Inner)
        throw UnsupportedShape("outer forms are resolved at the answer-table level");

    RostRestriction out{g_prime(rs, idx), {}, {}, {}, {}, {}, SubgroupVerdict::Zero};
    const CenterPresentation cp = center(rs);
    const std::size_t gens = cp.zmaps.size();
    if (gens == 0) return out; // trivial center: zero composition, no terms

    const Int n = cp.group.exponent();
    for (std::size_t g = 0; g < gens; ++g)
        out.torsor_names.push_back(gens == 1 ? "a" : "a" + std::to_string(g));

    if (out.gprime.components.empty()) {
        // everything circled: the torsor is trivial and both sides are zero
        for (std::size_t g = 0; g < gens; ++g) {
            out.expressions.emplace_back(n);
            out.tits_cup.emplace_back(n);
        }
        return out;
    }

    // A circled vertex with a nonzero character class forces its Tits
    // algebra to split, a Brauer relation this formal reduction does not
    // carry. The treated circlings only ever add root-lattice vertices.
    const QuotientMap char_classes(rs.cartan());
    for (int v : idx.circled)
        if (!char_classes.zero_class(char_classes.class_of_unit(static_cast<std::size_t>(v - 1))))
            throw UnsupportedShape("circled vertex " + std::to_string(v) +
                                   " has a nonzero character class; circling beyond the "
                                   "root-lattice vertices is not reduced");

    // shape guard + local scalars k[g][i]
    const bool e6_ambient = rs.type().family == Family::E && rs.type().rank == 6;
    std::vector<std::vector<Int>> k(gens);
    for (std::size_t ci = 0; ci < out.gprime.components.size(); ++ci) {
        const GPrimeComponent& c = out.gprime.components[ci];
        if (c.type.rank > 1 && !(e6_ambient && c.type.rank == 2))
            throw UnsupportedShape("component " + c.type.name() + " reduction not covered");
        // canonical A_r generator: exponents (r, r-1, ..., 1) mod r+1
        const RootSystem local(c.type);
        const CocharacterMap local_z = zmap(local, local.fundamental_coweight(1));
        if (local_z.order != n)
            throw UnsupportedShape("component center order differs from ambient exponent");
        for (std::size_t g = 0; g < gens; ++g)
            k[g].push_back(detail::component_scalar(local_z.exponents,
                                                    out.gprime.center_restriction[g][ci], n));
    }

    // Brauer symbols: components share a symbol exactly when the classes of
    // their lowest-vertex fundamental weights agree in Lambda/Lambda_r.
    std::vector<std::vector<Int>> comp_class;
    for (const GPrimeComponent& c : out.gprime.components)
        comp_class.push_back(char_classes.class_of_unit(static_cast<std::size_t>(c.vertices.front() - 1)));

    std::vector<std::vector<Int>> distinct;
    for (const auto& cls : comp_class)
        if (std::find(distinct.begin(), distinct.end(), cls) == distinct.end())
            distinct.push_back(cls);

    const std::string letter = n == 2 ? "Q" : (n == 3 ? "D" : "S");
    std::vector<std::string> class_symbol(distinct.size());
    std::size_t head_class = 0;
    if (distinct.size() == 1) {
        class_symbol[0] = letter;
    } else {
        // bare letter for the class with the most components, tie to the one
        // holding the lowest vertex; the rest are subscripted by lowest vertex
        std::vector<std::size_t> count(distinct.size(), 0);
        std::vector<int> min_vertex(distinct.size(), 1 << 30);
        for (std::size_t ci = 0; ci < comp_class.size(); ++ci) {
            const std::size_t d = static_cast<std::size_t>(
                std::find(distinct.begin(), distinct.end(), comp_class[ci]) - distinct.begin());
            ++count[d];
            min_vertex[d] = std::min(min_vertex[d], out.gprime.components[ci].vertices.front());
        }
        for (std::size_t d = 1; d < distinct.size(); ++d)
            if (count[d] > count[head_class] ||
                (count[d] == count[head_class] && min_vertex[d] < min_vertex[head_class]))
                head_class = d;
        for (std::size_t d = 0; d < distinct.size(); ++d)
            class_symbol[d] = d == head_class ? letter : letter + "_" + std::to_string(min_vertex[d]);

        // Klein relation: the bare symbol splits as the sum of the other two
        if (distinct.size() == 3 && n == 2) {
            std::vector<Int> sum = distinct[(head_class + 1) % 3];
            const auto& other = distinct[(head_class + 2) % 3];
            for (std::size_t i = 0; i < sum.size(); ++i)
                sum[i] = mod_floor(sum[i] + other[i], char_classes.snf().diag[i]);
            if (sum == distinct[head_class]) {
                CupRelation rel;
                rel.head = class_symbol[head_class];
                rel.rhs = {{class_symbol[(head_class + 1) % 3], Int(1)},
                           {class_symbol[(head_class + 2) % 3], Int(1)}};
                out.relations.push_back(std::move(rel));
            }
        }
    }
    for (const auto& cls : comp_class) {
        const std::size_t d = static_cast<std::size_t>(
            std::find(distinct.begin(), distinct.end(), cls) - distinct.begin());
        out.component_symbols.push_back(class_symbol[d]);
    }

    // sum_i multiplier_i * k_i * (a_g cup [symbol_i]), then rewrite
    const bool ambiguous_unit = e6_ambient; // local center order 3 > 2
    for (std::size_t g = 0; g < gens; ++g) {
        FormalCupExpression e(n, out.relations);
        for (std::size_t ci = 0; ci < out.gprime.components.size(); ++ci)
            e.add(out.torsor_names[g], out.component_symbols[ci],
                  Int(out.gprime.components[ci].multiplier) * k[g][ci]);
        e.set_unit_scaled(ambiguous_unit && !e.zero());
        out.expressions.push_back(normalize(e));
    }

    // cup with the Tits class under the family pairing
    const PairingSpec pairing = theorem_verdict(rs.type()).pairing;
    if (pairing.kind == PairingKind::StandardModN) {
        for (std::size_t g = 0; g < gens; ++g) {
            FormalCupExpression e(n, out.relations);
            e.add(out.torsor_names[g], class_symbol[head_class], 1);
            out.tits_cup.push_back(normalize(e));
        }
    } else {
        // fork symbols and fork character values of each generator
        const int l = rs.type().rank;
        auto fork_symbol = [&](int v) -> std::string {
            for (std::size_t ci = 0; ci < out.gprime.components.size(); ++ci)
                if (out.gprime.components[ci].vertices == std::vector<int>{v})
                    return out.component_symbols[ci];
            throw UnsupportedShape("fork vertex " + std::to_string(v) +
                                   " is circled; the pairing comparison needs both fork "
                                   "components");
        };
        const std::string sym[2] = {fork_symbol(l - 1), fork_symbol(l)};
        for (std::size_t g = 0; g < gens; ++g) {
            const auto& exp = cp.zmaps[g].exponents;
            const Int u[2] = {mod_floor(exp[static_cast<std::size_t>(l - 2)], 2),
                              mod_floor(exp[static_cast<std::size_t>(l - 1)], 2)};
            FormalCupExpression e(n, out.relations);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    e.add(out.torsor_names[g], sym[j], u[i] * Int(pairing.gram[i][j]));
            out.tits_cup.push_back(normalize(e));
        }
    }

    const bool all_zero = std::all_of(out.expressions.begin(), out.expressions.end(),
                                      [](const FormalCupExpression& e) { return e.zero(); });
    if (all_zero) {
        out.computed = SubgroupVerdict::Zero;
        return out;
    }
    // same subgroup iff some unit u of Z/n scales every tits expression onto
    // the computed one (a unit-scaled expression is a unit-scaled match)
    for (Int u = 1; u < n; ++u) {
        if (boost::multiprecision::gcd(u, n) != 1) continue;
        bool match = true;
        for (std::size_t g = 0; g < gens && match; ++g)
            match = out.expressions[g].terms() == out.tits_cup[g].scaled(u).terms();
        if (match) {
            out.computed = SubgroupVerdict::SameAsTitsClass;
            return out;
        }
    }
    throw Error("restriction does not compare to the Tits class; shape outside the table");
}

} // namespace rostlat

#endif
