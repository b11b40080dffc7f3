#ifndef ROSTLAT_CENTER_HPP
#define ROSTLAT_CENTER_HPP

// Center of the simply connected group as coweight/coroot lattice quotient,
// with explicit cocharacter presentations: each generator is a map
// mu_n -> T, t |-> prod_i h_i(t^{c_i}) recorded by its exponent tuple.

#include <set>
#include <vector>

#include "rostlat/root_system.hpp"
#include "rostlat/smith.hpp"

namespace rostlat {

struct CocharacterMap {
    Int order;                  // n >= 1: minimal n with n*coweight integral
    std::vector<Int> exponents; // canonical residues in [0, n), one per vertex

    bool trivial() const { return order == 1; }
    std::set<int> support() const {
        std::set<int> s;
        for (std::size_t i = 0; i < exponents.size(); ++i)
            if (exponents[i] != 0) s.insert(static_cast<int>(i) + 1);
        return s;
    }
    friend bool operator==(const CocharacterMap&, const CocharacterMap&) = default;
};

// coweight in simple-coroot coordinates; n = lcm of denominators,
// exponents = n*coweight mod n.
inline CocharacterMap zmap(const RootSystem& rs, const RatVector& coweight) {
    if (coweight.size() != rs.rank()) throw Error("zmap: coweight length mismatch");
    CocharacterMap z;
    z.order = lcm_denominators(coweight);
    z.exponents.reserve(coweight.size());
    for (const Rat& x : coweight) {
        Rat scaled = Rat(z.order) * x;
        z.exponents.push_back(mod_floor(numerator(scaled), z.order));
    }
    return z;
}

struct CenterPresentation {
    FiniteAbelianGroup group;          // quotient coweight/coroot lattice
    std::vector<CocharacterMap> zmaps; // one per generator, order = its factor
    std::vector<int> source_weights;   // 1-based coweight index, 0 = SNF lift
};

namespace detail {

// Coroot-basis coordinates of an integral coweight-basis vector.
inline RatVector coroot_coordinates(const RootSystem& rs, const RatVector& coweight_basis_vec) {
    IntMatrix ct = rs.cartan().transposed();
    return solve_rational(ct, coweight_basis_vec);
}

} // namespace detail

// Generator lifts are searched among fundamental coweights, minuscule ones
// first (their classes generate the quotient), so the presentations match
// the classical ones. The two generators of an even D system are ordered by
// exponent support: z0 carries h_l, z1 carries h_{l-1}.
inline CenterPresentation center(const RootSystem& rs) {
    const std::size_t l = rs.rank();
    const IntMatrix ct = rs.cartan().transposed(); // coroot basis in coweight coordinates
    const QuotientMap qm(ct);
    FiniteAbelianGroup q = lattice_quotient(ct);

    CenterPresentation p;
    p.group.invariant_factors = q.invariant_factors;
    if (q.invariant_factors.empty()) return p;

    auto unit_lift = [&](int j) { // ambient lift of the j-th fundamental coweight
        RatVector v(l);
        v[static_cast<std::size_t>(j - 1)] = 1;
        return v;
    };
    auto zmap_of_weight = [&](int j) { return zmap(rs, rs.fundamental_coweight(j)); };

    std::vector<int> candidates;
    const std::set<int> minuscule = delta_c(rs);
    for (int j : minuscule) candidates.push_back(j);
    for (int j = 1; j <= static_cast<int>(l); ++j)
        if (!minuscule.count(j)) candidates.push_back(j);

    if (rs.type().family == Family::D && l % 2 == 0) {
        // factors (2,2); generators are the two fork coweights, ordered so
        // that z0 has a nonzero exponent at vertex l
        const int ja = static_cast<int>(l) - 1, jb = static_cast<int>(l);
        CocharacterMap za = zmap_of_weight(ja), zb = zmap_of_weight(jb);
        int j0 = ja, j1 = jb;
        if (zb.exponents[l - 1] != 0) {
            std::swap(za, zb);
            std::swap(j0, j1);
        }
        p.zmaps = {za, zb};
        p.source_weights = {j0, j1};
        p.group.generators = {unit_lift(j0), unit_lift(j1)};
        return p;
    }

    if (q.invariant_factors.size() == 1) {
        const Int d = q.invariant_factors[0];
        for (int j : candidates) {
            if (qm.order_of_class(qm.class_of_unit(static_cast<std::size_t>(j - 1))) != d) continue;
            p.zmaps = {zmap_of_weight(j)};
            p.source_weights = {j};
            p.group.generators = {unit_lift(j)};
            return p;
        }
    }

    // fallback: adapted-basis lifts from the Smith decomposition
    p.group.generators = q.generators;
    for (const RatVector& g : q.generators)
        p.zmaps.push_back(zmap(rs, detail::coroot_coordinates(rs, g)));
    p.source_weights.assign(q.invariant_factors.size(), 0);
    return p;
}

// True iff every minuscule-coweight vertex is circled; then the center lies
// in a split torus and the restricted invariant vanishes. Inner type is the
// caller's obligation.
inline bool vanish_criterion(const RootSystem& rs, const std::set<int>& circled) {
    for (int j : delta_c(rs))
        if (!circled.count(j)) return false;
    return true;
}

} // namespace rostlat

#endif
