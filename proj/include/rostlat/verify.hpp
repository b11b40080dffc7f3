#ifndef ROSTLAT_VERIFY_HPP
#define ROSTLAT_VERIFY_HPP

// Named self-checks over frozen golden values: Smith forms, weight
// coordinates, quotient groups, cocharacter maps, subgroup decompositions,
// symbolic reductions, and the answer table. Everything here is
// deterministic, so repeated runs produce byte-identical reports.

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rostlat/center.hpp"
#include "rostlat/cup.hpp"
#include "rostlat/matrix.hpp"
#include "rostlat/render.hpp"
#include "rostlat/root_system.hpp"
#include "rostlat/rost.hpp"
#include "rostlat/smith.hpp"
#include "rostlat/tits.hpp"

namespace rostlat {

namespace verify_detail {

template <class T>
std::string describe(const T& v) {
    if constexpr (std::is_same_v<T, bool>) {
        return v ? "true" : "false";
    } else if constexpr (std::is_convertible_v<T, std::string>) {
        return std::string(v);
    } else if constexpr (requires { to_string(v); }) {
        return to_string(v);
    } else {
        std::ostringstream out;
        out << v;
        return out.str();
    }
}

inline std::string describe(const std::set<int>& v) { return render_set(v); }
inline std::string describe(const std::vector<Int>& v) { return render_int_tuple(v); }
inline std::string describe(const RatVector& v) { return render_rational_vector(v); }

inline std::string describe(const std::vector<int>& v) {
    std::vector<Int> w(v.begin(), v.end());
    return render_int_tuple(w);
}

inline std::vector<Int> integral_lift(const RatVector& v) {
    std::vector<Int> w;
    for (const Rat& x : v) {
        if (!is_integer(x)) throw Error("integral_lift: non-integer coordinate");
        w.push_back(numerator(x));
    }
    return w;
}

class Checker {
  public:
    template <class A, class B>
    void eq(const A& actual, const B& expected, const std::string& label) {
        if (!ok_) return;
        if (actual == expected) return;
        ok_ = false;
        detail_ = label + ": got " + describe(actual) + ", want " + describe(expected);
    }

    void require(bool condition, const std::string& label) {
        if (!ok_ || condition) return;
        ok_ = false;
        detail_ = label;
    }

    template <class E, class F>
    void throws(F&& body, const std::string& label) {
        if (!ok_) return;
        try {
            body();
        } catch (const E&) {
            return;
        } catch (const std::exception& e) {
            ok_ = false;
            detail_ = label + ": wrong exception: " + e.what();
            return;
        }
        ok_ = false;
        detail_ = label + ": expected exception, none thrown";
    }

    std::optional<std::string> result() const {
        if (ok_) return std::nullopt;
        return detail_;
    }

  private:
    bool ok_ = true;
    std::string detail_;
};

inline RatVector rat_vector(std::initializer_list<long long> nums, long long den) {
    RatVector v;
    for (long long n : nums) v.emplace_back(Rat(n) / den);
    return v;
}

} // namespace verify_detail

struct VerifyCheck {
    std::string name;
    std::function<std::optional<std::string>()> run;
};

struct VerifyOutcome {
    std::string name;
    bool passed = false;
    std::string detail;
};

// harness probe: runs the golden comparison against a deliberately modified
// matrix; it must come back failed, proving the checks can detect corruption
inline std::optional<std::string> corrupted_cartan_probe() {
    verify_detail::Checker c;
    IntMatrix bad = cartan_matrix({Family::A, 3});
    bad.at(0, 1) = -2; // flip one off-diagonal entry
    c.eq(smith_normal_form(bad).diag, std::vector<Int>{1, 1, 4}, "smith diagonal");
    return c.result();
}

inline std::vector<VerifyCheck> verification_checks() {
    using verify_detail::Checker;
    using verify_detail::rat_vector;
    std::vector<VerifyCheck> checks;
    auto add = [&checks](std::string name, std::function<std::optional<std::string>()> f) {
        checks.push_back({std::move(name), std::move(f)});
    };

    add("smith-diagonal-2x2", [] {
        Checker c;
        auto s = smith_normal_form(IntMatrix{{2, 4}, {6, 8}});
        c.eq(s.diag, std::vector<Int>{2, 4}, "diagonal");
        c.require(s.left * s.source * s.right == s.diag_matrix(), "transform product");
        c.require((s.left * s.left_inv).is_identity(), "left inverse");
        c.require((s.right * s.right_inv).is_identity(), "right inverse");
        return c.result();
    });

    add("smith-cartan-a2", [] {
        Checker c;
        c.eq(smith_normal_form(cartan_matrix({Family::A, 2})).diag, std::vector<Int>{1, 3},
             "diagonal");
        return c.result();
    });

    add("smith-zero-matrix", [] {
        Checker c;
        auto s = smith_normal_form(IntMatrix(2, 2));
        c.eq(s.diag, std::vector<Int>{0, 0}, "diagonal");
        return c.result();
    });

    add("weight-a2-first", [] {
        Checker c;
        c.eq(RootSystem({Family::A, 2}).fundamental_weight(1), rat_vector({2, 1}, 3), "w1");
        return c.result();
    });

    add("weight-e7-seventh", [] {
        Checker c;
        c.eq(RootSystem({Family::E, 7}).fundamental_weight(7), rat_vector({2, 3, 4, 6, 5, 4, 3}, 2),
             "w7");
        return c.result();
    });

    add("weight-e6-first", [] {
        Checker c;
        c.eq(RootSystem({Family::E, 6}).fundamental_weight(1), rat_vector({4, 3, 5, 6, 4, 2}, 3),
             "w1");
        return c.result();
    });

    add("quotient-a2-cyclic3", [] {
        Checker c;
        auto m = cartan_matrix({Family::A, 2});
        auto g = lattice_quotient(m);
        c.eq(g.invariant_factors, std::vector<Int>{3}, "invariant factors");
        c.eq(g.generators.size(), std::size_t{1}, "generator count");
        QuotientMap qm(m);
        c.eq(qm.order_of_class(qm.class_of(verify_detail::integral_lift(g.generators[0]))),
             Int(3), "generator class order");
        return c.result();
    });

    add("quotient-d4-klein", [] {
        Checker c;
        auto m = cartan_matrix({Family::D, 4});
        auto g = lattice_quotient(m);
        c.eq(g.invariant_factors, std::vector<Int>{2, 2}, "invariant factors");
        c.eq(g.order(), Int(4), "order");
        c.eq(g.exponent(), Int(2), "exponent");
        QuotientMap qm(m);
        for (const auto& gen : g.generators)
            c.eq(qm.order_of_class(qm.class_of(verify_detail::integral_lift(gen))), Int(2),
                 "generator class order");
        return c.result();
    });

    add("quotient-transpose-sides", [] {
        Checker c;
        // both quotients of a Cartan matrix have the same invariant factors
        for (auto t : {SystemType{Family::B, 3}, {Family::C, 4}, {Family::E, 6}}) {
            auto m = cartan_matrix(t);
            c.eq(lattice_quotient(m).invariant_factors,
                 lattice_quotient(m.transposed()).invariant_factors, t.name());
        }
        return c.result();
    });

    add("root-counts", [] {
        Checker c;
        auto count = [](SystemType t) { return RootSystem(t).roots().size(); };
        c.eq(count({Family::A, 5}), std::size_t{30}, "A5");
        c.eq(count({Family::B, 4}), std::size_t{32}, "B4");
        c.eq(count({Family::C, 4}), std::size_t{32}, "C4");
        c.eq(count({Family::D, 5}), std::size_t{40}, "D5");
        c.eq(count({Family::E, 6}), std::size_t{72}, "E6");
        c.eq(count({Family::E, 7}), std::size_t{126}, "E7");
        c.eq(count({Family::E, 8}), std::size_t{240}, "E8");
        c.eq(count({Family::F, 4}), std::size_t{48}, "F4");
        c.eq(count({Family::G, 2}), std::size_t{12}, "G2");
        return c.result();
    });

    add("root-lengths", [] {
        Checker c;
        auto extremes = [](SystemType t) {
            Rat lo = 2, hi = 0;
            RootSystem rs(t);
            for (const auto& r : rs.roots()) {
                lo = std::min(lo, r.squared_length);
                hi = std::max(hi, r.squared_length);
            }
            return std::pair{lo, hi};
        };
        for (auto t : {SystemType{Family::A, 4}, {Family::D, 5}, {Family::E, 6}}) {
            auto [lo, hi] = extremes(t);
            c.eq(lo, Rat(2), t.name() + " short");
            c.eq(hi, Rat(2), t.name() + " long");
        }
        for (auto t : {SystemType{Family::B, 3}, {Family::C, 4}, {Family::F, 4}}) {
            auto [lo, hi] = extremes(t);
            c.eq(lo, Rat(1), t.name() + " short");
            c.eq(hi, Rat(2), t.name() + " long");
        }
        auto [lo, hi] = extremes({Family::G, 2});
        c.eq(lo, Rat(2) / 3, "G2 short");
        c.eq(hi, Rat(2), "G2 long");
        return c.result();
    });

    add("dual-b3-is-c3", [] {
        Checker c;
        RootSystem b3({Family::B, 3});
        c.eq(b3.dual().type().name(), std::string("C3"), "dual type");
        c.require(b3.dual().cartan() == cartan_matrix({Family::C, 3}), "dual cartan");
        c.require(b3.dual().dual().cartan() == b3.cartan(), "double dual");
        return c.result();
    });

    add("root-lattice-membership", [] {
        Checker c;
        RootSystem e7({Family::E, 7});
        c.eq(weight_in_root_lattice(e7, 1), true, "E7 w1");
        c.eq(weight_in_root_lattice(e7, 7), false, "E7 w7");
        RootSystem b3({Family::B, 3});
        c.eq(weight_in_root_lattice(b3, 2), true, "B3 w2");
        c.eq(weight_in_root_lattice(b3, 3), false, "B3 w3");
        return c.result();
    });

    add("delta-r-table", [] {
        Checker c;
        c.eq(delta_r(RootSystem({Family::A, 5})), std::set<int>{}, "A5");
        c.eq(delta_r(RootSystem({Family::B, 4})), std::set<int>{1, 2, 3}, "B4");
        c.eq(delta_r(RootSystem({Family::C, 5})), std::set<int>{2, 4}, "C5");
        c.eq(delta_r(RootSystem({Family::D, 7})), std::set<int>{2, 4}, "D7");
        c.eq(delta_r(RootSystem({Family::D, 8})), std::set<int>{2, 4, 6}, "D8");
        c.eq(delta_r(RootSystem({Family::E, 6})), std::set<int>{2, 4}, "E6");
        c.eq(delta_r(RootSystem({Family::E, 7})), std::set<int>{1, 3, 4, 6}, "E7");
        c.eq(delta_r(RootSystem({Family::E, 8})), std::set<int>{1, 2, 3, 4, 5, 6, 7, 8}, "E8");
        c.eq(delta_r(RootSystem({Family::F, 4})), std::set<int>{1, 2, 3, 4}, "F4");
        c.eq(delta_r(RootSystem({Family::G, 2})), std::set<int>{1, 2}, "G2");
        return c.result();
    });

    add("delta-c-table", [] {
        Checker c;
        c.eq(delta_c(RootSystem({Family::A, 4})), std::set<int>{1, 2, 3, 4}, "A4");
        c.eq(delta_c(RootSystem({Family::B, 5})), std::set<int>{1}, "B5");
        c.eq(delta_c(RootSystem({Family::C, 4})), std::set<int>{4}, "C4");
        c.eq(delta_c(RootSystem({Family::D, 6})), std::set<int>{1, 5, 6}, "D6");
        c.eq(delta_c(RootSystem({Family::E, 6})), std::set<int>{1, 6}, "E6");
        c.eq(delta_c(RootSystem({Family::E, 7})), std::set<int>{7}, "E7");
        c.eq(delta_c(RootSystem({Family::E, 8})), std::set<int>{}, "E8");
        c.eq(delta_c(RootSystem({Family::F, 4})), std::set<int>{}, "F4");
        c.eq(delta_c(RootSystem({Family::G, 2})), std::set<int>{}, "G2");
        return c.result();
    });

    add("zmap-a2", [] {
        Checker c;
        RootSystem a2({Family::A, 2});
        auto z = zmap(a2, a2.fundamental_coweight(1));
        c.eq(z.order, Int(3), "order");
        c.eq(z.exponents, std::vector<Int>{2, 1}, "exponents");
        return c.result();
    });

    add("zmap-e7", [] {
        Checker c;
        RootSystem e7({Family::E, 7});
        auto z = zmap(e7, e7.fundamental_coweight(7));
        c.eq(z.order, Int(2), "order");
        c.eq(z.support(), std::set<int>{2, 5, 7}, "support");
        c.eq(h_product(z), std::string("h2(-1) h5(-1) h7(-1)"), "rendering");
        return c.result();
    });

    add("zmap-e6-rendering", [] {
        Checker c;
        RootSystem e6({Family::E, 6});
        auto z = zmap(e6, e6.fundamental_coweight(1));
        c.eq(z.order, Int(3), "order");
        c.eq(z.exponents, std::vector<Int>{1, 0, 2, 0, 1, 2}, "exponents");
        c.eq(h_product(z), std::string("h1(z) h3(z^2) h5(z) h6(z^2)"), "rendering");
        return c.result();
    });

    add("zmap-orders-match-center", [] {
        Checker c;
        std::vector<SystemType> types;
        for (int l = 1; l <= 8; ++l) types.push_back({Family::A, l});
        for (int l = 2; l <= 8; ++l) types.push_back({Family::B, l});
        for (int l = 2; l <= 8; ++l) types.push_back({Family::C, l});
        for (int l = 3; l <= 8; ++l) types.push_back({Family::D, l});
        types.push_back({Family::E, 6});
        types.push_back({Family::E, 7});
        for (auto t : types) {
            RootSystem rs(t);
            auto p = center(rs);
            c.eq(p.zmaps.size(), p.group.invariant_factors.size(), t.name() + " count");
            for (std::size_t i = 0; i < p.zmaps.size(); ++i)
                c.eq(p.zmaps[i].order, p.group.invariant_factors[i], t.name() + " order");
        }
        return c.result();
    });

    add("center-trivial-types", [] {
        Checker c;
        for (auto t : {SystemType{Family::E, 8}, {Family::F, 4}, {Family::G, 2}}) {
            auto p = center(RootSystem(t));
            c.require(p.group.trivial(), t.name() + " trivial");
            c.eq(p.zmaps.size(), std::size_t{0}, t.name() + " no maps");
        }
        return c.result();
    });

    add("center-d-even-generators", [] {
        Checker c;
        for (int l = 4; l <= 12; l += 2) {
            RootSystem rs({Family::D, l});
            auto p = center(rs);
            std::string tag = rs.type().name();
            c.eq(p.group.invariant_factors, std::vector<Int>{2, 2}, tag + " factors");
            // first generator acts by h at the last vertex, second at the
            // next-to-last; each also acts at vertex 1
            c.eq(p.zmaps[0].exponents[l - 1], Int(1), tag + " z0 last vertex");
            c.eq(p.zmaps[0].exponents[l - 2], Int(0), tag + " z0 fork partner");
            c.eq(p.zmaps[1].exponents[l - 2], Int(1), tag + " z1 fork vertex");
            c.eq(p.zmaps[1].exponents[l - 1], Int(0), tag + " z1 last vertex");
            c.eq(p.zmaps[0].exponents[0], Int(1), tag + " z0 vertex 1");
            c.eq(p.zmaps[1].exponents[0], Int(1), tag + " z1 vertex 1");
            int src0 = l % 4 == 0 ? l - 1 : l;
            c.eq(p.source_weights[0], src0, tag + " z0 source");
            c.eq(p.source_weights[1], src0 == l ? l - 1 : l, tag + " z1 source");
        }
        return c.result();
    });

    add("center-d-even-character-relation", [] {
        Checker c;
        // the vertex-1 character is the product of the two fork characters
        for (int l = 4; l <= 12; l += 2) {
            auto p = center(RootSystem({Family::D, l}));
            for (const auto& z : p.zmaps) {
                Int fork = mod_floor(z.exponents[l - 2] + z.exponents[l - 1], 2);
                c.eq(z.exponents[0], fork, "vertex 1 vs fork sum, rank " + std::to_string(l));
            }
        }
        return c.result();
    });

    add("vanish-b3", [] {
        Checker c;
        RootSystem b3({Family::B, 3});
        c.eq(vanish_criterion(b3, {1}), true, "circle 1");
        c.eq(vanish_criterion(b3, {3}), false, "circle 3");
        return c.result();
    });

    add("vanish-c4", [] {
        Checker c;
        RootSystem c4({Family::C, 4});
        // matches the coefficient-set rule: the only minuscule vertex of C4
        // is 4, so circling {2,4} suffices
        std::set<int> circled{2, 4}, dc = delta_c(c4);
        bool subset = std::includes(circled.begin(), circled.end(), dc.begin(), dc.end());
        c.eq(vanish_criterion(c4, circled), subset, "rule");
        c.eq(vanish_criterion(c4, {4}), true, "circle 4");
        c.eq(vanish_criterion(c4, {2}), false, "circle 2");
        c.eq(vanish_criterion(c4, {}), false, "circle none");
        return c.result();
    });

    add("vanish-e7", [] {
        Checker c;
        c.eq(vanish_criterion(RootSystem({Family::E, 7}), {7}), true, "circle 7");
        return c.result();
    });

    add("condition-circling", [] {
        Checker c;
        TitsIndex e7{{Family::E, 7}, {1, 3, 4, 6}, FormKind::Inner};
        TitsIndex e6{{Family::E, 6}, {2, 4}, FormKind::Inner};
        TitsIndex b4{{Family::B, 4}, {1, 2}, FormKind::Inner};
        c.eq(check_condition(RootSystem(e7.type), e7), true, "E7");
        c.eq(check_condition(RootSystem(e6.type), e6), true, "E6");
        c.eq(check_condition(RootSystem(b4.type), b4), false, "B4");
        c.eq(condition_missing(RootSystem(b4.type), b4), std::set<int>{3}, "B4 missing");
        return c.result();
    });

    add("rost-multipliers", [] {
        Checker c;
        RootSystem e7({Family::E, 7});
        for (int v : {2, 5, 7}) c.eq(rost_multiplier(e7, v), Int(1), "E7");
        RootSystem c5({Family::C, 5});
        c.eq(rost_multiplier(c5, 1), Int(2), "C5 short");
        c.eq(rost_multiplier(c5, 3), Int(2), "C5 short");
        c.eq(rost_multiplier(c5, 5), Int(1), "C5 long");
        c.eq(rost_multiplier(RootSystem({Family::B, 4}), 4), Int(2), "B4 short");
        c.eq(rost_multiplier(RootSystem({Family::A, 3}), 2), Int(1), "A3");
        return c.result();
    });

    add("multiplier-needs-detecting-vertex", [] {
        Checker c;
        // every G2 vertex supports only classes from the root lattice
        c.throws<Error>([] { rost_multiplier(RootSystem({Family::G, 2}), 1); }, "G2");
        c.throws<Error>([] { rost_multiplier(RootSystem({Family::E, 7}), 1); }, "E7 vertex 1");
        return c.result();
    });

    add("gprime-e7-components", [] {
        Checker c;
        RootSystem e7({Family::E, 7});
        auto d = g_prime(e7, {{Family::E, 7}, {1, 3, 4, 6}, FormKind::Inner});
        c.eq(d.components.size(), std::size_t{3}, "count");
        c.eq(d.components[0].vertices, std::vector<int>{2}, "first");
        c.eq(d.components[1].vertices, std::vector<int>{5}, "second");
        c.eq(d.components[2].vertices, std::vector<int>{7}, "third");
        for (const auto& comp : d.components) {
            c.eq(comp.type.name(), std::string("A1"), "type");
            c.eq(comp.multiplier, Int(1), "multiplier");
        }
        c.eq(d.center_restriction.size(), std::size_t{1}, "one generator");
        for (const auto& slice : d.center_restriction[0])
            c.eq(slice, std::vector<Int>{1}, "restriction");
        return c.result();
    });

    add("gprime-c5-components", [] {
        Checker c;
        auto d = g_prime(RootSystem({Family::C, 5}), {{Family::C, 5}, {2, 4}, FormKind::Inner});
        c.eq(d.components.size(), std::size_t{3}, "count");
        c.eq(d.multipliers(), std::vector<int>{2, 2, 1}, "multipliers");
        return c.result();
    });

    add("gprime-condition-enforced", [] {
        Checker c;
        c.throws<ConditionViolated>(
            [] { g_prime(RootSystem({Family::E, 7}), {{Family::E, 7}, {1}, FormKind::Inner}); },
            "E7 circled=1");
        return c.result();
    });

    add("gprime-d6-restriction", [] {
        Checker c;
        auto d = g_prime(RootSystem({Family::D, 6}), {{Family::D, 6}, {2, 4}, FormKind::Inner});
        c.eq(d.components.size(), std::size_t{4}, "count");
        std::vector<std::vector<Int>> z0 = {{1}, {1}, {0}, {1}};
        std::vector<std::vector<Int>> z1 = {{1}, {1}, {1}, {0}};
        c.require(d.center_restriction[0] == z0, "z0 slices");
        c.require(d.center_restriction[1] == z1, "z1 slices");
        return c.result();
    });

    add("normalize-klein-substitution", [] {
        Checker c;
        FormalCupExpression e(2, {{"Q", {{"Q_5", 1}, {"Q_6", 1}}}});
        e.add("a", "Q", 1);
        auto n = normalize(e);
        FormalCupExpression want(2);
        want.add("a", "Q_5", 1);
        want.add("a", "Q_6", 1);
        c.require(n.terms() == want.terms(), "substitution result");
        return c.result();
    });

    add("normalize-cycle-detection", [] {
        Checker c;
        c.throws<CyclicRelations>(
            [] {
                FormalCupExpression e(2, {{"X", {{"Y", 1}}}, {"Y", {{"X", 1}}}});
                e.add("a", "X", 1);
                normalize(e);
            },
            "two-step cycle");
        return c.result();
    });

    add("normalize-zero", [] {
        Checker c;
        FormalCupExpression e(3);
        e.add("a", "D", 3); // multiple of the modulus
        auto n = normalize(e);
        c.eq(n.zero(), true, "zero");
        c.eq(render_expression(n), std::string("0"), "rendering");
        return c.result();
    });

    add("normalize-scaling-mod3", [] {
        Checker c;
        FormalCupExpression e(3);
        e.add("a", "D", 1);
        auto n = normalize(e.scaled(4));
        FormalCupExpression want(3);
        want.add("a", "D", 1);
        c.require(n.terms() == want.terms(), "4x reduces to 1x");
        return c.result();
    });

    add("restriction-e7", [] {
        Checker c;
        RootSystem e7({Family::E, 7});
        auto r = restriction_composition(e7, {{Family::E, 7}, {1, 3, 4, 6}, FormKind::Inner});
        c.eq(r.computed, SubgroupVerdict::SameAsTitsClass, "verdict");
        c.eq(r.expressions.size(), std::size_t{1}, "one generator");
        c.eq(render_expression(r.expressions[0]), std::string("a∪[Q]"), "expression");
        c.require(r.expressions[0].terms() == r.tits_cup[0].terms(), "equals tits cup");
        return c.result();
    });

    add("restriction-b-series", [] {
        Checker c;
        for (int l = 2; l <= 8; ++l) {
            RootSystem rs({Family::B, l});
            auto r = restriction_composition(rs, {rs.type(), delta_r(rs), FormKind::Inner});
            c.eq(r.computed, SubgroupVerdict::Zero, rs.type().name());
        }
        return c.result();
    });

    add("restriction-c-series", [] {
        Checker c;
        for (int l = 2; l <= 10; ++l) {
            RootSystem rs({Family::C, l});
            auto r = restriction_composition(rs, {rs.type(), delta_r(rs), FormKind::Inner});
            std::string tag = rs.type().name();
            if (l % 2 == 0) {
                c.eq(r.computed, SubgroupVerdict::Zero, tag);
            } else {
                c.eq(r.computed, SubgroupVerdict::SameAsTitsClass, tag);
                c.eq(render_expression(r.expressions[0]), std::string("a∪[Q]"), tag);
            }
        }
        return c.result();
    });

    add("restriction-c4-multipliers", [] {
        Checker c;
        auto r = restriction_composition(RootSystem({Family::C, 4}),
                                         {{Family::C, 4}, {2, 4}, FormKind::Inner});
        c.eq(r.gprime.multipliers(), std::vector<int>{2, 2}, "multipliers");
        c.eq(r.computed, SubgroupVerdict::Zero, "verdict");
        return c.result();
    });

    add("restriction-a1", [] {
        Checker c;
        RootSystem a1({Family::A, 1});
        auto r = restriction_composition(a1, {{Family::A, 1}, {}, FormKind::Inner});
        c.eq(r.computed, SubgroupVerdict::SameAsTitsClass, "verdict");
        c.eq(render_expression(r.expressions[0]), std::string("a∪[Q]"), "expression");
        // fully circled: trivial torsor, the composition collapses to zero
        auto split = restriction_composition(RootSystem({Family::A, 3}),
                                             {{Family::A, 3}, {1, 2, 3}, FormKind::Inner});
        c.eq(split.computed, SubgroupVerdict::Zero, "split A3");
        // rank >= 2 components are only reduced inside the rank-6 E ambient
        c.throws<UnsupportedShape>(
            [] {
                restriction_composition(RootSystem({Family::A, 3}),
                                        {{Family::A, 3}, {}, FormKind::Inner});
            },
            "bare A3 component");
        return c.result();
    });

    add("restriction-e6", [] {
        Checker c;
        auto r = restriction_composition(RootSystem({Family::E, 6}),
                                         {{Family::E, 6}, {2, 4}, FormKind::Inner});
        c.eq(r.computed, SubgroupVerdict::SameAsTitsClass, "verdict");
        c.eq(r.expressions[0].unit_scaled(), true, "unit flag");
        c.eq(render_expression(r.expressions[0]), std::string("a∪m[D]"), "expression");
        c.eq(r.gprime.components.size(), std::size_t{2}, "two components");
        for (const auto& comp : r.gprime.components)
            c.eq(comp.type.name(), std::string("A2"), "component type");
        return c.result();
    });

    add("restriction-d-even-sweep", [] {
        Checker c;
        for (int l = 4; l <= 12; l += 2) {
            RootSystem rs({Family::D, l});
            auto r = restriction_composition(rs, {rs.type(), delta_r(rs), FormKind::Inner});
            std::string tag = rs.type().name();
            c.eq(r.computed, SubgroupVerdict::SameAsTitsClass, tag + " verdict");
            c.eq(r.relations.size(), std::size_t{1}, tag + " one relation");
            c.eq(r.expressions.size(), std::size_t{2}, tag + " two generators");
            for (std::size_t g = 0; g < 2; ++g)
                c.require(r.expressions[g].terms() == r.tits_cup[g].terms(),
                          tag + " expression equals pairing form");
            std::string fork0 = "_" + std::to_string(l % 4 == 0 ? l - 1 : l);
            c.eq(render_expression(r.expressions[0]), "a0∪[Q" + fork0 + "]", tag + " a0");
        }
        return c.result();
    });

    add("restriction-d5-unsupported", [] {
        Checker c;
        c.throws<UnsupportedShape>(
            [] {
                restriction_composition(RootSystem({Family::D, 5}),
                                        {{Family::D, 5}, {2}, FormKind::Inner});
            },
            "rank-3 component outside E6");
        return c.result();
    });

    add("theorem-answer-table", [] {
        Checker c;
        auto verdict = [](SystemType t) { return theorem_verdict(t); };
        c.eq(verdict({Family::A, 5}).subgroup, SubgroupVerdict::SameAsTitsClass, "A5");
        c.eq(verdict({Family::B, 9}).subgroup, SubgroupVerdict::Zero, "B9");
        c.eq(verdict({Family::C, 4}).subgroup, SubgroupVerdict::Zero, "C4");
        c.eq(verdict({Family::C, 5}).subgroup, SubgroupVerdict::SameAsTitsClass, "C5");
        c.eq(verdict({Family::D, 9}).subgroup, SubgroupVerdict::SameAsTitsClass, "D9");
        c.eq(verdict({Family::E, 6}).subgroup, SubgroupVerdict::SameAsTitsClass, "E6");
        c.eq(verdict({Family::E, 7}).subgroup, SubgroupVerdict::SameAsTitsClass, "E7");
        c.eq(verdict({Family::E, 8}).subgroup, SubgroupVerdict::Zero, "E8");
        c.eq(verdict({Family::F, 4}).subgroup, SubgroupVerdict::Zero, "F4");
        c.eq(verdict({Family::G, 2}).subgroup, SubgroupVerdict::Zero, "G2");
        c.eq(verdict({Family::D, 8}).pairing.kind, PairingKind::DEvenHyperbolic, "D8 pairing");
        c.eq(verdict({Family::D, 6}).pairing.kind, PairingKind::DEvenDiagonal, "D6 pairing");
        c.eq(verdict({Family::D, 9}).pairing.modulus, Int(4), "D9 modulus");
        c.eq(verdict({Family::A, 5}).pairing.modulus, Int(6), "A5 modulus");
        c.eq(verdict({Family::E, 8}).pairing.modulus, Int(1), "E8 modulus");
        return c.result();
    });

    add("pairing-values", [] {
        Checker c;
        auto h = PairingSpec::hyperbolic();
        c.eq(cup_pairing(h, {1, 0}, {0, 1}), Int(1), "hyperbolic mixed");
        c.eq(cup_pairing(h, {1, 0}, {1, 0}), Int(0), "hyperbolic repeated");
        auto d = PairingSpec::diagonal();
        c.eq(cup_pairing(d, {1, 0}, {1, 0}), Int(1), "diagonal repeated");
        c.eq(cup_pairing(d, {1, 0}, {0, 1}), Int(0), "diagonal mixed");
        c.eq(cup_pairing(d, {1, 1}, {1, 1}), Int(0), "diagonal sum");
        c.eq(cup_pairing(PairingSpec::standard(4), {3}, {2}), Int(2), "mod 4");
        return c.result();
    });

    add("pairing-rewrite-identity", [] {
        Checker c;
        // substituting the vertex-1 character for the sum of the fork
        // characters turns the hyperbolic form into the diagonal-plus-product
        // form; check all 16 argument pairs
        auto h = PairingSpec::hyperbolic();
        auto d = PairingSpec::diagonal();
        for (int x = 0; x < 4; ++x)
            for (int y = 0; y < 4; ++y) {
                std::vector<Int> xv = {x & 1, (x >> 1) & 1};
                std::vector<Int> yv = {y & 1, (y >> 1) & 1};
                Int w1x = mod_floor(xv[0] + xv[1], 2);
                Int w1y = mod_floor(yv[0] + yv[1], 2);
                Int lhs = cup_pairing(h, xv, yv);
                Int rhs = mod_floor(w1x * w1y + cup_pairing(d, xv, yv), 2);
                c.eq(lhs, rhs, "pair (" + std::to_string(x) + "," + std::to_string(y) + ")");
            }
        return c.result();
    });

    add("classify-f2-forms", [] {
        Checker c;
        c.eq(classify_f2_form({{{0, 1}, {1, 0}}}), FormClass::Hyperbolic, "H");
        c.eq(classify_f2_form({{{1, 0}, {0, 1}}}), FormClass::MetabolicNotHyperbolic, "I");
        c.eq(classify_f2_form({{{1, 1}, {1, 0}}}), FormClass::MetabolicNotHyperbolic, "mixed");
        c.eq(classify_f2_form({{{1, 1}, {1, 1}}}), FormClass::Degenerate, "rank 1");
        c.eq(classify_f2_form({{{0, 0}, {0, 0}}}), FormClass::Degenerate, "zero");
        return c.result();
    });

    add("corruption-detected", [] {
        Checker c;
        c.require(corrupted_cartan_probe().has_value(),
                  "modified matrix slipped past the golden comparison");
        return c.result();
    });

    return checks;
}

inline std::vector<VerifyOutcome> run_verification() {
    std::vector<VerifyOutcome> outcomes;
    for (const auto& check : verification_checks()) {
        VerifyOutcome o;
        o.name = check.name;
        try {
            auto failure = check.run();
            o.passed = !failure.has_value();
            if (failure) o.detail = *failure;
        } catch (const std::exception& e) {
            o.passed = false;
            o.detail = std::string("exception: ") + e.what();
        }
        outcomes.push_back(std::move(o));
    }
    return outcomes;
}

} // namespace rostlat

#endif
