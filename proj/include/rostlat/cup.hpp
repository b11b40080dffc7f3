#ifndef ROSTLAT_CUP_HPP
#define ROSTLAT_CUP_HPP

// Formal Z/n cup-product algebra: sparse linear combinations of
// (torsor-symbol, Brauer-symbol) pairs with rewrite relations on the Brauer
// side, plus the even-D bilinear pairings over F2 and their classification.
// Brauer symbols are opaque atoms; the only structure is the relation list.

#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rostlat/errors.hpp"
#include "rostlat/numeric.hpp"

namespace rostlat {

struct CupTerm {
    std::string torsor;
    std::string brauer;
    friend auto operator<=>(const CupTerm&, const CupTerm&) = default;
};

struct CupRelation {
    std::string head;
    std::vector<std::pair<std::string, Int>> rhs; // formal sum of symbols
    friend bool operator==(const CupRelation&, const CupRelation&) = default;
};

class FormalCupExpression {
public:
    explicit FormalCupExpression(Int modulus, std::vector<CupRelation> relations = {})
        : modulus_(std::move(modulus)), relations_(std::move(relations)) {
        if (modulus_ < 1) throw Error("FormalCupExpression: modulus must be >= 1");
    }

    const Int& modulus() const { return modulus_; }
    const std::map<CupTerm, Int>& terms() const { return terms_; }
    const std::vector<CupRelation>& relations() const { return relations_; }
    bool zero() const { return terms_.empty(); }

    // The whole expression is only known up to a unit of Z/n (the type-A base
    // invariant ambiguity); rendering shows the unit as "m".
    bool unit_scaled() const { return unit_scaled_; }
    void set_unit_scaled(bool v) { unit_scaled_ = v; }

    void add(const std::string& torsor, const std::string& brauer, const Int& coeff) {
        CupTerm key{torsor, brauer};
        Int c = mod_floor(terms_[key] + coeff, modulus_);
        if (c == 0) terms_.erase(key);
        else terms_[key] = c;
    }

    FormalCupExpression scaled(const Int& k) const {
        FormalCupExpression r(modulus_, relations_);
        r.unit_scaled_ = unit_scaled_;
        for (const auto& [term, c] : terms_) r.add(term.torsor, term.brauer, c * k);
        return r;
    }

    friend FormalCupExpression operator+(const FormalCupExpression& a, const FormalCupExpression& b) {
        if (a.modulus_ != b.modulus_) throw Error("expression sum: modulus mismatch");
        FormalCupExpression r = a;
        for (const auto& [term, c] : b.terms_) r.add(term.torsor, term.brauer, c);
        return r;
    }

    // Equality is structural on (modulus, terms, unit flag); relations are
    // rewriting context, not content.
    friend bool operator==(const FormalCupExpression& a, const FormalCupExpression& b) {
        return a.modulus_ == b.modulus_ && a.terms_ == b.terms_ && a.unit_scaled_ == b.unit_scaled_;
    }

private:
    Int modulus_;
    std::map<CupTerm, Int> terms_;
    std::vector<CupRelation> relations_;
    bool unit_scaled_ = false;
};

// Rewrites every relation head out of the expression. The relation digraph
// (head -> heads mentioned on its right side) must be acyclic.
inline FormalCupExpression normalize(const FormalCupExpression& e) {
    std::map<std::string, const CupRelation*> heads;
    for (const CupRelation& r : e.relations()) {
        if (heads.count(r.head)) throw CyclicRelations("duplicate relation head " + r.head);
        heads[r.head] = &r;
    }
    // cycle detection: colors 0 fresh / 1 on stack / 2 done
    std::map<std::string, int> color;
    auto dfs = [&](auto&& self, const std::string& h) -> void {
        color[h] = 1;
        for (const auto& [sym, c] : heads.at(h)->rhs) {
            (void)c;
            if (!heads.count(sym)) continue;
            int& col = color[sym];
            if (col == 1) throw CyclicRelations("relation cycle through " + sym);
            if (col == 0) self(self, sym);
        }
        color[h] = 2;
    };
    for (const auto& [h, r] : heads) {
        (void)r;
        if (color[h] == 0) dfs(dfs, h);
    }

    FormalCupExpression out = e;
    for (bool again = true; again;) {
        again = false;
        FormalCupExpression next(out.modulus(), e.relations());
        next.set_unit_scaled(out.unit_scaled());
        for (const auto& [term, c] : out.terms()) {
            auto it = heads.find(term.brauer);
            if (it == heads.end()) {
                next.add(term.torsor, term.brauer, c);
            } else {
                again = true;
                for (const auto& [sym, k] : it->second->rhs) next.add(term.torsor, sym, c * k);
            }
        }
        out = std::move(next);
    }
    return out;
}

enum class PairingKind { DEvenHyperbolic, DEvenDiagonal, StandardModN };

inline std::string to_string(PairingKind k) {
    switch (k) {
        case PairingKind::DEvenHyperbolic: return "D-even-hyperbolic";
        case PairingKind::DEvenDiagonal: return "D-even-diagonal";
        case PairingKind::StandardModN: return "standard-mu-n";
    }
    throw Error("unreachable");
}

// gram applies to the two fork characters (omega_{l-1}, omega_l) over F2;
// the standard kind multiplies residues mod n.
struct PairingSpec {
    PairingKind kind;
    std::array<std::array<int, 2>, 2> gram{{{0, 0}, {0, 0}}};
    Int modulus{2};

    static PairingSpec hyperbolic() {
        return {PairingKind::DEvenHyperbolic, {{{0, 1}, {1, 0}}}, 2};
    }
    static PairingSpec diagonal() {
        return {PairingKind::DEvenDiagonal, {{{1, 0}, {0, 1}}}, 2};
    }
    static PairingSpec standard(Int n) { return {PairingKind::StandardModN, {{{0, 0}, {0, 0}}}, std::move(n)}; }

    friend bool operator==(const PairingSpec&, const PairingSpec&) = default;
};

// x, y are (omega_{l-1}, omega_l) values for the D-even kinds, single
// residues for the standard kind.
inline Int cup_pairing(const PairingSpec& p, const std::vector<Int>& x, const std::vector<Int>& y) {
    if (p.kind == PairingKind::StandardModN) {
        if (x.size() != 1 || y.size() != 1) throw Error("cup_pairing: want single residues");
        return mod_floor(x[0] * y[0], p.modulus);
    }
    if (x.size() != 2 || y.size() != 2) throw Error("cup_pairing: want two character values");
    Int s = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            s += mod_floor(x[static_cast<std::size_t>(i)], 2) * Int(p.gram[i][j]) *
                 mod_floor(y[static_cast<std::size_t>(j)], 2);
    return mod_floor(s, 2);
}

enum class FormClass { Hyperbolic, MetabolicNotHyperbolic, Degenerate, Other };

inline std::string to_string(FormClass c) {
    switch (c) {
        case FormClass::Hyperbolic: return "hyperbolic";
        case FormClass::MetabolicNotHyperbolic: return "metabolic-not-hyperbolic";
        case FormClass::Degenerate: return "degenerate";
        case FormClass::Other: return "other";
    }
    throw Error("unreachable");
}

// Brute-force congruence classification of a symmetric 2x2 form over F2.
inline FormClass classify_f2_form(const std::array<std::array<int, 2>, 2>& gram_in) {
    auto norm = [](int x) { return ((x % 2) + 2) % 2; };
    std::array<std::array<int, 2>, 2> g{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) g[i][j] = norm(gram_in[i][j]);
    if (g[0][1] != g[1][0]) throw Error("classify_f2_form: gram not symmetric");

    using M = std::array<std::array<int, 2>, 2>;
    static const std::array<M, 6> gl2{{
        {{{1, 0}, {0, 1}}},
        {{{0, 1}, {1, 0}}},
        {{{1, 1}, {0, 1}}},
        {{{1, 0}, {1, 1}}},
        {{{0, 1}, {1, 1}}},
        {{{1, 1}, {1, 0}}},
    }};
    auto congruent = [&](const M& a, const M& b) {
        for (const M& p : gl2) {
            M t{}; // p^T * a * p
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    int s = 0;
                    for (int k = 0; k < 2; ++k)
                        for (int m = 0; m < 2; ++m) s += p[k][i] * a[k][m] * p[m][j];
                    t[i][j] = s % 2;
                }
            if (t == b) return true;
        }
        return false;
    };
    static const M hyper{{{0, 1}, {1, 0}}};
    static const M meta{{{1, 0}, {0, 1}}};
    if (congruent(g, hyper)) return FormClass::Hyperbolic;
    if (congruent(g, meta)) return FormClass::MetabolicNotHyperbolic;
    if ((g[0][0] * g[1][1] + g[0][1]) % 2 == 0) return FormClass::Degenerate;
    return FormClass::Other; // no symmetric 2x2 form over F2 lands here
}

} // namespace rostlat

#endif
