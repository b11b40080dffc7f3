#ifndef ROSTLAT_ROOT_SYSTEM_HPP
#define ROSTLAT_ROOT_SYSTEM_HPP

// Irreducible root systems A-G in Bourbaki numbering: Cartan matrix, the full
// root set with simple-root coordinates and normalized lengths, fundamental
// weights/coweights, and the dual system.
//
// Convention: cartan(i,j) = <alpha_j, alpha_i-check> = 2(a_i,a_j)/(a_i,a_i),
// so fundamental weights solve C*x = e_j and coweights solve C^T*x = e_j.
// The convention is locked by golden tests on the worked weight vectors.

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "rostlat/matrix.hpp"

namespace rostlat {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SystemType {
    Family family;
    int rank;

    friend bool operator==(const SystemType&, const SystemType&) = default;
    std::string name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }
};

// Rank bounds: A>=1, B>=2, C>=2, D>=3, E in {6,7,8}, F=4, G=2.
inline void validate_type(const SystemType& t) {
    const int r = t.rank;
    bool ok = false;
    switch (t.family) {
        case Family::A: ok = r >= 1; break;
        case Family::B: ok = r >= 2; break;
        case Family::C: ok = r >= 2; break;
        case Family::D: ok = r >= 3; break;
        case Family::E: ok = r == 6 || r == 7 || r == 8; break;
        case Family::F: ok = r == 4; break;
        case Family::G: ok = r == 2; break;
    }
    if (!ok) throw InvalidRank("invalid rank " + std::to_string(r) + " for family " +
                               std::string(1, static_cast<char>(t.family)));
}

inline SystemType dual_type(const SystemType& t) {
    if (t.family == Family::B) return {Family::C, t.rank};
    if (t.family == Family::C) return {Family::B, t.rank};
    return t;
}

// Squared lengths of the simple roots, long roots normalized to 2.
inline std::vector<Rat> simple_root_lengths(const SystemType& t) {
    validate_type(t);
    const std::size_t l = static_cast<std::size_t>(t.rank);
    std::vector<Rat> len(l, Rat(2));
    switch (t.family) {
        case Family::B: len[l - 1] = 1; break;
        case Family::C:
            std::fill(len.begin(), len.end() - 1, Rat(1));
            break;
        case Family::F: len[2] = len[3] = 1; break;
        case Family::G: len[0] = Rat(2, 3); break;
        default: break;
    }
    return len;
}

inline IntMatrix cartan_matrix(const SystemType& t) {
    validate_type(t);
    const std::size_t l = static_cast<std::size_t>(t.rank);
    IntMatrix c(l, l);
    for (std::size_t i = 0; i < l; ++i) c.at(i, i) = 2;
    auto edge = [&](std::size_t i, std::size_t j) { c.at(i, j) = c.at(j, i) = -1; };
    switch (t.family) {
        case Family::A:
            for (std::size_t i = 0; i + 1 < l; ++i) edge(i, i + 1);
            break;
        case Family::B: // alpha_l short: <a_{l-1}, a_l-check> = -2
            for (std::size_t i = 0; i + 1 < l; ++i) edge(i, i + 1);
            c.at(l - 1, l - 2) = -2;
            break;
        case Family::C: // alpha_l long: <a_l, a_{l-1}-check> = -2
            for (std::size_t i = 0; i + 1 < l; ++i) edge(i, i + 1);
            c.at(l - 2, l - 1) = -2;
            break;
        case Family::D: // fork: alpha_l attached to alpha_{l-2}
            for (std::size_t i = 0; i + 2 < l; ++i) edge(i, i + 1);
            edge(l - 3, l - 1);
            break;
        case Family::E: // chain 1-3-4-...-l, branch 2-4
            edge(0, 2);
            for (std::size_t i = 2; i + 1 < l; ++i) edge(i, i + 1);
            edge(1, 3);
            break;
        case Family::F: // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            edge(0, 1);
            edge(1, 2);
            edge(2, 3);
            c.at(2, 1) = -2;
            break;
        case Family::G: // alpha_1 short
            c.at(0, 1) = -3;
            c.at(1, 0) = -1;
            break;
    }
    return c;
}

inline int coxeter_number(const SystemType& t) {
    validate_type(t);
    switch (t.family) {
        case Family::A: return t.rank + 1;
        case Family::B:
        case Family::C: return 2 * t.rank;
        case Family::D: return 2 * t.rank - 2;
        case Family::E: return t.rank == 6 ? 12 : (t.rank == 7 ? 18 : 30);
        case Family::F: return 12;
        case Family::G: return 6;
    }
    throw Error("unreachable");
}

struct Root {
    std::vector<int> coords; // simple-root basis, all >= 0 or all <= 0
    Rat squared_length;      // in {2}, {1,2} or {2/3,2} per family

    int height() const {
        int h = 0;
        for (int c : coords) h += c;
        return h;
    }
    bool positive() const { return height() > 0; }
    friend bool operator==(const Root&, const Root&) = default;
};

class RootSystem {
public:
    explicit RootSystem(const SystemType& t)
        : type_(t),
          cartan_(cartan_matrix(t)),
          dual_state_(std::make_unique<DualState>()) {
        build_roots();
        const auto inv = rational_inverse_columns(cartan_);
        const std::size_t l = rank();
        weights_ = inv; // column j of C^-1 solves C*x = e_j
        coweights_.assign(l, RatVector(l));
        for (std::size_t j = 0; j < l; ++j)
            for (std::size_t i = 0; i < l; ++i) coweights_[j][i] = inv[i][j];
    }

    RootSystem(const RootSystem& o)
        : type_(o.type_),
          cartan_(o.cartan_),
          roots_(o.roots_),
          weights_(o.weights_),
          coweights_(o.coweights_),
          dual_state_(std::make_unique<DualState>()) {}
    RootSystem& operator=(const RootSystem&) = delete;
    RootSystem(RootSystem&&) = default;
    RootSystem& operator=(RootSystem&&) = default;

    const SystemType& type() const { return type_; }
    std::size_t rank() const { return static_cast<std::size_t>(type_.rank); }
    const IntMatrix& cartan() const { return cartan_; }
    const std::vector<Root>& roots() const { return roots_; }

    // 1-based Bourbaki index; root-basis coordinates of omega_j
    const RatVector& fundamental_weight(int j) const { return weights_.at(check_index(j)); }
    // 1-based; coroot-basis coordinates of the fundamental coweight
    const RatVector& fundamental_coweight(int j) const { return coweights_.at(check_index(j)); }

    // Dual system, built lazily at most once even under concurrent access.
    const RootSystem& dual() const {
        std::call_once(dual_state_->once, [this] {
            dual_state_->value = std::make_shared<const RootSystem>(SystemType(dual_type(type_)));
        });
        return *dual_state_->value;
    }

private:
    std::size_t check_index(int j) const {
        if (j < 1 || static_cast<std::size_t>(j) > rank())
            throw Error("weight index out of range: " + std::to_string(j));
        return static_cast<std::size_t>(j - 1);
    }

    // Height induction: beta + alpha_i is a root iff q = p - <beta, a_i-check>
    // >= 1, where p is the depth of the alpha_i-string below beta. Uses only
    // integer Cartan pairings; no Euclidean embedding.
    void build_roots() {
        const std::size_t l = rank();
        std::set<std::vector<int>> seen;
        std::vector<std::vector<int>> layer;
        std::vector<std::vector<int>> positives;
        for (std::size_t i = 0; i < l; ++i) {
            std::vector<int> e(l, 0);
            e[i] = 1;
            seen.insert(e);
            layer.push_back(e);
            positives.push_back(std::move(e));
        }
        while (!layer.empty()) {
            std::vector<std::vector<int>> next;
            for (const auto& beta : layer) {
                for (std::size_t i = 0; i < l; ++i) {
                    int p = 0;
                    {
                        std::vector<int> v = beta;
                        for (;;) {
                            v[i] -= 1;
                            bool zero = std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
                            if (zero || !seen.count(v)) break;
                            ++p;
                        }
                    }
                    Int pairing = 0; // <beta, alpha_i-check> = (C*beta)_i
                    for (std::size_t j = 0; j < l; ++j) pairing += cartan_.at(i, j) * beta[j];
                    if (Int(p) - pairing >= 1) {
                        std::vector<int> gamma = beta;
                        gamma[i] += 1;
                        if (seen.insert(gamma).second) next.push_back(std::move(gamma));
                    }
                }
            }
            std::sort(next.begin(), next.end());
            for (auto& v : next) positives.push_back(v);
            layer = std::move(next);
        }

        // gram(i,j) = (a_i, a_j) = cartan(i,j) * len2_i / 2
        const auto len2 = simple_root_lengths(type_);
        std::vector<RatVector> gram(l, RatVector(l));
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = 0; j < l; ++j)
                gram[i][j] = Rat(cartan_.at(i, j)) * len2[i] / 2;
        auto length2 = [&](const std::vector<int>& b) {
            Rat s = 0;
            for (std::size_t i = 0; i < l; ++i) {
                if (b[i] == 0) continue;
                for (std::size_t j = 0; j < l; ++j)
                    if (b[j] != 0) s += Rat(b[i]) * gram[i][j] * Rat(b[j]);
            }
            return s;
        };

        roots_.reserve(2 * positives.size());
        for (const auto& b : positives) roots_.push_back(Root{b, length2(b)});
        for (const auto& b : positives) {
            std::vector<int> neg(b.size());
            for (std::size_t i = 0; i < b.size(); ++i) neg[i] = -b[i];
            Rat s = roots_[&b - positives.data()].squared_length;
            roots_.push_back(Root{std::move(neg), s});
        }
    }

    struct DualState {
        std::once_flag once;
        std::shared_ptr<const RootSystem> value;
    };

    SystemType type_;
    IntMatrix cartan_;
    std::vector<Root> roots_;
    std::vector<RatVector> weights_;
    std::vector<RatVector> coweights_;
    mutable std::unique_ptr<DualState> dual_state_;
};

inline RootSystem build(const SystemType& t) { return RootSystem(t); }

inline const RootSystem& dual(const RootSystem& rs) { return rs.dual(); }

inline bool weight_in_root_lattice(const RootSystem& rs, int j) {
    return is_integer_vector(rs.fundamental_weight(j));
}

// { j : omega_j in the root lattice }
inline std::set<int> delta_r(const RootSystem& rs) {
    std::set<int> s;
    for (int j = 1; j <= static_cast<int>(rs.rank()); ++j)
        if (weight_in_root_lattice(rs, j)) s.insert(j);
    return s;
}

// { j : coefficient of alpha_j over all roots stays in {-1,0,1} }, i.e. the
// fundamental coweight is minuscule for the dual system.
inline std::set<int> delta_c(const RootSystem& rs) {
    std::set<int> s;
    for (std::size_t j = 0; j < rs.rank(); ++j) {
        bool small = true;
        for (const Root& r : rs.roots())
            if (r.coords[j] < -1 || r.coords[j] > 1) {
                small = false;
                break;
            }
        if (small) s.insert(static_cast<int>(j) + 1);
    }
    return s;
}

} // namespace rostlat

#endif
