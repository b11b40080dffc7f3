#ifndef ROSTLAT_TESTS_HELPERS_HPP
#define ROSTLAT_TESTS_HELPERS_HPP

// Independent oracles for the property suites: gcd-of-minors diagonal for
// Smith forms, closed-form root counts, highest-root marks for the minuscule
// vertex set. These deliberately avoid the code paths they check.

#include <numeric>
#include <random>
#include <vector>

#include "rostlat/matrix.hpp"
#include "rostlat/numeric.hpp"
#include "rostlat/root_system.hpp"

namespace rostlat::testing {

// All k-element subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    if (k > n) return out;
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

inline IntMatrix submatrix(const IntMatrix& m, const std::vector<std::size_t>& rows,
                           const std::vector<std::size_t>& cols) {
    IntMatrix s(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) s.at(i, j) = m.at(rows[i], cols[j]);
    return s;
}

// Invariant-factor diagonal from first principles: d_k = g_k / g_{k-1} with
// g_k the gcd of all k x k minors, zeros once the minors vanish.
inline std::vector<Int> diagonal_via_minor_gcds(const IntMatrix& m) {
    const std::size_t steps = std::min(m.rows(), m.cols());
    std::vector<Int> diag(steps, 0);
    Int prev = 1;
    for (std::size_t k = 1; k <= steps; ++k) {
        Int g = 0;
        for (const auto& rs : subsets(m.rows(), k))
            for (const auto& cs : subsets(m.cols(), k))
                g = boost::multiprecision::gcd(g, determinant(submatrix(m, rs, cs)));
        if (g == 0) break; // rank reached; the rest of the diagonal is zero
        diag[k - 1] = g / prev;
        prev = g;
    }
    return diag;
}

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<int> entry(-20, 20);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = entry(rng);
    return m;
}

inline std::size_t closed_form_root_count(const SystemType& t) {
    const std::size_t l = static_cast<std::size_t>(t.rank);
    switch (t.family) {
        case Family::A: return l * (l + 1);
        case Family::B:
        case Family::C: return 2 * l * l;
        case Family::D: return 2 * l * (l - 1);
        case Family::E: return t.rank == 6 ? 72 : (t.rank == 7 ? 126 : 240);
        case Family::F: return 48;
        case Family::G: return 12;
    }
    return 0;
}

inline const Root& highest_root(const RootSystem& rs) {
    const Root* best = &rs.roots().front();
    for (const Root& r : rs.roots())
        if (r.height() > best->height()) best = &r;
    return *best;
}

// Coefficient-1 vertices of the highest root. Every root is coordinatewise
// bounded by the highest root, so this is an independent route to the set of
// vertices whose coefficients stay in {-1, 0, 1} across the whole system.
inline std::set<int> minuscule_vertices_oracle(const RootSystem& rs) {
    const Root& theta = highest_root(rs);
    std::set<int> out;
    for (std::size_t j = 0; j < rs.rank(); ++j)
        if (theta.coords[j] <= 1) out.insert(static_cast<int>(j) + 1);
    return out;
}

} // namespace rostlat::testing

#endif
