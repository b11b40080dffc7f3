#ifndef ROSTLAT_SMITH_HPP
#define ROSTLAT_SMITH_HPP

// Smith normal form and lattice quotient structure. The decomposition keeps
// all four unimodular transforms so callers get adapted bases, not just
// invariant factors.

#include <cstddef>
#include <vector>

#include "rostlat/matrix.hpp"

namespace rostlat {

// left * source * right = diag (padded with zeros); left/right unimodular.
// left_inv/right_inv are maintained alongside, so columns of left_inv form an
// ambient basis adapted to the column lattice of source.
struct SmithDecomposition {
    IntMatrix source;
    IntMatrix left, left_inv;
    IntMatrix right, right_inv;
    std::vector<Int> diag; // length min(rows, cols); d[i] | d[i+1] while nonzero

    IntMatrix diag_matrix() const {
        IntMatrix d(source.rows(), source.cols());
        for (std::size_t i = 0; i < diag.size(); ++i) d.at(i, i) = diag[i];
        return d;
    }
};

// Pivot strategy: smallest nonzero absolute value in the remaining submatrix,
// ties broken by lowest row then column, so runs are reproducible.
inline SmithDecomposition smith_normal_form(const IntMatrix& source) {
    const std::size_t m = source.rows(), n = source.cols();
    IntMatrix a = source;
    IntMatrix l = IntMatrix::identity(m), li = IntMatrix::identity(m);
    IntMatrix r = IntMatrix::identity(n), ri = IntMatrix::identity(n);

    // row_i -= q*row_t on a and l; inverse picks up the opposite column op
    auto row_sub = [&](std::size_t i, std::size_t t, const Int& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < n; ++j) a.at(i, j) -= q * a.at(t, j);
        for (std::size_t j = 0; j < m; ++j) l.at(i, j) -= q * l.at(t, j);
        for (std::size_t j = 0; j < m; ++j) li.at(j, t) += q * li.at(j, i);
    };
    auto col_sub = [&](std::size_t j, std::size_t t, const Int& q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < m; ++i) a.at(i, j) -= q * a.at(i, t);
        for (std::size_t i = 0; i < n; ++i) r.at(i, j) -= q * r.at(i, t);
        for (std::size_t i = 0; i < n; ++i) ri.at(t, i) += q * ri.at(j, i);
    };
    auto row_swap = [&](std::size_t i, std::size_t t) {
        if (i == t) return;
        for (std::size_t j = 0; j < n; ++j) std::swap(a.at(i, j), a.at(t, j));
        for (std::size_t j = 0; j < m; ++j) std::swap(l.at(i, j), l.at(t, j));
        for (std::size_t j = 0; j < m; ++j) std::swap(li.at(j, i), li.at(j, t));
    };
    auto col_swap = [&](std::size_t j, std::size_t t) {
        if (j == t) return;
        for (std::size_t i = 0; i < m; ++i) std::swap(a.at(i, j), a.at(i, t));
        for (std::size_t i = 0; i < n; ++i) std::swap(r.at(i, j), r.at(i, t));
        for (std::size_t i = 0; i < n; ++i) std::swap(ri.at(j, i), ri.at(t, i));
    };
    auto row_negate = [&](std::size_t t) {
        for (std::size_t j = 0; j < n; ++j) a.at(t, j) = -a.at(t, j);
        for (std::size_t j = 0; j < m; ++j) l.at(t, j) = -l.at(t, j);
        for (std::size_t j = 0; j < m; ++j) li.at(j, t) = -li.at(j, t);
    };

    const std::size_t steps = m < n ? m : n;
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // smallest-|.| nonzero pivot in a[t.., t..]
            bool found = false;
            std::size_t pi = t, pj = t;
            Int best;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    const Int& x = a.at(i, j);
                    if (x == 0) continue;
                    Int ax = x < 0 ? Int(-x) : x;
                    if (!found || ax < best) {
                        found = true;
                        best = ax;
                        pi = i;
                        pj = j;
                    }
                }
            if (!found) goto done; // remaining block is zero
            row_swap(t, pi);
            col_swap(t, pj);

            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a.at(i, t) == 0) continue;
                row_sub(i, t, a.at(i, t) / a.at(t, t));
                if (a.at(i, t) != 0) dirty = true; // remainder, strictly smaller
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a.at(t, j) == 0) continue;
                col_sub(j, t, a.at(t, j) / a.at(t, t));
                if (a.at(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // pivot must divide the whole remaining block for the chain
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n && divides; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        row_sub(t, i, Int(-1)); // pull the bad row in and redo
                        divides = false;
                    }
            if (divides) break;
        }
        if (a.at(t, t) < 0) row_negate(t);
    }
done:
    SmithDecomposition d;
    d.source = source;
    d.left = std::move(l);
    d.left_inv = std::move(li);
    d.right = std::move(r);
    d.right_inv = std::move(ri);
    d.diag.resize(steps);
    for (std::size_t i = 0; i < steps; ++i) d.diag[i] = a.at(i, i);
    return d;
}

struct FiniteAbelianGroup {
    std::vector<Int> invariant_factors; // each > 1, ascending divisibility
    std::vector<RatVector> generators;  // ambient-basis lifts, one per factor

    Int order() const {
        Int o = 1;
        for (const Int& f : invariant_factors) o *= f;
        return o;
    }
    // lcm of the factors = largest one, by the divisibility chain
    Int exponent() const {
        return invariant_factors.empty() ? Int(1) : invariant_factors.back();
    }
    bool trivial() const { return invariant_factors.empty(); }
};

// Quotient of Z^n by the column lattice of sublattice_basis.
// source = left_inv * diag * right_inv, so the column lattice equals
// left_inv * diag * Z^n: the adapted ambient basis is the columns of
// left_inv, and column i generates a cyclic factor of order diag[i].
inline FiniteAbelianGroup lattice_quotient(const IntMatrix& sublattice_basis) {
    if (sublattice_basis.rows() != sublattice_basis.cols())
        throw Error("lattice_quotient: basis must be square");
    const SmithDecomposition d = smith_normal_form(sublattice_basis);
    FiniteAbelianGroup g;
    for (std::size_t i = 0; i < d.diag.size(); ++i) {
        if (d.diag[i] == 0)
            throw InfiniteQuotient("lattice_quotient: sublattice has determinant zero");
        if (d.diag[i] == 1) continue;
        g.invariant_factors.push_back(d.diag[i]);
        RatVector gen(d.source.rows());
        for (std::size_t k = 0; k < d.source.rows(); ++k) gen[k] = Rat(d.left_inv.at(k, i));
        g.generators.push_back(std::move(gen));
    }
    return g;
}

// Class arithmetic in Z^n / column-lattice: v maps to (left*v mod diag).
class QuotientMap {
public:
    explicit QuotientMap(const IntMatrix& basis) : snf_(smith_normal_form(basis)) {
        if (basis.rows() != basis.cols())
            throw Error("QuotientMap: basis must be square");
        for (const Int& d : snf_.diag)
            if (d == 0) throw InfiniteQuotient("QuotientMap: infinite quotient");
    }

    const SmithDecomposition& snf() const { return snf_; }

    std::vector<Int> class_of(const std::vector<Int>& v) const {
        std::vector<Int> w = snf_.left.apply(v);
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = mod_floor(w[i], snf_.diag[i]);
        return w;
    }

    std::vector<Int> class_of_unit(std::size_t j) const {
        std::vector<Int> e(snf_.source.cols());
        e[j] = 1;
        return class_of(e);
    }

    // order of the class: lcm over coordinates of diag[i]/gcd(diag[i], r[i])
    Int order_of_class(const std::vector<Int>& residues) const {
        Int o = 1;
        for (std::size_t i = 0; i < residues.size(); ++i) {
            Int d = snf_.diag[i] / boost::multiprecision::gcd(snf_.diag[i], residues[i]);
            o = boost::multiprecision::lcm(o, d);
        }
        return o;
    }

    bool zero_class(const std::vector<Int>& residues) const {
        for (const Int& r : residues)
            if (r != 0) return false;
        return true;
    }

    std::vector<Int> add(std::vector<Int> a, const std::vector<Int>& b) const {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = mod_floor(a[i] + b[i], snf_.diag[i]);
        return a;
    }

private:
    SmithDecomposition snf_;
};

} // namespace rostlat

#endif
