#pragma once

// Seeded generators and independent oracles shared by the test binaries.

#include "k3n/lattice.hpp"
#include "k3n/period.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace k3n::testing {

inline std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi)
{
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline IntMatrix random_matrix(std::mt19937_64& rng, Index rows, Index cols, std::int64_t bound)
{
    IntMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j)
            m(i, j) = draw(rng, -bound, bound);
    return m;
}

inline IntMatrix random_symmetric(std::mt19937_64& rng, Index n, std::int64_t bound, bool even = true)
{
    IntMatrix m(n, n);
    for (Index i = 0; i < n; ++i) {
        m(i, i) = (even ? 2 : 1) * draw(rng, -bound, bound);
        for (Index j = i + 1; j < n; ++j)
            m(i, j) = m(j, i) = draw(rng, -bound, bound);
    }
    return m;
}

inline IntVector random_vector(std::mt19937_64& rng, Index n, std::int64_t bound)
{
    IntVector v(n);
    for (Index i = 0; i < n; ++i)
        v(i) = draw(rng, -bound, bound);
    return v;
}

inline IntVector random_combination(std::mt19937_64& rng, const IntMatrix& basis, std::int64_t bound)
{
    return basis * random_vector(rng, basis.cols(), bound);
}

/// Determinant by cofactor expansion; only for small matrices.
inline Integer cofactor_det(const IntMatrix& m)
{
    const Index n = m.rows();
    if (n == 0)
        return 1;
    if (n == 1)
        return m(0, 0);
    Integer total = 0;
    for (Index j = 0; j < n; ++j) {
        if (m(0, j) == 0)
            continue;
        IntMatrix minor(n - 1, n - 1);
        for (Index r = 1; r < n; ++r)
            for (Index c = 0, cc = 0; c < n; ++c)
                if (c != j)
                    minor(r - 1, cc++) = m(r, c);
        const Integer term = m(0, j) * cofactor_det(minor);
        total += (j % 2 == 0) ? term : Integer(-term);
    }
    return total;
}

/// Invariant factors of a small matrix from gcds of k x k minors.
inline std::vector<Integer> determinantal_divisors(const IntMatrix& m)
{
    const Index rows = m.rows();
    const Index cols = m.cols();
    std::vector<Integer> gk;
    for (Index k = 1; k <= std::min(rows, cols); ++k) {
        Integer g = 0;
        std::vector<bool> rs(static_cast<std::size_t>(rows), false), cs(static_cast<std::size_t>(cols), false);
        std::fill(rs.begin(), rs.begin() + k, true);
        do {
            std::fill(cs.begin(), cs.end(), false);
            std::fill(cs.begin(), cs.begin() + k, true);
            do {
                IntMatrix sub(k, k);
                for (Index r = 0, ri = 0; r < rows; ++r) {
                    if (!rs[static_cast<std::size_t>(r)])
                        continue;
                    for (Index c = 0, ci = 0; c < cols; ++c)
                        if (cs[static_cast<std::size_t>(c)])
                            sub(ri, ci++) = m(r, c);
                    ++ri;
                }
                g = gcd(g, abs(cofactor_det(sub)));
            } while (std::prev_permutation(cs.begin(), cs.end()));
        } while (std::prev_permutation(rs.begin(), rs.end()));
        if (g == 0)
            break;
        gk.push_back(g);
    }
    std::vector<Integer> factors;
    Integer prev = 1;
    for (const Integer& g : gk) {
        factors.push_back(g / prev);
        prev = g;
    }
    return factors;
}

/// Inertia from floating-point eigenvalues; fine for small well-scaled forms.
inline Signature float_signature(const IntMatrix& gram)
{
    Eigen::MatrixXd g(gram.rows(), gram.cols());
    for (Index i = 0; i < g.rows(); ++i)
        for (Index j = 0; j < g.cols(); ++j)
            g(i, j) = gram(i, j).convert_to<double>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g, Eigen::EigenvaluesOnly);
    Signature s;
    for (Index i = 0; i < g.rows(); ++i) {
        if (solver.eigenvalues()(i) > 1e-9)
            ++s.positive;
        else if (solver.eigenvalues()(i) < -1e-9)
            ++s.negative;
    }
    return s;
}

/// Exact rank over Q by Gaussian elimination on a copy.
inline Index exact_rank(RatMatrix m)
{
    Index rank = 0;
    for (Index c = 0; c < m.cols() && rank < m.rows(); ++c) {
        Index pivot = -1;
        for (Index r = rank; r < m.rows(); ++r)
            if (m(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        m.row(pivot).swap(m.row(rank));
        for (Index r = 0; r < m.rows(); ++r)
            if (r != rank && m(r, c) != 0) {
                const Rational f = m(r, c) / m(rank, c);
                m.row(r) -= f * m.row(rank);
            }
        ++rank;
    }
    return rank;
}

/// Specialness by an unrelated route: with x = x0 + sqrt(D) x1 and likewise
/// y, a rational vector p x + q y (p, q in Q(sqrt D)) exists iff the columns
/// x1, x0, y1, y0 are linearly dependent over Q.
inline bool special_by_components(const Period& p)
{
    if (p.x.is_rational() || p.y.is_rational())
        return true;
    const Index r = p.lattice.rank();
    RatMatrix cols(r, 4);
    cols.col(0) = p.x.b;
    cols.col(1) = p.x.a;
    cols.col(2) = p.y.b;
    cols.col(3) = p.y.a;
    return exact_rank(cols) < 4;
}

/// Direct substitution: w in span{x, y} iff all 3x3 minors of (x, y, w) vanish.
inline bool in_plane(const Period& p, const IntVector& w)
{
    const Index r = p.lattice.rank();
    const QuadVector qw(w);
    for (Index i = 0; i < r; ++i)
        for (Index j = i + 1; j < r; ++j)
            for (Index k = j + 1; k < r; ++k) {
                const QuadScalar m = p.x(i) * (p.y(j) * qw(k) - p.y(k) * qw(j)) -
                                     p.x(j) * (p.y(i) * qw(k) - p.y(k) * qw(i)) +
                                     p.x(k) * (p.y(i) * qw(j) - p.y(j) * qw(i));
                if (!m.is_zero())
                    return false;
            }
    return true;
}

/// All units b mod d up to sign, counted directly.
inline std::int64_t unit_classes(std::int64_t d)
{
    if (d <= 2)
        return 1;
    std::int64_t count = 0;
    for (std::int64_t b = 1; b < d; ++b)
        if (std::gcd(b, d) == 1)
            ++count;
    return count / 2;
}

}  // namespace k3n::testing
