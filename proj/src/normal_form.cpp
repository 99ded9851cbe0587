#include "k3n/normal_form.hpp"

#include "k3n/errors.hpp"

#include <utility>

namespace k3n {

namespace {

// Column operations mirrored on the transform and (as row operations) on its
// inverse, so that input * transform == reduced and transform * inverse == 1.
struct ColumnOps {
    IntMatrix& a;
    IntMatrix& t;
    IntMatrix& inv;

    void swap(Index i, Index j)
    {
        if (i == j)
            return;
        a.col(i).swap(a.col(j));
        t.col(i).swap(t.col(j));
        inv.row(i).swap(inv.row(j));
    }

    // col_j -= q * col_p
    void subtract(Index j, Index p, const Integer& q)
    {
        if (q == 0)
            return;
        for (Index r = 0; r < a.rows(); ++r)
            if (a(r, p) != 0)
                a(r, j) -= q * a(r, p);
        for (Index r = 0; r < t.rows(); ++r)
            if (t(r, p) != 0)
                t(r, j) -= q * t(r, p);
        // inverse: row_p += q * row_j
        for (Index c = 0; c < inv.cols(); ++c)
            if (inv(j, c) != 0)
                inv(p, c) += q * inv(j, c);
    }

    void negate(Index j)
    {
        a.col(j) = -a.col(j);
        t.col(j) = -t.col(j);
        inv.row(j) = -inv.row(j);
    }
};

}  // namespace

ColumnEchelon column_echelon(const IntMatrix& input)
{
    ColumnEchelon out;
    out.reduced = input;
    out.transform = identity_matrix(input.cols());
    out.inverse = identity_matrix(input.cols());
    ColumnOps ops{out.reduced, out.transform, out.inverse};
    IntMatrix& a = out.reduced;
    const Index cols = a.cols();

    Index p = 0;
    for (Index row = 0; row < a.rows() && p < cols; ++row) {
        // Euclid across columns p..cols-1 of this row, minimal-|.| pivots.
        for (;;) {
            Index best = -1;
            for (Index j = p; j < cols; ++j)
                if (a(row, j) != 0 && (best < 0 || abs(a(row, j)) < abs(a(row, best))))
                    best = j;
            if (best < 0)
                break;
            ops.swap(p, best);
            bool done = true;
            for (Index j = p + 1; j < cols; ++j) {
                if (a(row, j) == 0)
                    continue;
                ops.subtract(j, p, a(row, j) / a(row, p));
                if (a(row, j) != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (a(row, p) == 0)
            continue;
        if (a(row, p) < 0)
            ops.negate(p);
        for (Index j = 0; j < p; ++j)
            ops.subtract(j, p, floor_div(a(row, j), a(row, p)));
        out.pivot_rows.push_back(row);
        ++p;
    }
    out.rank = p;
    return out;
}

IntMatrix hermite_basis(const IntMatrix& generators)
{
    auto ech = column_echelon(generators);
    return ech.reduced.leftCols(ech.rank);
}

IntMatrix integer_kernel(const IntMatrix& a)
{
    auto ech = column_echelon(a);
    IntMatrix kernel = ech.transform.rightCols(a.cols() - ech.rank);
    if (kernel.cols() == 0)
        return kernel;
    // Canonicalize: reduces entry size and makes the basis deterministic.
    return hermite_basis(kernel);
}

IntMatrix SmithForm::diagonal_matrix(Index rows, Index cols) const
{
    IntMatrix d = IntMatrix::Constant(rows, cols, Integer(0));
    for (std::size_t i = 0; i < diag.size(); ++i)
        d(static_cast<Index>(i), static_cast<Index>(i)) = diag[i];
    return d;
}

SmithForm smith_normal_form(const IntMatrix& m)
{
    const Index rows = m.rows();
    const Index cols = m.cols();
    IntMatrix a = m;
    IntMatrix left = identity_matrix(rows);
    IntMatrix right = identity_matrix(cols);

    auto row_sub = [&](Index i, Index p, const Integer& q) {  // row_i -= q row_p
        if (q == 0)
            return;
        for (Index c = 0; c < cols; ++c)
            if (a(p, c) != 0)
                a(i, c) -= q * a(p, c);
        for (Index c = 0; c < rows; ++c)
            if (left(p, c) != 0)
                left(i, c) -= q * left(p, c);
    };
    auto col_sub = [&](Index j, Index p, const Integer& q) {  // col_j -= q col_p
        if (q == 0)
            return;
        for (Index r = 0; r < rows; ++r)
            if (a(r, p) != 0)
                a(r, j) -= q * a(r, p);
        for (Index r = 0; r < cols; ++r)
            if (right(r, p) != 0)
                right(r, j) -= q * right(r, p);
    };

    const Index n = std::min(rows, cols);
    for (Index t = 0; t < n; ++t) {
        for (;;) {
            // Minimal nonzero |entry| of the trailing block becomes the pivot.
            Index bi = -1, bj = -1;
            for (Index i = t; i < rows; ++i)
                for (Index j = t; j < cols; ++j)
                    if (a(i, j) != 0 && (bi < 0 || abs(a(i, j)) < abs(a(bi, bj)))) {
                        bi = i;
                        bj = j;
                    }
            if (bi < 0)
                goto finished;
            if (bi != t) {
                a.row(bi).swap(a.row(t));
                left.row(bi).swap(left.row(t));
            }
            if (bj != t) {
                a.col(bj).swap(a.col(t));
                right.col(bj).swap(right.col(t));
            }

            bool clean = true;
            for (Index i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0)
                    continue;
                row_sub(i, t, a(i, t) / a(t, t));
                if (a(i, t) != 0)
                    clean = false;
            }
            for (Index j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0)
                    continue;
                col_sub(j, t, a(t, j) / a(t, t));
                if (a(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            // Divisibility: fold an offending row into row t and go again.
            Index bad = -1;
            for (Index i = t + 1; i < rows && bad < 0; ++i)
                for (Index j = t + 1; j < cols; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0)
                break;
            row_sub(t, bad, Integer(-1));
        }
        if (a(t, t) < 0) {
            a.row(t) = -a.row(t);
            left.row(t) = -left.row(t);
        }
    }
finished:

    SmithForm out;
    out.left = std::move(left);
    out.right = std::move(right);
    out.diag.reserve(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i)
        out.diag.push_back(a(i, i));
    return out;
}

Integer determinant(const IntMatrix& m)
{
    if (m.rows() != m.cols())
        throw InputError("determinant: matrix is not square");
    const Index n = m.rows();
    if (n == 0)
        return Integer(1);
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (Index k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            Index s = k + 1;
            while (s < n && a(s, k) == 0)
                ++s;
            if (s == n)
                return Integer(0);
            a.row(s).swap(a.row(k));
            sign = -sign;
        }
        for (Index i = k + 1; i < n; ++i)
            for (Index j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return abs(a(n - 1, n - 1) * sign);
}

}  // namespace k3n
