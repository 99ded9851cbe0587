#include "k3n/sublattice.hpp"

#include "k3n/errors.hpp"
#include "k3n/normal_form.hpp"

#include <utility>

namespace k3n {

Sublattice make_sublattice(const IntMatrix& columns)
{
    if (column_echelon(columns).rank != columns.cols())
        throw InputError("make_sublattice: generators are linearly dependent");
    return {columns, false};
}

Sublattice orthogonal_complement(const IntLattice& lattice, const IntMatrix& columns)
{
    if (columns.rows() != lattice.rank())
        throw InputError("orthogonal_complement: generators have the wrong length");
    IntMatrix functionals(columns.cols(), lattice.rank());
    for (Index c = 0; c < columns.cols(); ++c)
        functionals.row(c) = pairing_functional(lattice, columns.col(c)).transpose();
    return {integer_kernel(functionals), true};
}

Sublattice saturation(const IntLattice& lattice, const IntMatrix& columns)
{
    if (columns.rows() != lattice.rank())
        throw InputError("saturation: generators have the wrong length");
    // span_Q(S) cap Z^r is the annihilator of the annihilator of S.
    const IntMatrix annihilator = integer_kernel(columns.transpose());
    return {integer_kernel(annihilator.transpose()), true};
}

bool same_span(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows())
        return false;
    const IntMatrix ha = hermite_basis(a);
    const IntMatrix hb = hermite_basis(b);
    return ha.cols() == hb.cols() && ha == hb;
}

bool in_span(const IntMatrix& columns, const IntVector& v)
{
    IntMatrix extended(columns.rows(), columns.cols() + 1);
    extended << columns, v;
    return same_span(columns, extended);
}

IntMatrix left_inverse(const IntMatrix& basis)
{
    const Index m = basis.cols();
    const auto ech = column_echelon(basis.transpose());
    if (ech.rank != m)
        throw InputError("left_inverse: basis vectors are linearly dependent");
    const IntMatrix h = ech.reduced.leftCols(m);
    for (Index i = 0; i < m; ++i)
        if (h(i, i) != 1)
            throw InputError("left_inverse: sublattice is not saturated");
    // h is lower unitriangular, so its inverse is integral.
    const RatMatrix hinv = exact_inverse(cast_matrix<Rational>(IntMatrix(h.transpose())));
    IntMatrix hinv_int(m, m);
    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < m; ++j) {
            if (mp::denominator(hinv(i, j)) != 1)
                throw InvariantViolation("left_inverse: unitriangular inverse is not integral");
            hinv_int(i, j) = mp::numerator(hinv(i, j));
        }
    return hinv_int * IntMatrix(ech.transform.transpose().topRows(m));
}

IntVector IsotropicQuotient::project(const IntVector& y) const
{
    if (y.size() != ambient.ambient_rank())
        throw InputError("project: vector has the wrong length");
    const IntMatrix inv = left_inverse(ambient.basis);
    if (ambient.basis * (inv * y) != y)
        throw InputError("project: vector does not lie in the sublattice being divided");
    return projection * y;
}

IsotropicQuotient quotient_mod_isotropic(const IntLattice& lattice, const IntVector& x, const Sublattice& restrict_to,
                                         std::string label)
{
    if (x.size() != lattice.rank() || restrict_to.ambient_rank() != lattice.rank())
        throw InputError("quotient_mod_isotropic: dimension mismatch");
    if (is_zero(x))
        throw InputError("quotient_mod_isotropic: zero vector");
    if (norm(lattice, x) != 0)
        throw InputError("quotient_mod_isotropic: vector is not isotropic, (x,x) = " + norm(lattice, x).str());
    const IntVector fx = pairing_functional(lattice, x);
    for (Index c = 0; c < restrict_to.rank(); ++c)
        if (fx.dot(restrict_to.basis.col(c)) != 0)
            throw InputError("quotient_mod_isotropic: sublattice is not orthogonal to the isotropic vector");

    const IntMatrix inv = left_inverse(restrict_to.basis);
    const IntVector c = inv * x;
    if (restrict_to.basis * c != x)
        throw InputError("quotient_mod_isotropic: vector does not lie in the sublattice");
    if (content(c) != 1)
        throw InputError("quotient_mod_isotropic: vector is not primitive in the sublattice");

    // Unimodular change of basis whose first vector is x.
    const auto ech = column_echelon(IntMatrix(c.transpose()));
    const IntMatrix to_new = ech.transform.transpose();    // to_new * c == e_1
    const IntMatrix from_new = ech.inverse.transpose();    // columns: new basis in old coordinates
    const Index m = restrict_to.rank();
    const IntMatrix new_basis = restrict_to.basis * from_new;

    IsotropicQuotient q;
    q.isotropic = x;
    q.ambient = restrict_to;
    q.section = new_basis.rightCols(m - 1);
    q.projection = (to_new * inv).bottomRows(m - 1);
    q.lattice = restrict_form(lattice, q.section, std::move(label));
    return q;
}

std::vector<Integer> quotient_group_order(const IntLattice& lattice, const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != lattice.rank() || b.rows() != lattice.rank())
        throw InputError("quotient_group_order: generators have the wrong length");
    IntMatrix gens(lattice.rank(), a.cols() + b.cols());
    gens << a, b;
    const auto snf = smith_normal_form(gens);
    std::vector<Integer> out;
    Index nonzero = 0;
    for (const auto& d : snf.diag) {
        if (d != 0)
            ++nonzero;
        if (d > 1)
            out.push_back(d);
    }
    for (Index i = nonzero; i < lattice.rank(); ++i)
        out.push_back(Integer(0));
    return out;
}

}  // namespace k3n
