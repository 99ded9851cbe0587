#pragma once

// Sublattices, orthogonal complements, saturation and quotients.

#include "k3n/lattice.hpp"

#include <vector>

namespace k3n {

/// Basis of a sublattice, one ambient coordinate vector per column.
struct Sublattice {
    IntMatrix basis;
    bool saturated = false;

    Index rank() const { return basis.cols(); }
    Index ambient_rank() const { return basis.rows(); }
};

/// Sublattice spanned by the given columns; throws if they are dependent.
Sublattice make_sublattice(const IntMatrix& columns);

/// {x in L : (x, s) = 0 for all s in S}, always saturated.
Sublattice orthogonal_complement(const IntLattice& lattice, const IntMatrix& columns);

inline Sublattice orthogonal_complement(const IntLattice& lattice, const Sublattice& s)
{
    return orthogonal_complement(lattice, s.basis);
}

/// span_Q(S) intersected with L.
Sublattice saturation(const IntLattice& lattice, const IntMatrix& columns);

inline Sublattice saturation(const IntLattice& lattice, const Sublattice& s)
{
    return saturation(lattice, s.basis);
}

/// True iff the two column sets span the same sublattice.
bool same_span(const IntMatrix& a, const IntMatrix& b);

/// True iff v lies in the Z-span of the columns.
bool in_span(const IntMatrix& columns, const IntVector& v);

/// Integer left inverse P of a saturated basis R (P * R == 1). Throws
/// InputError if R is not saturated, since then no integral inverse exists.
IntMatrix left_inverse(const IntMatrix& basis);

/// The lattice restrict_to / Z x for a primitive isotropic x in restrict_to
/// with restrict_to orthogonal to x, plus integral maps in both directions.
///
/// `projection` sends ambient coordinates of a vector in restrict_to to
/// coordinates of its coset; `section` lifts coset coordinates back to
/// ambient coordinates. projection * section is the identity.
struct IsotropicQuotient {
    IntLattice lattice;
    IntVector isotropic;
    Sublattice ambient;
    IntMatrix projection;
    IntMatrix section;

    /// Coset coordinates of y; throws InputError unless y lies in `ambient`.
    IntVector project(const IntVector& y) const;
    IntVector lift(const IntVector& coset) const { return section * coset; }
};

IsotropicQuotient quotient_mod_isotropic(const IntLattice& lattice, const IntVector& x,
                                         const Sublattice& restrict_to, std::string label = {});

/// Elementary divisors of L / (A + B): non-unit torsion divisors in
/// increasing order, followed by one 0 per free rank of the quotient.
std::vector<Integer> quotient_group_order(const IntLattice& lattice, const IntMatrix& a, const IntMatrix& b);

}  // namespace k3n
