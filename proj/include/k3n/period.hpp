#pragma once

// Periods over Q(sqrt D): validation, the specialness test, a seeded sampler,
// and the fibration maps between periods of alpha^perp and of Q_alpha.

#include "k3n/k3_assoc.hpp"
#include "k3n/quad_scalar.hpp"

#include <cstdint>
#include <optional>

namespace k3n {

/// Complex line spanned by x + i y, with (x,x) = (y,y) > 0 and (x,y) = 0.
struct Period {
    IntLattice lattice;
    QuadVector x;
    QuadVector y;

    const Integer& field() const { return x.D; }
};

/// Validates and returns the period; throws InputError naming the first
/// violated constraint.
Period make_period(const IntLattice& lattice, const QuadVector& x, const QuadVector& y);

struct SpecialTest {
    bool special = false;
    std::optional<IntVector> witness;  // primitive integral vector in span_R{x, y}
};

/// Exact test whether span_R{x, y} contains a nonzero lattice vector.
///
/// An integral lambda lies in the plane iff every 3x3 minor of the rows
/// (x, y, lambda) vanishes; with a nonzero pivot minor on columns (j, k) it
/// suffices to impose the minors on columns (i, j, k), which split into
/// rational and sqrt(D) parts and give a linear system over Q.
SpecialTest is_special(const Period& period);

/// True iff the two periods span the same complex line: t2 = (p + iq) t1 for
/// some p, q in Q(sqrt D).
bool same_line(const Period& a, const Period& b);

/// Seeded random period over Q(sqrt D): a rational period built from a
/// hyperbolic pair and a positive vector orthogonal to it, moved by a few
/// reflections in random Q(sqrt D) vectors. D = 0 gives a rational period.
/// Requires two positive directions.
Period sample_period(const IntLattice& lattice, const Integer& D, std::uint64_t seed);

/// Repeats sample_period until the result is non-special. Throws
/// BudgetExhausted after `attempts` special outputs.
Period sample_nonspecial_period(const IntLattice& lattice, const Integer& D, std::uint64_t seed, int attempts = 32);

/// Data of the fibration from periods of alpha^perp (in K3n(n)) to periods of
/// Q_alpha, together with the Mukai-side classes used by its sections.
struct Fibration {
    std::int64_t n = 0;
    IntLattice k3n;
    IntVector alpha;
    IsotropicQuotient q_alpha;
    Embedding embedding;
    IntVector beta;
    IntVector gamma;
};

Fibration make_fibration(std::int64_t n, const IntVector& alpha);

/// Coset images of x and y in Q_alpha; throws InputError unless both are
/// orthogonal to alpha.
Period q_project(const Fibration& fib, const Period& period);

/// Lifts a Q_alpha period through the stored section and corrects each
/// component to x + (iota(x), gamma) alpha.
Period tau_section(const Fibration& fib, const IntVector& gamma, const Period& q_period);

/// w -> w + (w, z) alpha on both components, for z in alpha^perp.
Period g_act(const Fibration& fib, const IntVector& z, const Period& period);

/// gamma + iota(z) + (gamma, iota(z)) beta + ((z,z)/2) beta, the class with
/// g_act(z, tau_section(gamma, .)) = tau_section(delta, .).
IntVector cocycle_delta(const Fibration& fib, const IntVector& gamma, const IntVector& z);

/// Matrix on the Mukai lattice of
/// x -> x - (x,beta) z + [(x,z) - (x,beta)(z,z)/2] beta, for z orthogonal
/// to beta and v.
IntMatrix tilde_g(const IntVector& beta, const IntVector& v, const IntVector& z);

}  // namespace k3n
