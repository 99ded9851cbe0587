#pragma once

// Monodromy classification of primitive isotropic classes in the K3^[n]
// lattice, orbit counts in L_{n,d}, and witness Mukai vectors.

#include "k3n/lattice.hpp"
#include "k3n/report.hpp"
#include "k3n/sublattice.hpp"

#include <cstdint>
#include <vector>

namespace k3n {

/// Orbit invariant (d, b*) of a primitive isotropic class.
///
/// d is the divisibility, d^2 divides n-1, and b* in [0, d/2] is the
/// +-normalized residue of b modulo d (b* = 0 exactly when d = 1).
struct OrbitInvariant {
    std::int64_t n = 0;
    std::int64_t d = 0;
    std::int64_t b_star = 0;
    friend bool operator==(const OrbitInvariant&, const OrbitInvariant&) = default;
};

/// min(b mod d, -b mod d); 0 when d = 1.
std::int64_t canonical_residue(std::int64_t b, std::int64_t d);

/// Classifies a primitive isotropic alpha in K3n(n) coordinates.
///
/// d is the divisibility of alpha and b its delta coefficient. Throws
/// InputError for non-isotropic or non-primitive input, InvariantViolation
/// if d^2 does not divide n-1 or b is not a unit modulo d.
OrbitInvariant classify_isotropic(std::int64_t n, const IntVector& alpha);

/// alpha = d*xi + b*delta with xi = e1 - ((n-1) b^2 / d^2) f1.
IntVector construct_alpha(std::int64_t n, std::int64_t d, std::int64_t b);

/// Number of orbits for divisibility d: 1 for d <= 2, phi(d)/2 otherwise.
std::int64_t nu(std::int64_t d);

std::vector<OrbitInvariant> enumerate_orbit_reps(std::int64_t n, std::int64_t d);

/// Outcome of the union-find orbit enumeration in L_{n,d}.
struct OrbitCount {
    std::int64_t count = 0;
    std::int64_t y_range = 0;  // ranges at which the count stabilized
    std::int64_t c_range = 0;
    int doublings = 0;
};

/// Counts O(L_{n,d})-classes of primitive degree-(2n-2) vectors (x, y) with
/// |y| <= y_range, closing under the isometries ((+-1, 0), (c, +-1)) with
/// |c| <= c_range. Ranges are doubled until two successive counts agree;
/// throws BudgetExhausted if that fails below 2^12.
OrbitCount brute_force_orbit_count(std::int64_t n, std::int64_t d, std::int64_t y_range, std::int64_t c_range);

/// Single enumeration at fixed ranges (no stabilization).
std::int64_t orbit_count_at(std::int64_t n, std::int64_t d, std::int64_t y_range, std::int64_t c_range);

/// Unimodular A with A (d, -b)^T = (1, 0)^T, reducing the Gram matrix of
/// span{v, (beta - b v)/d} to that of L_{n,d}.
struct GramReduction {
    IntMatrix transform;  // A
    IntMatrix gram_in;    // ((2n-2)/d^2) ((d^2, -bd), (-bd, b^2))
    IntMatrix gram_out;   // A gram_in A^T
};

GramReduction reduce_gram_to_Lnd(std::int64_t n, std::int64_t d, std::int64_t b);

/// Gram matrix ((2n-2)/d^2) ((1,0),(0,0)) of L_{n,d}.
IntMatrix lnd_gram(std::int64_t n, std::int64_t d);

/// Mukai vector (r, c, s) in Mukai coordinates: c fills the K3 summands,
/// r and s sit on e4 and f4, so ((r,c,s),(r',c',s')) = (c,c') - rs' - r's.
IntVector mukai_vector(const Integer& r, const IntVector& c, const Integer& s);

/// Splits Mukai coordinates back into (r, c, s).
struct MukaiParts {
    Integer r;
    IntVector c;
    Integer s;
};
MukaiParts mukai_parts(const IntVector& x);

/// Witness moduli data for the invariant (d, b): v = (0, d lambda, s) with
/// lambda = e1 - ((n-1)/d^2) f1 and s b == 1 (mod d).
struct MukaiSetup {
    std::int64_t n = 0;
    std::int64_t d = 0;
    std::int64_t b = 0;
    Integer s;
    IntVector lambda;  // K3 coordinates
    IntVector v;       // Mukai coordinates
    IntVector alpha;   // (0, 0, 1)
    Sublattice v_perp;
    std::vector<Check> verification;

    bool verified() const { return all_pass(verification); }
};

MukaiSetup mukai_example(std::int64_t n, std::int64_t d, std::int64_t b);

}  // namespace k3n
