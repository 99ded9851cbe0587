#pragma once

// The K3 lattice attached to an isotropic class: beta^perp / Z beta inside the
// Mukai lattice, the reduced class xi, and the isometry from
// Q_alpha = alpha^perp / Z alpha onto xi^perp.

#include "k3n/lattice.hpp"
#include "k3n/report.hpp"
#include "k3n/sublattice.hpp"

#include <cstdint>
#include <vector>

namespace k3n {

/// Primitive isometric embedding of K3n(n) into the Mukai lattice with the
/// generator v of the orthogonal complement of its image.
struct Embedding {
    IntLattice source;
    IntLattice target;
    IntMatrix matrix;  // target rank x source rank
    IntVector v;       // (v, v) = 2n - 2
};

/// U^3 and both E8 summands map identically; delta goes to e4 + (n-1) f4 and
/// v = e4 + (1-n) f4. Throws InvariantViolation if the result fails its
/// own isometry, orthogonality, or primitivity checks.
Embedding standard_embedding(std::int64_t n);

/// Rank, signature and discriminant divisors of a lattice compared against a
/// model lattice.
struct InvariantReport {
    Index rank = 0;
    Signature signature;
    std::vector<Integer> elementary_divisors;
    bool match = false;
};

InvariantReport invariant_report(const IntLattice& lattice, const IntLattice& model);

/// E8(-1)^2 + U^2 + <(2-2n)/d^2>, the expected isometry class of Q_alpha.
IntLattice reduced_model(std::int64_t n, std::int64_t d);

struct K3Association {
    std::int64_t n = 0;
    IntVector alpha;            // K3n(n) coordinates
    Embedding embedding;
    IntVector beta;             // image of alpha in Mukai coordinates
    IsotropicQuotient k3;       // beta^perp / Z beta, rank 22
    IntVector v_bar;            // coset of v in k3
    std::int64_t d = 0;         // content of v_bar
    IntVector xi;               // v_bar / d
    IsotropicQuotient q_alpha;  // alpha^perp / Z alpha, rank 21
    IntMatrix iota_bar;         // 22 x 21, Q_alpha -> k3
    Sublattice xi_perp;         // in k3 coordinates
    InvariantReport q_alpha_report;
    InvariantReport k3_report;
    std::vector<Check> checks;

    bool verified() const { return all_pass(checks); }
};

/// Runs the full construction for a primitive isotropic alpha in K3n(n).
/// Throws InputError if alpha is not primitive isotropic.
K3Association associate_k3(std::int64_t n, const IntVector& alpha);

/// Isotropic gamma in the Mukai lattice with (gamma, beta) = -1.
IntVector find_gamma(const IntVector& beta);

/// x -> -(x, gamma) beta for x in beta^perp.
IntVector sigma_gamma(const IntVector& beta, const IntVector& gamma, const IntVector& x);

/// Lift of a coset y in beta^perp / Z beta to {beta, gamma}^perp:
/// lift + (lift, gamma) beta. The result does not depend on the lift.
IntVector tau_tilde(const IntVector& beta, const IntVector& gamma, const IntVector& lift);

/// Elementary divisors of K3 / (lambda^perp + Z lambda) for
/// lambda = e1 - ((n-1)/d^2) f1.
std::vector<Integer> sha_kernel_divisors(std::int64_t n, std::int64_t d);

}  // namespace k3n
