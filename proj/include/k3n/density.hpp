#pragma once

// Approximation of complex targets by values of the period functional
// z -> (t, z) on a lattice, with t = x + i y a non-special period.

#include "k3n/period.hpp"

#include <complex>
#include <vector>

namespace k3n {

struct DensityCertificate {
    std::complex<double> target;
    IntVector coeffs;             // over the lattice basis of the period
    double achieved_error = 0.0;  // |(t, coeffs) - target| at working precision
    double epsilon = 0.0;
    int iterations = 0;           // accepted basis replacements
    int precision_bits = 0;       // working precision that produced the result
    std::vector<double> basis_trace;  // |z1| + |z2| before and after each replacement
};

struct DensityOptions {
    int precision_bits = 128;
    int max_iterations = 20000;
};

/// Working precision from BBF_PRECISION_BITS, 128 when unset; InputError if
/// the value is not an integer in [64, 1024].
int precision_bits_from_env();

/// Finds integer coefficients z with |(t, z) - target| < epsilon.
///
/// The generators are a Z-basis of the value group {(t, z)}, lifted to the
/// lattice, so kernel directions never enter the coefficients. A pair of
/// generator values is kept as a basis of R^2. Each step reduces
/// one generator value modulo the pair into the half-parallelogram, folds it
/// by z1 + z2 - 2w when both coordinates exceed 1/3, and replaces the longer
/// basis vector, shrinking |z1| + |z2| by at least 11/12. Stops once the sum
/// drops below epsilon/2 and rounds the target in that basis.
///
/// Throws InputError for a special period or epsilon <= 0, BudgetExhausted
/// when the iteration cap is hit or precision runs out at 1024 bits.
DensityCertificate density_approximate(const Period& period, std::complex<double> target, double epsilon,
                                       const DensityOptions& options = {});

/// |(t, coeffs) - target| recomputed from the exact period at `bits`.
double evaluate_error(const Period& period, const IntVector& coeffs, std::complex<double> target, int bits);

struct CertificateCheck {
    double recomputed_error = 0.0;
    bool below_epsilon = false;
    bool within_slack = false;  // recomputed <= 2 * reported (plus a 2^-(bits/2) floor)
    bool shrink_ok = false;     // every trace step shrinks by <= 11/12

    bool pass() const { return below_epsilon && within_slack && shrink_ok; }
};

CertificateCheck verify_certificate(const Period& period, const DensityCertificate& cert, int bits);

/// True iff consecutive trace entries shrink by a factor of at most 11/12.
bool shrink_trace_ok(const std::vector<double>& trace);

}  // namespace k3n
