#pragma once

// Integral lattices: a free Z-module with a symmetric integer Gram matrix.

#include "k3n/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace k3n {

/// Even integral lattice given by its Gram matrix in a fixed basis.
///
/// The form may be degenerate. Construction validates symmetry and that all
/// diagonal entries are even.
class IntLattice {
public:
    IntLattice() = default;
    explicit IntLattice(IntMatrix gram, std::string label = {});

    Index rank() const { return gram_.rows(); }
    const IntMatrix& gram() const { return gram_; }
    const std::string& label() const { return label_; }

private:
    IntMatrix gram_;
    std::string label_;
};

enum class StandardLattice { U, E8Minus, Mukai, K3, K3n };

/// Named lattices in their documented basis order.
///
///   U      {e, f}, Gram ((0,-1),(-1,0))
///   E8(-1) negated Cartan matrix, Bourbaki node order 1..8 (node 2 hangs off node 4)
///   K3     U^3 + E8(-1)^2                      rank 22: e1 f1 e2 f2 e3 f3 | E8 | E8
///   K3n    U^3 + E8(-1)^2 + <2-2n>             rank 23: K3 basis, then delta
///   Mukai  U^4 + E8(-1)^2                      rank 24: e1 f1 .. e4 f4 | E8 | E8
///
/// `n` is required for K3n (n >= 2) and rejected otherwise.
IntLattice standard_lattice(StandardLattice name, std::optional<long long> n = std::nullopt);

/// Parses "U", "E8(-1)", "K3", "Mukai", or "K3n(<n>)"; throws InputError.
IntLattice standard_lattice_from_label(const std::string& label);

IntLattice direct_sum(const IntLattice& a, const IntLattice& b, std::string label = {});

/// Diagonal rank-one lattice <value>.
IntLattice rank_one(const Integer& value, std::string label = {});

/// Coordinates of the standard basis vectors.
namespace basis {
/// i-th hyperbolic plane, 1-based: e_i and f_i.
inline constexpr Index e(int i) { return 2 * (i - 1); }
inline constexpr Index f(int i) { return 2 * (i - 1) + 1; }
inline constexpr Index k3_e8_offset = 6;
inline constexpr Index mukai_e8_offset = 8;
inline constexpr Index k3n_delta = 22;
inline constexpr Index k3_rank = 22;
inline constexpr Index k3n_rank = 23;
inline constexpr Index mukai_rank = 24;
}  // namespace basis

Integer pairing(const IntLattice& lattice, const IntVector& x, const IntVector& y);

inline Integer norm(const IntLattice& lattice, const IntVector& x)
{
    return pairing(lattice, x, x);
}

/// Row of pairings (x, b_i) against every basis vector, i.e. gram * x.
IntVector pairing_functional(const IntLattice& lattice, const IntVector& x);

bool is_primitive(const IntLattice& lattice, const IntVector& x);

/// Largest d such that (x, .)/d is integral on the lattice.
Integer divisibility(const IntLattice& lattice, const IntVector& x);

enum class ReflectionKind {
    Reflection,       // R_e(x) = x - 2(x,e)/(e,e) e
    MinusReflection,  // rho_e(x) = -R_e(x); for (e,e) = 2 this is -x + (x,e) e
};

IntVector reflect(const IntLattice& lattice, const IntVector& e, const IntVector& x,
                  ReflectionKind kind = ReflectionKind::Reflection);

/// Matrix of the reflection acting on coordinates.
IntMatrix reflection_matrix(const IntLattice& lattice, const IntVector& e,
                            ReflectionKind kind = ReflectionKind::Reflection);

struct Inertia {
    Index positive = 0;
    Index negative = 0;
    Index null = 0;
};

/// Sylvester inertia of a symmetric integer matrix, by exact rational
/// congruence diagonalization.
Inertia inertia(const IntMatrix& symmetric);

/// Rational orthogonal basis (columns of `basis`) with `basis^T g basis`
/// diagonal; `diagonal` holds the diagonal entries.
struct CongruenceDiagonalization {
    RatMatrix basis;
    std::vector<Rational> diagonal;
};

CongruenceDiagonalization diagonalize(const IntMatrix& symmetric);

struct Signature {
    Index positive = 0;
    Index negative = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

/// Signature of a nondegenerate lattice; throws InputError naming the rank
/// deficiency for a degenerate Gram matrix.
Signature signature(const IntLattice& lattice);

/// Elementary divisors > 1 of the Gram matrix (the discriminant group
/// L^* / L). Throws InputError for a degenerate lattice.
std::vector<Integer> discriminant_group(const IntLattice& lattice);

/// Gram matrix of the sublattice spanned by the columns of `basis`.
IntLattice restrict_form(const IntLattice& lattice, const IntMatrix& basis, std::string label = {});

}  // namespace k3n
