#pragma once

// Scalar and dense-matrix vocabulary shared by every module.
//
// All lattice arithmetic is exact: coordinates and Gram entries are GMP-backed
// integers, intermediate eliminations run over GMP rationals. Expression
// templates are disabled so the types behave as plain values inside Eigen.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <cstdint>
#include <initializer_list>
#include <string>

namespace k3n {

namespace mp = boost::multiprecision;

using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

/// Floor division, rounding toward negative infinity (b != 0).
Integer floor_div(const Integer& a, const Integer& b);

/// Least non-negative residue of a modulo |m| (m != 0).
Integer floor_mod(const Integer& a, const Integer& m);

/// Nearest integer to a/b, ties rounded up.
Integer round_div(const Integer& a, const Integer& b);

struct ExtendedGcd {
    Integer g;  // non-negative
    Integer x;
    Integer y;  // a*x + b*y == g
};

ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

/// Non-negative gcd of all entries; zero for the zero vector.
Integer content(const IntVector& v);

bool is_zero(const IntVector& v);

/// Inverse of a modulo m as the least positive residue; throws if not a unit.
Integer mod_inverse(const Integer& a, const Integer& m);

/// Integer square root if n is a perfect square, otherwise -1.
Integer exact_sqrt(const Integer& n);

IntVector int_vector(std::initializer_list<long long> values);

IntVector unit_vector(Index size, Index i);

IntMatrix identity_matrix(Index size);

/// Exact inverse of a square rational matrix by Gauss-Jordan elimination.
/// Throws std::domain_error when the matrix is singular.
RatMatrix exact_inverse(const RatMatrix& m);

template <typename To, typename From>
Matrix<To> cast_matrix(const Matrix<From>& m)
{
    Matrix<To> out(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            out(i, j) = To(m(i, j));
    return out;
}

std::string to_string(const Integer& x);

}  // namespace k3n
