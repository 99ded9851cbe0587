#pragma once

// Exact arithmetic in a real quadratic field Q(sqrt D).

#include "k3n/lattice.hpp"

#include <string>

namespace k3n {

/// a + b sqrt(D) with rational a, b and squarefree D > 1.
///
/// D = 0 marks a rational value (b must then be 0); it combines with any
/// field. Mixing two different nonzero D throws InputError.
class QuadScalar {
public:
    QuadScalar() = default;
    QuadScalar(Rational a) : a_(std::move(a)) {}
    QuadScalar(long long a) : a_(a) {}
    QuadScalar(const Integer& a) : a_(a) {}
    QuadScalar(Rational a, Rational b, Integer D);

    const Rational& rational_part() const { return a_; }
    const Rational& root_part() const { return b_; }
    const Integer& field() const { return D_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    /// Exact sign of a + b sqrt(D): -1, 0 or 1.
    int sign() const;

    QuadScalar conjugate() const { return {a_, -b_, D_}; }

    QuadScalar operator-() const { return {-a_, -b_, D_}; }
    friend QuadScalar operator+(const QuadScalar& x, const QuadScalar& y);
    friend QuadScalar operator-(const QuadScalar& x, const QuadScalar& y);
    friend QuadScalar operator*(const QuadScalar& x, const QuadScalar& y);
    /// Throws std::domain_error on division by zero.
    friend QuadScalar operator/(const QuadScalar& x, const QuadScalar& y);
    QuadScalar& operator+=(const QuadScalar& y) { return *this = *this + y; }
    QuadScalar& operator-=(const QuadScalar& y) { return *this = *this - y; }
    QuadScalar& operator*=(const QuadScalar& y) { return *this = *this * y; }

    friend bool operator==(const QuadScalar& x, const QuadScalar& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const QuadScalar& x, const QuadScalar& y) { return !(x == y); }

    std::string str() const;

private:
    Rational a_ = 0;
    Rational b_ = 0;
    Integer D_ = 0;
};

/// True iff D > 1 and no square > 1 divides it.
bool is_squarefree_field(const Integer& D);

/// Field shared by two operands; throws InputError if they differ.
Integer common_field(const Integer& d1, const Integer& d2);

/// Vector over Q(sqrt D), stored as rational and sqrt(D) components.
struct QuadVector {
    RatVector a;
    RatVector b;
    Integer D = 0;

    QuadVector() = default;
    QuadVector(RatVector rational, RatVector root, Integer field);
    explicit QuadVector(const IntVector& v);

    Index size() const { return a.size(); }
    QuadScalar operator()(Index i) const { return {a(i), b(i), D}; }
    void set(Index i, const QuadScalar& value);
    bool is_rational() const;
    bool is_zero() const;

    friend QuadVector operator+(const QuadVector& x, const QuadVector& y);
    friend QuadVector operator-(const QuadVector& x, const QuadVector& y);
    friend QuadVector operator*(const QuadScalar& c, const QuadVector& x);
    friend bool operator==(const QuadVector& x, const QuadVector& y) { return x.a == y.a && x.b == y.b; }
};

/// Applies an integer matrix to both components.
QuadVector apply(const IntMatrix& m, const QuadVector& x);

QuadScalar pairing(const IntLattice& lattice, const QuadVector& x, const QuadVector& y);
QuadScalar pairing(const IntLattice& lattice, const QuadVector& x, const IntVector& y);

/// Pairing of x against an integer functional row: sum_i f_i x_i.
QuadScalar apply_functional(const IntVector& functional, const QuadVector& x);

}  // namespace k3n
