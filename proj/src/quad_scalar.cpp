#include "k3n/quad_scalar.hpp"

#include "k3n/errors.hpp"

#include <stdexcept>

namespace k3n {

QuadScalar::QuadScalar(Rational a, Rational b, Integer D) : a_(std::move(a)), b_(std::move(b)), D_(std::move(D))
{
    if (b_ != 0 && D_ == 0)
        throw InputError("QuadScalar: irrational part without a field");
}

int QuadScalar::sign() const
{
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0)
        return sa;
    if (sa == 0 || sa == sb)
        return sb;
    // opposite signs: compare a^2 with b^2 D
    const Rational lhs = a_ * a_;
    const Rational rhs = b_ * b_ * Rational(D_);
    if (lhs == rhs)
        return 0;
    return lhs > rhs ? sa : sb;
}

QuadScalar operator+(const QuadScalar& x, const QuadScalar& y)
{
    return {x.a_ + y.a_, x.b_ + y.b_, common_field(x.D_, y.D_)};
}

QuadScalar operator-(const QuadScalar& x, const QuadScalar& y)
{
    return {x.a_ - y.a_, x.b_ - y.b_, common_field(x.D_, y.D_)};
}

QuadScalar operator*(const QuadScalar& x, const QuadScalar& y)
{
    const Integer D = common_field(x.D_, y.D_);
    return {x.a_ * y.a_ + x.b_ * y.b_ * Rational(D), x.a_ * y.b_ + x.b_ * y.a_, D};
}

QuadScalar operator/(const QuadScalar& x, const QuadScalar& y)
{
    if (y.is_zero())
        throw std::domain_error("QuadScalar: division by zero");
    const Integer D = common_field(x.D_, y.D_);
    const Rational n = y.a_ * y.a_ - y.b_ * y.b_ * Rational(D);
    const QuadScalar num = x * y.conjugate();
    return {num.a_ / n, num.b_ / n, D};
}

std::string QuadScalar::str() const
{
    if (b_ == 0)
        return a_.str();
    return a_.str() + (b_ < 0 ? " - " : " + ") + Rational(abs(b_)).str() + "*sqrt(" + D_.str() + ")";
}

bool is_squarefree_field(const Integer& D)
{
    if (D <= 1)
        return false;
    Integer m = D;
    for (Integer p = 2; p * p <= m; ++p) {
        if (m % (p * p) == 0)
            return false;
        while (m % p == 0)
            m /= p;
    }
    return true;
}

Integer common_field(const Integer& d1, const Integer& d2)
{
    if (d1 == 0)
        return d2;
    if (d2 == 0 || d1 == d2)
        return d1;
    throw InputError("mixed quadratic fields: sqrt(" + d1.str() + ") and sqrt(" + d2.str() + ")");
}

QuadVector::QuadVector(RatVector rational, RatVector root, Integer field)
    : a(std::move(rational)), b(std::move(root)), D(std::move(field))
{
    if (a.size() != b.size())
        throw InputError("QuadVector: component sizes differ");
    if (D == 0 && !(b.array() == Rational(0)).all())
        throw InputError("QuadVector: irrational part without a field");
}

QuadVector::QuadVector(const IntVector& v) : a(cast_matrix<Rational>(IntMatrix(v))), b(RatVector::Zero(v.size())) {}

void QuadVector::set(Index i, const QuadScalar& value)
{
    D = common_field(D, value.field());
    a(i) = value.rational_part();
    b(i) = value.root_part();
}

bool QuadVector::is_rational() const
{
    return (b.array() == Rational(0)).all();
}

bool QuadVector::is_zero() const
{
    return (a.array() == Rational(0)).all() && is_rational();
}

QuadVector operator+(const QuadVector& x, const QuadVector& y)
{
    if (x.size() != y.size())
        throw InputError("QuadVector: size mismatch");
    return {x.a + y.a, x.b + y.b, common_field(x.D, y.D)};
}

QuadVector operator-(const QuadVector& x, const QuadVector& y)
{
    if (x.size() != y.size())
        throw InputError("QuadVector: size mismatch");
    return {x.a - y.a, x.b - y.b, common_field(x.D, y.D)};
}

QuadVector operator*(const QuadScalar& c, const QuadVector& x)
{
    const Integer D = common_field(c.field(), x.D);
    const Rational& p = c.rational_part();
    const Rational& q = c.root_part();
    return {RatVector(p * x.a + (q * Rational(D)) * x.b), RatVector(q * x.a + p * x.b), D};
}

QuadVector apply(const IntMatrix& m, const QuadVector& x)
{
    const RatMatrix mr = cast_matrix<Rational>(m);
    return {RatVector(mr * x.a), RatVector(mr * x.b), x.D};
}

QuadScalar pairing(const IntLattice& lattice, const QuadVector& x, const QuadVector& y)
{
    if (x.size() != lattice.rank() || y.size() != lattice.rank())
        throw InputError("pairing: vector length differs from lattice rank");
    const Integer D = common_field(x.D, y.D);
    const RatMatrix g = cast_matrix<Rational>(lattice.gram());
    const RatVector gya = g * y.a;
    const RatVector gyb = g * y.b;
    return {x.a.dot(gya) + Rational(D) * x.b.dot(gyb), x.a.dot(gyb) + x.b.dot(gya), D};
}

QuadScalar pairing(const IntLattice& lattice, const QuadVector& x, const IntVector& y)
{
    return apply_functional(pairing_functional(lattice, y), x);
}

QuadScalar apply_functional(const IntVector& functional, const QuadVector& x)
{
    if (functional.size() != x.size())
        throw InputError("apply_functional: length mismatch");
    const RatVector f = cast_matrix<Rational>(IntMatrix(functional));
    return {f.dot(x.a), f.dot(x.b), x.D};
}

}  // namespace k3n
