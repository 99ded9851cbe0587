#include "k3n/scalar.hpp"

#include "k3n/errors.hpp"

#include <stdexcept>

namespace k3n {

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q = a / b;  // truncates toward zero
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        q -= 1;
    return q;
}

Integer floor_mod(const Integer& a, const Integer& m)
{
    const Integer am = abs(m);
    Integer r = a % am;
    if (r < 0)
        r += am;
    return r;
}

Integer round_div(const Integer& a, const Integer& b)
{
    Integer num = 2 * a;
    Integer den = 2 * b;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Integer q = floor_div(num + den / 2, den);
    return q;
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b)
{
    Integer old_r = a, r = b;
    Integer old_s = 1, s = 0;
    Integer old_t = 0, t = 1;
    while (r != 0) {
        Integer q = old_r / r;
        Integer tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

Integer content(const IntVector& v)
{
    Integer g = 0;
    for (Index i = 0; i < v.size(); ++i) {
        g = gcd(g, v(i));
        if (g == 1)
            break;
    }
    return abs(g);
}

bool is_zero(const IntVector& v)
{
    for (Index i = 0; i < v.size(); ++i)
        if (v(i) != 0)
            return false;
    return true;
}

Integer mod_inverse(const Integer& a, const Integer& m)
{
    if (m == 0)
        throw InputError("mod_inverse: zero modulus");
    if (abs(m) == 1)
        return Integer(1);
    auto eg = extended_gcd(floor_mod(a, m), abs(m));
    if (eg.g != 1)
        throw InputError("mod_inverse: " + to_string(a) + " is not a unit modulo " + to_string(m));
    Integer s = floor_mod(eg.x, m);
    return s == 0 ? abs(m) : s;
}

Integer exact_sqrt(const Integer& n)
{
    if (n < 0)
        return Integer(-1);
    Integer r = sqrt(n);
    return r * r == n ? r : Integer(-1);
}

IntVector int_vector(std::initializer_list<long long> values)
{
    IntVector v(static_cast<Index>(values.size()));
    Index i = 0;
    for (long long x : values)
        v(i++) = Integer(x);
    return v;
}

IntVector unit_vector(Index size, Index i)
{
    IntVector v = IntVector::Constant(size, Integer(0));
    v(i) = 1;
    return v;
}

IntMatrix identity_matrix(Index size)
{
    IntMatrix m = IntMatrix::Constant(size, size, Integer(0));
    for (Index i = 0; i < size; ++i)
        m(i, i) = 1;
    return m;
}

RatMatrix exact_inverse(const RatMatrix& m)
{
    if (m.rows() != m.cols())
        throw std::domain_error("exact_inverse: matrix is not square");
    const Index n = m.rows();
    RatMatrix a = m;
    RatMatrix inv = cast_matrix<Rational>(identity_matrix(n));
    for (Index col = 0; col < n; ++col) {
        Index pivot = col;
        while (pivot < n && a(pivot, col) == 0)
            ++pivot;
        if (pivot == n)
            throw std::domain_error("exact_inverse: singular matrix");
        if (pivot != col) {
            a.row(pivot).swap(a.row(col));
            inv.row(pivot).swap(inv.row(col));
        }
        const Rational p = a(col, col);
        for (Index j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (Index i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0)
                continue;
            const Rational f = a(i, col);
            for (Index j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

std::string to_string(const Integer& x)
{
    return x.str();
}

}  // namespace k3n
