#include "k3n/density.hpp"

#include "k3n/errors.hpp"
#include "k3n/normal_form.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cstdlib>
#include <string>

namespace k3n {

namespace {

template <unsigned Bits>
using BinFloat = mp::number<mp::cpp_bin_float<Bits, mp::digit_base_2>, mp::et_off>;

struct PrecisionExhausted {
    std::string reason;
};

template <typename F>
struct Point {
    F re;
    F im;
};

template <typename F>
F length(const Point<F>& p)
{
    return sqrt(p.re * p.re + p.im * p.im);
}

template <typename F>
F to_float(const QuadScalar& q, const F& root)
{
    return F(q.rational_part()) + F(q.root_part()) * root;
}

/// Values (G x)_j + i (G y)_j of the period functional on basis vectors.
template <typename F>
std::vector<Point<F>> functional_values(const Period& period)
{
    const F root = period.field() == 0 ? F(0) : sqrt(F(period.field()));
    const QuadVector gx = apply(period.lattice.gram(), period.x);
    const QuadVector gy = apply(period.lattice.gram(), period.y);
    std::vector<Point<F>> phi;
    for (Index j = 0; j < gx.size(); ++j)
        phi.push_back({to_float(gx(j), root), to_float(gy(j), root)});
    return phi;
}

template <typename F>
Point<F> evaluate(const std::vector<Point<F>>& phi, const IntVector& c)
{
    Point<F> out{F(0), F(0)};
    for (Index j = 0; j < c.size(); ++j) {
        if (c(j) == 0)
            continue;
        const F cj(c(j));
        out.re += cj * phi[j].re;
        out.im += cj * phi[j].im;
    }
    return out;
}

template <typename F>
F distance(const Point<F>& p, std::complex<double> target)
{
    return length(Point<F>{p.re - F(target.real()), p.im - F(target.imag())});
}

template <typename F>
Integer floor_to_integer(const F& v)
{
    std::string digits = floor(v).str(0, std::ios_base::fixed);
    digits = digits.substr(0, digits.find('.'));
    return digits == "-0" ? Integer(0) : Integer(digits);
}

/// Integer vectors whose functional values form a Z-basis of the image
/// group {(t, z)}; the kernel of z -> (t, z) is dropped so coefficients stay
/// small. Columns of the returned matrix are in lattice coordinates.
IntMatrix image_generators(const Period& period)
{
    const QuadVector gx = apply(period.lattice.gram(), period.x);
    const QuadVector gy = apply(period.lattice.gram(), period.y);
    const Index r = gx.size();
    RatMatrix rows(4, r);
    rows.row(0) = gx.a.transpose();
    rows.row(1) = gx.b.transpose();
    rows.row(2) = gy.a.transpose();
    rows.row(3) = gy.b.transpose();
    Integer den = 1;
    for (Index i = 0; i < 4; ++i)
        for (Index j = 0; j < r; ++j) {
            const Integer& q = mp::denominator(rows(i, j));
            den = den / gcd(den, q) * q;
        }
    IntMatrix m(4, r);
    for (Index i = 0; i < 4; ++i)
        for (Index j = 0; j < r; ++j)
            m(i, j) = mp::numerator(rows(i, j)) * (den / mp::denominator(rows(i, j)));
    const auto ech = column_echelon(m);
    return ech.transform.leftCols(ech.rank);
}

template <typename F>
DensityCertificate run(const Period& period, std::complex<double> target, double epsilon, int bits,
                       int max_iterations)
{
    const auto phi = functional_values<F>(period);
    const Index r = static_cast<Index>(phi.size());
    const F eps(epsilon);

    DensityCertificate cert;
    cert.target = target;
    cert.epsilon = epsilon;
    cert.precision_bits = bits;

    // Candidates 0 and +-e_j first, so exact hits return the obvious vector.
    {
        IntVector best = IntVector::Constant(r, Integer(0));
        F best_err = distance(evaluate(phi, best), target);
        for (Index j = 0; j < r; ++j)
            for (int s : {1, -1}) {
                IntVector c = IntVector::Constant(r, Integer(0));
                c(j) = s;
                const F err = distance(evaluate(phi, c), target);
                if (err < best_err) {
                    best_err = err;
                    best = c;
                }
            }
        if (best_err < eps) {
            cert.coeffs = best;
            cert.achieved_error = best_err.template convert_to<double>();
            return cert;
        }
    }

    // The loop runs on a Z-basis of the image so coefficients do not drift
    // along the kernel.
    const IntMatrix gens = image_generators(period);
    const Index m = gens.cols();
    std::vector<Point<F>> psi;
    for (Index k = 0; k < m; ++k)
        psi.push_back(evaluate(phi, IntVector(gens.col(k))));

    auto det = [](const Point<F>& a, const Point<F>& b) { return a.re * b.im - a.im * b.re; };
    Index i0 = -1, i1 = -1;
    F best_det(0);
    for (Index a = 0; a < m; ++a)
        for (Index b = a + 1; b < m; ++b) {
            const F d = abs(det(psi[a], psi[b]));
            if (d > best_det) {
                best_det = d;
                i0 = a;
                i1 = b;
            }
        }
    if (i0 < 0)
        throw InvariantViolation("density: functional values span no plane");

    IntVector c1 = unit_vector(m, i0);
    IntVector c2 = unit_vector(m, i1);
    Point<F> z1 = psi[i0];
    Point<F> z2 = psi[i1];
    const F tol = ldexp(F(1), -bits / 4);
    const F third = F(1) / 3;
    const F half = F(1) / 2;
    const F ratio = F(11) / 12;

    F sum = length(z1) + length(z2);
    cert.basis_trace.push_back(sum.template convert_to<double>());
    Index next = 0;
    Index idle = 0;
    int injections = 0;
    while (sum >= eps / 2) {
        if (injections++ >= max_iterations)
            throw BudgetExhausted("density: iteration cap " + std::to_string(max_iterations) +
                                  " reached with basis size " + sum.str(6));
        const Index g = next;
        next = (next + 1) % m;

        const F dz = det(z1, z2);
        if (abs(dz) <= tol * tol * sum * sum)
            throw PrecisionExhausted{"working basis became numerically degenerate"};
        const F a1 = det(psi[g], z2) / dz;
        const F a2 = det(z1, psi[g]) / dz;
        const F k1 = floor(a1);
        const F k2 = floor(a2);
        IntVector w = unit_vector(m, g) - floor_to_integer(a1) * c1 - floor_to_integer(a2) * c2;
        F f1 = a1 - k1;
        F f2 = a2 - k2;
        if (f1 > half) {
            w -= c1;
            c1 = -c1;
            z1 = {-z1.re, -z1.im};
            f1 = 1 - f1;
        }
        if (f2 > half) {
            w -= c2;
            c2 = -c2;
            z2 = {-z2.re, -z2.im};
            f2 = 1 - f2;
        }
        if (f1 > third && f2 > third) {
            w = c1 + c2 - Integer(2) * w;
            f1 = 1 - 2 * f1;
            f2 = 1 - 2 * f2;
        }
        const bool first_longer = length(z1) >= length(z2);
        if ((first_longer ? f1 : f2) <= tol) {
            if (++idle > 2 * m)
                throw PrecisionExhausted{"no generator moves the working basis"};
            continue;
        }
        idle = 0;
        const Point<F> wv = evaluate(psi, w);
        const F new_sum = length(wv) + (first_longer ? length(z2) : length(z1));
        if (new_sum > ratio * sum * (1 + tol))
            throw PrecisionExhausted{"basis replacement failed to shrink"};
        if (first_longer) {
            c1 = w;
            z1 = wv;
        } else {
            c2 = w;
            z2 = wv;
        }
        sum = new_sum;
        ++cert.iterations;
        cert.basis_trace.push_back(sum.template convert_to<double>());
    }

    const Point<F> t{F(target.real()), F(target.imag())};
    const F dz = det(z1, z2);
    const F a1 = det(t, z2) / dz;
    const F a2 = det(z1, t) / dz;
    cert.coeffs = gens * IntVector(floor_to_integer(F(a1 + half)) * c1 + floor_to_integer(F(a2 + half)) * c2);
    const F err = distance(evaluate(phi, cert.coeffs), target);
    if (!(err < eps))
        throw PrecisionExhausted{"rounded coefficients miss the target"};
    // Rounding noise of the evaluation must stay well below the error itself,
    // or the reported figure means nothing; large coefficients force more bits.
    F magnitude(0);
    for (Index j = 0; j < r; ++j)
        magnitude += abs(F(cert.coeffs(j))) * (abs(phi[j].re) + abs(phi[j].im));
    if (!(magnitude * ldexp(F(1), 4 - bits) < err / 8))
        throw PrecisionExhausted{"coefficients too large for the working precision"};
    cert.achieved_error = err.template convert_to<double>();
    return cert;
}

template <typename Fn>
auto with_precision(int bits, Fn&& fn)
{
    if (bits <= 128)
        return fn(BinFloat<128>{});
    if (bits <= 200)
        return fn(BinFloat<200>{});
    if (bits <= 256)
        return fn(BinFloat<256>{});
    if (bits <= 512)
        return fn(BinFloat<512>{});
    if (bits <= 1024)
        return fn(BinFloat<1024>{});
    throw InputError("precision above 1024 bits is not supported");
}

int supported_bits(int bits)
{
    for (int b : {128, 200, 256, 512, 1024})
        if (bits <= b)
            return b;
    throw InputError("precision above 1024 bits is not supported");
}

}  // namespace

int precision_bits_from_env()
{
    const char* raw = std::getenv("BBF_PRECISION_BITS");
    if (raw == nullptr || *raw == '\0')
        return 128;
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (*end != '\0' || v < 64 || v > 1024)
        throw InputError(std::string("BBF_PRECISION_BITS must be an integer in [64, 1024], got '") + raw + "'");
    return static_cast<int>(v);
}

DensityCertificate density_approximate(const Period& period, std::complex<double> target, double epsilon,
                                       const DensityOptions& options)
{
    if (!(epsilon > 0))
        throw InputError("density: epsilon must be positive");
    if (is_special(period).special)
        throw InputError("density: period is special, so its functional values are not dense");
    std::string last;
    int bits = supported_bits(options.precision_bits);
    while (true) {
        try {
            return with_precision(bits, [&](auto tag) {
                return run<decltype(tag)>(period, target, epsilon, bits, options.max_iterations);
            });
        } catch (const PrecisionExhausted& e) {
            last = e.reason;
        }
        if (bits == 1024)
            break;
        bits = supported_bits(std::min(2 * bits, 1024));
    }
    throw BudgetExhausted("density: precision exhausted at 1024 bits (" + last + ")");
}

double evaluate_error(const Period& period, const IntVector& coeffs, std::complex<double> target, int bits)
{
    if (coeffs.size() != period.lattice.rank())
        throw InputError("density: coefficient vector has the wrong length");
    return with_precision(bits, [&](auto tag) {
        using F = decltype(tag);
        const auto phi = functional_values<F>(period);
        return distance(evaluate(phi, coeffs), target).template convert_to<double>();
    });
}

bool shrink_trace_ok(const std::vector<double>& trace)
{
    for (std::size_t i = 1; i < trace.size(); ++i)
        if (trace[i] > trace[i - 1] * (11.0 / 12.0) * (1 + 1e-12))
            return false;
    return true;
}

CertificateCheck verify_certificate(const Period& period, const DensityCertificate& cert, int bits)
{
    CertificateCheck check;
    check.recomputed_error = evaluate_error(period, cert.coeffs, cert.target, bits);
    check.below_epsilon = check.recomputed_error < cert.epsilon;
    check.within_slack = check.recomputed_error <= 2 * cert.achieved_error + std::ldexp(1.0, -bits / 2);
    check.shrink_ok = shrink_trace_ok(cert.basis_trace);
    return check;
}

}  // namespace k3n
