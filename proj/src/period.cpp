#include "k3n/period.hpp"

#include "k3n/errors.hpp"
#include "k3n/normal_form.hpp"

#include <random>
#include <string>

namespace k3n {

namespace {

Integer lcm_int(const Integer& a, const Integer& b)
{
    return a / gcd(a, b) * b;
}

/// Clears denominators of a rational vector and divides out the content.
IntVector primitive_integral(const RatVector& v)
{
    Integer den = 1;
    for (Index i = 0; i < v.size(); ++i)
        den = lcm_int(den, mp::denominator(v(i)));
    IntVector out(v.size());
    for (Index i = 0; i < v.size(); ++i)
        out(i) = mp::numerator(v(i)) * (den / mp::denominator(v(i)));
    const Integer c = content(out);
    if (c != 0)
        out /= c;
    return out;
}

/// Scales each row of a rational matrix by its common denominator.
IntMatrix integral_rows(const RatMatrix& m)
{
    IntMatrix out(m.rows(), m.cols());
    for (Index r = 0; r < m.rows(); ++r) {
        Integer den = 1;
        for (Index c = 0; c < m.cols(); ++c)
            den = lcm_int(den, mp::denominator(m(r, c)));
        for (Index c = 0; c < m.cols(); ++c)
            out(r, c) = mp::numerator(m(r, c)) * (den / mp::denominator(m(r, c)));
    }
    return out;
}

Rational rat_pairing(const IntLattice& lattice, const RatVector& x, const RatVector& y)
{
    return x.dot(RatVector(cast_matrix<Rational>(lattice.gram()) * y));
}

std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi)
{
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Rational isotropic vector via binary forms on basis pairs, then on
/// random pairs of small vectors.
IntVector find_isotropic(const IntLattice& lattice, std::mt19937_64& rng)
{
    const Index r = lattice.rank();
    const IntMatrix& g = lattice.gram();
    for (Index i = 0; i < r; ++i)
        if (g(i, i) == 0)
            return unit_vector(r, i);

    auto try_pair = [&](const IntVector& u, const IntVector& v) -> std::optional<IntVector> {
        const Integer a = pairing(lattice, u, u);
        const Integer b = pairing(lattice, u, v);
        const Integer c = pairing(lattice, v, v);
        const Integer s = exact_sqrt(b * b - a * c);
        if (s < 0 || a == 0)
            return std::nullopt;
        IntVector w = (s - b) * u + a * v;
        if (is_zero(w))
            w = (-s - b) * u + a * v;
        if (is_zero(w) || norm(lattice, w) != 0)
            return std::nullopt;
        return IntVector(w / content(w));
    };

    for (Index i = 0; i < r; ++i)
        for (Index j = i + 1; j < r; ++j)
            if (auto w = try_pair(unit_vector(r, i), unit_vector(r, j)))
                return *w;
    for (int attempt = 0; attempt < 4000; ++attempt) {
        IntVector u = IntVector::Constant(r, Integer(0));
        IntVector v = IntVector::Constant(r, Integer(0));
        for (int k = 0; k < 3; ++k) {
            u(draw(rng, 0, r - 1)) += draw(rng, -2, 2);
            v(draw(rng, 0, r - 1)) += draw(rng, -2, 2);
        }
        if (is_zero(u) || is_zero(v))
            continue;
        if (auto w = try_pair(u, v))
            return *w;
    }
    throw BudgetExhausted("sample_period: no rational isotropic vector found");
}

/// Rational period (w, e + ((w,w)/2) f) from a hyperbolic pair e, f and a
/// positive w orthogonal to both.
std::pair<RatVector, RatVector> rational_period(const IntLattice& lattice, std::mt19937_64& rng)
{
    const Index r = lattice.rank();
    const IntVector e_int = find_isotropic(lattice, rng);
    const RatVector e = cast_matrix<Rational>(IntMatrix(e_int));
    const IntVector fe = pairing_functional(lattice, e_int);
    Index partner = -1;
    for (Index i = 0; i < r && partner < 0; ++i)
        if (fe(i) != 0)
            partner = i;
    if (partner < 0)
        throw InputError("sample_period: isotropic vector lies in the radical");
    RatVector f = RatVector::Zero(r);
    f(partner) = Rational(1) / Rational(fe(partner));
    f -= (rat_pairing(lattice, f, f) / 2) * e;

    IntMatrix projected(r, r);
    for (Index i = 0; i < r; ++i) {
        RatVector u = RatVector::Zero(r);
        u(i) = 1;
        u -= rat_pairing(lattice, u, f) * e + rat_pairing(lattice, u, e) * f;
        projected.col(i) = primitive_integral(u);
    }
    const IntLattice complement = restrict_form(lattice, projected);
    const auto diag = diagonalize(complement.gram());
    for (std::size_t k = 0; k < diag.diagonal.size(); ++k) {
        if (diag.diagonal[k] <= 0)
            continue;
        const RatVector w =
            cast_matrix<Rational>(IntMatrix(projected * primitive_integral(diag.basis.col(static_cast<Index>(k)))));
        const Rational ww = rat_pairing(lattice, w, w);
        return {w, RatVector(e + (ww / 2) * f)};
    }
    throw InputError("sample_period: lattice needs at least two positive directions");
}

QuadVector random_quad_vector(Index r, const Integer& D, std::mt19937_64& rng)
{
    RatVector a = RatVector::Zero(r);
    RatVector b = RatVector::Zero(r);
    for (int k = 0; k < 3; ++k) {
        a(draw(rng, 0, r - 1)) += Rational(draw(rng, -2, 2));
        if (D != 0)
            b(draw(rng, 0, r - 1)) += Rational(draw(rng, -2, 2));
    }
    return {a, b, D};
}

}  // namespace

Period make_period(const IntLattice& lattice, const QuadVector& x, const QuadVector& y)
{
    if (x.size() != lattice.rank() || y.size() != lattice.rank())
        throw InputError("period: vectors must have " + std::to_string(lattice.rank()) + " coordinates");
    const Integer D = common_field(x.D, y.D);
    if (D != 0 && !is_squarefree_field(D))
        throw InputError("period: D = " + D.str() + " is not a squarefree integer > 1");
    const QuadScalar xx = pairing(lattice, x, x);
    const QuadScalar yy = pairing(lattice, y, y);
    const QuadScalar xy = pairing(lattice, x, y);
    if (xx != yy)
        throw InputError("period: (x,x) = " + xx.str() + " differs from (y,y) = " + yy.str());
    if (!xy.is_zero())
        throw InputError("period: (x,y) = " + xy.str() + " is not zero");
    if (xx.sign() <= 0)
        throw InputError("period: (x,x) = " + xx.str() + " is not positive");
    Period p{lattice, x, y};
    p.x.D = D;
    p.y.D = D;
    return p;
}

SpecialTest is_special(const Period& period)
{
    const Period& p = make_period(period.lattice, period.x, period.y);
    const Index r = p.lattice.rank();
    for (const QuadVector* v : {&p.x, &p.y})
        if (v->is_rational())
            return {true, primitive_integral(v->a)};

    auto minor = [&](Index a, Index b) { return p.x(a) * p.y(b) - p.x(b) * p.y(a); };
    Index j = -1, k = -1;
    for (Index a = 0; a < r && j < 0; ++a)
        for (Index b = a + 1; b < r; ++b)
            if (!minor(a, b).is_zero()) {
                j = a;
                k = b;
                break;
            }
    if (j < 0)
        throw InvariantViolation("is_special: x and y are proportional in a validated period");

    const QuadScalar mjk = minor(j, k);
    RatMatrix system = RatMatrix::Zero(2 * (r - 2), r);
    Index row = 0;
    for (Index i = 0; i < r; ++i) {
        if (i == j || i == k)
            continue;
        const QuadScalar cij = -minor(i, k);
        const QuadScalar cik = minor(i, j);
        system(row, i) = mjk.rational_part();
        system(row + 1, i) = mjk.root_part();
        system(row, j) = cij.rational_part();
        system(row + 1, j) = cij.root_part();
        system(row, k) = cik.rational_part();
        system(row + 1, k) = cik.root_part();
        row += 2;
    }
    const IntMatrix kernel = integer_kernel(integral_rows(system));
    if (kernel.cols() == 0)
        return {false, std::nullopt};
    return {true, IntVector(kernel.col(0))};
}

bool same_line(const Period& a, const Period& b)
{
    if (a.lattice.gram() != b.lattice.gram())
        return false;
    const QuadScalar n = pairing(a.lattice, a.x, a.x);
    if (n.is_zero())
        throw InputError("same_line: degenerate period");
    const QuadScalar p = pairing(a.lattice, b.x, a.x) / n;
    const QuadScalar q = pairing(a.lattice, b.y, a.x) / n;
    return b.x == p * a.x - q * a.y && b.y == q * a.x + p * a.y;
}

Period sample_period(const IntLattice& lattice, const Integer& D, std::uint64_t seed)
{
    if (D != 0 && !is_squarefree_field(D))
        throw InputError("sample_period: D = " + D.str() + " is not 0 or a squarefree integer > 1");
    const Inertia in = inertia(lattice.gram());
    if (in.null != 0)
        throw InputError("sample_period: lattice is degenerate");
    if (in.positive < 2)
        throw InputError("sample_period: lattice needs at least two positive directions");

    std::mt19937_64 rng(seed);
    const auto [x0, y0] = rational_period(lattice, rng);
    QuadVector x(x0, RatVector::Zero(x0.size()), D);
    QuadVector y(y0, RatVector::Zero(y0.size()), D);
    int applied = 0;
    while (applied < 3) {
        const QuadVector v = random_quad_vector(lattice.rank(), D, rng);
        const QuadScalar vv = pairing(lattice, v, v);
        if (vv.is_zero())
            continue;
        const QuadScalar two = 2;
        x = x - (two * pairing(lattice, x, v) / vv) * v;
        y = y - (two * pairing(lattice, y, v) / vv) * v;
        ++applied;
    }
    return make_period(lattice, x, y);
}

Period sample_nonspecial_period(const IntLattice& lattice, const Integer& D, std::uint64_t seed, int attempts)
{
    if (!is_squarefree_field(D))
        throw InputError("sample_nonspecial_period: D = " + D.str() + " is not a squarefree integer > 1");
    std::mt19937_64 seeds(seed);
    for (int i = 0; i < attempts; ++i) {
        Period p = sample_period(lattice, D, seeds());
        if (!is_special(p).special)
            return p;
    }
    throw BudgetExhausted("sample_nonspecial_period: all " + std::to_string(attempts) +
                          " sampled periods were special");
}

Fibration make_fibration(std::int64_t n, const IntVector& alpha)
{
    Fibration fib;
    fib.n = n;
    fib.k3n = standard_lattice(StandardLattice::K3n, n);
    if (alpha.size() != fib.k3n.rank())
        throw InputError("fibration: alpha must have 23 coordinates");
    if (is_zero(alpha) || norm(fib.k3n, alpha) != 0 || !is_primitive(fib.k3n, alpha))
        throw InputError("fibration: alpha must be primitive isotropic");
    fib.alpha = alpha;
    fib.q_alpha = quotient_mod_isotropic(fib.k3n, alpha, orthogonal_complement(fib.k3n, IntMatrix(alpha)), "Q(alpha)");
    fib.embedding = standard_embedding(n);
    fib.beta = fib.embedding.matrix * alpha;
    fib.gamma = find_gamma(fib.beta);
    return fib;
}

Period q_project(const Fibration& fib, const Period& period)
{
    if (period.lattice.gram() != fib.k3n.gram())
        throw InputError("q_project: period does not live on " + fib.k3n.label());
    if (!pairing(fib.k3n, period.x, fib.alpha).is_zero() || !pairing(fib.k3n, period.y, fib.alpha).is_zero())
        throw InputError("q_project: period is not orthogonal to alpha");
    return make_period(fib.q_alpha.lattice, apply(fib.q_alpha.projection, period.x),
                       apply(fib.q_alpha.projection, period.y));
}

Period tau_section(const Fibration& fib, const IntVector& gamma, const Period& q_period)
{
    const IntLattice& mukai = fib.embedding.target;
    if (gamma.size() != mukai.rank())
        throw InputError("tau_section: gamma must have 24 coordinates");
    if (norm(mukai, gamma) != 0 || pairing(mukai, gamma, fib.beta) != -1)
        throw InputError("tau_section: gamma must be isotropic with (gamma, beta) = -1");
    if (q_period.lattice.gram() != fib.q_alpha.lattice.gram())
        throw InputError("tau_section: period does not live on Q_alpha");
    const IntVector h = fib.embedding.matrix.transpose() * pairing_functional(mukai, gamma);
    auto correct = [&](const QuadVector& coset) {
        const QuadVector lift = apply(fib.q_alpha.section, coset);
        return lift + apply_functional(h, lift) * QuadVector(fib.alpha);
    };
    return make_period(fib.k3n, correct(q_period.x), correct(q_period.y));
}

Period g_act(const Fibration& fib, const IntVector& z, const Period& period)
{
    if (z.size() != fib.k3n.rank() || pairing(fib.k3n, z, fib.alpha) != 0)
        throw InputError("g_act: z is not in alpha^perp");
    const IntVector fz = pairing_functional(fib.k3n, z);
    auto act = [&](const QuadVector& w) { return w + apply_functional(fz, w) * QuadVector(fib.alpha); };
    return make_period(period.lattice, act(period.x), act(period.y));
}

IntVector cocycle_delta(const Fibration& fib, const IntVector& gamma, const IntVector& z)
{
    if (z.size() != fib.k3n.rank() || pairing(fib.k3n, z, fib.alpha) != 0)
        throw InputError("cocycle_delta: z is not in alpha^perp");
    const IntLattice& mukai = fib.embedding.target;
    const IntVector iz = fib.embedding.matrix * z;
    const Integer zz = norm(fib.k3n, z);
    return gamma + iz + (pairing(mukai, gamma, iz) + zz / 2) * fib.beta;
}

IntMatrix tilde_g(const IntVector& beta, const IntVector& v, const IntVector& z)
{
    const IntLattice mukai = standard_lattice(StandardLattice::Mukai);
    if (beta.size() != mukai.rank() || v.size() != mukai.rank() || z.size() != mukai.rank())
        throw InputError("tilde_g: vectors must have 24 coordinates");
    if (pairing(mukai, z, beta) != 0 || pairing(mukai, z, v) != 0)
        throw InputError("tilde_g: z must be orthogonal to beta and v");
    const Integer zz = norm(mukai, z);
    if (zz % 2 != 0)
        throw InvariantViolation("tilde_g: odd (z,z) in an even lattice");
    const IntVector fb = pairing_functional(mukai, beta);
    const IntVector fz = pairing_functional(mukai, z);
    IntMatrix m = identity_matrix(mukai.rank());
    for (Index i = 0; i < mukai.rank(); ++i)
        m.col(i) += -fb(i) * z + (fz(i) - fb(i) * (zz / 2)) * beta;
    return m;
}

}  // namespace k3n
