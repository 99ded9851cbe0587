#include "k3n/classifier.hpp"

#include "k3n/errors.hpp"

#include <numeric>
#include <string>

namespace k3n {

namespace {

std::int64_t to_i64(const Integer& x)
{
    return x.convert_to<long long>();
}

void require_admissible_d(std::int64_t n, std::int64_t d, const char* where)
{
    if (n < 2)
        throw InputError(std::string(where) + ": n must be >= 2, got " + std::to_string(n));
    if (d < 1)
        throw InputError(std::string(where) + ": d must be positive, got " + std::to_string(d));
    if ((n - 1) % (d * d) != 0)
        throw InputError(std::string(where) + ": d^2 = " + std::to_string(d * d) + " does not divide n-1 = " +
                         std::to_string(n - 1));
}

void require_unit(std::int64_t b, std::int64_t d, const char* where)
{
    if (std::gcd(b, d) != 1)
        throw InputError(std::string(where) + ": gcd(b, d) = gcd(" + std::to_string(b) + ", " + std::to_string(d) +
                         ") != 1");
}

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t i)
    {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

std::int64_t canonical_residue(std::int64_t b, std::int64_t d)
{
    if (d <= 1)
        return 0;
    const std::int64_t r = ((b % d) + d) % d;
    return std::min(r, d - r);
}

OrbitInvariant classify_isotropic(std::int64_t n, const IntVector& alpha)
{
    const IntLattice lattice = standard_lattice(StandardLattice::K3n, n);
    if (alpha.size() != lattice.rank())
        throw InputError("classify: alpha must have " + std::to_string(lattice.rank()) + " coordinates, got " +
                         std::to_string(alpha.size()));
    if (is_zero(alpha))
        throw InputError("classify: alpha is zero");
    const Integer self = norm(lattice, alpha);
    if (self != 0)
        throw InputError("classify: alpha is not isotropic, (alpha,alpha) = " + self.str());
    if (!is_primitive(lattice, alpha))
        throw InputError("classify: alpha is not primitive, content " + content(alpha).str());

    const std::int64_t d = to_i64(divisibility(lattice, alpha));
    if ((n - 1) % (d * d) != 0)
        throw InvariantViolation("classify: divisibility " + std::to_string(d) + " has d^2 not dividing n-1 = " +
                                 std::to_string(n - 1));
    const std::int64_t b = to_i64(floor_mod(alpha(basis::k3n_delta), Integer(d)));
    if (d > 1 && std::gcd(b, d) != 1)
        throw InvariantViolation("classify: delta coefficient " + std::to_string(b) + " is not a unit modulo " +
                                 std::to_string(d));
    return {n, d, canonical_residue(b, d)};
}

IntVector construct_alpha(std::int64_t n, std::int64_t d, std::int64_t b)
{
    require_admissible_d(n, d, "construct_alpha");
    require_unit(b, d, "construct_alpha");
    // xi = e1 - ((n-1) b^2 / d^2) f1, so alpha = d e1 - ((n-1) b^2 / d) f1 + b delta.
    IntVector alpha = IntVector::Constant(basis::k3n_rank, Integer(0));
    alpha(basis::e(1)) = d;
    alpha(basis::f(1)) = -(Integer(n - 1) * Integer(b) * Integer(b)) / Integer(d);
    alpha(basis::k3n_delta) = b;
    return alpha;
}

std::int64_t nu(std::int64_t d)
{
    if (d < 1)
        throw InputError("nu: d must be positive, got " + std::to_string(d));
    if (d <= 2)
        return 1;
    std::int64_t phi = d;
    std::int64_t m = d;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0)
            continue;
        while (m % p == 0)
            m /= p;
        phi -= phi / p;
    }
    if (m > 1)
        phi -= phi / m;
    return phi / 2;
}

std::vector<OrbitInvariant> enumerate_orbit_reps(std::int64_t n, std::int64_t d)
{
    require_admissible_d(n, d, "enumerate_orbit_reps");
    std::vector<OrbitInvariant> reps;
    if (d == 1) {
        reps.push_back({n, 1, 0});
        return reps;
    }
    for (std::int64_t b = 1; 2 * b <= d; ++b)
        if (std::gcd(b, d) == 1)
            reps.push_back({n, d, b});
    return reps;
}

std::int64_t orbit_count_at(std::int64_t n, std::int64_t d, std::int64_t y_range, std::int64_t c_range)
{
    require_admissible_d(n, d, "brute_force_orbit_count");
    if (y_range < 1 || c_range < 1)
        throw InputError("brute_force_orbit_count: ranges must be positive");
    const std::int64_t k = (2 * n - 2) / (d * d);
    const std::int64_t side = 2 * y_range + 1;
    auto slot = [&](std::int64_t x, std::int64_t y) {
        return static_cast<std::size_t>((x + y_range) * side + (y + y_range));
    };
    auto admissible = [&](std::int64_t x, std::int64_t y) {
        if (x < -y_range || x > y_range || y < -y_range || y > y_range)
            return false;
        return k * x * x == 2 * n - 2 && std::gcd(x, y) == 1;
    };

    DisjointSets sets(static_cast<std::size_t>(side * side));
    std::vector<std::size_t> members;
    for (std::int64_t x = -y_range; x <= y_range; ++x)
        for (std::int64_t y = -y_range; y <= y_range; ++y) {
            if (!admissible(x, y))
                continue;
            members.push_back(slot(x, y));
            for (int sx : {-1, 1})
                for (int sy : {-1, 1})
                    for (std::int64_t c = -c_range; c <= c_range; ++c) {
                        const std::int64_t x2 = sx * x;
                        const std::int64_t y2 = c * x + sy * y;
                        if (admissible(x2, y2))
                            sets.unite(slot(x, y), slot(x2, y2));
                    }
        }
    std::vector<std::size_t> roots;
    for (auto m : members)
        roots.push_back(sets.find(m));
    std::sort(roots.begin(), roots.end());
    return static_cast<std::int64_t>(std::unique(roots.begin(), roots.end()) - roots.begin());
}

OrbitCount brute_force_orbit_count(std::int64_t n, std::int64_t d, std::int64_t y_range, std::int64_t c_range)
{
    constexpr std::int64_t cap = std::int64_t{1} << 12;
    std::int64_t prev = orbit_count_at(n, d, y_range, c_range);
    int doublings = 0;
    while (2 * y_range <= cap && 2 * c_range <= cap) {
        y_range *= 2;
        c_range *= 2;
        ++doublings;
        const std::int64_t next = orbit_count_at(n, d, y_range, c_range);
        if (next == prev)
            return {next, y_range / 2, c_range / 2, doublings};
        prev = next;
    }
    throw BudgetExhausted("brute_force_orbit_count: class count did not stabilize below range 2^12 (last count " +
                          std::to_string(prev) + ")");
}

IntMatrix lnd_gram(std::int64_t n, std::int64_t d)
{
    require_admissible_d(n, d, "lnd_gram");
    IntMatrix g = IntMatrix::Constant(2, 2, Integer(0));
    g(0, 0) = (2 * n - 2) / (d * d);
    return g;
}

GramReduction reduce_gram_to_Lnd(std::int64_t n, std::int64_t d, std::int64_t b)
{
    require_admissible_d(n, d, "reduce_gram_to_Lnd");
    require_unit(b, d, "reduce_gram_to_Lnd");
    const Integer k = (2 * n - 2) / (d * d);
    GramReduction out;
    out.gram_in.resize(2, 2);
    out.gram_in << k * d * d, -k * b * d, -k * b * d, k * b * b;
    // d x + (-b) y = 1
    const auto eg = extended_gcd(Integer(d), Integer(-b));
    out.transform.resize(2, 2);
    out.transform << eg.x, eg.y, Integer(b), Integer(d);
    out.gram_out = out.transform * out.gram_in * out.transform.transpose();
    return out;
}

IntVector mukai_vector(const Integer& r, const IntVector& c, const Integer& s)
{
    if (c.size() != basis::k3_rank)
        throw InputError("mukai_vector: c must have 22 coordinates");
    IntVector x(basis::mukai_rank);
    x.head(6) = c.head(6);
    x(basis::e(4)) = r;
    x(basis::f(4)) = s;
    x.tail(16) = c.tail(16);
    return x;
}

MukaiParts mukai_parts(const IntVector& x)
{
    if (x.size() != basis::mukai_rank)
        throw InputError("mukai_parts: expected 24 coordinates");
    IntVector c(basis::k3_rank);
    c.head(6) = x.head(6);
    c.tail(16) = x.tail(16);
    return {x(basis::e(4)), c, x(basis::f(4))};
}

MukaiSetup mukai_example(std::int64_t n, std::int64_t d, std::int64_t b)
{
    require_admissible_d(n, d, "mukai_example");
    require_unit(b, d, "mukai_example");
    const IntLattice mukai = standard_lattice(StandardLattice::Mukai);

    MukaiSetup m;
    m.n = n;
    m.d = d;
    m.b = b;
    m.s = d == 1 ? Integer(1) : mod_inverse(Integer(b), Integer(d));
    m.lambda = IntVector::Constant(basis::k3_rank, Integer(0));
    m.lambda(basis::e(1)) = 1;
    m.lambda(basis::f(1)) = -(n - 1) / (d * d);
    m.v = mukai_vector(0, Integer(d) * m.lambda, m.s);
    m.alpha = mukai_vector(0, IntVector::Constant(basis::k3_rank, Integer(0)), 1);
    m.v_perp = orthogonal_complement(mukai, IntMatrix(m.v));

    auto& checks = m.verification;
    const Integer vv = norm(mukai, m.v);
    checks.push_back({"(v,v) = 2n-2", vv == 2 * n - 2, "(v,v) = " + vv.str()});
    checks.push_back({"v primitive", content(m.v) == 1, "content " + content(m.v).str()});
    checks.push_back({"gcd(d,s) = 1", gcd(Integer(d), m.s) == 1, "s = " + m.s.str()});
    checks.push_back({"alpha in v_perp", pairing(mukai, m.alpha, m.v) == 0, ""});

    Integer div = 0;
    bool r_divisible = true;
    for (Index c = 0; c < m.v_perp.rank(); ++c) {
        const IntVector w = m.v_perp.basis.col(c);
        div = gcd(div, pairing(mukai, m.alpha, w));
        if (mukai_parts(w).r % d != 0)
            r_divisible = false;
    }
    checks.push_back({"div(alpha on v_perp) = d", div == d, "divisibility " + div.str()});
    checks.push_back({"d | r on v_perp", r_divisible, ""});

    const IntVector shifted = m.alpha - Integer(b) * m.v;
    checks.push_back({"(alpha - b v)/d integral", content(shifted) % d == 0, "content " + content(shifted).str()});
    const Integer one_minus_bs = 1 - Integer(b) * m.s;
    checks.push_back({"d | 1 - bs", one_minus_bs % d == 0, "1 - bs = " + one_minus_bs.str()});
    return m;
}

}  // namespace k3n
