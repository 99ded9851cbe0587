#include "k3n/verify.hpp"

#include "k3n/classifier.hpp"
#include "k3n/density.hpp"
#include "k3n/errors.hpp"
#include "k3n/io.hpp"
#include "k3n/k3_assoc.hpp"
#include "k3n/normal_form.hpp"
#include "k3n/period.hpp"

#include <functional>
#include <numeric>
#include <random>

namespace k3n {

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

/// Records the first failure seen by a check body.
class Tally {
public:
    void expect(bool ok, const std::string& what)
    {
        ++cases_;
        if (!ok && pass_) {
            pass_ = false;
            first_ = what;
        }
    }
    Outcome outcome() const
    {
        if (pass_)
            return {true, std::to_string(cases_) + " cases"};
        return {false, "first failure: " + first_};
    }

private:
    bool pass_ = true;
    int cases_ = 0;
    std::string first_;
};

void run_check(std::vector<Check>& out, const std::string& name, const std::function<Outcome()>& body)
{
    try {
        const Outcome o = body();
        out.push_back({name, o.pass, o.detail});
    } catch (const std::exception& e) {
        out.push_back({name, false, std::string("exception: ") + e.what()});
    }
}

std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi)
{
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Direct substitution: w lies in span{x, y} iff every minor of the rows
/// x, y, w through a fixed nonzero 2x2 pivot vanishes.
bool in_plane(const Period& p, const IntVector& w)
{
    const Index r = p.lattice.rank();
    auto minor = [&](Index a, Index b) { return p.x(a) * p.y(b) - p.x(b) * p.y(a); };
    for (Index j = 0; j < r; ++j)
        for (Index k = j + 1; k < r; ++k) {
            const QuadScalar mjk = minor(j, k);
            if (mjk.is_zero())
                continue;
            for (Index i = 0; i < r; ++i) {
                const QuadScalar m = QuadScalar(w(i)) * mjk - QuadScalar(w(j)) * minor(i, k) +
                                     QuadScalar(w(k)) * minor(i, j);
                if (!m.is_zero())
                    return false;
            }
            return true;
        }
    return false;
}

IntMatrix random_matrix(std::mt19937_64& rng, Index rows, Index cols, std::int64_t bound)
{
    IntMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j)
            m(i, j) = draw(rng, -bound, bound);
    return m;
}

IntMatrix random_even_symmetric(std::mt19937_64& rng, Index n, std::int64_t bound)
{
    IntMatrix m(n, n);
    for (Index i = 0; i < n; ++i) {
        m(i, i) = 2 * draw(rng, -bound, bound);
        for (Index j = i + 1; j < n; ++j)
            m(i, j) = m(j, i) = draw(rng, -bound, bound);
    }
    return m;
}

IntVector random_combination(std::mt19937_64& rng, const IntMatrix& basis, std::int64_t bound)
{
    IntVector c(basis.cols());
    for (Index i = 0; i < c.size(); ++i)
        c(i) = draw(rng, -bound, bound);
    return basis * c;
}

struct GridCase {
    std::int64_t n, d, b;
};

/// (n, d, b) with d^2 | n-1, d <= 10 and b in [-d, d] a unit mod d.
std::vector<GridCase> grid(std::int64_t max_n)
{
    std::vector<GridCase> out;
    for (std::int64_t n = 2; n <= max_n; ++n)
        for (std::int64_t d = 1; d <= 10; ++d) {
            if ((n - 1) % (d * d) != 0)
                continue;
            for (std::int64_t b = -d; b <= d; ++b)
                if (std::gcd(b, d) == 1)
                    out.push_back({n, d, b});
        }
    return out;
}

// ---------------------------------------------------------------- lattice

void fixture_checks(std::vector<Check>& out, const nlohmann::ordered_json& fixture)
{
    const std::string label = fixture.is_object() ? fixture.value("label", "") : "";
    const std::string prefix = "fixture '" + label + "': ";
    IntMatrix gram;
    try {
        gram = matrix_from_json(fixture.at("gram"));
    } catch (const std::exception& e) {
        out.push_back({prefix + "readable Gram matrix", false, e.what()});
        return;
    }
    IntLattice reference;
    try {
        reference = standard_lattice_from_label(label);
    } catch (const std::exception& e) {
        out.push_back({prefix + "standard label", false, e.what()});
        return;
    }
    bool shaped = gram.rows() == gram.cols();
    bool symmetric_even = shaped && gram == gram.transpose();
    for (Index i = 0; symmetric_even && i < gram.rows(); ++i)
        symmetric_even = gram(i, i) % 2 == 0;
    out.push_back({prefix + "symmetric with even diagonal", symmetric_even, ""});
    if (!symmetric_even)
        return;
    const IntLattice lattice(gram, label);
    out.push_back({prefix + "rank", lattice.rank() == reference.rank(),
                   std::to_string(lattice.rank()) + " vs " + std::to_string(reference.rank())});
    run_check(out, prefix + "signature", [&] {
        const Signature s = signature(lattice);
        const Signature t = signature(reference);
        return Outcome{s == t, "(" + std::to_string(s.positive) + "," + std::to_string(s.negative) + ") vs (" +
                                   std::to_string(t.positive) + "," + std::to_string(t.negative) + ")"};
    });
    run_check(out, prefix + "discriminant group", [&] {
        return Outcome{discriminant_group(lattice) == discriminant_group(reference), ""};
    });
}

std::vector<Check> lattice_suite(Budget budget, std::uint64_t seed, const std::optional<nlohmann::ordered_json>& fixture)
{
    std::vector<Check> out;
    std::mt19937_64 rng(seed ^ 0x1a771ceULL);
    const int trials = budget == Budget::Small ? 20 : 100;
    const Index max_rank = budget == Budget::Small ? 10 : 24;

    struct Expected {
        IntLattice lattice;
        Signature sig;
        std::vector<Integer> disc;
    };
    std::vector<Expected> standard = {
        {standard_lattice(StandardLattice::U), {1, 1}, {}},
        {standard_lattice(StandardLattice::E8Minus), {0, 8}, {}},
        {standard_lattice(StandardLattice::K3), {3, 19}, {}},
        {standard_lattice(StandardLattice::Mukai), {4, 20}, {}},
    };
    for (long long n : {2, 3, 5, 10})
        standard.push_back({standard_lattice(StandardLattice::K3n, n), {3, 20}, {Integer(2 * n - 2)}});
    run_check(out, "standard lattices: signature and discriminant", [&] {
        Tally t;
        for (const auto& e : standard)
            t.expect(signature(e.lattice) == e.sig && discriminant_group(e.lattice) == e.disc, e.lattice.label());
        return t.outcome();
    });

    run_check(out, "SNF reconstruction", [&] {
        Tally t;
        for (int i = 0; i < trials; ++i) {
            const IntMatrix m = random_matrix(rng, draw(rng, 1, max_rank), draw(rng, 1, max_rank), 1000000);
            const auto s = smith_normal_form(m);
            bool chain = true;
            for (std::size_t k = 1; k < s.diag.size(); ++k)
                chain = chain && (s.diag[k - 1] == 0 ? s.diag[k] == 0 : s.diag[k] % s.diag[k - 1] == 0);
            t.expect(IntMatrix(s.left * m * s.right) == s.diagonal_matrix(m.rows(), m.cols()) &&
                         determinant(s.left) == 1 && determinant(s.right) == 1 && chain,
                     "trial " + std::to_string(i));
        }
        return t.outcome();
    });

    run_check(out, "signature additivity", [&] {
        Tally t;
        for (int i = 0; i < trials; ++i) {
            const IntLattice a(random_even_symmetric(rng, draw(rng, 1, max_rank / 2), 1000000));
            const IntLattice b(random_even_symmetric(rng, draw(rng, 1, max_rank / 2), 1000000));
            if (determinant(a.gram()) == 0 || determinant(b.gram()) == 0)
                continue;
            const Signature sa = signature(a), sb = signature(b), ss = signature(direct_sum(a, b));
            t.expect(ss.positive == sa.positive + sb.positive && ss.negative == sa.negative + sb.negative,
                     "trial " + std::to_string(i));
        }
        return t.outcome();
    });

    run_check(out, "saturation idempotence", [&] {
        Tally t;
        for (int i = 0; i < trials; ++i) {
            const Index r = draw(rng, 2, max_rank);
            const IntLattice l(random_even_symmetric(rng, r, 1000000));
            const IntMatrix s = random_matrix(rng, r, draw(rng, 1, r - 1), 1000000);
            const Sublattice once = saturation(l, s);
            t.expect(same_span(saturation(l, once).basis, once.basis) && in_span(once.basis, s.col(0)),
                     "trial " + std::to_string(i));
        }
        return t.outcome();
    });

    run_check(out, "orthogonal complements are saturated", [&] {
        Tally t;
        for (int i = 0; i < trials; ++i) {
            const Index r = draw(rng, 2, max_rank);
            const IntLattice l(random_even_symmetric(rng, r, 1000000));
            const Sublattice c = orthogonal_complement(l, random_matrix(rng, r, draw(rng, 1, r - 1), 1000000));
            if (c.rank() == 0)
                continue;
            t.expect(same_span(saturation(l, c).basis, c.basis), "trial " + std::to_string(i));
        }
        return t.outcome();
    });

    if (fixture)
        fixture_checks(out, *fixture);
    return out;
}

// ------------------------------------------------------------- classifier

std::vector<Check> classifier_suite(Budget budget, std::uint64_t seed)
{
    (void)seed;
    std::vector<Check> out;
    const std::int64_t max_n = budget == Budget::Small ? 50 : 101;
    const auto cases = grid(max_n);

    run_check(out, "construct/classify round trip", [&] {
        Tally t;
        IntLattice lattice;
        std::int64_t lattice_n = 0;
        for (const auto& c : cases) {
            if (lattice_n != c.n) {
                lattice = standard_lattice(StandardLattice::K3n, c.n);
                lattice_n = c.n;
            }
            const IntVector a = construct_alpha(c.n, c.d, c.b);
            const auto inv = classify_isotropic(c.n, a);
            t.expect(norm(lattice, a) == 0 && is_primitive(lattice, a) && inv.d == c.d &&
                         inv.b_star == canonical_residue(c.b, c.d),
                     "(n,d,b) = (" + std::to_string(c.n) + "," + std::to_string(c.d) + "," + std::to_string(c.b) + ")");
        }
        return t.outcome();
    });

    run_check(out, "Gram reduction to L_{n,d}", [&] {
        Tally t;
        for (const auto& c : cases) {
            const auto r = reduce_gram_to_Lnd(c.n, c.d, c.b);
            t.expect(determinant(r.transform) == 1 && r.gram_out == lnd_gram(c.n, c.d),
                     "(n,d,b) = (" + std::to_string(c.n) + "," + std::to_string(c.d) + "," + std::to_string(c.b) + ")");
        }
        return t.outcome();
    });

    run_check(out, "Mukai witness", [&] {
        Tally t;
        for (const auto& c : cases)
            t.expect(mukai_example(c.n, c.d, c.b).verified(),
                     "(n,d,b) = (" + std::to_string(c.n) + "," + std::to_string(c.d) + "," + std::to_string(c.b) + ")");
        return t.outcome();
    });

    run_check(out, "nu table", [&] {
        Tally t;
        const std::vector<std::pair<std::int64_t, std::int64_t>> table = {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 2},
                                                                          {6, 1}, {7, 3}, {8, 2}, {12, 2}};
        for (auto [d, v] : table)
            t.expect(nu(d) == v, "nu(" + std::to_string(d) + ")");
        for (std::int64_t d = 1; d <= 10; ++d)
            t.expect(static_cast<std::int64_t>(enumerate_orbit_reps(d * d + 1, d).size()) == nu(d),
                     "representatives for d = " + std::to_string(d));
        return t.outcome();
    });

    run_check(out, "orbit count equals nu", [&] {
        Tally t;
        const std::int64_t max_d = budget == Budget::Small ? 6 : 8;
        for (std::int64_t d = 1; d <= max_d; ++d)
            t.expect(brute_force_orbit_count(d * d + 1, d, 20, 20).count == nu(d), "d = " + std::to_string(d));
        return t.outcome();
    });
    return out;
}

// --------------------------------------------------------------------- k3

std::vector<Check> k3_suite(Budget budget, std::uint64_t seed)
{
    std::vector<Check> out;
    std::mt19937_64 rng(seed ^ 0x6b33ULL);
    const std::int64_t max_n = budget == Budget::Small ? 12 : 50;
    const IntLattice mukai = standard_lattice(StandardLattice::Mukai);

    run_check(out, "associated K3 invariants and isometry", [&] {
        Tally t;
        for (std::int64_t n = 2; n <= max_n; ++n)
            for (std::int64_t d = 1; d * d <= n - 1; ++d) {
                if ((n - 1) % (d * d) != 0)
                    continue;
                for (const auto& rep : enumerate_orbit_reps(n, d)) {
                    const auto a = associate_k3(n, construct_alpha(n, d, rep.b_star));
                    t.expect(a.verified() && a.d == d,
                             "(n,d,b) = (" + std::to_string(n) + "," + std::to_string(d) + "," +
                                 std::to_string(rep.b_star) + ")");
                }
            }
        return t.outcome();
    });

    run_check(out, "gamma pairings", [&] {
        Tally t;
        for (std::int64_t n : {2, 5, 10, 26}) {
            const auto emb = standard_embedding(n);
            for (const auto& rep : enumerate_orbit_reps(n, n == 26 ? 5 : (n == 10 ? 3 : (n == 5 ? 2 : 1)))) {
                const IntVector beta = emb.matrix * construct_alpha(n, rep.d, rep.b_star);
                const IntVector gamma = find_gamma(beta);
                t.expect(pairing(mukai, gamma, beta) == -1 && norm(mukai, gamma) == 0, "n = " + std::to_string(n));
            }
        }
        return t.outcome();
    });

    run_check(out, "split sequence maps", [&] {
        Tally t;
        const auto emb = standard_embedding(5);
        const IntVector beta = emb.matrix * construct_alpha(5, 2, 1);
        const IntVector gamma = find_gamma(beta);
        const Sublattice perp = orthogonal_complement(mukai, IntMatrix(beta));
        t.expect(sigma_gamma(beta, gamma, beta) == beta, "sigma(beta) = beta");
        for (int i = 0; i < 50; ++i) {
            const IntVector y = random_combination(rng, perp.basis, 5);
            const IntVector image = tau_tilde(beta, gamma, y);
            const IntVector y2 = random_combination(rng, perp.basis, 5);
            const IntVector image2 = tau_tilde(beta, gamma, y2);
            t.expect(tau_tilde(beta, gamma, IntVector(y + draw(rng, -9, 9) * beta)) == image, "lift independence");
            t.expect(pairing(mukai, image, gamma) == 0 && pairing(mukai, image, beta) == 0, "image in {beta,gamma}^perp");
            t.expect(pairing(mukai, image, image2) == pairing(mukai, y, y2), "isometric");
        }
        return t.outcome();
    });

    run_check(out, "sha kernel order 2n-2", [&] {
        Tally t;
        for (std::int64_t n = 2; n <= 12; ++n)
            t.expect(sha_kernel_divisors(n, 1) == std::vector<Integer>{Integer(2 * n - 2)}, "n = " + std::to_string(n));
        return t.outcome();
    });
    return out;
}

// ----------------------------------------------------------------- period

std::vector<Check> period_suite(Budget budget, std::uint64_t seed)
{
    std::vector<Check> out;
    std::mt19937_64 rng(seed ^ 0x9e410dULL);
    const int periods = budget == Budget::Small ? 4 : 20;
    const int zs = budget == Budget::Small ? 50 : 1000;
    const IntLattice mukai = standard_lattice(StandardLattice::Mukai);
    const IntLattice k3 = standard_lattice(StandardLattice::K3);

    run_check(out, "sampled K3 periods are valid and non-special", [&] {
        Tally t;
        for (int i = 0; i < 3; ++i) {
            const Period p = sample_nonspecial_period(k3, Integer(2), rng());
            t.expect(!is_special(p).special, "sample " + std::to_string(i));
        }
        return t.outcome();
    });

    run_check(out, "rational periods are special with a witness", [&] {
        Tally t;
        for (int i = 0; i < 3; ++i) {
            const Period rational = sample_period(k3, Integer(0), rng());
            const auto s = is_special(rational);
            t.expect(s.special && s.witness && !is_zero(*s.witness) && in_plane(rational, *s.witness),
                     "witness in plane, sample " + std::to_string(i));
        }
        return t.outcome();
    });

    run_check(out, "rank-3 lattice admits no non-special period", [&] {
        const IntLattice small = direct_sum(standard_lattice(StandardLattice::U), rank_one(Integer(2)), "U+<2>");
        try {
            sample_nonspecial_period(small, Integer(2), seed, 8);
        } catch (const BudgetExhausted&) {
            return Outcome{true, "budget exhausted as expected"};
        }
        return Outcome{false, "found a non-special period"};
    });

    const Fibration fib = make_fibration(5, construct_alpha(5, 2, 1));
    const Sublattice alpha_perp = orthogonal_complement(fib.k3n, IntMatrix(fib.alpha));

    run_check(out, "fibration section and cocycle", [&] {
        Tally t;
        for (int i = 0; i < periods; ++i) {
            const Period q = sample_period(fib.q_alpha.lattice, Integer(2), rng());
            const Period lifted = tau_section(fib, fib.gamma, q);
            t.expect(q_project(fib, lifted).x == q.x && q_project(fib, lifted).y == q.y, "q o tau = id");
            const IntVector z = random_combination(rng, alpha_perp.basis, 3);
            const Period moved = g_act(fib, z, lifted);
            t.expect(same_line(q_project(fib, moved), q), "q invariant under g");
            t.expect(same_line(moved, tau_section(fib, cocycle_delta(fib, fib.gamma, z), q)), "cocycle identity");
            const IntVector z2 = random_combination(rng, alpha_perp.basis, 3);
            t.expect(same_line(g_act(fib, z, g_act(fib, z2, lifted)), g_act(fib, IntVector(z + z2), lifted)),
                     "g homomorphism");
        }
        return t.outcome();
    });

    run_check(out, "tilde_g algebra", [&] {
        Tally t;
        IntMatrix pair(mukai.rank(), 2);
        pair << fib.beta, fib.embedding.v;
        const Sublattice perp = orthogonal_complement(mukai, pair);
        const Sublattice beta_perp = orthogonal_complement(mukai, IntMatrix(fib.beta));
        for (int i = 0; i < zs; ++i) {
            const IntVector z1 = random_combination(rng, perp.basis, 3);
            const IntVector z2 = random_combination(rng, perp.basis, 3);
            const IntMatrix g1 = tilde_g(fib.beta, fib.embedding.v, z1);
            const IntMatrix g2 = tilde_g(fib.beta, fib.embedding.v, z2);
            t.expect(IntMatrix(g1.transpose() * mukai.gram() * g1) == mukai.gram(), "isometry");
            t.expect(IntVector(g1 * fib.beta) == fib.beta && IntVector(g1 * fib.embedding.v) == fib.embedding.v,
                     "fixes beta and v");
            const IntVector x = random_combination(rng, beta_perp.basis, 5);
            t.expect(in_span(IntMatrix(fib.beta), IntVector(g1 * x - x)), "trivial modulo beta");
            t.expect(IntMatrix(g1 * g2) == tilde_g(fib.beta, fib.embedding.v, IntVector(z1 + z2)), "homomorphism");
        }
        return t.outcome();
    });

    run_check(out, "density certificates", [&] {
        Tally t;
        const int samples = budget == Budget::Small ? 1 : 5;
        const int targets = budget == Budget::Small ? 2 : 10;
        for (int i = 0; i < samples; ++i) {
            const Period q = sample_nonspecial_period(fib.q_alpha.lattice, Integer(2), rng());
            for (int j = 0; j < targets; ++j) {
                const std::complex<double> target(static_cast<double>(draw(rng, 0, 1000)) / 1000,
                                                  static_cast<double>(draw(rng, 0, 1000)) / 1000);
                const auto cert = density_approximate(q, target, 1e-3);
                const int bits = std::min(1024, std::max(200, 2 * cert.precision_bits));
                t.expect(verify_certificate(q, cert, bits).pass(), "sample " + std::to_string(i));
            }
        }
        return t.outcome();
    });
    return out;
}

}  // namespace

std::vector<Suite> parse_suites(const std::string& name)
{
    if (name == "lattice")
        return {Suite::Lattice};
    if (name == "classifier")
        return {Suite::Classifier};
    if (name == "k3")
        return {Suite::K3};
    if (name == "period")
        return {Suite::Period};
    if (name == "all")
        return {Suite::Lattice, Suite::Classifier, Suite::K3, Suite::Period};
    throw InputError("unknown suite '" + name + "' (expected lattice, classifier, k3, period or all)");
}

Budget parse_budget(const std::string& name)
{
    if (name == "small")
        return Budget::Small;
    if (name == "full")
        return Budget::Full;
    throw InputError("unknown budget '" + name + "' (expected small or full)");
}

std::string suite_name(Suite s)
{
    switch (s) {
    case Suite::Lattice:
        return "lattice";
    case Suite::Classifier:
        return "classifier";
    case Suite::K3:
        return "k3";
    case Suite::Period:
        return "period";
    }
    return "";
}

std::vector<SuiteResult> run_verification(const std::vector<Suite>& suites, Budget budget, std::uint64_t seed,
                                          const std::optional<nlohmann::ordered_json>& fixture)
{
    std::vector<SuiteResult> results;
    for (Suite s : suites) {
        SuiteResult r{suite_name(s), {}};
        switch (s) {
        case Suite::Lattice:
            r.checks = lattice_suite(budget, seed, fixture);
            break;
        case Suite::Classifier:
            r.checks = classifier_suite(budget, seed);
            break;
        case Suite::K3:
            r.checks = k3_suite(budget, seed);
            break;
        case Suite::Period:
            r.checks = period_suite(budget, seed);
            break;
        }
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace k3n
