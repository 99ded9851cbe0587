#include "k3n/classifier.hpp"
#include "k3n/errors.hpp"
#include "k3n/normal_form.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace k3n;
using namespace k3n::basis;
using namespace k3n::testing;

namespace {

struct Case {
    std::int64_t n, d, b;
};

std::vector<Case> grid(std::int64_t max_n, std::int64_t max_d)
{
    std::vector<Case> out;
    for (std::int64_t n = 2; n <= max_n; ++n)
        for (std::int64_t d = 1; d <= max_d; ++d) {
            if ((n - 1) % (d * d) != 0)
                continue;
            for (std::int64_t b = -d; b <= d; ++b)
                if (std::gcd(b, d) == 1)
                    out.push_back({n, d, b});
        }
    return out;
}

}  // namespace

TEST_SUITE("classifier")
{
    TEST_CASE("canonical residues")
    {
        CHECK(canonical_residue(7, 5) == 2);
        CHECK(canonical_residue(4, 5) == 1);
        CHECK(canonical_residue(-3, 7) == 3);
        CHECK(canonical_residue(5, 1) == 0);
        CHECK(canonical_residue(1, 2) == 1);
    }

    TEST_CASE("construct and classify round trip")
    {
        for (const Case& c : grid(60, 7)) {
            CAPTURE(c.n);
            CAPTURE(c.d);
            CAPTURE(c.b);
            const IntLattice l = standard_lattice(StandardLattice::K3n, c.n);
            const IntVector alpha = construct_alpha(c.n, c.d, c.b);
            CHECK(norm(l, alpha) == 0);
            CHECK(content(alpha) == 1);
            CHECK(divisibility(l, alpha) == c.d);
            const OrbitInvariant inv = classify_isotropic(c.n, alpha);
            CHECK(inv == OrbitInvariant{c.n, c.d, canonical_residue(c.b, c.d)});
        }
    }

    TEST_CASE("frozen classifications")
    {
        CHECK(classify_isotropic(26, construct_alpha(26, 5, 2)) == OrbitInvariant{26, 5, 2});
        CHECK(classify_isotropic(26, construct_alpha(26, 5, 3)) == OrbitInvariant{26, 5, 2});
        CHECK(classify_isotropic(5, unit_vector(23, e(1))) == OrbitInvariant{5, 1, 0});
        CHECK(construct_alpha(5, 2, 1) == [] {
            IntVector a = IntVector::Constant(23, Integer(0));
            a(e(1)) = 2;
            a(f(1)) = -2;
            a(22) = 1;
            return a;
        }());
    }

    TEST_CASE("classification is invariant under reflections in -2 vectors")
    {
        std::mt19937_64 rng(41);
        for (const Case& c : {Case{5, 2, 1}, Case{10, 3, 1}, Case{17, 4, 3}, Case{26, 5, 2}, Case{50, 7, 3}}) {
            const IntLattice l = standard_lattice(StandardLattice::K3n, c.n);
            IntVector alpha = construct_alpha(c.n, c.d, c.b);
            for (int step = 0; step < 8;) {
                IntVector root = IntVector::Constant(23, Integer(0));
                const int i = static_cast<int>(draw(rng, 1, 3));
                root(e(i)) = draw(rng, -2, 2);
                root(f(i)) = draw(rng, -2, 2);
                root(draw(rng, 6, 21)) += draw(rng, -1, 1);
                if (norm(l, root) != -2)
                    continue;
                alpha = reflect(l, root, alpha);
                ++step;
            }
            CHECK(classify_isotropic(c.n, alpha) == OrbitInvariant{c.n, c.d, canonical_residue(c.b, c.d)});
        }
    }

    TEST_CASE("classify rejects bad input")
    {
        CHECK_THROWS_AS(classify_isotropic(5, unit_vector(23, 22)), InputError);
        IntVector twice = IntVector::Constant(23, Integer(0));
        twice(e(1)) = 2;
        CHECK_THROWS_AS(classify_isotropic(5, twice), InputError);
        CHECK_THROWS_AS(classify_isotropic(5, unit_vector(22, 0)), InputError);
        CHECK_THROWS_AS(construct_alpha(6, 2, 1), InputError);
        CHECK_THROWS_AS(construct_alpha(5, 2, 2), InputError);
    }

    TEST_CASE("nu table")
    {
        for (std::int64_t d = 1; d <= 4; ++d)
            CHECK(nu(d) == 1);
        CHECK(nu(5) == 2);
        CHECK(nu(7) == 3);
        CHECK(nu(12) == 2);
        for (std::int64_t d = 1; d <= 40; ++d)
            CHECK(nu(d) == unit_classes(d));
    }

    TEST_CASE("orbit representatives are distinct and complete")
    {
        for (std::int64_t d = 1; d <= 9; ++d) {
            const auto reps = enumerate_orbit_reps(d * d + 1, d);
            CHECK(static_cast<std::int64_t>(reps.size()) == nu(d));
            for (std::size_t i = 0; i < reps.size(); ++i)
                for (std::size_t j = i + 1; j < reps.size(); ++j)
                    CHECK(reps[i].b_star != reps[j].b_star);
        }
    }

    TEST_CASE("brute-force orbit count matches nu")
    {
        for (std::int64_t d = 1; d <= 6; ++d) {
            CAPTURE(d);
            const OrbitCount oc = brute_force_orbit_count(d * d + 1, d, 20, 20);
            CHECK(oc.count == nu(d));
        }
        CHECK(orbit_count_at(2 * 49 + 1, 7, 30, 30) == 3);
    }

    TEST_CASE("gram reduction lands on the degenerate rank-2 form")
    {
        for (const Case& c : grid(60, 7)) {
            const GramReduction r = reduce_gram_to_Lnd(c.n, c.d, c.b);
            CHECK(determinant(r.transform) == 1);
            CHECK(IntMatrix(r.transform * r.gram_in * r.transform.transpose()) == r.gram_out);
            CHECK(r.gram_out == lnd_gram(c.n, c.d));
        }
    }

    TEST_CASE("mukai vectors and the witness construction")
    {
        const IntVector c = int_vector({1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
        const IntVector v = mukai_vector(3, c, -4);
        const MukaiParts parts = mukai_parts(v);
        CHECK(parts.r == 3);
        CHECK(parts.s == -4);
        CHECK(parts.c == c);
        const IntLattice mukai = standard_lattice(StandardLattice::Mukai);
        CHECK(norm(mukai, v) == -4 - 2 * 3 * (-4));

        for (const Case& k : grid(60, 7)) {
            const MukaiSetup m = mukai_example(k.n, k.d, k.b);
            CHECK(m.verified());
            CHECK(norm(mukai, m.v) == 2 * k.n - 2);
            CHECK(floor_mod(Integer(1 - k.b * m.s), Integer(k.d)) == 0);
        }
    }
}
