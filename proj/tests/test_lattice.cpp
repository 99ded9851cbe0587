#include "k3n/errors.hpp"
#include "k3n/lattice.hpp"
#include "k3n/normal_form.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace k3n;
using namespace k3n::basis;
using namespace k3n::testing;

namespace {

std::vector<Integer> divisors(std::initializer_list<long long> values)
{
    std::vector<Integer> out;
    for (long long v : values)
        out.emplace_back(v);
    return out;
}

}  // namespace

TEST_SUITE("lattice")
{
    TEST_CASE("standard lattices have their documented invariants")
    {
        const IntLattice u = standard_lattice(StandardLattice::U);
        const IntLattice e8 = standard_lattice(StandardLattice::E8Minus);
        const IntLattice k3 = standard_lattice(StandardLattice::K3);
        const IntLattice mukai = standard_lattice(StandardLattice::Mukai);

        CHECK(signature(u) == Signature{1, 1});
        CHECK(signature(e8) == Signature{0, 8});
        CHECK(signature(k3) == Signature{3, 19});
        CHECK(signature(mukai) == Signature{4, 20});
        for (const IntLattice* l : {&u, &e8, &k3, &mukai}) {
            CHECK(discriminant_group(*l).empty());
            CHECK(determinant(l->gram()) == 1);
            for (Index i = 0; i < l->rank(); ++i)
                CHECK(l->gram()(i, i) % 2 == 0);
        }
        CHECK(e8.gram()(0, 0) == -2);
        CHECK(k3.gram()(e(1), f(1)) == -1);

        for (long long n : {2, 3, 5, 10, 26}) {
            const IntLattice k3n = standard_lattice(StandardLattice::K3n, n);
            CHECK(k3n.rank() == 23);
            CHECK(signature(k3n) == Signature{3, 20});
            CHECK(discriminant_group(k3n) == divisors({2 * n - 2}));
            CHECK(k3n.gram()(22, 22) == 2 - 2 * n);
        }
    }

    TEST_CASE("labels round trip and bad labels are rejected")
    {
        CHECK(standard_lattice_from_label("K3n(7)").gram() == standard_lattice(StandardLattice::K3n, 7).gram());
        CHECK(standard_lattice_from_label("Mukai").rank() == 24);
        CHECK_THROWS_AS(standard_lattice_from_label("K3n(1)"), InputError);
        CHECK_THROWS_AS(standard_lattice_from_label("Leech"), InputError);
        CHECK_THROWS_AS(standard_lattice(StandardLattice::K3, 4), InputError);
    }

    TEST_CASE("non-symmetric Gram matrices are rejected")
    {
        IntMatrix g(2, 2);
        g << 0, 1, 2, 0;
        CHECK_THROWS_AS(IntLattice{g}, InputError);
    }

    TEST_CASE("exact signature agrees with floating-point eigenvalues")
    {
        std::mt19937_64 rng(21);
        for (int trial = 0; trial < 60; ++trial) {
            const IntMatrix g = random_symmetric(rng, draw(rng, 1, 8), 6);
            const Inertia in = inertia(g);
            if (in.null != 0)
                continue;
            const Signature s = float_signature(g);
            CHECK(in.positive == s.positive);
            CHECK(in.negative == s.negative);
        }
    }

    TEST_CASE("congruence diagonalization")
    {
        std::mt19937_64 rng(22);
        for (int trial = 0; trial < 30; ++trial) {
            const IntMatrix g = random_symmetric(rng, draw(rng, 1, 6), 8);
            const CongruenceDiagonalization cd = diagonalize(g);
            const RatMatrix d = cd.basis.transpose() * cast_matrix<Rational>(g) * cd.basis;
            for (Index i = 0; i < d.rows(); ++i)
                for (Index j = 0; j < d.cols(); ++j)
                    CHECK(d(i, j) == (i == j ? cd.diagonal[static_cast<std::size_t>(i)] : Rational(0)));
        }
    }

    TEST_CASE("divisibility is the gcd of the pairing functional")
    {
        const IntLattice k3n = standard_lattice(StandardLattice::K3n, 10);
        std::mt19937_64 rng(23);
        for (int trial = 0; trial < 50; ++trial) {
            const IntVector x = random_vector(rng, 23, 7);
            if (is_zero(x))
                continue;
            Integer g = 0;
            for (Index j = 0; j < 23; ++j)
                g = gcd(g, pairing(k3n, x, unit_vector(23, j)));
            CHECK(divisibility(k3n, x) == g);
        }
        CHECK(divisibility(k3n, unit_vector(23, 22)) == 18);
        CHECK(divisibility(k3n, unit_vector(23, e(1))) == 1);
    }

    TEST_CASE("reflections are isometric involutions")
    {
        const IntLattice k3 = standard_lattice(StandardLattice::K3);
        const IntVector root = unit_vector(22, 6);  // an E8 simple root, norm -2
        const IntMatrix r = reflection_matrix(k3, root);
        CHECK(IntMatrix(r.transpose() * k3.gram() * r) == k3.gram());
        CHECK(IntMatrix(r * r) == identity_matrix(22));
        CHECK(IntVector(r * root) == IntVector(-root));
        std::mt19937_64 rng(24);
        const IntVector x = random_vector(rng, 22, 5);
        CHECK(reflect(k3, root, x) == IntVector(r * x));
    }

    TEST_CASE("direct sums add signatures and multiply discriminants")
    {
        std::mt19937_64 rng(25);
        for (int trial = 0; trial < 20; ++trial) {
            const IntLattice a(random_symmetric(rng, draw(rng, 1, 4), 5));
            const IntLattice b(random_symmetric(rng, draw(rng, 1, 4), 5));
            if (inertia(a.gram()).null != 0 || inertia(b.gram()).null != 0)
                continue;
            const IntLattice s = direct_sum(a, b);
            CHECK(signature(s).positive == signature(a).positive + signature(b).positive);
            CHECK(signature(s).negative == signature(a).negative + signature(b).negative);
            CHECK(determinant(s.gram()) == determinant(a.gram()) * determinant(b.gram()));
        }
    }
}
