#include "k3n/errors.hpp"
#include "k3n/normal_form.hpp"
#include "k3n/sublattice.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace k3n;
using namespace k3n::basis;
using namespace k3n::testing;

namespace {

bool is_saturated_basis(const IntMatrix& basis)
{
    for (const Integer& d : smith_normal_form(basis).diag)
        if (d != 1)
            return false;
    return true;
}

}  // namespace

TEST_SUITE("sublattice")
{
    TEST_CASE("orthogonal complements are saturated and orthogonal")
    {
        const IntLattice k3 = standard_lattice(StandardLattice::K3);
        std::mt19937_64 rng(31);
        for (int trial = 0; trial < 25; ++trial) {
            const Index k = draw(rng, 1, 4);
            const IntMatrix cols = random_matrix(rng, 22, k, 6);
            if (exact_rank(cast_matrix<Rational>(cols)) < k)
                continue;
            const Sublattice perp = orthogonal_complement(k3, cols);
            CHECK(perp.saturated);
            CHECK(perp.basis.cols() == 22 - k);
            CHECK(is_saturated_basis(perp.basis));
            const IntMatrix cross = cols.transpose() * k3.gram() * perp.basis;
            CHECK(is_zero(IntVector(cross.reshaped())));
        }
    }

    TEST_CASE("saturation contains the input and is idempotent")
    {
        const IntLattice mukai = standard_lattice(StandardLattice::Mukai);
        std::mt19937_64 rng(32);
        for (int trial = 0; trial < 25; ++trial) {
            IntMatrix cols = random_matrix(rng, 24, draw(rng, 1, 5), 8);
            cols.col(0) *= Integer(draw(rng, 2, 6));
            const Sublattice sat = saturation(mukai, cols);
            CHECK(is_saturated_basis(sat.basis));
            for (Index c = 0; c < cols.cols(); ++c)
                CHECK(in_span(sat.basis, IntVector(cols.col(c))));
            CHECK(same_span(saturation(mukai, sat).basis, sat.basis));
        }
    }

    TEST_CASE("make_sublattice rejects dependent columns")
    {
        IntMatrix cols(3, 2);
        cols << 1, 2, 2, 4, 3, 6;
        CHECK_THROWS(make_sublattice(cols));
    }

    TEST_CASE("left inverse of a saturated basis")
    {
        const IntLattice k3 = standard_lattice(StandardLattice::K3);
        const Sublattice perp = orthogonal_complement(k3, IntMatrix(unit_vector(22, e(1))));
        const IntMatrix p = left_inverse(perp.basis);
        CHECK(IntMatrix(p * perp.basis) == identity_matrix(perp.basis.cols()));

        IntMatrix doubled(3, 1);
        doubled << 2, 0, 0;
        CHECK_THROWS_AS(left_inverse(doubled), InputError);
    }

    TEST_CASE("quotient by an isotropic vector of a unimodular lattice")
    {
        const IntLattice mukai = standard_lattice(StandardLattice::Mukai);
        std::mt19937_64 rng(33);
        // Isotropic vectors: images of f1 under random reflections in +-2 vectors.
        for (int trial = 0; trial < 10; ++trial) {
            IntVector x = unit_vector(24, f(1));
            for (int step = 0; step < 6;) {
                IntVector root = IntVector::Constant(24, Integer(0));
                const int i = static_cast<int>(draw(rng, 1, 4));
                root(e(i)) = draw(rng, -2, 2);
                root(f(i)) = draw(rng, -2, 2);
                root(draw(rng, 8, 23)) += draw(rng, -1, 1);
                const Integer n = norm(mukai, root);
                if (n != 2 && n != -2)
                    continue;
                x = reflect(mukai, root, x);
                ++step;
            }
            REQUIRE(norm(mukai, x) == 0);
            const Sublattice perp = orthogonal_complement(mukai, IntMatrix(x));
            const IsotropicQuotient q = quotient_mod_isotropic(mukai, x, perp);
            CHECK(q.lattice.rank() == 22);
            CHECK(signature(q.lattice) == Signature{3, 19});
            CHECK(discriminant_group(q.lattice).empty());
            CHECK(IntMatrix(q.projection * q.section) == identity_matrix(22));
            CHECK(IntMatrix(q.section.transpose() * mukai.gram() * q.section) == q.lattice.gram());
            CHECK(is_zero(q.project(x)));
            const IntVector y = random_combination(rng, perp.basis, 4);
            CHECK(q.project(IntVector(y + Integer(draw(rng, -9, 9)) * x)) == q.project(y));
        }
    }

    TEST_CASE("quotient group orders")
    {
        const IntLattice u = standard_lattice(StandardLattice::U);
        IntMatrix a(2, 1), b(2, 1);
        a << 2, 0;
        b << 0, 3;
        const auto ord = quotient_group_order(u, a, b);
        // Z/2 + Z/3 is cyclic of order 6
        REQUIRE(ord.size() == 1);
        CHECK(ord[0] == 6);
        const auto free = quotient_group_order(u, a, IntMatrix(2, 0));
        REQUIRE(free.size() == 2);
        CHECK(free[0] == 2);
        CHECK(free[1] == 0);
    }
}
