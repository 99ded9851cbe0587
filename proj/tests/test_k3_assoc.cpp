#include "k3n/classifier.hpp"
#include "k3n/errors.hpp"
#include "k3n/k3_assoc.hpp"
#include "k3n/normal_form.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace k3n;
using namespace k3n::testing;

namespace {

std::vector<Integer> ints(std::initializer_list<long long> values)
{
    std::vector<Integer> out;
    for (long long v : values)
        out.emplace_back(v);
    return out;
}

}  // namespace

TEST_SUITE("k3_assoc")
{
    TEST_CASE("standard embedding is a primitive isometry")
    {
        const IntLattice mukai = standard_lattice(StandardLattice::Mukai);
        for (std::int64_t n : {2, 3, 10, 50}) {
            const Embedding emb = standard_embedding(n);
            const IntLattice k3n = standard_lattice(StandardLattice::K3n, n);
            CHECK(IntMatrix(emb.matrix.transpose() * mukai.gram() * emb.matrix) == k3n.gram());
            CHECK(norm(mukai, emb.v) == 2 * n - 2);
            CHECK(is_zero(IntVector(emb.matrix.transpose() * mukai.gram() * emb.v)));
            for (const Integer& d : smith_normal_form(emb.matrix).diag)
                CHECK(d == 1);
            CHECK(emb.matrix(6, 22) == 1);
            CHECK(emb.matrix(7, 22) == n - 1);
        }
    }

    TEST_CASE("reduced model invariants")
    {
        const InvariantReport r = invariant_report(reduced_model(26, 5), reduced_model(26, 5));
        CHECK(r.rank == 21);
        CHECK(r.signature == Signature{2, 19});
        CHECK(r.elementary_divisors == ints({2}));
        CHECK(invariant_report(reduced_model(10, 1), reduced_model(10, 1)).elementary_divisors == ints({18}));
    }

    TEST_CASE("associated K3 lattice over a grid of classes")
    {
        for (std::int64_t n = 2; n <= 17; ++n)
            for (std::int64_t d = 1; d * d <= n - 1; ++d) {
                if ((n - 1) % (d * d) != 0)
                    continue;
                for (std::int64_t b = 1; b <= std::max<std::int64_t>(1, d / 2); ++b) {
                    if (std::gcd(b, d) != 1)
                        continue;
                    CAPTURE(n);
                    CAPTURE(d);
                    CAPTURE(b);
                    const K3Association a = associate_k3(n, construct_alpha(n, d, b));
                    CHECK(a.verified());
                    CHECK(a.d == d);
                    CHECK(a.q_alpha_report.match);
                    CHECK(a.q_alpha_report.signature == Signature{2, 19});
                    CHECK(a.k3_report.match);
                    CHECK(a.k3.lattice.rank() == 22);
                    const IntLattice& k3 = a.k3.lattice;
                    CHECK(norm(k3, a.xi) == (2 * n - 2) / (d * d));
                    CHECK(IntMatrix(a.iota_bar.transpose() * k3.gram() * a.iota_bar) == a.q_alpha.lattice.gram());
                    CHECK(same_span(a.iota_bar, a.xi_perp.basis));
                }
            }
    }

    TEST_CASE("associate rejects non-isotropic input")
    {
        CHECK_THROWS_AS(associate_k3(5, unit_vector(23, 22)), InputError);
    }

    TEST_CASE("gamma pairs to -1 with beta and is isotropic")
    {
        const IntLattice mukai = standard_lattice(StandardLattice::Mukai);
        CHECK(find_gamma(unit_vector(24, 6)) == unit_vector(24, 7));
        std::mt19937_64 rng(51);
        for (int trial = 0; trial < 40; ++trial) {
            const std::int64_t d = draw(rng, 1, 5);
            const std::int64_t n = d * d * draw(rng, 1, 3) + 1;
            std::int64_t b = draw(rng, 1, d);
            while (std::gcd(b, d) != 1)
                ++b;
            const Embedding emb = standard_embedding(n);
            const IntVector beta = emb.matrix * construct_alpha(n, d, b);
            const IntVector gamma = find_gamma(beta);
            CHECK(norm(mukai, gamma) == 0);
            CHECK(pairing(mukai, gamma, beta) == -1);

            const Sublattice perp = orthogonal_complement(mukai, IntMatrix(beta));
            const IntVector x = random_combination(rng, perp.basis, 4);
            const IntVector lifted = tau_tilde(beta, gamma, x);
            CHECK(pairing(mukai, lifted, beta) == 0);
            CHECK(pairing(mukai, lifted, gamma) == 0);
            CHECK(in_span(IntMatrix(beta), IntVector(lifted - x)));
            CHECK(tau_tilde(beta, gamma, IntVector(x + Integer(3) * beta)) == lifted);
            CHECK(sigma_gamma(beta, gamma, x) == IntVector(-pairing(mukai, x, gamma) * beta));
        }
    }

    TEST_CASE("sha kernel is cyclic of order 2n-2")
    {
        for (std::int64_t n = 2; n <= 12; ++n)
            CHECK(sha_kernel_divisors(n, 1) == ints({2 * n - 2}));
        CHECK(sha_kernel_divisors(5, 2) == ints({2}));
    }
}
