#include "k3n/normal_form.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace k3n;
using namespace k3n::testing;

TEST_SUITE("normal_form")
{
    TEST_CASE("determinant agrees with cofactor expansion")
    {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 60; ++trial) {
            const Index n = draw(rng, 1, 6);
            const IntMatrix m = random_matrix(rng, n, n, 9);
            CHECK(determinant(m) == abs(cofactor_det(m)));
        }
        CHECK(determinant(identity_matrix(0)) == 1);
    }

    TEST_CASE("smith form reconstructs and matches determinantal divisors")
    {
        std::mt19937_64 rng(12);
        for (int trial = 0; trial < 40; ++trial) {
            const Index rows = draw(rng, 1, 4);
            const Index cols = draw(rng, 1, 4);
            IntMatrix m = random_matrix(rng, rows, cols, 12);
            if (trial % 5 == 0 && cols > 1)
                m.col(cols - 1) = 3 * m.col(0);
            const SmithForm s = smith_normal_form(m);
            CHECK(IntMatrix(s.left * m * s.right) == s.diagonal_matrix(rows, cols));
            CHECK(determinant(s.left) == 1);
            CHECK(determinant(s.right) == 1);
            for (std::size_t i = 1; i < s.diag.size(); ++i)
                if (s.diag[i - 1] != 0)
                    CHECK(s.diag[i] % s.diag[i - 1] == 0);

            const auto oracle = determinantal_divisors(m);
            for (std::size_t i = 0; i < s.diag.size(); ++i)
                CHECK(s.diag[i] == (i < oracle.size() ? oracle[i] : Integer(0)));
        }
    }

    TEST_CASE("smith form of a known matrix")
    {
        IntMatrix m(3, 3);
        m << 2, 4, 4, -6, 6, 12, 10, -4, -16;
        const auto diag = smith_normal_form(m).diag;
        REQUIRE(diag.size() == 3);
        CHECK(diag[0] == 2);
        CHECK(diag[1] == 6);
        CHECK(diag[2] == 12);
    }

    TEST_CASE("column echelon transform is unimodular")
    {
        std::mt19937_64 rng(13);
        for (int trial = 0; trial < 40; ++trial) {
            const IntMatrix a = random_matrix(rng, draw(rng, 1, 5), draw(rng, 1, 7), 20);
            const ColumnEchelon e = column_echelon(a);
            CHECK(IntMatrix(a * e.transform) == e.reduced);
            CHECK(IntMatrix(e.transform * e.inverse) == identity_matrix(a.cols()));
            for (Index c = e.rank; c < a.cols(); ++c)
                CHECK(is_zero(IntVector(e.reduced.col(c))));
        }
    }

    TEST_CASE("hermite basis is canonical")
    {
        std::mt19937_64 rng(14);
        for (int trial = 0; trial < 30; ++trial) {
            const IntMatrix g = random_matrix(rng, 4, 3, 10);
            IntMatrix u = identity_matrix(3);
            u(0, 1) = draw(rng, -5, 5);
            u(2, 0) = draw(rng, -5, 5);
            CHECK(hermite_basis(g) == hermite_basis(IntMatrix(g * u)));
        }
    }

    TEST_CASE("integer kernel is annihilated, saturated and of the right rank")
    {
        std::mt19937_64 rng(15);
        for (int trial = 0; trial < 40; ++trial) {
            const Index rows = draw(rng, 1, 4);
            const Index cols = draw(rng, rows, 7);
            const IntMatrix a = random_matrix(rng, rows, cols, 15);
            const IntMatrix k = integer_kernel(a);
            CHECK(is_zero(IntVector((a * k).reshaped())));
            CHECK(k.cols() == cols - exact_rank(cast_matrix<Rational>(a)));
            if (k.cols() > 0)
                for (const Integer& d : smith_normal_form(k).diag)
                    CHECK(d == 1);
        }
    }
}
