#include "k3n/classifier.hpp"
#include "k3n/errors.hpp"
#include "k3n/io.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace k3n;
using namespace k3n::testing;

TEST_SUITE("io")
{
    TEST_CASE("integers are decimal strings and big values survive")
    {
        const Integer big("-123456789012345678901234567890");
        CHECK(integer_to_json(big) == Json("-123456789012345678901234567890"));
        CHECK(integer_from_json(integer_to_json(big)) == big);
        CHECK(integer_from_json(Json(42)) == 42);
        CHECK(integer_from_json(Json("+7")) == 7);
        CHECK_THROWS_AS(integer_from_json(Json("12a")), InputError);
        CHECK_THROWS_AS(integer_from_json(Json("")), InputError);
        CHECK_THROWS_AS(integer_from_json(Json(1.5)), InputError);
    }

    TEST_CASE("matrices and lattices round trip")
    {
        std::mt19937_64 rng(91);
        const IntMatrix m = random_matrix(rng, 3, 5, 1000000);
        CHECK(matrix_from_json(matrix_to_json(m)) == m);
        CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([["1","2"],["3"]])")), InputError);

        const IntLattice k3n = standard_lattice(StandardLattice::K3n, 4);
        const IntLattice back = lattice_from_json(lattice_to_json(k3n));
        CHECK(back.gram() == k3n.gram());
        CHECK(back.label() == k3n.label());
        CHECK(lattice_from_json(Json("Mukai")).rank() == 24);
        Json wrong = lattice_to_json(k3n);
        wrong["rank"] = 22;
        CHECK_THROWS_AS(lattice_from_json(wrong), InputError);
    }

    TEST_CASE("vector files accept objects and bare arrays")
    {
        const IntVector alpha = construct_alpha(5, 2, 1);
        const IntLattice l = standard_lattice(StandardLattice::K3n, 5);
        const LatticeVectorFile f = lattice_vector_from_json(lattice_vector_to_json(l, alpha));
        CHECK(f.lattice == "K3n(5)");
        CHECK(f.coords == alpha);
        CHECK(lattice_vector_from_json(Json::array({1, "2", -3})).coords == int_vector({1, 2, -3}));
        CHECK_THROWS_AS(lattice_vector_from_json(Json::object()), InputError);
    }

    TEST_CASE("periods round trip exactly")
    {
        const IntLattice k3 = standard_lattice(StandardLattice::K3);
        const Period p = sample_period(k3, Integer(2), 3);
        const Period q = period_from_json(period_to_json(p));
        CHECK(q.x == p.x);
        CHECK(q.y == p.y);
        CHECK(q.field() == 2);
        CHECK_FALSE(period_to_json(p).contains("gram"));

        const Fibration fib = make_fibration(5, construct_alpha(5, 2, 1));
        const Period r = sample_period(fib.q_alpha.lattice, Integer(2), 3);
        const Json jr = period_to_json(r);
        CHECK(jr.contains("gram"));
        CHECK(period_from_json(jr).lattice.gram() == fib.q_alpha.lattice.gram());

        Json broken = period_to_json(p);
        broken["y"] = broken["x"];
        CHECK_THROWS_AS(period_from_json(broken), InputError);
        Json zero_den = period_to_json(p);
        zero_den["x"][0][1] = "0";
        CHECK_THROWS_AS(period_from_json(zero_den), InputError);
    }

    TEST_CASE("certificates carry the documented keys")
    {
        DensityCertificate cert;
        cert.coeffs = int_vector({1, -2});
        cert.achieved_error = 1e-4;
        cert.epsilon = 1e-3;
        const Json j = certificate_to_json(cert);
        for (const char* key : {"coeffs", "error", "epsilon", "iterations", "target", "precision_bits", "basis_trace"})
            CHECK(j.contains(key));
        CHECK(j["coeffs"][1] == "-2");
    }

    TEST_CASE("missing and malformed files")
    {
        CHECK_THROWS_AS(read_json_file("/nonexistent/k3n.json"), InputError);
    }
}
