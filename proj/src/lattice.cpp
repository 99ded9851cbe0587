#include "k3n/lattice.hpp"

#include "k3n/errors.hpp"
#include "k3n/normal_form.hpp"

#include <regex>
#include <utility>

namespace k3n {

IntLattice::IntLattice(IntMatrix gram, std::string label)
    : gram_(std::move(gram)), label_(std::move(label))
{
    if (gram_.rows() != gram_.cols())
        throw InputError("IntLattice: Gram matrix is " + std::to_string(gram_.rows()) + "x" +
                         std::to_string(gram_.cols()) + ", not square");
    for (Index i = 0; i < gram_.rows(); ++i) {
        if (floor_mod(gram_(i, i), Integer(2)) != 0)
            throw InputError("IntLattice: diagonal entry " + std::to_string(i) + " is odd");
        for (Index j = i + 1; j < gram_.cols(); ++j)
            if (gram_(i, j) != gram_(j, i))
                throw InputError("IntLattice: Gram matrix is not symmetric at (" + std::to_string(i) +
                                 "," + std::to_string(j) + ")");
    }
}

namespace {

IntMatrix hyperbolic_plane()
{
    IntMatrix g(2, 2);
    g << Integer(0), Integer(-1), Integer(-1), Integer(0);
    return g;
}

IntMatrix e8_minus()
{
    IntMatrix g = IntMatrix::Constant(8, 8, Integer(0));
    for (Index i = 0; i < 8; ++i)
        g(i, i) = -2;
    // Bourbaki labels, 1-based: chain 1-3-4-5-6-7-8, node 2 attached to node 4.
    const int edges[7][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
    for (const auto& e : edges) {
        g(e[0] - 1, e[1] - 1) = 1;
        g(e[1] - 1, e[0] - 1) = 1;
    }
    return g;
}

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks)
{
    Index n = 0;
    for (const auto& b : blocks)
        n += b.rows();
    IntMatrix g = IntMatrix::Constant(n, n, Integer(0));
    Index at = 0;
    for (const auto& b : blocks) {
        g.block(at, at, b.rows(), b.cols()) = b;
        at += b.rows();
    }
    return g;
}

void check_dims(const IntLattice& lattice, const IntVector& x, const char* what)
{
    if (x.size() != lattice.rank())
        throw InputError(std::string(what) + ": vector of length " + std::to_string(x.size()) +
                         " in a lattice of rank " + std::to_string(lattice.rank()));
}

}  // namespace

IntLattice standard_lattice(StandardLattice name, std::optional<long long> n)
{
    if (name == StandardLattice::K3n) {
        if (!n)
            throw InputError("standard_lattice: K3n requires n");
        if (*n < 2)
            throw InputError("standard_lattice: K3n requires n >= 2, got " + std::to_string(*n));
    } else if (n) {
        throw InputError("standard_lattice: n is only meaningful for K3n");
    }
    const IntMatrix u = hyperbolic_plane();
    const IntMatrix e8 = e8_minus();
    switch (name) {
    case StandardLattice::U:
        return IntLattice(u, "U");
    case StandardLattice::E8Minus:
        return IntLattice(e8, "E8(-1)");
    case StandardLattice::K3:
        return IntLattice(block_diagonal({u, u, u, e8, e8}), "K3");
    case StandardLattice::Mukai:
        return IntLattice(block_diagonal({u, u, u, u, e8, e8}), "Mukai");
    case StandardLattice::K3n: {
        IntMatrix delta(1, 1);
        delta(0, 0) = Integer(2 - 2 * *n);
        return IntLattice(block_diagonal({u, u, u, e8, e8, delta}), "K3n(" + std::to_string(*n) + ")");
    }
    }
    throw InputError("standard_lattice: unknown name");
}

IntLattice standard_lattice_from_label(const std::string& label)
{
    if (label == "U")
        return standard_lattice(StandardLattice::U);
    if (label == "E8(-1)" || label == "E8minus")
        return standard_lattice(StandardLattice::E8Minus);
    if (label == "K3")
        return standard_lattice(StandardLattice::K3);
    if (label == "Mukai")
        return standard_lattice(StandardLattice::Mukai);
    static const std::regex k3n(R"(K3n\((\d+)\))");
    std::smatch m;
    if (std::regex_match(label, m, k3n))
        return standard_lattice(StandardLattice::K3n, std::stoll(m[1].str()));
    throw InputError("unknown lattice label '" + label + "'");
}

IntLattice direct_sum(const IntLattice& a, const IntLattice& b, std::string label)
{
    if (label.empty())
        label = a.label() + "+" + b.label();
    return IntLattice(block_diagonal({a.gram(), b.gram()}), std::move(label));
}

IntLattice rank_one(const Integer& value, std::string label)
{
    IntMatrix g(1, 1);
    g(0, 0) = value;
    if (label.empty())
        label = "<" + value.str() + ">";
    return IntLattice(g, std::move(label));
}

Integer pairing(const IntLattice& lattice, const IntVector& x, const IntVector& y)
{
    check_dims(lattice, x, "pairing");
    check_dims(lattice, y, "pairing");
    const IntMatrix& g = lattice.gram();
    Integer s = 0;
    for (Index i = 0; i < g.rows(); ++i) {
        if (x(i) == 0)
            continue;
        for (Index j = 0; j < g.cols(); ++j)
            if (g(i, j) != 0 && y(j) != 0)
                s += x(i) * g(i, j) * y(j);
    }
    return s;
}

IntVector pairing_functional(const IntLattice& lattice, const IntVector& x)
{
    check_dims(lattice, x, "pairing_functional");
    const IntMatrix& g = lattice.gram();
    IntVector out = IntVector::Constant(g.rows(), Integer(0));
    for (Index i = 0; i < g.rows(); ++i)
        for (Index j = 0; j < g.cols(); ++j)
            if (g(i, j) != 0 && x(j) != 0)
                out(i) += g(i, j) * x(j);
    return out;
}

bool is_primitive(const IntLattice& lattice, const IntVector& x)
{
    check_dims(lattice, x, "is_primitive");
    if (is_zero(x))
        throw InputError("is_primitive: zero vector");
    return content(x) == 1;
}

Integer divisibility(const IntLattice& lattice, const IntVector& x)
{
    check_dims(lattice, x, "divisibility");
    if (is_zero(x))
        throw InputError("divisibility: zero vector");
    Integer d = content(pairing_functional(lattice, x));
    if (d == 0)
        throw InputError("divisibility: null functional (vector pairs to zero with the whole lattice)");
    return d;
}

IntVector reflect(const IntLattice& lattice, const IntVector& e, const IntVector& x, ReflectionKind kind)
{
    const Integer ee = norm(lattice, e);
    if (ee == 0)
        throw InputError("reflect: reflection vector is isotropic");
    const Integer num = 2 * pairing(lattice, x, e);
    if (num % ee != 0)
        throw InputError("reflect: non-integral reflection, (e,e) = " + ee.str() + " does not divide 2(x,e) = " +
                         num.str());
    IntVector r = x - (num / ee) * e;
    if (kind == ReflectionKind::MinusReflection)
        r = -r;
    return r;
}

IntMatrix reflection_matrix(const IntLattice& lattice, const IntVector& e, ReflectionKind kind)
{
    IntMatrix m(lattice.rank(), lattice.rank());
    for (Index i = 0; i < lattice.rank(); ++i)
        m.col(i) = reflect(lattice, e, unit_vector(lattice.rank(), i), kind);
    return m;
}

CongruenceDiagonalization diagonalize(const IntMatrix& symmetric)
{
    const Index n = symmetric.rows();
    RatMatrix a = cast_matrix<Rational>(symmetric);
    RatMatrix b = cast_matrix<Rational>(identity_matrix(n));

    // b_i += c * b_j, applied congruently to a.
    auto add_multiple = [&](Index i, Index j, const Rational& c) {
        b.col(i) += c * b.col(j);
        for (Index k = 0; k < n; ++k)
            if (a(j, k) != 0)
                a(i, k) += c * a(j, k);
        for (Index k = 0; k < n; ++k)
            if (a(k, j) != 0)
                a(k, i) += c * a(k, j);
    };
    auto swap_index = [&](Index i, Index j) {
        if (i == j)
            return;
        b.col(i).swap(b.col(j));
        a.row(i).swap(a.row(j));
        a.col(i).swap(a.col(j));
    };

    CongruenceDiagonalization out;
    for (Index k = 0; k < n; ++k) {
        Index piv = -1;
        for (Index i = k; i < n && piv < 0; ++i)
            if (a(i, i) != 0)
                piv = i;
        if (piv < 0) {
            Index pi = -1, pj = -1;
            for (Index i = k; i < n && pi < 0; ++i)
                for (Index j = i + 1; j < n; ++j)
                    if (a(i, j) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi < 0)
                break;  // trailing block vanishes
            add_multiple(pi, pj, Rational(1));
            piv = pi;
        }
        swap_index(k, piv);
        for (Index i = k + 1; i < n; ++i)
            if (a(i, k) != 0)
                add_multiple(i, k, -a(i, k) / a(k, k));
    }
    out.basis = std::move(b);
    out.diagonal.reserve(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i)
        out.diagonal.push_back(a(i, i));
    return out;
}

Inertia inertia(const IntMatrix& symmetric)
{
    Inertia in;
    for (const auto& d : diagonalize(symmetric).diagonal) {
        if (d > 0)
            ++in.positive;
        else if (d < 0)
            ++in.negative;
        else
            ++in.null;
    }
    return in;
}

Signature signature(const IntLattice& lattice)
{
    const Inertia in = inertia(lattice.gram());
    if (in.null != 0)
        throw InputError("signature: degenerate Gram matrix (rank deficiency " + std::to_string(in.null) +
                         "; inertia " + std::to_string(in.positive) + "," + std::to_string(in.negative) + ")");
    return {in.positive, in.negative};
}

std::vector<Integer> discriminant_group(const IntLattice& lattice)
{
    const auto snf = smith_normal_form(lattice.gram());
    std::vector<Integer> out;
    for (const auto& d : snf.diag) {
        if (d == 0)
            throw InputError("discriminant_group: degenerate Gram matrix");
        if (d > 1)
            out.push_back(d);
    }
    return out;
}

IntLattice restrict_form(const IntLattice& lattice, const IntMatrix& basis, std::string label)
{
    if (basis.rows() != lattice.rank())
        throw InputError("restrict_form: basis vectors have the wrong length");
    IntMatrix gb(lattice.rank(), basis.cols());
    for (Index c = 0; c < basis.cols(); ++c)
        gb.col(c) = pairing_functional(lattice, basis.col(c));
    IntMatrix g = basis.transpose() * gb;
    return IntLattice(std::move(g), std::move(label));
}

}  // namespace k3n
