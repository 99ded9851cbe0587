#include "k3n/k3_assoc.hpp"

#include "k3n/classifier.hpp"
#include "k3n/errors.hpp"

#include <string>

namespace k3n {

namespace {

const IntLattice& mukai_lattice()
{
    static const IntLattice lattice = standard_lattice(StandardLattice::Mukai);
    return lattice;
}

std::string divisors_text(const std::vector<Integer>& divisors)
{
    std::string out = "(";
    for (std::size_t i = 0; i < divisors.size(); ++i)
        out += (i ? "," : "") + divisors[i].str();
    return out + ")";
}

}  // namespace

Embedding standard_embedding(std::int64_t n)
{
    Embedding emb;
    emb.source = standard_lattice(StandardLattice::K3n, n);
    emb.target = mukai_lattice();
    emb.matrix = IntMatrix::Constant(basis::mukai_rank, basis::k3n_rank, Integer(0));
    for (Index i = 0; i < 6; ++i)
        emb.matrix(i, i) = 1;
    for (Index i = 0; i < 16; ++i)
        emb.matrix(basis::mukai_e8_offset + i, basis::k3_e8_offset + i) = 1;
    emb.matrix(basis::e(4), basis::k3n_delta) = 1;
    emb.matrix(basis::f(4), basis::k3n_delta) = n - 1;

    emb.v = IntVector::Constant(basis::mukai_rank, Integer(0));
    emb.v(basis::e(4)) = 1;
    emb.v(basis::f(4)) = 1 - n;

    if (IntMatrix(emb.matrix.transpose() * emb.target.gram() * emb.matrix) != emb.source.gram())
        throw InvariantViolation("standard_embedding: pullback of the Mukai form differs from K3n(n)");
    if (norm(emb.target, emb.v) != 2 * n - 2)
        throw InvariantViolation("standard_embedding: (v,v) != 2n-2");
    if (!is_zero(IntVector(emb.matrix.transpose() * pairing_functional(emb.target, emb.v))))
        throw InvariantViolation("standard_embedding: v is not orthogonal to the image");
    if (!same_span(saturation(emb.target, emb.matrix).basis, emb.matrix))
        throw InvariantViolation("standard_embedding: image is not primitive");
    return emb;
}

IntLattice reduced_model(std::int64_t n, std::int64_t d)
{
    if (d < 1 || (n - 1) % (d * d) != 0)
        throw InputError("reduced_model: d^2 must divide n-1");
    const IntLattice e8 = standard_lattice(StandardLattice::E8Minus);
    const IntLattice u = standard_lattice(StandardLattice::U);
    IntLattice model = direct_sum(e8, e8);
    model = direct_sum(model, u);
    model = direct_sum(model, u);
    return direct_sum(model, rank_one(Integer((2 - 2 * n) / (d * d))), "E8(-1)^2+U^2+<(2-2n)/d^2>");
}

InvariantReport invariant_report(const IntLattice& lattice, const IntLattice& model)
{
    InvariantReport r;
    r.rank = lattice.rank();
    r.signature = signature(lattice);
    r.elementary_divisors = discriminant_group(lattice);
    r.match = r.rank == model.rank() && r.signature == signature(model) &&
              r.elementary_divisors == discriminant_group(model);
    return r;
}

K3Association associate_k3(std::int64_t n, const IntVector& alpha)
{
    K3Association a;
    a.n = n;
    a.embedding = standard_embedding(n);
    const IntLattice& k3n = a.embedding.source;
    const IntLattice& mukai = a.embedding.target;
    if (alpha.size() != k3n.rank())
        throw InputError("associate_k3: alpha must have 23 coordinates");
    if (is_zero(alpha) || norm(k3n, alpha) != 0)
        throw InputError("associate_k3: alpha must be nonzero isotropic");
    if (!is_primitive(k3n, alpha))
        throw InputError("associate_k3: alpha is not primitive");
    a.alpha = alpha;

    a.beta = a.embedding.matrix * alpha;
    a.k3 = quotient_mod_isotropic(mukai, a.beta, orthogonal_complement(mukai, IntMatrix(a.beta)), "K3(beta)");
    a.v_bar = a.k3.project(a.embedding.v);
    a.d = content(a.v_bar).convert_to<long long>();
    a.xi = a.v_bar / Integer(a.d);

    a.q_alpha = quotient_mod_isotropic(k3n, alpha, orthogonal_complement(k3n, IntMatrix(alpha)), "Q(alpha)");
    const IntMatrix lifted = a.embedding.matrix * a.q_alpha.section;
    a.iota_bar.resize(a.k3.lattice.rank(), lifted.cols());
    for (Index c = 0; c < lifted.cols(); ++c)
        a.iota_bar.col(c) = a.k3.project(lifted.col(c));
    a.xi_perp = orthogonal_complement(a.k3.lattice, IntMatrix(a.xi));

    auto& checks = a.checks;
    const Integer vv = norm(a.k3.lattice, a.v_bar);
    checks.push_back({"(v_bar,v_bar) = 2n-2", vv == 2 * n - 2, "(v_bar,v_bar) = " + vv.str()});
    const std::int64_t classified = classify_isotropic(n, alpha).d;
    checks.push_back({"content of v_bar = divisibility of alpha", a.d == classified,
                      "content " + std::to_string(a.d) + ", divisibility " + std::to_string(classified)});
    const Integer xx = norm(a.k3.lattice, a.xi);
    checks.push_back({"(xi,xi) = (2n-2)/d^2", xx * a.d * a.d == 2 * n - 2, "(xi,xi) = " + xx.str()});
    checks.push_back({"iota_bar preserves the form",
                      IntMatrix(a.iota_bar.transpose() * a.k3.lattice.gram() * a.iota_bar) == a.q_alpha.lattice.gram(),
                      ""});
    checks.push_back({"iota_bar lands in xi^perp",
                      is_zero(IntVector(a.iota_bar.transpose() * pairing_functional(a.k3.lattice, a.xi))), ""});
    checks.push_back({"iota_bar onto xi^perp", same_span(a.iota_bar, a.xi_perp.basis),
                      "xi^perp rank " + std::to_string(a.xi_perp.rank())});

    a.q_alpha_report = invariant_report(a.q_alpha.lattice, reduced_model(n, a.d));
    checks.push_back({"Q_alpha invariants match E8(-1)^2+U^2+<(2-2n)/d^2>", a.q_alpha_report.match,
                      "divisors " + divisors_text(a.q_alpha_report.elementary_divisors)});
    a.k3_report = invariant_report(a.k3.lattice, standard_lattice(StandardLattice::K3));
    checks.push_back({"beta^perp/Z beta is a K3 lattice", a.k3_report.match,
                      "signature (" + std::to_string(a.k3_report.signature.positive) + "," +
                          std::to_string(a.k3_report.signature.negative) + ")"});
    return a;
}

IntVector find_gamma(const IntVector& beta)
{
    const IntLattice& mukai = mukai_lattice();
    if (beta.size() != mukai.rank())
        throw InputError("find_gamma: beta must have 24 coordinates");
    if (is_zero(beta) || norm(mukai, beta) != 0)
        throw InputError("find_gamma: beta must be nonzero isotropic");
    if (!is_primitive(mukai, beta))
        throw InputError("find_gamma: beta is not primitive");

    const IntVector f = pairing_functional(mukai, beta);
    IntVector coeffs = IntVector::Constant(f.size(), Integer(0));
    Integer g = 0;
    for (Index i = 0; i < f.size(); ++i) {
        if (f(i) == 0)
            continue;
        const auto eg = extended_gcd(g, f(i));
        coeffs *= eg.x;
        coeffs(i) = eg.y;
        g = eg.g;
    }
    if (g != 1)
        throw InvariantViolation("find_gamma: beta has divisibility " + g.str() + " in a unimodular lattice");
    const IntVector gamma0 = -coeffs;
    const Integer self = norm(mukai, gamma0);
    const IntVector gamma = gamma0 + (self / 2) * beta;
    if (pairing(mukai, gamma, beta) != -1 || norm(mukai, gamma) != 0)
        throw InvariantViolation("find_gamma: correction failed to produce an isotropic gamma");
    return gamma;
}

IntVector sigma_gamma(const IntVector& beta, const IntVector& gamma, const IntVector& x)
{
    const IntLattice& mukai = mukai_lattice();
    if (pairing(mukai, x, beta) != 0)
        throw InputError("sigma_gamma: x is not orthogonal to beta");
    return -pairing(mukai, x, gamma) * beta;
}

IntVector tau_tilde(const IntVector& beta, const IntVector& gamma, const IntVector& lift)
{
    const IntLattice& mukai = mukai_lattice();
    if (pairing(mukai, lift, beta) != 0)
        throw InputError("tau_tilde: lift is not orthogonal to beta");
    return lift + pairing(mukai, lift, gamma) * beta;
}

std::vector<Integer> sha_kernel_divisors(std::int64_t n, std::int64_t d)
{
    if (n < 2)
        throw InputError("sha_kernel: n must be >= 2");
    if (d < 1 || (n - 1) % (d * d) != 0)
        throw InputError("sha_kernel: d^2 must divide n-1");
    const IntLattice k3 = standard_lattice(StandardLattice::K3);
    IntVector lambda = IntVector::Constant(basis::k3_rank, Integer(0));
    lambda(basis::e(1)) = 1;
    lambda(basis::f(1)) = -(n - 1) / (d * d);
    const Sublattice perp = orthogonal_complement(k3, IntMatrix(lambda));
    return quotient_group_order(k3, perp.basis, IntMatrix(lambda));
}

}  // namespace k3n
