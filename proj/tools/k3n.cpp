// k3n: command-line front end for the lattice, classifier, K3 and period
// modules. Exit codes: 0 all checks pass, 1 a check or assertion failed,
// 2 invalid input.

#include "k3n/classifier.hpp"
#include "k3n/density.hpp"
#include "k3n/errors.hpp"
#include "k3n/io.hpp"
#include "k3n/k3_assoc.hpp"
#include "k3n/period.hpp"
#include "k3n/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>

using namespace k3n;

namespace {

struct Report {
    std::string command;
    Json inputs = Json::object();
    Json outputs = Json::object();
    std::vector<Check> checks;
};

void print_value(std::ostream& os, const std::string& indent, const std::string& key, const Json& value)
{
    if (value.is_object()) {
        os << indent << key << ":\n";
        for (const auto& [k, v] : value.items())
            print_value(os, indent + "  ", k, v);
        return;
    }
    os << indent << key << " = " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
}

int emit(const Report& r, bool json)
{
    const bool ok = all_pass(r.checks);
    if (json) {
        Json out = {{"command", r.command},
                    {"inputs", r.inputs},
                    {"outputs", r.outputs},
                    {"checks", checks_to_json(r.checks)},
                    {"pass", ok}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "command: " << r.command << "\n";
        print_value(std::cout, "", "inputs", r.inputs);
        print_value(std::cout, "", "outputs", r.outputs);
        if (!r.checks.empty()) {
            std::cout << "checks:\n";
            for (const auto& c : r.checks)
                std::cout << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name
                          << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
        }
        std::cout << (ok ? "PASS" : "FAIL") << "\n";
    }
    return ok ? 0 : 1;
}

IntVector read_vector(const std::string& path, const IntLattice& lattice)
{
    const auto file = lattice_vector_from_json(read_json_file(path));
    if (!file.lattice.empty() && file.lattice != lattice.label())
        throw InputError("vector belongs to lattice '" + file.lattice + "', expected '" + lattice.label() + "'");
    if (file.coords.size() != lattice.rank())
        throw InputError("vector has " + std::to_string(file.coords.size()) + " coordinates, " + lattice.label() +
                         " has rank " + std::to_string(lattice.rank()));
    return file.coords;
}

/// Parses "a+bi", "a-bi", "a", "bi" or "i".
std::complex<double> parse_complex(const std::string& text)
{
    std::string s;
    std::remove_copy_if(text.begin(), text.end(), std::back_inserter(s), [](char c) { return c == ' '; });
    if (s.empty())
        throw InputError("empty complex target");
    auto number = [&](const std::string& part) {
        if (part.empty() || part == "+")
            return 1.0;
        if (part == "-")
            return -1.0;
        char* end = nullptr;
        const double v = std::strtod(part.c_str(), &end);
        if (*end != '\0')
            throw InputError("cannot parse complex target '" + text + "'");
        return v;
    };
    if (s.back() != 'i')
        return {number(s), 0.0};
    s.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < s.size(); ++i)
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E')
            split = i;
    if (split == std::string::npos)
        return {0.0, number(s)};
    return {number(s.substr(0, split)), number(s.substr(split))};
}

Json invariant_json(const OrbitInvariant& inv)
{
    return {{"n", inv.n}, {"d", inv.d}, {"b_star", inv.b_star}};
}

Report cmd_classify(std::int64_t n, const std::string& alpha_file)
{
    Report r{"classify"};
    r.inputs = {{"n", n}, {"alpha", alpha_file}};
    const IntLattice lattice = standard_lattice(StandardLattice::K3n, n);
    const auto inv = classify_isotropic(n, read_vector(alpha_file, lattice));
    r.outputs = {{"d", inv.d}, {"b_star", inv.b_star}};
    return r;
}

Report cmd_orbits(std::int64_t n, std::int64_t d, bool oracle)
{
    Report r{"orbits"};
    r.inputs = {{"n", n}, {"d", d}, {"oracle", oracle}};
    const auto reps = enumerate_orbit_reps(n, d);
    Json list = Json::array();
    for (const auto& rep : reps)
        list.push_back(invariant_json(rep));
    r.outputs = {{"count", reps.size()}, {"nu", nu(d)}, {"representatives", list}};
    r.checks.push_back({"count equals nu(d)", static_cast<std::int64_t>(reps.size()) == nu(d), ""});
    if (oracle) {
        const auto bf = brute_force_orbit_count(n, d, 20, 20);
        r.outputs["oracle"] = {{"count", bf.count}, {"y_range", bf.y_range}, {"c_range", bf.c_range}};
        r.checks.push_back({"oracle count equals enumeration", bf.count == static_cast<std::int64_t>(reps.size()),
                            "oracle " + std::to_string(bf.count)});
    }
    return r;
}

Report cmd_construct(std::int64_t n, std::int64_t d, std::int64_t b)
{
    Report r{"construct"};
    r.inputs = {{"n", n}, {"d", d}, {"b", b}};
    const IntLattice lattice = standard_lattice(StandardLattice::K3n, n);
    const IntVector alpha = construct_alpha(n, d, b);
    r.outputs = {{"alpha", lattice_vector_to_json(lattice, alpha)}};
    const auto inv = classify_isotropic(n, alpha);
    r.checks.push_back({"isotropic", norm(lattice, alpha) == 0, ""});
    r.checks.push_back({"primitive", is_primitive(lattice, alpha), ""});
    r.checks.push_back({"classifies back to (d, b*)", inv.d == d && inv.b_star == canonical_residue(b, d),
                        "(" + std::to_string(inv.d) + ", " + std::to_string(inv.b_star) + ")"});
    return r;
}

Report cmd_mukai(std::int64_t n, std::int64_t d, std::int64_t b)
{
    Report r{"mukai-example"};
    r.inputs = {{"n", n}, {"d", d}, {"b", b}};
    const auto m = mukai_example(n, d, b);
    const IntLattice mukai = standard_lattice(StandardLattice::Mukai);
    r.outputs = {{"s", integer_to_json(m.s)},
                 {"v", lattice_vector_to_json(mukai, m.v)},
                 {"alpha", lattice_vector_to_json(mukai, m.alpha)}};
    r.checks = m.verification;
    return r;
}

Report cmd_associate(std::int64_t n, const std::string& alpha_file)
{
    Report r{"associate"};
    r.inputs = {{"n", n}, {"alpha", alpha_file}};
    const IntVector alpha = read_vector(alpha_file, standard_lattice(StandardLattice::K3n, n));
    const auto a = associate_k3(n, alpha);
    r.outputs = {{"beta", lattice_vector_to_json(a.embedding.target, a.beta)},
                 {"k3_lattice", lattice_to_json(a.k3.lattice)},
                 {"v_bar", lattice_vector_to_json(a.k3.lattice, a.v_bar)},
                 {"d", a.d},
                 {"xi", lattice_vector_to_json(a.k3.lattice, a.xi)},
                 {"q_alpha", lattice_to_json(a.q_alpha.lattice)},
                 {"iota_bar", matrix_to_json(a.iota_bar)},
                 {"invariant_report", invariant_report_to_json(a.q_alpha_report)},
                 {"k3_report", invariant_report_to_json(a.k3_report)}};
    r.checks = a.checks;
    return r;
}

Report cmd_sha_kernel(std::int64_t n, std::int64_t d)
{
    Report r{"sha-kernel"};
    r.inputs = {{"n", n}, {"d", d}};
    const auto divisors = sha_kernel_divisors(n, d);
    Json list = Json::array();
    Integer order = 1;
    for (const auto& x : divisors) {
        list.push_back(integer_to_json(x));
        order *= x;
    }
    r.outputs = {{"elementary_divisors", list}, {"order", integer_to_json(order)}, {"cyclic", divisors.size() <= 1}};
    const Integer expected = (2 * n - 2) / (d * d);
    r.checks.push_back({"cyclic of order (2n-2)/d^2", divisors == std::vector<Integer>{expected},
                        "expected " + expected.str()});
    return r;
}

Report cmd_sample_period(const std::string& label, std::int64_t n, std::int64_t d, std::int64_t b,
                         const std::string& field, std::uint64_t seed)
{
    Report r{"sample-period"};
    r.inputs = {{"D", field}, {"seed", seed}};
    IntLattice lattice;
    if (!label.empty()) {
        r.inputs["lattice"] = label;
        lattice = standard_lattice_from_label(label);
    } else {
        r.inputs["q_alpha"] = {{"n", n}, {"d", d}, {"b", b}};
        lattice = make_fibration(n, construct_alpha(n, d, b)).q_alpha.lattice;
    }
    const Period p = sample_nonspecial_period(lattice, integer_from_json(field), seed);
    r.outputs = {{"period", period_to_json(p)}};
    r.checks.push_back({"non-special", !is_special(p).special, ""});
    return r;
}

Report cmd_density(const std::string& period_file, const std::string& target_text, double epsilon)
{
    Report r{"density"};
    const int bits = precision_bits_from_env();
    r.inputs = {{"period", period_file}, {"target", target_text}, {"epsilon", epsilon}, {"precision_bits", bits}};
    const Period p = period_from_json(read_json_file(period_file));
    const auto cert = density_approximate(p, parse_complex(target_text), epsilon, {bits, 20000});
    r.outputs = {{"certificate", certificate_to_json(cert)}};
    const int check_bits = std::min(1024, std::max(200, 2 * cert.precision_bits));
    const auto check = verify_certificate(p, cert, check_bits);
    r.outputs["verification"] = {{"bits", check_bits}, {"recomputed_error", check.recomputed_error}};
    r.checks.push_back({"error below epsilon", check.below_epsilon, ""});
    r.checks.push_back({"re-evaluation within 2x of reported error", check.within_slack, ""});
    r.checks.push_back({"basis shrinks by 11/12 per step", check.shrink_ok, ""});
    return r;
}

Report cmd_verify(const std::string& suite, const std::string& budget, std::uint64_t seed,
                  const std::string& fixture_file)
{
    Report r{"verify"};
    r.inputs = {{"suite", suite}, {"budget", budget}, {"seed", seed}};
    std::optional<Json> fixture;
    if (!fixture_file.empty()) {
        r.inputs["fixture"] = fixture_file;
        fixture = read_json_file(fixture_file);
    }
    auto suites = parse_suites(suite);
    if (fixture && std::find(suites.begin(), suites.end(), Suite::Lattice) == suites.end())
        suites.insert(suites.begin(), Suite::Lattice);
    const auto results = run_verification(suites, parse_budget(budget), seed, fixture);
    Json summary = Json::object();
    for (const auto& s : results) {
        std::size_t passed = 0;
        for (const auto& c : s.checks) {
            passed += c.pass ? 1 : 0;
            r.checks.push_back({s.name + ": " + c.name, c.pass, c.detail});
        }
        summary[s.name] = std::to_string(passed) + "/" + std::to_string(s.checks.size()) + " passed";
    }
    r.outputs = {{"suites", summary}};
    return r;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Monodromy invariants, associated K3 lattices and period computations for K3^[n]-type lattices"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "Print the report as JSON");

    std::int64_t n = 0, d = 1, b = 0;
    std::uint64_t seed = 0;
    bool oracle = false;
    std::string file, target, label, field = "2", suite = "all", budget = "small", fixture;
    double epsilon = 1e-3;

    auto* classify = app.add_subcommand("classify", "Orbit invariant (d, b*) of a primitive isotropic class");
    classify->add_option("--n", n, "K3^[n] parameter")->required();
    classify->add_option("alpha", file, "Vector file in K3n(n) coordinates")->required();

    auto* orbits = app.add_subcommand("orbits", "Orbit representatives for divisibility d");
    orbits->add_option("--n", n)->required();
    orbits->add_option("--d", d)->required();
    orbits->add_flag("--oracle", oracle, "Cross-check with the brute-force orbit count");

    auto* construct = app.add_subcommand("construct", "Isotropic class with invariant (d, b)");
    auto* mukai = app.add_subcommand("mukai-example", "Witness Mukai vector for invariant (d, b)");
    for (auto* sub : {construct, mukai}) {
        sub->add_option("--n", n)->required();
        sub->add_option("--d", d)->required();
        sub->add_option("--b", b)->required();
    }

    auto* associate = app.add_subcommand("associate", "Associated K3 lattice and the isometry onto xi^perp");
    associate->add_option("--n", n)->required();
    associate->add_option("alpha", file, "Vector file in K3n(n) coordinates")->required();

    auto* sha = app.add_subcommand("sha-kernel", "Order of K3 / (lambda^perp + Z lambda)");
    sha->add_option("--n", n)->required();
    sha->add_option("--d", d, "Divisibility (default 1)");

    auto* sample = app.add_subcommand("sample-period", "Seeded non-special period over Q(sqrt D)");
    auto* lattice_opt = sample->add_option("--lattice", label, "Standard lattice label");
    auto* n_opt = sample->add_option("--n", n, "Sample on Q_alpha for alpha = construct(n, d, b)");
    sample->add_option("--d", d);
    sample->add_option("--b", b);
    sample->add_option("--D", field, "Squarefree D > 1");
    sample->add_option("--seed", seed);
    lattice_opt->excludes(n_opt);

    auto* density = app.add_subcommand("density", "Approximate a complex target by period values");
    density->add_option("period", file, "Period file")->required();
    density->add_option("--target", target, "Complex target such as 0.125+0.375i")->required();
    density->add_option("--epsilon", epsilon);

    auto* verify = app.add_subcommand("verify", "Run the invariant suites");
    verify->add_option("--suite", suite, "lattice, classifier, k3, period or all");
    verify->add_option("--budget", budget, "small or full");
    verify->add_option("--seed", seed);
    verify->add_option("--fixture", fixture, "Lattice file compared against its standard label");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Report r;
        if (*classify)
            r = cmd_classify(n, file);
        else if (*orbits)
            r = cmd_orbits(n, d, oracle);
        else if (*construct)
            r = cmd_construct(n, d, b);
        else if (*mukai)
            r = cmd_mukai(n, d, b);
        else if (*associate)
            r = cmd_associate(n, file);
        else if (*sha)
            r = cmd_sha_kernel(n, d);
        else if (*sample) {
            if (label.empty() && n == 0)
                throw InputError("sample-period needs --lattice or --n/--d/--b");
            r = cmd_sample_period(label, n, d, b, field, seed);
        } else if (*density)
            r = cmd_density(file, target, epsilon);
        else
            r = cmd_verify(suite, budget, seed, fixture);
        return emit(r, json);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violated: " << e.what() << "\n";
        return 1;
    } catch (const BudgetExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
