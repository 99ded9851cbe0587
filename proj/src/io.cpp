#include "k3n/io.hpp"

#include "k3n/errors.hpp"

#include <fstream>

namespace k3n {

namespace {

Rational rational_from_json(const Json& num, const Json& den)
{
    const Integer d = integer_from_json(den);
    if (d == 0)
        throw InputError("zero denominator in scalar");
    return Rational(integer_from_json(num), d);
}

Json quad_vector_to_json(const QuadVector& v)
{
    Json out = Json::array();
    for (Index i = 0; i < v.size(); ++i)
        out.push_back(Json::array({integer_to_json(mp::numerator(v.a(i))), integer_to_json(mp::denominator(v.a(i))),
                                   integer_to_json(mp::numerator(v.b(i))), integer_to_json(mp::denominator(v.b(i)))}));
    return out;
}

QuadVector quad_vector_from_json(const Json& j, const Integer& D, Index rank)
{
    if (!j.is_array() || static_cast<Index>(j.size()) != rank)
        throw InputError("period: expected " + std::to_string(rank) + " scalars per vector");
    RatVector a(rank), b(rank);
    for (Index i = 0; i < rank; ++i) {
        const Json& s = j[static_cast<std::size_t>(i)];
        if (!s.is_array() || s.size() != 4)
            throw InputError("period: each scalar must be [a_num, a_den, b_num, b_den]");
        a(i) = rational_from_json(s[0], s[1]);
        b(i) = rational_from_json(s[2], s[3]);
    }
    return {a, b, D};
}

bool is_standard(const IntLattice& lattice)
{
    try {
        return standard_lattice_from_label(lattice.label()).gram() == lattice.gram();
    } catch (const InputError&) {
        return false;
    }
}

}  // namespace

Json integer_to_json(const Integer& x)
{
    return x.str();
}

Integer integer_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Integer(j.get<long long>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
            throw InputError("not a decimal integer: '" + s + "'");
        return Integer(s[0] == '+' ? s.substr(1) : s);
    }
    throw InputError("expected an integer, got " + j.dump());
}

Json vector_to_json(const IntVector& v)
{
    Json out = Json::array();
    for (Index i = 0; i < v.size(); ++i)
        out.push_back(integer_to_json(v(i)));
    return out;
}

IntVector vector_from_json(const Json& j)
{
    if (!j.is_array())
        throw InputError("expected an array of integers");
    IntVector v(static_cast<Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i)
        v(static_cast<Index>(i)) = integer_from_json(j[i]);
    return v;
}

Json matrix_to_json(const IntMatrix& m)
{
    Json out = Json::array();
    for (Index r = 0; r < m.rows(); ++r)
        out.push_back(vector_to_json(IntVector(m.row(r).transpose())));
    return out;
}

IntMatrix matrix_from_json(const Json& j)
{
    if (!j.is_array())
        throw InputError("expected a matrix (array of rows)");
    const Index rows = static_cast<Index>(j.size());
    const Index cols = rows == 0 ? 0 : static_cast<Index>(j[0].size());
    IntMatrix m(rows, cols);
    for (Index r = 0; r < rows; ++r) {
        const IntVector row = vector_from_json(j[static_cast<std::size_t>(r)]);
        if (row.size() != cols)
            throw InputError("matrix rows have different lengths");
        m.row(r) = row.transpose();
    }
    return m;
}

Json lattice_to_json(const IntLattice& lattice)
{
    return {{"label", lattice.label()}, {"rank", lattice.rank()}, {"gram", matrix_to_json(lattice.gram())}};
}

IntLattice lattice_from_json(const Json& j)
{
    if (j.is_string())
        return standard_lattice_from_label(j.get<std::string>());
    if (!j.is_object())
        throw InputError("lattice must be an object or a standard label");
    const std::string label = j.value("label", "");
    if (!j.contains("gram"))
        return standard_lattice_from_label(label);
    const IntMatrix gram = matrix_from_json(j["gram"]);
    if (j.contains("rank") && integer_from_json(j["rank"]) != gram.rows())
        throw InputError("lattice: rank " + j["rank"].dump() + " does not match the Gram matrix");
    return IntLattice(gram, label);
}

Json lattice_vector_to_json(const IntLattice& lattice, const IntVector& v)
{
    return {{"lattice", lattice.label()}, {"coords", vector_to_json(v)}};
}

LatticeVectorFile lattice_vector_from_json(const Json& j)
{
    if (j.is_array())
        return {"", vector_from_json(j)};
    if (!j.is_object() || !j.contains("coords"))
        throw InputError("vector file needs a \"coords\" array");
    return {j.value("lattice", ""), vector_from_json(j["coords"])};
}

Json period_to_json(const Period& period)
{
    Json out = {{"lattice", period.lattice.label()},
                {"D", integer_to_json(period.field())},
                {"x", quad_vector_to_json(period.x)},
                {"y", quad_vector_to_json(period.y)}};
    if (!is_standard(period.lattice))
        out["gram"] = matrix_to_json(period.lattice.gram());
    return out;
}

Period period_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("x") || !j.contains("y") || !j.contains("D"))
        throw InputError("period file needs \"lattice\", \"D\", \"x\" and \"y\"");
    const std::string label = j.value("lattice", "");
    const IntLattice lattice =
        j.contains("gram") ? IntLattice(matrix_from_json(j["gram"]), label) : standard_lattice_from_label(label);
    const Integer D = integer_from_json(j["D"]);
    return make_period(lattice, quad_vector_from_json(j["x"], D, lattice.rank()),
                       quad_vector_from_json(j["y"], D, lattice.rank()));
}

Json invariant_report_to_json(const InvariantReport& report)
{
    Json divisors = Json::array();
    for (const auto& d : report.elementary_divisors)
        divisors.push_back(d.convert_to<long long>());
    return {{"rank", report.rank},
            {"signature", {report.signature.positive, report.signature.negative}},
            {"elementary_divisors", divisors},
            {"match", report.match}};
}

Json checks_to_json(const std::vector<Check>& checks)
{
    Json out = Json::array();
    for (const auto& c : checks)
        out.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return out;
}

Json certificate_to_json(const DensityCertificate& cert)
{
    return {{"coeffs", vector_to_json(cert.coeffs)},
            {"error", cert.achieved_error},
            {"epsilon", cert.epsilon},
            {"iterations", cert.iterations},
            {"target", {cert.target.real(), cert.target.imag()}},
            {"precision_bits", cert.precision_bits},
            {"basis_trace", cert.basis_trace}};
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

}  // namespace k3n
