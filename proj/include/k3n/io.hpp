#pragma once

// JSON forms of lattices, vectors, periods, reports and certificates.
// Arbitrary-precision integers are written as decimal strings; readers also
// accept plain JSON integers.

#include "k3n/density.hpp"
#include "k3n/k3_assoc.hpp"
#include "k3n/period.hpp"
#include "k3n/report.hpp"

#include <json.hpp>

#include <string>

namespace k3n {

using Json = nlohmann::ordered_json;

Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j);

Json vector_to_json(const IntVector& v);
IntVector vector_from_json(const Json& j);

Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

/// {"label", "rank", "gram"}.
Json lattice_to_json(const IntLattice& lattice);

/// Accepts a full lattice object or a bare standard label string.
IntLattice lattice_from_json(const Json& j);

/// {"lattice": label, "coords": [...]}.
Json lattice_vector_to_json(const IntLattice& lattice, const IntVector& v);

struct LatticeVectorFile {
    std::string lattice;
    IntVector coords;
};
LatticeVectorFile lattice_vector_from_json(const Json& j);

/// {"lattice", "D", "x", "y"}; each scalar is [a_num, a_den, b_num, b_den].
/// Lattices without a standard label also carry their "gram".
Json period_to_json(const Period& period);
Period period_from_json(const Json& j);

Json invariant_report_to_json(const InvariantReport& report);

Json checks_to_json(const std::vector<Check>& checks);

/// {"coeffs", "error", "epsilon", "iterations"} plus the target, the working
/// precision and the basis trace.
Json certificate_to_json(const DensityCertificate& cert);

/// Reads a JSON document from a file; InputError on missing file or bad JSON.
Json read_json_file(const std::string& path);

}  // namespace k3n
