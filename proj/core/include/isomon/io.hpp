#pragma once

// JSON and CSV encodings. Complex numbers are [re, im] pairs (a bare real
// number is accepted on input), matrices are arrays of rows.

#include <string>

#include <nlohmann/json.hpp>

#include "isomon/garnier.hpp"
#include "isomon/monodromy.hpp"
#include "isomon/spectral_calculus.hpp"
#include "isomon/systems.hpp"

namespace isomon::io {

using json = nlohmann::json;

/// "%.16e": 17 significant digits, fixed layout.
std::string format_double(double v);

json to_json(cplx z);
cplx complex_from_json(const json& j);

json to_json(const CMatrix& m);
CMatrix matrix_from_json(const json& j);

/// {"rank", "finite": [{"point", "coeffs": [A0, A1, ...]}], "infinity": [...]}
json to_json(const RationalSystem& sys);
RationalSystem system_from_json(const json& j);

/// {"rank", "points": [{"location" | null, "leading", "exponents", "non_resonant"}]}
json to_json(const RiemannScheme& scheme);

/// {"type": "211,1111,1111", "points": [...], "rank"}
json to_json(const SpectralType& t);
SpectralType spectral_type_from_json(const json& j);

/// All state fields plus a read-only "derived" block (theta_inf1, rho, sigma).
json to_json(const GarnierState& s);
/// Fields missing from the object keep their defaults only for w, u and eps.
/// A given theta_inf1 must satisfy the Fuchs relation (InvalidState otherwise);
/// the "derived" block is ignored.
GarnierState state_from_json(const json& j);

json to_json(const TypeMove& m);
json to_json(const DegenerationGraph& g);

json to_json(const MonodromyRep& rep);
json to_json(const RepComparison& cmp);

/// Orbit trace CSV.
std::string orbit_csv_header();
std::string orbit_csv_row(int step, const std::string& direction, const GarnierState& s, double rebuild_residual,
                          double kernel_gap);

/// Serialized with two-space indentation and %.16e floats for every number,
/// so equal inputs give byte-identical files.
std::string dump(const json& j);

}  // namespace isomon::io
