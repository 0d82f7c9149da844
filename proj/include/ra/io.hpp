#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ra/amoeba.hpp"
#include "ra/asympt.hpp"
#include "ra/cauchy.hpp"
#include "ra/genfun.hpp"
#include "ra/grid.hpp"
#include "ra/riordan.hpp"

namespace ra::io {

using nlohmann::json;

// ---- JSON ----

json poly_to_json(const Poly& p);          // ["1", "-3/7", ...] ascending powers
Poly poly_from_json(const json& j);

json tail_to_json(const LaurentTail& t);   // {"order": K, "coeffs": [...]}
LaurentTail tail_from_json(const json& j);

json spec_to_json(const RiordanSpec& s);   // {"kind":"riordan","P":...,"Q":...,"d_num":...,"d_den":...}
RiordanSpec spec_from_json(const json& j);

/// {"kind":"cauchy","P":...,"Q":...,"phi_row0":[...],"phi_cols":[[...],...]}
struct CauchyProblem {
    DifferenceEquation eq;
    InitialData init;
};
json cauchy_to_json(const CauchyProblem& c);
CauchyProblem cauchy_from_json(const json& j);

json bivariate_to_json(const BivariateRational& gf); // {"num": [[...w-power rows...]], "den": [[...]]}
BivariateRational bivariate_from_json(const json& j);

json census_to_json(const ComponentCensus& c);
json saddle_to_json(const SaddleResult& s);
json report_to_json(const ValidationReport& r);

/// Discriminated problem file; the "kind" field wins, otherwise inferred
/// from the keys.  Throws ParseError on anything unreadable.
using Problem = std::variant<RiordanSpec, CauchyProblem>;
Problem load_problem(const std::string& path);
json read_json_file(const std::string& path);

// ---- CSV / text ----

/// Header "x,y,value"; x outer, y inner; values as rational strings.
/// Shared by the residue table and the Cauchy solver so their outputs are
/// byte-identical.
std::string table_csv(const Grid& g);
json table_json(const Grid& g);

/// Header "t,eta_lo,eta_hi"; doubles with 17 significant digits.
std::string cloud_csv(const std::vector<std::array<double, 3>>& rows);

/// Header "lambda,exact,estimate,ratio".
std::string probe_csv(const std::vector<ProbeRow>& rows);

/// Deterministic float formatting (17 significant digits).
std::string format_double(double v);

} // namespace ra::io
