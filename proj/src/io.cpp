#include "ra/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace ra::io {

namespace {

std::vector<Rational> rationals_from_json(const json& j, const char* what) {
    if (!j.is_array()) fail("ParseError", std::string(what) + " must be an array of rational strings");
    std::vector<Rational> v;
    v.reserve(j.size());
    for (const auto& e : j) {
        if (e.is_string()) {
            v.push_back(rational_from_string(e.get<std::string>()));
        } else if (e.is_number_integer()) {
            v.push_back(Rational(e.get<long long>()));
        } else {
            fail("ParseError", std::string(what) + ": expected a rational string");
        }
    }
    return v;
}

json rationals_to_json(const std::vector<Rational>& v) {
    json j = json::array();
    for (const auto& r : v) j.push_back(to_string(r));
    return j;
}

} // namespace

json poly_to_json(const Poly& p) { return rationals_to_json(p.coeffs()); }

Poly poly_from_json(const json& j) { return Poly(rationals_from_json(j, "polynomial")); }

json tail_to_json(const LaurentTail& t) {
    return json{{"order", t.order()}, {"coeffs", rationals_to_json(t.coeffs())}};
}

LaurentTail tail_from_json(const json& j) {
    if (!j.contains("coeffs")) fail("ParseError", "laurent tail needs a \"coeffs\" field");
    auto c = rationals_from_json(j.at("coeffs"), "tail coeffs");
    if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(c.size()) - 1)
        fail("ParseError", "tail order does not match the coefficient count");
    return LaurentTail(std::move(c));
}

json spec_to_json(const RiordanSpec& s) {
    return json{{"kind", "riordan"},
                {"P", poly_to_json(s.P)},
                {"Q", poly_to_json(s.Q)},
                {"d_num", poly_to_json(s.d_num)},
                {"d_den", poly_to_json(s.d_den)}};
}

RiordanSpec spec_from_json(const json& j) {
    for (const char* key : {"P", "Q", "d_num", "d_den"})
        if (!j.contains(key)) fail("ParseError", std::string("riordan spec needs \"") + key + "\"");
    return RiordanSpec{poly_from_json(j.at("d_num")), poly_from_json(j.at("d_den")),
                       poly_from_json(j.at("P")), poly_from_json(j.at("Q"))};
}

json cauchy_to_json(const CauchyProblem& c) {
    json cols = json::array();
    for (const auto& col : c.init.cols) cols.push_back(rationals_to_json(col));
    return json{{"kind", "cauchy"},
                {"P", poly_to_json(c.eq.P)},
                {"Q", poly_to_json(c.eq.Q)},
                {"phi_row0", rationals_to_json(c.init.row0)},
                {"phi_cols", cols}};
}

CauchyProblem cauchy_from_json(const json& j) {
    for (const char* key : {"P", "Q", "phi_row0", "phi_cols"})
        if (!j.contains(key)) fail("ParseError", std::string("cauchy problem needs \"") + key + "\"");
    CauchyProblem c{DifferenceEquation{poly_from_json(j.at("P")), poly_from_json(j.at("Q"))}, InitialData{}};
    c.init.row0 = rationals_from_json(j.at("phi_row0"), "phi_row0");
    if (!j.at("phi_cols").is_array()) fail("ParseError", "phi_cols must be an array of arrays");
    for (const auto& col : j.at("phi_cols")) c.init.cols.push_back(rationals_from_json(col, "phi_cols"));
    return c;
}

namespace {

json bivar_to_json(const BivarPoly& p) {
    json rows = json::array();
    for (int beta = 0; beta <= p.degw(); ++beta) {
        json row = json::array();
        for (int alpha = 0; alpha <= p.degz(); ++alpha) row.push_back(to_string(p.coeff(alpha, beta)));
        rows.push_back(row);
    }
    return rows;
}

BivarPoly bivar_from_json(const json& j, const char* what) {
    if (!j.is_array()) fail("ParseError", std::string(what) + " must be an array of w-power rows");
    std::vector<Poly> blocks;
    for (const auto& row : j) blocks.push_back(Poly(rationals_from_json(row, what)));
    return BivarPoly(std::move(blocks));
}

} // namespace

json bivariate_to_json(const BivariateRational& gf) {
    return json{{"num", bivar_to_json(gf.num)}, {"den", bivar_to_json(gf.den)}};
}

BivariateRational bivariate_from_json(const json& j) {
    for (const char* key : {"num", "den"})
        if (!j.contains(key)) fail("ParseError", std::string("bivariate rational needs \"") + key + "\"");
    return BivariateRational(bivar_from_json(j.at("num"), "num"), bivar_from_json(j.at("den"), "den"));
}

json census_to_json(const ComponentCensus& c) {
    return json{{"N1", c.N1},
                {"N2", c.N2},
                {"kappa", c.kappa},
                {"lower_bound", c.lower_bound},
                {"lattice_points", c.lattice_points},
                {"maximal", c.maximal},
                {"diagnostics", json{{"roots_simple", c.roots_simple}, {"moduli_distinct", c.moduli_distinct}}}};
}

json saddle_to_json(const SaddleResult& s) {
    return json{{"z0", {s.z0.real(), s.z0.imag()}},
                {"w0", {s.w0.real(), s.w0.imag()}},
                {"H", {s.H.real(), s.H.imag()}},
                {"on_boundary", s.on_boundary},
                {"diagnostics",
                 json{{"roots_simple", s.diag.roots_simple},
                      {"moduli_distinct", s.diag.moduli_distinct},
                      {"in_cone", s.diag.in_cone},
                      {"boundary_passes", s.diag.boundary_passes},
                      {"char_residual", s.diag.char_residual},
                      {"saddle_residual", s.diag.saddle_residual},
                      {"notes", s.diag.notes}}}};
}

json report_to_json(const ValidationReport& r) {
    return json{{"valid", r.ok()}, {"violations", r.violations}, {"warnings", r.warnings}};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("ParseError", "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail("ParseError", path + ": " + e.what());
    }
    return j;
}

Problem load_problem(const std::string& path) {
    const json j = read_json_file(path);
    std::string kind;
    if (j.contains("kind")) {
        kind = j.at("kind").get<std::string>();
    } else if (j.contains("d_num")) {
        kind = "riordan";
    } else if (j.contains("phi_row0")) {
        kind = "cauchy";
    }
    if (kind == "riordan") return spec_from_json(j);
    if (kind == "cauchy") return cauchy_from_json(j);
    fail("ParseError", path + ": unknown problem kind \"" + kind + "\"");
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string table_csv(const Grid& g) {
    std::ostringstream out;
    out << "x,y,value\n";
    const int ymax = static_cast<int>(g.size()) - 1;
    const int xmax = ymax >= 0 ? static_cast<int>(g.front().size()) - 1 : -1;
    for (int x = 0; x <= xmax; ++x)
        for (int y = 0; y <= ymax; ++y)
            out << x << "," << y << "," << to_string(g[static_cast<size_t>(y)][static_cast<size_t>(x)])
                << "\n";
    return out.str();
}

json table_json(const Grid& g) {
    json rows = json::array();
    for (const auto& row : g) rows.push_back(rationals_to_json(row));
    return json{{"ymax", static_cast<int>(g.size()) - 1},
                {"xmax", g.empty() ? -1 : static_cast<int>(g.front().size()) - 1},
                {"rows", rows}};
}

std::string cloud_csv(const std::vector<std::array<double, 3>>& rows) {
    std::ostringstream out;
    out << "t,eta_lo,eta_hi\n";
    for (const auto& r : rows)
        out << format_double(r[0]) << "," << format_double(r[1]) << "," << format_double(r[2]) << "\n";
    return out.str();
}

std::string probe_csv(const std::vector<ProbeRow>& rows) {
    std::ostringstream out;
    out << "lambda,exact,estimate,ratio\n";
    for (const auto& r : rows)
        out << r.lambda << "," << to_string(r.exact) << "," << format_double(r.estimate) << ","
            << format_double(r.ratio) << "\n";
    return out.str();
}

} // namespace ra::io
