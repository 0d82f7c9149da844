#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ra/examples.hpp"
#include "ra/io.hpp"

namespace {

using namespace ra;
using io::json;

// 0 ok, 1 check failed, 2 bad input
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) fail("IoError", "cannot write " + out_path);
    out << text;
}

int error_exit(const Error& e) {
    std::cerr << json{{"error", e.name()}, {"message", e.what()}}.dump() << "\n";
    static const std::vector<std::string> bad_input = {"ParseError", "InvalidSpec", "InvalidArgument",
                                                       "IoError", "InsufficientInitialData",
                                                       "IllPosedEquation"};
    for (const auto& n : bad_input)
        if (e.name() == n) return kBadInput;
    return kCheckFailed;
}

RiordanSpec load_riordan(const std::string& path) {
    auto problem = io::load_problem(path);
    if (auto* spec = std::get_if<RiordanSpec>(&problem)) {
        require_valid(*spec);
        return *spec;
    }
    fail("InvalidArgument", path + " holds a cauchy problem; this command needs a riordan spec");
}

struct CommonOpts {
    std::string spec_path;
    std::string out_path;
    std::string format = "csv";
    int jobs = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_format = true) {
    cmd->add_option("--spec", o.spec_path, "problem JSON file")->required();
    cmd->add_option("-o,--output", o.out_path, "output file (default stdout)");
    if (with_format) cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--jobs", o.jobs, "worker threads for row-parallel work")->check(CLI::PositiveNumber);
}

int run(int argc, char** argv) {
    CLI::App app{"rational Riordan arrays: residue tables, Cauchy problems, generating functions, "
                 "amoebas and diagonal asymptotics"};
    app.require_subcommand(1);

    CommonOpts opt;

    auto* c_validate = app.add_subcommand("validate", "check a problem file against the spec invariants");
    add_common(c_validate, opt, false);

    auto* c_entry = app.add_subcommand("entry", "one exact entry r(x,y) by the residue formula");
    int ex = 0, ey = 0;
    add_common(c_entry, opt, false);
    c_entry->add_option("-x", ex, "column index")->required();
    c_entry->add_option("-y", ey, "row index")->required();

    auto* c_table = app.add_subcommand("table", "exact window of entries by the residue formula");
    int xmax = 20, ymax = 10;
    c_table->add_option("--xmax", xmax, "largest x");
    c_table->add_option("--ymax", ymax, "largest y");
    add_common(c_table, opt);

    auto* c_solve = app.add_subcommand("solve", "exact window by the Cauchy recursion");
    c_solve->add_option("--xmax", xmax, "largest x");
    c_solve->add_option("--ymax", ymax, "largest y");
    add_common(c_solve, opt);

    auto* c_genfun = app.add_subcommand("genfun", "closed-form generating function assembled from the initial data");
    int probe_depth = 8;
    add_common(c_genfun, opt);
    c_genfun->add_option("--probe-depth", probe_depth, "depth for the correction probe");

    auto* c_amoeba = app.add_subcommand("amoeba", "boundary cloud, component census, or smoothness probe");
    double tmin = -3.0, tmax = 3.0;
    int nt = 200, nphi = 1024;
    bool census = false, smoothness = false;
    add_common(c_amoeba, opt, false);
    c_amoeba->add_option("--tmin", tmin);
    c_amoeba->add_option("--tmax", tmax);
    c_amoeba->add_option("--nt", nt);
    c_amoeba->add_option("--nphi", nphi);
    c_amoeba->add_flag("--census", census, "print the component census as JSON instead of a cloud");
    c_amoeba->add_flag("--smoothness", smoothness,
                       "print the heuristic boundary-smoothness diagnostic as JSON");

    auto* c_asympt = app.add_subcommand("asympt", "saddle point and diagonal convergence probe");
    long dp = 0, dq = 0;
    std::string lambdas_arg;
    add_common(c_asympt, opt, false);
    c_asympt->add_option("-p", dp, "direction numerator")->required();
    c_asympt->add_option("-q", dq, "direction denominator")->required();
    c_asympt->add_option("--lambdas", lambdas_arg, "comma-separated lambda values for the probe");

    auto* c_verify = app.add_subcommand("verify", "residue table == Cauchy solve == genfun series, exactly");
    c_verify->add_option("--xmax", xmax, "largest x");
    c_verify->add_option("--ymax", ymax, "largest y");
    add_common(c_verify, opt, false);

    CLI11_PARSE(app, argc, argv);

    if (c_validate->parsed()) {
        auto problem = io::load_problem(opt.spec_path);
        if (auto* spec = std::get_if<RiordanSpec>(&problem)) {
            auto rep = validate(*spec);
            emit(io::report_to_json(rep).dump(2) + "\n", opt.out_path);
            return rep.ok() ? kOk : kBadInput;
        }
        auto& cp = std::get<io::CauchyProblem>(problem);
        auto wp = well_posed(cp.eq);
        emit(json{{"valid", wp.ok}, {"report", wp.report}}.dump(2) + "\n", opt.out_path);
        return wp.ok ? kOk : kBadInput;
    }

    if (c_entry->parsed()) {
        const RiordanSpec spec = load_riordan(opt.spec_path);
        emit(to_string(entry(spec, ex, ey)) + "\n", opt.out_path);
        return kOk;
    }

    if (c_table->parsed()) {
        const RiordanSpec spec = load_riordan(opt.spec_path);
        const Grid g = table(spec, xmax, ymax, opt.jobs);
        emit(opt.format == "json" ? io::table_json(g).dump(2) + "\n" : io::table_csv(g), opt.out_path);
        return kOk;
    }

    if (c_solve->parsed()) {
        auto problem = io::load_problem(opt.spec_path);
        Grid g;
        if (auto* spec = std::get_if<RiordanSpec>(&problem)) {
            require_valid(*spec);
            g = solve(equation_of(*spec), riordan_initial_data(*spec, xmax, ymax), xmax, ymax);
        } else {
            auto& cp = std::get<io::CauchyProblem>(problem);
            g = solve(cp.eq, cp.init, xmax, ymax);
        }
        emit(opt.format == "json" ? io::table_json(g).dump(2) + "\n" : io::table_csv(g), opt.out_path);
        return kOk;
    }

    if (c_genfun->parsed()) {
        auto problem = io::load_problem(opt.spec_path);
        if (auto* cp = std::get_if<io::CauchyProblem>(&problem)) {
            // table-form column data cannot be assembled into a rational GF
            assemble(cp->eq, Poly{1}, Poly{0, 1}, cp->init);
        }
        const RiordanSpec spec = std::get<RiordanSpec>(problem);
        require_valid(spec);
        const DifferenceEquation eq = equation_of(spec);
        const auto cols = riordan_columns(spec);
        const InitialData init = riordan_initial_data(spec, std::max(eq.m() - 1, 0), probe_depth);
        const BivariateRational gf = assemble(eq, spec.d_num, spec.d_den, cols, init.row0);
        if (opt.format == "json") {
            json j = io::bivariate_to_json(gf);
            j["display"] = to_string(gf);
            j["correction_vanishes"] = correction_is_zero(eq, init, probe_depth);
            emit(j.dump(2) + "\n", opt.out_path);
        } else {
            emit(to_string(gf) + "\n", opt.out_path);
        }
        return kOk;
    }

    if (c_amoeba->parsed()) {
        auto problem = io::load_problem(opt.spec_path);
        DifferenceEquation eq; // the amoeba only needs the characteristic polynomial
        if (auto* spec = std::get_if<RiordanSpec>(&problem)) {
            require_valid(*spec);
            eq = equation_of(*spec);
        } else {
            eq = std::get<io::CauchyProblem>(problem).eq;
        }
        if (census) {
            emit(io::census_to_json(component_census(eq)).dump(2) + "\n", opt.out_path);
            return kOk;
        }
        const AmoebaContext ctx = AmoebaContext::make(eq);
        if (smoothness) {
            const SmoothnessProbe probe = smoothness_probe(ctx, tmin, tmax, nt, nphi);
            emit(json{{"max_slope_jump", probe.max_slope_jump},
                      {"tentacle_cells", probe.tentacle_cells},
                      {"smooth_hint", probe.smooth_hint},
                      {"note", "heuristic diagnostic only, never a gate"}}
                         .dump(2) +
                     "\n",
                 opt.out_path);
            return kOk;
        }
        emit(io::cloud_csv(boundary_cloud(ctx, tmin, tmax, nt, nphi, opt.jobs)), opt.out_path);
        return kOk;
    }

    if (c_asympt->parsed()) {
        const RiordanSpec spec = load_riordan(opt.spec_path);
        const Direction dir(dp, dq);
        const SaddleResult saddle = dominant_saddle(equation_of(spec), dir);
        std::cout << io::saddle_to_json(saddle).dump(2) << "\n";
        if (!lambdas_arg.empty()) {
            std::vector<long> lambdas;
            std::stringstream ss(lambdas_arg);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) lambdas.push_back(std::stol(item));
            emit(io::probe_csv(convergence_probe(spec, dir, lambdas)), opt.out_path);
        }
        return kOk;
    }

    if (c_verify->parsed()) {
        const RiordanSpec spec = load_riordan(opt.spec_path);
        const DifferenceEquation eq = equation_of(spec);
        const Grid by_residue = table(spec, xmax, ymax);
        const Grid by_cauchy = solve(eq, riordan_initial_data(spec, xmax, ymax), xmax, ymax);
        const BivariateRational gf =
            assemble(eq, spec.d_num, spec.d_den, riordan_columns(spec),
                     riordan_initial_data(spec, std::max(eq.m() - 1, 0), 0).row0);
        const Grid by_genfun = series_of(gf, xmax, ymax);
        for (int x = 0; x <= xmax; ++x) {
            for (int y = 0; y <= ymax; ++y) {
                const auto& a = by_residue[static_cast<size_t>(y)][static_cast<size_t>(x)];
                const auto& b = by_cauchy[static_cast<size_t>(y)][static_cast<size_t>(x)];
                const auto& c = by_genfun[static_cast<size_t>(y)][static_cast<size_t>(x)];
                if (a != b || a != c) {
                    emit(json{{"status", "mismatch"},
                              {"x", x},
                              {"y", y},
                              {"residue", to_string(a)},
                              {"cauchy", to_string(b)},
                              {"genfun", to_string(c)}}
                                 .dump(2) +
                             "\n",
                         opt.out_path);
                    return kCheckFailed;
                }
            }
        }
        emit(json{{"status", "ok"}, {"xmax", xmax}, {"ymax", ymax}, {"genfun", to_string(gf)}}.dump(2) +
                 "\n",
             opt.out_path);
        return kOk;
    }

    return kBadInput;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ra::Error& e) {
        return error_exit(e);
    } catch (const std::exception& e) {
        std::cerr << ra::io::json{{"error", "InternalError"}, {"message", e.what()}}.dump() << "\n";
        return kBadInput;
    }
}
