// Command-line front end: exact invariants, path tracing, turning reports,
// analytic centers, SVG plots, built-in instances, and the cross-check pipeline.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <centralcurve/curvature.hpp>
#include <centralcurve/examples.hpp>
#include <centralcurve/invariants.hpp>
#include <centralcurve/svg.hpp>

using namespace centralcurve;

namespace {

void write_text(const std::string& out, const std::string& text) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw ParseError("cannot open output file: " + out);
    f << text;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct CommonFlags {
    std::string instance, out, region;
    std::string side = "primal";
    double lambda_max = 0, lambda_min = 0, tol = 1e-10;
    std::size_t limit_n = 16;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool needs_instance = true) {
    auto* o = cmd->add_option("--instance", f.instance, "instance JSON path");
    if (needs_instance) o->required();
    cmd->add_option("--out", f.out, "output path (default: stdout)");
    cmd->add_option("--side", f.side, "primal|dual")->check(CLI::IsMember({"primal", "dual"}));
    cmd->add_option("--region", f.region, "sign vector, e.g. ++-+");
    cmd->add_option("--lambda-max", f.lambda_max, "largest |lambda| on the grid");
    cmd->add_option("--lambda-min", f.lambda_min, "smallest |lambda| on the grid");
    cmd->add_option("--tol", f.tol, "per-point residual tolerance");
    cmd->add_option("--limit-n", f.limit_n, "region enumeration limit on n");
}

int cmd_invariants(const CommonFlags& f) {
    LPInstance ins = load_instance(f.instance);
    InvariantReport rep = invariant_report(ins);
    write_text(f.out, invariant_report_to_json(rep).dump(2) + "\n");
    return 0;
}

int cmd_trace(const CommonFlags& f) {
    LPInstance ins = load_instance(f.instance);
    LPInstance J = f.side == "dual" ? ins.dual_swap() : ins;
    std::string region = f.region.empty() ? std::string(J.n(), '+') : f.region;
    auto r0 = detail::confirm_region(J, region);
    if (!r0) throw LeftRegion("region " + region + " is empty");
    Region r = std::move(*r0);
    auto [cen, kkt] = analytic_center_for(J, r);
    r.analytic_center = std::move(cen);
    r.kkt_residual = kkt;
    TraceOptions opt;
    opt.lambda_max = f.lambda_max;
    opt.lambda_min = f.lambda_min;
    opt.tol = f.tol;
    CurveTrace tr = trace_region(J, r, 1, vertices(J), opt);
    std::string csv = "lambda";
    for (std::size_t j = 0; j < J.n(); ++j) csv += ",x" + std::to_string(j + 1);
    for (std::size_t i = 0; i < J.d(); ++i) csv += ",y" + std::to_string(i + 1);
    for (std::size_t j = 0; j < J.n(); ++j) csv += ",s" + std::to_string(j + 1);
    csv += ",residual\n";
    for (const auto& p : tr.points) {
        csv += fmt(p.lambda);
        for (double v : p.x) csv += "," + fmt(v);
        for (double v : p.y) csv += "," + fmt(v);
        for (double v : p.s) csv += "," + fmt(v);
        csv += "," + fmt(p.residual) + "\n";
    }
    write_text(f.out, csv);
    return 0;
}

int cmd_curvature(const CommonFlags& f) {
    LPInstance ins = load_instance(f.instance);
    CurvatureOptions opt;
    opt.tol = f.tol;
    opt.lambda_max = f.lambda_max;
    opt.lambda_min = f.lambda_min;
    CurvatureReport rep = curvature_report(ins, opt, f.limit_n);
    write_text(f.out, curvature_report_to_json(rep).dump(2) + "\n");
    return 0;
}

int cmd_centers(const CommonFlags& f) {
    LPInstance ins = load_instance(f.instance);
    LPInstance J = f.side == "dual" ? ins.dual_swap() : ins;
    std::string csv = "sign,bounded,kkt_residual";
    for (std::size_t j = 0; j < J.n(); ++j) csv += ",x" + std::to_string(j + 1);
    csv += "\n";
    for (const auto& r : analytic_centers(J, f.limit_n)) {
        csv += r.sign_vector;
        csv += r.bounded ? ",1," : ",0,";
        csv += fmt(r.kkt_residual);
        if (r.analytic_center)
            for (double v : *r.analytic_center) csv += "," + fmt(v);
        else
            for (std::size_t j = 0; j < J.n(); ++j) csv += ",";
        csv += "\n";
    }
    write_text(f.out, csv);
    return 0;
}

int cmd_plot(const CommonFlags& f) {
    LPInstance ins = load_instance(f.instance);
    PlotOptions opt;
    opt.limit_n = f.limit_n;
    opt.trace.tol = f.tol;
    if (f.lambda_max > 0) opt.trace.lambda_max = f.lambda_max;
    if (f.lambda_min > 0) opt.trace.lambda_min = f.lambda_min;
    std::string svg = render_svg(ins, f.side == "dual" ? Side::Dual : Side::Primal, opt);
    write_text(f.out, svg);
    return 0;
}

int cmd_example(const std::string& name, const std::string& out) {
    write_text(out, builtin_example_json(name).dump(2) + "\n");
    return 0;
}

int cmd_verify(const CommonFlags& f) {
    LPInstance ins = load_instance(f.instance);
    struct Check {
        std::string name, detail;
        bool pass = false;
    };
    std::vector<Check> checks;

    InvariantReport inv = invariant_report(ins);
    auto primal_regions = analytic_centers(ins, f.limit_n);
    LPInstance swap;
    std::vector<Region> dual_regions;
    bool has_dual = ins.B.rows() > 0;
    if (has_dual) {
        swap = ins.dual_swap();
        dual_regions = analytic_centers(swap, f.limit_n);
    }
    auto bounded_count = [](const std::vector<Region>& rs) {
        std::size_t k = 0;
        for (const auto& r : rs) k += r.bounded;
        return k;
    };

    {
        Check c{"region count = Mobius number", "", false};
        std::size_t pb = bounded_count(primal_regions);
        c.pass = (long long)pb == inv.primal.region_mobius;
        c.detail = "primal " + std::to_string(pb) + "/" + std::to_string(inv.primal.region_mobius);
        if (has_dual) {
            std::size_t db = bounded_count(dual_regions);
            c.pass = c.pass && (long long)db == inv.dual.region_mobius;
            c.detail += ", dual " + std::to_string(db) + "/" + std::to_string(inv.dual.region_mobius);
        }
        checks.push_back(std::move(c));
    }
    {
        Check c{"analytic centers satisfy the curve generators", "", false};
        double worst = 0;
        auto gens_p = curve_ideal_generators(ins, Side::Primal);
        for (const auto& r : primal_regions) {
            if (!r.bounded || !r.analytic_center) continue;
            PathPoint p;
            p.x = *r.analytic_center;
            worst = std::max(worst, residual_on_generators(p, gens_p));
        }
        if (has_dual) {
            auto gens_d = curve_ideal_generators(ins, Side::Dual);
            for (const auto& r : dual_regions) {
                if (!r.bounded || !r.analytic_center) continue;
                PathPoint p;
                p.s = *r.analytic_center;
                worst = std::max(worst, residual_on_generators(p, gens_d));
            }
        }
        c.pass = worst <= 1e-9;
        c.detail = "max scaled residual " + fmt(worst);
        checks.push_back(std::move(c));
    }
    TraceOptions topt;
    topt.tol = f.tol;
    if (f.lambda_max > 0) topt.lambda_max = f.lambda_max;
    if (f.lambda_min > 0) topt.lambda_min = f.lambda_min;
    TraceSet ts = trace_all_regions(ins, topt, f.limit_n);
    {
        Check c{"trace endpoints reach centers and vertices", "", false};
        std::size_t bad = ts.errors.size();
        for (const auto& tr : ts.traces) {
            if (tr.endpoint_start.kind != EndpointKind::AnalyticCenter) ++bad;
            if (tr.endpoint_end.kind != EndpointKind::Vertex) ++bad;
        }
        c.pass = bad == 0;
        c.detail = std::to_string(ts.traces.size()) + " traces, " + std::to_string(bad) +
                   " unclassified endpoints";
        checks.push_back(std::move(c));
    }
    {
        Check c{"traced points lie on the curve generators", "", false};
        auto gens_p = curve_ideal_generators(ins, Side::Primal);
        double worst = 0;
        for (const auto& tr : ts.traces) {
            std::size_t step = std::max<std::size_t>(1, tr.points.size() / 50);
            for (std::size_t i = 0; i < tr.points.size(); i += step)
                worst = std::max(worst, residual_on_generators(tr.points[i], gens_p));
        }
        c.pass = worst <= 1e-9;
        c.detail = "max scaled residual " + fmt(worst);
        checks.push_back(std::move(c));
    }
    {
        Check c{"turning within the exact bounds", "", false};
        CurvatureOptions copt;
        copt.tol = f.tol;
        CurvatureReport rep = curvature_report(ins, copt, f.limit_n);
        c.pass = rep.all_ok;
        char buf[120];
        std::snprintf(buf, sizeof buf, "primal sum %.6f, dual sum %.6f", rep.primal.sum,
                      rep.dual.present ? rep.dual.sum : 0.0);
        c.detail = buf;
        checks.push_back(std::move(c));
    }

    bool all = true;
    std::printf("%-52s %-6s %s\n", "check", "result", "detail");
    for (const auto& c : checks) {
        all = all && c.pass;
        std::printf("%-52s %-6s %s\n", c.name.c_str(), c.pass ? "pass" : "FAIL",
                    c.detail.c_str());
    }
    if (!inv.warning.empty()) std::printf("warning: %s\n", inv.warning.c_str());
    std::printf("%s\n", all ? "all checks passed" : "verification failed");
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"central curve toolkit: exact invariants and numerically traced paths"};
    app.require_subcommand(1);

    CommonFlags fi, ft, fc, fn, fp, fv;
    std::string ex_name, ex_out;

    add_common(app.add_subcommand("invariants", "matroid invariants and degree bounds"), fi);
    add_common(app.add_subcommand("trace", "trace one region's path to CSV"), ft);
    add_common(app.add_subcommand("curvature", "refined turning report vs exact bounds"), fc);
    add_common(app.add_subcommand("centers", "analytic centers of all regions to CSV"), fn);
    add_common(app.add_subcommand("plot", "SVG picture of a planar side"), fp);
    auto* ex = app.add_subcommand("example", "write a built-in instance file");
    ex->add_option("--name", ex_name, "example name")->required();
    ex->add_option("--out", ex_out, "output path (default: stdout)");
    add_common(app.add_subcommand("verify", "cross-check exact predictions vs numerics"), fv);

    CLI11_PARSE(app, argc, argv);
    try {
        if (app.got_subcommand("invariants")) return cmd_invariants(fi);
        if (app.got_subcommand("trace")) return cmd_trace(ft);
        if (app.got_subcommand("curvature")) return cmd_curvature(fc);
        if (app.got_subcommand("centers")) return cmd_centers(fn);
        if (app.got_subcommand("plot")) return cmd_plot(fp);
        if (app.got_subcommand("example")) return cmd_example(ex_name, ex_out);
        if (app.got_subcommand("verify")) return cmd_verify(fv);
    } catch (const ParseError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 2;
    } catch (const UnknownExample& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 2;
    } catch (const NotPlanar& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 3;
    } catch (const LimitExceeded& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 3;
    } catch (const Error& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 1;
    }
    return 0;
}
