#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "arrangement.hpp"
#include "centralpath.hpp"
#include "curve_ideal.hpp"

namespace centralcurve {

struct PlotOptions {
    double width = 800, height = 800;
    std::size_t max_polyline = 1000;  // points per emitted polyline
    TraceOptions trace;
    std::size_t limit_n = 16;
};

namespace detail {

struct ChartLine {
    double pu, pv, pc;  // locus {pu*u + pv*v + pc = 0}
};

struct PlanarScene {
    std::vector<ChartLine> lines;                          // coordinate hyperplanes
    std::vector<std::array<double, 2>> verts;              // arrangement vertices
    std::vector<std::array<double, 2>> centers;            // analytic centers
    std::vector<std::vector<std::array<double, 2>>> pos;   // objective-branch polylines
    std::vector<std::vector<std::array<double, 2>>> neg;   // negated-objective polylines
};

// Chart for the primal side: the lexicographically first coordinate pair whose
// complementary columns are invertible; all other coordinates are affine in the
// pair, so each hyperplane {x_j = 0} is a line in the chart.
inline void primal_chart(const LPInstance& ins, std::size_t& j1, std::size_t& j2,
                         std::vector<ChartLine>& lines) {
    const std::size_t n = ins.n();
    Matroid m = matroid_from_matrix(ins.A);
    bool found = false;
    for (std::size_t a = 0; a < n && !found; ++a)
        for (std::size_t bb = a + 1; bb < n && !found; ++bb) {
            uint32_t mask = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != a && j != bb) mask |= 1u << j;
            if (m.is_basis(mask)) {
                j1 = a;
                j2 = bb;
                found = true;
            }
        }
    if (!found) throw NotPlanar("no coordinate pair spans the kernel plane");
    std::vector<std::size_t> rest;
    for (std::size_t j = 0; j < n; ++j)
        if (j != j1 && j != j2) rest.push_back(j);
    RationalMatrix AS = ins.A.select_columns(rest);
    RationalVector a1(ins.d()), a2(ins.d());
    for (std::size_t i = 0; i < ins.d(); ++i) {
        a1[i] = ins.A.at(i, j1);
        a2[i] = ins.A.at(i, j2);
    }
    auto z0 = solve_linear(AS, ins.b);
    auto zu = solve_linear(AS, a1);
    auto zv = solve_linear(AS, a2);
    if (!z0 || !zu || !zv) throw InternalInconsistency("chart columns must be invertible");
    lines.assign(n, ChartLine{0, 0, 0});
    lines[j1] = ChartLine{1, 0, 0};
    lines[j2] = ChartLine{0, 1, 0};
    for (std::size_t k = 0; k < rest.size(); ++k)
        lines[rest[k]] = ChartLine{-(*zu)[k].to_double(), -(*zv)[k].to_double(),
                                   (*z0)[k].to_double()};
}

// y recovered from a slack vector: A A^T y = A (c + s).
inline std::array<double, 2> y_from_slack(const LPInstance& ins, const DVec& s) {
    double M[2][2] = {{0, 0}, {0, 0}}, r[2] = {0, 0};
    for (std::size_t j = 0; j < ins.n(); ++j) {
        double a0 = ins.A.at(0, j).to_double(), a1 = ins.A.at(1, j).to_double();
        double cs = ins.c[j].to_double() + s[j];
        M[0][0] += a0 * a0;
        M[0][1] += a0 * a1;
        M[1][1] += a1 * a1;
        r[0] += a0 * cs;
        r[1] += a1 * cs;
    }
    M[1][0] = M[0][1];
    double det = M[0][0] * M[1][1] - M[0][1] * M[1][0];
    return {(r[0] * M[1][1] - r[1] * M[0][1]) / det, (M[0][0] * r[1] - M[1][0] * r[0]) / det};
}

inline PlanarScene build_scene(const LPInstance& ins, Side side, const PlotOptions& opt) {
    PlanarScene sc;
    if (side == Side::Primal) {
        if (ins.n() - ins.d() != 2)
            throw NotPlanar("primal side needs n - d = 2, have " +
                            std::to_string(ins.n() - ins.d()));
        std::size_t j1 = 0, j2 = 0;
        primal_chart(ins, j1, j2, sc.lines);
        for (const auto& [basis, xv] : vertices(ins))
            sc.verts.push_back({xv[j1].to_double(), xv[j2].to_double()});
        for (const auto& r : analytic_centers(ins, opt.limit_n))
            if (r.analytic_center)
                sc.centers.push_back({(*r.analytic_center)[j1], (*r.analytic_center)[j2]});
        TraceSet ts = trace_all_regions(ins, opt.trace, opt.limit_n);
        for (const auto& tr : ts.traces) {
            std::vector<std::array<double, 2>> pl;
            pl.reserve(tr.points.size());
            for (const auto& p : tr.points) pl.push_back({p.x[j1], p.x[j2]});
            (tr.lambda_sign > 0 ? sc.pos : sc.neg).push_back(std::move(pl));
        }
    } else {
        if (ins.d() != 2)
            throw NotPlanar("dual side needs d = 2, have " + std::to_string(ins.d()));
        sc.lines.reserve(ins.n());
        for (std::size_t j = 0; j < ins.n(); ++j)
            sc.lines.push_back(ChartLine{ins.A.at(0, j).to_double(), ins.A.at(1, j).to_double(),
                                         -ins.c[j].to_double()});
        LPInstance swap = ins.dual_swap();
        for (const auto& [basis, sv] : vertices(swap)) {
            DVec sd(sv.size());
            for (std::size_t j = 0; j < sv.size(); ++j) sd[j] = sv[j].to_double();
            sc.verts.push_back(y_from_slack(ins, sd));
        }
        for (const auto& r : analytic_centers(swap, opt.limit_n))
            if (r.analytic_center) sc.centers.push_back(y_from_slack(ins, *r.analytic_center));
        TraceSet ts = trace_all_regions(swap, opt.trace, opt.limit_n);
        for (const auto& tr : ts.traces) {
            std::vector<std::array<double, 2>> pl;
            pl.reserve(tr.points.size());
            for (const auto& p : tr.points) pl.push_back(y_from_slack(ins, p.x));
            (tr.lambda_sign > 0 ? sc.pos : sc.neg).push_back(std::move(pl));
        }
    }
    return sc;
}

inline std::string fmt2(const char* pat, double a, double b) {
    char buf[96];
    std::snprintf(buf, sizeof buf, pat, a, b);
    return buf;
}

// Clip the infinite line to the viewport rectangle; empty when it misses.
inline std::vector<std::array<double, 2>> clip_line(const ChartLine& L, double x0, double y0,
                                                    double x1, double y1) {
    std::vector<std::array<double, 2>> pts;
    auto push = [&](double u, double v) {
        for (const auto& p : pts)
            if (std::fabs(p[0] - u) < 1e-9 && std::fabs(p[1] - v) < 1e-9) return;
        pts.push_back({u, v});
    };
    if (std::fabs(L.pv) > 1e-300) {
        for (double u : {x0, x1}) {
            double v = -(L.pc + L.pu * u) / L.pv;
            if (v >= y0 - 1e-9 && v <= y1 + 1e-9) push(u, v);
        }
    }
    if (std::fabs(L.pu) > 1e-300) {
        for (double v : {y0, y1}) {
            double u = -(L.pc + L.pv * v) / L.pu;
            if (u >= x0 - 1e-9 && u <= x1 + 1e-9) push(u, v);
        }
    }
    if (pts.size() < 2) pts.clear();
    if (pts.size() > 2) pts.resize(2);
    return pts;
}

} // namespace detail

// Deterministic SVG of the planar picture for one side: the line arrangement,
// the curve's polylines through every bounded region (both branches), the
// arrangement vertices as dots, and the analytic centers as crosses.  The
// viewport is the vertex bounding box scaled by 1.2.
inline std::string render_svg(const LPInstance& ins, Side side, const PlotOptions& opt = {}) {
    detail::PlanarScene sc = detail::build_scene(ins, side, opt);
    double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    if (!sc.verts.empty()) {
        x0 = x1 = sc.verts[0][0];
        y0 = y1 = sc.verts[0][1];
        for (const auto& p : sc.verts) {
            x0 = std::min(x0, p[0]);
            x1 = std::max(x1, p[0]);
            y0 = std::min(y0, p[1]);
            y1 = std::max(y1, p[1]);
        }
    }
    double cx = (x0 + x1) / 2, cy = (y0 + y1) / 2;
    double hx = std::max((x1 - x0) / 2, 1e-3) * 1.2, hy = std::max((y1 - y0) / 2, 1e-3) * 1.2;
    x0 = cx - hx;
    x1 = cx + hx;
    y0 = cy - hy;
    y1 = cy + hy;
    const double W = opt.width, H = opt.height;
    auto sx = [&](double u) { return (u - x0) / (x1 - x0) * W; };
    auto sy = [&](double v) { return H - (v - y0) / (y1 - y0) * H; };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
           detail::fmt2("%.0f %.0f", W, H) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const auto& L : sc.lines) {
        auto seg = detail::clip_line(L, x0, y0, x1, y1);
        if (seg.size() != 2) continue;
        svg += "<line x1=\"" + detail::fmt2("%.3f\" y1=\"%.3f", sx(seg[0][0]), sy(seg[0][1])) +
               "\" x2=\"" + detail::fmt2("%.3f\" y2=\"%.3f", sx(seg[1][0]), sy(seg[1][1])) +
               "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    }
    auto emit_polylines = [&](const std::vector<std::vector<std::array<double, 2>>>& set,
                              const char* color) {
        for (const auto& pl : set) {
            if (pl.size() < 2) continue;
            std::size_t step = (pl.size() + opt.max_polyline - 1) / opt.max_polyline;
            svg += "<polyline fill=\"none\" stroke=\"";
            svg += color;
            svg += "\" stroke-width=\"2\" points=\"";
            for (std::size_t i = 0; i < pl.size(); i += step)
                svg += detail::fmt2("%.3f,%.3f ", sx(pl[i][0]), sy(pl[i][1]));
            svg += detail::fmt2("%.3f,%.3f", sx(pl.back()[0]), sy(pl.back()[1]));
            svg += "\"/>\n";
        }
    };
    emit_polylines(sc.pos, "#1f77b4");
    emit_polylines(sc.neg, "#d62728");
    for (const auto& p : sc.verts)
        svg += "<circle cx=\"" + detail::fmt2("%.3f\" cy=\"%.3f", sx(p[0]), sy(p[1])) +
               "\" r=\"4\" fill=\"black\"/>\n";
    for (const auto& p : sc.centers) {
        double u = sx(p[0]), v = sy(p[1]);
        svg += "<path d=\"M " + detail::fmt2("%.3f %.3f", u - 5, v) + " L " +
               detail::fmt2("%.3f %.3f", u + 5, v) + " M " + detail::fmt2("%.3f %.3f", u, v - 5) +
               " L " + detail::fmt2("%.3f %.3f", u, v + 5) +
               "\" stroke=\"#2ca02c\" stroke-width=\"2\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace centralcurve
