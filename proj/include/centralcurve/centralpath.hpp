#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "arrangement.hpp"
#include "errors.hpp"
#include "instance.hpp"
#include "linalg_d.hpp"
#include "polynomial.hpp"

namespace centralcurve {

struct PathPoint {
    double lambda = 0;
    DVec x, y, s;
    DVec tangent;        // unit (n + d + n)-vector along decreasing |lambda|
    double residual = 0; // max relative residual over the three blocks
    double turn_angle = 0; // angle to the previous accepted tangent
};

enum class EndpointKind { AnalyticCenter, Vertex, Unclassified };

struct Endpoint {
    EndpointKind kind = EndpointKind::Unclassified;
    std::string id;      // sign vector (center) or 1-based basis set (vertex)
    double distance = 0; // relative distance to the matched candidate
};

struct CurveTrace {
    std::string region_sign;
    int lambda_sign = 1;          // +1: the instance's own objective; -1: its negation
    std::vector<PathPoint> points; // |lambda| descending: center -> endpoint
    Endpoint endpoint_start, endpoint_end;
    std::vector<std::size_t> end_basis; // filled when endpoint_end is a vertex
    double total_turning = 0;
    bool turning_converged = true;
};

struct TraceOptions {
    double lambda_max = 0; // 0: auto = 1e8 * (1 + |c|inf * |g|inf)
    double lambda_min = 0; // 0: auto = 1e-10 * the same scale
    double tol = 1e-10;    // accepted-point residual
    double max_turn = 0.05;  // radians between consecutive tangents
    double endpoint_tol = 1e-6;
    int max_points = 20000;
};

namespace detail {

struct InstanceD {
    DMat A;  // d x n
    DVec b, c;
    std::size_t n = 0, d = 0;
    double bscale = 1, cscale = 1;

    explicit InstanceD(const LPInstance& ins, int csign = 1)
        : n(ins.n()), d(ins.d()) {
        A.assign(d, DVec(n));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < n; ++j) A[i][j] = ins.A.at(i, j).to_double();
        b.resize(d);
        for (std::size_t i = 0; i < d; ++i) b[i] = ins.b[i].to_double();
        c.resize(n);
        for (std::size_t j = 0; j < n; ++j) c[j] = csign * ins.c[j].to_double();
        bscale = 1 + norm_inf(b);
        cscale = 1 + norm_inf(c);
    }
};

// Exact residual blocks, evaluated over rationals from the double iterate to
// defeat cancellation, then rounded back to double.
struct ResidualBlocks {
    DVec r1, r2, r3; // b - Ax, c + s - A^T y, lambda - x*s
    double rel = 0;
};

inline ResidualBlocks exact_residual(const LPInstance& ins, int csign, const DVec& x,
                                     const DVec& y, const DVec& s, double lambda,
                                     double bscale, double cscale) {
    std::size_t n = ins.n(), d = ins.d();
    ResidualBlocks R;
    R.r1.resize(d);
    R.r2.resize(n);
    R.r3.resize(n);
    Rational lam(0);
    {
        // double -> rational is exact for finite doubles
        mpq_class q(lambda);
        lam = Rational(q);
    }
    std::vector<Rational> xr(n), yr(d), sr(n);
    for (std::size_t j = 0; j < n; ++j) xr[j] = Rational(mpq_class(x[j]));
    for (std::size_t i = 0; i < d; ++i) yr[i] = Rational(mpq_class(y[i]));
    for (std::size_t j = 0; j < n; ++j) sr[j] = Rational(mpq_class(s[j]));
    double m1 = 0, m2 = 0, m3 = 0, xinf = norm_inf(x), sinf = norm_inf(s);
    for (std::size_t i = 0; i < d; ++i) {
        Rational v = ins.b[i];
        for (std::size_t j = 0; j < n; ++j) v -= ins.A.at(i, j) * xr[j];
        R.r1[i] = v.to_double();
        m1 = std::max(m1, std::fabs(R.r1[i]));
    }
    for (std::size_t j = 0; j < n; ++j) {
        Rational v = Rational(csign) * ins.c[j] + sr[j];
        for (std::size_t i = 0; i < d; ++i) v -= ins.A.at(i, j) * yr[i];
        R.r2[j] = v.to_double();
        m2 = std::max(m2, std::fabs(R.r2[j]));
    }
    for (std::size_t j = 0; j < n; ++j) {
        Rational v = lam - xr[j] * sr[j];
        R.r3[j] = v.to_double();
        m3 = std::max(m3, std::fabs(R.r3[j]));
    }
    R.rel = std::max({m1 / (bscale + xinf), m2 / (cscale + sinf), m3 / (1 + std::fabs(lambda))});
    return R;
}

// One Newton direction for the system (Ax-b, A^T y - s - c, x*s - lambda)
// via block elimination through the d x d matrix A diag(x/s) A^T.
inline bool newton_direction(const InstanceD& I, const DVec& x, const DVec& s,
                             const DVec& r1, const DVec& r2, const DVec& r3,
                             DVec& dx, DVec& dy, DVec& ds) {
    std::size_t n = I.n, d = I.d;
    DMat M(d, DVec(d, 0.0));
    DVec w(n); // x/s
    for (std::size_t j = 0; j < n; ++j) w[j] = x[j] / s[j];
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b2 = a; b2 < d; ++b2) {
            double v = 0;
            for (std::size_t j = 0; j < n; ++j) v += I.A[a][j] * w[j] * I.A[b2][j];
            M[a][b2] = M[b2][a] = v;
        }
    DVec rhs(d, 0.0);
    for (std::size_t i = 0; i < d; ++i) {
        double v = -r1[i];
        for (std::size_t j = 0; j < n; ++j) v += I.A[i][j] * (r3[j] + x[j] * r2[j]) / s[j];
        rhs[i] = v;
    }
    auto sol = solve_dense(std::move(M), std::move(rhs));
    if (!sol) return false;
    dy = std::move(*sol);
    ds.resize(n);
    dx.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        double aty = 0;
        for (std::size_t i = 0; i < d; ++i) aty += I.A[i][j] * dy[i];
        ds[j] = aty - r2[j];
        dx[j] = (r3[j] - x[j] * ds[j]) / s[j];
    }
    return true;
}

// Largest step keeping every coordinate strictly on its side (0.99 fraction
// to the boundary).
inline double boundary_step(const DVec& v, const DVec& dv) {
    double alpha = 1.0;
    for (std::size_t j = 0; j < v.size(); ++j) {
        double target = v[j] + dv[j];
        if ((v[j] > 0 && target <= 0) || (v[j] < 0 && target >= 0))
            alpha = std::min(alpha, -0.99 * v[j] / dv[j]);
    }
    return alpha;
}

struct NewtonOutcome {
    bool converged = false;
    double residual = 0;
};

// Full Newton solve at fixed lambda, warm-started at (x, y, s); finishes with
// refinement steps whose residuals are evaluated in exact rational arithmetic.
inline NewtonOutcome solve_point(const LPInstance& ins, const InstanceD& I, int csign,
                                 double lambda, DVec& x, DVec& y, DVec& s, double tol) {
    std::size_t n = I.n, d = I.d;
    DVec r1(d), r2(n), r3(n), dx, dy, ds;
    for (int iter = 0; iter < 80; ++iter) {
        bool exact_phase = iter >= 2; // switch once the double residual saturates
        double rel;
        if (!exact_phase) {
            double m1 = 0, m2 = 0, m3 = 0;
            for (std::size_t i = 0; i < d; ++i) {
                double v = I.b[i];
                for (std::size_t j = 0; j < n; ++j) v -= I.A[i][j] * x[j];
                r1[i] = v;
                m1 = std::max(m1, std::fabs(v));
            }
            for (std::size_t j = 0; j < n; ++j) {
                double v = I.c[j] + s[j];
                for (std::size_t i = 0; i < d; ++i) v -= I.A[i][j] * y[i];
                r2[j] = v;
                m2 = std::max(m2, std::fabs(v));
            }
            for (std::size_t j = 0; j < n; ++j) {
                r3[j] = lambda - x[j] * s[j];
                m3 = std::max(m3, std::fabs(r3[j]));
            }
            rel = std::max({m1 / (I.bscale + norm_inf(x)), m2 / (I.cscale + norm_inf(s)),
                            m3 / (1 + std::fabs(lambda))});
        } else {
            ResidualBlocks R = exact_residual(ins, csign, x, y, s, lambda, I.bscale, I.cscale);
            r1 = std::move(R.r1);
            r2 = std::move(R.r2);
            r3 = std::move(R.r3);
            rel = R.rel;
        }
        if (rel <= tol) return {true, rel};
        if (!newton_direction(I, x, s, r1, r2, r3, dx, dy, ds)) return {false, rel};
        double alpha = std::min(boundary_step(x, dx), boundary_step(s, ds));
        if (alpha < 1e-14) return {false, rel};
        for (std::size_t j = 0; j < n; ++j) x[j] += alpha * dx[j];
        for (std::size_t i = 0; i < d; ++i) y[i] += alpha * dy[i];
        for (std::size_t j = 0; j < n; ++j) s[j] += alpha * ds[j];
    }
    ResidualBlocks R = exact_residual(ins, csign, x, y, s, lambda, I.bscale, I.cscale);
    return {R.rel <= tol, R.rel};
}

// Tangent of the solution curve with respect to lambda (unit length, oriented
// along decreasing lambda).
inline DVec path_tangent(const InstanceD& I, const DVec& x, const DVec& s) {
    std::size_t n = I.n, d = I.d;
    DVec r1(d, 0.0), r2(n, 0.0), r3(n, 1.0), dx, dy, ds;
    if (!newton_direction(I, x, s, r1, r2, r3, dx, dy, ds))
        throw NewtonDivergence("tangent system singular");
    DVec t;
    t.reserve(2 * n + d);
    for (double v : dx) t.push_back(-v);
    for (double v : dy) t.push_back(-v);
    for (double v : ds) t.push_back(-v);
    double nr = norm2(t);
    if (nr == 0) throw NewtonDivergence("zero tangent");
    for (double& v : t) v /= nr;
    return t;
}

inline double angle_between(const DVec& a, const DVec& b) {
    // stable for both tiny and near-pi angles
    DVec diff(a.size()), sum(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        diff[i] = a[i] - b[i];
        sum[i] = a[i] + b[i];
    }
    return 2.0 * std::atan2(norm2(diff), norm2(sum));
}

} // namespace detail

inline double default_lambda_scale(const LPInstance& ins) {
    double cinf = 0, ginf = 0;
    for (const auto& v : ins.c) cinf = std::max(cinf, std::fabs(v.to_double()));
    for (const auto& v : ins.g) ginf = std::max(ginf, std::fabs(v.to_double()));
    return 1.0 + cinf * ginf;
}

// Solve the path system at one lambda from a strictly sign-feasible start.
inline PathPoint solve_at_lambda(const LPInstance& ins, const std::string& sign, double lambda,
                                 const DVec& x0, double tol = 1e-10) {
    if (lambda == 0) throw NewtonDivergence("lambda must be nonzero");
    std::size_t n = ins.n();
    if (sign.size() != n || x0.size() != n) throw MismatchedShape("sign/start length");
    for (std::size_t j = 0; j < n; ++j) {
        bool ok = sign[j] == '-' ? x0[j] < 0 : x0[j] > 0;
        if (!ok) throw LeftRegion("start point not strictly inside the region");
    }
    detail::InstanceD I(ins);
    DVec x = x0, s(n), y;
    for (std::size_t j = 0; j < n; ++j) s[j] = lambda / x[j];
    DVec target(n); // A^T y ~ s + c
    for (std::size_t j = 0; j < n; ++j) target[j] = s[j] + I.c[j];
    auto ylsq = solve_least_squares_rows(I.A, target);
    if (!ylsq) throw NewtonDivergence("least-squares start for y failed");
    y = std::move(*ylsq);
    auto out = detail::solve_point(ins, I, 1, lambda, x, y, s, tol);
    if (!out.converged) throw NewtonDivergence("no convergence at lambda");
    for (std::size_t j = 0; j < n; ++j) {
        bool ok = sign[j] == '-' ? x[j] < 0 : x[j] > 0;
        if (!ok) throw LeftRegion("converged point escaped the region");
    }
    PathPoint p;
    p.lambda = lambda;
    p.x = std::move(x);
    p.y = std::move(y);
    p.s = std::move(s);
    p.residual = out.residual;
    p.tangent = detail::path_tangent(I, p.x, p.s);
    return p;
}

namespace detail {

// Trace one branch (csign = +1 traces the instance's objective, -1 its
// negation) from the analytic center down to lambda_min; returns points in
// the *traced* system; the caller converts signs for csign = -1.
inline std::vector<PathPoint> march(const LPInstance& ins, const InstanceD& I, int csign,
                                    const DVec& center, double lambda_max, double lambda_min,
                                    const TraceOptions& opt, std::string& error) {
    std::size_t n = I.n, d = I.d;
    std::vector<PathPoint> pts;
    // nu-phase: solve the center system (cost scaled by nu = 1/lambda) at
    // lambda' = 1; identical to the true path point at lambda = 1/nu.
    DVec x = center, sh(n), yh;
    for (std::size_t j = 0; j < n; ++j) sh[j] = 1.0 / x[j];
    auto y0 = solve_least_squares_rows(I.A, sh);
    if (!y0) {
        error = "center least-squares failed";
        return pts;
    }
    yh = std::move(*y0);
    auto record_scaled = [&](double nu, double res) {
        PathPoint p;
        p.lambda = 1.0 / nu;
        p.x = x;
        p.y.resize(d);
        p.s.resize(n);
        for (std::size_t i = 0; i < d; ++i) p.y[i] = yh[i] / nu;
        for (std::size_t j = 0; j < n; ++j) p.s[j] = sh[j] / nu;
        p.residual = res;
        p.tangent = path_tangent(I, p.x, p.s);
        pts.push_back(std::move(p));
    };
    // tighten the center start, then take the single small nu step
    {
        LPInstance zero_cost = ins; // cost 0: the nu = 0 system
        for (auto& v : zero_cost.c) v = Rational(0);
        InstanceD I0(ins);
        I0.c.assign(n, 0.0);
        I0.cscale = 1.0;
        auto ok = solve_point(zero_cost, I0, 1, 1.0, x, yh, sh, opt.tol);
        if (!ok.converged) {
            error = "center system did not converge";
            return pts;
        }
    }
    double nu0 = 1.0 / lambda_max;
    {
        LPInstance scaled = ins;
        for (auto& v : scaled.c) v = Rational(csign) * v * Rational(mpq_class(nu0));
        InstanceD Is(scaled);
        auto ok = solve_point(scaled, Is, 1, 1.0, x, yh, sh, opt.tol);
        if (!ok.converged) {
            error = "entry step at lambda_max failed";
            return pts;
        }
        record_scaled(nu0, ok.residual);
    }
    // lambda-phase: geometric march with tangent-turn bisection
    DVec s(n), y(d);
    for (std::size_t j = 0; j < n; ++j) s[j] = sh[j] / nu0;
    for (std::size_t i = 0; i < d; ++i) y[i] = yh[i] / nu0;
    double lam = lambda_max;
    const double ratio = std::pow(10.0, -0.25);
    std::vector<double> targets;
    for (double t = lam * ratio; t > lambda_min; t *= ratio) targets.push_back(t);
    targets.push_back(lambda_min);
    std::size_t ti = 0;
    int barrier_fail = 0;
    while (ti < targets.size()) {
        if (static_cast<int>(pts.size()) > opt.max_points) {
            error = "point budget exhausted";
            return pts;
        }
        double next = targets[ti];
        DVec xs = x, ys = y, ss = s;
        auto ok = solve_point(ins, I, csign, next, xs, ys, ss, opt.tol);
        bool accept = ok.converged;
        double turn = 0;
        DVec tang;
        if (accept) {
            tang = path_tangent(I, xs, ss);
            turn = angle_between(pts.back().tangent, tang);
            if (turn > opt.max_turn && std::log(lam / next) > 1e-7) accept = false;
        }
        if (accept) {
            PathPoint p;
            p.lambda = next;
            p.x = xs;
            p.y = ys;
            p.s = ss;
            p.residual = ok.residual;
            p.tangent = std::move(tang);
            p.turn_angle = turn;
            pts.push_back(std::move(p));
            x = std::move(xs);
            y = std::move(ys);
            s = std::move(ss);
            lam = next;
            ++ti;
            barrier_fail = 0;
            continue;
        }
        // bisect the step in log-lambda
        if (std::log(lam / next) <= 1e-7) {
            if (++barrier_fail > 3) {
                error = "no progress at lambda = " + std::to_string(next);
                return pts;
            }
            // retry the tiny step from scratch via a fresh solve below
            ++ti;
            continue;
        }
        double mid = std::sqrt(lam * next);
        targets.insert(targets.begin() + static_cast<long>(ti), mid);
    }
    return pts;
}

} // namespace detail

// Trace one region for one objective branch. The region must carry its
// analytic center and exact interior point (from `analytic_centers`).
inline CurveTrace trace_region(const LPInstance& ins, const Region& region, int lambda_sign,
                               const std::map<std::vector<std::size_t>, RationalVector>& vtx,
                               TraceOptions opt = {}) {
    if (!region.analytic_center)
        throw NewtonDivergence("region has no analytic center (unbounded?)");
    double scale = default_lambda_scale(ins);
    if (opt.lambda_max <= 0) opt.lambda_max = 1e8 * scale;
    if (opt.lambda_min <= 0) opt.lambda_min = 1e-10 * scale;
    detail::InstanceD I(ins, lambda_sign);
    std::string err;
    auto pts = detail::march(ins, I, lambda_sign, *region.analytic_center, opt.lambda_max,
                             opt.lambda_min, opt, err);
    if (!err.empty() && pts.size() < 3)
        throw NewtonDivergence("trace of " + region.sign_vector + ": " + err);
    CurveTrace tr;
    tr.region_sign = region.sign_vector;
    tr.lambda_sign = lambda_sign;
    if (lambda_sign < 0) {
        for (auto& p : pts) {
            p.lambda = -p.lambda;
            for (auto& v : p.y) v = -v;
            for (auto& v : p.s) v = -v;
            std::size_t n = I.n, d = I.d;
            for (std::size_t i = n; i < n + d + n; ++i) p.tangent[i] = -p.tangent[i];
        }
    }
    tr.points = std::move(pts);
    // endpoint classification
    const DVec& cen = *region.analytic_center;
    auto rel_dist = [](const DVec& a, const DVec& b) {
        double m = 0, sc = 1;
        for (std::size_t i = 0; i < a.size(); ++i) {
            m = std::max(m, std::fabs(a[i] - b[i]));
            sc = std::max(sc, std::fabs(b[i]));
        }
        return m / sc;
    };
    if (!tr.points.empty()) {
        double dstart = rel_dist(tr.points.front().x, cen);
        tr.endpoint_start.distance = dstart;
        if (dstart <= opt.endpoint_tol) {
            tr.endpoint_start.kind = EndpointKind::AnalyticCenter;
            tr.endpoint_start.id = region.sign_vector;
        } else {
            tr.endpoint_start.kind = EndpointKind::Unclassified;
            tr.endpoint_start.id = "nearest-center:" + region.sign_vector;
        }
        double best = 1e300;
        const std::vector<std::size_t>* bestS = nullptr;
        for (const auto& [S, vx] : vtx) {
            DVec vd(vx.size());
            for (std::size_t j = 0; j < vx.size(); ++j) vd[j] = vx[j].to_double();
            double dist = rel_dist(tr.points.back().x, vd);
            if (dist < best) {
                best = dist;
                bestS = &S;
            }
        }
        tr.endpoint_end.distance = best;
        if (bestS && best <= opt.endpoint_tol) {
            tr.endpoint_end.kind = EndpointKind::Vertex;
            tr.end_basis = *bestS;
            std::string id = "{";
            for (std::size_t k = 0; k < bestS->size(); ++k)
                id += (k ? "," : "") + std::to_string((*bestS)[k] + 1);
            tr.endpoint_end.id = id + "}";
        } else {
            tr.endpoint_end.kind = EndpointKind::Unclassified;
            tr.endpoint_end.id = "unclassified";
        }
    }
    for (std::size_t k = 1; k < tr.points.size(); ++k)
        tr.total_turning += tr.points[k].turn_angle;
    return tr;
}

// Convenience: trace one region identified by its sign vector.
inline CurveTrace trace_region(const LPInstance& ins, const std::string& sign,
                               double lambda_max = 0, double lambda_min = 0) {
    auto r0 = detail::confirm_region(ins, sign);
    if (!r0) throw LeftRegion("region " + sign + " is empty");
    Region r = std::move(*r0);
    auto [cen, kkt] = analytic_center_for(ins, r);
    r.analytic_center = std::move(cen);
    r.kkt_residual = kkt;
    TraceOptions opt;
    opt.lambda_max = lambda_max;
    opt.lambda_min = lambda_min;
    return trace_region(ins, r, 1, vertices(ins), opt);
}

struct TraceSet {
    std::vector<CurveTrace> traces;
    std::vector<std::string> errors; // per-region, non-fatal
};

// Both objective branches of every bounded region.
inline TraceSet trace_all_regions(const LPInstance& ins, TraceOptions opt = {},
                                  std::size_t limit_n = 16) {
    TraceSet out;
    auto regions = analytic_centers(ins, limit_n);
    auto vtx = vertices(ins);
    for (const auto& r : regions) {
        if (!r.bounded) continue;
        for (int sgn : {1, -1}) {
            try {
                out.traces.push_back(trace_region(ins, r, sgn, vtx, opt));
            } catch (const Error& e) {
                out.errors.push_back(r.sign_vector + (sgn > 0 ? "/+" : "/-") + ": " + e.what());
            }
        }
    }
    return out;
}

// Max scaled absolute value of the generators at a traced point; generator
// variable names decide which block (x / y / s) is evaluated.
inline double residual_on_generators(const PathPoint& p,
                                     const std::vector<SparsePolynomial>& gens) {
    double worst = 0;
    for (const auto& gpoly : gens) {
        const auto& vars = gpoly.variables();
        const DVec* block = nullptr;
        if (!vars.empty()) {
            char k = vars[0][0];
            block = k == 'x' ? &p.x : k == 'y' ? &p.y : k == 's' ? &p.s : nullptr;
        }
        if (!block || block->size() != vars.size())
            throw MismatchedShape("generator variables vs point blocks");
        double val = std::fabs(gpoly.evaluate<double>(*block));
        double xinf = std::max(1.0, norm_inf(*block));
        double denom = gpoly.coeff_one_norm() * std::pow(xinf, gpoly.total_degree());
        worst = std::max(worst, val / denom);
    }
    return worst;
}

} // namespace centralcurve
