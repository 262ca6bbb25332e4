#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "arrangement.hpp"
#include "centralpath.hpp"
#include "curve_ideal.hpp"
#include "invariants.hpp"

namespace centralcurve {

struct CurvatureOptions {
    double refine_tol = 1e-4;  // converged when the last two level-to-level gaps are below this
    int max_levels = 7;
    int base_per_decade = 16;  // grid density at the first level, doubled per level
    double tol = 1e-10;        // per-point Newton tolerance
    double lambda_max = 0;     // 0 = automatic
    double lambda_min = 0;     // 0 = automatic
};

struct CurvatureValue {
    double radians = 0;
    bool converged = false;      // refinement ladder settled under refine_tol
    int levels = 0;              // refinement levels actually run
    std::size_t points = 0;      // tangent samples at the final level
    int inflections = -1;        // planar measurements only, -1 otherwise
    bool inflections_stable = false;
};

// Turning of a polygonal Gauss arc: sum of angles between consecutive tangents.
inline double turning_from_tangents(const std::vector<DVec>& tangents) {
    double k = 0;
    for (std::size_t i = 1; i < tangents.size(); ++i)
        k += detail::angle_between(tangents[i - 1], tangents[i]);
    return k;
}

// Plain turning of an already-sampled trace (no refinement); the instance-level
// entry points below refine their own grids instead.
inline double total_curvature(const CurveTrace& trace) {
    std::vector<DVec> t;
    t.reserve(trace.points.size());
    for (const auto& p : trace.points)
        if (!p.tangent.empty()) t.push_back(p.tangent);
    return turning_from_tangents(t);
}

// Sign changes of the cross product of consecutive 2-d tangent pairs.  Crossings
// below the noise floor 1e-14 * |a||b| are ignored.
inline int inflection_count(const std::vector<DVec>& tangents) {
    for (const auto& t : tangents)
        if (t.size() != 2)
            throw AmbientNot2D("inflection counting needs 2-dimensional tangents, got " +
                               std::to_string(t.size()));
    int count = 0, last = 0;
    for (std::size_t i = 1; i < tangents.size(); ++i) {
        const DVec &a = tangents[i - 1], &b = tangents[i];
        double cross = a[0] * b[1] - a[1] * b[0];
        if (std::fabs(cross) < 1e-14 * norm2(a) * norm2(b)) continue;
        int sgn = cross > 0 ? 1 : -1;
        if (last != 0 && sgn != last) ++count;
        last = sgn;
    }
    return count;
}

namespace detail {

// Inflection counting for refined instance-level grids.  Per-tangent noise from
// finitely accurate path points sits far above the raw cross-product floor, so
// isolated micro-flips of the cross sign are not inflections.  Count reversals
// of the cumulative signed turning with a hysteresis band instead: a reversal
// is confirmed only once the sum retreats from its running extreme by more than
// theta_hys, which no noise walk reaches and every real inflection arc does.
inline int inflections_with_hysteresis(const std::vector<DVec>& tangents, double theta_hys) {
    double s = 0, hi = 0, lo = 0;
    int dir = 0, count = 0;
    for (std::size_t i = 1; i < tangents.size(); ++i) {
        const DVec &a = tangents[i - 1], &b = tangents[i];
        double cross = a[0] * b[1] - a[1] * b[0];
        double dot_ab = a[0] * b[0] + a[1] * b[1];
        s += std::atan2(cross, dot_ab);
        hi = std::max(hi, s);
        lo = std::min(lo, s);
        if (dir >= 0 && hi - s > theta_hys) {
            if (dir > 0) ++count;
            dir = -1;
            lo = s;
        } else if (dir <= 0 && s - lo > theta_hys) {
            if (dir < 0) ++count;
            dir = 1;
            hi = s;
        }
    }
    return count;
}

// Exact tangent of the x-block path of instance J at a converged point.
// Differentiating Ax=b, A^T y - s = c, x o s = lambda gives
//   (A X^2 A^T) w = b,   dx/dlambda = (1 - x o A^T w) o x / lambda,
// so along decreasing |lambda| (either branch) the direction is
//   -(1 - x o A^T w) o x,  computed in exact rationals to kill cancellation.
inline DVec primal_x_tangent(const LPInstance& J, const DVec& xd) {
    const std::size_t n = J.n(), d = J.A.rows();
    std::vector<Rational> x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = Rational(mpq_class(xd[j]));
    RationalMatrix M(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = i; k < d; ++k) {
            Rational acc(0);
            for (std::size_t j = 0; j < n; ++j)
                acc += J.A.at(i, j) * J.A.at(k, j) * x[j] * x[j];
            M.at(i, k) = acc;
            M.at(k, i) = acc;
        }
    auto w = solve_linear(M, J.b);
    if (!w) throw NewtonDivergence("singular tangent system in x-space");
    DVec t(n);
    for (std::size_t j = 0; j < n; ++j) {
        Rational aw(0);
        for (std::size_t i = 0; i < d; ++i) aw += J.A.at(i, j) * w->at(i);
        t[j] = -((Rational(1) - x[j] * aw) * x[j]).to_double();
    }
    double nn = norm2(t);
    if (nn == 0) throw NewtonDivergence("vanishing tangent in x-space");
    for (auto& v : t) v /= nn;
    return t;
}

// Exact tangent of the d-dim y path of `orig` given the slack vector s at the
// point.  On every branch b = lambda * A(1/s), so dy/dlambda =
// (1/lambda^2) (A S^-2 A^T)^{-1} b; along decreasing |lambda| the direction is
// -csign * (A S^-2 A^T)^{-1} b.  Valid at the analytic center too (lambda=inf).
inline DVec dual_y_tangent(const LPInstance& orig, const DVec& sd, int csign) {
    const std::size_t n = orig.n(), d = orig.A.rows();
    std::vector<Rational> s(n);
    for (std::size_t j = 0; j < n; ++j) s[j] = Rational(mpq_class(sd[j]));
    RationalMatrix M(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = i; k < d; ++k) {
            Rational acc(0);
            for (std::size_t j = 0; j < n; ++j)
                acc += orig.A.at(i, j) * orig.A.at(k, j) / (s[j] * s[j]);
            M.at(i, k) = acc;
            M.at(k, i) = acc;
        }
    auto w = solve_linear(M, orig.b);
    if (!w) throw NewtonDivergence("singular tangent system in y-space");
    DVec t(d);
    for (std::size_t i = 0; i < d; ++i) t[i] = -csign * w->at(i).to_double();
    double nn = norm2(t);
    if (nn == 0) throw NewtonDivergence("vanishing tangent in y-space");
    for (auto& v : t) v /= nn;
    return t;
}

// Exact direction in which the x-block path leaves the analytic center.  In
// nu = 1/lambda the center system is x o shat = 1, shat = A^T yhat - nu c, and
// differentiating at nu = 0 gives dx/dnu = x^2 o (c - A^T w0) with
// (A X^2 A^T) w0 = A X^2 c.  Marching away from the center is increasing nu,
// and the -c branch flips the direction.
inline DVec primal_center_direction(const LPInstance& J, const DVec& cen, int csign) {
    const std::size_t n = J.n(), d = J.A.rows();
    std::vector<Rational> x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = Rational(mpq_class(cen[j]));
    RationalMatrix M(d, d);
    RationalVector rhs(d, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = i; k < d; ++k) {
            Rational acc(0);
            for (std::size_t j = 0; j < n; ++j)
                acc += J.A.at(i, j) * J.A.at(k, j) * x[j] * x[j];
            M.at(i, k) = acc;
            M.at(k, i) = acc;
        }
        for (std::size_t j = 0; j < n; ++j) rhs[i] += J.A.at(i, j) * x[j] * x[j] * J.c[j];
    }
    auto w = solve_linear(M, rhs);
    if (!w) throw NewtonDivergence("singular tangent system at the analytic center");
    DVec u(n);
    for (std::size_t j = 0; j < n; ++j) {
        Rational aw(0);
        for (std::size_t i = 0; i < d; ++i) aw += J.A.at(i, j) * w->at(i);
        u[j] = csign * (x[j] * x[j] * (J.c[j] - aw)).to_double();
    }
    double nn = norm2(u);
    if (nn == 0) return {};  // affine-degenerate cost: no distinguished direction
    for (auto& v : u) v /= nn;
    return u;
}

// Orthonormal basis of ker(A) as rows, for angle-true planar coordinates when
// n - d = 2.  The x-tangents lie in ker(A) exactly, so projecting onto an
// orthonormal basis preserves every angle.
inline DMat orthonormal_kernel_basis(const LPInstance& J) {
    DMat Q;
    for (std::size_t r = 0; r < J.B.rows(); ++r) {
        DVec v(J.n());
        for (std::size_t j = 0; j < J.n(); ++j) v[j] = J.B.at(r, j).to_double();
        for (const auto& q : Q) {
            double p = dot(q, v);
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= p * q[j];
        }
        double nn = norm2(v);
        if (nn > 1e-12) {
            for (auto& e : v) e /= nn;
            Q.push_back(std::move(v));
        }
    }
    return Q;
}

// One refinement ladder: solve uniform log-lambda grids of doubling density,
// measure turning (and, in planar spaces, inflections) from exact per-point
// tangents, stop when the value settles across three consecutive levels.  The
// x-space direction signal is lambda * dx/dlambda, so it sinks under the
// double-precision point noise at both parameter ends: the grid is clipped to
// [1e-6, 1e3] * scale there, with the exact center-exit direction prepended for
// the top end (the turning lost at the vertex end is O(lambda_lo)).  The
// y-space direction saturates at both ends and gets the full range.
inline CurvatureValue measure_turning(const LPInstance& J, const LPInstance* yspace_of,
                                      const Region& region, int csign,
                                      const CurvatureOptions& opt) {
    if (!region.analytic_center)
        throw NewtonDivergence("region has no analytic center");
    const double scale = default_lambda_scale(J);
    const double lam_hi = opt.lambda_max > 0 ? opt.lambda_max : (yspace_of ? 1e6 : 1e3) * scale;
    const double lam_lo =
        opt.lambda_min > 0 ? opt.lambda_min : (yspace_of ? 1e-10 : 1e-6) * scale;
    const int decades = std::max(1, (int)std::ceil(std::log10(lam_hi / lam_lo)));

    const bool planar_x = !yspace_of && J.n() - J.d() == 2;
    const bool planar_y = yspace_of && yspace_of->d() == 2;
    DMat Q;
    if (planar_x) {
        Q = orthonormal_kernel_basis(J);
        if (Q.size() != 2) throw AmbientNot2D("kernel is not 2-dimensional");
    }

    DVec center_dir;
    if (yspace_of) {
        center_dir = dual_y_tangent(*yspace_of, *region.analytic_center, csign);
    } else {
        center_dir = primal_center_direction(J, *region.analytic_center, csign);
        if (planar_x && !center_dir.empty()) center_dir = mat_vec(Q, center_dir);
    }

    CurvatureValue out;
    double prev_k = std::numeric_limits<double>::quiet_NaN();
    double prev_gap = std::numeric_limits<double>::quiet_NaN();
    int prev_infl = -1;
    for (int level = 0; level < opt.max_levels; ++level) {
        const int per_decade = opt.base_per_decade << level;
        const int N = per_decade * decades;
        std::vector<DVec> tans;
        tans.reserve(static_cast<std::size_t>(N) + 2);
        if (!center_dir.empty()) tans.push_back(center_dir);
        DVec x = *region.analytic_center;
        int fails = 0;
        for (int k = 0; k <= N; ++k) {
            const double lam = lam_hi * std::pow(lam_lo / lam_hi, (double)k / N);
            try {
                PathPoint p = solve_at_lambda(J, region.sign_vector, csign * lam, x, opt.tol);
                x = p.x;
                DVec t = yspace_of ? dual_y_tangent(*yspace_of, p.x, csign)
                                   : primal_x_tangent(J, p.x);
                if (planar_x) t = mat_vec(Q, t);
                tans.push_back(std::move(t));
            } catch (const Error&) {
                ++fails;
            }
        }
        if ((int)tans.size() < 3 || fails > N / 4)
            throw NewtonDivergence("turning measurement lost " + std::to_string(fails) + " of " +
                                   std::to_string(N + 1) + " grid points in region " +
                                   region.sign_vector);
        out.radians = turning_from_tangents(tans);
        out.points = tans.size();
        out.levels = level + 1;
        if (planar_x || planar_y) {
            out.inflections = inflections_with_hysteresis(tans, 1e-5);
            out.inflections_stable = (out.inflections == prev_infl);
        }
        const double gap = std::fabs(out.radians - prev_k);
        if (level > 1 && gap < opt.refine_tol && prev_gap < opt.refine_tol &&
            (out.inflections < 0 || out.inflections_stable)) {
            out.converged = true;
            break;
        }
        prev_gap = gap;
        prev_k = out.radians;
        prev_infl = out.inflections;
    }
    return out;
}

} // namespace detail

// Converged turning of the central path of one region, measured in the side's
// own coordinates: Side::Primal measures the x-block path of `ins` (the region
// belongs to ins's arrangement); Side::Dual measures the d-dim y path (the
// region belongs to the arrangement of ins.dual_swap(), whose coordinates are
// the dual slacks).  lambda_sign +1 is the path for the instance's objective,
// -1 the path for the negated objective.
inline CurvatureValue total_curvature(const LPInstance& ins, Side side, const Region& region,
                                      int lambda_sign = 1, const CurvatureOptions& opt = {}) {
    if (side == Side::Primal) return detail::measure_turning(ins, nullptr, region, lambda_sign, opt);
    if (ins.B.rows() == 0) throw MismatchedShape("instance has no dual side (n == d)");
    LPInstance swapped = ins.dual_swap();
    return detail::measure_turning(swapped, &ins, region, lambda_sign, opt);
}

inline CurvatureValue total_curvature(const LPInstance& ins, Side side,
                                      const std::string& region_sign, int lambda_sign = 1,
                                      const CurvatureOptions& opt = {}) {
    const LPInstance* J = &ins;
    LPInstance swapped;
    if (side == Side::Dual) {
        if (ins.B.rows() == 0) throw MismatchedShape("instance has no dual side (n == d)");
        swapped = ins.dual_swap();
        J = &swapped;
    }
    auto r0 = detail::confirm_region(*J, region_sign);
    if (!r0) throw LeftRegion("region " + region_sign + " is empty");
    Region r = std::move(*r0);
    auto [cen, kkt] = analytic_center_for(*J, r);
    r.analytic_center = std::move(cen);
    r.kkt_residual = kkt;
    if (side == Side::Primal) return detail::measure_turning(ins, nullptr, r, lambda_sign, opt);
    return detail::measure_turning(swapped, &ins, r, lambda_sign, opt);
}

// --- aggregated report --------------------------------------------------------

struct RegionCurvature {
    std::string sign_vector;
    CurvatureValue value;        // path for the side's objective (positive branch)
    CurvatureValue value_minus;  // path for the negated objective
    bool within_gauss_bound = true;
    bool within_inflection_bound = true;
    std::string error;
};

struct SideCurvatureReport {
    bool present = true;
    bool planar = false;         // measurement space is 2-dimensional
    long long degree = 0;
    long long gauss_bound = 0;
    long long region_mobius = 0;
    Rational avg_bound_pi;       // average turning <= avg_bound_pi * pi
    std::vector<RegionCurvature> regions;
    double sum = 0;              // over objective-branch values of bounded regions
    double average = 0;
    bool average_within_bound = true;
    bool planar_average_ok = true;  // planar sides: average <= 2*pi
    int total_inflections = -1;     // planar sides: both branches of all regions
    long long klein_bound = -1;     // planar sides: degree*(degree-2)
    bool klein_ok = true;
    std::string error;
};

struct CurvatureReport {
    std::string name;
    SideCurvatureReport primal, dual;
    bool all_ok = true;
};

namespace detail {

inline SideCurvatureReport side_curvature_report(const LPInstance& ins, Side side,
                                                 const CurvatureOptions& opt,
                                                 std::size_t limit_n) {
    SideCurvatureReport rep;
    const RationalMatrix& M = side == Side::Primal ? ins.A : ins.B;
    const RationalVector& cost = side == Side::Primal ? ins.c : ins.g;
    SideInvariants inv = side_invariants(M, cost, side == Side::Primal ? ins.d() : ins.n() - ins.d());
    rep.degree = inv.degree;
    rep.gauss_bound = inv.gauss_bound;
    rep.region_mobius = inv.region_mobius;
    rep.avg_bound_pi = inv.avg_turning_bound_pi;

    LPInstance swapped;
    const LPInstance* J = &ins;
    const LPInstance* yspace = nullptr;
    if (side == Side::Dual) {
        swapped = ins.dual_swap();
        J = &swapped;
        yspace = &ins;
        rep.planar = ins.d() == 2;
    } else {
        rep.planar = ins.n() - ins.d() == 2;
    }

    std::vector<Region> regions;
    try {
        regions = analytic_centers(*J, limit_n);
    } catch (const Error& e) {
        rep.error = e.what();
        return rep;
    }
    const double pi = std::acos(-1.0);
    int measured = 0;
    int infl_total = 0;
    bool infl_all_known = rep.planar;
    for (const auto& r : regions) {
        if (!r.bounded) continue;
        RegionCurvature rc;
        rc.sign_vector = r.sign_vector;
        try {
            rc.value = measure_turning(*J, yspace, r, 1, opt);
            rc.value_minus = measure_turning(*J, yspace, r, -1, opt);
            rc.within_gauss_bound = rc.value.radians <= pi * (double)rep.gauss_bound + 1e-3;
            if (rep.planar) {
                rc.within_inflection_bound =
                    rc.value.radians <= pi * (rc.value.inflections + 1) + 1e-3;
                if (rc.value.inflections >= 0 && rc.value_minus.inflections >= 0)
                    infl_total += rc.value.inflections + rc.value_minus.inflections;
                else
                    infl_all_known = false;
            }
            rep.sum += rc.value.radians;
            ++measured;
        } catch (const Error& e) {
            rc.error = e.what();
        }
        rep.regions.push_back(std::move(rc));
    }
    if (measured > 0) rep.average = rep.sum / measured;
    rep.average_within_bound =
        measured == 0 || rep.average <= rep.avg_bound_pi.to_double() * pi + 1e-3;
    if (rep.planar) {
        rep.planar_average_ok = measured == 0 || rep.average <= 2 * pi + 1e-3;
        rep.klein_bound = rep.degree * (rep.degree - 2);
        if (infl_all_known) {
            rep.total_inflections = infl_total;
            rep.klein_ok = infl_total <= rep.klein_bound;
        }
    }
    return rep;
}

inline bool side_ok(const SideCurvatureReport& s) {
    if (!s.present) return true;
    if (!s.error.empty()) return false;
    if (!s.average_within_bound || !s.planar_average_ok || !s.klein_ok) return false;
    for (const auto& r : s.regions)
        if (!r.error.empty() || !r.within_gauss_bound || !r.within_inflection_bound) return false;
    return true;
}

} // namespace detail

inline CurvatureReport curvature_report(const LPInstance& ins, const CurvatureOptions& opt = {},
                                        std::size_t limit_n = 16) {
    CurvatureReport rep;
    rep.name = ins.name;
    rep.primal = detail::side_curvature_report(ins, Side::Primal, opt, limit_n);
    if (ins.B.rows() > 0)
        rep.dual = detail::side_curvature_report(ins, Side::Dual, opt, limit_n);
    else
        rep.dual.present = false;
    rep.all_ok = detail::side_ok(rep.primal) && detail::side_ok(rep.dual);
    return rep;
}

namespace detail {

inline nlohmann::json side_curvature_json(const SideCurvatureReport& s) {
    nlohmann::json j;
    j["present"] = s.present;
    if (!s.present) return j;
    nlohmann::json regions = nlohmann::json::array();
    for (const auto& r : s.regions) {
        nlohmann::json e;
        e["sign_vector"] = r.sign_vector;
        if (!r.error.empty()) {
            e["error"] = r.error;
            e["ok"] = false;
        } else {
            e["curvature"] = r.value.radians;
            e["converged"] = r.value.converged;
            e["curvature_negated_objective"] = r.value_minus.radians;
            e["bound_pi_multiple"] = pi_multiple_json(Rational(static_cast<long>(s.gauss_bound)));
            if (r.value.inflections >= 0) e["inflections"] = r.value.inflections;
            e["ok"] = r.within_gauss_bound && r.within_inflection_bound;
        }
        regions.push_back(std::move(e));
    }
    j["regions"] = std::move(regions);
    j["degree"] = s.degree;
    j["gauss_bound"] = s.gauss_bound;
    j["region_mobius"] = s.region_mobius;
    j["sum"] = s.sum;
    j["average"] = s.average;
    j["average_bound"] = pi_multiple_json(s.avg_bound_pi);
    j["average_within_bound"] = s.average_within_bound;
    j["planar"] = s.planar;
    if (s.planar) {
        j["planar_average_ok"] = s.planar_average_ok;
        if (s.total_inflections >= 0) j["total_inflections"] = s.total_inflections;
        j["klein_bound"] = s.klein_bound;
        j["klein_ok"] = s.klein_ok;
    }
    if (!s.error.empty()) j["error"] = s.error;
    return j;
}

} // namespace detail

inline nlohmann::json curvature_report_to_json(const CurvatureReport& rep) {
    nlohmann::json j;
    j["name"] = rep.name;
    j["primal"] = detail::side_curvature_json(rep.primal);
    j["dual"] = detail::side_curvature_json(rep.dual);
    j["all_ok"] = rep.all_ok;
    return j;
}

} // namespace centralcurve
