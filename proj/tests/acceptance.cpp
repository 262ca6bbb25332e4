// One line per acceptance criterion. Each check prints the measured values
// next to the required ones; the process exits 1 if any criterion fails.

#include <centralcurve/arrangement.hpp>
#include <centralcurve/centralpath.hpp>
#include <centralcurve/curvature.hpp>
#include <centralcurve/curve_ideal.hpp>
#include <centralcurve/examples.hpp>
#include <centralcurve/invariants.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace centralcurve;

namespace {

int failures = 0;

void criterion(int num, bool pass, const std::string& detail) {
    std::printf("criterion %2d: %s — %s\n", num, pass ? "PASS" : "FAIL", detail.c_str());
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

LPInstance vandermonde36() {
    RationalMatrix G(3, 6);
    RationalVector c(6);
    for (int j = 0; j < 6; ++j) {
        G.at(0, j) = 1;
        G.at(1, j) = j + 1;
        G.at(2, j) = (j + 1) * (j + 1);
        c[j] = Rational((j + 1) * (j + 1) * (j + 1));
    }
    return LPInstance(G, {Rational(1), Rational(2), Rational(3)}, c, "generic-3x6");
}

LPInstance generic25() {
    RationalMatrix A(2, 5);
    long rows[2][5] = {{1, 1, 1, 1, 1}, {0, 1, 2, 3, 4}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 5; ++j) A.at(i, j) = Rational(rows[i][j]);
    return LPInstance(A, {Rational(2), Rational(3)},
                      {Rational(1), Rational(-2), Rational(3), Rational(-1), Rational(2)},
                      "generic-2x5");
}

LPInstance heptagon() {
    RationalMatrix H(2, 7);
    long hx[7][4] = {{1, 1, 0, 1},  {3, 5, 4, 5},  {-3, 5, 4, 5}, {-1, 1, 0, 1},
                     {-4, 5, -3, 5}, {0, 1, -1, 1}, {4, 5, -3, 5}};
    for (int j = 0; j < 7; ++j) {
        H.at(0, j) = Rational(hx[j][0]) / hx[j][1];
        H.at(1, j) = Rational(hx[j][2]) / hx[j][3];
    }
    return LPInstance(H, {Rational(1), Rational(2)}, RationalVector(7, Rational(-1)), "heptagon");
}

Matroid random_uniform_matroid(std::mt19937& rng, int r, int n) {
    for (;;) {
        RationalMatrix M(static_cast<std::size_t>(r), static_cast<std::size_t>(n));
        std::uniform_int_distribution<long> dist(-40, 40);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < n; ++j) M.at(i, j) = Rational(dist(rng));
        if (rank(M) != static_cast<std::size_t>(r)) continue;
        Matroid m = matroid_from_matrix(M);
        if (m.is_uniform()) return m;
    }
}

std::map<std::string, SparsePolynomial> chart_substitution(const LPInstance& ins,
                                                           std::size_t j1, std::size_t j2) {
    std::size_t n = ins.n();
    std::vector<std::size_t> rest;
    for (std::size_t j = 0; j < n; ++j)
        if (j != j1 && j != j2) rest.push_back(j);
    RationalMatrix AB = ins.A.select_columns(rest);
    auto col = [&](std::size_t j) {
        RationalVector v(ins.A.rows());
        for (std::size_t i = 0; i < ins.A.rows(); ++i) v[i] = ins.A.at(i, j);
        return v;
    };
    auto z0 = solve_linear(AB, ins.b);
    auto zu = solve_linear(AB, col(j1));
    auto zv = solve_linear(AB, col(j2));
    std::vector<std::string> keep = {"x" + std::to_string(j1 + 1), "x" + std::to_string(j2 + 1)};
    std::map<std::string, SparsePolynomial> subs;
    for (std::size_t k = 0; k < rest.size(); ++k) {
        SparsePolynomial pz(keep);
        pz.add_term({0, 0}, (*z0)[k]);
        pz.add_term({1, 0}, -(*zu)[k]);
        pz.add_term({0, 1}, -(*zv)[k]);
        subs["x" + std::to_string(rest[k] + 1)] = pz;
    }
    return subs;
}

bool b_is_generic(const RationalMatrix& A, const RationalVector& b) {
    std::size_t n = A.cols(), d = A.rows();
    std::vector<std::size_t> S;
    std::function<bool(std::size_t)> rec = [&](std::size_t start) {
        if (S.size() == d - 1) {
            RationalMatrix M(d, S.size() + 1), M0(d, S.size());
            for (std::size_t k = 0; k < S.size(); ++k)
                for (std::size_t i = 0; i < d; ++i) {
                    M.at(i, k) = A.at(i, S[k]);
                    M0.at(i, k) = A.at(i, S[k]);
                }
            for (std::size_t i = 0; i < d; ++i) M.at(i, S.size()) = b[i];
            return rank(M) == rank(M0) + 1;
        }
        for (std::size_t j = start; j < n; ++j) {
            S.push_back(j);
            bool ok = rec(j + 1);
            S.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    return rec(0);
}

bool has_zero_column(const RationalMatrix& A) {
    for (std::size_t j = 0; j < A.cols(); ++j) {
        bool all = true;
        for (std::size_t i = 0; i < A.rows(); ++i)
            if (!A.at(i, j).is_zero()) all = false;
        if (all) return true;
    }
    return false;
}

// y solving the 2-row normal equations A A^T y = A (c + s): the plane image of
// a slack vector on the dual path of a d = 2 instance.
std::array<double, 2> y_of(const LPInstance& ins, const DVec& s) {
    double M[2][2] = {{0, 0}, {0, 0}}, rhs[2] = {0, 0};
    for (std::size_t j = 0; j < ins.n(); ++j) {
        double a0 = ins.A.at(0, j).to_double(), a1 = ins.A.at(1, j).to_double();
        M[0][0] += a0 * a0;
        M[0][1] += a0 * a1;
        M[1][1] += a1 * a1;
        double t = ins.c[j].to_double() + s[j];
        rhs[0] += a0 * t;
        rhs[1] += a1 * t;
    }
    M[1][0] = M[0][1];
    double det = M[0][0] * M[1][1] - M[0][1] * M[1][0];
    return {(rhs[0] * M[1][1] - rhs[1] * M[0][1]) / det,
            (M[0][0] * rhs[1] - M[1][0] * rhs[0]) / det};
}

std::string set_str(const std::vector<std::size_t>& S) {
    std::string out = "{";
    for (std::size_t k = 0; k < S.size(); ++k) out += (k ? "," : "") + std::to_string(S[k] + 1);
    return out + "}";
}

void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    LPInstance hex = builtin_example("hexagon"); // its matrix is the 2x3 transportation incidence
    auto cs = circuits(matroid_from_matrix(hex.A));
    std::set<std::vector<std::size_t>> got(cs.begin(), cs.end());
    std::set<std::vector<std::size_t>> want;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            for (std::size_t k = 3; k < 6; ++k)
                for (std::size_t l = k + 1; l < 6; ++l) want.insert({i, j, k, l});
    double el = seconds_since(t0);
    std::string listing;
    for (const auto& C : got) listing += set_str(C) + " ";
    bool pass = got == want && el < 1.0;
    std::string detail;
    if (pass) {
        detail = "found the nine expected circuits in " + std::to_string(el) + " s";
    } else {
        detail = "required all nine sets {i,j,k,l}, i,j in {1,2,3}, k,l in {4,5,6}; computed "
                 "circuits are " + listing + "(" + std::to_string(got.size()) +
                 " of 9); the remaining six candidate sets are bases of the column matroid "
                 "(e.g. {1,2,4,6} has a nonsingular 4x4 row-reduced minor), so they are not "
                 "minimally dependent";
    }
    criterion(1, pass, detail);
}

void criterion_2() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(101);
    bool ok = true;
    for (int n = 3; n <= 9 && ok; ++n)
        for (int r = 2; r < n && ok; ++r) {
            Matroid m = random_uniform_matroid(rng, r, n);
            ok = mobius_number(m) == binomial_ll(n - 1, r - 1);
        }
    double el = seconds_since(t0);
    criterion(2, ok && el < 30.0,
              "mobius_number = C(n-1, r-1) over all 2 <= r < n <= 9 on random uniform "
              "realizations, " + std::to_string(el) + " s");
}

void criterion_3() {
    InvariantReport rep = invariant_report(builtin_example("klee-minty"));
    bool ok = rep.primal.h_vector == std::vector<long long>{1, 2, 3, 3} &&
              rep.primal.degree == 9 && rep.primal.gauss_bound == 34 &&
              rep.primal.region_mobius == 5 &&
              rep.primal.avg_turning_bound_pi == Rational(34, 5);
    criterion(3, ok,
              "h = (1,2,3,3), degree 9, gauss_bound 34, mobius 5, average bound (34/5)*pi, all "
              "exact");
}

void criterion_4() {
    InvariantReport rep = invariant_report(vandermonde36());
    bool ok = rep.primal.degree == 10 && rep.primal.genus == 11 && rep.primal.gauss_bound == 40 &&
              rep.primal.uniform;
    criterion(4, ok, "generic (3,6) instance: degree 10, genus 11, gauss_bound 40, exact");
}

void criterion_5() {
    auto t0 = std::chrono::steady_clock::now();
    auto chart_poly = [](const LPInstance& ins) {
        auto gens = curve_ideal_generators(ins, Side::Primal);
        SparsePolynomial q(gens[0].variables());
        for (const auto& g : gens)
            if (g.total_degree() > 1) q = g;
        return eliminate_linear(q, chart_substitution(ins, 0, 1)).primitive_normalized();
    };
    SparsePolynomial f1 = chart_poly(builtin_example("hexagon"));
    SparsePolynomial d1 = SparsePolynomial::parse(
        "3*x1^4*x2 + 5*x1^3*x2^2 - 2*x1*x2^4 - 3*x1^4 - 22*x1^3*x2 - 15*x1^2*x2^2 + 8*x1*x2^3 "
        "+ 2*x2^4 + 18*x1^3 + 45*x1^2*x2 - 12*x2^3 - 33*x1^2 - 22*x1*x2 + 22*x2^2 + 18*x1 - 12*x2",
        {"x1", "x2"}).primitive_normalized();
    SparsePolynomial f2 = chart_poly(builtin_example("hexagon-straight"));
    SparsePolynomial lin = SparsePolynomial::parse("1*x2 - 1", {"x1", "x2"});
    SparsePolynomial quart = SparsePolynomial::parse(
        "2*x1^4 + 4*x1^3*x2 + 1*x1^2*x2^2 - 1*x1*x2^3 - 12*x1^3 - 14*x1^2*x2 + 1*x1*x2^2 "
        "+ 1*x2^3 + 22*x1^2 + 10*x1*x2 - 5*x2^2 - 12*x1 + 6*x2",
        {"x1", "x2"});
    SparsePolynomial d2 = (lin * quart).primitive_normalized();
    double el = seconds_since(t0);
    bool ok = f1.str() == d1.str() && f2.str() == d2.str() && el < 5.0;
    criterion(5, ok,
              "both displayed chart polynomials reproduced coefficient-exactly after "
              "primitive-part normalization, " + std::to_string(el) + " s");
}

void criterion_6() {
    LPInstance dtz = builtin_example("dtz-snake");
    SparsePolynomial C = planar_curve_poly(dtz.A, dtz.b, dtz.c).primitive_normalized();
    SparsePolynomial quartic = SparsePolynomial::parse(
        "2760518880000000000000000*y2^4 + 22783991895360000000000000*y1*y2^3 "
        "- 1559398946696532000000000*y2^3 + 1688399343321073200000000*y1*y2^2 "
        "+ 87717009913470910818000*y2^2 - 3511691013758400000000000*y1^2*y2^2 "
        "- 324621326759441931317*y2 + 11183216292449806548000*y1*y2 "
        "+ 2558474824415400000000*y1^2*y2 - 51358431801600000000000*y1^3*y2 "
        "+ 6337035495096700140*y1 + 77623920000000000000*y1^4 - 13856351760343620000*y1^2 "
        "+ 291589604847546655 - 38575873512000000000*y1^3",
        {"y1", "y2"});
    SparsePolynomial lin({"y1", "y2"});
    lin.add_term({0, 1}, Rational(1));
    lin.add_term({0, 0}, Rational(-1));
    SparsePolynomial expect = (lin * quartic).primitive_normalized();
    bool ok = C.str() == expect.str();
    std::string detail;
    if (ok) {
        detail = "planar polynomial equals (y2-1) x displayed quartic";
    } else {
        bool is_quartic = C.str() == quartic.primitive_normalized().str();
        detail = "required (y2-1) x (displayed quartic), total degree 5; computed polynomial "
                 "has degree " + std::to_string(C.total_degree()) +
                 (is_quartic ? " and equals the displayed quartic itself, coefficient-exact"
                             : " and differs from the displayed quartic") +
                 "; the right-hand side (0,1) is parallel to constraint column 1 = (0,-1), so "
                 "that constraint line carries weight zero and is excluded from the product "
                 "whose directional derivative is taken; the y2-1 factor never appears";
    }
    criterion(6, ok, detail);
}

void criterion_7() {
    auto t0 = std::chrono::steady_clock::now();
    LPInstance dtz = builtin_example("dtz-snake");
    std::string pos(dtz.n(), '+');

    // refined, grid-converged turning of the positive region's dual path
    CurvatureValue v = total_curvature(dtz, Side::Dual, pos, 1);

    // endpoints of the traced path, mapped to the dual plane
    LPInstance swap = dtz.dual_swap();
    auto r0 = detail::confirm_region(swap, pos);
    bool ok_ends = r0.has_value();
    double dstart = 1e300, dend = 1e300;
    bool vertex_classified = false;
    if (ok_ends) {
        Region r = *r0;
        auto cen = analytic_center_for(swap, r);
        r.analytic_center = cen.first;
        r.kkt_residual = cen.second;
        CurveTrace tr = trace_region(swap, r, 1, vertices(swap), TraceOptions{});
        auto ys = y_of(dtz, tr.points.front().x);
        auto ye = y_of(dtz, tr.points.back().x);
        dstart = std::max(std::fabs(ys[0] - (-0.027978)), std::fabs(ys[1] - 0.778637));
        double v1 = Rational::parse("-599700011/1800660000").to_double();
        double v2 = Rational::parse("-519989/600220000").to_double();
        dend = std::max(std::fabs(ye[0] - v1), std::fabs(ye[1] - v2));
        vertex_classified = tr.endpoint_end.kind == EndpointKind::Vertex &&
                            vertices(swap).count(tr.end_basis) > 0;
    }
    double el = seconds_since(t0);
    bool curvature_ok = std::fabs(v.radians - 13.3754814) <= 1e-2;
    bool start_ok = dstart <= 1e-4;
    bool end_ok = vertex_classified && dend <= 1e-6;
    bool ok = curvature_ok && start_ok && end_ok && el < 60.0;
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "required total curvature 13.3754814 +/- 1e-2; measured %.6f (refinement "
                  "%s, %zu tangent samples) -> %s; start distance %.2e vs 1e-4 -> %s; end "
                  "classified as a vertex with plane distance %.2e vs 1e-6 -> %s; %.1f s",
                  v.radians, v.converged ? "converged" : "not converged", v.points,
                  curvature_ok ? "ok" : "mismatch", dstart, start_ok ? "ok" : "mismatch", dend,
                  end_ok ? "ok" : "mismatch", el);
    criterion(7, ok, buf);
}

void criterion_8() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(909);
    std::uniform_int_distribution<long> ent(-4, 4);
    int done = 0;
    bool ok = true;
    while (done < 25 && ok) {
        std::size_t n = 4 + rng() % 5;
        std::size_t d = 2 + rng() % (n - 3);
        RationalMatrix A(d, n);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < n; ++j) A.at(i, j) = Rational(ent(rng));
        if (has_zero_column(A) || rank(A) != d) continue;
        RationalVector b(d);
        bool found_b = false;
        for (int tries = 0; tries < 40 && !found_b; ++tries) {
            for (std::size_t i = 0; i < d; ++i) b[i] = Rational(ent(rng));
            found_b = b_is_generic(A, b);
        }
        if (!found_b) continue;
        LPInstance ins;
        try {
            ins = LPInstance(A, b, RationalVector(n, Rational(1)), "rand");
        } catch (const Error&) {
            continue;
        }
        int bounded = 0;
        for (const auto& r : enumerate_regions(ins))
            if (r.bounded) ++bounded;
        ok = bounded == mobius_number(matroid_from_matrix(A));
        ++done;
    }
    double el = seconds_since(t0);
    criterion(8, ok && el < 120.0,
              "bounded-region count equals the mobius number on 25 random instances with "
              "generic b, " + std::to_string(el) + " s");
}

void criterion_9() {
    auto worst_residual = [](const LPInstance& ins, int& count) {
        auto gens = curve_ideal_generators(ins, Side::Primal);
        double worst = 0;
        for (const auto& r : analytic_centers(ins)) {
            if (!r.bounded || !r.analytic_center) continue;
            PathPoint p;
            p.x = *r.analytic_center;
            worst = std::max(worst, residual_on_generators(p, gens));
            ++count;
        }
        return worst;
    };
    int centers = 0;
    double worst = worst_residual(builtin_example("hexagon"), centers);
    worst = std::max(worst, worst_residual(builtin_example("klee-minty"), centers));
    std::mt19937 rng(515);
    std::uniform_int_distribution<long> ent(-4, 4);
    int instances = 0;
    while (instances < 10) {
        std::size_t n = 5 + rng() % 2, d = 2 + rng() % 2;
        RationalMatrix A(d, n);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < n; ++j) A.at(i, j) = Rational(ent(rng));
        if (has_zero_column(A) || rank(A) != d) continue;
        RationalVector b(d), c(n);
        for (std::size_t i = 0; i < d; ++i) b[i] = Rational(ent(rng));
        for (std::size_t j = 0; j < n; ++j) c[j] = Rational(ent(rng));
        try {
            LPInstance ins(A, b, c, "rand");
            (void)curve_ideal_generators(ins, Side::Primal);
            worst = std::max(worst, worst_residual(ins, centers));
        } catch (const Error&) {
            continue;
        }
        ++instances;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "%d analytic centers over 12 instances, max scaled generator residual %.2e "
                  "vs 1e-9",
                  centers, worst);
    criterion(9, worst <= 1e-9 && centers >= 12, buf);
}

void criterion_10() {
    bool ok = true;
    std::string detail;
    for (const LPInstance& ins : {generic25(), vandermonde36()}) {
        LPInstance swap = ins.dual_swap();
        auto dual_verts = vertices(swap);
        TraceSet ts = trace_all_regions(ins);
        int matched = 0, total = 0;
        bool inst_ok = ts.errors.empty() && !ts.traces.empty();
        for (const auto& tr : ts.traces) {
            ++total;
            if (tr.endpoint_end.kind != EndpointKind::Vertex) {
                inst_ok = false;
                continue;
            }
            std::vector<std::size_t> comp;
            for (std::size_t j = 0; j < ins.n(); ++j)
                if (std::find(tr.end_basis.begin(), tr.end_basis.end(), j) == tr.end_basis.end())
                    comp.push_back(j);
            auto it = dual_verts.find(comp);
            if (it == dual_verts.end()) {
                inst_ok = false;
                continue;
            }
            const auto& pt = ts.traces[static_cast<std::size_t>(total - 1)].points.back();
            double dist = 0, scale = 1;
            for (std::size_t j = 0; j < ins.n(); ++j) {
                double sv = it->second[j].to_double();
                dist = std::max(dist, std::fabs(pt.s[j] - sv));
                scale = std::max(scale, std::fabs(sv));
            }
            if (dist <= 1e-5 * scale) ++matched;
            else inst_ok = false;
        }
        detail += ins.name + ": " + std::to_string(matched) + "/" + std::to_string(total) +
                  " traces end at a vertex whose complement is an exact dual vertex; ";
        ok = ok && inst_ok;
    }
    criterion(10, ok, detail + "slack coordinates within 1e-5 of the exact dual vertex");
}

void criterion_11() {
    auto pencil_ok = [](const LPInstance& ins, unsigned seed) {
        SparsePolynomial C = planar_curve_poly(ins.A, ins.b, ins.c);
        RationalVector Q = {-ins.b[1], ins.b[0]};
        std::mt19937 rng(seed);
        for (int t = 0; t < 20; ++t) {
            RationalVector P = {Rational(static_cast<long>(rng() % 2000)) / 1000 - 1,
                                Rational(static_cast<long>(rng() % 2000)) / 1000 - 1};
            LineRestrictionCount lc = line_restriction_real_roots(C, P, Q);
            if (lc.real_with_multiplicity != lc.total_degree_roots) return false;
        }
        return true;
    };
    bool ok = pencil_ok(builtin_example("dtz-snake"), 5) && pencil_ok(heptagon(), 6);
    criterion(11, ok,
              "20 rational lines through the distinguished point for each of the two planar "
              "instances: Sturm-counted real roots (with multiplicity) = restricted degree "
              "every time");
}

void criterion_12() {
    std::mt19937 rng(77);
    auto rnd = [&](int lo, int hi) {
        return Rational(static_cast<long>(lo + rng() % static_cast<unsigned>(hi - lo + 1)));
    };
    int good = 0, total = 50;
    for (int t = 0; t < total; ++t) {
        std::size_t n = 4 + t % 3;
        RationalMatrix A(2, n);
        RationalVector b(2), c(n);
        for (std::size_t j = 0; j < n; ++j) {
            A.at(0, j) = rnd(-5, 5);
            A.at(1, j) = rnd(-5, 5);
            c[j] = rnd(-4, 4);
        }
        b[0] = rnd(1, 6);
        b[1] = rnd(1, 6);
        if (rank(A) != 2) { --t; continue; }
        bool wzero = false;
        for (std::size_t j = 0; j < n; ++j)
            if ((b[0] * A.at(1, j) - b[1] * A.at(0, j)).is_zero()) wzero = true;
        if (wzero) { --t; continue; }
        std::vector<std::string> yv = {"y1", "y2"};
        SparsePolynomial prod = SparsePolynomial::constant(yv, Rational(1));
        for (std::size_t j = 0; j < n; ++j) {
            SparsePolynomial ell(yv);
            ell.add_term({1, 0}, A.at(0, j));
            ell.add_term({0, 1}, A.at(1, j));
            ell.add_term({0, 0}, -c[j]);
            prod = prod * ell;
        }
        SparsePolynomial lhs = renegar_derivative(prod.homogenize("y0"), {Rational(0), -b[1], b[0]});
        SparsePolynomial rhs = planar_curve_poly(A, b, c).homogenize("y0");
        if (lhs.str() == rhs.str()) ++good;
    }
    criterion(12, good == total,
              "homogenized directional derivative of the line product = homogenized planar "
              "polynomial, exact on " + std::to_string(good) + "/50 random planar instances");
}

void criterion_13() {
    bool ok = true;
    std::string detail;
    std::vector<LPInstance> instances;
    for (const auto& nm : builtin_example_names()) instances.push_back(builtin_example(nm));
    instances.push_back(vandermonde36());
    instances.push_back(generic25());
    instances.push_back(heptagon());
    for (const auto& ins : instances) {
        CurvatureReport rep = curvature_report(ins);
        if (!rep.all_ok) {
            ok = false;
            detail += ins.name + " out of bounds; ";
        }
    }
    if (detail.empty())
        detail = "region turning <= pi * gauss_bound, planar averages <= 2*pi, per-trace "
                 "turning <= pi*(inflections+1), inflection totals <= degree*(degree-2), on "
                 "all " + std::to_string(instances.size()) + " test instances";
    criterion(13, ok, detail);
}

void criterion_14() {
    LPInstance ds = builtin_example("disjoint-support");
    auto w = disjoint_support_exists(ds);
    bool ok = w && w->cocircuit == std::vector<std::size_t>{0, 1} &&
              w->circuit == std::vector<std::size_t>{2, 3};
    bool none_generic = !disjoint_support_exists(builtin_example("moment-curve-2x5")) &&
                        !disjoint_support_exists(vandermonde36()) &&
                        !disjoint_support_exists(generic25());
    criterion(14, ok && none_generic,
              "block example: row-space support {1,2}, kernel support {3,4}; no witness on "
              "the three generic instances");
}

void criterion_15() {
    InvariantReport rep = invariant_report(builtin_example("moment-curve-2x5"));
    bool ok = rep.primal.h_vector == std::vector<long long>{1, 2, 3} &&
              rep.primal.gauss_bound == 16;
    criterion(15, ok, "h = (1,2,3) and gauss_bound = 16, exact");
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    criterion_13();
    criterion_14();
    criterion_15();
    std::printf("%d of 15 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
