#include <catch2/catch_amalgamated.hpp>

#include <centralcurve/curve_ideal.hpp>
#include <centralcurve/sturm.hpp>
#include <centralcurve/examples.hpp>

#include <map>
#include <random>

using namespace centralcurve;

namespace {

// affine chart for the curve: keep x_{j1+1}, x_{j2+1} and solve Ax = b for the rest
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
    REQUIRE(z0);
    REQUIRE(zu);
    REQUIRE(zv);
    std::vector<std::string> keep = {"x" + std::to_string(j1 + 1), "x" + std::to_string(j2 + 1)};
    std::map<std::string, SparsePolynomial> subs;
    for (std::size_t k = 0; k < rest.size(); ++k) {
        SparsePolynomial p(keep);
        p.add_term({0, 0}, (*z0)[k]);
        p.add_term({1, 0}, -(*zu)[k]);
        p.add_term({0, 1}, -(*zv)[k]);
        subs["x" + std::to_string(rest[k] + 1)] = p;
    }
    return subs;
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

const char* kSnakeQuartic =
    "2760518880000000000000000*y2^4 + 22783991895360000000000000*y1*y2^3 - 1559398946696532000000000*y2^3 "
    "+ 1688399343321073200000000*y1*y2^2 + 87717009913470910818000*y2^2 - 3511691013758400000000000*y1^2*y2^2 "
    "- 324621326759441931317*y2 + 11183216292449806548000*y1*y2 + 2558474824415400000000*y1^2*y2 "
    "- 51358431801600000000000*y1^3*y2 + 6337035495096700140*y1 + 77623920000000000000*y1^4 "
    "- 13856351760343620000*y1^2 + 291589604847546655 - 38575873512000000000*y1^3";

} // namespace

TEST_CASE("sparse polynomial arithmetic and parsing", "[polynomial]") {
    std::vector<std::string> xy = {"x", "y"};
    SparsePolynomial f = SparsePolynomial::parse("2*x^2*y - 3*x + 1/2*y - 5", xy);
    CHECK(f.total_degree() == 3);
    CHECK(f.str() == SparsePolynomial::parse(f.str(), xy).str()); // round-trip fixpoint

    SparsePolynomial g = SparsePolynomial::parse("1*x + 1*y", xy);
    CHECK((g * g).str() == SparsePolynomial::parse("1*x^2 + 2*x*y + 1*y^2", xy).str());
    CHECK((f + g - g) == f);
    CHECK((Rational(3) * g).str() == SparsePolynomial::parse("3*x + 3*y", xy).str());
    CHECK((g - g).is_zero());

    // exact evaluation in both coefficient domains
    std::vector<Rational> pt = {Rational(2), Rational(-4)};
    CHECK(f.evaluate<Rational>(pt) == Rational(2) * 4 * (-4) - Rational(3) * 2 + Rational(1, 2) * (-4) - 5);
    CHECK(f.evaluate<double>({2.0, -4.0}) == Catch::Approx(-45.0));

    // derivative in each variable
    CHECK(f.derivative(0).str() == SparsePolynomial::parse("4*x*y - 3", xy).str());
    CHECK(f.derivative(1).str() == SparsePolynomial::parse("2*x^2 + 1/2", xy).str());

    // primitive normalization clears denominators and content, leading sign positive
    SparsePolynomial h = SparsePolynomial::parse("-2/3*x^2 - 4/3*y", xy);
    CHECK(h.primitive_normalized().str() == SparsePolynomial::parse("1*x^2 + 2*y", xy).str());

    CHECK_THROWS_AS(SparsePolynomial::parse("x + 1", xy), ParseError);   // bare variable term
    CHECK_THROWS_AS(SparsePolynomial::parse("1*z", xy), ParseError);     // unknown variable
    CHECK_THROWS_AS(SparsePolynomial::parse("1.5*x", xy), ParseError);   // decimals rejected
}

TEST_CASE("homogenization pads every term to the total degree", "[polynomial]") {
    std::vector<std::string> xy = {"x", "y"};
    SparsePolynomial f = SparsePolynomial::parse("1*x^3 + 2*x*y - 7", xy);
    SparsePolynomial F = f.homogenize("w");
    CHECK(F.total_degree() == 3);
    CHECK(F.str() == SparsePolynomial::parse("1*x^3 + 2*w*x*y - 7*w^3", {"w", "x", "y"}).str());
    // setting the new variable to 1 recovers the original
    std::vector<Rational> pt = {Rational(1), Rational(5), Rational(-3)};
    CHECK(F.evaluate<Rational>(pt) == f.evaluate<Rational>({Rational(5), Rational(-3)}));
}

TEST_CASE("circuit polynomial routes agree and vanish on reciprocals", "[polynomial]") {
    std::mt19937 rng(404);
    std::uniform_int_distribution<long> dist(-6, 6);
    int tested = 0;
    while (tested < 8) {
        RationalMatrix L(3, 6);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 6; ++j) L.at(i, j) = Rational(dist(rng));
        if (rank(L) != 3) continue;
        ++tested;
        Matroid m = matroid_from_matrix(L);
        for (const auto& C : circuits(m)) {
            SparsePolynomial f1 = circuit_polynomial(L, C).primitive_normalized();
            SparsePolynomial f2 = circuit_polynomial_determinantal(L, C);
            CHECK(f1.str() == f2.str());

            // on the reciprocal of a row-space point the form vanishes exactly
            RationalVector w = {Rational(dist(rng)), Rational(dist(rng)), Rational(dist(rng))};
            RationalVector u(6, Rational(0));
            for (std::size_t j = 0; j < 6; ++j)
                for (std::size_t i = 0; i < 3; ++i) u[j] += L.at(i, j) * w[i];
            bool nonzero = true;
            for (const auto& q : u) nonzero = nonzero && !q.is_zero();
            if (!nonzero) continue;
            std::vector<Rational> recip(6);
            for (std::size_t j = 0; j < 6; ++j) recip[j] = Rational(1) / u[j];
            CHECK(f1.evaluate<Rational>(recip).is_zero());
        }
    }
}

TEST_CASE("hexagon chart polynomials match the closed forms", "[polynomial]") {
    LPInstance hex = builtin_example("hexagon");
    auto gens = curve_ideal_generators(hex, Side::Primal);
    SparsePolynomial quintic(gens[0].variables());
    int nonlinear = 0;
    for (const auto& g : gens)
        if (g.total_degree() > 1) {
            quintic = g;
            ++nonlinear;
        }
    REQUIRE(nonlinear == 1);
    SparsePolynomial f = eliminate_linear(quintic, chart_substitution(hex, 0, 1)).primitive_normalized();
    SparsePolynomial disp = SparsePolynomial::parse(
        "3*x1^4*x2 + 5*x1^3*x2^2 - 2*x1*x2^4 - 3*x1^4 - 22*x1^3*x2 - 15*x1^2*x2^2 + 8*x1*x2^3 "
        "+ 2*x2^4 + 18*x1^3 + 45*x1^2*x2 - 12*x2^3 - 33*x1^2 - 22*x1*x2 + 22*x2^2 + 18*x1 - 12*x2",
        {"x1", "x2"}).primitive_normalized();
    CHECK(f.str() == disp.str());

    // second cost vector: the chart polynomial factors with a linear piece
    LPInstance hex2 = builtin_example("hexagon-straight");
    auto gens2 = curve_ideal_generators(hex2, Side::Primal);
    SparsePolynomial q2(gens2[0].variables());
    for (const auto& g : gens2)
        if (g.total_degree() > 1) q2 = g;
    SparsePolynomial f2 = eliminate_linear(q2, chart_substitution(hex2, 0, 1)).primitive_normalized();
    SparsePolynomial lin = SparsePolynomial::parse("1*x2 - 1", {"x1", "x2"});
    SparsePolynomial quart = SparsePolynomial::parse(
        "2*x1^4 + 4*x1^3*x2 + 1*x1^2*x2^2 - 1*x1*x2^3 - 12*x1^3 - 14*x1^2*x2 + 1*x1*x2^2 "
        "+ 1*x2^3 + 22*x1^2 + 10*x1*x2 - 5*x2^2 - 12*x1 + 6*x2",
        {"x1", "x2"});
    CHECK(f2.str() == (lin * quart).primitive_normalized().str());
}

TEST_CASE("planar polynomial of the snake example", "[polynomial]") {
    LPInstance dtz = builtin_example("dtz-snake");
    SparsePolynomial C = planar_curve_poly(dtz.A, dtz.b, dtz.c);
    // the right-hand side is parallel to the first column, so that line drops
    // out of the product and the curve has degree n - 2 = 4
    CHECK(C.total_degree() == 4);
    SparsePolynomial quartic = SparsePolynomial::parse(kSnakeQuartic, {"y1", "y2"});
    CHECK(C.primitive_normalized().str() == quartic.primitive_normalized().str());

    SparsePolynomial lin({"y1", "y2"});
    lin.add_term({0, 1}, Rational(1));
    lin.add_term({0, 0}, Rational(-1));
    CHECK(C.primitive_normalized().str() != (lin * quartic).primitive_normalized().str());
}

TEST_CASE("right-hand side parallel to a column drops the planar degree", "[polynomial]") {
    std::mt19937 rng(19);
    std::uniform_int_distribution<long> dist(-5, 5);
    int done = 0;
    while (done < 5) {
        std::size_t n = 5;
        RationalMatrix A(2, n);
        RationalVector b(2), c(n);
        for (std::size_t j = 0; j < n; ++j) {
            A.at(0, j) = Rational(dist(rng));
            A.at(1, j) = Rational(dist(rng));
            c[j] = Rational(dist(rng));
        }
        if (rank(A) != 2) continue;
        if (A.at(0, 0).is_zero() && A.at(1, 0).is_zero()) continue;
        b[0] = Rational(3) * A.at(0, 0);
        b[1] = Rational(3) * A.at(1, 0);
        // all other weights w_j = b1 a_2j - b2 a_1j must be nonzero for a clean count
        bool ok = true;
        for (std::size_t j = 1; j < n; ++j)
            if ((b[0] * A.at(1, j) - b[1] * A.at(0, j)).is_zero()) ok = false;
        if (!ok) continue;
        SparsePolynomial C = planar_curve_poly(A, b, c);
        if (C.is_zero()) continue; // degenerate cost draw
        CHECK(C.total_degree() == static_cast<int>(n) - 2);
        ++done;
    }
}

TEST_CASE("sturm chains count real roots exactly", "[polynomial]") {
    // p = (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
    UniPoly p = {Rational(-6), Rational(11), Rational(-6), Rational(1)};
    CHECK(count_distinct_real_roots(p) == 3);
    CHECK(count_real_roots_with_multiplicity(p) == 3);

    UniPoly q = {Rational(1), Rational(0), Rational(1)}; // x^2 + 1
    CHECK(count_distinct_real_roots(q) == 0);
    CHECK(count_real_roots_with_multiplicity(q) == 0);

    // (x-1)^2 * x = x^3 - 2x^2 + x
    UniPoly r = {Rational(0), Rational(1), Rational(-2), Rational(1)};
    CHECK(count_distinct_real_roots(r) == 2);
    CHECK(count_real_roots_with_multiplicity(r) == 3);
    auto sq = squarefree_decomposition(r);
    long long mult_total = 0;
    for (const auto& [factor, mult] : sq) mult_total += mult * uni_degree(factor);
    CHECK(mult_total == 3);

    // interval counts are additive when the cut point is not a root
    Rational a(0), mid(5, 2), bnd(10);
    CHECK(count_distinct_real_roots_in(p, a, bnd) == 3);
    CHECK(count_distinct_real_roots_in(p, a, mid) + count_distinct_real_roots_in(p, mid, bnd) == 3);
    CHECK(count_distinct_real_roots_in(p, Rational(4), bnd) == 0);
}

TEST_CASE("restricted pencils through the distinguished point are totally real", "[polynomial]") {
    auto run_pencil = [](const LPInstance& ins, int lines, unsigned seed) {
        SparsePolynomial C = planar_curve_poly(ins.A, ins.b, ins.c);
        RationalVector Q = {-ins.b[1], ins.b[0]};
        std::mt19937 rng(seed);
        for (int t = 0; t < lines; ++t) {
            RationalVector P = {Rational(static_cast<long>(rng() % 2000)) / 1000 - 1,
                                Rational(static_cast<long>(rng() % 2000)) / 1000 - 1};
            LineRestrictionCount lc = line_restriction_real_roots(C, P, Q);
            CHECK(lc.total_degree_roots > 0);
            CHECK(lc.real_with_multiplicity == lc.total_degree_roots);
        }
    };
    run_pencil(builtin_example("dtz-snake"), 20, 5);
    LPInstance hep = heptagon();
    CHECK(planar_curve_poly(hep.A, hep.b, hep.c).total_degree() == 6);
    run_pencil(hep, 20, 6);
}

TEST_CASE("directional derivative of the line product gives the planar polynomial", "[polynomial]") {
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
    CHECK(good == total);
}

TEST_CASE("linear elimination substitutes exactly", "[polynomial]") {
    std::vector<std::string> xyz = {"x1", "x2", "x3"};
    SparsePolynomial f = SparsePolynomial::parse("1*x1*x2 + 1*x3^2", xyz);
    std::map<std::string, SparsePolynomial> subs;
    subs["x3"] = SparsePolynomial::parse("1 + 2*x1", {"x1", "x2"});
    SparsePolynomial g = eliminate_linear(f, subs);
    CHECK(g.str() == SparsePolynomial::parse("4*x1^2 + 1*x1*x2 + 4*x1 + 1", {"x1", "x2"}).str());
}

TEST_CASE("degenerate cost has no curve ideal", "[polynomial]") {
    RationalMatrix I2 = RationalMatrix::identity(2);
    LPInstance id2(I2, {Rational(1), Rational(1)}, {Rational(1), Rational(1)}, "identity2");
    CHECK_THROWS_AS(curve_ideal_generators(id2, Side::Primal), DegenerateCost);
}
