#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "curves/cayley.hpp"

using namespace curves;

namespace {
const HomPoly E = HomPoly::parse("x^3 + y^3 - x*y*z");
const HomPoly F = HomPoly::parse("x^3 + y^3 + z^3");

// K-rational points on the nodal cubic from the pencil of lines through the
// node: (1 : t : (1 + t^3)/t)
ProjPoint nodal_point(const Rational& t) {
    FieldK tk(t);
    return ProjPoint(FieldK(1), tk, (FieldK(1) + tk * tk * tk) * tk.inv());
}
} // namespace

TEST_CASE("hessian") {
    CHECK(hessian(F) == HomPoly::parse("216*x*y*z"));
    CHECK(hessian(HomPoly::parse("x^2 + y^2 + z^2")) == HomPoly::constant(FieldK(8)));
    CHECK(hessian(E) == HomPoly::parse("0 - 2*(3*x^3 + 3*y^3 + x*y*z)"));
    CHECK(hessian(E).degree() == 3);
}

TEST_CASE("omega and psi structural cases") {
    HomPoly conic = HomPoly::parse("x^2 + 3*y^2 - z^2 + x*y");
    HomPoly hc = hessian(conic);
    CHECK(hc.degree() == 0);
    CHECK(omega(conic, hc).is_zero());
    CHECK(psi(conic, hc).is_zero());

    // degree bookkeeping on a cubic: omega deg 5d-12 = 3, psi deg 8d-18 = 6
    HomPoly he = hessian(E);
    CHECK(omega(E, he).degree() == 3);
    CHECK(psi(E, he).degree() == 6);
    // Fermat: the Hessian 216xyz has zero diagonal second partials and the
    // adjugate of Hess(F) has zero off-diagonal, so the pairing vanishes
    CHECK(omega(F, hessian(F)).is_zero());
    CHECK(psi(F, hessian(F)).degree() == 6);
    HomPoly xyz = HomPoly::parse("x*y*z");
    HomPoly hx = hessian(xyz);
    HomPoly om = omega(xyz, hx);
    if (!om.is_zero()) CHECK(om.degree() == 3);
}

TEST_CASE("cayley data invariant") {
    CayleyData c = CayleyData::compute(E);
    CHECK(c.h == hessian(E));
    CHECK(c.lambda == c.omega.scale(FieldK(-3)) * c.h + c.psi.scale(FieldK(4)));
    CHECK(c.lambda.degree() == 6);
}

TEST_CASE("second hessian") {
    HomPoly h2f = second_hessian(F);
    CHECK(h2f.degree() == 9);
    HomPoly target = HomPoly::parse("(x^3 - y^3)*(y^3 - z^3)*(x^3 - z^3)");
    CHECK(h2f.proportional_to(target));

    HomPoly h2e = second_hessian(E);
    CHECK(h2e.degree() == 9);
    CHECK(h2e.evaluate(FieldK(1), FieldK(1), FieldK(2)).is_zero());
}

TEST_CASE("branch series satisfies the curve") {
    for (const ProjPoint& p : {ProjPoint(FieldK(1), FieldK(1), FieldK(2)),
                               ProjPoint(FieldK(2), FieldK(4), FieldK(9)), nodal_point(3)}) {
        BranchSeries b = branch_series(E, p, 12);
        // the invariant: plugging the series back in vanishes through order N
        CHECK(contact_order(E, E, p) == kContactInfinity);
        CHECK(b.order == 12);
        int uvar = (b.chart == 0) ? 1 : 0;
        int vvar = (b.chart == 2) ? 1 : 2;
        CHECK(b.u[0] == p[uvar] * p[b.chart].inv());
        CHECK(b.v[0] == p[vvar] * p[b.chart].inv());
    }
    CHECK_THROWS_AS(branch_series(E, ProjPoint(FieldK(1), FieldK(1), FieldK(1)), 8),
                    PointNotOnCurve);
    // the node of E
    CHECK_THROWS_AS(branch_series(E, ProjPoint(FieldK(0), FieldK(0), FieldK(1)), 8),
                    SingularPointError);
}

TEST_CASE("contact orders from the paper") {
    ProjPoint s1(FieldK(1), FieldK(1), FieldK(2));
    HomPoly q1 = HomPoly::parse("21*(x^2 + y^2) - 22*x*y - 6*(x + y)*z + z^2");
    CHECK(contact_order(E, q1, s1) == 6);

    ProjPoint p(FieldK(2), FieldK(4), FieldK(9));
    CHECK(contact_order(E, osculating_conic(E, p), p) == 5);

    // inflection of the Fermat cubic at (1:-1:0); tangent line x + y = 0
    ProjPoint infl(FieldK(1), FieldK(-1), FieldK(0));
    CHECK(hessian(F).evaluate(infl).is_zero());
    CHECK(contact_order(F, HomPoly::parse("x + y"), infl) == 3);

    // shared component: infinite contact
    HomPoly conic = HomPoly::parse("x^2 - y*z");
    ProjPoint q(FieldK(1), FieldK(1), FieldK(1));
    CHECK(contact_order(conic, conic * HomPoly::parse("x + y"), q) == kContactInfinity);

    // transverse intersection
    CHECK(contact_order(E, HomPoly::parse("x - y"), s1) == 1);
}

TEST_CASE("osculating conics match the paper") {
    ProjPoint s1(FieldK(1), FieldK(1), FieldK(2));
    CHECK(osculating_conic(E, s1).proportional_to(
        HomPoly::parse("21*(x^2 + y^2) - 22*x*y - 6*(x + y)*z + z^2")));

    ProjPoint p(FieldK(2), FieldK(4), FieldK(9));
    CHECK(osculating_conic(E, p).proportional_to(
        HomPoly::parse("2961*x^2 - 2664*x*y + 2394*y^2 - 1104*x*z - 321*y*z + 32*z^2")));

    ProjPoint pf(FieldK(1), FieldK(1), -FieldK::alpha());
    CHECK(osculating_conic(F, pf).proportional_to(
        HomPoly::parse("(x - y)^2 - z*(a^2*x + a^2*y + 2*a*z)")));
}

TEST_CASE("osculating conic error conditions") {
    CHECK_THROWS_AS(osculating_conic(E, ProjPoint(FieldK(1), FieldK(2), FieldK(3))),
                    PointNotOnCurve);
    CHECK_THROWS_AS(osculating_conic(E, ProjPoint(FieldK(0), FieldK(0), FieldK(1))),
                    SingularPointError);
    CHECK_THROWS_AS(osculating_conic(F, ProjPoint(FieldK(1), FieldK(-1), FieldK(0))),
                    InflectionPointError);
    CHECK_THROWS_AS(osculating_conic_via_series(F, ProjPoint(FieldK(1), FieldK(-1), FieldK(0))),
                    InflectionPointError);
}

TEST_CASE("closed formula agrees with the series oracle at spread-out points") {
    // ten K-rational smooth non-inflection points across E and F
    std::vector<std::pair<const HomPoly*, ProjPoint>> samples;
    for (const Rational& t :
         {Rational(3), Rational(2), Rational(-2), Rational(1, 2), Rational(5), Rational(-1, 3)})
        samples.emplace_back(&E, nodal_point(t));
    FieldK w = FieldK::omega(), a = FieldK::alpha();
    samples.emplace_back(&F, ProjPoint(FieldK(1), FieldK(1), -a));
    samples.emplace_back(&F, ProjPoint(w, FieldK(1), -a));
    samples.emplace_back(&F, ProjPoint(FieldK(1), w, -a));
    samples.emplace_back(&F, ProjPoint(w, w, -a));
    REQUIRE(samples.size() == 10);
    for (const auto& [f, p] : samples) {
        HomPoly closed = osculating_conic(*f, p);
        HomPoly series = osculating_conic_via_series(*f, p);
        CHECK(closed.proportional_to(series));
        CHECK(contact_order(*f, closed, p) >= 5);
    }
}

TEST_CASE("sextactic points of the nodal cubic") {
    auto pts = sextactic_points(E);
    REQUIRE(pts.size() == 3);
    FieldK w = FieldK::omega(), w2 = -FieldK(1) - FieldK::omega();
    std::set<ProjPoint> expected{ProjPoint(FieldK(1), FieldK(1), FieldK(2)),
                                 ProjPoint(w, w2, FieldK(2)), ProjPoint(w2, w, FieldK(2))};
    std::set<ProjPoint> got(pts.begin(), pts.end());
    CHECK(got == expected);
    HomPoly h2 = second_hessian(E);
    for (const ProjPoint& p : pts) {
        CHECK(h2.evaluate(p).is_zero());
        CHECK(contact_order(E, osculating_conic(E, p), p) >= 6);
    }
}

TEST_CASE("sextactic points of the fermat cubic") {
    auto pts = sextactic_points(F);
    CHECK(pts.size() == 27);
    std::set<ProjPoint> got(pts.begin(), pts.end());
    CHECK(got.size() == 27);
    // contains the base point and is stable under the diagonal omega scalings
    FieldK w = FieldK::omega(), a = FieldK::alpha();
    CHECK(got.count(ProjPoint(FieldK(1), FieldK(1), -a)) == 1);
    for (const ProjPoint& p : got) {
        CHECK(got.count(ProjPoint(w * p[0], p[1], p[2])) == 1);
        CHECK(got.count(ProjPoint(p[0], w * p[1], p[2])) == 1);
        CHECK(F.evaluate(p).is_zero());
    }
}

TEST_CASE("cuspidal cubic has no sextactic points") {
    CHECK(sextactic_points(HomPoly::parse("x^3 - y^2*z")).empty());
}
