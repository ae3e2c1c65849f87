#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "curves/arrangements.hpp"
#include "curves/cayley.hpp"

using namespace curves;

namespace {
const HomPoly& E() { return nodal_catalog().cubic; }
const HomPoly& F() { return fermat_catalog().cubic; }

LinearChange g1() { return LinearChange::diagonal(FieldK::omega(), FieldK(1), FieldK(1)); }
LinearChange g2() { return LinearChange::diagonal(FieldK(1), FieldK::omega(), FieldK(1)); }

HomPoly act(const HomPoly& f, const LinearChange& t) {
    return f.substitute(t.inverse()).normalize_up_to_scalar();
}
} // namespace

TEST_CASE("nodal catalog") {
    const NodalCatalog& cat = nodal_catalog();
    CHECK(cat.cubic == HomPoly::parse("x^3 + y^3 - x*y*z"));
    CHECK(cat.conics[1].proportional_to(
        HomPoly::parse("21*(w*x^2 + w^2*y^2) - 22*x*y - 6*(w^2*x + w*y)*z + z^2")));
    CHECK(cat.conics[2].proportional_to(
        HomPoly::parse("21*(w^2*x^2 + w*y^2) - 22*x*y - 6*(w*x + w^2*y)*z + z^2")));
    for (int i = 0; i < 3; ++i) {
        CHECK(contact_order(cat.cubic, cat.conics[i], cat.sextactic[i]) == 6);
        CHECK(cat.conics[i].proportional_to(osculating_conic(cat.cubic, cat.sextactic[i])));
    }
    // the whole catalog is one orbit under (x:y:z) -> (wx : w^2 y : z)
    LinearChange sym = LinearChange::diagonal(FieldK::omega(), FieldK::omega() * FieldK::omega(),
                                              FieldK(1));
    CHECK(act(cat.cubic, sym) == cat.cubic.normalize_up_to_scalar());
    CHECK(act(cat.conics[0], sym).proportional_to(cat.conics[1]));
    CHECK(act(cat.conics[1], sym).proportional_to(cat.conics[2]));
    CHECK(sym.apply(cat.sextactic[0]) == cat.sextactic[1]);
}

TEST_CASE("group orders and invariance") {
    const auto& g = group_elements(GroupKind::G);
    const auto& gp = group_elements(GroupKind::Gprime);
    const auto& gpp = group_elements(GroupKind::Gsecond);
    CHECK(g.size() == 9);
    CHECK(gp.size() == 27);
    CHECK(gpp.size() == 54);

    // g1 g2 scales x and y by omega
    ProjPoint generic(FieldK(5), FieldK(7), FieldK(11));
    FieldK w = FieldK::omega();
    CHECK((g1() * g2()).apply(generic) ==
          ProjPoint(w * FieldK(5), w * FieldK(7), FieldK(11)));

    // chain of subgroups, every element fixing the Fermat cubic
    std::set<LinearChange> gpset(gp.begin(), gp.end());
    for (const LinearChange& t : g) CHECK(gpset.count(t) == 1);
    std::set<LinearChange> gppset(gpp.begin(), gpp.end());
    for (const LinearChange& t : gp) CHECK(gppset.count(t) == 1);
    HomPoly fn = F().normalize_up_to_scalar();
    for (const LinearChange& t : gpp) CHECK(act(F(), t) == fn);
}

TEST_CASE("orbits of base objects") {
    const FermatCatalog& cat = fermat_catalog();
    const auto& gp = group_elements(GroupKind::Gprime);

    std::set<ProjPoint> base(cat.base_points.begin(), cat.base_points.end());
    CHECK(base.size() == 9);
    CHECK(orbit(cat.base_points[0], gp) == base);

    FieldK a = FieldK::alpha();
    ProjPoint s1(FieldK(1), FieldK(1), -a);
    std::set<ProjPoint> sext(cat.sextactic.begin(), cat.sextactic.end());
    CHECK(sext.size() == 27);
    CHECK(orbit(s1, gp) == sext);

    // fiber over p1: orbit of the seed conic under the stabilizer <g1 g2>
    std::vector<LinearChange> stab;
    for (const LinearChange& t : gp)
        if (t.apply(cat.base_points[0]) == cat.base_points[0]) stab.push_back(t);
    CHECK(stab.size() == 3);
    HomPoly q1 = HomPoly::parse("(x - y)^2 - z*(a^2*x + a^2*y + 2*a*z)");
    std::set<HomPoly> fiber1;
    for (int s = 0; s < 3; ++s) fiber1.insert(cat.conics.at({CurveKind::Fermat, 1, s}));
    CHECK(orbit(q1, stab) == fiber1);

    // its tangency points are (1 : 1 : -beta) for the three cube roots of 2
    FieldK w = FieldK::omega();
    std::set<ProjPoint> tang;
    for (int s = 0; s < 3; ++s) tang.insert(cat.tangency_point.at({CurveKind::Fermat, 1, s}));
    std::set<ProjPoint> expected{ProjPoint(FieldK(1), FieldK(1), -a),
                                 ProjPoint(FieldK(1), FieldK(1), -w * a),
                                 ProjPoint(FieldK(1), FieldK(1), -w * w * a)};
    CHECK(tang == expected);
}

TEST_CASE("images of the seed conic") {
    HomPoly q1 = HomPoly::parse("(x - y)^2 - z*(a^2*x + a^2*y + 2*a*z)");
    // the transposition (x:y:z) -> (x:z:y) carries the tangency point to (1:-a:1)
    LinearChange swap_yz = LinearChange::permutation(0, 2, 1);
    HomPoly qs2 = act(q1, swap_yz);
    CHECK(qs2.proportional_to(HomPoly::parse("(x - z)^2 - y*(a^2*x + a^2*z + 2*a*y)")));
    FieldK a = FieldK::alpha();
    CHECK(contact_order(F(), qs2, ProjPoint(FieldK(1), -a, FieldK(1))) == 6);

    // the diagonal element g2 carries it to (1:w:-a)
    HomPoly qs3 = act(q1, g2());
    CHECK(qs3.proportional_to(
        HomPoly::parse("(x - w^2*y)^2 - z*(a^2*x + a^2*w^2*y + 2*a*z)")));
    FieldK w = FieldK::omega();
    ProjPoint s3(FieldK(1), w, -a);
    CHECK(contact_order(F(), qs3, s3) == 6);

    // both appear verbatim in the catalog
    const FermatCatalog& cat = fermat_catalog();
    std::set<HomPoly> all;
    for (const auto& [id, q] : cat.conics) all.insert(q);
    CHECK(all.size() == 27);
    CHECK(all.count(qs2) == 1);
    CHECK(all.count(qs3) == 1);
}

TEST_CASE("fermat catalog consistency") {
    const FermatCatalog& cat = fermat_catalog();
    REQUIRE(cat.conics.size() == 27);
    REQUIRE(cat.tangency_point.size() == 27);
    std::set<ProjPoint> sext(cat.sextactic.begin(), cat.sextactic.end());
    for (const auto& [id, q] : cat.conics) {
        const ProjPoint& p = cat.tangency_point.at(id);
        CHECK(sext.count(p) == 1);
        CHECK(cat.cubic.evaluate(p).is_zero());
        CHECK(q.evaluate(p).is_zero());
        CHECK(q.proportional_to(osculating_conic(cat.cubic, p)));
    }
}

TEST_CASE("free action and pair orbits") {
    const auto& gp = group_elements(GroupKind::Gprime);
    HomPoly q1 = HomPoly::parse("(x - y)^2 - z*(a^2*x + a^2*y + 2*a*z)");
    CHECK(orbit(q1, gp).size() == 27); // orbit size = group order: the action is free

    auto reps = pair_orbits();
    REQUIRE(reps.size() == 13);
    CHECK(std::is_sorted(reps.begin(), reps.end()));
    auto part = partition();
    int same_fiber = 0;
    for (const auto& [a, b] : reps) {
        CHECK(!(a == b));
        CHECK(a.set_index == 1); // every orbit meets the fiber over p1
        if (part.at(a) == part.at(b)) ++same_fiber;
    }
    CHECK(same_fiber == 1);
    ConicId p10{CurveKind::Fermat, 1, 0}, p11{CurveKind::Fermat, 1, 1};
    CHECK(reps.front() == std::make_pair(p10, p11));
}

TEST_CASE("partition") {
    auto part = partition();
    REQUIRE(part.size() == 27);
    std::array<int, 10> fiber{};
    for (const auto& [id, j] : part) {
        CHECK(j == id.set_index);
        ++fiber[j];
    }
    for (int j = 1; j <= 9; ++j) CHECK(fiber[j] == 3);
}

TEST_CASE("coolidge count") {
    CHECK(coolidge_count(3, 1, 0, 0) == 3);  // nodal cubic
    CHECK(coolidge_count(3, 0, 0, 1) == 27); // smooth cubic
    CHECK(coolidge_count(3, 0, 1, 0) == 0);  // cuspidal cubic
}

TEST_CASE("build") {
    const NodalCatalog& nc = nodal_catalog();
    Arrangement a1 = build({nc.cubic, nc.conics[0]});
    CHECK(a1.product.degree() == 5);
    CHECK(a1.components.size() == 2);
    CHECK(a1.product == nc.cubic * nc.conics[0]);

    const FermatCatalog& fc = fermat_catalog();
    Arrangement a2 = build({fc.cubic, fc.conics.at({CurveKind::Fermat, 1, 0}),
                            fc.conics.at({CurveKind::Fermat, 1, 1}),
                            fc.conics.at({CurveKind::Fermat, 1, 2})});
    CHECK(a2.product.degree() == 9);

    CHECK_THROWS_AS(build({nc.cubic, nc.cubic}), ArrangementError);
    CHECK_THROWS_AS(build({HomPoly::parse("x^2*y")}), ArrangementError);
    CHECK_THROWS_AS(build({nc.cubic, nc.cubic * nc.conics[0]}), ArrangementError);
    CHECK_THROWS_AS(build({}), ArrangementError);
    CHECK_THROWS_AS(build({HomPoly::constant(FieldK(3))}), ArrangementError);
}
