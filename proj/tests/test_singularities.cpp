#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "curves/arrangements.hpp"
#include "curves/singularities.hpp"
#include "curves/syzygy.hpp"

using namespace curves;

namespace {
const HomPoly& E() { return nodal_catalog().cubic; }
const HomPoly& F() { return fermat_catalog().cubic; }
HomPoly fermat_conic(int set, int slot) {
    return fermat_catalog().conics.at({CurveKind::Fermat, set, slot});
}
const ProjPoint kNode{FieldK(0), FieldK(0), FieldK(1)};
} // namespace

TEST_CASE("singular points") {
    SingularLocus le = singular_points(E());
    CHECK(le.points == std::vector<ProjPoint>{kNode});
    CHECK(le.residual_degree == 0);

    CHECK(singular_points(F()).points.empty());

    HomPoly eq1 = build({E(), nodal_catalog().conics[0]}).product;
    SingularLocus l1 = singular_points(eq1);
    ProjPoint s1(FieldK(1), FieldK(1), FieldK(2));
    CHECK(l1.points == std::vector<ProjPoint>{kNode, s1});
    CHECK(l1.residual_degree == 0);
}

TEST_CASE("local tjurina and milnor on basic germs") {
    CHECK(local_tjurina(E(), kNode) == 1);
    CHECK(local_milnor(E(), kNode) == 1);

    HomPoly eq1 = build({E(), nodal_catalog().conics[0]}).product;
    ProjPoint s1(FieldK(1), FieldK(1), FieldK(2));
    CHECK(local_tjurina(eq1, s1) == 11);
    CHECK(local_milnor(eq1, s1) == 11);

    // smooth points contribute nothing
    CHECK(local_tjurina(F(), ProjPoint(FieldK(1), FieldK(-1), FieldK(0))) == 0);

    // non-isolated germ is rejected
    CHECK_THROWS_AS(local_tjurina(HomPoly::parse("x^2*y"), kNode), SingularityError);
}

TEST_CASE("classification of census singularities") {
    SingularityReport node = classify(E(), kNode);
    CHECK(node.type == SingType::A_k);
    CHECK(node.k == 1);
    CHECK(node.multiplicity == 2);

    HomPoly eq1 = build({E(), nodal_catalog().conics[0]}).product;
    ProjPoint s1(FieldK(1), FieldK(1), FieldK(2));
    SingularityReport a11 = classify(eq1, s1);
    CHECK(a11.type == SingType::A_k);
    CHECK(a11.k == 11);
    CHECK(a11.local_tjurina == 11);
    CHECK(a11.local_milnor == 11);

    CHECK_THROWS_AS(classify(F(), ProjPoint(FieldK(1), FieldK(-1), FieldK(0))),
                    SingularityError);
}

TEST_CASE("tacnode of a same-set conic pair") {
    HomPoly pair = build({fermat_conic(1, 0), fermat_conic(1, 1)}).product;
    const ProjPoint& p1 = fermat_catalog().base_points[0];
    SingularityReport tac = classify(pair, p1);
    CHECK(tac.type == SingType::A_k);
    CHECK(tac.k == 3);
    CHECK(tac.local_milnor == 3);

    // census of the pair alone: the two extra nodes live in a quadratic
    // extension, so only the tacnode is K-rational and the residual
    // accounts for the conjugate pair of slices
    SingularLocus loc = singular_points(pair);
    CHECK(loc.points == std::vector<ProjPoint>{p1});
    CHECK(loc.residual_degree == 2);
    CHECK(local_tjurina(pair, p1) == 3);
    CHECK(total_tjurina(pair) == 5); // tacnode + the two non-K-rational nodes
}

TEST_CASE("triple point of the same-set conic arrangement") {
    HomPoly f = build({F(), fermat_conic(1, 0), fermat_conic(1, 1), fermat_conic(1, 2)})
                    .product;
    const ProjPoint& p1 = fermat_catalog().base_points[0];
    SingularityReport rep = classify(f, p1);
    CHECK(rep.local_tjurina == 10);
    CHECK(rep.local_milnor == 10);
    CHECK(rep.multiplicity == 3);
    CHECK(rep.type == SingType::J_2_0);
    CHECK(rep.type_str() == "J_2_0");
}

TEST_CASE("a9 point of the nearly free example") {
    ProjPoint p(FieldK(2), FieldK(4), FieldK(9));
    HomPoly q = HomPoly::parse(
        "2961*x^2 - 2664*x*y + 2394*y^2 - 1104*x*z - 321*y*z + 32*z^2");
    HomPoly f = build({E(), nodal_catalog().conics[0], q}).product;
    SingularityReport rep = classify(f, p);
    CHECK(rep.type == SingType::A_k);
    CHECK(rep.k == 9);
    CHECK(rep.local_tjurina == 9);
}

TEST_CASE("census additivity against the global tjurina number") {
    HomPoly eq1 = build({E(), nodal_catalog().conics[0]}).product;
    SingularLocus loc = singular_points(eq1);
    int total = 0;
    for (const ProjPoint& p : loc.points) total += local_tjurina(eq1, p);
    CHECK(total == total_tjurina(eq1));
    CHECK(total == 12);
}

TEST_CASE("equivariance of local invariants") {
    HomPoly f = build({F(), fermat_conic(1, 0)}).product;
    const ProjPoint& s = fermat_catalog().tangency_point.at({CurveKind::Fermat, 1, 0});
    int tau = local_tjurina(f, s);
    CHECK(tau == 11);
    const auto& gp = group_elements(GroupKind::Gprime);
    const LinearChange& t = gp[5];
    HomPoly ft = f.substitute(t.inverse());
    CHECK(local_tjurina(ft, t.apply(s)) == tau);
}

TEST_CASE("conic pair types") {
    PairIntersectionType same = conic_pair_type(fermat_conic(1, 0), fermat_conic(1, 1));
    CHECK(same.multiplicity_pattern == std::vector<int>{2, 1, 1});
    CHECK(same.summary == PairSummary::TacnodePlusTwoNodes);

    PairIntersectionType cross = conic_pair_type(fermat_conic(1, 0), fermat_conic(2, 0));
    CHECK(cross.multiplicity_pattern == std::vector<int>{1, 1, 1, 1});
    CHECK(cross.summary == PairSummary::FourNodes);

    PairIntersectionType nodal =
        conic_pair_type(nodal_catalog().conics[0], nodal_catalog().conics[1]);
    CHECK(nodal.multiplicity_pattern == std::vector<int>{1, 1, 1, 1});
    CHECK(nodal.summary == PairSummary::FourNodes);

    CHECK_THROWS_AS(conic_pair_type(fermat_conic(1, 0), fermat_conic(1, 0)),
                    SingularityError);
    CHECK_THROWS_AS(conic_pair_type(E(), fermat_conic(1, 0)), SingularityError);
}

TEST_CASE("report serialization") {
    SingularityReport rep = classify(E(), kNode);
    auto j = nlohmann::json::parse(rep.to_json());
    CHECK(j["point"] == kNode.str());
    CHECK(j["tjurina"] == 1);
    CHECK(j["milnor"] == 1);
    CHECK(j["multiplicity"] == 2);
    CHECK(j["type"] == "A_1");
}
