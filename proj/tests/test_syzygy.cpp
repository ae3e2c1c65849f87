#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "curves/arrangements.hpp"
#include "curves/syzygy.hpp"

using namespace curves;

namespace {
const HomPoly& E() { return nodal_catalog().cubic; }
const HomPoly& F() { return fermat_catalog().cubic; }
HomPoly EQ1() { return build({E(), nodal_catalog().conics[0]}).product; }
HomPoly FQ() {
    return build({F(), fermat_catalog().conics.at({CurveKind::Fermat, 1, 0})}).product;
}

bool is_syzygy(const HomPoly& f, const SyzygyTriple& t) {
    return (t.a * f.partial(Var::X) + t.b * f.partial(Var::Y) + t.c * f.partial(Var::Z))
        .is_zero();
}
} // namespace

TEST_CASE("graded kernel pieces") {
    CHECK(ar_dimension(F(), 1) == 0);
    CHECK(ar_dimension(E(), 1) == 0);

    // Koszul triples live in degree d - 1
    for (const HomPoly& f : {E(), F(), EQ1()}) {
        int d = f.degree();
        HomPoly fx = f.partial(Var::X), fy = f.partial(Var::Y), fz = f.partial(Var::Z);
        HomPoly zero(d - 1);
        CHECK(is_syzygy(f, {fy, -fx, zero}));
        CHECK(is_syzygy(f, {fz, zero, -fx}));
        CHECK(is_syzygy(f, {zero, fz, -fy}));
        CHECK(ar_dimension(f, d - 1) >= 2);
    }

    GradedKernelBasis b = ar_basis(EQ1(), 2);
    CHECK(static_cast<int>(b.basis.size()) == ar_dimension(EQ1(), 2));
    CHECK(!b.basis.empty());
    for (const SyzygyTriple& t : b.basis) {
        CHECK(is_syzygy(EQ1(), t));
        CHECK(t.a.degree() == 2);
    }
}

TEST_CASE("mdr") {
    CHECK(mdr(F()) == 2);
    CHECK(ar_dimension(EQ1(), 1) == 0);
    CHECK(ar_dimension(EQ1(), 2) >= 1);
    CHECK(mdr(EQ1()) == 2);
    CHECK(mdr(FQ()) == 2);
}

TEST_CASE("jacobian hilbert function and tjurina") {
    // smooth cubic: tau = 0 and the tail vanishes
    CHECK(jacobian_hilbert(F(), 4) == 0);
    CHECK(jacobian_hilbert(F(), 5) == 0);
    CHECK(total_tjurina(F()) == 0);

    // one node
    CHECK(total_tjurina(E()) == 1);
    CHECK(jacobian_hilbert(E(), 3) == 1);
    CHECK(jacobian_hilbert(E(), 4) == 1);

    // low degrees are untouched by the Jacobian ideal
    CHECK(jacobian_hilbert(EQ1(), 3) == dim_graded_piece(3));

    CHECK(total_tjurina(EQ1()) == 12);
    CHECK(jacobian_hilbert(EQ1(), 9) == 12);

    CHECK(total_tjurina(FQ()) == 11);

    // non-reduced input never stabilizes
    CHECK_THROWS_AS(total_tjurina(HomPoly::parse("x^2*y")), SyzygyError);
}

TEST_CASE("generator degrees") {
    CHECK(generator_degrees(EQ1()) == std::vector<int>{2, 2});
    CHECK(generator_degrees(FQ()) == std::vector<int>{2, 3, 3});
}

TEST_CASE("certify free: cubic with one osculating conic") {
    FreenessCertificate c = certify(EQ1());
    CHECK(c.verdict == Verdict::Free);
    CHECK(c.degree == 5);
    CHECK(c.mdr == 2);
    CHECK(c.tjurina == 12);
    CHECK(c.exponents == std::vector<int>{2, 2});
    CHECK(c.generator_degrees == std::vector<int>{2, 2});
    CHECK(c.criterion_lhs == 12);
    for (int h : c.hilbert_tail) CHECK(h == 12);

    // scalar invariance
    FreenessCertificate c3 = certify(EQ1().scale(FieldK(3)));
    CHECK(c3.verdict == c.verdict);
    CHECK(c3.tjurina == c.tjurina);
    CHECK(c3.exponents == c.exponents);
    CHECK(c3.generator_degrees == c.generator_degrees);
}

TEST_CASE("certify nearly free: fermat cubic with one conic") {
    FreenessCertificate c = certify(FQ());
    CHECK(c.verdict == Verdict::NearlyFree);
    CHECK(c.degree == 5);
    CHECK(c.mdr == 2);
    CHECK(c.tjurina == 11);
    CHECK(c.exponents == std::vector<int>{2, 3});
    CHECK(c.generator_degrees == std::vector<int>{2, 3, 3});
    CHECK(c.criterion_lhs == 12);
}

TEST_CASE("certify free: cubic with two osculating conics") {
    const NodalCatalog& cat = nodal_catalog();
    HomPoly f = build({cat.cubic, cat.conics[0], cat.conics[1]}).product;
    FreenessCertificate c = certify(f);
    CHECK(c.verdict == Verdict::Free);
    CHECK(c.degree == 7);
    CHECK(c.mdr == 3);
    CHECK(c.tjurina == 27);
    CHECK(c.exponents == std::vector<int>{3, 3});
}

TEST_CASE("certify smooth cubic") {
    FreenessCertificate c = certify(F());
    CHECK(c.verdict == Verdict::MSyzygy);
    CHECK(c.tjurina == 0);
    CHECK(c.mdr == 2);
    CHECK(c.exponents == c.generator_degrees);
}

TEST_CASE("certificate json shape") {
    FreenessCertificate c = certify(EQ1());
    auto j = nlohmann::json::parse(c.to_json());
    CHECK(j["degree"] == 5);
    CHECK(j["mdr"] == 2);
    CHECK(j["tjurina"] == 12);
    CHECK(j["verdict"] == "Free");
    CHECK(j["exponents"] == nlohmann::json({2, 2}));
    CHECK(j["generator_degrees"] == nlohmann::json({2, 2}));
    CHECK(j["hilbert_tail"].is_array());
}

TEST_CASE("never free scan") {
    NeverFreeScan s1 = never_free_scan(1);
    CHECK(s1.predicted_tjurina == 11);
    CHECK(s1.discriminant == -4);
    CHECK(!s1.free_possible);

    NeverFreeScan s2 = never_free_scan(2);
    CHECK(s2.predicted_tjurina == 26);
    CHECK(s2.discriminant == -4);
    CHECK(!s2.free_possible);

    NeverFreeScan s9 = never_free_scan(9);
    CHECK(s9.predicted_tjurina == 243);
    CHECK(s9.discriminant == -228);
    CHECK(!s9.free_possible);

    for (long k = 1; k <= 20; ++k) CHECK(never_free_scan(k).discriminant < 0);
}
