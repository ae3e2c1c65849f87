#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "curves/polyring.hpp"

using namespace curves;

namespace {
HomPoly random_homogeneous(std::mt19937_64& rng, int degree) {
    std::uniform_int_distribution<int> coef(-9, 9);
    HomPoly p(degree);
    for (const Monomial& m : monomials_of_degree(degree))
        p.add_term(m, FieldK(coef(rng)));
    if (p.is_zero()) p.add_term(Monomial{{degree, 0, 0}}, FieldK(1));
    return p;
}

FieldK random_field(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-5, 5);
    std::array<Rational, 6> c;
    for (auto& v : c) v = make_rational(coef(rng), 1);
    return FieldK(c);
}

LinearChange random_change(std::mt19937_64& rng) {
    for (;;) {
        std::array<std::array<FieldK, 3>, 3> m;
        for (auto& row : m)
            for (auto& v : row) v = random_field(rng);
        try {
            return LinearChange(m);
        } catch (const SingularMatrix&) {
        }
    }
}
} // namespace

TEST_CASE("basic arithmetic and ordering") {
    HomPoly x = HomPoly::var(Var::X), y = HomPoly::var(Var::Y);
    CHECK((x + y) * (x - y) == HomPoly::parse("x^2 - y^2"));
    CHECK(HomPoly::parse("x^2").degree() == 2);
    CHECK_THROWS_AS(x + HomPoly::parse("x^2"), DegreeMismatch);
    CHECK_THROWS(HomPoly::parse("x^2 + y")); // not homogeneous
    // grlex order, leading first: x^2 > xy > xz > y^2 > yz > z^2
    auto mons = monomials_of_degree(2);
    REQUIRE(mons.size() == 6);
    CHECK(mons[0] == Monomial{{2, 0, 0}});
    CHECK(mons[1] == Monomial{{1, 1, 0}});
    CHECK(mons[5] == Monomial{{0, 0, 2}});
    CHECK(dim_graded_piece(9) == 55);
}

TEST_CASE("conic expansion from its factored presentation") {
    // (x-y)^2 - z*(a^2 x + a^2 y + 2 a z)
    HomPoly q = HomPoly::parse("(x-y)^2 - z*(a^2*x + a^2*y + 2*a*z)");
    HomPoly expected = HomPoly::parse("x^2 - 2*x*y + y^2 - a^2*x*z - a^2*y*z - 2*a*z^2");
    CHECK(q == expected);
    // its siblings under coordinate moves
    HomPoly q11 = HomPoly::parse("(x-z)^2 - y*(a^2*x + a^2*z + 2*a*y)");
    CHECK(q.substitute(LinearChange::permutation(0, 2, 1)) == q11);
    HomPoly q111 = HomPoly::parse("(x-w^2*y)^2 - z*(a^2*x + a^2*w^2*y + 2*a*z)");
    LinearChange g2 = LinearChange::diagonal(FieldK(1), FieldK::omega(), FieldK(1));
    // substituting y -> w y twice sends q to q with y replaced by w^2 y
    CHECK(q.substitute(g2).substitute(g2) == q111);
}

TEST_CASE("partial derivatives") {
    HomPoly e = HomPoly::parse("x^3 + y^3 - x*y*z");
    CHECK(e.partial(Var::Z) == HomPoly::parse("0 - x*y"));
    CHECK(e.partial(Var::X) == HomPoly::parse("3*x^2 - y*z"));
    HomPoly q1 = HomPoly::parse("21*(x^2 + y^2) - 22*x*y - 6*(x + y)*z + z^2");
    CHECK(q1.partial(Var::Y) == HomPoly::parse("42*y - 22*x - 6*z"));
}

TEST_CASE("evaluation at projective points") {
    HomPoly e = HomPoly::parse("x^3 + y^3 - x*y*z");
    ProjPoint s1(FieldK(1), FieldK(1), FieldK(2));
    CHECK(e.evaluate(s1).is_zero());
    HomPoly q1 = HomPoly::parse("21*(x^2 + y^2) - 22*x*y - 6*(x + y)*z + z^2");
    CHECK(q1.evaluate(s1).is_zero());
    HomPoly f = HomPoly::parse("x^3 + y^3 + z^3");
    ProjPoint p(FieldK(1), FieldK(1), -FieldK::alpha());
    CHECK(f.evaluate(p).is_zero());
    HomPoly q = HomPoly::parse("(x-y)^2 - z*(a^2*x + a^2*y + 2*a*z)");
    CHECK(q.evaluate(p).is_zero());
}

TEST_CASE("euler relation on seeded random forms") {
    std::mt19937_64 rng(20240902);
    std::uniform_int_distribution<int> deg(1, 9);
    HomPoly x = HomPoly::var(Var::X), y = HomPoly::var(Var::Y), z = HomPoly::var(Var::Z);
    for (int i = 0; i < 50; ++i) {
        int d = deg(rng);
        HomPoly f = random_homogeneous(rng, d);
        HomPoly lhs = x * f.partial(Var::X) + y * f.partial(Var::Y) + z * f.partial(Var::Z);
        CHECK(lhs == f.scale(FieldK(d)));
    }
}

TEST_CASE("substitution is a right action") {
    std::mt19937_64 rng(20240903);
    for (int i = 0; i < 10; ++i) {
        HomPoly f = random_homogeneous(rng, 3);
        LinearChange s = random_change(rng), t = random_change(rng);
        CHECK(f.substitute(s * t) == f.substitute(s).substitute(t));
        CHECK(f.substitute(s).substitute(s.inverse()) == f);
    }
}

TEST_CASE("linear change inverse and point action") {
    LinearChange t = LinearChange::permutation(1, 2, 0);
    CHECK((t * t.inverse()).normalized() == LinearChange().normalized());
    ProjPoint p(FieldK(2), FieldK(3), FieldK(5));
    ProjPoint q = t.apply(p);
    CHECK(t.inverse().apply(q) == p);
    CHECK_THROWS_AS(LinearChange::diagonal(FieldK(0), FieldK(1), FieldK(1)), SingularMatrix);
}

TEST_CASE("normalization and proportionality") {
    HomPoly f = HomPoly::parse("2*x^2 - 4*y*z");
    HomPoly g = HomPoly::parse("3*x^2 - 6*y*z");
    CHECK(f.proportional_to(g));
    CHECK(f.normalize_up_to_scalar() == HomPoly::parse("x^2 - 2*y*z"));
    CHECK_FALSE(f.proportional_to(HomPoly::parse("x^2 - y*z")));
    HomPoly wf = f.scale(FieldK::omega());
    CHECK(f.proportional_to(wf));
}

TEST_CASE("exact division of forms") {
    HomPoly f = HomPoly::parse("(x + y)*(x^2 - y*z)");
    auto q = f.divided_by(HomPoly::parse("x + y"));
    REQUIRE(q.has_value());
    CHECK(*q == HomPoly::parse("x^2 - y*z"));
    CHECK_FALSE(f.divided_by(HomPoly::parse("x + z")).has_value());
    CHECK_FALSE(HomPoly::parse("x").divided_by(HomPoly::parse("x^2")).has_value());
}

TEST_CASE("det3") {
    auto x = HomPoly::var(Var::X), y = HomPoly::var(Var::Y), z = HomPoly::var(Var::Z);
    std::array<std::array<HomPoly, 3>, 3> diag;
    for (auto& row : diag)
        for (auto& v : row) v = HomPoly(1);
    diag[0][0] = x.scale(FieldK(6));
    diag[1][1] = y.scale(FieldK(6));
    diag[2][2] = z.scale(FieldK(6));
    CHECK(det3(diag) == HomPoly::parse("216*x*y*z"));
    // swap two rows: sign flips
    std::swap(diag[0], diag[1]);
    CHECK(det3(diag) == HomPoly::parse("0 - 216*x*y*z"));
}

TEST_CASE("univariate gcd and squarefree part") {
    // t^3 - 2 and t - a share exactly t - a
    UniPoly t3m2({FieldK(-2), FieldK(0), FieldK(0), FieldK(1)});
    UniPoly tma({-FieldK::alpha(), FieldK(1)});
    CHECK(gcd_univariate(t3m2, tma) == tma);
    // (t-1)^2 (t+2) has squarefree part (t-1)(t+2)
    UniPoly tm1({FieldK(-1), FieldK(1)}), tp2({FieldK(2), FieldK(1)});
    UniPoly f = tm1 * tm1 * tp2;
    CHECK(squarefree_part(f) == (tm1 * tp2).monic());
    CHECK(gcd_univariate(tm1 * tp2, tm1 * tm1) == tm1);
    // coprime inputs give 1
    CHECK(gcd_univariate(tm1, tp2).degree() == 0);
}

TEST_CASE("univariate division and evaluation") {
    UniPoly tm1({FieldK(-1), FieldK(1)}), tp2({FieldK(2), FieldK(1)});
    UniPoly f = tm1 * tp2;
    CHECK(f.divide_exact(tm1) == tp2);
    CHECK(f.rem(tm1).is_zero());
    CHECK(f.eval(FieldK(1)).is_zero());
    CHECK(f.eval(FieldK(0)) == FieldK(-2));
    CHECK_THROWS(tp2.divide_exact(f));
    CHECK(f.derivative() == UniPoly({FieldK(1), FieldK(2)}));
}

TEST_CASE("resultant basics") {
    HomPoly f = HomPoly::parse("x^2 - y*z");
    CHECK(resultant(f, HomPoly::var(Var::X), Var::X) == HomPoly::parse("0 - y*z"));
    // two generic conics eliminate to a quartic binary form
    HomPoly c1 = HomPoly::parse("x^2 + y^2 + z^2 + x*y");
    HomPoly c2 = HomPoly::parse("2*x^2 - y^2 + 3*z^2 + x*z");
    HomPoly r = resultant(c1, c2, Var::X);
    CHECK(r.degree() == 4);
    CHECK(r.degree_in(Var::X) <= 0);
    // res(f, g*h) = res(f, g) * res(f, h)
    HomPoly gh = c2 * HomPoly::parse("y + z - x");
    HomPoly r2 = resultant(c1, HomPoly::parse("y + z - x"), Var::X);
    CHECK(resultant(c1, gh, Var::X) == r * r2);
}

TEST_CASE("resultant vanishes exactly on common roots") {
    // f and g meet at (1 : 1 : 2); the resultant in x must vanish at (y, z) = (1, 2)
    HomPoly e = HomPoly::parse("x^3 + y^3 - x*y*z");
    HomPoly q1 = HomPoly::parse("21*(x^2 + y^2) - 22*x*y - 6*(x + y)*z + z^2");
    HomPoly r = resultant(e, q1, Var::X);
    CHECK(r.degree() == 3 * 2); // n_v deg f + m_v deg g - m_v n_v = 2*3 + 3*2 - 6
    CHECK(r.evaluate(FieldK(0), FieldK(1), FieldK(2)).is_zero());
    // no common root along (y, z) = (1, 1): e(x,1,1) = x^3 - x + 1 vs q1 there
    CHECK_FALSE(r.evaluate(FieldK(0), FieldK(1), FieldK(1)).is_zero());
}

TEST_CASE("resultant antisymmetry sign") {
    std::mt19937_64 rng(20240904);
    for (int i = 0; i < 5; ++i) {
        HomPoly f = random_homogeneous(rng, 2);
        HomPoly g = random_homogeneous(rng, 3);
        if (f.degree_in(Var::X) != 2 || g.degree_in(Var::X) != 3) continue;
        HomPoly rfg = resultant(f, g, Var::X);
        HomPoly rgf = resultant(g, f, Var::X);
        CHECK(rfg == rgf); // (-1)^(2*3) = +1
    }
    // odd x-degrees flip the sign: (-1)^(1*1) = -1
    HomPoly f = HomPoly::parse("x*y + z^2");
    HomPoly g = HomPoly::parse("x*z + y^2");
    CHECK(resultant(f, g, Var::X) == HomPoly::parse("y^3 - z^3"));
    CHECK(resultant(g, f, Var::X) == -resultant(f, g, Var::X));
}

TEST_CASE("binary form view") {
    // y^2 z (y - z) as a form in (y, z): root (1:0) has multiplicity... z | form once
    HomPoly form = HomPoly::parse("y^3*z - y^2*z^2");
    BinaryFormView v = binary_form_view(form, Var::Y, Var::Z);
    CHECK(v.form_degree == 4);
    CHECK(v.mult_at_infinity == 1); // one factor of z
    CHECK(v.poly.degree() == 3);
    CHECK(v.poly.eval(FieldK(0)).is_zero());
    CHECK(v.poly.eval(FieldK(1)).is_zero());
    CHECK_THROWS(binary_form_view(HomPoly::parse("x*y"), Var::Y, Var::Z));
}

TEST_CASE("string round trips") {
    HomPoly q = HomPoly::parse("(x-y)^2 - z*(a^2*x + a^2*y + 2*a*z)");
    CHECK(HomPoly::parse(q.str()) == q);
    HomPoly e = HomPoly::parse("x^3 + y^3 - x*y*z");
    CHECK(HomPoly::parse(e.str()) == e);
    CHECK(HomPoly(3).str() == "0");
    ProjPoint p(FieldK(2), FieldK(4), FieldK(9));
    CHECK(p.str() == "(1 : 2 : 9/2)");
}
