#ifndef CURVES_POLYRING_HPP
#define CURVES_POLYRING_HPP

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "curves/fieldk.hpp"

namespace curves {

enum class Var : int { X = 0, Y = 1, Z = 2 };

/// Power product x^ex y^ey z^ez.
struct Monomial {
    int e[3]{0, 0, 0};

    int degree() const { return e[0] + e[1] + e[2]; }
    bool operator==(const Monomial& o) const {
        return e[0] == o.e[0] && e[1] == o.e[1] && e[2] == o.e[2];
    }
};

/// Graded lexicographic order with x > y > z; GrlexGreater sorts the leading
/// term first.  Fixed globally so printing and pivoting are deterministic.
int grlex_cmp(const Monomial& m1, const Monomial& m2);

struct GrlexGreater {
    bool operator()(const Monomial& m1, const Monomial& m2) const {
        return grlex_cmp(m1, m2) > 0;
    }
};

/// All monomials of total degree k, leading (grlex-greatest) first.
std::vector<Monomial> monomials_of_degree(int k);
inline int dim_graded_piece(int k) { return k < 0 ? 0 : (k + 1) * (k + 2) / 2; }

struct DegreeMismatch : std::runtime_error {
    DegreeMismatch() : std::runtime_error("homogeneous degree mismatch") {}
};

class ProjPoint;
class LinearChange;

/// Homogeneous polynomial in K[x,y,z] with an explicit degree tag.  The
/// zero polynomial keeps its tag but stores no terms; no stored
/// coefficient is zero.
class HomPoly {
  public:
    using TermMap = std::map<Monomial, FieldK, GrlexGreater>;

    explicit HomPoly(int degree = 0) : degree_(degree) {}

    static HomPoly var(Var v);                       // x, y or z
    static HomPoly constant(const FieldK& c);
    static HomPoly term(const FieldK& c, Monomial m);

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    FieldK coeff(const Monomial& m) const;
    /// Grlex-leading coefficient; zero for the zero polynomial.
    FieldK leading_coeff() const;

    void add_term(const Monomial& m, const FieldK& c); // accumulates, drops zeros

    HomPoly operator+(const HomPoly& o) const;
    HomPoly operator-(const HomPoly& o) const;
    HomPoly operator-() const;
    HomPoly operator*(const HomPoly& o) const;
    HomPoly scale(const FieldK& c) const;
    HomPoly pow(int n) const;

    bool operator==(const HomPoly& o) const;
    bool operator!=(const HomPoly& o) const { return !(*this == o); }
    /// Total order (degree, then term sequence); for use as a map key.
    bool operator<(const HomPoly& o) const;

    HomPoly partial(Var v) const;
    FieldK evaluate(const ProjPoint& p) const;
    FieldK evaluate(const FieldK& x, const FieldK& y, const FieldK& z) const;
    /// f o T (substitute each variable by its image row); right action.
    HomPoly substitute(const LinearChange& t) const;

    /// Scaled so the grlex-leading coefficient is 1 (zero stays zero).
    HomPoly normalize_up_to_scalar() const;
    bool proportional_to(const HomPoly& o) const;

    int degree_in(Var v) const;                      // -1 for the zero polynomial
    /// Coefficient of v^j, a polynomial in the remaining variables
    /// (homogeneous of degree deg - j, tagged as such).
    HomPoly coeff_of_power(Var v, int j) const;

    /// Exact division; nullopt when o does not divide this.
    std::optional<HomPoly> divided_by(const HomPoly& o) const;

    std::string str() const;
    static HomPoly parse(std::string_view text);     // throws if inhomogeneous

  private:
    int degree_;
    TermMap terms_;
};

inline HomPoly operator*(const FieldK& c, const HomPoly& f) { return f.scale(c); }

/// Point of P^2(K); canonical form has first nonzero coordinate 1.
class ProjPoint {
  public:
    ProjPoint(FieldK x, FieldK y, FieldK z);
    const FieldK& operator[](int i) const { return c_[i]; }
    bool operator==(const ProjPoint& o) const { return c_ == o.c_; }
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }
    bool operator<(const ProjPoint& o) const;
    std::string str() const;

  private:
    std::array<FieldK, 3> c_;
};

struct SingularMatrix : std::runtime_error {
    SingularMatrix() : std::runtime_error("linear change of coordinates is singular") {}
};

/// Invertible 3x3 matrix over K acting on points by v -> M v and on
/// polynomials by f -> f o M.
class LinearChange {
  public:
    LinearChange(); // identity
    explicit LinearChange(std::array<std::array<FieldK, 3>, 3> m);

    static LinearChange diagonal(const FieldK& a, const FieldK& b, const FieldK& c);
    static LinearChange permutation(int im0, int im1, int im2); // x->v_{im0} etc.

    const FieldK& at(int i, int j) const { return m_[i][j]; }
    FieldK det() const;
    LinearChange operator*(const LinearChange& o) const; // matrix product
    LinearChange inverse() const;
    ProjPoint apply(const ProjPoint& p) const;

    /// Projective normalization (first nonzero entry 1) for equality tests.
    LinearChange normalized() const;
    bool operator==(const LinearChange& o) const;
    bool operator<(const LinearChange& o) const;

  private:
    std::array<std::array<FieldK, 3>, 3> m_;
};

/// Dense univariate polynomial over K, coefficients ascending.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<FieldK> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(const FieldK& c);

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const FieldK& coeff(int i) const;
    const std::vector<FieldK>& coeffs() const { return c_; }
    const FieldK& leading() const { return c_.back(); }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly scale(const FieldK& s) const;
    UniPoly monic() const;
    UniPoly derivative() const;
    FieldK eval(const FieldK& x) const;
    /// Remainder of this modulo o (field division).
    UniPoly rem(const UniPoly& o) const;
    /// Exact quotient; throws when o does not divide this.
    UniPoly divide_exact(const UniPoly& o) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    std::string str() const; // in the indeterminate "t"

  private:
    void trim();
    std::vector<FieldK> c_;
};

/// Monic gcd over K (Euclidean algorithm with content control).
UniPoly gcd_univariate(const UniPoly& u, const UniPoly& v);
UniPoly squarefree_part(const UniPoly& u);

/// View of a binary form in (s,t) as the univariate polynomial form(s, 1),
/// plus the multiplicity of the root (1:0) that dehomogenizing discards
/// (the power of t dividing the form, i.e. form_degree - deg poly).
struct BinaryFormView {
    UniPoly poly;         // form(s, 1)
    int mult_at_infinity; // multiplicity of the root (1:0)
    int form_degree;
};

/// f must be a binary form in vars (s, t) = remaining_vars(var); decompose
/// per the fixed dehomogenization convention t = 1.
BinaryFormView binary_form_view(const HomPoly& form, Var s, Var t);

/// Determinant of a 3x3 polynomial matrix by cofactor expansion; throws
/// DegreeMismatch when the permutation products are not equi-homogeneous.
HomPoly det3(const std::array<std::array<HomPoly, 3>, 3>& m);

/// Sylvester resultant eliminating var; f-coefficient rows first,
/// descending powers.  Returns a binary form in the remaining variables.
HomPoly resultant(const HomPoly& f, const HomPoly& g, Var var);

/// Euler-consistent degree helpers.
std::array<Var, 2> remaining_vars(Var v);

} // namespace curves

#endif
