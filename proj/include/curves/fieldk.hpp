#ifndef CURVES_FIELDK_HPP
#define CURVES_FIELDK_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace curves {

/// Arbitrary-precision rational, always kept in canonical form
/// (gcd(num, den) = 1, den > 0).
using Rational = mpq_class;

/// Canonicalizing constructor helper; mpq_class(a, b) does not reduce.
Rational make_rational(const mpz_class& num, const mpz_class& den);

struct DivisionByZero : std::runtime_error {
    DivisionByZero() : std::runtime_error("division by zero in K") {}
};

/// Element of the degree-6 number field K = Q(w, a) with w^2 + w + 1 = 0
/// and a^3 = 2, stored as rational coordinates in the flat basis
/// {1, w, a, w*a, a^2, w*a^2}.  Coordinate index = 2*aexp + wexp.
///
/// Values are immutable in spirit: every operation returns a fresh element
/// in canonical form, so equality is plain coordinate-wise comparison.
class FieldK {
  public:
    FieldK() = default;
    FieldK(long v) { c_[0] = v; }
    FieldK(const Rational& v) { c_[0] = v; }
    explicit FieldK(std::array<Rational, 6> coords) : c_(std::move(coords)) {}

    static FieldK omega();           // w
    static FieldK alpha();           // a = 2^(1/3)
    static FieldK basis(int i);

    const Rational& coord(int i) const { return c_[i]; }
    const std::array<Rational, 6>& coords() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;        // only the 1-coordinate may be nonzero
    bool in_omega_subfield() const;  // all a-coordinates vanish
    /// Rational value; requires is_rational().
    const Rational& rational_value() const;

    FieldK operator-() const;
    FieldK operator+(const FieldK& o) const;
    FieldK operator-(const FieldK& o) const;
    FieldK operator*(const FieldK& o) const;
    FieldK& operator+=(const FieldK& o);
    FieldK& operator-=(const FieldK& o);
    FieldK& operator*=(const FieldK& o) { return *this = *this * o; }

    /// Multiplicative inverse; throws DivisionByZero on zero.
    FieldK inv() const;
    FieldK operator/(const FieldK& o) const { return *this * o.inv(); }

    bool operator==(const FieldK& o) const { return c_ == o.c_; }
    bool operator!=(const FieldK& o) const { return !(*this == o); }
    /// Arbitrary total order (lexicographic on coordinates); used as a map key.
    bool operator<(const FieldK& o) const;

    /// Accumulate x*y into this without temporaries; the workhorse of the
    /// linear-algebra kernels.
    void add_mul(const FieldK& x, const FieldK& y);

    std::string str() const;
    /// Parses the same grammar str() emits, e.g. "3/2 + 1*w - 2*a^2".
    static FieldK parse(std::string_view text);

  private:
    std::array<Rational, 6> c_{};
};

inline FieldK operator*(long s, const FieldK& x) { return FieldK(s) * x; }

} // namespace curves

#endif
