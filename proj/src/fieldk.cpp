#include "curves/fieldk.hpp"

#include <cctype>
#include <sstream>

namespace curves {

Rational make_rational(const mpz_class& num, const mpz_class& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

FieldK FieldK::omega() { return basis(1); }
FieldK FieldK::alpha() { return basis(2); }

FieldK FieldK::basis(int i) {
    FieldK x;
    x.c_[i] = 1;
    return x;
}

bool FieldK::is_zero() const {
    for (const auto& v : c_)
        if (sgn(v) != 0) return false;
    return true;
}

bool FieldK::is_rational() const {
    for (int i = 1; i < 6; ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

bool FieldK::in_omega_subfield() const {
    for (int i = 2; i < 6; ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

const Rational& FieldK::rational_value() const {
    if (!is_rational()) throw std::runtime_error("FieldK: not a rational value");
    return c_[0];
}

FieldK FieldK::operator-() const {
    FieldK r;
    for (int i = 0; i < 6; ++i) r.c_[i] = -c_[i];
    return r;
}

FieldK FieldK::operator+(const FieldK& o) const {
    FieldK r;
    for (int i = 0; i < 6; ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

FieldK FieldK::operator-(const FieldK& o) const {
    FieldK r;
    for (int i = 0; i < 6; ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

FieldK& FieldK::operator+=(const FieldK& o) {
    for (int i = 0; i < 6; ++i) c_[i] += o.c_[i];
    return *this;
}

FieldK& FieldK::operator-=(const FieldK& o) {
    for (int i = 0; i < 6; ++i) c_[i] -= o.c_[i];
    return *this;
}

// Basis product b_i * b_j reduced by w^2 = -1 - w and a^3 = 2.  Index
// layout: i = 2*aexp + wexp.  Each product lands on one or two basis
// elements with integer coefficients in {1, 2, -1, -2}.
namespace {
struct BasisProd {
    int8_t idx0, coef0; // always present
    int8_t idx1, coef1; // idx1 < 0 when absent
};

constexpr BasisProd basis_prod(int i, int j) {
    int w = (i & 1) + (j & 1);
    int a = (i >> 1) + (j >> 1);
    int scale = 1;
    if (a >= 3) {
        a -= 3;
        scale = 2;
    }
    if (w < 2) return {static_cast<int8_t>(2 * a + w), static_cast<int8_t>(scale), -1, 0};
    // w^2 = -1 - w
    return {static_cast<int8_t>(2 * a), static_cast<int8_t>(-scale),
            static_cast<int8_t>(2 * a + 1), static_cast<int8_t>(-scale)};
}

struct ProdTable {
    BasisProd t[6][6]{};
    constexpr ProdTable() {
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) t[i][j] = basis_prod(i, j);
    }
};
constexpr ProdTable kProd{};
} // namespace

void FieldK::add_mul(const FieldK& x, const FieldK& y) {
    Rational tmp;
    for (int i = 0; i < 6; ++i) {
        if (sgn(x.c_[i]) == 0) continue;
        for (int j = 0; j < 6; ++j) {
            if (sgn(y.c_[j]) == 0) continue;
            tmp = x.c_[i] * y.c_[j];
            const BasisProd& bp = kProd.t[i][j];
            if (bp.coef0 == 1)
                c_[bp.idx0] += tmp;
            else if (bp.coef0 == -1)
                c_[bp.idx0] -= tmp;
            else
                c_[bp.idx0] += bp.coef0 * tmp;
            if (bp.idx1 >= 0) {
                if (bp.coef1 == -1)
                    c_[bp.idx1] -= tmp;
                else
                    c_[bp.idx1] += bp.coef1 * tmp;
            }
        }
    }
}

FieldK FieldK::operator*(const FieldK& o) const {
    FieldK r;
    r.add_mul(*this, o);
    return r;
}

FieldK FieldK::inv() const {
    if (is_zero()) throw DivisionByZero();
    // Fast paths for the common coefficient shapes.
    if (is_rational()) {
        FieldK r;
        r.c_[0] = 1 / c_[0];
        return r;
    }
    // Solve M y = e0 where column j of M holds the coordinates of
    // (*this) * b_j.  Plain 6x6 Gaussian elimination over Q.
    Rational m[6][7];
    for (int j = 0; j < 6; ++j) {
        FieldK col = *this * basis(j);
        for (int i = 0; i < 6; ++i) m[i][j] = col.c_[i];
    }
    m[0][6] = 1;
    for (int col = 0; col < 6; ++col) {
        int piv = -1;
        for (int r = col; r < 6; ++r)
            if (sgn(m[r][col]) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::logic_error("FieldK::inv: singular (a^3-2 reducible?)");
        if (piv != col)
            for (int j = col; j < 7; ++j) swap(m[piv][j], m[col][j]);
        Rational inv_p = 1 / m[col][col];
        for (int j = col; j < 7; ++j) m[col][j] *= inv_p;
        for (int r = 0; r < 6; ++r) {
            if (r == col || sgn(m[r][col]) == 0) continue;
            Rational factor = m[r][col];
            for (int j = col; j < 7; ++j) m[r][j] -= factor * m[col][j];
        }
    }
    FieldK y;
    for (int i = 0; i < 6; ++i) y.c_[i] = m[i][6];
    return y;
}

bool FieldK::operator<(const FieldK& o) const {
    for (int i = 0; i < 6; ++i) {
        int c = cmp(c_[i], o.c_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

namespace {
const char* kBasisName[6] = {"1", "w", "a", "w*a", "a^2", "w*a^2"};
}

std::string FieldK::str() const {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < 6; ++i) {
        int s = sgn(c_[i]);
        if (s == 0) continue;
        Rational av = abs(c_[i]);
        if (first) {
            if (s < 0) out << "-";
            first = false;
        } else {
            out << (s < 0 ? " - " : " + ");
        }
        if (i == 0) {
            out << av;
        } else if (av == 1) {
            out << kBasisName[i];
        } else {
            out << av << "*" << kBasisName[i];
        }
    }
    if (first) return "0";
    return out.str();
}

// --- parser: expr := ['-'] term (('+'|'-') term)* ;
//     term := factor ('*' factor)* ; factor := atom ['^' uint] ;
//     atom := rational | 'w' | 'a' | '(' expr ')'
namespace {
struct FieldParser {
    std::string_view s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::runtime_error("FieldK::parse: " + what + " at position " + std::to_string(pos));
    }

    FieldK expr() {
        skip();
        bool neg = eat('-');
        FieldK acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip();
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }
    FieldK term() {
        FieldK acc = factor();
        while (eat('*')) acc *= factor();
        return acc;
    }
    FieldK factor() {
        FieldK base = atom();
        if (eat('^')) {
            skip();
            unsigned long e = 0;
            if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
                fail("expected exponent");
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                e = e * 10 + (s[pos++] - '0');
            FieldK r(1);
            for (unsigned long i = 0; i < e; ++i) r *= base;
            return r;
        }
        return base;
    }
    FieldK atom() {
        skip();
        if (pos >= s.size()) fail("unexpected end");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            FieldK r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (c == 'w') {
            ++pos;
            return FieldK::omega();
        }
        if (c == 'a') {
            ++pos;
            return FieldK::alpha();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            mpz_class num(std::string(s.substr(start, pos - start)), 10);
            mpz_class den = 1;
            size_t save = pos;
            if (eat('/')) {
                skip();
                size_t ds = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (pos == ds) {
                    pos = save; // "/" belonged to something else
                } else {
                    den = mpz_class(std::string(s.substr(ds, pos - ds)), 10);
                    if (den == 0) fail("zero denominator");
                }
            }
            return FieldK(make_rational(num, den));
        }
        fail("unexpected character");
    }
};
} // namespace

FieldK FieldK::parse(std::string_view text) {
    FieldParser p{text};
    FieldK r = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

} // namespace curves
