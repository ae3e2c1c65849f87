#include "curves/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace curves {

int grlex_cmp(const Monomial& m1, const Monomial& m2) {
    int d1 = m1.degree(), d2 = m2.degree();
    if (d1 != d2) return d1 < d2 ? -1 : 1;
    for (int i = 0; i < 2; ++i)
        if (m1.e[i] != m2.e[i]) return m1.e[i] < m2.e[i] ? -1 : 1;
    return 0;
}

std::vector<Monomial> monomials_of_degree(int k) {
    std::vector<Monomial> out;
    if (k < 0) return out;
    for (int ex = k; ex >= 0; --ex)
        for (int ey = k - ex; ey >= 0; --ey)
            out.push_back(Monomial{{ex, ey, k - ex - ey}});
    return out;
}

// ---------------------------------------------------------------- HomPoly

HomPoly HomPoly::var(Var v) {
    HomPoly p(1);
    Monomial m;
    m.e[static_cast<int>(v)] = 1;
    p.terms_[m] = FieldK(1);
    return p;
}

HomPoly HomPoly::constant(const FieldK& c) {
    HomPoly p(0);
    if (!c.is_zero()) p.terms_[Monomial{}] = c;
    return p;
}

HomPoly HomPoly::term(const FieldK& c, Monomial m) {
    HomPoly p(m.degree());
    if (!c.is_zero()) p.terms_[m] = c;
    return p;
}

FieldK HomPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? FieldK(0) : it->second;
}

FieldK HomPoly::leading_coeff() const {
    return terms_.empty() ? FieldK(0) : terms_.begin()->second;
}

void HomPoly::add_term(const Monomial& m, const FieldK& c) {
    if (c.is_zero()) return;
    if (m.degree() != degree_)
        throw DegreeMismatch();
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HomPoly HomPoly::operator+(const HomPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (degree_ != o.degree_) throw DegreeMismatch();
    HomPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

HomPoly HomPoly::operator-(const HomPoly& o) const { return *this + (-o); }

HomPoly HomPoly::operator-() const {
    HomPoly r(degree_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

HomPoly HomPoly::operator*(const HomPoly& o) const {
    HomPoly r(degree_ + o.degree_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m{{m1.e[0] + m2.e[0], m1.e[1] + m2.e[1], m1.e[2] + m2.e[2]}};
            auto [it, inserted] = r.terms_.try_emplace(m, FieldK(0));
            it->second.add_mul(c1, c2);
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    return r;
}

HomPoly HomPoly::scale(const FieldK& c) const {
    HomPoly r(degree_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
    return r;
}

HomPoly HomPoly::pow(int n) const {
    HomPoly r = HomPoly::constant(FieldK(1));
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
}

bool HomPoly::operator==(const HomPoly& o) const {
    if (is_zero() && o.is_zero()) return true; // degree tags may differ
    return degree_ == o.degree_ && terms_ == o.terms_;
}

bool HomPoly::operator<(const HomPoly& o) const {
    if (degree_ != o.degree_) return degree_ < o.degree_;
    auto it1 = terms_.begin(), it2 = o.terms_.begin();
    for (; it1 != terms_.end() && it2 != o.terms_.end(); ++it1, ++it2) {
        int c = grlex_cmp(it1->first, it2->first);
        if (c != 0) return c > 0; // grlex-greater monomial sorts first
        if (it1->second != it2->second) return it1->second < it2->second;
    }
    return it1 == terms_.end() && it2 != o.terms_.end();
}

HomPoly HomPoly::partial(Var v) const {
    int vi = static_cast<int>(v);
    HomPoly r(degree_ > 0 ? degree_ - 1 : 0);
    for (const auto& [m, c] : terms_) {
        if (m.e[vi] == 0) continue;
        Monomial dm = m;
        dm.e[vi] -= 1;
        r.add_term(dm, FieldK(static_cast<long>(m.e[vi])) * c);
    }
    return r;
}

FieldK HomPoly::evaluate(const FieldK& x, const FieldK& y, const FieldK& z) const {
    // cache powers of each coordinate
    std::array<std::vector<FieldK>, 3> pows;
    const std::array<const FieldK*, 3> vals{&x, &y, &z};
    for (int i = 0; i < 3; ++i) {
        pows[i].push_back(FieldK(1));
        for (int e = 1; e <= degree_; ++e) pows[i].push_back(pows[i].back() * *vals[i]);
    }
    FieldK acc(0);
    for (const auto& [m, c] : terms_) {
        FieldK t = c * pows[0][m.e[0]];
        t *= pows[1][m.e[1]];
        t *= pows[2][m.e[2]];
        acc += t;
    }
    return acc;
}

FieldK HomPoly::evaluate(const ProjPoint& p) const { return evaluate(p[0], p[1], p[2]); }

HomPoly HomPoly::substitute(const LinearChange& t) const {
    // images of the variables: row i of the matrix as a linear form
    std::array<HomPoly, 3> image;
    for (int i = 0; i < 3; ++i) {
        HomPoly li(1);
        for (int j = 0; j < 3; ++j)
            li.add_term(Monomial{{j == 0, j == 1, j == 2}}, t.at(i, j));
        image[i] = li;
    }
    // cached powers
    std::array<std::vector<HomPoly>, 3> pows;
    for (int i = 0; i < 3; ++i) pows[i].push_back(HomPoly::constant(FieldK(1)));
    HomPoly r(degree_);
    for (const auto& [m, c] : terms_) {
        for (int i = 0; i < 3; ++i)
            while (static_cast<int>(pows[i].size()) <= m.e[i])
                pows[i].push_back(pows[i].back() * image[i]);
        HomPoly t1 = pows[0][m.e[0]] * pows[1][m.e[1]];
        t1 = t1 * pows[2][m.e[2]];
        r = r + t1.scale(c);
    }
    return r;
}

HomPoly HomPoly::normalize_up_to_scalar() const {
    if (is_zero()) return *this;
    return scale(leading_coeff().inv());
}

bool HomPoly::proportional_to(const HomPoly& o) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    return normalize_up_to_scalar() == o.normalize_up_to_scalar();
}

int HomPoly::degree_in(Var v) const {
    int vi = static_cast<int>(v), d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.e[vi]);
    return d;
}

HomPoly HomPoly::coeff_of_power(Var v, int j) const {
    int vi = static_cast<int>(v);
    HomPoly r(degree_ - j);
    for (const auto& [m, c] : terms_) {
        if (m.e[vi] != j) continue;
        Monomial rm = m;
        rm.e[vi] = 0;
        r.terms_[rm] = c;
    }
    return r;
}

std::optional<HomPoly> HomPoly::divided_by(const HomPoly& o) const {
    if (o.is_zero()) return std::nullopt;
    if (is_zero()) return HomPoly(0);
    if (degree_ < o.degree()) return std::nullopt;
    HomPoly rem = *this;
    HomPoly quot(degree_ - o.degree());
    const auto& [lm, lc] = *o.terms().begin();
    FieldK lc_inv = lc.inv();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms().begin();
        Monomial qm{{rm.e[0] - lm.e[0], rm.e[1] - lm.e[1], rm.e[2] - lm.e[2]}};
        if (qm.e[0] < 0 || qm.e[1] < 0 || qm.e[2] < 0) return std::nullopt;
        FieldK qc = rc * lc_inv;
        quot.add_term(qm, qc);
        rem = rem - o * HomPoly::term(qc, qm);
    }
    return quot;
}

std::string HomPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.str();
        bool negated = false;
        if (cs.size() && cs[0] == '-' && cs.find(" + ") == std::string::npos &&
            cs.find(" - ") == std::string::npos) {
            negated = true;
            cs = cs.substr(1);
        }
        if (first) {
            if (negated) out << "-";
            first = false;
        } else {
            out << (negated ? " - " : " + ");
        }
        bool composite = cs.find(' ') != std::string::npos;
        std::string mono;
        const char* names = "xyz";
        for (int i = 0; i < 3; ++i) {
            if (m.e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (m.e[i] > 1) mono += "^" + std::to_string(m.e[i]);
        }
        if (mono.empty()) {
            out << (composite ? "(" + cs + ")" : cs);
        } else if (cs == "1") {
            out << mono;
        } else {
            out << (composite ? "(" + cs + ")" : cs) << "*" << mono;
        }
    }
    return out.str();
}

// Expression parser over K[x,y,z]; terms are collected degree-free and the
// result must come out homogeneous.
namespace {
struct TermBag {
    std::map<Monomial, FieldK, GrlexGreater> t;

    static TermBag from(const Monomial& m, const FieldK& c) {
        TermBag b;
        if (!c.is_zero()) b.t[m] = c;
        return b;
    }
    void add(const TermBag& o, int sign) {
        for (const auto& [m, c] : o.t) {
            auto [it, ins] = t.try_emplace(m, sign > 0 ? c : -c);
            if (!ins) {
                it->second += (sign > 0 ? c : -c);
                if (it->second.is_zero()) t.erase(it);
            }
        }
    }
    TermBag mul(const TermBag& o) const {
        TermBag r;
        for (const auto& [m1, c1] : t)
            for (const auto& [m2, c2] : o.t) {
                Monomial m{{m1.e[0] + m2.e[0], m1.e[1] + m2.e[1], m1.e[2] + m2.e[2]}};
                auto [it, ins] = r.t.try_emplace(m, FieldK(0));
                it->second.add_mul(c1, c2);
                if (it->second.is_zero()) r.t.erase(it);
            }
        return r;
    }
};

struct PolyParser {
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
        throw std::runtime_error("HomPoly::parse: " + what + " at position " +
                                 std::to_string(pos));
    }

    TermBag expr() {
        skip();
        int sign = eat('-') ? -1 : 1;
        TermBag acc;
        acc.add(term(), sign);
        for (;;) {
            skip();
            if (eat('+'))
                acc.add(term(), 1);
            else if (eat('-'))
                acc.add(term(), -1);
            else
                return acc;
        }
    }
    TermBag term() {
        TermBag acc = factor();
        for (;;) {
            skip();
            // explicit '*' or juxtaposition with a variable/parenthesis
            if (eat('*')) {
                acc = acc.mul(factor());
            } else if (pos < s.size() && (s[pos] == '(' || s[pos] == 'x' || s[pos] == 'y' ||
                                          s[pos] == 'z' || s[pos] == 'w' || s[pos] == 'a')) {
                acc = acc.mul(factor());
            } else {
                return acc;
            }
        }
    }
    TermBag factor() {
        TermBag base = atom();
        if (eat('^')) {
            skip();
            if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
                fail("expected exponent");
            unsigned long e = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                e = e * 10 + (s[pos++] - '0');
            TermBag r = TermBag::from(Monomial{}, FieldK(1));
            for (unsigned long i = 0; i < e; ++i) r = r.mul(base);
            return r;
        }
        return base;
    }
    TermBag atom() {
        skip();
        if (pos >= s.size()) fail("unexpected end");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            TermBag r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (c == 'x' || c == 'y' || c == 'z') {
            ++pos;
            Monomial m;
            m.e[c - 'x'] = 1;
            return TermBag::from(m, FieldK(1));
        }
        if (c == 'w') {
            ++pos;
            return TermBag::from(Monomial{}, FieldK::omega());
        }
        if (c == 'a') {
            ++pos;
            return TermBag::from(Monomial{}, FieldK::alpha());
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
                if (pos == ds)
                    pos = save;
                else
                    den = mpz_class(std::string(s.substr(ds, pos - ds)), 10);
            }
            if (den == 0) fail("zero denominator");
            return TermBag::from(Monomial{}, FieldK(make_rational(num, den)));
        }
        fail("unexpected character");
    }
};
} // namespace

HomPoly HomPoly::parse(std::string_view text) {
    PolyParser p{text};
    TermBag bag = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    if (bag.t.empty()) return HomPoly(0);
    int deg = bag.t.begin()->first.degree();
    HomPoly r(deg);
    for (const auto& [m, c] : bag.t) {
        if (m.degree() != deg)
            throw std::runtime_error("HomPoly::parse: polynomial is not homogeneous");
        r.terms_[m] = c;
    }
    return r;
}

// --------------------------------------------------------------- ProjPoint

ProjPoint::ProjPoint(FieldK x, FieldK y, FieldK z) : c_{std::move(x), std::move(y), std::move(z)} {
    int first = -1;
    for (int i = 0; i < 3; ++i)
        if (!c_[i].is_zero()) {
            first = i;
            break;
        }
    if (first < 0) throw std::runtime_error("ProjPoint: all coordinates zero");
    if (c_[first] != FieldK(1)) {
        FieldK s = c_[first].inv();
        for (int i = first; i < 3; ++i) c_[i] *= s;
    }
    c_[first] = FieldK(1); // exact by construction
}

bool ProjPoint::operator<(const ProjPoint& o) const {
    for (int i = 0; i < 3; ++i) {
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    }
    return false;
}

std::string ProjPoint::str() const {
    return "(" + c_[0].str() + " : " + c_[1].str() + " : " + c_[2].str() + ")";
}

// ------------------------------------------------------------ LinearChange

LinearChange::LinearChange() {
    for (int i = 0; i < 3; ++i) m_[i][i] = FieldK(1);
}

LinearChange::LinearChange(std::array<std::array<FieldK, 3>, 3> m) : m_(std::move(m)) {
    if (det().is_zero()) throw SingularMatrix();
}

LinearChange LinearChange::diagonal(const FieldK& a, const FieldK& b, const FieldK& c) {
    std::array<std::array<FieldK, 3>, 3> m{};
    m[0][0] = a;
    m[1][1] = b;
    m[2][2] = c;
    return LinearChange(m);
}

LinearChange LinearChange::permutation(int im0, int im1, int im2) {
    std::array<std::array<FieldK, 3>, 3> m{};
    m[0][im0] = FieldK(1);
    m[1][im1] = FieldK(1);
    m[2][im2] = FieldK(1);
    return LinearChange(m);
}

FieldK LinearChange::det() const {
    FieldK d(0);
    d += m_[0][0] * (m_[1][1] * m_[2][2] - m_[1][2] * m_[2][1]);
    d -= m_[0][1] * (m_[1][0] * m_[2][2] - m_[1][2] * m_[2][0]);
    d += m_[0][2] * (m_[1][0] * m_[2][1] - m_[1][1] * m_[2][0]);
    return d;
}

LinearChange LinearChange::operator*(const LinearChange& o) const {
    std::array<std::array<FieldK, 3>, 3> r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) r[i][j] += m_[i][k] * o.m_[k][j];
    return LinearChange(r);
}

LinearChange LinearChange::inverse() const {
    FieldK d = det();
    std::array<std::array<FieldK, 3>, 3> adj{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
            adj[j][i] = m_[r0][c0] * m_[r1][c1] - m_[r0][c1] * m_[r1][c0];
        }
    FieldK dinv = d.inv();
    for (auto& row : adj)
        for (auto& v : row) v *= dinv;
    return LinearChange(adj);
}

ProjPoint LinearChange::apply(const ProjPoint& p) const {
    std::array<FieldK, 3> r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i] += m_[i][j] * p[j];
    return ProjPoint(r[0], r[1], r[2]);
}

LinearChange LinearChange::normalized() const {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!m_[i][j].is_zero()) {
                FieldK s = m_[i][j].inv();
                std::array<std::array<FieldK, 3>, 3> r = m_;
                for (auto& row : r)
                    for (auto& v : row) v *= s;
                return LinearChange(r);
            }
    throw SingularMatrix();
}

bool LinearChange::operator==(const LinearChange& o) const { return m_ == o.m_; }

bool LinearChange::operator<(const LinearChange& o) const {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (m_[i][j] != o.m_[i][j]) return m_[i][j] < o.m_[i][j];
    return false;
}

// ----------------------------------------------------------------- UniPoly

UniPoly UniPoly::constant(const FieldK& c) {
    UniPoly p;
    if (!c.is_zero()) p.c_.push_back(c);
    return p;
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const FieldK& UniPoly::coeff(int i) const {
    static const FieldK zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<FieldK> r(std::max(c_.size(), o.c_.size()), FieldK(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<FieldK> r(std::max(c_.size(), o.c_.size()), FieldK(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<FieldK> r(c_.size() + o.c_.size() - 1, FieldK(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j].add_mul(c_[i], o.c_[j]);
    }
    return UniPoly(std::move(r));
}

UniPoly UniPoly::scale(const FieldK& s) const {
    if (s.is_zero()) return UniPoly();
    std::vector<FieldK> r = c_;
    for (auto& v : r) v *= s;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scale(leading().inv());
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<FieldK> r(c_.size() - 1, FieldK(0));
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = FieldK(static_cast<long>(i)) * c_[i];
    return UniPoly(std::move(r));
}

FieldK UniPoly::eval(const FieldK& x) const {
    FieldK acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::rem(const UniPoly& o) const {
    if (o.is_zero()) throw std::runtime_error("UniPoly::rem: division by zero polynomial");
    std::vector<FieldK> r = c_;
    FieldK lead_inv = o.leading().inv();
    int dn = o.degree();
    for (int i = static_cast<int>(r.size()) - 1; i >= dn; --i) {
        if (r[i].is_zero()) continue;
        FieldK q = r[i] * lead_inv;
        for (int j = 0; j <= dn; ++j) r[i - dn + j] -= q * o.c_[j];
        r[i] = FieldK(0);
    }
    r.resize(std::max(dn, 0));
    return UniPoly(std::move(r));
}

UniPoly UniPoly::divide_exact(const UniPoly& o) const {
    if (o.is_zero()) throw std::runtime_error("UniPoly::divide_exact: zero divisor");
    if (is_zero()) return UniPoly();
    std::vector<FieldK> r = c_;
    int dn = o.degree();
    int dq = degree() - dn;
    if (dq < 0) throw std::runtime_error("UniPoly::divide_exact: not divisible");
    std::vector<FieldK> q(dq + 1, FieldK(0));
    FieldK lead_inv = o.leading().inv();
    for (int i = static_cast<int>(r.size()) - 1; i >= dn; --i) {
        if (r[i].is_zero()) continue;
        FieldK qi = r[i] * lead_inv;
        q[i - dn] = qi;
        for (int j = 0; j <= dn; ++j) r[i - dn + j] -= qi * o.c_[j];
    }
    for (int j = 0; j < dn; ++j)
        if (!r[j].is_zero()) throw std::runtime_error("UniPoly::divide_exact: not divisible");
    return UniPoly(std::move(q));
}

std::string UniPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        out << "(" << c_[i].str() << ")";
        if (i > 0) out << "*t";
        if (i > 1) out << "^" << i;
    }
    return out.str();
}

namespace {
// Rational content of a K-polynomial: positive rational c so that the
// coefficient coordinates of p/c are coprime integers.
Rational rational_content(const UniPoly& p) {
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const FieldK& k : p.coeffs())
        for (int i = 0; i < 6; ++i) {
            const Rational& q = k.coord(i);
            if (sgn(q) == 0) continue;
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
        }
    if (num_gcd == 0) return Rational(1);
    return make_rational(num_gcd, den_lcm);
}

UniPoly strip_content(const UniPoly& p) {
    if (p.is_zero()) return p;
    Rational c = rational_content(p);
    return p.scale(FieldK(Rational(1) / c));
}

// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g, computed without
// field inversions to keep coefficients integral.
UniPoly pseudo_rem(const UniPoly& f, const UniPoly& g) {
    UniPoly r = f;
    const FieldK& lg = g.leading();
    int dn = g.degree();
    while (!r.is_zero() && r.degree() >= dn) {
        int shift = r.degree() - dn;
        FieldK lr = r.leading();
        // r <- lg*r - lr * t^shift * g
        std::vector<FieldK> nr(r.degree() + 1, FieldK(0));
        for (int i = 0; i <= r.degree(); ++i) nr[i] = lg * r.coeff(i);
        for (int j = 0; j <= dn; ++j) nr[shift + j] -= lr * g.coeff(j);
        r = UniPoly(std::move(nr));
    }
    return r;
}
} // namespace

UniPoly gcd_univariate(const UniPoly& u, const UniPoly& v) {
    if (u.is_zero() && v.is_zero()) throw std::runtime_error("gcd_univariate: both zero");
    UniPoly a = strip_content(u), b = strip_content(v);
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() < b.degree()) std::swap(a, b);
    // primitive pseudo-remainder sequence
    while (!b.is_zero()) {
        UniPoly r = strip_content(pseudo_rem(a, b));
        a = b;
        b = r;
    }
    return a.monic();
}

UniPoly squarefree_part(const UniPoly& u) {
    if (u.is_zero() || u.degree() == 0) return u.monic();
    UniPoly g = gcd_univariate(u, u.derivative());
    if (g.degree() == 0) return u.monic();
    return u.divide_exact(g).monic();
}

// ----------------------------------------------------- forms / resultants

std::array<Var, 2> remaining_vars(Var v) {
    switch (v) {
        case Var::X: return {Var::Y, Var::Z};
        case Var::Y: return {Var::X, Var::Z};
        default: return {Var::X, Var::Y};
    }
}

BinaryFormView binary_form_view(const HomPoly& form, Var s, Var t) {
    int si = static_cast<int>(s), ti = static_cast<int>(t);
    BinaryFormView v;
    v.form_degree = form.degree();
    if (form.is_zero()) {
        v.mult_at_infinity = 0;
        return v;
    }
    int other = 3 - si - ti;
    int max_s = 0;
    for (const auto& [m, c] : form.terms()) {
        if (m.e[other] != 0)
            throw std::runtime_error("binary_form_view: form involves the eliminated variable");
        max_s = std::max(max_s, m.e[si]);
    }
    std::vector<FieldK> coeffs(max_s + 1, FieldK(0));
    for (const auto& [m, c] : form.terms()) coeffs[m.e[si]] = c;
    v.poly = UniPoly(std::move(coeffs));
    // s-degree deficit = power of t dividing the form = multiplicity of (1:0)
    v.mult_at_infinity = v.form_degree - max_s;
    return v;
}

namespace {
FieldK det_k(std::vector<std::vector<FieldK>> m) {
    int n = static_cast<int>(m.size());
    FieldK d(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!m[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return FieldK(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            d = -d;
        }
        d *= m[col][col];
        FieldK inv_p = m[col][col].inv();
        for (int r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            FieldK factor = m[r][col] * inv_p;
            for (int j = col; j < n; ++j) m[r][j] -= factor * m[col][j];
        }
    }
    return d;
}
} // namespace

HomPoly det3(const std::array<std::array<HomPoly, 3>, 3>& m) {
    static const int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                   {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    static const int sign[6] = {1, 1, 1, -1, -1, -1};
    int common_degree = -1;
    HomPoly acc(0);
    bool first_term = true;
    for (int k = 0; k < 6; ++k) {
        HomPoly p = m[0][perm[k][0]] * m[1][perm[k][1]];
        p = p * m[2][perm[k][2]];
        if (p.is_zero()) continue;
        if (common_degree < 0)
            common_degree = p.degree();
        else if (p.degree() != common_degree)
            throw DegreeMismatch();
        if (sign[k] < 0) p = -p;
        if (first_term) {
            acc = p;
            first_term = false;
        } else {
            acc = acc + p;
        }
    }
    return acc;
}

HomPoly resultant(const HomPoly& f, const HomPoly& g, Var var) {
    int mv = f.degree_in(var), nv = g.degree_in(var);
    if (mv < 0 || nv < 0) throw std::runtime_error("resultant: zero polynomial input");
    auto [sv, tv] = remaining_vars(var);
    if (mv == 0 || nv == 0) {
        // Res(f, g) with deg_v g = 0 is g^{mv}; with both 0 it is 1.
        HomPoly base = (nv == 0) ? g : f;
        int e = (nv == 0) ? mv : nv;
        HomPoly r = HomPoly::constant(FieldK(1));
        for (int i = 0; i < e; ++i) r = r * base;
        return r;
    }
    int M = mv + nv;
    // Sylvester entries: syl[r][c] as (which poly, coefficient index) with
    // f-rows first, descending powers of var.
    std::vector<HomPoly> fc(mv + 1), gc(nv + 1);
    for (int j = 0; j <= mv; ++j) fc[j] = f.coeff_of_power(var, j);
    for (int j = 0; j <= nv; ++j) gc[j] = g.coeff_of_power(var, j);
    // homogeneity degree of the determinant
    int D = nv * f.degree() + mv * g.degree() - mv * nv;

    // evaluate at (s, t) = (q, 1) for D+1 distinct rationals
    auto eval_bivariate = [&](const HomPoly& p, const FieldK& q, const std::vector<FieldK>& qpow) {
        int si = static_cast<int>(sv);
        FieldK acc(0);
        for (const auto& [m, c] : p.terms()) acc += c * qpow[m.e[si]];
        return acc;
    };
    int maxdeg = std::max(f.degree(), g.degree());
    std::vector<FieldK> values;
    std::vector<FieldK> points;
    for (int i = 0; i <= D; ++i) {
        long q = (i % 2 == 0) ? i / 2 : -(i / 2 + 1); // 0, -1, 1, -2, 2, ...
        FieldK qk(q);
        std::vector<FieldK> qpow{FieldK(1)};
        for (int e = 1; e <= maxdeg; ++e) qpow.push_back(qpow.back() * qk);
        std::vector<std::vector<FieldK>> syl(M, std::vector<FieldK>(M, FieldK(0)));
        for (int r = 0; r < nv; ++r)
            for (int j = 0; j <= mv; ++j) syl[r][r + j] = eval_bivariate(fc[mv - j], qk, qpow);
        for (int r = 0; r < mv; ++r)
            for (int j = 0; j <= nv; ++j)
                syl[nv + r][r + j] = eval_bivariate(gc[nv - j], qk, qpow);
        points.push_back(qk);
        values.push_back(det_k(std::move(syl)));
    }

    // Lagrange interpolation (Newton form) for the dehomogenized resultant
    std::vector<FieldK> newton(values);
    for (int level = 1; level <= D; ++level)
        for (int i = D; i >= level; --i) {
            FieldK denom = (points[i] - points[i - level]).inv();
            newton[i] = (newton[i] - newton[i - 1]) * denom;
        }
    // expand Newton form into monomial coefficients
    std::vector<FieldK> poly{newton[D]};
    for (int i = D - 1; i >= 0; --i) {
        // poly <- poly*(u - points[i]) + newton[i]
        std::vector<FieldK> np(poly.size() + 1, FieldK(0));
        for (size_t j = 0; j < poly.size(); ++j) {
            np[j + 1] += poly[j];
            np[j] -= poly[j] * points[i];
        }
        np[0] += newton[i];
        poly = std::move(np);
    }
    HomPoly result(D);
    for (size_t j = 0; j < poly.size(); ++j) {
        if (poly[j].is_zero()) continue;
        Monomial m;
        m.e[static_cast<int>(sv)] = static_cast<int>(j);
        m.e[static_cast<int>(tv)] = D - static_cast<int>(j);
        result.add_term(m, poly[j]);
    }
    return result;
}

} // namespace curves
