#include "curves/linalg.hpp"

#include <algorithm>

namespace curves {

// ----------------------------------------------------------------- rank
//
// Entries are scaled row-wise to integer coordinates in the order
// O = Z[w, a] and eliminated with Bareiss two-step updates; every division
// is exact in O.  Division by the previous pivot p uses the adjugate and
// determinant of the 6x6 integer matrix of multiplication by p, so the
// whole computation stays in mpz.

namespace {

// same basis product reduction as FieldK (index = 2*aexp + wexp)
struct BasisProd {
    int8_t idx0, coef0;
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

struct OElem {
    mpz_class c[6];

    bool is_zero() const {
        for (const auto& v : c)
            if (sgn(v) != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (int i = 1; i < 6; ++i)
            if (sgn(c[i]) != 0) return false;
        return true;
    }
    // rough pivot-quality weight: total limb count plus coordinate spread
    size_t weight() const {
        size_t w = 0;
        for (const auto& v : c)
            if (sgn(v) != 0) w += mpz_size(v.get_mpz_t()) + 4;
        return w;
    }
};

void o_addmul(OElem& acc, const OElem& x, const OElem& y, mpz_class& tmp) {
    for (int i = 0; i < 6; ++i) {
        if (sgn(x.c[i]) == 0) continue;
        for (int j = 0; j < 6; ++j) {
            if (sgn(y.c[j]) == 0) continue;
            tmp = x.c[i] * y.c[j];
            const BasisProd& bp = kProd.t[i][j];
            if (bp.coef0 == 1)
                acc.c[bp.idx0] += tmp;
            else if (bp.coef0 == -1)
                acc.c[bp.idx0] -= tmp;
            else
                acc.c[bp.idx0] += bp.coef0 * tmp;
            if (bp.idx1 >= 0) {
                if (bp.coef1 == -1)
                    acc.c[bp.idx1] -= tmp;
                else
                    acc.c[bp.idx1] += bp.coef1 * tmp;
            }
        }
    }
}

// determinant of an n x n mpz matrix by Laplace expansion on the first row
// (n <= 6; used only on multiplication matrices, a handful per pivot step)
mpz_class small_det(const std::vector<std::vector<mpz_class>>& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    mpz_class acc = 0;
    for (size_t j = 0; j < n; ++j) {
        if (sgn(m[0][j]) == 0) continue;
        std::vector<std::vector<mpz_class>> minor(n - 1, std::vector<mpz_class>(n - 1));
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t cidx = 0; cidx < n; ++cidx) {
                if (cidx == j) continue;
                minor[r - 1][cc++] = m[r][cidx];
            }
        }
        mpz_class term = m[0][j] * small_det(minor);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

// Exact divider by a fixed p in O: q = M_p^{-1} x = adj(M_p) x / det(M_p).
struct ODivider {
    bool rational = true;
    mpz_class det;            // p itself when rational
    mpz_class adj[6][6];      // used only in the general case

    explicit ODivider(const OElem& p) {
        if (p.is_rational()) {
            det = p.c[0];
            return;
        }
        rational = false;
        // column j of M_p holds the coordinates of p * b_j
        mpz_class m[6][6];
        for (int j = 0; j < 6; ++j) {
            OElem bj, col{};
            bj.c[j] = 1;
            mpz_class tmp;
            o_addmul(col, p, bj, tmp);
            for (int i = 0; i < 6; ++i) m[i][j] = col.c[i];
        }
        std::vector<std::vector<mpz_class>> full(6, std::vector<mpz_class>(6));
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) full[i][j] = m[i][j];
        det = small_det(full);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) {
                std::vector<std::vector<mpz_class>> minor(5, std::vector<mpz_class>(5));
                int rr = 0;
                for (int r = 0; r < 6; ++r) {
                    if (r == j) continue; // adj = transposed cofactors
                    int cc = 0;
                    for (int cidx = 0; cidx < 6; ++cidx) {
                        if (cidx == i) continue;
                        minor[rr][cc++] = m[r][cidx];
                    }
                    ++rr;
                }
                adj[i][j] = small_det(minor);
                if ((i + j) % 2 != 0) adj[i][j] = -adj[i][j];
            }
    }

    void divide(OElem& x) const {
        if (rational) {
            for (int i = 0; i < 6; ++i) {
                if (sgn(x.c[i]) == 0) continue;
                mpz_divexact(x.c[i].get_mpz_t(), x.c[i].get_mpz_t(), det.get_mpz_t());
            }
            return;
        }
        OElem q{};
        for (int i = 0; i < 6; ++i) {
            for (int j = 0; j < 6; ++j) {
                if (sgn(adj[i][j]) == 0 || sgn(x.c[j]) == 0) continue;
                q.c[i] += adj[i][j] * x.c[j];
            }
            if (sgn(q.c[i]) != 0)
                mpz_divexact(q.c[i].get_mpz_t(), q.c[i].get_mpz_t(), det.get_mpz_t());
        }
        x = q;
    }
};

} // namespace

int KMat::rank() const {
    // scale each row to integer coordinates
    std::vector<std::vector<OElem>> m(rows_, std::vector<OElem>(cols_));
    for (int i = 0; i < rows_; ++i) {
        mpz_class lcm = 1;
        for (int j = 0; j < cols_; ++j)
            for (int k = 0; k < 6; ++k) {
                const Rational& q = at(i, j).coord(k);
                if (sgn(q) != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
            }
        for (int j = 0; j < cols_; ++j)
            for (int k = 0; k < 6; ++k) {
                const Rational& q = at(i, j).coord(k);
                if (sgn(q) == 0) continue;
                mpz_class scaled = q.get_num();
                scaled *= lcm / q.get_den();
                m[i][j].c[k] = scaled;
            }
    }

    std::vector<int> rowp(rows_), colp(cols_);
    for (int i = 0; i < rows_; ++i) rowp[i] = i;
    for (int j = 0; j < cols_; ++j) colp[j] = j;

    int r = 0;
    OElem prev{};
    prev.c[0] = 1;
    mpz_class tmp;
    int steps = std::min(rows_, cols_);
    for (; r < steps; ++r) {
        // lightest nonzero entry of the remaining submatrix as pivot
        int pi = -1, pj = -1;
        size_t best = 0;
        for (int i = r; i < rows_; ++i)
            for (int j = r; j < cols_; ++j) {
                const OElem& e = m[rowp[i]][colp[j]];
                if (e.is_zero()) continue;
                size_t w = e.weight();
                if (pi < 0 || w < best) {
                    pi = i;
                    pj = j;
                    best = w;
                }
            }
        if (pi < 0) break;
        std::swap(rowp[r], rowp[pi]);
        std::swap(colp[r], colp[pj]);

        const OElem& piv = m[rowp[r]][colp[r]];
        ODivider div(prev);
        for (int i = r + 1; i < rows_; ++i) {
            OElem& lead = m[rowp[i]][colp[r]];
            bool lead_zero = lead.is_zero();
            for (int j = r + 1; j < cols_; ++j) {
                OElem& x = m[rowp[i]][colp[j]];
                OElem upd{};
                o_addmul(upd, piv, x, tmp);
                if (!lead_zero) {
                    OElem sub{};
                    o_addmul(sub, lead, m[rowp[r]][colp[j]], tmp);
                    for (int k = 0; k < 6; ++k) upd.c[k] -= sub.c[k];
                }
                div.divide(upd);
                x = upd;
            }
            lead = OElem{};
        }
        prev = piv;
    }
    return r;
}

// --------------------------------------------------- nullspace and solve

namespace {
// Reduced row echelon form over K; returns pivot column of each pivot row.
std::vector<int> rref(std::vector<std::vector<FieldK>>& m, int cols) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols && row < static_cast<int>(m.size()); ++col) {
        int piv = -1;
        for (int i = row; i < static_cast<int>(m.size()); ++i)
            if (!m[i][col].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[row], m[piv]);
        FieldK inv_p = m[row][col].inv();
        for (int j = col; j < static_cast<int>(m[row].size()); ++j) m[row][j] *= inv_p;
        for (int i = 0; i < static_cast<int>(m.size()); ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            FieldK f = m[i][col];
            for (int j = col; j < static_cast<int>(m[i].size()); ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}
} // namespace

std::vector<std::vector<FieldK>> KMat::nullspace() const {
    std::vector<std::vector<FieldK>> m(rows_, std::vector<FieldK>(cols_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m[i][j] = at(i, j);
    std::vector<int> pivots = rref(m, cols_);
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<FieldK>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldK> v(cols_, FieldK(0));
        v[free] = FieldK(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<FieldK>> KMat::solve(const std::vector<FieldK>& rhs) const {
    if (static_cast<int>(rhs.size()) != rows_)
        throw std::runtime_error("KMat::solve: right-hand side has wrong length");
    std::vector<std::vector<FieldK>> m(rows_, std::vector<FieldK>(cols_ + 1));
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) m[i][j] = at(i, j);
        m[i][cols_] = rhs[i];
    }
    std::vector<int> pivots = rref(m, cols_); // never pivot on the rhs column
    for (int i = static_cast<int>(pivots.size()); i < rows_; ++i)
        if (!m[i][cols_].is_zero()) return std::nullopt;
    std::vector<FieldK> x(cols_, FieldK(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][cols_];
    return x;
}

} // namespace curves
