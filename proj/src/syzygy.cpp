#include "curves/syzygy.hpp"

#include <cmath>

#include <json.hpp>

#include "curves/linalg.hpp"

namespace curves {

namespace {

using MonIndex = std::map<Monomial, int, GrlexGreater>;

MonIndex index_of_degree(const std::vector<Monomial>& mons) {
    MonIndex idx;
    for (size_t i = 0; i < mons.size(); ++i) idx.emplace(mons[i], static_cast<int>(i));
    return idx;
}

Monomial mon_mul(const Monomial& l, const Monomial& r) {
    return Monomial{{l.e[0] + r.e[0], l.e[1] + r.e[1], l.e[2] + r.e[2]}};
}

/// Matrix of S_k^3 -> S_{k+d-1}, (a,b,c) -> a f_x + b f_y + c f_z, columns
/// grouped by component and indexed by the grlex monomial lists.
KMat ar_matrix(const HomPoly& f, int k) {
    int d = f.degree();
    auto row_mons = monomials_of_degree(k + d - 1);
    auto col_mons = monomials_of_degree(k);
    MonIndex ridx = index_of_degree(row_mons);
    int n = static_cast<int>(col_mons.size());
    std::array<HomPoly, 3> p{f.partial(Var::X), f.partial(Var::Y), f.partial(Var::Z)};
    KMat m(static_cast<int>(row_mons.size()), 3 * n);
    for (int comp = 0; comp < 3; ++comp)
        for (int ci = 0; ci < n; ++ci)
            for (const auto& [mon, c] : p[comp].terms())
                m.at(ridx.at(mon_mul(col_mons[ci], mon)), comp * n + ci) += c;
    return m;
}

/// Coefficient vector of a syzygy triple of degree k in the column layout
/// of ar_matrix.
std::vector<FieldK> triple_vector(const SyzygyTriple& t, const MonIndex& cidx, int n) {
    std::vector<FieldK> v(3 * n, FieldK(0));
    const HomPoly* comps[3] = {&t.a, &t.b, &t.c};
    for (int comp = 0; comp < 3; ++comp)
        for (const auto& [mon, c] : comps[comp]->terms()) v[comp * n + cidx.at(mon)] = c;
    return v;
}

int rank_of_rows(const std::vector<std::vector<FieldK>>& rows, int width) {
    if (rows.empty()) return 0;
    KMat m(static_cast<int>(rows.size()), width);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < width; ++j) m.at(i, j) = rows[i][j];
    return m.rank();
}

int tjurina_with_tail(const HomPoly& f, std::vector<int>* tail) {
    int d = f.degree();
    if (d < 1 || f.is_zero()) throw SyzygyError("input must be a nonconstant curve");
    int k0 = std::max(0, 3 * (d - 2));
    int cap = k0 + d;
    std::vector<int> vals;
    for (int k = k0; k <= cap; ++k) {
        int h = jacobian_hilbert(f, k);
        vals.push_back(h);
        if (vals.size() >= 2 && vals[vals.size() - 2] == h) {
            if (tail) *tail = vals;
            return h;
        }
    }
    throw SyzygyError(
        "Jacobian Hilbert function did not stabilize; the curve is likely non-reduced");
}

} // namespace

GradedKernelBasis ar_basis(const HomPoly& f, int k) {
    if (k < 0) throw SyzygyError("negative degree");
    auto col_mons = monomials_of_degree(k);
    int n = static_cast<int>(col_mons.size());
    GradedKernelBasis out{k, {}};
    for (const std::vector<FieldK>& v : ar_matrix(f, k).nullspace()) {
        SyzygyTriple t{HomPoly(k), HomPoly(k), HomPoly(k)};
        HomPoly* comps[3] = {&t.a, &t.b, &t.c};
        for (int comp = 0; comp < 3; ++comp)
            for (int ci = 0; ci < n; ++ci) comps[comp]->add_term(col_mons[ci], v[comp * n + ci]);
        out.basis.push_back(std::move(t));
    }
    return out;
}

int ar_dimension(const HomPoly& f, int k) {
    if (k < 0) throw SyzygyError("negative degree");
    int n = dim_graded_piece(k);
    return 3 * n - ar_matrix(f, k).rank();
}

int mdr(const HomPoly& f) {
    int d = f.degree();
    for (int k = 1; k <= d - 1; ++k)
        if (ar_dimension(f, k) > 0) return k;
    throw SyzygyError("no syzygy found up to the Koszul degree; input is not a reduced curve");
}

int jacobian_hilbert(const HomPoly& f, int k) {
    if (k < 0) return 0;
    int d = f.degree();
    int j = k - (d - 1);
    if (j < 0) return dim_graded_piece(k);
    auto row_mons = monomials_of_degree(k);
    auto col_mons = monomials_of_degree(j);
    MonIndex ridx = index_of_degree(row_mons);
    int n = static_cast<int>(col_mons.size());
    std::array<HomPoly, 3> p{f.partial(Var::X), f.partial(Var::Y), f.partial(Var::Z)};
    KMat m(static_cast<int>(row_mons.size()), 3 * n);
    for (int comp = 0; comp < 3; ++comp)
        for (int ci = 0; ci < n; ++ci)
            for (const auto& [mon, c] : p[comp].terms())
                m.at(ridx.at(mon_mul(col_mons[ci], mon)), comp * n + ci) += c;
    return dim_graded_piece(k) - m.rank();
}

int total_tjurina(const HomPoly& f) { return tjurina_with_tail(f, nullptr); }

std::vector<int> generator_degrees(const HomPoly& f) {
    int d = f.degree();
    int cap = 3 * d;
    std::vector<int> degs;
    std::vector<std::pair<int, SyzygyTriple>> gens;
    int quiet = 0; // consecutive degrees with no new generator
    for (int k = 1; k <= cap; ++k) {
        auto col_mons = monomials_of_degree(k);
        MonIndex cidx = index_of_degree(col_mons);
        int n = static_cast<int>(col_mons.size());
        int dim_k = ar_dimension(f, k);

        // span of multiples of the generators already found
        std::vector<std::vector<FieldK>> span;
        for (const auto& [j, t] : gens)
            for (const Monomial& m : monomials_of_degree(k - j)) {
                HomPoly mp = HomPoly::term(FieldK(1), m);
                span.push_back(triple_vector({mp * t.a, mp * t.b, mp * t.c}, cidx, n));
            }
        int old_rank = rank_of_rows(span, 3 * n);
        int fresh = dim_k - old_rank;
        if (fresh < 0) throw SyzygyError("generator span exceeds the module dimension");
        if (fresh == 0) {
            if (++quiet >= 2 && k >= d) break;
            continue;
        }
        quiet = 0;
        // extend by kernel elements that enlarge the span
        int rank = old_rank;
        for (const SyzygyTriple& t : ar_basis(f, k).basis) {
            if (rank - old_rank == fresh) break;
            span.push_back(triple_vector(t, cidx, n));
            int r2 = rank_of_rows(span, 3 * n);
            if (r2 > rank) {
                rank = r2;
                gens.emplace_back(k, t);
                degs.push_back(k);
            } else {
                span.pop_back();
            }
        }
        if (rank - old_rank != fresh)
            throw SyzygyError("kernel basis failed to span the new generators");
    }
    return degs;
}

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Free: return "Free";
    case Verdict::NearlyFree: return "NearlyFree";
    default: return "MSyzygy";
    }
}

std::string FreenessCertificate::to_json() const {
    nlohmann::json j{{"degree", degree},
                     {"mdr", mdr},
                     {"tjurina", tjurina},
                     {"verdict", verdict_name(verdict)},
                     {"exponents", exponents},
                     {"generator_degrees", generator_degrees},
                     {"hilbert_tail", hilbert_tail}};
    return j.dump();
}

FreenessCertificate certify(const HomPoly& f) {
    int d = f.degree();
    int r = mdr(f);
    std::vector<int> tail;
    int tau = tjurina_with_tail(f, &tail);
    long dm1 = d - 1;
    long lhs = static_cast<long>(r) * r - r * dm1 + dm1 * dm1;
    std::vector<int> gd = generator_degrees(f);
    FreenessCertificate cert{d, r, tau, Verdict::MSyzygy, {}, gd, tail, lhs};
    if (2 * r <= d - 1 && lhs == tau) {
        cert.verdict = Verdict::Free;
        cert.exponents = {r, d - 1 - r};
        if (gd != std::vector<int>{std::min(r, d - 1 - r), std::max(r, d - 1 - r)})
            throw SyzygyError("free verdict contradicts the generator degrees");
    } else if (lhs == tau + 1) {
        cert.verdict = Verdict::NearlyFree;
        cert.exponents = {r, d - r};
        if (gd != std::vector<int>{r, d - r, d - r})
            throw SyzygyError("nearly-free verdict contradicts the generator degrees");
    } else {
        cert.exponents = gd;
    }
    return cert;
}

NeverFreeScan never_free_scan(long k) {
    if (k < 1) throw SyzygyError("scan parameter must be positive");
    NeverFreeScan s{2 * k * (k - 1) + 11 * k, -4 * k * k + 12 * k - 12, false};
    if (s.discriminant >= 0) {
        long sq = std::lround(std::sqrt(static_cast<double>(s.discriminant)));
        while (sq * sq > s.discriminant) --sq;
        while ((sq + 1) * (sq + 1) <= s.discriminant) ++sq;
        if (sq * sq == s.discriminant) {
            long d = 3 + 2 * k; // degree of the cubic plus k conics
            for (long sign : {1L, -1L}) {
                long num = (d - 1) + sign * sq;
                if (num % 2 == 0) {
                    long r = num / 2;
                    if (r >= 1 && 2 * r <= d - 1) s.free_possible = true;
                }
            }
        }
    }
    return s;
}

} // namespace curves
