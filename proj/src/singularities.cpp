#include "curves/singularities.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "curves/kroots.hpp"
#include "curves/linalg.hpp"

namespace curves {

namespace {

// ------------------------------------------------------------- local germs

/// Bivariate polynomial in the local coordinates (u, v).
using Biv = std::map<std::pair<int, int>, FieldK>;

void biv_add(Biv& b, int i, int j, const FieldK& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = b.emplace(std::make_pair(i, j), c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) b.erase(it);
    }
}

/// Coefficients of (c0 + T)^a as a dense vector in T.
std::vector<FieldK> shifted_power(const FieldK& c0, int a) {
    std::vector<FieldK> cur{FieldK(1)};
    for (int step = 0; step < a; ++step) {
        std::vector<FieldK> next(cur.size() + 1, FieldK(0));
        for (size_t i = 0; i < cur.size(); ++i) {
            next[i] += cur[i] * c0;
            next[i + 1] += cur[i];
        }
        cur = std::move(next);
    }
    return cur;
}

/// Affine germ of f at p: dehomogenize in the chart of the largest-index
/// nonzero coordinate and translate p to the origin.
Biv germ_at(const HomPoly& f, const ProjPoint& p) {
    int chart = 2;
    while (p[chart].is_zero()) --chart;
    int uvar = (chart == 0) ? 1 : 0;
    int vvar = (chart == 2) ? 1 : 2;
    FieldK scale = p[chart].inv();
    FieldK u0 = p[uvar] * scale, v0 = p[vvar] * scale;
    Biv g;
    for (const auto& [m, c] : f.terms()) {
        std::vector<FieldK> pu = shifted_power(u0, m.e[uvar]);
        std::vector<FieldK> pv = shifted_power(v0, m.e[vvar]);
        for (size_t i = 0; i < pu.size(); ++i)
            for (size_t j = 0; j < pv.size(); ++j)
                biv_add(g, static_cast<int>(i), static_cast<int>(j), c * pu[i] * pv[j]);
    }
    return g;
}

int germ_multiplicity(const Biv& g) {
    int best = -1;
    for (const auto& [m, c] : g) {
        int d = m.first + m.second;
        if (best < 0 || d < best) best = d;
    }
    return best; // -1 for the zero germ
}

/// dim K[u,v] / (ideal(gens) + m^N).
int truncated_quotient_dim(const std::vector<Biv>& gens, int N) {
    std::map<std::pair<int, int>, int> col;
    int ncols = 0;
    for (int a = 0; a < N; ++a)
        for (int b = 0; a + b < N; ++b) col.emplace(std::make_pair(a, b), ncols++);

    std::vector<std::vector<FieldK>> rows;
    for (const Biv& g : gens) {
        if (g.empty()) continue;
        for (int i = 0; i < N; ++i)
            for (int j = 0; i + j < N; ++j) {
                std::vector<FieldK> row(ncols, FieldK(0));
                bool any = false;
                for (const auto& [m, c] : g) {
                    int a = m.first + i, b = m.second + j;
                    if (a + b >= N) continue;
                    row[col.at({a, b})] = c;
                    any = true;
                }
                if (any) rows.push_back(std::move(row));
            }
    }
    if (rows.empty()) return ncols;
    KMat mat(static_cast<int>(rows.size()), ncols);
    for (int i = 0; i < mat.rows(); ++i)
        for (int j = 0; j < ncols; ++j) mat.at(i, j) = rows[i][j];
    return ncols - mat.rank();
}

int stabilized_dim(const std::vector<Biv>& gens, int bound) {
    int prev = -1;
    for (int N = 8; N <= 40; N += 4) {
        int dim = truncated_quotient_dim(gens, N);
        if (dim > bound)
            throw SingularityError(
                "local ring dimension exceeds the isolated-singularity bound; the "
                "singular locus is not isolated");
        if (dim == prev) return dim;
        prev = dim;
    }
    throw SingularityError("local ring dimension did not stabilize by the truncation cap");
}

std::array<Biv, 3> germ_with_partials(const HomPoly& f, const ProjPoint& p) {
    Biv g = germ_at(f, p);
    Biv gu, gv;
    for (const auto& [m, c] : g) {
        if (m.first > 0) biv_add(gu, m.first - 1, m.second, c * FieldK(m.first));
        if (m.second > 0) biv_add(gv, m.first, m.second - 1, c * FieldK(m.second));
    }
    return {g, gu, gv};
}

long isolated_bound(const HomPoly& f) {
    long d = f.degree();
    return (d - 1) * (d - 1);
}

// ---------------------------------------------------------- singular locus

UniPoly var_slice(const HomPoly& g, Var e, const FieldK& s0, const FieldK& t0) {
    auto [svar, tvar] = remaining_vars(e);
    FieldK coords[3];
    coords[static_cast<int>(svar)] = s0;
    coords[static_cast<int>(tvar)] = t0;
    std::vector<FieldK> coeffs(std::max(g.degree_in(e), 0) + 1, FieldK(0));
    for (int j = 0; j < static_cast<int>(coeffs.size()); ++j)
        coeffs[j] = g.coeff_of_power(e, j).evaluate(coords[0], coords[1], coords[2]);
    return UniPoly(std::move(coeffs));
}

ProjPoint assemble_point(Var e, const FieldK& ev, const FieldK& s0, const FieldK& t0) {
    auto [svar, tvar] = remaining_vars(e);
    FieldK coords[3];
    coords[static_cast<int>(e)] = ev;
    coords[static_cast<int>(svar)] = s0;
    coords[static_cast<int>(tvar)] = t0;
    return ProjPoint(coords[0], coords[1], coords[2]);
}

} // namespace

SingularLocus singular_points(const HomPoly& f) {
    if (f.is_zero() || f.degree() < 1) throw SingularityError("expected a nonconstant curve");
    std::array<HomPoly, 3> gr{f.partial(Var::X), f.partial(Var::Y), f.partial(Var::Z)};
    auto grad_zero = [&](const ProjPoint& p) {
        return gr[0].evaluate(p).is_zero() && gr[1].evaluate(p).is_zero() &&
               gr[2].evaluate(p).is_zero();
    };

    // choose an elimination variable and intersect the slice loci of all
    // nonzero pairwise eliminants: singular slices must divide every one,
    // so the gcd discards most spurious pair-only common roots
    bool found = false;
    Var evar = Var::X;
    UniPoly elim;
    int elim_inf = 0;
    for (Var e : {Var::X, Var::Y, Var::Z}) {
        auto [svar_, tvar_] = remaining_vars(e);
        bool first = true;
        UniPoly g;
        int infm = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                if (gr[i].is_zero() || gr[j].is_zero()) continue;
                if (gr[i].degree_in(e) < 1 && gr[j].degree_in(e) < 1) continue;
                HomPoly r = resultant(gr[i], gr[j], e);
                if (r.is_zero()) continue;
                BinaryFormView view = binary_form_view(r, svar_, tvar_);
                if (first) {
                    g = view.poly;
                    infm = view.mult_at_infinity;
                    first = false;
                } else {
                    g = g.degree() < 1 || view.poly.degree() < 1
                            ? UniPoly::constant(FieldK(1))
                            : gcd_univariate(g, view.poly);
                    infm = std::min(infm, view.mult_at_infinity);
                }
            }
        if (!first) {
            found = true;
            evar = e;
            elim = g;
            elim_inf = infm;
            break;
        }
    }
    if (!found)
        throw SingularityError(
            "every pair of partials shares a factor; the singular locus is not isolated");

    std::set<ProjPoint> pts;
    int residual_degree = 0;
    UniPoly residual = UniPoly::constant(FieldK(1));

    // the coordinate point of the elimination variable is seen by no slice
    {
        FieldK coords[3];
        coords[static_cast<int>(evar)] = FieldK(1);
        ProjPoint axis(coords[0], coords[1], coords[2]);
        if (grad_zero(axis)) pts.insert(axis);
    }

    std::vector<std::pair<FieldK, FieldK>> slices;
    if (elim_inf > 0) slices.emplace_back(FieldK(1), FieldK(0));
    if (elim.degree() >= 1) {
        KRootReport rep = roots_in_k(squarefree_part(elim));
        for (const KRoot& r : rep.roots) slices.emplace_back(r.value, FieldK(1));
        residual = rep.residual;
        residual_degree += std::max(rep.residual.degree(), 0);
    }

    for (const auto& [s0, t0] : slices) {
        UniPoly common;
        bool have = false, all_zero = true;
        for (int i = 0; i < 3; ++i) {
            UniPoly s = var_slice(gr[i], evar, s0, t0);
            if (s.is_zero()) continue;
            all_zero = false;
            common = have ? gcd_univariate(common, s) : s;
            have = true;
        }
        if (all_zero)
            throw SingularityError("a whole line is singular; the input is not reduced");
        if (common.degree() < 1) continue;
        KRootReport rep = roots_in_k(common);
        residual_degree += std::max(rep.residual.degree(), 0);
        for (const KRoot& r : rep.roots) {
            ProjPoint p = assemble_point(evar, r.value, s0, t0);
            if (grad_zero(p)) pts.insert(p);
        }
    }

    return SingularLocus{{pts.begin(), pts.end()}, residual, residual_degree};
}

int local_tjurina(const HomPoly& f, const ProjPoint& p) {
    auto [g, gu, gv] = germ_with_partials(f, p);
    return stabilized_dim({g, gu, gv}, isolated_bound(f));
}

int local_milnor(const HomPoly& f, const ProjPoint& p) {
    auto [g, gu, gv] = germ_with_partials(f, p);
    return stabilized_dim({gu, gv}, isolated_bound(f));
}

std::string SingularityReport::type_str() const {
    switch (type) {
    case SingType::A_k: return "A_" + std::to_string(k);
    case SingType::J_2_0: return "J_2_0";
    default: return "Unrecognized";
    }
}

std::string SingularityReport::to_json() const {
    nlohmann::json j{{"point", point.str()},
                     {"tjurina", local_tjurina},
                     {"milnor", local_milnor},
                     {"multiplicity", multiplicity},
                     {"type", type_str()}};
    return j.dump();
}

SingularityReport classify(const HomPoly& f, const ProjPoint& p) {
    auto [g, gu, gv] = germ_with_partials(f, p);
    long bound = isolated_bound(f);
    int tau = stabilized_dim({g, gu, gv}, bound);
    if (tau == 0) throw SingularityError("point is not a singular point of the curve");
    int mu = stabilized_dim({gu, gv}, bound);
    int mult = germ_multiplicity(g);
    SingularityReport rep{p, tau, mu, mult, SingType::Unrecognized, 0};
    if (mult == 2 && tau == mu) {
        rep.type = SingType::A_k;
        rep.k = tau;
    } else if (mult == 3 && tau == 10 && mu == 10) {
        rep.type = SingType::J_2_0;
    }
    return rep;
}

namespace {

/// Multiplicities of the roots of u over the algebraic closure, by Yun's
/// squarefree decomposition.
std::vector<int> yun_pattern(UniPoly u) {
    std::vector<int> out;
    if (u.degree() < 1) return out;
    u = u.monic();
    UniPoly g = gcd_univariate(u, u.derivative());
    UniPoly w = u.divide_exact(g);
    for (int i = 1; w.degree() > 0; ++i) {
        UniPoly y = gcd_univariate(w, g);
        UniPoly exact = w.divide_exact(y);
        for (int c = 0; c < exact.degree(); ++c) out.push_back(i);
        w = y;
        g = g.divide_exact(y);
    }
    return out;
}

std::vector<int> resultant_pattern(const HomPoly& a, const HomPoly& b, Var v) {
    HomPoly r = resultant(a, b, v);
    if (r.is_zero()) throw SingularityError("conics share a component");
    auto [svar, tvar] = remaining_vars(v);
    BinaryFormView view = binary_form_view(r, svar, tvar);
    std::vector<int> pat = yun_pattern(view.poly);
    if (view.mult_at_infinity > 0) pat.push_back(view.mult_at_infinity);
    std::sort(pat.rbegin(), pat.rend());
    int total = 0;
    for (int m : pat) total += m;
    if (total != 4) throw SingularityError("intersection multiplicities do not sum to 4");
    return pat;
}

} // namespace

PairIntersectionType conic_pair_type(const HomPoly& q, const HomPoly& qprime) {
    if (q.degree() != 2 || qprime.degree() != 2)
        throw SingularityError("conic_pair_type expects two conics");

    // seeded unimodular changes of coordinates used when a chart is unusable
    std::vector<LinearChange> seeds{LinearChange()};
    FieldK one(1), zero(0);
    seeds.push_back(LinearChange({{{one, one, zero}, {zero, one, zero}, {zero, zero, one}}}));
    seeds.push_back(LinearChange({{{one, zero, zero}, {zero, one, one}, {zero, zero, one}}}));
    seeds.push_back(LinearChange({{{one, zero, one}, {one, one, zero}, {zero, zero, one}}}));

    // A projection can only merge intersection points, never split them, so
    // the true pattern is the finest one seen; require it in two
    // independent charts before trusting it.
    std::vector<std::vector<int>> patterns;
    for (const LinearChange& t : seeds) {
        HomPoly a = q.substitute(t), b = qprime.substitute(t);
        for (Var v : {Var::X, Var::Y, Var::Z}) {
            if (a.degree_in(v) != 2 || b.degree_in(v) != 2) continue;
            patterns.push_back(resultant_pattern(a, b, v));
        }
    }
    if (patterns.empty())
        throw SingularityError("no usable chart for the conic pair");
    size_t max_parts = 0;
    for (const auto& pat : patterns) max_parts = std::max(max_parts, pat.size());
    const std::vector<int>* best = nullptr;
    int confirmations = 0;
    for (const auto& pat : patterns) {
        if (pat.size() != max_parts) continue;
        if (!best) {
            best = &pat;
            confirmations = 1;
        } else if (*best == pat) {
            ++confirmations;
        } else {
            throw SingularityError("charts disagree on the finest intersection pattern");
        }
    }
    if (confirmations < 2)
        throw SingularityError("finest intersection pattern seen in only one chart");
    PairSummary s = PairSummary::Other;
    if (*best == std::vector<int>{1, 1, 1, 1}) s = PairSummary::FourNodes;
    else if (*best == std::vector<int>{2, 1, 1})
        s = PairSummary::TacnodePlusTwoNodes;
    return PairIntersectionType{*best, s};
}

} // namespace curves
