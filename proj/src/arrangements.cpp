#include "curves/arrangements.hpp"

#include <algorithm>

#include "curves/cayley.hpp"

namespace curves {

std::string ConicId::str() const {
    if (curve == CurveKind::Nodal) return "N.Q" + std::to_string(set_index);
    return "F.p" + std::to_string(set_index) + "." + std::to_string(slot);
}

namespace {

/// Closure of a generating set in PGL_3(K), elements kept in normalized form.
std::vector<LinearChange> closure(const std::vector<LinearChange>& gens) {
    std::set<LinearChange> seen;
    std::vector<LinearChange> frontier;
    seen.insert(LinearChange().normalized());
    frontier.push_back(LinearChange());
    while (!frontier.empty()) {
        std::vector<LinearChange> next;
        for (const LinearChange& t : frontier)
            for (const LinearChange& g : gens) {
                LinearChange u = (g * t).normalized();
                if (seen.insert(u).second) next.push_back(u);
                if (seen.size() > 200)
                    throw ArrangementError("group closure exceeded the expected size");
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

LinearChange gen_g1() { return LinearChange::diagonal(FieldK::omega(), FieldK(1), FieldK(1)); }
LinearChange gen_g2() { return LinearChange::diagonal(FieldK(1), FieldK::omega(), FieldK(1)); }
LinearChange gen_cycle() { return LinearChange::permutation(1, 2, 0); }  // (x:y:z) -> (y:z:x)
LinearChange gen_swap() { return LinearChange::permutation(1, 0, 2); }   // (x:y:z) -> (y:x:z)

HomPoly conic_under(const HomPoly& q, const LinearChange& t) {
    return q.substitute(t.inverse()).normalize_up_to_scalar();
}

FermatCatalog make_fermat_catalog() {
    FieldK w = FieldK::omega(), w2 = w * w, a = FieldK::alpha();
    FermatCatalog cat{HomPoly::parse("x^3 + y^3 + z^3"),
                      {},
                      {},
                      {},
                      {ProjPoint(FieldK(1), FieldK(1), FieldK(0)),
                       ProjPoint(FieldK(1), w, FieldK(0)),
                       ProjPoint(FieldK(1), w2, FieldK(0)),
                       ProjPoint(FieldK(0), FieldK(1), FieldK(1)),
                       ProjPoint(FieldK(0), FieldK(1), w),
                       ProjPoint(FieldK(0), FieldK(1), w2),
                       ProjPoint(FieldK(1), FieldK(0), FieldK(1)),
                       ProjPoint(w, FieldK(0), FieldK(1)),
                       ProjPoint(w2, FieldK(0), FieldK(1))}};

    ProjPoint s1(FieldK(1), FieldK(1), -a);
    HomPoly q1 = HomPoly::parse("(x - y)^2 - z*(a^2*x + a^2*y + 2*a*z)");

    // sweep the seed pair (s1, q1) through G'
    std::map<ProjPoint, HomPoly> by_point;
    for (const LinearChange& t : group_elements(GroupKind::Gprime))
        by_point.emplace(t.apply(s1), conic_under(q1, t));
    if (by_point.size() != 27)
        throw ArrangementError("expected 27 distinct tangency points in the conic orbit");

    // classify each conic by the unique base point it passes through,
    // then order each fiber of three by the normalized polynomial
    std::array<std::vector<std::pair<HomPoly, ProjPoint>>, 10> fibers;
    for (const auto& [pt, q] : by_point) {
        int hit = 0, which = 0;
        for (int j = 1; j <= 9; ++j)
            if (q.evaluate(cat.base_points[j - 1]).is_zero()) {
                ++hit;
                which = j;
            }
        if (hit != 1)
            throw ArrangementError("conic passes through " + std::to_string(hit) +
                                   " base points, expected 1");
        fibers[which].emplace_back(q, pt);
        cat.sextactic.push_back(pt);
    }
    std::sort(cat.sextactic.begin(), cat.sextactic.end());
    for (int j = 1; j <= 9; ++j) {
        if (fibers[j].size() != 3)
            throw ArrangementError("fiber over p" + std::to_string(j) + " has size " +
                                   std::to_string(fibers[j].size()) + ", expected 3");
        std::sort(fibers[j].begin(), fibers[j].end(),
                  [](const auto& l, const auto& r) { return l.first < r.first; });
        for (int s = 0; s < 3; ++s) {
            ConicId id{CurveKind::Fermat, j, s};
            cat.conics.emplace(id, fibers[j][s].first);
            cat.tangency_point.emplace(id, fibers[j][s].second);
        }
    }
    return cat;
}

} // namespace

const NodalCatalog& nodal_catalog() {
    static const NodalCatalog cat = [] {
        FieldK w = FieldK::omega(), w2 = w * w;
        return NodalCatalog{
            HomPoly::parse("x^3 + y^3 - x*y*z"),
            {ProjPoint(FieldK(1), FieldK(1), FieldK(2)), ProjPoint(w, w2, FieldK(2)),
             ProjPoint(w2, w, FieldK(2))},
            {HomPoly::parse("21*(x^2 + y^2) - 22*x*y - 6*(x + y)*z + z^2"),
             HomPoly::parse("21*(w*x^2 + w^2*y^2) - 22*x*y - 6*(w^2*x + w*y)*z + z^2"),
             HomPoly::parse("21*(w^2*x^2 + w*y^2) - 22*x*y - 6*(w*x + w^2*y)*z + z^2")}};
    }();
    return cat;
}

const FermatCatalog& fermat_catalog() {
    static const FermatCatalog cat = make_fermat_catalog();
    return cat;
}

const std::vector<LinearChange>& group_elements(GroupKind which) {
    static const std::vector<LinearChange> g = closure({gen_g1(), gen_g2()});
    static const std::vector<LinearChange> gp = closure({gen_g1(), gen_g2(), gen_cycle()});
    static const std::vector<LinearChange> gpp =
        closure({gen_g1(), gen_g2(), gen_cycle(), gen_swap()});
    switch (which) {
    case GroupKind::G: return g;
    case GroupKind::Gprime: return gp;
    default: return gpp;
    }
}

std::set<ProjPoint> orbit(const ProjPoint& p, const std::vector<LinearChange>& group) {
    std::set<ProjPoint> out;
    for (const LinearChange& t : group) out.insert(t.apply(p));
    return out;
}

std::set<HomPoly> orbit(const HomPoly& f, const std::vector<LinearChange>& group) {
    std::set<HomPoly> out;
    for (const LinearChange& t : group) out.insert(conic_under(f, t));
    return out;
}

std::vector<std::pair<ConicId, ConicId>> pair_orbits() {
    const FermatCatalog& cat = fermat_catalog();
    std::map<HomPoly, ConicId> lookup;
    std::vector<ConicId> ids;
    for (const auto& [id, q] : cat.conics) {
        lookup.emplace(q, id);
        ids.push_back(id);
    }

    // the permutation each group element induces on conic identifiers
    std::vector<std::map<ConicId, ConicId>> perms;
    for (const LinearChange& t : group_elements(GroupKind::Gprime)) {
        std::map<ConicId, ConicId> perm;
        for (const ConicId& id : ids) perm.emplace(id, lookup.at(conic_under(cat.conics.at(id), t)));
        perms.push_back(std::move(perm));
    }

    using Pair = std::pair<ConicId, ConicId>;
    std::set<Pair> pending;
    for (size_t i = 0; i < ids.size(); ++i)
        for (size_t j = i + 1; j < ids.size(); ++j) pending.emplace(ids[i], ids[j]);

    std::vector<Pair> reps;
    while (!pending.empty()) {
        Pair seed = *pending.begin();
        std::set<Pair> orb;
        for (const auto& perm : perms) {
            ConicId a = perm.at(seed.first), b = perm.at(seed.second);
            orb.insert(b < a ? Pair(b, a) : Pair(a, b));
        }
        if (orb.size() != 27)
            throw ArrangementError("pair orbit has size " + std::to_string(orb.size()) +
                                   ", expected 27");
        reps.push_back(*orb.begin());
        for (const Pair& pr : orb) pending.erase(pr);
    }
    std::sort(reps.begin(), reps.end());
    if (reps.size() != 13)
        throw ArrangementError("found " + std::to_string(reps.size()) +
                               " pair orbits, expected 13");
    return reps;
}

std::map<ConicId, int> partition() {
    const FermatCatalog& cat = fermat_catalog();
    std::map<ConicId, int> out;
    std::array<int, 10> fiber_size{};
    for (const auto& [id, q] : cat.conics) {
        int hit = 0, which = 0;
        for (int j = 1; j <= 9; ++j)
            if (q.evaluate(cat.base_points[j - 1]).is_zero()) {
                ++hit;
                which = j;
            }
        if (hit != 1)
            throw ArrangementError("conic " + id.str() + " passes through " +
                                   std::to_string(hit) + " base points, expected 1");
        out.emplace(id, which);
        ++fiber_size[which];
    }
    for (int j = 1; j <= 9; ++j)
        if (fiber_size[j] != 3)
            throw ArrangementError("partition fiber over p" + std::to_string(j) +
                                   " has size " + std::to_string(fiber_size[j]));
    return out;
}

long coolidge_count(long d, long n, long k, long g) {
    return 3 * (d * d - 2 * n - 3 * k + 6 * (g - 1));
}

Arrangement build(const std::vector<HomPoly>& components) {
    if (components.empty()) throw ArrangementError("no components given");
    constexpr Var kVars[3] = {Var::X, Var::Y, Var::Z};
    for (const HomPoly& f : components) {
        if (f.is_zero() || f.degree() < 1)
            throw ArrangementError("component must be a nonconstant polynomial");
        for (Var v : kVars)
            if (f.degree_in(v) >= 1 && resultant(f, f.partial(v), v).is_zero())
                throw ArrangementError("component is not squarefree: " + f.str());
    }
    for (size_t i = 0; i < components.size(); ++i)
        for (size_t j = i + 1; j < components.size(); ++j)
            for (Var v : kVars)
                if (components[i].degree_in(v) >= 1 && components[j].degree_in(v) >= 1 &&
                    resultant(components[i], components[j], v).is_zero())
                    throw ArrangementError("components " + std::to_string(i) + " and " +
                                           std::to_string(j) + " share a factor");
    Arrangement arr;
    arr.components = components;
    arr.product = HomPoly::constant(FieldK(1));
    for (const HomPoly& f : components) arr.product = arr.product * f;
    return arr;
}

} // namespace curves
