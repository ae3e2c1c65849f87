#ifndef CURVES_ARRANGEMENTS_HPP
#define CURVES_ARRANGEMENTS_HPP

#include <map>
#include <set>
#include <vector>

#include "curves/polyring.hpp"

namespace curves {

enum class CurveKind { Nodal, Fermat };
enum class GroupKind { G, Gprime, Gsecond };

/// Stable identifier of a catalog conic.  Fermat conics live in nine sets
/// of three (set_index = the base point p_j they pass through, slot = the
/// position within the set ordered by the normalized polynomial); nodal
/// conics are indexed 1..3 by their sextactic point with slot 0.
struct ConicId {
    CurveKind curve;
    int set_index;
    int slot;

    bool operator==(const ConicId& o) const {
        return curve == o.curve && set_index == o.set_index && slot == o.slot;
    }
    bool operator<(const ConicId& o) const {
        if (curve != o.curve) return curve < o.curve;
        if (set_index != o.set_index) return set_index < o.set_index;
        return slot < o.slot;
    }
    std::string str() const;
};

struct NodalCatalog {
    HomPoly cubic;
    std::array<ProjPoint, 3> sextactic;
    std::array<HomPoly, 3> conics;
};

struct FermatCatalog {
    HomPoly cubic;
    std::vector<ProjPoint> sextactic;            // all 27, sorted
    std::map<ConicId, HomPoly> conics;           // normalized up to scalar
    std::map<ConicId, ProjPoint> tangency_point; // sextactic point of each conic
    std::array<ProjPoint, 9> base_points;        // p_1 .. p_9
};

const NodalCatalog& nodal_catalog();
const FermatCatalog& fermat_catalog();

/// Exhaustive element lists (normalized projective representatives):
/// |G| = 9, |G'| = 27, |G''| = 54.
const std::vector<LinearChange>& group_elements(GroupKind which);

/// Orbits under the standard actions: t.p on points, f o t^{-1} on
/// polynomials (compared up to scalar).
std::set<ProjPoint> orbit(const ProjPoint& p, const std::vector<LinearChange>& group);
std::set<HomPoly> orbit(const HomPoly& f, const std::vector<LinearChange>& group);

/// The 13 G'-orbits of unordered pairs of Fermat conics, each represented
/// by its lexicographically least ConicId pair, sorted.
std::vector<std::pair<ConicId, ConicId>> pair_orbits();

/// ConicId -> set_index, recomputed from base-point incidence and
/// validated (each conic vanishes at exactly one p_j; fibers of size 3).
std::map<ConicId, int> partition();

/// Coolidge's sextactic-point count 3(d^2 - 2n - 3k + 6(g-1)).
long coolidge_count(long d, long n, long k, long g);

struct ArrangementError : std::runtime_error {
    explicit ArrangementError(const std::string& what) : std::runtime_error(what) {}
};

struct Arrangement {
    std::vector<HomPoly> components;
    HomPoly product;
};

/// Multiplies the components after checking that each is squarefree and
/// that they are pairwise coprime, so the product is reduced.
Arrangement build(const std::vector<HomPoly>& components);

} // namespace curves

#endif
