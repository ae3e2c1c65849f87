#ifndef CURVES_SINGULARITIES_HPP
#define CURVES_SINGULARITIES_HPP

#include <string>
#include <vector>

#include "curves/polyring.hpp"

namespace curves {

struct SingularityError : std::runtime_error {
    explicit SingularityError(const std::string& what) : std::runtime_error(what) {}
};

/// K-rational singular locus.  Singular points with non-K-rational
/// projections are not solved for: the residual records the squarefree
/// cofactor of the eliminant with no roots in K, and residual_degree counts
/// those slices by degree.
struct SingularLocus {
    std::vector<ProjPoint> points;
    UniPoly residual;
    int residual_degree;
};

SingularLocus singular_points(const HomPoly& f);

/// dim K[u,v] / ((g, g_u, g_v) + m^N) at stabilization, for the affine germ
/// g of f at p; throws when the dimension exceeds the isolated-singularity
/// bound (d-1)^2 or fails to stabilize by the cap N = 40.
int local_tjurina(const HomPoly& f, const ProjPoint& p);

/// Same with the ideal (g_u, g_v): the local Milnor number.
int local_milnor(const HomPoly& f, const ProjPoint& p);

enum class SingType { A_k, J_2_0, Unrecognized };

struct SingularityReport {
    ProjPoint point;
    int local_tjurina;
    int local_milnor;
    int multiplicity;
    SingType type;
    int k; // tjurina for A_k; 0 otherwise

    std::string type_str() const;
    std::string to_json() const;
};

/// Shallow recognition: A_k when the germ has multiplicity 2 and tau = mu
/// (then k = tau); J_2_0 when multiplicity 3 and tau = mu = 10.
SingularityReport classify(const HomPoly& f, const ProjPoint& p);

enum class PairSummary { FourNodes, TacnodePlusTwoNodes, Other };

struct PairIntersectionType {
    std::vector<int> multiplicity_pattern; // descending, sums to 4
    PairSummary summary;
};

/// Intersection-multiplicity pattern of two distinct smooth conics, read
/// off the degree-4 resultant via squarefree decomposition; computed in two
/// independent charts (with seeded coordinate changes as fallback) and
/// cross-checked.
PairIntersectionType conic_pair_type(const HomPoly& q, const HomPoly& qprime);

} // namespace curves

#endif
