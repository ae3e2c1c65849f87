#ifndef CURVES_SYZYGY_HPP
#define CURVES_SYZYGY_HPP

#include <string>
#include <vector>

#include "curves/polyring.hpp"

namespace curves {

struct SyzygyError : std::runtime_error {
    explicit SyzygyError(const std::string& what) : std::runtime_error(what) {}
};

/// A relation a f_x + b f_y + c f_z = 0 with a, b, c homogeneous of equal
/// degree.
struct SyzygyTriple {
    HomPoly a, b, c;
};

struct GradedKernelBasis {
    int degree;
    std::vector<SyzygyTriple> basis;
};

/// Exact basis of the graded piece AR(f)_k, the kernel of
/// S_k^3 -> S_{k+d-1}, (a,b,c) -> a f_x + b f_y + c f_z.
GradedKernelBasis ar_basis(const HomPoly& f, int k);
int ar_dimension(const HomPoly& f, int k);

/// Minimal degree of a nonzero Jacobian syzygy; the Koszul relations
/// guarantee a result by k = d - 1.
int mdr(const HomPoly& f);

/// dim_K (S / J_f)_k for the Jacobian ideal J_f = (f_x, f_y, f_z).
int jacobian_hilbert(const HomPoly& f, int k);

/// The stabilized value of the Jacobian Hilbert function, scanned from
/// k = 3(d-2) until two consecutive values agree; throws SyzygyError when
/// no stabilization occurs by k = 3(d-2) + d (non-reduced input).
int total_tjurina(const HomPoly& f);

/// Degrees of a minimal generating set of AR(f), ascending with
/// multiplicity.  Scans degrees upward and stops once two consecutive
/// degrees at or beyond d produce no new generators (cap 3d).
std::vector<int> generator_degrees(const HomPoly& f);

enum class Verdict { Free, NearlyFree, MSyzygy };
std::string verdict_name(Verdict v);

struct FreenessCertificate {
    int degree;
    int mdr;
    int tjurina;
    Verdict verdict;
    std::vector<int> exponents; // (r, d-1-r) free / (r, d-r) nearly free /
                                // the full generator multiset otherwise
    std::vector<int> generator_degrees;
    std::vector<int> hilbert_tail; // values from k = 3(d-2) through stabilization
    long criterion_lhs;            // r^2 - r(d-1) + (d-1)^2

    std::string to_json() const;
};

/// Full classification: Free / NearlyFree / m-syzygy, with the numeric
/// criterion cross-validated against the generator degrees.
FreenessCertificate certify(const HomPoly& f);

/// Closed-form scan for the Fermat cubic plus k same-set conics: the
/// predicted total Tjurina number 2k(k-1) + 11k and the discriminant
/// -4k^2 + 12k - 12 of the freeness criterion in r, with the verdict on
/// whether an admissible integer root exists.
struct NeverFreeScan {
    long predicted_tjurina;
    long discriminant;
    bool free_possible;
};
NeverFreeScan never_free_scan(long k);

} // namespace curves

#endif
