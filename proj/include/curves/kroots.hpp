#ifndef CURVES_KROOTS_HPP
#define CURVES_KROOTS_HPP

#include <vector>

#include "curves/polyring.hpp"

namespace curves {

/// Root of a univariate polynomial that lies in K, with its multiplicity.
struct KRoot {
    FieldK value;
    int multiplicity = 0;
};

struct KRootReport {
    std::vector<KRoot> roots; // sorted by FieldK order
    UniPoly residual;         // monic cofactor with no roots in K

    int total_root_multiplicity() const {
        int s = 0;
        for (const auto& r : roots) s += r.multiplicity;
        return s;
    }
};

/// All roots of p lying in K, found by reduction modulo a prime where K
/// splits, Hensel lifting, lattice reconstruction of the six coordinates,
/// and exact verification.  Multiplicities are certified by exact division;
/// the residual is the cofactor left after stripping every K-root.
KRootReport roots_in_k(const UniPoly& p);

/// Smallest prime >= start with p = 1 (mod 3) and 2 a cube mod p, so that
/// both w and a have images in F_p.
unsigned long find_split_prime(unsigned long start);

/// Lattice basis reduction (LLL, delta = 3/4) for small integer bases;
/// rows are the basis vectors.
std::vector<std::vector<mpz_class>> lll_reduce(std::vector<std::vector<mpz_class>> basis);

} // namespace curves

#endif
