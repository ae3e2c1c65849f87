#ifndef CURVES_LINALG_HPP
#define CURVES_LINALG_HPP

#include <optional>
#include <vector>

#include "curves/fieldk.hpp"

namespace curves {

/// Dense matrix over K.  rank() runs fraction-free (Bareiss) elimination on
/// integer coordinates, so it stays exact on the large graded-piece
/// matrices; nullspace() and solve() use straight Gaussian elimination over
/// K and are meant for small systems.
class KMat {
  public:
    KMat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    FieldK& at(int i, int j) { return a_[i * cols_ + j]; }
    const FieldK& at(int i, int j) const { return a_[i * cols_ + j]; }

    int rank() const;

    /// Basis of the right kernel {x : A x = 0}.
    std::vector<std::vector<FieldK>> nullspace() const;

    /// One solution of A x = b (free variables set to zero), or nullopt.
    std::optional<std::vector<FieldK>> solve(const std::vector<FieldK>& rhs) const;

  private:
    int rows_, cols_;
    std::vector<FieldK> a_;
};

} // namespace curves

#endif
