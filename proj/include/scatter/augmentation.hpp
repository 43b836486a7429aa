#pragma once

// Exact symmetry transforms of rasters and (grid, index tensor) pairs.
// Every transform here is a pixel permutation; nothing is interpolated.
//
// Rotations act on functions as (R_phi f)(x) = f(R_{-phi} x). On the pixel
// grid a quarter turn sends element (i, j) to (n-1-j, i).

#include "scatter/contrast_grid.hpp"
#include "scatter/dsm.hpp"

namespace scatter {

// Rotation by quarter_turns * pi/2 (any integer, taken mod 4).
template <typename Derived>
Raster<typename Derived::Scalar> rotate_quarter_turns(const Eigen::MatrixBase<Derived>& g,
                                                      int quarter_turns) {
  const Eigen::Index n = g.rows();
  Raster<typename Derived::Scalar> out(n, n);
  const int q = ((quarter_turns % 4) + 4) % 4;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      switch (q) {
        case 0: out(i, j) = g(i, j); break;
        case 1: out(i, j) = g(j, n - 1 - i); break;
        case 2: out(i, j) = g(n - 1 - i, n - 1 - j); break;
        case 3: out(i, j) = g(n - 1 - j, i); break;
      }
    }
  }
  return out;
}

template <typename Derived>
Raster<typename Derived::Scalar> rotate_pi_grid(const Eigen::MatrixBase<Derived>& g) {
  return g.reverse();
}

// Reflection about the x-axis (the line of d1 = (1, 0)).
template <typename Derived>
Raster<typename Derived::Scalar> mirror_d1_grid(const Eigen::MatrixBase<Derived>& g) {
  return g.rowwise().reverse();
}

struct AugmentOp {
  enum class Kind { RotatePi, MirrorD1, RotateStep };
  Kind kind = Kind::RotatePi;
  int j = 0;  // RotateStep: rotation by 2 pi j / n_inc
};

struct AugmentedPair {
  ContrastGrid grid;
  IndexTensor tensor;
};

// Medium rotated by phi_j = 2 pi j / n_inc; channel i of the result is the
// rotated channel (i - j) mod n_inc of the input. Throws DomainError when
// phi_j is not a multiple of pi/2.
AugmentedPair augment_pair_rotation(const ContrastGrid& grid, const IndexTensor& tensor, int j);

// Medium mirrored about the incidence line of d1; single incidence only.
AugmentedPair augment_pair_mirror(const ContrastGrid& grid, const IndexTensor& tensor);

AugmentedPair apply(const AugmentOp& op, const ContrastGrid& grid, const IndexTensor& tensor);

}  // namespace scatter
