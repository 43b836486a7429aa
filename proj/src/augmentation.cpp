#include "scatter/augmentation.hpp"

#include <string>

#include "scatter/error.hpp"

namespace scatter {

AugmentedPair augment_pair_rotation(const ContrastGrid& grid, const IndexTensor& tensor, int j) {
  const int ni = tensor.n_inc;
  if (ni < 1 || static_cast<int>(tensor.channels.size()) != ni) {
    throw DomainError("index tensor has no channels");
  }
  const int step = ((j % ni) + ni) % ni;
  // phi_j = 2 pi step / ni is a whole number of quarter turns iff 4 step / ni is integral.
  if ((4 * step) % ni != 0) {
    throw DomainError("rotation by 2 pi * " + std::to_string(step) + "/" + std::to_string(ni) +
                      " is not pixel-exact");
  }
  const int quarters = 4 * step / ni;

  AugmentedPair out{grid, tensor};
  out.grid.eps = rotate_quarter_turns(grid.eps, quarters);
  for (int i = 0; i < ni; ++i) {
    const int src = ((i - step) % ni + ni) % ni;
    out.tensor.channels[i] = rotate_quarter_turns(tensor.channels[src], quarters);
  }
  return out;
}

AugmentedPair augment_pair_mirror(const ContrastGrid& grid, const IndexTensor& tensor) {
  if (tensor.n_inc != 1) {
    throw DomainError("mirror augmentation applies to a single incidence, got " +
                      std::to_string(tensor.n_inc));
  }
  AugmentedPair out{grid, tensor};
  out.grid.eps = mirror_d1_grid(grid.eps);
  out.tensor.channels[0] = mirror_d1_grid(tensor.channels[0]);
  return out;
}

AugmentedPair apply(const AugmentOp& op, const ContrastGrid& grid, const IndexTensor& tensor) {
  switch (op.kind) {
    case AugmentOp::Kind::RotatePi:
      if (tensor.n_inc % 2 != 0) {
        throw DomainError("rotation by pi needs an even number of incidences");
      }
      return augment_pair_rotation(grid, tensor, tensor.n_inc / 2);
    case AugmentOp::Kind::MirrorD1: return augment_pair_mirror(grid, tensor);
    case AugmentOp::Kind::RotateStep: return augment_pair_rotation(grid, tensor, op.j);
  }
  throw DomainError("unknown augmentation");
}

}  // namespace scatter
