#pragma once

#include <vector>

#include "orchard/combinatorics.hpp"
#include "orchard/gf2_matrix.hpp"
#include "orchard/sign_function.hpp"

namespace orchard {

/// Kind of reduce(f) for f of the given kind and parameters.
SymmetryKind reduced_kind(SymmetryKind kind, int n, int d) noexcept;
/// Kind of augment(f) for f of the given kind and d.
SymmetryKind augmented_kind(SymmetryKind kind, int d) noexcept;

/// Arity-lowering operator: the value on a d-tuple T is the product over
/// x outside T of f(x, T). Requires arity >= 2.
SignFunction reduce(const SignFunction& f);

/// Arity-raising operator: the value on a (d+2)-tuple is the product of f
/// over its d+2 facets, each taken in increasing order. Requires arity < n.
SignFunction augment(const SignFunction& f);

/// reduce(reduce(f)) is the constant eps^C(n-d+1, 2), eps = +1 for symmetric
/// and -1 for antisymmetric f. Returns that constant after checking every
/// slot; throws consistency_error if a slot disagrees.
int double_reduce_constant(const SignFunction& f);

/// True iff every stored sign of augment(augment(f)) is +1.
bool double_augment_positive(const SignFunction& f);

/// The d-subsets of F: where reduce(flip(f, F)) differs from reduce(f).
std::vector<Subset> reduce_flip_image(const Subset& F);

/// F + {x} for each x outside F: where augment(flip(f, F)) differs from
/// augment(f).
std::vector<Subset> augment_flip_image(const Subset& F);

/// Exponents s with f = (-1)^s, in colex order.
std::vector<std::uint8_t> sign_exponents(const SignFunction& f);

/// The F2 chain complex of exponent spaces on [1..n] under linearised
/// reduction. Degree j holds functions on (j+1)-subsets.
struct F2Complex {
  int n = 0;
  /// boundary_maps[k-1] is rho_k: C(n, k-1) x C(n, k), entry (T, S) = 1 iff
  /// T is a subset of S, for k = 1..n. rho_1 maps into the arity-0 space.
  std::vector<Gf2Matrix> boundary_maps;
  /// Homology dimension per degree 0..n-1.
  std::vector<int> homology_dims;

  const Gf2Matrix& rho(int k) const { return boundary_maps.at(static_cast<std::size_t>(k - 1)); }
};

/// Incidence matrix rho_k on [1..n], built column by column.
Gf2Matrix boundary_matrix(int n, int k);

F2Complex build_f2_complex(int n);

}  // namespace orchard
