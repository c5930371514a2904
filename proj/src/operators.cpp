#include "orchard/operators.hpp"

#include <algorithm>
#include <string>

#include "orchard/errors.hpp"

namespace orchard {

SymmetryKind reduced_kind(SymmetryKind kind, int n, int d) noexcept {
  // Swapping two arguments of the output swaps them in all n - d factors.
  if (kind == SymmetryKind::Symmetric || (n - d) % 2 == 0) return SymmetryKind::Symmetric;
  return SymmetryKind::Antisymmetric;
}

SymmetryKind augmented_kind(SymmetryKind kind, int d) noexcept {
  // An adjacent swap permutes d facets internally and exchanges the other two.
  if (kind == SymmetryKind::Symmetric || d % 2 == 0) return SymmetryKind::Symmetric;
  return SymmetryKind::Antisymmetric;
}

SignFunction reduce(const SignFunction& f) {
  if (f.arity() < 2) throw input_error("reduce needs arity >= 2");
  const int n = f.n();
  const int out_arity = f.arity() - 1;
  const bool alternating = f.kind() == SymmetryKind::Antisymmetric;
  std::vector<std::int8_t> signs(binomial(n, out_arity));
  std::vector<int> T(static_cast<std::size_t>(out_arity));
  std::vector<int> ext(static_cast<std::size_t>(f.arity()));
  for (int i = 0; i < out_arity; ++i) T[i] = i + 1;
  std::size_t r = 0;
  do {
    int value = 1;
    std::size_t j = 0;  // elements of T below x
    for (int x = 1; x <= n; ++x) {
      if (j < T.size() && T[j] == x) {
        ++j;
        continue;
      }
      // f(x, T): moving x into sorted position passes the j smaller elements.
      std::copy(T.begin(), T.begin() + static_cast<std::ptrdiff_t>(j), ext.begin());
      ext[j] = x;
      std::copy(T.begin() + static_cast<std::ptrdiff_t>(j), T.end(),
                ext.begin() + static_cast<std::ptrdiff_t>(j) + 1);
      int term = f.sign_of_sorted(ext);
      if (alternating && (j % 2)) term = -term;
      value *= term;
    }
    signs[r++] = static_cast<std::int8_t>(value);
  } while (next_colex(T, n));
  return SignFunction(n, out_arity, reduced_kind(f.kind(), n, f.d()), std::move(signs));
}

SignFunction augment(const SignFunction& f) {
  const int n = f.n();
  const int out_arity = f.arity() + 1;
  if (out_arity > n) throw input_error("augment needs arity + 1 <= n");
  std::vector<std::int8_t> signs(binomial(n, out_arity));
  std::vector<int> Y(static_cast<std::size_t>(out_arity));
  std::vector<int> facet(static_cast<std::size_t>(f.arity()));
  for (int i = 0; i < out_arity; ++i) Y[i] = i + 1;
  std::size_t r = 0;
  do {
    int value = 1;
    for (int omit = 0; omit < out_arity; ++omit) {
      for (int i = 0, k = 0; i < out_arity; ++i)
        if (i != omit) facet[k++] = Y[i];
      value *= f.sign_of_sorted(facet);
    }
    signs[r++] = static_cast<std::int8_t>(value);
  } while (next_colex(Y, n));
  return SignFunction(n, out_arity, augmented_kind(f.kind(), f.d()), std::move(signs));
}

int double_reduce_constant(const SignFunction& f) {
  if (f.arity() < 3) throw input_error("double reduction needs arity >= 3");
  const int n = f.n();
  const int d = f.d();
  const int exponent_parity = binomial_parity(n - d + 1, 2);
  const int expected =
      (f.kind() == SymmetryKind::Antisymmetric && exponent_parity) ? -1 : 1;
  const auto rr = reduce(reduce(f));
  for (std::size_t i = 0; i < rr.signs().size(); ++i)
    if (rr.sign_at(i) != expected)
      throw consistency_error("R(R f) is not the constant " + std::to_string(expected) +
                              " at " + colex_unrank(i, n, rr.arity()).to_string());
  return expected;
}

bool double_augment_positive(const SignFunction& f) {
  if (f.arity() + 2 > f.n()) throw input_error("double augmentation needs arity + 2 <= n");
  const auto aa = augment(augment(f));
  for (auto s : aa.signs())
    if (s != 1) return false;
  return true;
}

std::vector<Subset> reduce_flip_image(const Subset& F) {
  if (F.k() < 2) throw input_error("reduce_flip_image needs a subset of size >= 2");
  std::vector<Subset> out;
  const auto& e = F.elements();
  // Dropping the largest element first keeps the output in colex order.
  for (int drop = F.k() - 1; drop >= 0; --drop) {
    std::vector<int> s;
    for (int i = 0; i < F.k(); ++i)
      if (i != drop) s.push_back(e[i]);
    out.emplace_back(F.n(), std::move(s));
  }
  return out;
}

std::vector<Subset> augment_flip_image(const Subset& F) {
  if (F.k() < 1 || F.k() + 1 > F.n())
    throw input_error("augment_flip_image needs 1 <= |F| < n");
  std::vector<Subset> out;
  for (int x = 1; x <= F.n(); ++x) {
    if (F.contains(x)) continue;
    auto s = F.elements();
    s.insert(std::upper_bound(s.begin(), s.end(), x), x);
    out.emplace_back(F.n(), std::move(s));
  }
  return out;
}

std::vector<std::uint8_t> sign_exponents(const SignFunction& f) {
  std::vector<std::uint8_t> out(f.signs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sign_at(i) < 0;
  return out;
}

Gf2Matrix boundary_matrix(int n, int k) {
  if (k < 1 || k > n) throw input_error("boundary_matrix needs 1 <= k <= n");
  Gf2Matrix m(binomial(n, k - 1), binomial(n, k));
  std::vector<int> S(static_cast<std::size_t>(k));
  std::vector<int> T(static_cast<std::size_t>(k - 1));
  for (int i = 0; i < k; ++i) S[i] = i + 1;
  std::size_t col = 0;
  do {
    for (int drop = 0; drop < k; ++drop) {
      for (int i = 0, j = 0; i < k; ++i)
        if (i != drop) T[j++] = S[i];
      m.set(colex_rank_sorted(T), col);
    }
    ++col;
  } while (next_colex(S, n));
  return m;
}

F2Complex build_f2_complex(int n) {
  if (n < 1) throw input_error("build_f2_complex needs n >= 1");
  F2Complex c;
  c.n = n;
  std::vector<std::size_t> ranks(static_cast<std::size_t>(n) + 2, 0);
  for (int k = 1; k <= n; ++k) {
    c.boundary_maps.push_back(boundary_matrix(n, k));
    ranks[k] = c.boundary_maps.back().rank();
  }
  // Degree j is the space over (j+1)-subsets. Its outgoing map is rho_{j+1},
  // except at degree 0 where there is no augmentation; the incoming map is
  // rho_{j+2}, zero past the top degree.
  for (int j = 0; j < n; ++j) {
    const auto dim = binomial(n, j + 1);
    const std::size_t out_rank = j == 0 ? 0 : ranks[j + 1];
    const std::size_t in_rank = j + 2 <= n ? ranks[j + 2] : 0;
    c.homology_dims.push_back(static_cast<int>(dim - out_rank - in_rank));
  }
  return c;
}

}  // namespace orchard
