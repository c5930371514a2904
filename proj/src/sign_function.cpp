#include "orchard/sign_function.hpp"

#include <algorithm>
#include <string>

#include "orchard/errors.hpp"
#include "orchard/random.hpp"

namespace orchard {

std::string_view to_string(SymmetryKind kind) noexcept {
  return kind == SymmetryKind::Symmetric ? "symmetric" : "antisymmetric";
}

SymmetryKind parse_kind(std::string_view text) {
  if (text == "symmetric") return SymmetryKind::Symmetric;
  if (text == "antisymmetric") return SymmetryKind::Antisymmetric;
  throw input_error("unknown symmetry kind '" + std::string(text) + "'");
}

namespace {

void check_shape(int n, int arity) {
  if (arity < 1 || arity > n)
    throw input_error("arity " + std::to_string(arity) + " outside [1, n=" +
                      std::to_string(n) + "]");
}

}  // namespace

SignFunction::SignFunction(int n, int arity, SymmetryKind kind,
                           std::vector<std::int8_t> signs)
    : n_(n), arity_(arity), kind_(kind), signs_(std::move(signs)) {
  check_shape(n_, arity_);
  const auto expected = binomial(n_, arity_);
  if (signs_.size() != expected)
    throw input_error("expected " + std::to_string(expected) +
                      " signs for C(" + std::to_string(n_) + "," +
                      std::to_string(arity_) + "), got " +
                      std::to_string(signs_.size()));
  for (std::size_t i = 0; i < signs_.size(); ++i)
    if (signs_[i] != 1 && signs_[i] != -1)
      throw input_error("sign at colex rank " + std::to_string(i) +
                        " is " + std::to_string(signs_[i]) +
                        ", must be -1 or +1");
}

int SignFunction::evaluate(std::span<const int> args) const {
  if (static_cast<int>(args.size()) != arity_)
    throw input_error("evaluate: expected " + std::to_string(arity_) +
                      " arguments, got " + std::to_string(args.size()));
  for (int x : args)
    if (x < 1 || x > n_)
      throw input_error("evaluate: element " + std::to_string(x) +
                        " outside [1, " + std::to_string(n_) + "]");
  // permutation_parity rejects repeats, so it must run even when symmetric.
  const int parity = permutation_parity(args);
  std::vector<int> sorted(args.begin(), args.end());
  std::sort(sorted.begin(), sorted.end());
  const int stored = sign_of_sorted(sorted);
  return kind_ == SymmetryKind::Antisymmetric ? stored * parity : stored;
}

SignFunction constant_one(int n, int arity, SymmetryKind kind) {
  check_shape(n, arity);
  return SignFunction(n, arity, kind,
                      std::vector<std::int8_t>(binomial(n, arity), 1));
}

SignFunction flip(const SignFunction& f, const Subset& flipset) {
  if (flipset.n() != f.n() || flipset.k() != f.arity())
    throw input_error("flipset " + flipset.to_string() + " is not a " +
                      std::to_string(f.arity()) + "-subset of [1.." +
                      std::to_string(f.n()) + "]");
  std::vector<std::int8_t> signs(f.signs().begin(), f.signs().end());
  auto& s = signs[colex_rank(flipset)];
  s = static_cast<std::int8_t>(-s);
  return SignFunction(f.n(), f.arity(), f.kind(), std::move(signs));
}

SignFunction product(const SignFunction& f, const SignFunction& g) {
  if (f.n() != g.n() || f.arity() != g.arity())
    throw input_error("product: shape mismatch");
  std::vector<std::int8_t> signs(f.signs().size());
  for (std::size_t i = 0; i < signs.size(); ++i)
    signs[i] = static_cast<std::int8_t>(f.signs()[i] * g.signs()[i]);
  return SignFunction(f.n(), f.arity(), f.kind() * g.kind(), std::move(signs));
}

SignFunction random_sign_function(int n, int arity, SymmetryKind kind,
                                  std::uint64_t seed) {
  check_shape(n, arity);
  std::vector<std::int8_t> signs(binomial(n, arity));
  const std::uint64_t key = mix64(seed);
  for (std::size_t r = 0; r < signs.size(); ++r)
    signs[r] = (mix64(key ^ mix64(r)) >> 63) ? -1 : 1;
  return SignFunction(n, arity, kind, std::move(signs));
}

}  // namespace orchard
