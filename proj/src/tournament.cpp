#include "orchard/tournament.hpp"

#include <string>

#include "orchard/errors.hpp"
#include "orchard/random.hpp"

namespace orchard {

Tournament::Tournament(int n, std::vector<int> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ < 1) throw input_error("tournament needs at least one player");
  if (entries_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_))
    throw input_error("tournament matrix must be " + std::to_string(n_) + "x" +
                      std::to_string(n_));
  for (int i = 1; i <= n_; ++i) {
    if (entry(i, i) != 0)
      throw input_error("tournament diagonal entry (" + std::to_string(i) + "," +
                        std::to_string(i) + ") must be 0");
    for (int j = i + 1; j <= n_; ++j) {
      const int a = entry(i, j);
      if (a != 1 && a != -1)
        throw input_error("tournament entry (" + std::to_string(i) + "," +
                          std::to_string(j) + ") must be +1 or -1");
      if (entry(j, i) != -a)
        throw input_error("tournament matrix is not skew at (" + std::to_string(i) +
                          "," + std::to_string(j) + ")");
    }
  }
}

Tournament Tournament::transitive(int n) {
  std::vector<int> e(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) e[i * n + j] = i < j ? 1 : -1;
  return Tournament(n, std::move(e));
}

Tournament Tournament::random(int n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<int> e(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      e[i * n + j] = rng.sign();
      e[j * n + i] = -e[i * n + j];
    }
  return Tournament(n, std::move(e));
}

SignFunction tournament_to_signfn(const Tournament& t) {
  if (t.n() < 2) throw input_error("a tournament needs two players to define a sign function");
  std::vector<std::int8_t> signs;
  signs.reserve(binomial(t.n(), 2));
  for (int j = 2; j <= t.n(); ++j)
    for (int i = 1; i < j; ++i) signs.push_back(static_cast<std::int8_t>(t.entry(i, j)));
  return SignFunction(t.n(), 2, SymmetryKind::Antisymmetric, std::move(signs));
}

Tournament signfn_to_tournament(const SignFunction& f) {
  if (f.arity() != 2 || f.kind() != SymmetryKind::Antisymmetric)
    throw input_error("only arity-2 antisymmetric functions are tournaments");
  const int n = f.n();
  std::vector<int> e(static_cast<std::size_t>(n) * n, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) e[(i - 1) * n + (j - 1)] = f.evaluate({i, j});
  return Tournament(n, std::move(e));
}

namespace {

void check_players(const Tournament& t, int i, int j) {
  if (i < 1 || j < 1 || i > t.n() || j > t.n())
    throw input_error("player outside [1, " + std::to_string(t.n()) + "]");
  if (i == j) throw input_error("players must be distinct");
}

}  // namespace

int common_score_sum(const Tournament& t, int i, int j) {
  check_players(t, i, j);
  int s = 0;
  for (int k = 1; k <= t.n(); ++k)
    if (k != i && k != j) s += t.entry(i, k) * t.entry(j, k);
  return s;
}

std::uint64_t closed_form_separation(const Tournament& t, int i, int j) {
  const int s = common_score_sum(t, i, j);
  // s has n - 2 terms of +-1, so n - 2 - s is even and nonnegative.
  return static_cast<std::uint64_t>((t.n() - 2 - s) / 2);
}

bool mod4_related(const Tournament& t, int i, int j) {
  const int s = common_score_sum(t, i, j);
  return ((s - t.n()) % 4 + 4) % 4 == 0;
}

std::vector<int> score_vector(const Tournament& t) {
  std::vector<int> s(static_cast<std::size_t>(t.n()), 0);
  for (int i = 1; i <= t.n(); ++i)
    for (int j = 1; j <= t.n(); ++j) s[i - 1] += t.entry(i, j) == 1;
  return s;
}

OrchardPartition score_parity_partition(const Tournament& t) {
  if (t.n() < 3)
    throw unsupported_configuration("score parity partition needs n >= 3");
  std::vector<std::uint8_t> labels;
  for (int s : score_vector(t)) labels.push_back(static_cast<std::uint8_t>(s % 2));
  return OrchardPartition(std::move(labels));
}

}  // namespace orchard
