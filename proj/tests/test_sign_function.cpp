#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "orchard/errors.hpp"
#include "orchard/sign_function.hpp"

using namespace orchard;
using K = SymmetryKind;

TEST_CASE("constructor rejects malformed data") {
  CHECK_THROWS_AS(SignFunction(4, 2, K::Symmetric, {1, 1, 1}), input_error);
  CHECK_THROWS_AS(SignFunction(4, 2, K::Symmetric, {1, 1, 1, 1, 0, 1}),
                  input_error);
  CHECK_THROWS_AS(SignFunction(4, 2, K::Symmetric, {1, 1, 1, 1, 2, 1}),
                  input_error);
  CHECK_THROWS_AS(SignFunction(3, 0, K::Symmetric, {1}), input_error);
}

TEST_CASE("evaluate examples") {
  auto f = constant_one(4, 2, K::Antisymmetric);
  CHECK(f.evaluate({1, 2}) == 1);
  CHECK(f.evaluate({2, 1}) == -1);
  CHECK(f.evaluate({3, 1}) == -1);
  CHECK_THROWS_AS(f.evaluate({1, 1}), input_error);
  CHECK_THROWS_AS(f.evaluate({1, 5}), input_error);
  CHECK_THROWS_AS(f.evaluate({1, 2, 3}), input_error);
  auto g = constant_one(4, 2, K::Symmetric);
  CHECK(g.evaluate({2, 1}) == 1);
  CHECK_THROWS_AS(g.evaluate({2, 2}), input_error);
}

TEST_CASE("constant_one") {
  auto f = constant_one(4, 2, K::Symmetric);
  CHECK(f.signs().size() == 6);
  CHECK(std::all_of(f.signs().begin(), f.signs().end(),
                    [](auto s) { return s == 1; }));
  CHECK_THROWS_AS(constant_one(3, 4, K::Symmetric), input_error);
  CHECK_THROWS_AS(constant_one(3, 0, K::Antisymmetric), input_error);
}

TEST_CASE("flip") {
  auto f = constant_one(4, 2, K::Symmetric);
  auto g = flip(f, Subset(4, {1, 2}));
  CHECK(std::count(g.signs().begin(), g.signs().end(), -1) == 1);
  CHECK(g.sign_at(0) == -1);
  CHECK(flip(g, Subset(4, {1, 2})) == f);
  CHECK_THROWS_AS(flip(f, Subset(4, {1, 2, 3})), input_error);
  CHECK_THROWS_AS(flip(f, Subset(5, {1, 2})), input_error);
}

TEST_CASE("flip changes exactly one slot") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto f = random_sign_function(7, 3, K::Antisymmetric, seed);
    auto F = colex_unrank(seed % 35, 7, 3);
    auto g = flip(f, F);
    int distance = 0;
    for (std::size_t i = 0; i < f.signs().size(); ++i)
      distance += f.signs()[i] != g.signs()[i];
    CHECK(distance == 1);
    CHECK(g.sign_at(colex_rank(F)) == -f.sign_at(colex_rank(F)));
  }
}

TEST_CASE("product kinds follow the sign group") {
  auto a = random_sign_function(5, 3, K::Antisymmetric, 11);
  auto s = random_sign_function(5, 3, K::Symmetric, 12);
  auto aa = product(a, a);
  CHECK(aa.kind() == K::Symmetric);
  CHECK(aa == constant_one(5, 3, K::Symmetric));
  CHECK(product(s, a).kind() == K::Antisymmetric);
  CHECK(product(a, s).kind() == K::Antisymmetric);
  CHECK(product(s, s).kind() == K::Symmetric);
  auto id = product(a, constant_one(5, 3, K::Symmetric));
  CHECK(id == a);
  CHECK_THROWS_AS(product(a, constant_one(5, 2, K::Symmetric)), input_error);
  CHECK_THROWS_AS(product(a, constant_one(6, 3, K::Symmetric)), input_error);
}

TEST_CASE("evaluate transforms by permutation parity (exhaustive, arity <= 4)") {
  for (int arity = 1; arity <= 4; ++arity) {
    for (auto kind : {K::Symmetric, K::Antisymmetric}) {
      auto f = random_sign_function(6, arity, kind, 100 + arity);
      for (const auto& s : enumerate_subsets(6, arity)) {
        std::vector<int> args = s.elements();
        const int base = f.evaluate(args);
        REQUIRE(base == f.sign_at(colex_rank(s)));
        std::vector<int> perm(arity);
        std::iota(perm.begin(), perm.end(), 0);
        do {
          std::vector<int> permuted(arity);
          for (int i = 0; i < arity; ++i) permuted[i] = args[perm[i]];
          const int v = f.evaluate(permuted);
          REQUIRE((v == 1 || v == -1));
          const int expected =
              kind == K::Antisymmetric ? base * permutation_parity(perm) : base;
          REQUIRE(v == expected);
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
    }
  }
}

TEST_CASE("random_sign_function is deterministic and well-shaped") {
  auto f = random_sign_function(6, 3, K::Antisymmetric, 42);
  auto g = random_sign_function(6, 3, K::Antisymmetric, 42);
  CHECK(f == g);
  CHECK(f.signs().size() == 20);
  CHECK(random_sign_function(6, 3, K::Antisymmetric, 43) != f);
  // Keyed by colex rank, so the n=6 signs are a prefix of the n=8 signs.
  auto wide = random_sign_function(8, 3, K::Antisymmetric, 42);
  CHECK(std::equal(f.signs().begin(), f.signs().end(), wide.signs().begin()));
  // Frozen from an independent splitmix64 implementation.
  auto small = random_sign_function(5, 3, K::Symmetric, 0);
  std::vector<int> got(small.signs().begin(), small.signs().end());
  CHECK(got == std::vector<int>{-1, -1, -1, 1, 1, -1, 1, 1, -1, -1});
  auto keyed = random_sign_function(5, 2, K::Antisymmetric, 42);
  std::vector<int> got42(keyed.signs().begin(), keyed.signs().end());
  CHECK(got42 == std::vector<int>{-1, -1, 1, -1, 1, -1, 1, -1, -1, -1});
}

TEST_CASE("random signs are balanced per entry") {
  // 10^4 draws per slot; binomial sd = 50, so 5 sd = 250.
  constexpr int draws = 10000;
  std::vector<int> plus(20, 0);
  for (int s = 0; s < draws; ++s) {
    auto f = random_sign_function(6, 3, K::Symmetric, static_cast<std::uint64_t>(s));
    for (std::size_t i = 0; i < 20; ++i) plus[i] += f.sign_at(i) == 1;
  }
  const double sd = std::sqrt(draws * 0.25);
  for (int count : plus) CHECK(std::abs(count - draws / 2) <= 5 * sd);
}
