#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "orchard/errors.hpp"
#include "orchard/operators.hpp"
#include "orchard/random.hpp"
#include "orchard/relation.hpp"
#include "oracles.hpp"

using namespace orchard;
using K = SymmetryKind;

namespace {

template <typename Oracle>
void check_against_oracle(const SignFunction& f, const SignFunction& g, Oracle oracle) {
  // g must agree with the oracle on every ordering of every subset, which
  // pins down both the stored signs and g's kind.
  for (const auto& s : enumerate_subsets(g.n(), g.arity())) {
    std::vector<int> args = s.elements();
    do {
      REQUIRE(g.evaluate(args) == oracle(f, args));
    } while (std::next_permutation(args.begin(), args.end()));
  }
}

std::uint64_t seed_for(int n, int arity, K kind, std::uint64_t t) {
  return derive_seed(99, {std::uint64_t(n), std::uint64_t(arity),
                          std::uint64_t(kind == K::Antisymmetric), t});
}

}  // namespace

TEST_CASE("reduce examples") {
  for (int n = 3; n <= 7; ++n)
    for (int k = 2; k <= n; ++k)
      CHECK(reduce(constant_one(n, k, K::Symmetric)) == constant_one(n, k - 1, K::Symmetric));
  CHECK(reduce(constant_one(5, 4, K::Antisymmetric)).kind() == K::Symmetric);
  CHECK(reduce(constant_one(6, 4, K::Antisymmetric)).kind() == K::Antisymmetric);
  CHECK_THROWS_AS(reduce(constant_one(4, 1, K::Symmetric)), input_error);
}

TEST_CASE("reduced constant antisymmetric function separates neighbours C(n-2, d-1) times") {
  for (int n = 4; n <= 9; ++n)
    for (int d = 1; d + 1 < n; ++d) {
      auto r = reduce(constant_one(n, d + 1, K::Antisymmetric));
      if (n < r.d() + 2) continue;
      for (int i = 1; i < n; ++i)
        REQUIRE(separation_count(r, i, i + 1) == binomial(n - 2, d - 1));
    }
}

TEST_CASE("augment examples") {
  for (int n = 3; n <= 7; ++n)
    for (int arity = 1; arity < n; ++arity) {
      auto a = augment(constant_one(n, arity, K::Antisymmetric));
      CHECK(a == constant_one(n, arity + 1, augmented_kind(K::Antisymmetric, arity - 1)));
      CHECK(augment(constant_one(n, arity, K::Symmetric)) ==
            constant_one(n, arity + 1, K::Symmetric));
    }
  CHECK(augment(constant_one(5, 2, K::Antisymmetric)).kind() == K::Antisymmetric);
  CHECK(augment(constant_one(5, 3, K::Antisymmetric)).kind() == K::Symmetric);
  CHECK_THROWS_AS(augment(constant_one(4, 4, K::Symmetric)), input_error);
}

TEST_CASE("reduce and augment match the literal product formulas, kinds included") {
  for (int n = 2; n <= 7; ++n)
    for (int arity = 1; arity <= std::min(n, 4); ++arity)
      for (auto kind : {K::Symmetric, K::Antisymmetric}) {
        auto f = random_sign_function(n, arity, kind, seed_for(n, arity, kind, 0));
        if (arity >= 2) check_against_oracle(f, reduce(f), oracle::reduce_at);
        if (arity < n) check_against_oracle(f, augment(f), oracle::augment_at);
      }
}

TEST_CASE("kind tables over n <= 9") {
  for (int n = 2; n <= 9; ++n)
    for (int arity = 1; arity <= n; ++arity) {
      const int d = arity - 1;
      CHECK(reduced_kind(K::Symmetric, n, d) == K::Symmetric);
      CHECK(augmented_kind(K::Symmetric, d) == K::Symmetric);
      CHECK((reduced_kind(K::Antisymmetric, n, d) == K::Symmetric) == (n % 2 == d % 2));
      CHECK((augmented_kind(K::Antisymmetric, d) == K::Symmetric) == (d % 2 == 0));
    }
}

TEST_CASE("double reduction constant") {
  CHECK(double_reduce_constant(random_sign_function(6, 3, K::Symmetric, 1)) == 1);
  CHECK(double_reduce_constant(random_sign_function(4, 3, K::Antisymmetric, 2)) == -1);
  CHECK(double_reduce_constant(random_sign_function(5, 3, K::Antisymmetric, 3)) == 1);
  CHECK_THROWS_AS(double_reduce_constant(constant_one(5, 2, K::Symmetric)), input_error);
  // Independent recomputation with the literal formula applied twice.
  for (int n = 3; n <= 7; ++n)
    for (int arity = 3; arity <= n; ++arity)
      for (auto kind : {K::Symmetric, K::Antisymmetric}) {
        auto f = random_sign_function(n, arity, kind, seed_for(n, arity, kind, 1));
        const int c = double_reduce_constant(f);
        for (const auto& s : enumerate_subsets(n, arity - 2)) {
          int v = 1;
          for (int y = 1; y <= n; ++y) {
            if (s.contains(y)) continue;
            std::vector<int> args{y};
            args.insert(args.end(), s.elements().begin(), s.elements().end());
            v *= oracle::reduce_at(f, args);
          }
          REQUIRE(v == c);
        }
      }
}

TEST_CASE("double augmentation is positive") {
  CHECK(double_augment_positive(constant_one(6, 2, K::Antisymmetric)));
  CHECK_THROWS_AS(double_augment_positive(constant_one(4, 3, K::Symmetric)), input_error);
  for (int n = 3; n <= 8; ++n)
    for (int arity = 1; arity + 2 <= n; ++arity)
      for (auto kind : {K::Symmetric, K::Antisymmetric})
        for (std::uint64_t t = 0; t < 20; ++t) {
          auto f = random_sign_function(n, arity, kind, seed_for(n, arity, kind, t));
          REQUIRE(double_augment_positive(f));
          REQUIRE(double_augment_positive(flip(f, colex_unrank(t % binomial(n, arity), n, arity))));
        }
}

TEST_CASE("flip images") {
  auto img = reduce_flip_image(Subset(5, {1, 2, 3}));
  REQUIRE(img.size() == 3);
  CHECK(img[0] == Subset(5, {1, 2}));
  CHECK(img[1] == Subset(5, {1, 3}));
  CHECK(img[2] == Subset(5, {2, 3}));
  auto aimg = augment_flip_image(Subset(4, {1, 2}));
  REQUIRE(aimg.size() == 2);
  CHECK(aimg[0] == Subset(4, {1, 2, 3}));
  CHECK(aimg[1] == Subset(4, {1, 2, 4}));
  CHECK_THROWS_AS(reduce_flip_image(Subset(4, {2})), input_error);
  CHECK_THROWS_AS(augment_flip_image(Subset(3, {1, 2, 3})), input_error);
}

TEST_CASE("flips propagate through reduce and augment exactly on the images") {
  auto differing = [](const SignFunction& a, const SignFunction& b) {
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < a.signs().size(); ++i)
      if (a.sign_at(i) != b.sign_at(i)) out.push_back(i);
    return out;
  };
  auto ranks = [](const std::vector<Subset>& v) {
    std::vector<std::uint64_t> out;
    for (const auto& s : v) out.push_back(colex_rank(s));
    std::sort(out.begin(), out.end());
    return out;
  };
  for (int n = 3; n <= 8; ++n)
    for (int arity = 1; arity <= std::min(n, 5); ++arity)
      for (auto kind : {K::Symmetric, K::Antisymmetric}) {
        Rng rng(seed_for(n, arity, kind, 7));
        for (int t = 0; t < 10; ++t) {
          auto f = random_sign_function(n, arity, kind, rng.next());
          auto F = colex_unrank(rng.below(binomial(n, arity)), n, arity);
          auto g = flip(f, F);
          if (arity >= 2) {
            auto img = reduce_flip_image(F);
            REQUIRE(img.size() == static_cast<std::size_t>(arity));
            REQUIRE(differing(reduce(f), reduce(g)) == ranks(img));
          }
          if (arity < n) {
            auto img = augment_flip_image(F);
            REQUIRE(img.size() == static_cast<std::size_t>(n - arity));
            REQUIRE(differing(augment(f), augment(g)) == ranks(img));
          }
        }
      }
}

TEST_CASE("boundary maps compose to zero") {
  for (int n = 1; n <= 7; ++n) {
    auto c = build_f2_complex(n);
    REQUIRE(c.boundary_maps.size() == static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
      REQUIRE(c.rho(k).rows() == binomial(n, k - 1));
      REQUIRE(c.rho(k).cols() == binomial(n, k));
    }
    for (int k = 2; k <= n; ++k) REQUIRE((c.rho(k - 1) * c.rho(k)).is_zero());
  }
}

TEST_CASE("homology of the simplex") {
  CHECK(build_f2_complex(3).homology_dims == std::vector<int>{1, 0, 0});
  CHECK(build_f2_complex(4).homology_dims == std::vector<int>{1, 0, 0, 0});
  CHECK(build_f2_complex(1).homology_dims == std::vector<int>{1});
  for (int n = 3; n <= 7; ++n) {
    std::vector<int> expected(n, 0);
    expected[0] = 1;
    CHECK(build_f2_complex(n).homology_dims == expected);
  }
  CHECK_THROWS_AS(build_f2_complex(0), input_error);
}

TEST_CASE("the boundary map is reduction on exponents") {
  for (int n = 3; n <= 7; ++n)
    for (int k = 2; k <= n; ++k) {
      auto rho = boundary_matrix(n, k);
      for (std::uint64_t t = 0; t < 5; ++t) {
        auto f = random_sign_function(n, k, K::Symmetric, seed_for(n, k, K::Symmetric, t));
        REQUIRE(rho.apply(sign_exponents(f)) == sign_exponents(reduce(f)));
      }
    }
}

TEST_CASE("gf2 rank on small matrices") {
  Gf2Matrix m(3, 3);
  m.set(0, 0);
  m.set(0, 1);
  m.set(1, 1);
  m.set(1, 2);
  m.set(2, 0);
  m.set(2, 2);
  CHECK(m.rank() == 2);  // rows sum to zero
  Gf2Matrix id(130, 130);
  for (std::size_t i = 0; i < 130; ++i) id.set(i, i);
  CHECK(id.rank() == 130);
  CHECK((id * id).rank() == 130);
  CHECK(Gf2Matrix(4, 5).rank() == 0);
  CHECK(Gf2Matrix(4, 5).nullity() == 5);
}

TEST_CASE("reduction relations (light sweep)") {
  for (int n = 5; n <= 9; ++n)
    for (int arity = 2; arity <= 4; ++arity)
      for (auto kind : {K::Symmetric, K::Antisymmetric})
        for (std::uint64_t t = 0; t < 10; ++t) {
          auto f = random_sign_function(n, arity, kind, seed_for(n, arity, kind, t));
          const int d = f.d();
          auto pr = partition(reduce(f));
          if (d % 2 == 0)
            REQUIRE(pr.is_single_class());
          else
            REQUIRE(pr == partition(f));
          if (n >= arity + 3) {
            auto pa = partition(augment(f));
            if (n % 2 == d % 2)
              REQUIRE(pa.is_single_class());
            else
              REQUIRE(pa == partition(f));
          }
        }
}
