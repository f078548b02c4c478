#include <doctest.h>

#include "flagbott/randomized.hpp"
#include "flagbott/tower.hpp"
#include "helpers.hpp"

using namespace flagbott;
using testutil::vec;

TEST_CASE("validate_flag_tower") {
  CHECK_NOTHROW(validate_flag_tower(testutil::three_stage_flag_tower()));
  CHECK_NOTHROW(validate_flag_tower(testutil::flag_manifold_tower(1)));

  SUBCASE("wrong shape names the offending pair") {
    FlagBottTower t;
    t.dims = {2, 1};
    t.mats.emplace(std::make_pair(2, 1), IntMatrix::identity(2));
    CHECK_THROWS_WITH_AS(validate_flag_tower(t), doctest::Contains("(2,1)"), input_error);
  }
  SUBCASE("missing key") {
    FlagBottTower t;
    t.dims = {1, 1};
    CHECK_THROWS_WITH_AS(validate_flag_tower(t), doctest::Contains("missing"), input_error);
  }
  SUBCASE("extra key") {
    FlagBottTower t = testutil::flag_manifold_tower(2);
    t.mats.emplace(std::make_pair(2, 1), IntMatrix::identity(2));
    CHECK_THROWS_AS(validate_flag_tower(t), input_error);
  }
  SUBCASE("nonpositive stage dimension") {
    FlagBottTower t;
    t.dims = {0};
    CHECK_THROWS_AS(validate_flag_tower(t), input_error);
  }
}

TEST_CASE("lambda_matrix") {
  SUBCASE("dims (2,1,2) block layout") {
    const auto t = testutil::three_stage_generalized_tower(7, 3, 4, 5, 6);
    const IntMatrix expected{{-1, 0, 0}, {-1, 0, 0}, {7, -1, 0}, {3, 5, -1}, {4, 6, -1}};
    CHECK(lambda_matrix(t) == expected);
  }
  SUBCASE("single stage") {
    CHECK(lambda_matrix(testutil::projective_space_tower(1)) == IntMatrix{{-1}});
  }
  SUBCASE("dims (1,1) with a = 3") {
    GeneralizedBottTower t;
    t.dims = {1, 1};
    t.vecs.emplace(std::make_pair(2, 1), vec({3}));
    CHECK(lambda_matrix(t) == IntMatrix{{-1, 0}, {3, -1}});
  }
  SUBCASE("diagonal blocks are all -1, upper blocks zero") {
    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
      const auto t = random_generalized_tower(rng, 3, 3, 9);
      const IntMatrix lam = lambda_matrix(t);
      int row = 0;
      for (int j = 1; j <= t.stages(); ++j)
        for (int k = 0; k < t.dims[j - 1]; ++k, ++row)
          for (int l = 1; l <= t.stages(); ++l) {
            if (l == j) CHECK(lam(row, l - 1) == -1);
            if (l > j) CHECK(lam(row, l - 1) == 0);
          }
    }
  }
}

TEST_CASE("associate") {
  SUBCASE("dims (2,1,2) matrices") {
    const auto t = testutil::three_stage_generalized_tower(7, 3, 4, 5, 6);
    const FlagBottTower f = associate(t);
    CHECK(f.dims == t.dims);
    CHECK(f.mat(2, 1) == IntMatrix{{7, 0, 0}, {0, 0, 0}});
    CHECK(f.mat(3, 1) == IntMatrix{{3, 0, 0}, {4, 0, 0}, {0, 0, 0}});
    CHECK(f.mat(3, 2) == IntMatrix{{5, 0}, {6, 0}, {0, 0}});
  }
  SUBCASE("single stage has no matrices") {
    CHECK(associate(testutil::projective_space_tower(3)).mats.empty());
  }
  SUBCASE("dims (1,1), a = 5") {
    GeneralizedBottTower t;
    t.dims = {1, 1};
    t.vecs.emplace(std::make_pair(2, 1), vec({5}));
    CHECK(associate(t).mat(2, 1) == IntMatrix{{5, 0}, {0, 0}});
  }
  SUBCASE("always validates, with zero last row and zero trailing columns") {
    Rng rng(29);
    for (int trial = 0; trial < 20; ++trial) {
      const auto t = random_generalized_tower(rng, 3, 3, 9);
      const FlagBottTower f = associate(t);
      CHECK_NOTHROW(validate_flag_tower(f));
      for (const auto& [key, a] : f.mats) {
        for (int c = 0; c < a.cols(); ++c) CHECK(a(a.rows() - 1, c) == 0);
        for (int r = 0; r < a.rows(); ++r)
          for (int c = 1; c < a.cols(); ++c) CHECK(a(r, c) == 0);
      }
    }
  }
}

TEST_CASE("enumerate_fixed_points") {
  CHECK(enumerate_fixed_points({2, 1}).size() == 12);
  CHECK(enumerate_fixed_points({1}).size() == 2);
  CHECK(enumerate_fixed_points({2, 1, 1}).size() == 24);
  CHECK_THROWS_AS(enumerate_fixed_points({3, 3, 3, 3, 3}), cap_error);
  CHECK_THROWS_AS(enumerate_fixed_points({2, 1}, 5), cap_error);

  SUBCASE("count matches the factorial product") {
    Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
      const auto t = random_generalized_tower(rng, 3, 3, 1);
      long long expected = 1;
      for (int n : t.dims)
        for (int k = 2; k <= n + 1; ++k) expected *= k;
      CHECK(enumerate_fixed_points(t.dims).size() == static_cast<size_t>(expected));
    }
  }
  SUBCASE("lexicographic order of one-line words") {
    const auto points = enumerate_fixed_points({1, 1});
    REQUIRE(points.size() == 4);
    CHECK(points[0][0] == testutil::perm({1, 2}));
    CHECK(points[0][1] == testutil::perm({1, 2}));
    CHECK(points[1][1] == testutil::perm({2, 1}));
    CHECK(points[3][0] == testutil::perm({2, 1}));
    CHECK(points[3][1] == testutil::perm({2, 1}));
  }
}
