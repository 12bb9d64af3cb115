#include <cstring>

#include "doctest.h"
#include "detlab/constants.hpp"
#include "detlab/errors.hpp"
#include "detlab/presets.hpp"

using namespace detlab;

TEST_CASE("pinned constant table") {
  CHECK(std::strcmp(constants::kConstantsVersion, "detlab-constants-v1") == 0);
  CHECK(constants::kSmallSolutionC == 4);
  CHECK(constants::kPiXKappa == 2.0);
  CHECK(constants::kPiXKappaPrime == 3.0);
  CHECK(constants::kStaircaseC == 2.0);
  CHECK(constants::kSlopeTolerance == 0.1);
}

TEST_CASE("presets") {
  CHECK_THROWS_AS(run_preset("nonsense"), DomainError);
  auto h = run_preset("hilbert");
  REQUIRE(h.size() == 1);
  CHECK(h[0].id == 3);
  CHECK(h[0].pass);
  auto p = run_preset("primes");
  REQUIRE(p.size() == 2);
  for (const auto& r : p) CHECK(r.pass);
}
