// Copyright 2026 The Denoise Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "denoise/special_math.h"

using denoise::ExpIntE1;

TEST_SUITE("special_math") {

TEST_CASE("E1 reference values") {
  struct Point {
    double x, e1;
  };
  // High-precision references for E1(x) = integral_x^inf e^-t / t dt.
  const Point table[] = {
      {0.01, 4.03792957653811381},
      {0.1, 1.82292395841939062},
      {0.5, 0.559773594776160812},
      {1.0, 0.219383934395520274},
      {2.0, 0.0489005107080611196},
      {5.0, 0.0011482955912753258},
      {10.0, 4.15696892968532428e-6},
      {30.0, 3.02155201068881254e-15},
  };
  for (const Point& p : table) {
    CHECK(ExpIntE1(p.x) == doctest::Approx(p.e1).epsilon(1e-13));
  }
}

TEST_CASE("E1 agrees with the standard library exponential integral") {
  for (double x = 0.02; x < 40.0; x *= 1.37) {
    double want = -std::expint(-x);
    CHECK(ExpIntE1(x) == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("E1 brackets via known inequalities") {
  // 0.5 e^-x ln(1 + 2/x) < E1(x) < e^-x ln(1 + 1/x) for x > 0.
  for (double x : {0.05, 0.3, 1.0, 4.0, 12.0}) {
    double v = ExpIntE1(x);
    CHECK(v > 0.5 * std::exp(-x) * std::log1p(2.0 / x));
    CHECK(v < std::exp(-x) * std::log1p(1.0 / x));
  }
}

TEST_CASE("E1 is strictly decreasing") {
  double prev = ExpIntE1(1e-6);
  for (double x = 1e-3; x < 50.0; x *= 1.8) {
    double v = ExpIntE1(x);
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("E1 rejects non-positive arguments") {
  CHECK_THROWS_AS(ExpIntE1(0.0), std::domain_error);
  CHECK_THROWS_AS(ExpIntE1(-1.0), std::domain_error);
}

}  // TEST_SUITE
