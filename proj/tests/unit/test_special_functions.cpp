// SPDX-License-Identifier: Apache-2.0
//
// jamguard: direction-based jamming detection and suppression for mmWave massive MIMO
// Copyright (C) 2026 The jamguard authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "helpers.hpp"

#include "jamguard/special_functions.hpp"

#include <boost/math/special_functions/binomial.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <doctest.h>

using namespace jamguard;

TEST_SUITE("special_functions")
{
    TEST_CASE("regularized gamma agrees with Boost.Math")
    {
        for (double a : {0.5, 1.0, 2.0, 5.0, 20.0, 57.5, 200.0}) {
            for (double x : {1e-3, 0.1, 0.9, 1.0, 3.0, 10.0, 19.0, 20.0, 21.0, 40.0, 150.0, 260.0}) {
                const double p = boost::math::gamma_p(a, x);
                const double q = boost::math::gamma_q(a, x);
                CAPTURE(a);
                CAPTURE(x);
                if (p > 1e-300)
                    CHECK(testutil::rel_close(regularized_gamma_p(a, x), p, 1e-12));
                if (q > 1e-300)
                    CHECK(testutil::rel_close(regularized_gamma_q(a, x), q, 1e-12));
            }
        }
    }

    TEST_CASE("exponential special case")
    {
        for (double x : {0.01, 1.0, 6.9}) {
            CHECK(testutil::rel_close(regularized_gamma_q(1.0, x), std::exp(-x), 1e-14));
        }
    }

    TEST_CASE("boundary values")
    {
        CHECK(regularized_gamma_p(3.0, 0.0) == 0.0);
        CHECK(regularized_gamma_q(3.0, 0.0) == 1.0);
        CHECK_THROWS(regularized_gamma_p(0.0, 1.0));
        CHECK_THROWS(regularized_gamma_q(2.0, -1.0));
    }

    TEST_CASE("log binomial")
    {
        for (int n : {1, 10, 30, 120})
            for (int k = 0; k <= n; k += std::max(1, n / 7))
                CHECK(log_binomial(n, k) ==
                      doctest::Approx(std::log(boost::math::binomial_coefficient<double>(n, k))).epsilon(1e-12));
    }
}
