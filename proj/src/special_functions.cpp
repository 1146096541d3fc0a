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

#include "jamguard/special_functions.hpp"

#include "jamguard/types.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace jamguard {

namespace {

constexpr int max_iterations = 10000;
constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double tiny = std::numeric_limits<double>::min() / eps;

// x^a e^-x / Gamma(a), the common prefactor of both expansions.
double prefactor(double a, double x)
{
    return std::exp(a * std::log(x) - x - std::lgamma(a));
}

// P(a, x) = x^a e^-x / Gamma(a+1) * sum_n x^n / ((a+1)...(a+n))
double lower_series(double a, double x)
{
    double term = 1.0 / a;
    double sum = term;
    for (int n = 1; n < max_iterations; ++n) {
        term *= x / (a + n);
        sum += term;
        if (std::abs(term) < std::abs(sum) * eps)
            return sum * prefactor(a, x);
    }
    throw NumericError("incomplete gamma series did not converge");
}

// Q(a, x) by the continued fraction 1/(x+1-a- 1(1-a)/(x+3-a- 2(2-a)/(x+5-a- ...)))
// evaluated with the modified Lentz method.
double upper_fraction(double a, double x)
{
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < max_iterations; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny)
            d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < eps)
            return h * prefactor(a, x);
    }
    throw NumericError("incomplete gamma continued fraction did not converge");
}

void check_arguments(double a, double x)
{
    if (!(a > 0.0))
        throw std::domain_error("incomplete gamma needs a > 0");
    if (!(x >= 0.0))
        throw std::domain_error("incomplete gamma needs x >= 0");
}

} // namespace

double regularized_gamma_p(double a, double x)
{
    check_arguments(a, x);
    if (x == 0.0)
        return 0.0;
    if (std::isinf(x))
        return 1.0;
    if (x < a + 1.0)
        return lower_series(a, x);
    return 1.0 - upper_fraction(a, x);
}

double regularized_gamma_q(double a, double x)
{
    check_arguments(a, x);
    if (x == 0.0)
        return 1.0;
    if (std::isinf(x))
        return 0.0;
    if (x < a + 1.0)
        return 1.0 - lower_series(a, x);
    return upper_fraction(a, x);
}

double log_binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        throw std::domain_error("binomial coefficient needs 0 <= k <= n");
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

} // namespace jamguard
