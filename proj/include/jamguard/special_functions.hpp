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

#ifndef JAMGUARD_SPECIAL_FUNCTIONS_HPP
#define JAMGUARD_SPECIAL_FUNCTIONS_HPP

namespace jamguard {

// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).
// Power series for x < a + 1, Lentz continued fraction otherwise; relative
// accuracy around 1e-14 for a up to a few hundred.
double regularized_gamma_p(double a, double x);

// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x), computed
// directly in the tail so small values keep full relative precision.
double regularized_gamma_q(double a, double x);

// log C(n, k) through lgamma; valid for 0 <= k <= n.
double log_binomial(int n, int k);

} // namespace jamguard

#endif
