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

#ifndef JAMGUARD_ANGULAR_GRID_HPP
#define JAMGUARD_ANGULAR_GRID_HPP

#include "jamguard/types.hpp"

#include <span>
#include <vector>

namespace jamguard {

// Uniform linear array with half-wavelength element spacing.
struct ArrayGeometry {
    static constexpr double element_spacing_ratio = 0.5; // d / lambda

    explicit ArrayGeometry(int antennas);

    int antenna_count() const { return antennas_; }
    // Normalized aperture L = M * d / lambda.
    double array_length() const { return antennas_ * element_spacing_ratio; }

private:
    int antennas_;
};

// Unit-norm ULA response, element m = exp(-j 2 pi m (d/lambda) sin(theta)) / sqrt(M).
// Throws std::domain_error for |theta| > pi/2.
CVector steering_vector(double theta, const ArrayGeometry &geometry);

// The M sampled arrival angles and the orthonormal steering basis U whose
// columns are the steering vectors at those angles. Directional sines are
// spaced 1/L apart, which makes the columns exactly orthogonal.
class AngularGrid {
public:
    explicit AngularGrid(const ArrayGeometry &geometry);

    const ArrayGeometry &geometry() const { return geometry_; }
    int size() const { return geometry_.antenna_count(); }

    std::span<const double> angles() const { return angles_; }
    std::span<const double> directional_sines() const { return sines_; }
    const CMatrix &basis() const { return basis_; }
    auto column(int i) const { return basis_.col(i); }

    // U^H Y column by column through an inverse FFT; agrees with the dense
    // product to rounding.
    CMatrix project(const CMatrix &y) const;

private:
    ArrayGeometry geometry_;
    std::vector<double> angles_;
    std::vector<double> sines_;
    CMatrix basis_;
    CVector twiddle_; // exp(-j pi m (M - 1) / M)
};

AngularGrid build_angular_grid(const ArrayGeometry &geometry);

// Grid indices whose sampled angle lies in the closed interval
// [mean - spread/2, mean + spread/2]. May be empty for a narrow spread.
// Throws std::domain_error when the span leaves [-pi/2, pi/2] or spread <= 0.
IndexSet grid_indices_in_span(const AngularGrid &grid, double mean_angle, double spread);

} // namespace jamguard

#endif
