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

#include "jamguard/angular_grid.hpp"

#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace jamguard {

namespace {

constexpr double half_pi = std::numbers::pi / 2.0;
// Slack for spans computed as pi/2 - spread/2 in floating point.
constexpr double span_slack = 1e-12;

} // namespace

ArrayGeometry::ArrayGeometry(int antennas) : antennas_(antennas)
{
    if (antennas < 2)
        throw ConfigError("array needs at least 2 antennas, got " + std::to_string(antennas));
}

CVector steering_vector(double theta, const ArrayGeometry &geometry)
{
    if (!(std::abs(theta) <= half_pi))
        throw std::domain_error("steering angle outside [-pi/2, pi/2]");

    const int m_count = geometry.antenna_count();
    const double phase_step =
        -2.0 * std::numbers::pi * ArrayGeometry::element_spacing_ratio * std::sin(theta);
    const double scale = 1.0 / std::sqrt(static_cast<double>(m_count));

    CVector a(m_count);
    for (int m = 0; m < m_count; ++m)
        a[m] = std::polar(scale, phase_step * m);
    return a;
}

AngularGrid::AngularGrid(const ArrayGeometry &geometry)
    : geometry_(geometry), angles_(geometry.antenna_count()), sines_(geometry.antenna_count()),
      basis_(geometry.antenna_count(), geometry.antenna_count()), twiddle_(geometry.antenna_count())
{
    const int m_count = geometry.antenna_count();
    const double length = geometry.array_length();
    for (int i = 0; i < m_count; ++i) {
        sines_[i] = (i - (m_count - 1) / 2.0) / length;
        angles_[i] = std::asin(sines_[i]);
        basis_.col(i) = steering_vector(angles_[i], geometry);
        twiddle_[i] = std::polar(1.0, -std::numbers::pi * i * (m_count - 1.0) / m_count);
    }
}

// [U^H y]_i = M^{-1/2} sum_m y_m exp(-j pi m (M-1)/M) exp(j 2 pi m i / M).
CMatrix AngularGrid::project(const CMatrix &y) const
{
    if (y.rows() != size())
        throw ContractError("block height differs from grid size");
    Eigen::FFT<double> fft;
    fft.SetFlag(Eigen::FFT<double>::Unscaled);
    const double scale = 1.0 / std::sqrt(static_cast<double>(size()));
    CMatrix out(y.rows(), y.cols());
    CVector in(size()), spectrum(size());
    for (Eigen::Index c = 0; c < y.cols(); ++c) {
        in = y.col(c).cwiseProduct(twiddle_);
        fft.inv(spectrum, in);
        out.col(c) = scale * spectrum;
    }
    return out;
}

AngularGrid build_angular_grid(const ArrayGeometry &geometry)
{
    return AngularGrid(geometry);
}

IndexSet grid_indices_in_span(const AngularGrid &grid, double mean_angle, double spread)
{
    if (!(spread > 0.0))
        throw std::domain_error("angular spread must be positive");
    const double lo = mean_angle - spread / 2.0;
    const double hi = mean_angle + spread / 2.0;
    if (lo < -half_pi - span_slack || hi > half_pi + span_slack)
        throw std::domain_error("angular span leaves [-pi/2, pi/2]");

    const auto angles = grid.angles();
    const auto first = std::lower_bound(angles.begin(), angles.end(), lo);
    const auto last = std::upper_bound(angles.begin(), angles.end(), hi);

    IndexSet out;
    out.reserve(static_cast<std::size_t>(std::max<std::ptrdiff_t>(last - first, 0)));
    for (auto it = first; it < last; ++it)
        out.push_back(static_cast<int>(it - angles.begin()));
    return out;
}

} // namespace jamguard
