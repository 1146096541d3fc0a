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

#ifndef JAMGUARD_TYPES_HPP
#define JAMGUARD_TYPES_HPP

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace jamguard {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

// Sorted, duplicate-free set of resolvable-path (grid) indices. Indices are
// 0-based in-process; serialized reports shift them to 1-based.
using IndexSet = std::vector<int>;

// Invalid or inconsistent configuration (grid too coarse, bad power, ...).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Numerical routine failed to converge.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller violated a dimensional or structural contract.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

IndexSet set_difference(const IndexSet &a, const IndexSet &b);
IndexSet set_intersection(const IndexSet &a, const IndexSet &b);
IndexSet set_union(const IndexSet &a, const IndexSet &b);
int intersection_size(const IndexSet &a, const IndexSet &b);
bool contains(const IndexSet &set, int index);

// Shift to the 1-based numbering used in reports.
std::vector<int> to_one_based(const IndexSet &set);

} // namespace jamguard

#endif
