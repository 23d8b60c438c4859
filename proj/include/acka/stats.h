// Copyright 2026 The ACKA Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ACKA_STATS_H_
#define ACKA_STATS_H_

#include <vector>

namespace acka {

// Kolmogorov survival function Q(lambda) = 2 sum_{k>=1} (-1)^(k-1) exp(-2 k^2 lambda^2).
double KolmogorovQ(double lambda);

// Two-sample Kolmogorov-Smirnov statistic sup |F_a - F_b|.
double KsStatistic(std::vector<double> a, std::vector<double> b);

// Asymptotic p-value with the usual small-sample correction of lambda.
double KsTwoSamplePValue(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace acka

#endif  // ACKA_STATS_H_
