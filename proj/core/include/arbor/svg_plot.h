// Copyright 2026 The Arbor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ARBOR_SVG_PLOT_H_
#define ARBOR_SVG_PLOT_H_

#include <string>
#include <vector>

#include "arbor/risk.h"

namespace arbor {

// Log-log plot of risk against n for one (model, alpha): one polyline of
// medians per estimator with q1-q3 whiskers, optionally with the lower-bound
// curve.
std::string RenderRiskPlot(const std::vector<RiskSummary>& summaries,
                           Model model, double alpha, bool with_bounds);

}  // namespace arbor

#endif  // ARBOR_SVG_PLOT_H_
