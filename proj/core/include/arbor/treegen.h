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

#ifndef ARBOR_TREEGEN_H_
#define ARBOR_TREEGEN_H_

#include "arbor/rng.h"
#include "arbor/tree.h"

namespace arbor {

// Uniform attachment: arrival t attaches to a uniform earlier vertex.
RecursiveTree GenerateUrrt(Vertex n, Rng& rng);

// Linear preferential attachment. Arrival 2 attaches to the root; afterwards
// the parent is the owner of a uniformly drawn half-edge, i.e. vertex v is
// chosen with probability deg(v) / (2 (t - 2)) at step t.
RecursiveTree GeneratePa(Vertex n, Rng& rng);

RecursiveTree Generate(Model model, Vertex n, Rng& rng);

// Hides the arrival order behind a uniformly random relabeling.
LabeledInstance ShuffleLabels(const RecursiveTree& tree, Rng& rng);

}  // namespace arbor

#endif  // ARBOR_TREEGEN_H_
