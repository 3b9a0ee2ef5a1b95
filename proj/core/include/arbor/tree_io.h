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

#ifndef ARBOR_TREE_IO_H_
#define ARBOR_TREE_IO_H_

#include <iosfwd>
#include <string>

#include "arbor/tree.h"

namespace arbor {

// Edge-list text format, 1-based labels:
//
//   n=<count>
//   u v
//   ...
void WriteEdgeList(std::ostream& out, const LabeledTree& tree);
LabeledTree ReadEdgeList(std::istream& in);

// "parents: p2 p3 ... pn" with 1-based arrival ranks.
std::string FormatParents(const RecursiveTree& tree);
RecursiveTree ParseParents(const std::string& line);

}  // namespace arbor

#endif  // ARBOR_TREE_IO_H_
