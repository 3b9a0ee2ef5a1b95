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

#include "arbor/tree_io.h"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace arbor {
namespace {

bool IsBlank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

void WriteEdgeList(std::ostream& out, const LabeledTree& tree) {
  out << "n=" << tree.size() << '\n';
  for (const auto& [u, v] : tree.Edges()) {
    out << (u + 1) << ' ' << (v + 1) << '\n';
  }
}

LabeledTree ReadEdgeList(std::istream& in) {
  std::string line;
  while (std::getline(in, line) && IsBlank(line)) {
  }
  if (line.rfind("n=", 0) != 0) {
    throw std::runtime_error("edge list must start with 'n=<count>'");
  }
  long long n = 0;
  try {
    n = std::stoll(line.substr(2));
  } catch (const std::exception&) {
    throw std::runtime_error("malformed header '" + line + "'");
  }
  if (n < 1) throw std::runtime_error("edge list declares n < 1");
  std::vector<Edge> edges;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    std::istringstream fields(line);
    long long u = 0, v = 0;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra)) {
      throw std::runtime_error("malformed edge on line " +
                               std::to_string(line_no));
    }
    if (u < 1 || v < 1 || u > n || v > n) {
      throw std::runtime_error("label out of range on line " +
                               std::to_string(line_no));
    }
    edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
  }
  return LabeledTree(static_cast<Vertex>(n), edges);
}

std::string FormatParents(const RecursiveTree& tree) {
  std::string out = "parents:";
  for (Vertex t = 1; t < tree.size(); ++t) {
    out += ' ';
    out += std::to_string(tree.parent(t) + 1);
  }
  return out;
}

RecursiveTree ParseParents(const std::string& line) {
  const std::string prefix = "parents:";
  if (line.rfind(prefix, 0) != 0) {
    throw std::runtime_error("expected 'parents:' prefix");
  }
  std::istringstream fields(line.substr(prefix.size()));
  std::vector<Vertex> parents{kNoVertex};
  long long p = 0;
  while (fields >> p) parents.push_back(static_cast<Vertex>(p - 1));
  if (!fields.eof()) throw std::runtime_error("malformed parent list");
  return RecursiveTree(std::move(parents));
}

}  // namespace arbor
