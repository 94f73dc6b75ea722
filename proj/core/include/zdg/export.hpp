// Copyright 2026 The zdg Authors.
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

#pragma once

#include <string>

#include "zdg/zdg_graph.hpp"

namespace zdg {

/// Graphviz text: `graph zdg_n<k> { ... }` with one node statement per
/// vertex (id "<re>+<im>i", label "a+bi@j", attributes class=<j> and
/// part=lambda|omega) followed by one `--` statement per edge.
std::string export_dot(const ZdgGraph& graph);

/// {"n","order","size","classes":[{"j","size","nilpotent_sq"}],"edges_e1","edges_e2"}
std::string export_graph_json(const ZdgGraph& graph);

}  // namespace zdg
