// Copyright 2026 The highgenus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <vector>

namespace hg {

struct MatchEdge {
    int u = 0;
    int v = 0;
    long long weight = 0;
};

/// Maximum-weight matching on a general graph (Edmonds' blossom algorithm
/// with dual variables, O(n^3)). Returns mate[v] or -1.
std::vector<int> max_weight_matching(int n, std::span<const MatchEdge> edges, bool max_cardinality = false);

/// Minimum-weight perfect matching of a complete graph given by a symmetric
/// weight matrix. n must be even.
std::vector<int> min_weight_perfect_matching(const std::vector<std::vector<long long>>& weight);

long long matching_cost(const std::vector<std::vector<long long>>& weight, const std::vector<int>& mate);

}  // namespace hg
