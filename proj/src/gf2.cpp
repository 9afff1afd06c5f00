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

#include "highgenus/gf2.hpp"

namespace hg {

bool EchelonBasis::insert(BitVector v) {
    v = reduce(std::move(v));
    const std::size_t p = v.first();
    if (p >= width_) return false;
    // keep the basis fully reduced: clear the new pivot from older rows
    for (auto& row : rows_)
        if (row.test(p)) row ^= v;
    pivot_row_[p] = static_cast<int>(rows_.size());
    pivots_.push_back(static_cast<int>(p));
    rows_.push_back(std::move(v));
    return true;
}

BitVector EchelonBasis::reduce(BitVector v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r)
        if (v.test(static_cast<std::size_t>(pivots_[r]))) v ^= rows_[r];
    return v;
}

std::size_t gf2_rank(std::span<const BitVector> rows) {
    if (rows.empty()) return 0;
    EchelonBasis basis(rows.front().size());
    for (const auto& r : rows) basis.insert(r);
    return basis.rank();
}

std::optional<std::vector<BitVector>> gf2_inverse(std::span<const BitVector> rows) {
    const std::size_t n = rows.size();
    std::vector<BitVector> a(rows.begin(), rows.end());
    std::vector<BitVector> inv(n, BitVector(n));
    for (std::size_t i = 0; i < n; ++i) inv[i].set(i);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && !a[piv].test(col)) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r != col && a[r].test(col)) {
                a[r] ^= a[col];
                inv[r] ^= inv[col];
            }
        }
    }
    return inv;
}

}  // namespace hg
