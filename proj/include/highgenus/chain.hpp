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

#include <initializer_list>
#include <span>
#include <vector>

#include "highgenus/gf2.hpp"

namespace hg {

/// GF(2) chain over a fixed cell set (edges, usually). Addition is
/// symmetric difference.
class BinaryChain {
public:
    BinaryChain() = default;
    explicit BinaryChain(std::size_t size) : bits_(size) {}
    BinaryChain(std::size_t size, std::span<const int> support) : bits_(size) {
        for (int i : support) bits_.flip(static_cast<std::size_t>(i));
    }
    BinaryChain(std::size_t size, std::initializer_list<int> support) : bits_(size) {
        for (int i : support) bits_.flip(static_cast<std::size_t>(i));
    }
    explicit BinaryChain(BitVector bits) : bits_(std::move(bits)) {}

    std::size_t size() const { return bits_.size(); }
    std::size_t weight() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }
    bool contains(int i) const { return bits_.test(static_cast<std::size_t>(i)); }
    void toggle(int i) { bits_.flip(static_cast<std::size_t>(i)); }

    std::vector<int> support() const { return bits_.ones(); }
    const BitVector& bits() const { return bits_; }

    BinaryChain& operator+=(const BinaryChain& o) {
        bits_ ^= o.bits_;
        return *this;
    }
    friend BinaryChain operator+(BinaryChain a, const BinaryChain& b) { return a += b; }
    friend bool operator==(const BinaryChain&, const BinaryChain&) = default;

    /// Overlap parity (the intersection pairing between a primal cycle and
    /// a dual cycle).
    bool pairing(const BinaryChain& o) const { return bits_.dot(o.bits_); }

private:
    BitVector bits_;
};

}  // namespace hg
