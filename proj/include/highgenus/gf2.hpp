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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hg {

/// Dense vector over GF(2), packed 64 bits per word.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const noexcept { return size_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVector& operator^=(const BitVector& other) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
        return *this;
    }
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend bool operator==(const BitVector&, const BitVector&) = default;

    std::size_t count() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }
    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    /// Parity of the overlap with `other`.
    bool dot(const BitVector& other) const {
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
        return std::popcount(acc) & 1;
    }

    /// Lowest set index, or size() when empty.
    std::size_t first() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return size_;
    }

    std::vector<int> ones() const {
        std::vector<int> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            auto word = words_[w];
            while (word) {
                out.push_back(static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(word))));
                word &= word - 1;
            }
        }
        return out;
    }

    std::span<const std::uint64_t> words() const { return words_; }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Incrementally built row-echelon basis. Rows are kept fully reduced
/// against earlier pivots so membership is a single forward sweep.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t width) : width_(width), pivot_row_(width, -1) {}

    std::size_t width() const { return width_; }
    std::size_t rank() const { return rows_.size(); }

    /// Reduces `v` against the basis in place; returns true if it was
    /// independent (and then inserts it).
    bool insert(BitVector v);

    /// Reduce `v`; the result is zero iff v lies in the span.
    BitVector reduce(BitVector v) const;
    bool contains(const BitVector& v) const { return reduce(v).none(); }

private:
    std::size_t width_;
    std::vector<BitVector> rows_;
    std::vector<int> pivots_;
    std::vector<int> pivot_row_;
};

/// Rank of the matrix whose rows are given.
std::size_t gf2_rank(std::span<const BitVector> rows);

/// Inverse of a square GF(2) matrix given by rows; nullopt if singular.
std::optional<std::vector<BitVector>> gf2_inverse(std::span<const BitVector> rows);

}  // namespace hg
