// Copyright 2026 The cnotcalc Authors
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

#ifndef CNOTCALC_BITVEC_H
#define CNOTCALC_BITVEC_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cnotcalc {

/// A vector over GF(2), packed into 64-bit words.
///
/// Bits beyond `size()` in the last word are always zero, so word-wise
/// comparison and hashing are exact.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(size_t n);
    BitVec(std::initializer_list<int> bits);

    /// Parses a string of '0'/'1' characters; index 0 is the leftmost char.
    static BitVec from_string(std::string_view text);
    /// The low `n` bits of `value`, bit i of the integer at coordinate i.
    static BitVec from_integer(uint64_t value, size_t n);
    static BitVec unit(size_t n, size_t i);

    size_t size() const { return num_bits_; }
    bool empty() const { return num_bits_ == 0; }

    bool operator[](size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    bool get(size_t i) const;
    void set(size_t i, bool value);
    void flip(size_t i);

    BitVec &operator^=(const BitVec &other);
    BitVec operator^(const BitVec &other) const;
    BitVec &operator&=(const BitVec &other);
    BitVec operator&(const BitVec &other) const;

    /// Inner product over GF(2).
    bool dot(const BitVec &other) const;
    bool is_zero() const;
    size_t popcount() const;
    /// Index of the lowest set bit at or after `start`, or size() if none.
    size_t first_one(size_t start = 0) const;

    /// Coordinates [begin, end) as a new vector.
    BitVec slice(size_t begin, size_t end) const;
    /// This vector followed by `tail`.
    BitVec concat(const BitVec &tail) const;
    /// Keeps the coordinates listed in `indices`, in that order.
    BitVec select(const std::vector<size_t> &indices) const;

    std::string str() const;

    bool operator==(const BitVec &other) const = default;
    /// Lexicographic order on coordinates, coordinate 0 most significant.
    bool operator<(const BitVec &other) const;

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace cnotcalc

#endif
