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

#include "cnotcalc/bitvec.h"

#include <bit>
#include <stdexcept>

namespace cnotcalc {

namespace {
size_t words_for(size_t n) { return (n + 63) >> 6; }
}  // namespace

BitVec::BitVec(size_t n) : num_bits_(n), words_(words_for(n), 0) {}

BitVec::BitVec(std::initializer_list<int> bits) : BitVec(bits.size()) {
    size_t i = 0;
    for (int b : bits) {
        if (b != 0 && b != 1) {
            throw std::invalid_argument("BitVec entries must be 0 or 1");
        }
        set(i++, b == 1);
    }
}

BitVec BitVec::from_string(std::string_view text) {
    BitVec v(text.size());
    for (size_t i = 0; i < text.size(); i++) {
        if (text[i] == '1') {
            v.set(i, true);
        } else if (text[i] != '0') {
            throw std::invalid_argument("bit string may only contain '0' and '1': '" + std::string(text) + "'");
        }
    }
    return v;
}

BitVec BitVec::from_integer(uint64_t value, size_t n) {
    BitVec v(n);
    for (size_t i = 0; i < n && i < 64; i++) {
        v.set(i, (value >> i) & 1);
    }
    return v;
}

BitVec BitVec::unit(size_t n, size_t i) {
    BitVec v(n);
    v.set(i, true);
    return v;
}

bool BitVec::get(size_t i) const {
    if (i >= num_bits_) {
        throw std::out_of_range("BitVec index " + std::to_string(i) + " out of range " + std::to_string(num_bits_));
    }
    return (*this)[i];
}

void BitVec::set(size_t i, bool value) {
    uint64_t mask = uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= mask;
    } else {
        words_[i >> 6] &= ~mask;
    }
}

void BitVec::flip(size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

BitVec &BitVec::operator^=(const BitVec &other) {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("BitVec length mismatch in xor");
    }
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BitVec BitVec::operator^(const BitVec &other) const {
    BitVec result = *this;
    result ^= other;
    return result;
}

BitVec &BitVec::operator&=(const BitVec &other) {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("BitVec length mismatch in and");
    }
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] &= other.words_[k];
    }
    return *this;
}

BitVec BitVec::operator&(const BitVec &other) const {
    BitVec result = *this;
    result &= other;
    return result;
}

bool BitVec::dot(const BitVec &other) const {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("BitVec length mismatch in dot");
    }
    uint64_t acc = 0;
    for (size_t k = 0; k < words_.size(); k++) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

bool BitVec::is_zero() const {
    for (uint64_t w : words_) {
        if (w) {
            return false;
        }
    }
    return true;
}

size_t BitVec::popcount() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

size_t BitVec::first_one(size_t start) const {
    if (start >= num_bits_) {
        return num_bits_;
    }
    size_t k = start >> 6;
    uint64_t w = words_[k] & (~uint64_t{0} << (start & 63));
    while (true) {
        if (w) {
            return (k << 6) + std::countr_zero(w);
        }
        if (++k == words_.size()) {
            return num_bits_;
        }
        w = words_[k];
    }
}

BitVec BitVec::slice(size_t begin, size_t end) const {
    if (begin > end || end > num_bits_) {
        throw std::out_of_range("BitVec slice out of range");
    }
    BitVec v(end - begin);
    for (size_t i = begin; i < end; i++) {
        v.set(i - begin, (*this)[i]);
    }
    return v;
}

BitVec BitVec::concat(const BitVec &tail) const {
    BitVec v(num_bits_ + tail.num_bits_);
    for (size_t i = 0; i < num_bits_; i++) {
        v.set(i, (*this)[i]);
    }
    for (size_t i = 0; i < tail.num_bits_; i++) {
        v.set(num_bits_ + i, tail[i]);
    }
    return v;
}

BitVec BitVec::select(const std::vector<size_t> &indices) const {
    BitVec v(indices.size());
    for (size_t k = 0; k < indices.size(); k++) {
        v.set(k, get(indices[k]));
    }
    return v;
}

std::string BitVec::str() const {
    std::string s(num_bits_, '0');
    for (size_t i = 0; i < num_bits_; i++) {
        if ((*this)[i]) {
            s[i] = '1';
        }
    }
    return s;
}

bool BitVec::operator<(const BitVec &other) const {
    if (num_bits_ != other.num_bits_) {
        return num_bits_ < other.num_bits_;
    }
    for (size_t i = 0; i < num_bits_; i++) {
        bool a = (*this)[i];
        bool b = other[i];
        if (a != b) {
            return b;
        }
    }
    return false;
}

}  // namespace cnotcalc
