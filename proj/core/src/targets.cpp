// Copyright 2026 The deqaaa Authors
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

#include "deqaaa/targets.hpp"

#include <algorithm>

#include "deqaaa/error.hpp"

namespace deqaaa {

TargetSpec::TargetSpec(int n_bits, std::vector<BasisIndex> indices)
    : n_bits_(n_bits), indices_(std::move(indices)) {
    if (n_bits < 1 || n_bits > kMaxBitWidth) {
        throw DomainError("target width " + std::to_string(n_bits) + " out of range");
    }
    if (indices_.empty()) throw DomainError("target set is empty");
    std::sort(indices_.begin(), indices_.end());
    if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
        throw DomainError("target set has duplicate strings");
    }
    if (indices_.back() >> n_bits) {
        throw DomainError("target " + std::to_string(indices_.back()) + " does not fit in " +
                          std::to_string(n_bits) + " bits");
    }
}

TargetSpec TargetSpec::from_bitstrings(int n_bits, std::span<const std::string> bits) {
    std::vector<BasisIndex> xs;
    xs.reserve(bits.size());
    for (const auto& b : bits) xs.push_back(from_bitstring(b, n_bits));
    return TargetSpec(n_bits, std::move(xs));
}

TargetSpec TargetSpec::from_decimals(int n_bits, std::span<const std::uint64_t> decimals,
                                     BitOrder order) {
    std::vector<BasisIndex> xs;
    xs.reserve(decimals.size());
    for (auto d : decimals) xs.push_back(decimal_to_index(d, n_bits, order));
    return TargetSpec(n_bits, std::move(xs));
}

bool TargetSpec::contains(BasisIndex x) const {
    return std::binary_search(indices_.begin(), indices_.end(), x);
}

std::vector<std::string> TargetSpec::bitstrings() const {
    std::vector<std::string> out;
    out.reserve(indices_.size());
    for (auto x : indices_) out.push_back(to_bitstring(x, n_bits_));
    return out;
}

}  // namespace deqaaa
