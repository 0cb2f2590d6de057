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

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "deqaaa/bits.hpp"

namespace deqaaa {

/// A nonempty set of distinct basis strings of a fixed width, stored as
/// sorted basis indices (qubit 0 most significant).
class TargetSpec {
   public:
    /// Throws DomainError if `indices` is empty, has duplicates, or has an
    /// index outside [0, 2^n_bits).
    TargetSpec(int n_bits, std::vector<BasisIndex> indices);

    /// Parses 0/1 strings of equal width `n_bits`.
    static TargetSpec from_bitstrings(int n_bits, std::span<const std::string> bits);

    /// Decimal labels interpreted under `order`.
    static TargetSpec from_decimals(int n_bits, std::span<const std::uint64_t> decimals,
                                    BitOrder order = BitOrder::kTheory);

    int n_bits() const noexcept { return n_bits_; }
    const std::vector<BasisIndex>& indices() const noexcept { return indices_; }
    std::size_t size() const noexcept { return indices_.size(); }
    bool contains(BasisIndex x) const;
    std::vector<std::string> bitstrings() const;

    bool operator==(const TargetSpec&) const = default;

   private:
    int n_bits_;
    std::vector<BasisIndex> indices_;
};

}  // namespace deqaaa
