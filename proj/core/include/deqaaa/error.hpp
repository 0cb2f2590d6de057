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

#include <stdexcept>
#include <string>

namespace deqaaa {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Qubit count, matrix dimension or vector length outside the supported range.
class SizeError : public Error {
   public:
    using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
   public:
    using Error::Error;
};

/// Qubit or node index out of bounds, or overlapping control/target sets.
class IndexError : public Error {
   public:
    using Error::Error;
};

/// An algorithm instance that cannot run, e.g. a node whose local targets
/// carry zero marginal probability.
class InfeasibleError : public Error {
   public:
    using Error::Error;
};

/// Malformed input files or text IR.
class ParseError : public Error {
   public:
    using Error::Error;
};

/// A numeric postcondition failed (norm drift, exactness not reached).
class NumericError : public Error {
   public:
    using Error::Error;
};

}  // namespace deqaaa
