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

#include "deqaaa/amplify.hpp"
#include "deqaaa/bits.hpp"
#include "deqaaa/circuit.hpp"
#include "deqaaa/distributed.hpp"
#include "deqaaa/distribution.hpp"
#include "deqaaa/error.hpp"
#include "deqaaa/gate.hpp"
#include "deqaaa/metrics.hpp"
#include "deqaaa/prep.hpp"
#include "deqaaa/sampling.hpp"
#include "deqaaa/state_vector.hpp"
#include "deqaaa/targets.hpp"
