// Copyright 2026 The sppart Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPPART_SPPART_HPP_
#define SPPART_SPPART_HPP_

#include "sppart/core.hpp"
#include "sppart/equitable_coloring.hpp"
#include "sppart/error.hpp"
#include "sppart/general_authorship.hpp"
#include "sppart/generators.hpp"
#include "sppart/hungarian.hpp"
#include "sppart/io.hpp"
#include "sppart/min_cost_flow.hpp"
#include "sppart/oracles.hpp"
#include "sppart/partition_algos.hpp"
#include "sppart/random.hpp"
#include "sppart/similarity.hpp"
#include "sppart/solver.hpp"
#include "sppart/stats.hpp"

#endif  // SPPART_SPPART_HPP_
