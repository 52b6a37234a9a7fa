// Copyright 2026 The lbpart Authors
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

// Umbrella header.

#pragma once

#include "lbpart/aux_multigraph.hpp"
#include "lbpart/balanced_coloring.hpp"
#include "lbpart/decomposition.hpp"
#include "lbpart/error.hpp"
#include "lbpart/experiment.hpp"
#include "lbpart/forest.hpp"
#include "lbpart/generators.hpp"
#include "lbpart/io.hpp"
#include "lbpart/oracle.hpp"
#include "lbpart/random.hpp"
#include "lbpart/solver.hpp"
