// Copyright 2026 The copsrob Authors
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

#pragma once

#include "copsrob/campaigns.hpp"
#include "copsrob/enumerate.hpp"
#include "copsrob/generators.hpp"
#include "copsrob/graph.hpp"
#include "copsrob/graph_io.hpp"
#include "copsrob/layers.hpp"
#include "copsrob/patterns.hpp"
#include "copsrob/solver.hpp"
#include "copsrob/strategies.hpp"
#include "copsrob/strategy.hpp"
#include "copsrob/train_chase.hpp"
#include "copsrob/transforms.hpp"
