// Copyright 2026 The dqg Authors
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

#include "dqg/catalog.hpp"
#include "dqg/equilibrium.hpp"
#include "dqg/equivalence.hpp"
#include "dqg/errors.hpp"
#include "dqg/game.hpp"
#include "dqg/io.hpp"
#include "dqg/preferences.hpp"
#include "dqg/quantum_core.hpp"
#include "dqg/random.hpp"
#include "dqg/render.hpp"
#include "dqg/tolerances.hpp"
