// Copyright 2026 The spintop Authors
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

#include "spintop/common.hpp"
#include "spintop/spin.hpp"
#include "spintop/phase_point.hpp"
#include "spintop/states.hpp"
#include "spintop/coherent.hpp"
#include "spintop/grid.hpp"
#include "spintop/grid_io.hpp"
#include "spintop/moments.hpp"
#include "spintop/inversion.hpp"
#include "spintop/quantum_top.hpp"
#include "spintop/classical_top.hpp"
#include "spintop/propagators.hpp"
#include "spintop/decoherence.hpp"
#include "spintop/nmr_gates.hpp"
#include "spintop/compare.hpp"
#include "spintop/parse.hpp"
