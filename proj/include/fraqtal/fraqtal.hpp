// Copyright 2026 The Fraqtal Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// @file
/// Umbrella header for the whole library.
#pragma once

#include "fraqtal/analytics.hpp"
#include "fraqtal/circuit.hpp"
#include "fraqtal/colormap.hpp"
#include "fraqtal/features.hpp"
#include "fraqtal/image.hpp"
#include "fraqtal/julia.hpp"
#include "fraqtal/metadata.hpp"
#include "fraqtal/parallel.hpp"
#include "fraqtal/param_map.hpp"
#include "fraqtal/pipeline.hpp"
#include "fraqtal/png.hpp"
#include "fraqtal/rng.hpp"
#include "fraqtal/sampling.hpp"
#include "fraqtal/sha1.hpp"
#include "fraqtal/statevector.hpp"
#include "fraqtal/svg.hpp"
#include "fraqtal/version.hpp"
