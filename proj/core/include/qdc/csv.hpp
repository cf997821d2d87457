// Copyright 2026 The qdcsim Authors
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

#include <string>
#include <vector>

#include "qdc/devices.hpp"
#include "qdc/evolution.hpp"

namespace qdc {

// 12 significant digits ("%.12g"); the one rendering used for every CSV field.
std::string format_number(double value);

// "t,<label>,..." header, one row per time sample.
std::string trace_csv(const EvolutionTrace& tr);

// "control,f_source,f_drain".
std::string sweep_csv(const std::vector<SweepPoint>& rows);

}  // namespace qdc
