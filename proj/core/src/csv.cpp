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

#include "qdc/csv.hpp"

#include <cstdio>

namespace qdc {

std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

std::string trace_csv(const EvolutionTrace& tr) {
    std::string out = "t";
    for (const auto& label : tr.basis) {
        out += ",";
        out += label;
    }
    out += "\n";
    for (Eigen::Index row = 0; row < tr.times.size(); ++row) {
        out += format_number(tr.times(row));
        for (Eigen::Index col = 0; col < tr.probabilities.cols(); ++col) {
            out += ",";
            out += format_number(tr.probabilities(row, col));
        }
        out += "\n";
    }
    return out;
}

std::string sweep_csv(const std::vector<SweepPoint>& rows) {
    std::string out = "control,f_source,f_drain\n";
    for (const auto& point : rows) {
        out += format_number(point.control);
        out += ",";
        out += format_number(point.fidelity_source);
        out += ",";
        out += format_number(point.fidelity_drain);
        out += "\n";
    }
    return out;
}

}  // namespace qdc
