// Copyright 2026 The brp-toolkit Authors.
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

// CPLEX LP text. The objective constant is not representable in every
// reader, so it is written as a "\ offset <value>" comment and restored by
// parse_lp. Row names carry the constraint family: "Yp5_3_2" belongs to
// group "Yp-5".

#ifndef BRP_MIP_LP_FORMAT_HPP_
#define BRP_MIP_LP_FORMAT_HPP_

#include <string>
#include <string_view>

#include "brp/mip/model.hpp"

namespace brp::mip {

std::string emit_lp(const Model& m);

// Reads the subset written by emit_lp. Model metadata is not restored.
Model parse_lp(std::string_view text);

// "Yp5_3_2" -> "Yp-5"; empty for names outside the scheme.
std::string group_of_row(std::string_view row_name);

}  // namespace brp::mip

#endif  // BRP_MIP_LP_FORMAT_HPP_
