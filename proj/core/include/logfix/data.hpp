// Copyright 2026 The logfix Authors.
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

// Data files compiled into the library: lexicons, defect definitions and
// prompt templates.

#ifndef LOGFIX_DATA_HPP_
#define LOGFIX_DATA_HPP_

#include <string_view>

namespace logfix {

// Contents of a bundled data file by name (e.g. "verbs.tsv"). Throws
// Error(kDataError) for unknown names.
std::string_view embedded_data(std::string_view name);

}  // namespace logfix

#endif  // LOGFIX_DATA_HPP_
