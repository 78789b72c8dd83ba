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

#ifndef LOGFIX_TOOLS_CLI_HPP_
#define LOGFIX_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace logfix::cli {

// args[0] is the program name. Exit codes: 0 ok, 1 usage or config error,
// 2 data error, 3 backend error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace logfix::cli

#endif  // LOGFIX_TOOLS_CLI_HPP_
