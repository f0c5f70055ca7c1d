/*
   Copyright 2026 The cyclofam authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CYCLOFAM_CLI_HPP
#define CYCLOFAM_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace cyclofam {

/// Command dispatch for the cyclofam binary. Exit codes: 0 success,
/// 1 domain failure (e.g. the requested family cannot exist or an audit
/// fails), 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclofam

#endif
