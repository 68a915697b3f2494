/*
   Copyright 2026 The z4ucyclic authors

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

#ifndef Z4U_CLI_HPP
#define Z4U_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace z4u {

/// Exit codes: 0 ok, 2 bad input, 3 budget exceeded, 4 internal invariant
/// violation.  All algebra lives in the core modules; this is an adapter.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace z4u

#endif
