/*
 * Copyright 2026 the negacode authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef NEGACODE_TOOLS_CLI_HPP
#define NEGACODE_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace negacode::cli {

/*
 * Runs one command line (without the program name) against the given
 * streams.  Documents go to out, diagnostics to err.  Returns the process
 * exit status: 0 on success, 1 on usage or domain errors, 2 when a
 * mathematical hypothesis of the requested operation is not met, 3 when the
 * request exceeds the work ceiling.
 */
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace negacode::cli

#endif
