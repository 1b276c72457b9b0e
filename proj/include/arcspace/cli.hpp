// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arcspace
{

// Runs the command line driver. Exit status 0 on success, 1 when a library
// operation fails, 2 for usage, file and parse errors.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace arcspace
