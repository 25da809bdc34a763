#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace leftorder {

// Exit codes: 0 success, 1 usage or parse error, 2 precondition error,
// 3 failed verification.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// Convenience overload; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leftorder
