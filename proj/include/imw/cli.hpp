#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace imw {

/// Exit codes: 0 when every requested check passes, 1 when a property
/// verdict is false, 2 on usage, input or validation errors.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFalse = 1;
inline constexpr int kExitError = 2;

/// `args` excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace imw
