#pragma once

#include <functional>
#include <string>

namespace casimir {

using WarningHandler = std::function<void(const std::string&)>;

/// Emit a non-fatal warning. Each distinct message is delivered once per
/// process (until reset_warnings()).
void warn(const std::string& message);

/// Replace the handler (default prints "warning: ..." to stderr). Returns
/// the previous handler.
WarningHandler set_warning_handler(WarningHandler handler);

/// Forget which messages were already delivered.
void reset_warnings();

}  // namespace casimir
