#include "casimir/diagnostics.hpp"

#include <iostream>
#include <mutex>
#include <set>
#include <utility>

namespace casimir {

namespace {

struct WarningState {
  std::mutex mutex;
  std::set<std::string> seen;
  WarningHandler handler = [](const std::string& m) { std::cerr << "warning: " << m << '\n'; };
};

WarningState& state() {
  static WarningState s;
  return s;
}

}  // namespace

void warn(const std::string& message) {
  WarningHandler h;
  {
    auto& s = state();
    std::lock_guard lock(s.mutex);
    if (!s.seen.insert(message).second) return;
    h = s.handler;
  }
  if (h) h(message);
}

WarningHandler set_warning_handler(WarningHandler handler) {
  auto& s = state();
  std::lock_guard lock(s.mutex);
  return std::exchange(s.handler, std::move(handler));
}

void reset_warnings() {
  auto& s = state();
  std::lock_guard lock(s.mutex);
  s.seen.clear();
}

}  // namespace casimir
