// Copyright 2026 The netctl Authors.
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

#ifndef NETCTL_LOG_HPP_
#define NETCTL_LOG_HPP_

#include <string>

namespace netctl {

enum class LogLevel { kError = 0, kWarn = 1, kInfo = 2, kDebug = 3 };

// Global verbosity, initialized from the NETCTL_LOG environment variable
// ("error", "warn", "info", "debug"); defaults to warn.
LogLevel log_level();
void set_log_level(LogLevel level);

// Writes "netctl: <msg>\n" to stderr when `level` is enabled, and to the
// log file (if one is set) for error/warn/info always.
void log_message(LogLevel level, const std::string& msg);

// Routes a copy of log output to `path` (truncating); empty closes the sink.
void set_log_file(const std::string& path);

inline void log_error(const std::string& msg) {
  log_message(LogLevel::kError, msg);
}
inline void log_warn(const std::string& msg) {
  log_message(LogLevel::kWarn, msg);
}
inline void log_info(const std::string& msg) {
  log_message(LogLevel::kInfo, msg);
}
inline void log_debug(const std::string& msg) {
  log_message(LogLevel::kDebug, msg);
}

}  // namespace netctl

#endif  // NETCTL_LOG_HPP_
