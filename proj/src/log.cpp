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

#include "netctl/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <mutex>

namespace netctl {
namespace {

LogLevel g_level = [] {
  const char* env = std::getenv("NETCTL_LOG");
  if (env == nullptr) return LogLevel::kWarn;
  if (std::strcmp(env, "error") == 0) return LogLevel::kError;
  if (std::strcmp(env, "warn") == 0) return LogLevel::kWarn;
  if (std::strcmp(env, "info") == 0) return LogLevel::kInfo;
  if (std::strcmp(env, "debug") == 0) return LogLevel::kDebug;
  return LogLevel::kWarn;
}();

std::mutex g_mutex;
std::ofstream g_file;

const char* prefix(LogLevel level) {
  switch (level) {
    case LogLevel::kError:
      return "error";
    case LogLevel::kWarn:
      return "warn";
    case LogLevel::kInfo:
      return "info";
    case LogLevel::kDebug:
      return "debug";
  }
  return "?";
}

}  // namespace

LogLevel log_level() { return g_level; }

void set_log_level(LogLevel level) { g_level = level; }

void log_message(LogLevel level, const std::string& msg) {
  // The file sink always records error..info so the bundle log stays useful
  // regardless of console verbosity.
  const bool to_console = static_cast<int>(level) <= static_cast<int>(g_level);
  const bool to_file_level =
      static_cast<int>(level) <= static_cast<int>(LogLevel::kInfo) ||
      static_cast<int>(level) <= static_cast<int>(g_level);
  if (!to_console && !to_file_level) return;
  std::lock_guard<std::mutex> lock(g_mutex);
  if (to_console) {
    std::fprintf(stderr, "netctl [%s] %s\n", prefix(level), msg.c_str());
  }
  if (g_file.is_open() && to_file_level) {
    g_file << "netctl [" << prefix(level) << "] " << msg << '\n';
    g_file.flush();
  }
}

void set_log_file(const std::string& path) {
  std::lock_guard<std::mutex> lock(g_mutex);
  if (g_file.is_open()) g_file.close();
  if (!path.empty()) g_file.open(path, std::ios::trunc);
}

}  // namespace netctl
