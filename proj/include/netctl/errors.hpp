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

#ifndef NETCTL_ERRORS_HPP_
#define NETCTL_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace netctl {

// Base class for all netctl failures.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failure inside a time-stepping loop.  `step` is the index of the
// step that failed (-1 when unknown).
class SimulationError : public Error {
 public:
  enum class Kind { kOverflow, kNewtonDivergence, kSingularMatrix };

  SimulationError(Kind kind, int step, const std::string& msg)
      : Error(msg), kind_(kind), step_(step) {}

  Kind kind() const { return kind_; }
  int step() const { return step_; }

 private:
  Kind kind_;
  int step_;
};

// Configuration file problem.  `line` is 1-based, 0 when the error is not
// tied to a specific line.
class ConfigError : public Error {
 public:
  ConfigError(int line, const std::string& msg) : Error(msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A requested budget / selection cannot be satisfied.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration would exceed the configured cap; callers should
// switch to the random baseline.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

// An optimizer stage failed in a way that invalidates the pipeline result.
class SolverError : public Error {
 public:
  using Error::Error;
};

// Results bundle already exists and --force was not given.
class BundleExistsError : public Error {
 public:
  using Error::Error;
};

// Filesystem failure while writing a bundle.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace netctl

#endif  // NETCTL_ERRORS_HPP_
