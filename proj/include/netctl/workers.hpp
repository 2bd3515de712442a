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

#ifndef NETCTL_WORKERS_HPP_
#define NETCTL_WORKERS_HPP_

#include <functional>

namespace netctl {

// Runs fn(0..count-1) on up to `workers` threads.  Work items must write
// only to their own slot so results are independent of scheduling.  If any
// item throws, the exception of the lowest index is rethrown after all items
// finish, which keeps failures deterministic as well.
void parallel_for(int count, int workers, const std::function<void(int)>& fn);

int default_worker_count();

}  // namespace netctl

#endif  // NETCTL_WORKERS_HPP_
