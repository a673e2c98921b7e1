/* Copyright (C) 2026 The haarproj authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

#include <haarproj/parallel.hpp>

#include <atomic>
#include <thread>

namespace haarproj {

namespace {

std::atomic<int> g_max_jobs{0};

} // namespace

int max_jobs()
{
  int j = g_max_jobs.load(std::memory_order_relaxed);
  if (j > 0) return j;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void set_max_jobs(int jobs)
{
  g_max_jobs.store(jobs > 0 ? jobs : 0, std::memory_order_relaxed);
}

} // namespace haarproj
