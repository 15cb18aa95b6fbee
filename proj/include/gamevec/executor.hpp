// Copyright 2026 The gamevec Authors.
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


#pragma once

#include <condition_variable>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace gamevec {

// Fixed-size worker pool for data-parallel loops over batch slots. The calling
// thread runs the first chunk; parallel_for blocks until every chunk is done.
// Not reentrant: one parallel_for at a time per Executor.
class Executor {
 public:
  // 0 selects std::thread::hardware_concurrency().
  explicit Executor(unsigned threads = 0);
  ~Executor();

  Executor(const Executor&) = delete;
  Executor& operator=(const Executor&) = delete;

  unsigned threads() const { return threads_; }

  // Calls fn(begin, end) over a static partition of [0, n). The first
  // exception thrown by any chunk is rethrown here.
  void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

 private:
  void worker_loop(unsigned index);
  void run_chunk(unsigned chunk);

  unsigned threads_;
  std::vector<std::thread> workers_;
  std::mutex mutex_;
  std::condition_variable start_cv_;
  std::condition_variable done_cv_;
  std::size_t generation_ = 0;
  unsigned pending_ = 0;
  bool stop_ = false;

  const std::function<void(std::size_t, std::size_t)>* task_ = nullptr;
  std::size_t task_size_ = 0;
  unsigned task_chunks_ = 0;
  std::exception_ptr error_;
};

}  // namespace gamevec
