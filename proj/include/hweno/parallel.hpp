#pragma once

#include <atomic>
#include <barrier>
#include <functional>
#include <stdexcept>
#include <thread>
#include <vector>

namespace hweno {

// Persistent shared-memory worker pool.  run() splits [0, items) into one
// contiguous slice per worker, so the partition (and therefore every write)
// is a pure function of (items, size) and results never depend on timing.
// The calling thread acts as worker 0; size 1 runs inline with no threads.
class WorkerPool {
 public:
  explicit WorkerPool(int n) : n_(n), start_(n), done_(n) {
    if (n < 1) throw std::invalid_argument("WorkerPool: need >= 1 worker");
    for (int r = 1; r < n_; ++r)
      threads_.emplace_back([this, r] { worker(r); });
  }

  WorkerPool(const WorkerPool&) = delete;
  WorkerPool& operator=(const WorkerPool&) = delete;

  ~WorkerPool() {
    if (n_ > 1) {
      stop_.store(true, std::memory_order_relaxed);
      start_.arrive_and_wait();
      for (auto& t : threads_) t.join();
    }
  }

  int size() const { return n_; }

  // body(begin, end) is invoked on disjoint ranges covering [0, items).
  void run(size_t items, const std::function<void(size_t, size_t)>& body) {
    if (n_ == 1) {
      if (items > 0) body(0, items);
      return;
    }
    items_ = items;
    body_ = &body;
    start_.arrive_and_wait();
    slice(0);
    done_.arrive_and_wait();
  }

 private:
  void slice(int rank) {
    size_t b = items_ * rank / n_;
    size_t e = items_ * (rank + 1) / n_;
    if (b < e) (*body_)(b, e);
  }

  void worker(int rank) {
    for (;;) {
      start_.arrive_and_wait();
      if (stop_.load(std::memory_order_relaxed)) return;
      slice(rank);
      done_.arrive_and_wait();
    }
  }

  int n_;
  std::atomic<bool> stop_{false};
  size_t items_ = 0;
  const std::function<void(size_t, size_t)>* body_ = nullptr;
  std::vector<std::thread> threads_;
  std::barrier<> start_, done_;
};

// Adapter giving the time steppers an elementwise parallel-for.
struct PoolExec {
  WorkerPool* pool;
  template <class Fn>
  void operator()(size_t n, Fn&& fn) const {
    pool->run(n, [&](size_t b, size_t e) {
      for (size_t i = b; i < e; ++i) fn(i);
    });
  }
};

}  // namespace hweno
