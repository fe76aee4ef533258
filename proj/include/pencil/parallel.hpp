#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace pencil {

/// Runs fn(begin, end) over contiguous chunks of [0, total) on `threads`
/// workers and concatenates the per-chunk vectors in chunk order, so the
/// result does not depend on the worker count.
template <class T, class Fn>
std::vector<T> parallel_collect(std::size_t total, unsigned threads, Fn&& fn) {
  if (threads <= 1 || total <= 1) return fn(std::size_t{0}, total);

  const std::size_t workers = std::min<std::size_t>(threads, total);
  std::vector<std::vector<T>> chunks(workers);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = total * w / workers;
    const std::size_t end = total * (w + 1) / workers;
    pool.emplace_back([&, w, begin, end] {
      try {
        chunks[w] = fn(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<T> out;
  for (auto& c : chunks) out.insert(out.end(), std::make_move_iterator(c.begin()),
                                    std::make_move_iterator(c.end()));
  return out;
}

}  // namespace pencil
