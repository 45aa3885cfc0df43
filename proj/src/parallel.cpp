#include "vlt/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace vlt {

int thread_width() {
  int width = 0;
  if (const char* env = std::getenv("VLT_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && parsed >= 0) width = static_cast<int>(parsed);
  }
  if (width == 0) width = static_cast<int>(std::thread::hardware_concurrency());
  return std::max(1, width);
}

void parallel_for(int n, const std::function<void(int)>& fn) {
  if (n <= 0) return;
  const int width = std::min(thread_width(), n);
  if (width == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(width);
  const int chunk = (n + width - 1) / width;
  for (int w = 0; w < width; ++w) {
    const int begin = w * chunk;
    const int end = std::min(n, begin + chunk);
    if (begin >= end) break;
    workers.emplace_back([begin, end, &fn] {
      for (int i = begin; i < end; ++i) fn(i);
    });
  }
  for (auto& t : workers) t.join();
}

}  // namespace vlt
