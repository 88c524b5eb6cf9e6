#include "sheafradon/parallel.hpp"

#include <cstdlib>
#include <string>

namespace sheafradon {

namespace {

std::size_t initial_threads() {
  const char* env = std::getenv("SHEAFRADON_THREADS");
  if (!env) return 1;
  try {
    long v = std::stol(env);
    return v > 0 ? static_cast<std::size_t>(v) : 1;
  } catch (...) {
    return 1;
  }
}

std::atomic<std::size_t>& configured() {
  static std::atomic<std::size_t> n{initial_threads()};
  return n;
}

}  // namespace

std::size_t thread_count() { return configured().load(); }

void set_thread_count(std::size_t n) { configured().store(n == 0 ? 1 : n); }

}  // namespace sheafradon
