#include "hilbertnorm/parallel.hpp"

#include <cstdlib>
#include <string>

namespace hilbertnorm {

int worker_count() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("HILBERTNORM_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap >= 1) n = std::min(n, cap);
    } catch (const std::exception&) {
      // unparsable value: ignore the cap
    }
  }
  return n;
}

}  // namespace hilbertnorm
