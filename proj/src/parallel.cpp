#include "erdos/parallel.hpp"

#include <cstdlib>
#include <string>

namespace erdos {

unsigned default_parallelism() {
  if (const char* env = std::getenv("ERDOS_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace erdos
