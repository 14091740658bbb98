#include "char2paley/parallel.hpp"

#include <cstdlib>
#include <string>

namespace char2paley {

unsigned worker_count() {
  unsigned requested = 0;
  if (const char* env = std::getenv("CHAR2_PALEY_THREADS")) {
    try {
      requested = static_cast<unsigned>(std::stoul(env));
    } catch (...) {
      requested = 0;
    }
  }
  if (requested == 0) requested = std::thread::hardware_concurrency();
  return requested == 0 ? 1 : requested;
}

}  // namespace char2paley
