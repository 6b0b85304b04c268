#include "dforge/parallel.hpp"

#include <cstdlib>
#include <string>

namespace dforge {

unsigned configured_threads() {
  unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  const char* env = std::getenv("DIOPHANTINE_FORGE_THREADS");
  if (env == nullptr || *env == '\0') return hw;
  try {
    unsigned long v = std::stoul(env);
    return v == 0 ? hw : static_cast<unsigned>(v);
  } catch (const std::exception&) {
    return hw;
  }
}

}  // namespace dforge
