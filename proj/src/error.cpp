#include "knot/error.hpp"

#include <cstdlib>
#include <string>

namespace knot {

int enumeration_limit(int fallback) {
  const char* raw = std::getenv("KNOT_MAX_CROSSINGS");
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    std::size_t used = 0;
    const int value = std::stoi(raw, &used);
    if (used != std::string(raw).size() || value < 0) return fallback;
    return value;
  } catch (const std::exception&) {
    return fallback;
  }
}

}  // namespace knot
