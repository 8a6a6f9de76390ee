#include "lpterm/config.hpp"

#include <stdexcept>
#include <string>

namespace lpterm {

void Config::validate() const {
  if (repetition < 3) {
    throw std::invalid_argument("repetition number must be at least 3, got " +
                                std::to_string(repetition));
  }
  if (algorithm != 1 && algorithm != 2) {
    throw std::invalid_argument("algorithm must be 1 or 2, got " +
                                std::to_string(algorithm));
  }
  if (max_nodes == 0) throw std::invalid_argument("max_nodes must be positive");
  if (cprime_steps && *cprime_steps == 0) {
    throw std::invalid_argument("cprime_steps must be positive");
  }
}

}  // namespace lpterm
