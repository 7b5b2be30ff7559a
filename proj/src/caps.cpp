#include "lvr/caps.hpp"

#include <cstdlib>
#include <sstream>
#include <string>

namespace lvr {

namespace {

Caps parse_env_caps() {
  Caps c;
  const char* env = std::getenv("LVR_CAPS");
  if (!env) return c;
  std::stringstream ss(env);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) continue;
    std::string key = item.substr(0, eq);
    int value = std::atoi(item.c_str() + eq + 1);
    if (value <= 0) continue;
    if (key == "sym") c.symmetric_group = value;
    else if (key == "wg") c.weingarten_k = value;
    else if (key == "faa") c.faa = value;
    else if (key == "wick") c.wick_pairs = value;
    else if (key == "ribbon") c.ribbon_pairs = value;
    else if (key == "kmax") c.kmax = value;
  }
  return c;
}

}  // namespace

const Caps& caps() {
  static const Caps c = parse_env_caps();
  return c;
}

}  // namespace lvr
