#pragma once

#include <string>
#include <vector>

namespace lmgdfm::csv {

/// Shortest round-trippable decimal form of a double (deterministic).
std::string num(double v);

/// Minimal CSV split (no quoting; all project outputs are plain tokens).
std::vector<std::vector<std::string>> parse(const std::string& text);

}  // namespace lmgdfm::csv
