#include "lmgdfm/csv.hpp"

#include <cstdio>
#include <cstring>
#include <sstream>

namespace lmgdfm::csv {

std::string num(double v) {
  char buf[40];
  // Try increasing precision until the value round-trips.
  for (int prec = 6; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    double back = 0.0;
    std::sscanf(buf, "%lf", &back);
    if (back == v) return buf;
  }
  return buf;
}

std::vector<std::vector<std::string>> parse(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t pos = line.find(',', start);
      if (pos == std::string::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, pos - start));
      start = pos + 1;
    }
    rows.push_back(std::move(fields));
  }
  return rows;
}

}  // namespace lmgdfm::csv
