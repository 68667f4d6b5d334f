#include "semifield/report.hpp"

#include <sstream>

namespace semifield {

std::string Report::str() const {
  std::ostringstream out;
  if (passed) {
    out << "PASS cases=" << casesRun;
  } else {
    out << "FAIL case=" << witness->caseIndex << " witness=" << witness->law << "(";
    for (std::size_t i = 0; i < witness->keys.size(); ++i) {
      if (i) out << ",";
      out << witness->keys[i];
    }
    out << ")";
  }
  return out.str();
}

}  // namespace semifield
