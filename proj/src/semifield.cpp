#include "semifield/semifield.hpp"

namespace semifield {

std::string CharClass::str() const {
  switch (tag) {
    case Tag::One:
      return "char=one";
    case Tag::P:
      return "char=p:" + p.str();
    case Tag::ZeroUpTo:
      return "char=zero(bound=" + std::to_string(bound) + ")";
  }
  return "char=?";
}

}  // namespace semifield
