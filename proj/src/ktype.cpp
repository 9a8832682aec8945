#include "humbert/ktype.hpp"

#include "humbert/error.hpp"

namespace humbert {

std::string KType::str() const {
  if (so2_char == 0) return std::to_string(so3_dim) + "x1";
  return std::to_string(so3_dim) + "x(" + std::to_string(so2_char) + ")";
}

KType KType::parse(const std::string& text) {
  KType k;
  try {
    const auto comma = text.find(',');
    if (comma != std::string::npos) {
      k.so3_dim = std::stoi(text.substr(0, comma));
      k.so2_char = std::stoi(text.substr(comma + 1));
    } else {
      const auto x = text.find('x');
      if (x == std::string::npos) throw Error(ErrorCode::ParseError, "K-type '" + text + "'");
      k.so3_dim = std::stoi(text.substr(0, x));
      std::string rest = text.substr(x + 1);
      if (rest == "1") {
        k.so2_char = 0;
      } else {
        if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
        k.so2_char = std::stoi(rest);
      }
    }
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::ParseError, "K-type '" + text + "'");
  }
  if (k.so3_dim <= 0 || k.so3_dim % 2 == 0) throw Error(ErrorCode::ParseError, "SO(3) dimension must be odd");
  return k;
}

}  // namespace humbert
