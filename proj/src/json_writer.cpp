#include "lovol/json_writer.hpp"

#include <cmath>
#include <stdexcept>

namespace lovol {

std::string JsonWriter::format_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("JSON cannot hold non-finite numbers");
  if (v == 0.0) return "0";  // fold negative zero
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

JsonWriter& JsonWriter::string(const std::string& s) {
  out_ += '"';
  for (char c : s) {
    switch (c) {
      case '"': out_ += "\\\""; break;
      case '\\': out_ += "\\\\"; break;
      case '\n': out_ += "\\n"; break;
      case '\t': out_ += "\\t"; break;
      case '\r': out_ += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out_ += buf;
        } else {
          out_ += c;
        }
    }
  }
  out_ += '"';
  return *this;
}

JsonWriter& JsonWriter::number(double v) {
  out_ += format_double(v);
  return *this;
}

JsonWriter& JsonWriter::number(std::int64_t v) {
  out_ += std::to_string(v);
  return *this;
}

}  // namespace lovol
