#pragma once

#include <cstdio>
#include <string>
#include <vector>

namespace lovol {

// Minimal JSON emitter with insertion-ordered keys and %.17g doubles, so
// identical inputs always serialize to identical bytes and every double
// round-trips exactly. Parsing is done elsewhere (nlohmann/json).
class JsonWriter {
 public:
  std::string take() { return std::move(out_); }

  JsonWriter& begin_object() { return raw("{"); }
  JsonWriter& end_object() { return raw("}"); }
  JsonWriter& begin_array() { return raw("["); }
  JsonWriter& end_array() { return raw("]"); }
  JsonWriter& comma() { return raw(","); }

  JsonWriter& key(const std::string& k) {
    string(k);
    return raw(":");
  }
  JsonWriter& string(const std::string& s);
  JsonWriter& number(double v);
  JsonWriter& number(std::int64_t v);
  JsonWriter& number(int v) { return number(std::int64_t(v)); }
  JsonWriter& boolean(bool b) { return raw(b ? "true" : "false"); }
  JsonWriter& null() { return raw("null"); }

  JsonWriter& field(const std::string& k, double v) { return key(k).number(v); }
  JsonWriter& field(const std::string& k, std::int64_t v) { return key(k).number(v); }
  JsonWriter& field(const std::string& k, int v) { return key(k).number(v); }
  JsonWriter& field(const std::string& k, bool v) { return key(k).boolean(v); }
  JsonWriter& field(const std::string& k, const std::string& v) {
    key(k);
    return string(v);
  }
  JsonWriter& field(const std::string& k, const char* v) { return field(k, std::string(v)); }

  template <typename T>
  JsonWriter& number_array(const std::vector<T>& values) {
    begin_array();
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) comma();
      number(values[i]);
    }
    return end_array();
  }

  static std::string format_double(double v);

 private:
  JsonWriter& raw(const char* s) {
    out_ += s;
    return *this;
  }
  std::string out_;
};

}  // namespace lovol
