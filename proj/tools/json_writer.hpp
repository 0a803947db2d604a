// SPDX-License-Identifier: Apache-2.0
//
// Streaming JSON emitter with fixed key order and 17-significant-digit
// reals, so every double survives a round trip through any conforming reader.
#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace bures::cli {

/// %.17g, or `null` for non-finite values.
std::string format_real(double x);

class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view k);

  JsonWriter& value(double x);
  JsonWriter& value(std::uint64_t x);
  JsonWriter& value(int x);
  JsonWriter& value(bool b);
  JsonWriter& value(std::string_view s);
  JsonWriter& value(const char* s) { return value(std::string_view(s)); }
  JsonWriter& null();

  /// Array of reals on one line, e.g. a vector or a point.
  JsonWriter& reals(std::initializer_list<double> xs);

  const std::string& str() const { return out_; }

 private:
  struct Frame {
    bool is_object;
    bool empty = true;
    bool inline_array = false;
  };

  void before_value();
  void newline();
  void write_string(std::string_view s);
  void raw(std::string_view s) { out_.append(s); }

  std::string out_;
  std::vector<Frame> stack_;
  bool after_key_ = false;
};

}  // namespace bures::cli
