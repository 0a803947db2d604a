// SPDX-License-Identifier: Apache-2.0
#include "json_writer.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace bures::cli {

std::string format_real(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void JsonWriter::newline() {
  out_.push_back('\n');
  out_.append(2 * stack_.size(), ' ');
}

void JsonWriter::before_value() {
  if (after_key_) {
    after_key_ = false;
    return;
  }
  if (stack_.empty()) return;
  Frame& top = stack_.back();
  if (top.is_object) throw std::logic_error("JSON object value without key");
  if (!top.empty) raw(top.inline_array ? ", " : ",");
  if (!top.inline_array) newline();
  top.empty = false;
}

JsonWriter& JsonWriter::begin_object() {
  before_value();
  raw("{");
  stack_.push_back({true});
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  const bool empty = stack_.back().empty;
  stack_.pop_back();
  if (!empty) newline();
  raw("}");
  if (stack_.empty()) out_.push_back('\n');
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  before_value();
  raw("[");
  stack_.push_back({false});
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  const Frame top = stack_.back();
  stack_.pop_back();
  if (!top.empty && !top.inline_array) newline();
  raw("]");
  return *this;
}

JsonWriter& JsonWriter::key(std::string_view k) {
  Frame& top = stack_.back();
  if (!top.is_object) throw std::logic_error("JSON key outside object");
  if (!top.empty) raw(",");
  newline();
  top.empty = false;
  write_string(k);
  raw(": ");
  after_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(double x) {
  before_value();
  raw(format_real(x));
  return *this;
}

JsonWriter& JsonWriter::value(std::uint64_t x) {
  before_value();
  raw(std::to_string(x));
  return *this;
}

JsonWriter& JsonWriter::value(int x) {
  before_value();
  raw(std::to_string(x));
  return *this;
}

JsonWriter& JsonWriter::value(bool b) {
  before_value();
  raw(b ? "true" : "false");
  return *this;
}

JsonWriter& JsonWriter::value(std::string_view s) {
  before_value();
  write_string(s);
  return *this;
}

void JsonWriter::write_string(std::string_view s) {
  out_.push_back('"');
  for (char c : s) {
    switch (c) {
      case '"': raw("\\\""); break;
      case '\\': raw("\\\\"); break;
      case '\n': raw("\\n"); break;
      case '\t': raw("\\t"); break;
      case '\r': raw("\\r"); break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          raw(buf);
        } else {
          out_.push_back(c);
        }
    }
  }
  out_.push_back('"');
}

JsonWriter& JsonWriter::null() {
  before_value();
  raw("null");
  return *this;
}

JsonWriter& JsonWriter::reals(std::initializer_list<double> xs) {
  begin_array();
  stack_.back().inline_array = true;
  for (double x : xs) value(x);
  return end_array();
}

}  // namespace bures::cli
