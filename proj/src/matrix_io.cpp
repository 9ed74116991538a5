#include "woldkit/matrix_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "woldkit/errors.hpp"

namespace woldkit {

namespace {

CMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("matrix literal: expected a JSON object");
  for (const char* k : {"rows", "cols", "re", "im"})
    if (!j.contains(k)) throw ConfigError(std::string("matrix literal: missing field '") + k + "'");
  const long long rows = j.at("rows").get<long long>();
  const long long cols = j.at("cols").get<long long>();
  if (rows < 0 || cols < 0) throw ConfigError("matrix literal: negative dimensions");
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  const size_t count = static_cast<size_t>(rows) * static_cast<size_t>(cols);
  if (!re.is_array() || !im.is_array() || re.size() != count || im.size() != count)
    throw ConfigError("matrix literal: re/im arrays must both hold rows*cols entries");
  CMatrix m(rows, cols);
  size_t idx = 0;
  for (long long r = 0; r < rows; ++r)
    for (long long c = 0; c < cols; ++c, ++idx)
      m(r, c) = Complex(re[idx].get<double>(), im[idx].get<double>());
  if (!m.allFinite()) throw ConfigError("matrix literal: non-finite entries");
  return m;
}

} // namespace

CMatrix matrix_from_json_text(const std::string& text) {
  return matrix_from_json(nlohmann::json::parse(text));
}

CMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open matrix file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return matrix_from_json_text(buf.str());
}

std::string format_double(double v) {
  if (!std::isfinite(v)) throw Error("format_double: non-finite value");
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string matrix_to_json_text(const CMatrix& m) {
  std::ostringstream os;
  JsonWriter w(os);
  w.begin_object();
  w.key("rows").value(m.rows());
  w.key("cols").value(m.cols());
  w.key("re").begin_array();
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) w.value(m(r, c).real());
  w.end_array();
  w.key("im").begin_array();
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) w.value(m(r, c).imag());
  w.end_array();
  w.end_object();
  return os.str();
}

void save_matrix(const std::string& path, const CMatrix& m) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open matrix file for writing: " + path);
  out << matrix_to_json_text(m) << '\n';
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

void JsonWriter::separate() {
  if (pending_key_) {
    pending_key_ = false;
    return;
  }
  if (!need_comma_.empty()) {
    if (need_comma_.back()) os_ << ',';
    need_comma_.back() = true;
  }
}

JsonWriter& JsonWriter::begin_object() {
  separate();
  os_ << '{';
  need_comma_.push_back(false);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  need_comma_.pop_back();
  os_ << '}';
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  separate();
  os_ << '[';
  need_comma_.push_back(false);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  need_comma_.pop_back();
  os_ << ']';
  return *this;
}

JsonWriter& JsonWriter::key(const std::string& k) {
  separate();
  os_ << '"' << json_escape(k) << "\":";
  pending_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(double v) {
  separate();
  os_ << format_double(v);
  return *this;
}

JsonWriter& JsonWriter::value(const std::string& v) {
  separate();
  os_ << '"' << json_escape(v) << '"';
  return *this;
}

JsonWriter& JsonWriter::value(const char* v) { return value(std::string(v)); }

JsonWriter& JsonWriter::value(bool v) {
  separate();
  os_ << (v ? "true" : "false");
  return *this;
}

JsonWriter& JsonWriter::value(long long v) {
  separate();
  os_ << v;
  return *this;
}

JsonWriter& JsonWriter::value_null() {
  separate();
  os_ << "null";
  return *this;
}

} // namespace woldkit
