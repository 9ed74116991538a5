#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "woldkit/types.hpp"

namespace woldkit {

/// Matrix literal format: {"rows": r, "cols": c, "re": [...], "im": [...]}
/// with row-major coefficient arrays. Parsing is strict; serialization uses
/// 17 significant digits so values round-trip bit-exactly.
CMatrix matrix_from_json_text(const std::string& text);
CMatrix load_matrix(const std::string& path);
std::string matrix_to_json_text(const CMatrix& m);
void save_matrix(const std::string& path, const CMatrix& m);

/// Deterministic float formatting shared by every serializer (%.17g).
/// Throws on non-finite input.
std::string format_double(double v);

/// Minimal streaming JSON writer with deterministic output: insertion order
/// preserved, floats via format_double, no whitespace dependence on locale.
class JsonWriter {
public:
  explicit JsonWriter(std::ostream& os) : os_(os) {}

  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(const std::string& k);
  JsonWriter& value(double v);
  JsonWriter& value(const std::string& v);
  JsonWriter& value(const char* v);
  JsonWriter& value(bool v);
  JsonWriter& value(long long v);
  JsonWriter& value(Index v) { return value(static_cast<long long>(v)); }
  JsonWriter& value(int v) { return value(static_cast<long long>(v)); }
  JsonWriter& value_null();

private:
  void separate();
  std::ostream& os_;
  std::vector<bool> need_comma_{};
  bool pending_key_ = false;
};

std::string json_escape(const std::string& s);

} // namespace woldkit
