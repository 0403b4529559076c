#include "frontalkit_cli/report.hpp"

namespace frontalkit::cli {

namespace {

std::string leaf(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

void flatten(const Json& v, const std::string& path, std::string& out) {
  if (v.is_object() && !v.empty()) {
    for (const auto& [key, child] : v.items()) flatten(child, path.empty() ? key : path + "." + key, out);
  } else if (v.is_array() && !v.empty()) {
    std::size_t i = 1;
    for (const auto& child : v) flatten(child, path + "[" + std::to_string(i++) + "]", out);
  } else {
    out += path;
    out += " = ";
    out += v.is_object() ? "{}" : v.is_array() ? "[]" : leaf(v);
    out += '\n';
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::string out;
  flatten(report, "", out);
  return out;
}

std::string render(const Json& report, Format format) {
  if (format == Format::Json) return report.dump(2) + "\n";
  return render_text(report);
}

}  // namespace frontalkit::cli
