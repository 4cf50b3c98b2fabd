#include "einalg/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace einalg {

namespace {

using nlohmann::json;

ModeList parse_modes(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw ParseError(std::string("tensor file needs an integer array \"") + key + "\"");
  }
  ModeList modes;
  for (const auto& v : j[key]) {
    if (!v.is_number_integer()) {
      throw ParseError(std::string("non-integer dimension in \"") + key + "\"");
    }
    modes.push_back(v.get<Index>());
  }
  return modes;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

DenseTensor tensor_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("tensor file must be a JSON object");
  EinsteinShape shape(parse_modes(j, "row_modes"), parse_modes(j, "col_modes"));
  if (!j.contains("real") || !j["real"].is_array()) {
    throw ParseError("tensor file needs a numeric array \"real\"");
  }
  const auto& re = j["real"];
  if (static_cast<Index>(re.size()) != shape.size()) {
    throw ParseError("\"real\" has length " + std::to_string(re.size()) +
                     ", expected " + std::to_string(shape.size()));
  }
  std::vector<Complex> buf(re.size());
  for (size_t k = 0; k < re.size(); ++k) {
    if (!re[k].is_number()) throw ParseError("non-numeric entry in \"real\"");
    buf[k] = Complex{re[k].get<double>(), 0.0};
  }
  if (j.contains("imag")) {
    const auto& im = j["imag"];
    if (!im.is_array() || im.size() != re.size()) {
      throw ParseError("\"imag\" must match the length of \"real\"");
    }
    for (size_t k = 0; k < im.size(); ++k) {
      if (!im[k].is_number()) throw ParseError("non-numeric entry in \"imag\"");
      buf[k] = Complex{buf[k].real(), im[k].get<double>()};
    }
  }
  return DenseTensor(std::move(shape), std::move(buf));  // rejects non-finite entries
}

DenseTensor read_tensor(const std::string& path) {
  try {
    return tensor_from_json_text(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string tensor_to_json_text(const DenseTensor& t) {
  std::ostringstream os;
  auto emit_modes = [&os](const ModeList& modes) {
    os << '[';
    for (size_t k = 0; k < modes.size(); ++k) {
      if (k) os << ',';
      os << modes[k];
    }
    os << ']';
  };
  os << "{\n  \"row_modes\": ";
  emit_modes(t.row_modes());
  os << ",\n  \"col_modes\": ";
  emit_modes(t.col_modes());
  os << ",\n  \"real\": [";
  for (Index k = 0; k < t.size(); ++k) {
    if (k) os << ',';
    os << format_double(t.flat(k).real());
  }
  os << ']';
  bool any_imag = false;
  for (Index k = 0; k < t.size() && !any_imag; ++k) any_imag = t.flat(k).imag() != 0.0;
  if (any_imag) {
    os << ",\n  \"imag\": [";
    for (Index k = 0; k < t.size(); ++k) {
      if (k) os << ',';
      os << format_double(t.flat(k).imag());
    }
    os << ']';
  }
  os << "\n}\n";
  return os.str();
}

void write_tensor(const std::string& path, const DenseTensor& t) {
  write_file(path, tensor_to_json_text(t));
}

std::string check_report_to_json(const CheckReport& r, int indent) {
  const std::string pad(static_cast<size_t>(indent), ' ');
  std::ostringstream os;
  os << pad << "{\"name\": " << json(r.name).dump() << ", \"residuals\": {";
  bool first = true;
  for (const auto& [k, v] : r.residuals) {
    if (!first) os << ", ";
    first = false;
    os << json(k).dump() << ": " << format_double(v);
  }
  os << "}, \"tolerance\": " << format_double(r.tolerance)
     << ", \"passed\": " << (r.passed ? "true" : "false")
     << ", \"marginal\": " << (r.marginal ? "true" : "false") << "}";
  return os.str();
}

std::string catalog_summary_to_json(const CatalogSummary& s) {
  std::ostringstream os;
  os << "{\n  \"seed\": " << s.seed << ",\n  \"instances_per_case\": " << s.instances_per_case
     << ",\n  \"tolerance\": " << format_double(s.tolerance) << ",\n  \"cases\": [\n";
  for (size_t k = 0; k < s.cases.size(); ++k) {
    const CaseSummary& c = s.cases[k];
    os << "    {\"case\": " << nlohmann::json(c.id).dump() << ", \"instances\": " << c.instances
       << ", \"max_residual\": " << format_double(c.max_residual)
       << ", \"failures\": " << c.failures << ", \"marginals\": " << c.marginals << "}"
       << (k + 1 < s.cases.size() ? ",\n" : "\n");
  }
  os << "  ],\n  \"passed\": " << (s.all_passed() ? "true" : "false") << "\n}\n";
  return os.str();
}

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << contents;
}

}  // namespace einalg
