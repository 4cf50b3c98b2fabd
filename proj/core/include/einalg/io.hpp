#ifndef EINALG_IO_HPP
#define EINALG_IO_HPP

#include <string>

#include "einalg/report.hpp"
#include "einalg/rol.hpp"
#include "einalg/tensor.hpp"

namespace einalg {

/// Parses the tensor interchange format: an object with "row_modes" and
/// "col_modes" (arrays of positive integers), "real" (flat array in rsh
/// column-major order) and optional "imag" of the same length. Length
/// mismatches and non-finite values are rejected with ParseError /
/// InvalidValue.
DenseTensor tensor_from_json_text(const std::string& text);
DenseTensor read_tensor(const std::string& path);

/// Serializes a tensor to the interchange format. Floating-point values are
/// printed with 17 significant digits; "imag" is omitted when every
/// imaginary part is exactly zero. Output bytes are deterministic.
std::string tensor_to_json_text(const DenseTensor& t);
void write_tensor(const std::string& path, const DenseTensor& t);

/// 17-significant-digit rendering used for all floating-point output.
std::string format_double(double v);

std::string check_report_to_json(const CheckReport& r, int indent = 0);
std::string catalog_summary_to_json(const CatalogSummary& s);

/// FNV-1a 64-bit checksum of a byte string, rendered as 16 hex digits.
std::string fnv1a64_hex(const std::string& bytes);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace einalg

#endif  // EINALG_IO_HPP
