// Vector input file: a JSON object with explicit width and encoding.
//
//   {"m": 4, "encoding": "uint",  "values": [5, 9, 3]}
//   {"m": 4, "encoding": "fixed", "scale": 0.25, "offset": -1.0,
//    "values": [0.5, -0.25, 1.75]}
//
// "m" is the value register width. "uint" values must already be m-bit
// integers; "fixed" values are reals quantized via (a - offset) / scale.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qls/loader.hpp"

namespace qls::tools {

// Malformed file: unreadable, bad JSON, missing field, wrong type. Maps to
// exit code 2, as opposed to semantic errors (exit 3).
class FileFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct VectorFile {
  enum class Encoding { Uint, Fixed };

  int value_qubits = 0;
  Encoding encoding = Encoding::Uint;
  double scale = 1.0;   // Fixed only
  double offset = 0.0;  // Fixed only
  std::vector<std::uint64_t> uint_values;
  std::vector<double> real_values;
};

// Throws FileFormatError on anything that is not a well-shaped file.
VectorFile read_vector_file(const std::string& path);

// Quantizes (if fixed), pads, and validates. Throws std::invalid_argument
// on semantic violations; reports quantization clamps if asked.
VectorSpec to_vector_spec(const VectorFile& file,
                          std::size_t* clamped_count = nullptr);

}  // namespace qls::tools
