#include "vector_file.hpp"

#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

namespace qls::tools {

namespace {

using nlohmann::json;

const json& require_field(const json& root, const char* name) {
  auto it = root.find(name);
  if (it == root.end()) {
    throw FileFormatError(std::string("missing field \"") + name + '"');
  }
  return *it;
}

double require_number(const json& root, const char* name) {
  const json& field = require_field(root, name);
  if (!field.is_number()) {
    throw FileFormatError(std::string("field \"") + name + "\" must be a number");
  }
  return field.get<double>();
}

}  // namespace

VectorFile read_vector_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw FileFormatError("cannot open " + path);
  }
  json root;
  try {
    root = json::parse(in);
  } catch (const json::parse_error& e) {
    throw FileFormatError(e.what());
  }
  if (!root.is_object()) {
    throw FileFormatError("top level must be an object");
  }

  VectorFile file;
  const json& m = require_field(root, "m");
  if (!m.is_number_integer()) {
    throw FileFormatError("field \"m\" must be an integer");
  }
  file.value_qubits = m.get<int>();

  const json& encoding = require_field(root, "encoding");
  if (!encoding.is_string()) {
    throw FileFormatError("field \"encoding\" must be a string");
  }
  const std::string name = encoding.get<std::string>();
  if (name == "uint") {
    file.encoding = VectorFile::Encoding::Uint;
  } else if (name == "fixed") {
    file.encoding = VectorFile::Encoding::Fixed;
  } else {
    throw FileFormatError("unknown encoding \"" + name + '"');
  }

  if (file.encoding == VectorFile::Encoding::Fixed) {
    file.scale = require_number(root, "scale");
    file.offset = require_number(root, "offset");
  }

  const json& values = require_field(root, "values");
  if (!values.is_array()) {
    throw FileFormatError("field \"values\" must be an array");
  }
  for (const json& v : values) {
    if (file.encoding == VectorFile::Encoding::Uint) {
      if (!v.is_number_integer()) {
        throw FileFormatError("uint values must be integers");
      }
      const std::int64_t raw = v.get<std::int64_t>();
      // Negative values fail validation later with a range diagnostic.
      file.uint_values.push_back(raw < 0 ? std::uint64_t(-1)
                                         : static_cast<std::uint64_t>(raw));
    } else {
      if (!v.is_number()) {
        throw FileFormatError("fixed values must be numbers");
      }
      file.real_values.push_back(v.get<double>());
    }
  }
  return file;
}

VectorSpec to_vector_spec(const VectorFile& file, std::size_t* clamped_count) {
  if (clamped_count) *clamped_count = 0;
  if (file.encoding == VectorFile::Encoding::Fixed) {
    QuantizedValues q =
        quantize(file.real_values, file.value_qubits, file.scale, file.offset);
    if (clamped_count) *clamped_count = q.clamped_count;
    return pad_to_pow2(q.values, file.value_qubits);
  }
  return pad_to_pow2(file.uint_values, file.value_qubits);
}

}  // namespace qls::tools
