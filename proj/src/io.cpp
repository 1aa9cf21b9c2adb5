// Copyright 2026 The postdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "postdist/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "postdist/error.hpp"

namespace postdist {

std::string format_double(double x) {
  if (!std::isfinite(x)) {
    if (std::isnan(x)) return "nan";
    return x > 0 ? "inf" : "-inf";
  }
  // "-0" would be read back as the integer 0.
  if (x == 0.0 && std::signbit(x)) return "-0.0";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

std::string channel_to_json(const Channel& ch) {
  std::ostringstream out;
  out << "{\n  \"name\": " << nlohmann::json(ch.name()).dump()
      << ",\n  \"dim_in\": " << ch.dim_in()
      << ",\n  \"dim_out\": " << ch.dim_out() << ",\n  \"kraus\": [";
  for (std::size_t k = 0; k < ch.rank(); ++k) {
    const ComplexMatrix& m = ch.kraus()[k];
    out << (k == 0 ? "\n    [" : ",\n    [");
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      out << (i == 0 ? "\n      [" : ",\n      [");
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        if (j > 0) out << ", ";
        out << '[' << format_double(m(i, j).real()) << ", "
            << format_double(m(i, j).imag()) << ']';
      }
      out << ']';
    }
    out << "\n    ]";
  }
  out << "\n  ]\n}\n";
  return out.str();
}

namespace {

std::size_t read_dim(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer()) {
    throw ParseError(std::string("channel file: missing integer field '") + key + "'");
  }
  const auto v = doc[key].get<long long>();
  if (v < 1) throw ParseError(std::string("channel file: '") + key + "' must be >= 1");
  check_dimension(static_cast<std::size_t>(v));
  return static_cast<std::size_t>(v);
}

double read_number(const nlohmann::json& v) {
  if (!v.is_number()) throw ParseError("channel file: matrix entry is not a number");
  return v.get<double>();
}

}  // namespace

Channel channel_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("channel file: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("channel file: top level must be an object");
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("channel file: 'name' must be a string");
    name = doc["name"].get<std::string>();
  }
  const std::size_t dim_in = read_dim(doc, "dim_in");
  const std::size_t dim_out = read_dim(doc, "dim_out");
  if (!doc.contains("kraus") || !doc["kraus"].is_array() || doc["kraus"].empty()) {
    throw ParseError("channel file: 'kraus' must be a nonempty array");
  }
  std::vector<ComplexMatrix> kraus;
  for (const auto& mat : doc["kraus"]) {
    if (!mat.is_array() || mat.size() != dim_out) {
      throw ParseError("channel file: Kraus operator must have dim_out rows");
    }
    ComplexMatrix m(static_cast<Eigen::Index>(dim_out), static_cast<Eigen::Index>(dim_in));
    for (std::size_t i = 0; i < dim_out; ++i) {
      const auto& row = mat[i];
      if (!row.is_array() || row.size() != dim_in) {
        throw ParseError("channel file: Kraus row must have dim_in entries");
      }
      for (std::size_t j = 0; j < dim_in; ++j) {
        const auto& entry = row[j];
        if (!entry.is_array() || entry.size() != 2) {
          throw ParseError("channel file: entry must be a [re, im] pair");
        }
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            Complex(read_number(entry[0]), read_number(entry[1]));
      }
    }
    kraus.push_back(std::move(m));
  }
  try {
    return Channel(dim_in, dim_out, std::move(kraus), std::move(name));
  } catch (const InvalidInputError& e) {
    throw ParseError(std::string("channel file: ") + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

void write_channel_file(const std::filesystem::path& path, const Channel& ch) {
  write_text_file(path, channel_to_json(ch));
}

Channel read_channel_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open channel file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return channel_from_json(buf.str());
}

}  // namespace postdist
