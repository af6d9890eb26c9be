#include "sphertrans/io.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace sphertrans {

namespace {

using nlohmann::json;

std::size_t positive_count(const json& doc, const char* key) {
  if (!doc.contains(key)) throw FormatError(key, "missing");
  const json& v = doc.at(key);
  if (!v.is_number_integer() && !v.is_number_unsigned()) throw FormatError(key, "expected an integer");
  const auto value = v.get<long long>();
  if (value < 1) throw FormatError(key, "must be at least 1");
  return static_cast<std::size_t>(value);
}

std::string path_of(std::size_t k, std::size_t i = SIZE_MAX, std::size_t j = SIZE_MAX) {
  std::string s = "matrices[" + std::to_string(k) + "]";
  if (i != SIZE_MAX) s += "[" + std::to_string(i) + "]";
  if (j != SIZE_MAX) s += "[" + std::to_string(j) + "]";
  return s;
}

}  // namespace

TupleDocument parse_tuple_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw FormatError("document", std::string("invalid JSON (") + e.what() + ")");
  }
  if (!doc.is_object()) throw FormatError("document", "expected an object");

  std::string name;
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) throw FormatError("name", "expected a string");
    name = doc.at("name").get<std::string>();
  }
  const std::size_t d = positive_count(doc, "d");
  const std::size_t n = positive_count(doc, "n");

  if (!doc.contains("matrices")) throw FormatError("matrices", "missing");
  const json& mats = doc.at("matrices");
  if (!mats.is_array()) throw FormatError("matrices", "expected an array");
  if (mats.size() != d) {
    throw FormatError("matrices", "has " + std::to_string(mats.size()) + " entries but d = " + std::to_string(d));
  }

  std::vector<ComplexMatrix> coords;
  coords.reserve(d);
  for (std::size_t k = 0; k < d; ++k) {
    const json& rows = mats[k];
    if (!rows.is_array() || rows.size() != n) throw FormatError(path_of(k), "expected " + std::to_string(n) + " rows");
    ComplexMatrix m(static_cast<Index>(n), static_cast<Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
      const json& row = rows[i];
      if (!row.is_array() || row.size() != n) {
        throw FormatError(path_of(k, i), "expected " + std::to_string(n) + " entries");
      }
      for (std::size_t j = 0; j < n; ++j) {
        const json& e = row[j];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
          throw FormatError(path_of(k, i, j), "expected a [re, im] pair of numbers");
        }
        const double re = e[0].get<double>(), im = e[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im)) throw FormatError(path_of(k, i, j), "non-finite value");
        m(static_cast<Index>(i), static_cast<Index>(j)) = Complex(re, im);
      }
    }
    coords.push_back(std::move(m));
  }
  return {std::move(name), OperatorTuple(std::move(coords))};
}

std::string serialize_tuple_document(const TupleDocument& doc) {
  auto num = [](double x) { return json(x).dump(); };
  std::string out = "{\n  \"name\": " + json(doc.name).dump() + ",\n";
  out += "  \"d\": " + std::to_string(doc.tuple.size()) + ",\n";
  out += "  \"n\": " + std::to_string(doc.tuple.dim()) + ",\n";
  out += "  \"matrices\": [\n";
  for (std::size_t k = 0; k < doc.tuple.size(); ++k) {
    const ComplexMatrix& m = doc.tuple[k];
    out += "    [\n";
    for (Index i = 0; i < m.rows(); ++i) {
      out += "      [";
      for (Index j = 0; j < m.cols(); ++j) {
        out += "[" + num(m(i, j).real()) + ", " + num(m(i, j).imag()) + "]";
        if (j + 1 < m.cols()) out += ", ";
      }
      out += i + 1 < m.rows() ? "],\n" : "]\n";
    }
    out += k + 1 < doc.tuple.size() ? "    ],\n" : "    ]\n";
  }
  out += "  ]\n}\n";
  return out;
}

TupleDocument read_tuple_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_tuple_document(buf.str());
}

void write_tuple_document(const std::filesystem::path& path, const TupleDocument& doc) {
  write_text(path, serialize_tuple_document(doc));
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace sphertrans
