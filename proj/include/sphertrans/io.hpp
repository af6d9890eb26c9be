#pragma once
//
// TupleDocument: one operator tuple per JSON file.
//
//   {"name": "...", "d": 2, "n": 2,
//    "matrices": [ [[[re, im], [re, im]], [[re, im], [re, im]]], ... ]}
//
// Matrices are row-major grids of [re, im] pairs. Doubles are written in
// shortest round-trip form, so write-then-read is bit-exact.
//

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sphertrans/tuple.hpp"

namespace sphertrans {

struct TupleDocument {
  std::string name;
  OperatorTuple tuple;
};

/// Malformed or inconsistent document; `field()` is the offending path,
/// e.g. "matrices[1][0][2]".
class FormatError : public std::runtime_error {
 public:
  FormatError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

TupleDocument parse_tuple_document(std::string_view text);
std::string serialize_tuple_document(const TupleDocument& doc);

TupleDocument read_tuple_document(const std::filesystem::path& path);
void write_tuple_document(const std::filesystem::path& path, const TupleDocument& doc);

/// Writes `text` to `path`, or to stdout when path is empty or "-".
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace sphertrans
