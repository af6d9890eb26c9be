#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "sphertrans/io.hpp"
#include "support.hpp"

using namespace sphertrans;
using namespace testing;

namespace {

std::string field_of(std::string_view text) {
  try {
    parse_tuple_document(text);
  } catch (const FormatError& e) {
    return e.field();
  }
  return "<none>";
}

bool bit_equal(const OperatorTuple& a, const OperatorTuple& b) {
  if (a.size() != b.size() || a.dim() != b.dim()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    for (Index i = 0; i < a.dim(); ++i)
      for (Index j = 0; j < a.dim(); ++j) {
        const Complex x = a[k](i, j), y = b[k](i, j);
        if (std::memcmp(&x, &y, sizeof x) != 0) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("round trip is bit-exact") {
  auto r = rng(91);
  for (int k = 0; k < 20; ++k) {
    const TupleDocument doc{"sample " + std::to_string(k),
                            random_tuple(1 + k % 4, 1 + k % 5, r, static_cast<Ensemble>(k % 3))};
    const TupleDocument back = parse_tuple_document(serialize_tuple_document(doc));
    CHECK(back.name == doc.name);
    CHECK(bit_equal(back.tuple, doc.tuple));
  }
  ComplexMatrix m(1, 1);
  m(0, 0) = Complex(std::numeric_limits<double>::denorm_min(), -0.0);
  const TupleDocument tiny{"tiny", OperatorTuple({m})};
  CHECK(bit_equal(parse_tuple_document(serialize_tuple_document(tiny)).tuple, tiny.tuple));
}

TEST_CASE("file round trip") {
  const auto path = std::filesystem::temp_directory_path() / "sphertrans_io_test.json";
  const TupleDocument doc{"ex", rank_one_example()};
  write_tuple_document(path, doc);
  const TupleDocument back = read_tuple_document(path);
  CHECK(back.name == "ex");
  CHECK(bit_equal(back.tuple, doc.tuple));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_tuple_document(path), IoError);
}

TEST_CASE("parsing accepts the documented layout") {
  const TupleDocument doc = parse_tuple_document(
      R"({"d": 1, "n": 2, "matrices": [[[[1, 0], [0, 2]], [[0, -1], [3.5, 0]]]]})");
  CHECK(doc.name.empty());
  CHECK(doc.tuple[0](0, 0) == Complex(1, 0));
  CHECK(doc.tuple[0](0, 1) == Complex(0, 2));
  CHECK(doc.tuple[0](1, 0) == Complex(0, -1));
  CHECK(doc.tuple[0](1, 1) == Complex(3.5, 0));
}

TEST_CASE("malformed documents name the offending field") {
  CHECK_THROWS_AS(parse_tuple_document("{"), FormatError);
  CHECK(field_of("[]") == "document");
  CHECK(field_of("{") == "document");
  CHECK(field_of(R"({"n": 1, "matrices": [[[[1, 0]]]]})") == "d");
  CHECK(field_of(R"({"d": 1, "matrices": [[[[1, 0]]]]})") == "n");
  CHECK(field_of(R"({"d": 0, "n": 1, "matrices": []})") == "d");
  CHECK(field_of(R"({"d": 1, "n": 1.5, "matrices": [[[[1, 0]]]]})") == "n");
  CHECK(field_of(R"({"d": 1, "n": 1})") == "matrices");
  CHECK(field_of(R"({"d": 2, "n": 1, "matrices": [[[[1, 0]]]]})") == "matrices");
  CHECK(field_of(R"({"d": 1, "n": 2, "matrices": [[[[1, 0], [0, 0]], [[0, 0]]]]})") == "matrices[0][1]");
  CHECK(field_of(R"({"d": 1, "n": 1, "matrices": [[[[1, "x"]]]]})") == "matrices[0][0][0]");
  CHECK(field_of(R"({"d": 1, "n": 1, "matrices": [[[[1]]]]})") == "matrices[0][0][0]");
  CHECK(field_of(R"({"name": 3, "d": 1, "n": 1, "matrices": [[[[1, 0]]]]})") == "name");
}
