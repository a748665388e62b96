#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "conjulin/generate.hpp"
#include "conjulin/matrix_market.hpp"
#include "support/checks.hpp"

using namespace conjulin;

namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() / ("conjulin_mm_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("matrix market: 1x1 complex entry") {
  const fs::path dir = scratch("c1");
  write_text(dir / "m.mtx",
             "%%MatrixMarket matrix array complex general\n1 1\n2.0 -1.0\n");
  const ComplexMatrix m = read_complex_matrix((dir / "m.mtx").string());
  REQUIRE(m.rows() == 1);
  CHECK(m(0, 0) == Complex(2.0, -1.0));
}

TEST_CASE("matrix market: 2x2 real identity") {
  const fs::path dir = scratch("r2");
  write_text(dir / "i.mtx",
             "%%MatrixMarket matrix array real general\n2 2\n1\n0\n0\n1\n");
  const RealMatrix m = read_real_matrix((dir / "i.mtx").string());
  CHECK(checks::frob_diff(m, RealMatrix::identity(2)) == 0.0);
}

TEST_CASE("matrix market: column-major entry order") {
  const fs::path dir = scratch("order");
  write_text(dir / "m.mtx",
             "%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n4\n");
  const RealMatrix m = read_real_matrix((dir / "m.mtx").string());
  CHECK(m(0, 0) == 1.0);
  CHECK(m(1, 0) == 2.0);
  CHECK(m(0, 1) == 3.0);
  CHECK(m(1, 1) == 4.0);
}

TEST_CASE("matrix market: write-parse round trip is exact and stable") {
  const fs::path dir = scratch("roundtrip");
  Rng rng(31000);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 1 + rng.next_u64() % 6;
    const std::size_t cols = 1 + rng.next_u64() % 6;
    const ComplexMatrix m = random_complex_matrix(rows, cols, rng);

    const std::string p1 = (dir / "a.mtx").string();
    const std::string p2 = (dir / "b.mtx").string();
    write_matrix_market(p1, m);
    const ComplexMatrix parsed = read_complex_matrix(p1);
    CHECK(checks::frob_diff(parsed, m) == 0.0);  // bit-exact through %.17g
    write_matrix_market(p2, parsed);
    CHECK(slurp(p1) == slurp(p2));
  }
}

TEST_CASE("matrix market: real files promote to complex on demand") {
  const fs::path dir = scratch("promote");
  const RealMatrix m(2, 1, {1.5, -2.5});
  write_matrix_market((dir / "m.mtx").string(), m);
  const ComplexMatrix c = read_complex_matrix((dir / "m.mtx").string());
  CHECK(c(0, 0) == Complex(1.5, 0.0));
  CHECK(c(1, 0) == Complex(-2.5, 0.0));

  CHECK_THROWS_AS(read_real_matrix((dir / "missing.mtx").string()), ParseError);
}

TEST_CASE("matrix market: malformed inputs carry line information") {
  const fs::path dir = scratch("errors");

  write_text(dir / "badheader.mtx", "%%MatrixMarket matrix coordinate real general\n");
  CHECK_THROWS_AS(read_matrix_market((dir / "badheader.mtx").string()), ParseError);

  write_text(dir / "badnum.mtx",
             "%%MatrixMarket matrix array real general\n1 1\nnot_a_number\n");
  try {
    read_matrix_market((dir / "badnum.mtx").string());
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find(":3:") != std::string::npos);
  }

  write_text(dir / "short.mtx", "%%MatrixMarket matrix array real general\n2 2\n1\n2\n");
  CHECK_THROWS_AS(read_matrix_market((dir / "short.mtx").string()), DimensionMismatch);

  write_text(dir / "inf.mtx", "%%MatrixMarket matrix array real general\n1 1\ninf\n");
  CHECK_THROWS_AS(read_matrix_market((dir / "inf.mtx").string()), ParseError);
  write_text(dir / "nan.mtx", "%%MatrixMarket matrix array real general\n1 1\nnan\n");
  CHECK_THROWS_AS(read_matrix_market((dir / "nan.mtx").string()), ParseError);

  write_text(dir / "cplx.mtx",
             "%%MatrixMarket matrix array complex general\n1 1\n1.0 2.0\n");
  CHECK_THROWS_AS(read_real_matrix((dir / "cplx.mtx").string()), ParseError);
}

TEST_CASE("matrix market: vector readers accept single columns") {
  const fs::path dir = scratch("vec");
  const ComplexVector v = {Complex(1, 2), Complex(3, -4)};
  write_matrix_market((dir / "v.mtx").string(), v);
  const ComplexVector parsed = read_complex_vector((dir / "v.mtx").string());
  CHECK(checks::vec_diff_norm(parsed, v) == 0.0);

  write_text(dir / "wide.mtx",
             "%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n4\n");
  CHECK_THROWS_AS(read_real_vector((dir / "wide.mtx").string()), ParseError);
}

TEST_CASE("matrix market: comment lines after the header are tolerated") {
  const fs::path dir = scratch("comments");
  write_text(dir / "m.mtx",
             "%%MatrixMarket matrix array real general\n% generated elsewhere\n"
             "1 1\n42\n");
  const RealMatrix m = read_real_matrix((dir / "m.mtx").string());
  CHECK(m(0, 0) == 42.0);
}
