#include <doctest.h>

#include <sstream>

#include "gaw/grid_io.hpp"

using namespace gaw;

TEST_CASE("P2 PGM parses with comments and quantizes into bins") {
  std::istringstream in("P2\n# a comment\n4 2\n255\n0 64 128 192\n255 255 0 10\n");
  const grid_io::Raster r = grid_io::read_pgm(in, "test");
  CHECK(r.width == 4);
  CHECK(r.height == 2);
  CHECK(r.maxval == 255);
  CHECK(r.pixels[0] == 0);
  CHECK(r.pixels[5] == 255);

  const auto g = grid_io::quantize(r, 4);
  CHECK(g.alphabet == 4);
  CHECK(g.cells == std::vector<int>{0, 1, 2, 3, 3, 3, 0, 0});
}

TEST_CASE("P5 PGM binary payload parses") {
  std::string data = "P5 2 2 255\n";
  data += '\x00';
  data += '\x7f';
  data += '\xff';
  data += '\x40';
  std::istringstream in(data, std::ios::binary);
  const grid_io::Raster r = grid_io::read_pgm(in, "test");
  CHECK(r.pixels == std::vector<std::uint16_t>{0, 127, 255, 64});
}

TEST_CASE("P5 with maxval above 255 reads two-byte big-endian samples") {
  std::string data = "P5 2 1 65535\n";
  data += '\x01'; // 0x0102 = 258
  data += '\x02';
  data += '\xff'; // 0xffff = 65535
  data += '\xff';
  std::istringstream in(data, std::ios::binary);
  const grid_io::Raster r = grid_io::read_pgm(in, "t");
  CHECK(r.maxval == 65535);
  CHECK(r.pixels == std::vector<std::uint16_t>{258, 65535});
  const auto g = grid_io::quantize(r, 2);
  CHECK(g.cells == std::vector<int>{0, 1});
}

TEST_CASE("PGM errors carry location detail") {
  std::istringstream truncated("P2\n2 2\n255\n1 2 3\n");
  CHECK_THROWS_WITH_AS(grid_io::read_pgm(truncated, "t"),
                       doctest::Contains("sample 3"), Error);
  std::istringstream bad_magic("P7\n1 1\n255\n0\n");
  CHECK_THROWS_AS(grid_io::read_pgm(bad_magic, "t"), Error);
  std::istringstream over_max("P2\n1 1\n255\n300\n");
  CHECK_THROWS_AS(grid_io::read_pgm(over_max, "t"), Error);
}

TEST_CASE("CSV grid parses with alphabet from the data") {
  std::istringstream in("0,1,2\n2,1,0\n");
  const auto g = grid_io::read_csv_grid(in, "t");
  CHECK(g.width == 3);
  CHECK(g.height == 2);
  CHECK(g.alphabet == 3);
}

TEST_CASE("CSV grid rejects ragged rows and junk") {
  std::istringstream ragged("0,1\n0\n");
  CHECK_THROWS_WITH_AS(grid_io::read_csv_grid(ragged, "t"),
                       doctest::Contains("row 2"), Error);
  std::istringstream junk("0,x\n");
  CHECK_THROWS_AS(grid_io::read_csv_grid(junk, "t"), Error);
  std::istringstream empty("");
  CHECK_THROWS_AS(grid_io::read_csv_grid(empty, "t"), Error);
}
