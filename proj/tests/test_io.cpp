#include <doctest.h>

#include <sstream>

#include "rectihull/io.hpp"
#include "rectihull/measure.hpp"
#include "rectihull/serialize.hpp"

using namespace rectihull;

TEST_CASE("off: write/read round trip preserves geometry exactly") {
  for (const char* name : {"tetrahedron", "cube", "icosahedron"}) {
    CAPTURE(name);
    Polyhedron p = canonicalize(seed_polyhedron(name));
    std::stringstream ss;
    write_off(ss, p);
    Polyhedron q = read_off(ss);
    REQUIRE(q.vertices.size() == p.vertices.size());
    REQUIRE(q.faces == p.faces);
    for (size_t i = 0; i < p.vertices.size(); ++i) {
      CHECK(q.vertices[i].x == p.vertices[i].x);
      CHECK(q.vertices[i].y == p.vertices[i].y);
      CHECK(q.vertices[i].z == p.vertices[i].z);
    }
  }
}

TEST_CASE("off: canonical rewrite is byte-stable") {
  Polyhedron p = seed_polyhedron("dodecahedron");
  std::stringstream first;
  write_off(first, canonicalize(p));
  std::stringstream second;
  write_off(second, canonicalize(read_off(first)));
  CHECK(first.str() == second.str());
}

TEST_CASE("off: canonicalize is invariant under vertex permutation") {
  Polyhedron p = seed_polyhedron("octahedron");
  Polyhedron shuffled;
  std::vector<int> perm = {3, 1, 4, 0, 5, 2};
  shuffled.vertices.resize(6);
  for (int i = 0; i < 6; ++i) shuffled.vertices[perm[i]] = p.vertices[i];
  for (const auto& face : p.faces) {
    std::vector<int> f;
    for (int i : face) f.push_back(perm[i]);
    shuffled.faces.push_back(f);
  }
  std::stringstream a, b;
  write_off(a, canonicalize(p));
  write_off(b, canonicalize(shuffled));
  CHECK(a.str() == b.str());
}

TEST_CASE("off: header and counts line") {
  Polyhedron cube = seed_polyhedron("cube");
  std::stringstream ss;
  write_off(ss, cube);
  std::string line;
  std::getline(ss, line);
  CHECK(line == "OFF");
  std::getline(ss, line);
  CHECK(line == "8 6 12");
}

TEST_CASE("off: parse errors") {
  std::stringstream no_magic("8 6 12\n");
  CHECK_THROWS_AS(read_off(no_magic), OffParseError);
  std::stringstream truncated("OFF\n4 4 6\n0 0 0\n");
  CHECK_THROWS_AS(read_off(truncated), OffParseError);
  std::stringstream bad_index("OFF\n4 1 0\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n3 0 1 9\n");
  CHECK_THROWS_AS(read_off(bad_index), OffParseError);
}

TEST_CASE("off: comments and counts on the header line are accepted") {
  std::stringstream ss(
      "# a comment\nOFF 4 4 6\n# vertices\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n"
      "3 0 2 1\n3 0 1 3\n3 1 2 3\n3 0 3 2\n");
  Polyhedron p = read_off(ss);
  CHECK(p.fvector() == FVector{4, 6, 4});
  CHECK(volume(p) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("obj export uses 1-based indices") {
  Polyhedron tet = canonicalize(seed_polyhedron("tetrahedron"));
  std::stringstream ss;
  write_obj(ss, tet);
  std::string text = ss.str();
  CHECK(text.find("v ") == 0);
  CHECK(text.find("f 1 ") != std::string::npos);
  std::string line;
  while (std::getline(ss, line))
    if (line.rfind("f ", 0) == 0)
      CHECK(line.find(" 0") == std::string::npos);  // no 0 index in faces
}

TEST_CASE("json serialization has the documented stable fields") {
  nlohmann::json j = measure(seed_polyhedron("cube"));
  for (const char* key : {"fvector", "volume", "surface_area", "centroid",
                          "edge_min", "edge_mean", "edge_max", "face_areas"})
    CHECK(j.contains(key));

  nlohmann::json seq = iterate(seed_polyhedron("tetrahedron"), 1);
  CHECK(seq.contains("purity_length"));
  for (const char* key : {"k", "fvector", "volume", "surface_area", "edge_min",
                          "edge_max", "semiregular", "vertex_config"})
    CHECK(seq["steps"][0].contains(key));

  nlohmann::json probe = probe_conjecture3(seed_polyhedron("tetrahedron"));
  for (const char* key : {"probe", "lambda", "residual", "verdict", "volumes"})
    CHECK(probe.contains(key));
}
