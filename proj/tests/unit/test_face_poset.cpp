#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "polywythoff/errors.hpp"
#include "polywythoff/face_poset.hpp"

using namespace polywythoff;

namespace {

// Two m-gons sharing nothing, under one least and one greatest face.
FacePoset double_polygon(std::size_t m) {
  FacePoset p(2);
  auto lo = p.add_face(-1, "min");
  auto hi = p.add_face(2, "max");
  for (int copy = 0; copy < 2; ++copy) {
    std::vector<FaceId> v, e;
    for (std::size_t i = 0; i < m; ++i) v.push_back(p.add_face(0, "F"));
    for (std::size_t i = 0; i < m; ++i) e.push_back(p.add_face(1, "F"));
    for (std::size_t i = 0; i < m; ++i) {
      p.add_cover(lo, v[i]);
      p.add_cover(v[i], e[i]);
      p.add_cover(v[(i + 1) % m], e[i]);
      p.add_cover(e[i], hi);
    }
  }
  return p;
}

}  // namespace

TEST_CASE("polygon oracle passes the axioms") {
  for (std::size_t m = 2; m <= 7; ++m) {
    auto p = oracle::polygon(m);
    CHECK(p.f_vector() == std::vector<std::size_t>{m, m});
    CHECK(verify_ranked(p).passed);
    CHECK(verify_diamond(p).passed);
    CHECK(verify_strong_connectivity(p).passed);
    CHECK(enumerate_flags(p).flags.size() == 2 * m);
    CHECK(oracle::automorphism_count(p) == 2 * m);
  }
}

TEST_CASE("flags and adjacency") {
  auto cube = oracle::cube(3);
  CHECK(cube.format_f_vector() == "(8, 12, 6)");
  auto fs = enumerate_flags(cube);
  CHECK(fs.flags.size() == 48);
  CHECK(fs.flags.size() == oracle::flags(cube).size());
  for (std::uint32_t f = 0; f < fs.flags.size(); ++f)
    for (std::size_t j = 0; j < 3; ++j) {
      REQUIRE(fs.adjacent[f][j]);
      auto g = *fs.adjacent[f][j];
      CHECK(g != f);
      CHECK(fs.adjacent[g][j] == f);
      for (std::size_t i = 0; i < 3; ++i) CHECK((fs.flags[f][i] == fs.flags[g][i]) == (i != j));
    }
  CHECK(fs.find(fs.flags[5]) == 5u);
}

TEST_CASE("axiom failures are detected") {
  auto two = double_polygon(6);
  CHECK(verify_ranked(two).passed);
  CHECK(verify_diamond(two).passed);
  auto c = verify_strong_connectivity(two);
  CHECK_FALSE(c.passed);
  CHECK_FALSE(c.detail.empty());

  // A polygon with an edge that has only one vertex.
  FacePoset broken(2);
  auto lo = broken.add_face(-1, "min");
  auto hi = broken.add_face(2, "max");
  auto v0 = broken.add_face(0, "F"), v1 = broken.add_face(0, "F");
  auto e0 = broken.add_face(1, "F"), e1 = broken.add_face(1, "F");
  for (auto v : {v0, v1}) broken.add_cover(lo, v);
  for (auto e : {e0, e1}) broken.add_cover(e, hi);
  broken.add_cover(v0, e0);
  broken.add_cover(v1, e0);
  broken.add_cover(v0, e1);
  CHECK_FALSE(verify_diamond(broken).passed);
  auto fs = enumerate_flags(broken);
  bool missing = false;
  for (const auto& adj : fs.adjacent)
    for (const auto& a : adj) missing |= !a;
  CHECK(missing);

  FacePoset two_tops(1);
  two_tops.add_face(-1, "min");
  two_tops.add_face(1, "max");
  two_tops.add_face(1, "max");
  CHECK_FALSE(verify_ranked(two_tops).passed);
  CHECK_THROWS_AS(two_tops.top(), InvalidArgument);
}

TEST_CASE("sections and order") {
  auto cube = oracle::cube(3);
  auto v = cube.rank(0).front();
  auto fig = section(cube, v, cube.top());
  CHECK(fig.top_rank() == 2);
  CHECK(fig.f_vector() == std::vector<std::size_t>{3, 3});
  CHECK(oracle::isomorphic(fig, oracle::polygon(3)));
  CHECK(cube.less_equal(cube.bottom(), cube.top()));
  CHECK(cube.less_equal(v, v));
  CHECK_FALSE(cube.less_equal(cube.top(), v));
  auto polys = two_sections(cube);
  CHECK(polys.size() == 8);
  for (const auto& s : polys) {
    CHECK(s.size == 3);
    CHECK(s.is_single_cycle);
  }
}

TEST_CASE("isomorphism") {
  CHECK(poset_isomorphic(oracle::cube(3), oracle::cube(3)));
  CHECK_FALSE(poset_isomorphic(oracle::cube(3), oracle::cross_polytope(3)));
  CHECK_FALSE(poset_isomorphic(oracle::polygon(5), oracle::polygon(6)));
  auto map = poset_isomorphism(oracle::cross_polytope(4), oracle::cross_polytope(4));
  REQUIRE(map);
  CHECK(map->size() == oracle::cross_polytope(4).size());
  CHECK(poset_isomorphic(double_polygon(4), double_polygon(4)) == oracle::isomorphic(double_polygon(4), double_polygon(4)));
}

TEST_CASE("hasse export") {
  std::ostringstream out;
  auto p = oracle::polygon(3);
  write_hasse(out, p);
  auto text = out.str();
  std::size_t faces = 0, covers = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (line.starts_with("face")) ++faces;
    if (line.starts_with("cover")) ++covers;
  }
  CHECK(faces == p.size());
  CHECK(covers == p.cover_count());
}
