#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polywythoff/element.hpp"

namespace polywythoff {

/// Element-kind parameters shared by all generators of a fixture.
struct ElementSpace {
  std::size_t degree = 0;     // permutations
  std::uint32_t modulus = 0;  // matrices when nonzero
  std::size_t dim = 0;

  bool is_matrix() const { return modulus != 0; }
  friend bool operator==(const ElementSpace&, const ElementSpace&) = default;
};

/// Text fixture for a tail-triangle generating set:
///
///   tail-triangle n=3 degree=12
///   alpha0 = (5,10)(6,9)(7,12)(8,11)
///   ...
///   beta = (5,8)(6,7)(9,12)(10,11)
///   expect order=96
///
/// Matrix fixtures use `mod=<p> dim=<d>` in the header and the matrix syntax
/// for elements. Blank lines and `#` comments are ignored.
struct TailTriangleFixture {
  std::size_t n = 1;
  ElementSpace space;
  std::vector<GroupElement> alphas;
  GroupElement beta;
  std::optional<std::uint64_t> expect_order;

  friend bool operator==(const TailTriangleFixture&, const TailTriangleFixture&) = default;
};

/// Ordered involutions of a string C-group, `string-c-group n=<n> degree=<N>`
/// followed by `rho0 = ...` through `rho<n-1> = ...`.
struct StringFixture {
  std::size_t n = 1;
  ElementSpace space;
  std::vector<GroupElement> rhos;
  std::optional<std::uint64_t> expect_order;

  friend bool operator==(const StringFixture&, const StringFixture&) = default;
};

TailTriangleFixture parse_tail_triangle_fixture(std::string_view text);
std::string print_fixture(const TailTriangleFixture& f);

StringFixture parse_string_fixture(std::string_view text);
std::string print_fixture(const StringFixture& f);

/// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace polywythoff
