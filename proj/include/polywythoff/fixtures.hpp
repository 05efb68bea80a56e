#pragma once

#include <span>
#include <string_view>

namespace polywythoff {

/// Fixture texts compiled into the library from the repository's fixtures/ directory.
struct EmbeddedFixture {
  std::string_view name;  // file name without extension
  std::string_view file;  // file name with extension
  std::string_view text;
};

std::span<const EmbeddedFixture> embedded_fixtures();

/// Looks up by name or file name; throws InvalidArgument when absent.
const EmbeddedFixture& embedded_fixture(std::string_view name);

}  // namespace polywythoff
