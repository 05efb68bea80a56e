#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polywythoff/element.hpp"
#include "polywythoff/ttgroup.hpp"
#include "polywythoff/wythoff.hpp"

namespace polywythoff {

using Rational = boost::rational<long long>;

/// Parses "1,1,2,4" or "1/2,1,3"; every entry must be positive.
std::vector<Rational> parse_lengths(std::string_view text);
std::string format_lengths(const std::vector<Rational>& lengths);

struct CrystallographicVerdict {
  bool yes = false;
  std::string reason;
};

/// Labels must lie in {2,3,4,6,inf}; a triangle that is a full circuit must
/// carry no or two 4-branches and no or two 6-branches.
CrystallographicVerdict is_crystallographic(const TailTriangleDiagram& d);

/// 4 cos^2(pi/m) for m in {2,3,4,6,inf}: 0, 1, 2, 3, 4.
int four_cos_squared(Label m);

/// Rescaled root basis c_0..c_{n-1}, d_{n-1} with integral structure constants.
struct IntegralReflectionSystem {
  TailTriangleDiagram diagram;
  std::vector<Rational> squared_lengths;
  /// structure[i][j]: coefficient in g_i(c_j) = c_j + structure[i][j] c_i
  /// (the l and m constants; -2 on the diagonal).
  std::vector<std::vector<long long>> structure;
  /// Gram matrix of the rescaled basis.
  std::vector<std::vector<Rational>> gram;
  /// Integer matrices of r_0..r_{n-1}, s_{n-1} acting on coordinate columns.
  std::vector<std::vector<long long>> generators;

  std::size_t dim() const { return squared_lengths.size(); }
};

/// Throws InvalidArgument for non-crystallographic diagrams or bad lengths,
/// NonIntegralSystem(i, j) when a structure constant is not an integer.
IntegralReflectionSystem rescale(const TailTriangleDiagram& d, const std::vector<Rational>& squared_lengths);

/// Exact determinant of a rational matrix.
Rational determinant(std::vector<std::vector<Rational>> m);

/// Whether every generator satisfies M^T B M = B over the rationals.
bool preserves_form(const IntegralReflectionSystem& sys);

struct ModPGroupSpec {
  std::uint32_t p = 2;
  std::size_t n = 1;
  std::vector<MatModP> generators;  // r_0..r_{n-1}, s_{n-1}
  Rational discriminant;            // determinant of the rational Gram matrix
  /// Discriminant reduced mod p; empty when its denominator vanishes mod p.
  std::optional<std::uint32_t> discriminant_mod_p;
  /// Reduced Gram matrix, when all denominators are invertible mod p.
  std::optional<std::vector<std::vector<std::uint32_t>>> gram_mod_p;
  bool singular() const { return discriminant_mod_p && *discriminant_mod_p == 0; }
};

bool is_prime(std::uint64_t p);

/// Reduces the integral system mod p and re-verifies involutions. Throws
/// InvalidArgument when p is not prime.
ModPGroupSpec reduce_mod_p(const IntegralReflectionSystem& sys, std::uint32_t p);

/// Tail-triangle group of the reduced generators, with measured labels.
/// Throws NotCGroup (with a witness in the message) when the reduced
/// intersection check fails.
TailTriangleGroup build_tail_triangle_modp(const ModPGroupSpec& spec, std::size_t cap = default_closure_cap());

struct RingingBuild {
  int ringing = 1;
  TailTriangleGroup group;
  CosetPoset polytope;
  Classification classification;
};

struct RingingsReport {
  std::vector<RingingBuild> builds;
  /// isomorphic[a][b] for ringings a+1, b+1.
  std::vector<std::vector<bool>> isomorphic;
};

/// Builds the three tail-triangle readings of an n = 3 star diagram and
/// compares their polytopes pairwise.
RingingsReport three_ringings(const TailTriangleGroup& base);

struct LengthSearchRow {
  std::vector<Rational> lengths;
  std::size_t order = 0;
  bool c_group = false;
  std::string detail;
};

/// Tries every squared-length vector with first entry 1 and remaining
/// entries in {1/6, 1/4, 1/3, 1/2, 1, 2, 3, 4, 6}; reports each integral system
/// with the order of its reduction and whether that is a tail-triangle C-group.
std::vector<LengthSearchRow> search_lengths(const TailTriangleDiagram& d, std::uint32_t p,
                                            std::size_t cap = default_closure_cap());

}  // namespace polywythoff
