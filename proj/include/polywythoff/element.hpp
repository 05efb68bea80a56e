#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace polywythoff {

/// Permutation of {1..N}, stored 0-based. Permutations act on the right:
/// point^(a*b) = (point^a)^b.
class Perm {
 public:
  Perm() = default;
  /// images[i] is the (0-based) image of point i; must be a bijection.
  explicit Perm(std::vector<std::uint32_t> images);

  static Perm identity(std::size_t degree);
  /// Builds a permutation of the given degree from 1-based disjoint cycles.
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const { return images_.size(); }
  /// Image of a 0-based point.
  std::uint32_t operator[](std::size_t point) const { return images_[point]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  /// Canonical disjoint-cycle notation, 1-based, e.g. "(5,10)(6,9)"; "()" for identity.
  std::string to_cycle_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

Perm operator*(const Perm& a, const Perm& b);

/// Square invertible matrix over Z_p, row-major. Group product is the matrix product.
class MatModP {
 public:
  MatModP() = default;
  MatModP(std::uint32_t p, std::size_t dim, std::vector<std::uint32_t> entries);
  /// Reduces arbitrary integers mod p.
  static MatModP from_integers(std::uint32_t p, std::size_t dim, const std::vector<long long>& entries);
  static MatModP identity(std::uint32_t p, std::size_t dim);

  std::uint32_t modulus() const { return p_; }
  std::size_t dim() const { return dim_; }
  std::uint32_t at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  const std::vector<std::uint32_t>& entries() const { return entries_; }

  bool is_identity() const;
  std::uint32_t determinant() const;
  MatModP inverse() const;
  /// "mod p dim d [e00,e01,...]"
  std::string to_string() const;

  friend bool operator==(const MatModP&, const MatModP&) = default;
  friend auto operator<=>(const MatModP&, const MatModP&) = default;

 private:
  std::uint32_t p_ = 2;
  std::size_t dim_ = 0;
  std::vector<std::uint32_t> entries_;
};

MatModP operator*(const MatModP& a, const MatModP& b);

using GroupElement = std::variant<Perm, MatModP>;

/// Group product a*b. Throws KindMismatch on differing kind/degree/dim/modulus.
GroupElement compose(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& g);
bool is_identity(const GroupElement& g);
/// Identity element of the same kind and size as g.
GroupElement identity_like(const GroupElement& g);
bool same_kind(const GroupElement& a, const GroupElement& b);
/// g^e for e >= 0.
GroupElement power(const GroupElement& g, std::uint64_t e);

std::string to_string(const GroupElement& g);

/// Parses "(1,2)(3,4)" / "()" as a permutation of the given degree.
Perm parse_perm(std::string_view text, std::size_t degree);
/// Parses "mod p dim d [e,...]".
MatModP parse_matrix(std::string_view text);
/// Dispatches on syntax. A degree is required for permutations.
GroupElement parse_element(std::string_view text, std::size_t degree);

struct ElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept;
};

}  // namespace polywythoff
