#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polywythoff/element.hpp"
#include "polywythoff/finite_group.hpp"

namespace polywythoff {

/// Branch label of a Coxeter-style diagram: an integer order >= 1 or infinity.
class Label {
 public:
  constexpr Label() = default;
  constexpr explicit Label(std::uint64_t value) : value_(value) {}
  static constexpr Label infinity() { return Label(kInfinity); }

  constexpr bool is_infinite() const { return value_ == kInfinity; }
  constexpr std::uint64_t value() const { return value_; }
  std::string to_string() const;
  /// "inf" or a positive integer.
  static Label parse(std::string_view text);

  friend constexpr bool operator==(Label, Label) = default;

 private:
  static constexpr std::uint64_t kInfinity = ~std::uint64_t{0};
  std::uint64_t value_ = 2;
};

/// Tail-triangle diagram on generators alpha_0..alpha_{n-1}, beta_{n-1}.
///
/// Generator index i < n is alpha_i; index n is beta. The tail is the path
/// alpha_0 - ... - alpha_{n-2}; the triangle joins alpha_{n-2}, alpha_{n-1}
/// and beta with labels p (alpha_{n-2} alpha_{n-1}), q (alpha_{n-2} beta) and
/// k (alpha_{n-1} beta). For n = 1 only k is meaningful.
struct TailTriangleDiagram {
  std::size_t n = 1;
  std::vector<Label> tail;  // p_1..p_{n-2}; tail[i-1] labels alpha_{i-1} alpha_i
  Label p{2}, q{2}, k{2};

  /// Order label of generator pair (i, j); 1 on the diagonal, 2 for non-adjacent pairs.
  Label label(std::size_t i, std::size_t j) const;
  /// Whether the pair is forced to commute by the diagram shape.
  bool must_commute(std::size_t i, std::size_t j) const;
  std::size_t generator_count() const { return n + 1; }

  /// Throws InvalidArgument when labels are malformed (< 2) or the tail length is wrong.
  void validate() const;

  /// "tail=[p1,...] triangle=(p,q,k)" (n >= 2).
  std::string to_spec() const;
  static TailTriangleDiagram parse_spec(std::string_view text);

  friend bool operator==(const TailTriangleDiagram&, const TailTriangleDiagram&) = default;
};

/// Bitmask over generator indices; bit n is beta.
using GeneratorSet = std::uint32_t;

/// A finite group with generators arranged as in a tail-triangle diagram, whose
/// pairwise orders were measured and recorded as the diagram.
class TailTriangleGroup {
 public:
  const TailTriangleDiagram& diagram() const { return diagram_; }
  std::size_t n() const { return diagram_.n; }
  const FiniteGroup& group() const { return group_; }
  std::size_t order() const { return group_.order(); }
  /// alpha_0..alpha_{n-1}, beta.
  const std::vector<GroupElement>& generators() const { return group_.generators(); }
  std::size_t beta_index() const { return diagram_.n; }

  /// Subgroup generated by a generator subset; all 2^(n+1) are precomputed.
  const SubgroupMask& generated(GeneratorSet set) const { return subsets_[set]; }
  GeneratorSet all_generators() const { return (GeneratorSet{1} << (n() + 1)) - 1; }

  /// Face subgroups of the Wythoff construction.
  GeneratorSet gamma(std::size_t j) const;  // 0 <= j <= n-1
  GeneratorSet facet_p() const;             // alpha_0..alpha_{n-1}
  GeneratorSet facet_q() const;             // alpha_0..alpha_{n-2}, beta
  GeneratorSet gamma_plus(int i) const;     // alpha_{i+1}..alpha_{n-1}, beta; -1 <= i <= n-2

  /// Generator indices of a set, ascending.
  std::vector<std::size_t> members(GeneratorSet set) const;
  std::vector<ElementIndex> member_elements(GeneratorSet set) const;

 private:
  friend TailTriangleGroup verify_tail_triangle(std::vector<GroupElement>, GroupElement, std::size_t);
  TailTriangleGroup(TailTriangleDiagram d, FiniteGroup g);

  TailTriangleDiagram diagram_;
  FiniteGroup group_;
  std::vector<SubgroupMask> subsets_;
};

/// Measures all pair orders, checks involutions and the commutations the
/// diagram shape requires, and records the measured labels.
/// Throws NotInvolution / CommutationViolation / CapExceeded.
TailTriangleGroup verify_tail_triangle(std::vector<GroupElement> alphas, GroupElement beta,
                                       std::size_t cap = default_closure_cap());

/// Same generators in a different tail-triangle arrangement of an n = 3 star
/// diagram (k = 2): ringing 1 keeps the order, 2 swaps alpha_0 and alpha_2,
/// 3 moves beta to the tail (beta, alpha_1, alpha_2 | alpha_0).
TailTriangleGroup reorder_star(const TailTriangleGroup& g, int ringing);

struct IntersectionWitness {
  GeneratorSet first = 0;
  GeneratorSet second = 0;
  GroupElement element;  // in <I> ∩ <J> but not in <I ∩ J>
};

struct IntersectionReport {
  bool passed = false;
  /// Reduced check only: a precondition subgroup is not a C-group.
  bool precondition_failed = false;
  std::size_t conditions_checked = 0;
  std::string detail;
  std::optional<IntersectionWitness> witness;
};

/// <I> ∩ <J> = <I ∩ J> for every ordered pair of generator subsets.
IntersectionReport check_intersection_full(const TailTriangleGroup& g);

/// Reduced criterion: after checking that the two facet groups are string
/// C-groups and (recursively) that the vertex-stabilizer group is a
/// tail-triangle C-group, checks only the 2n-1 intersections
///   P ∩ Q = <alpha_0..alpha_{n-2}>,
///   Gamma_i^+ ∩ P = <alpha_{i+1}..alpha_{n-1}>,
///   Gamma_i^+ ∩ Q = <alpha_{i+1}..alpha_{n-2}, beta>,  0 <= i <= n-2.
IntersectionReport check_intersection_reduced(const TailTriangleGroup& g);

/// n = 3 shortcut: only the three mutual intersections of the 3-generator
/// subgroups (plus their C-group preconditions). Validated against the full
/// check in the tests rather than assumed.
IntersectionReport check_intersection_n3_shortcut(const TailTriangleGroup& g);

/// All distinguished subgroups <J> pairwise distinct.
bool distinguished_subgroups_distinct(const TailTriangleGroup& g);

struct StringCGroupReport {
  bool passed = false;
  std::string detail;
};

/// String commutation and intersection condition for an ordered involution list.
StringCGroupReport is_string_c_group(std::span<const GroupElement> generators,
                                     std::size_t cap = default_closure_cap());
/// Same, for a subset of a tail-triangle group's generators in the given order.
StringCGroupReport is_string_c_group(const TailTriangleGroup& g, std::span<const std::size_t> ordered);

/// Orders of consecutive generator products.
std::vector<Label> schlafli_type(std::span<const GroupElement> generators);
std::string format_schlafli(std::span<const Label> labels);

/// Whether the assignment source_gens[i] -> target_gens[i] extends to a group
/// homomorphism from the group generated by source_gens (given as `source`,
/// whose generators must be exactly source_gens). When it does, `image_order`
/// receives the order of the image.
bool extends_to_homomorphism(const FiniteGroup& source, std::span<const GroupElement> target_gens,
                             std::size_t* image_order = nullptr);

/// Images of every source element under that homomorphism (indexed like
/// source.elements()), or nullopt when the assignment does not extend.
std::optional<std::vector<GroupElement>> homomorphism_images(const FiniteGroup& source,
                                                             std::span<const GroupElement> target_gens);

}  // namespace polywythoff
