#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "polywythoff/element.hpp"

namespace polywythoff {

using ElementIndex = std::uint32_t;

/// Default closure cap (10^7), overridable through POLYWYTHOFF_CAP.
std::size_t default_closure_cap();

/// A finite group held as an explicit element list.
///
/// Elements are stored in breadth-first discovery order from the identity
/// (index 0), multiplying on the right by the generators. That order is
/// deterministic for a given generator list. Right- and left-multiplication
/// tables by the generators are computed alongside, so walking the Cayley
/// graph never needs hashing.
class FiniteGroup {
 public:
  /// Closure of a nonempty generator list of uniform kind.
  static FiniteGroup closure(std::span<const GroupElement> generators,
                             std::size_t cap = default_closure_cap());
  /// Closure that tolerates an empty generator list (yielding {identity}).
  static FiniteGroup generated_by(const GroupElement& identity, std::span<const GroupElement> generators,
                                  std::size_t cap = default_closure_cap());

  std::size_t order() const { return elements_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  const GroupElement& element(ElementIndex i) const { return elements_[i]; }
  const GroupElement& identity() const { return elements_.front(); }

  std::optional<ElementIndex> find(const GroupElement& g) const;
  bool contains(const GroupElement& g) const { return find(g).has_value(); }
  /// Index of an element known to be in the group; throws NotSubgroup otherwise.
  ElementIndex index_of(const GroupElement& g) const;

  /// Index of element(i) * generators()[gen].
  ElementIndex right_mul(ElementIndex i, std::size_t gen) const { return right_[gen][i]; }
  /// Index of generators()[gen] * element(i).
  ElementIndex left_mul(ElementIndex i, std::size_t gen) const { return left_[gen][i]; }
  ElementIndex multiply(ElementIndex a, ElementIndex b) const;
  ElementIndex inverse(ElementIndex a) const;

  /// Position of each element in the total order on elements
  /// (lexicographic on image arrays / matrix entries).
  const std::vector<std::uint32_t>& order_rank() const { return order_rank_; }

  /// Word in the generators (indices into generators()) evaluating to element i.
  std::vector<std::size_t> word_for(ElementIndex i) const;

 private:
  std::vector<GroupElement> generators_;
  std::vector<GroupElement> elements_;
  std::unordered_map<GroupElement, ElementIndex, ElementHash> index_;
  std::vector<std::vector<ElementIndex>> right_;
  std::vector<std::vector<ElementIndex>> left_;
  std::vector<std::uint32_t> order_rank_;
  // BFS tree: parent element and the generator that reached each element.
  std::vector<ElementIndex> bfs_parent_;
  std::vector<std::uint32_t> bfs_gen_;
};

/// A subgroup of a FiniteGroup, held as a membership mask over the parent's indices.
struct SubgroupMask {
  boost::dynamic_bitset<> members;
  std::size_t order = 0;
  bool contains(ElementIndex i) const { return members.test(i); }
};

/// Subgroup generated by the given parent generators (by generator index).
SubgroupMask subgroup_mask(const FiniteGroup& parent, std::span<const std::size_t> generator_indices);
/// Subgroup generated by arbitrary parent elements.
SubgroupMask subgroup_mask_of(const FiniteGroup& parent, std::span<const ElementIndex> generators);

/// Right-coset partition G = H g_1 ∪ ... ∪ H g_m.
struct CosetPartition {
  std::vector<std::uint32_t> coset_of;     // per element of G
  std::vector<ElementIndex> representative;  // canonical (order-minimal) element per coset
  std::size_t count() const { return representative.size(); }
};

/// Partition of parent into right cosets H g. The subgroup must be given by a
/// generating set of parent elements, used to walk each coset via left multiplication.
CosetPartition right_coset_partition(const FiniteGroup& parent, const SubgroupMask& h,
                                     std::span<const ElementIndex> h_generators);

/// Generated subgroup as a standalone group. Every generator must lie in parent.
FiniteGroup subgroup(const FiniteGroup& parent, std::span<const GroupElement> generators);

/// Canonical representatives of the right cosets of H in G, sorted by the element order.
/// Throws NotSubgroup unless H <= G.
std::vector<GroupElement> right_cosets(const FiniteGroup& g, const FiniteGroup& h);

/// Set intersection of two groups of the same element kind, as a group.
FiniteGroup intersect(const FiniteGroup& h, const FiniteGroup& k);

/// Least m >= 1 with g^m = 1, or nullopt when m > cap.
std::optional<std::uint64_t> element_order(const GroupElement& g, std::uint64_t cap = 1u << 20);

}  // namespace polywythoff
