#include "polywythoff/finite_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <string>

#include "polywythoff/errors.hpp"

namespace polywythoff {

std::size_t default_closure_cap() {
  if (const char* env = std::getenv("POLYWYTHOFF_CAP")) {
    try {
      std::size_t v = std::stoull(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return 10'000'000;
}

FiniteGroup FiniteGroup::closure(std::span<const GroupElement> generators, std::size_t cap) {
  if (generators.empty()) throw InvalidArgument("closure: empty generator list");
  return generated_by(identity_like(generators.front()), generators, cap);
}

FiniteGroup FiniteGroup::generated_by(const GroupElement& identity, std::span<const GroupElement> generators,
                                      std::size_t cap) {
  for (const auto& g : generators)
    if (!same_kind(g, identity)) throw KindMismatch("closure: generators of mixed kind");

  FiniteGroup group;
  group.generators_.assign(generators.begin(), generators.end());
  const std::size_t ngen = generators.size();
  group.right_.assign(ngen, {});
  group.elements_.push_back(identity);
  group.index_.emplace(identity, 0);
  group.bfs_parent_.push_back(0);
  group.bfs_gen_.push_back(0);

  for (std::size_t cur = 0; cur < group.elements_.size(); ++cur) {
    for (std::size_t gi = 0; gi < ngen; ++gi) {
      GroupElement next = compose(group.elements_[cur], group.generators_[gi]);
      auto [it, inserted] = group.index_.emplace(std::move(next), static_cast<ElementIndex>(group.elements_.size()));
      if (inserted) {
        if (group.elements_.size() >= cap) throw CapExceeded(cap);
        group.elements_.push_back(it->first);
        group.bfs_parent_.push_back(static_cast<ElementIndex>(cur));
        group.bfs_gen_.push_back(static_cast<std::uint32_t>(gi));
      }
      group.right_[gi].push_back(it->second);
    }
  }

  group.left_.assign(ngen, std::vector<ElementIndex>(group.elements_.size()));
  for (std::size_t gi = 0; gi < ngen; ++gi)
    for (std::size_t i = 0; i < group.elements_.size(); ++i)
      group.left_[gi][i] = group.index_of(compose(group.generators_[gi], group.elements_[i]));

  std::vector<std::uint32_t> by_order(group.elements_.size());
  std::iota(by_order.begin(), by_order.end(), 0u);
  std::sort(by_order.begin(), by_order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return group.elements_[a] < group.elements_[b]; });
  group.order_rank_.resize(by_order.size());
  for (std::size_t pos = 0; pos < by_order.size(); ++pos) group.order_rank_[by_order[pos]] = static_cast<std::uint32_t>(pos);
  return group;
}

std::optional<ElementIndex> FiniteGroup::find(const GroupElement& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementIndex FiniteGroup::index_of(const GroupElement& g) const {
  auto idx = find(g);
  if (!idx) throw NotSubgroup("element " + to_string(g) + " is not in the group");
  return *idx;
}

ElementIndex FiniteGroup::multiply(ElementIndex a, ElementIndex b) const {
  return index_of(compose(elements_[a], elements_[b]));
}

ElementIndex FiniteGroup::inverse(ElementIndex a) const { return index_of(polywythoff::inverse(elements_[a])); }

std::vector<std::size_t> FiniteGroup::word_for(ElementIndex i) const {
  std::vector<std::size_t> word;
  while (i != 0) {
    word.push_back(bfs_gen_[i]);
    i = bfs_parent_[i];
  }
  std::reverse(word.begin(), word.end());
  return word;
}

namespace {

SubgroupMask bfs_mask(const FiniteGroup& parent, std::span<const ElementIndex> gen_elements,
                      const std::vector<std::optional<std::size_t>>& as_parent_gen) {
  SubgroupMask mask;
  mask.members.resize(parent.order());
  std::vector<ElementIndex> queue{0};
  mask.members.set(0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    ElementIndex cur = queue[head];
    for (std::size_t k = 0; k < gen_elements.size(); ++k) {
      ElementIndex next = as_parent_gen[k] ? parent.right_mul(cur, *as_parent_gen[k])
                                           : parent.multiply(cur, gen_elements[k]);
      if (!mask.members.test(next)) {
        mask.members.set(next);
        queue.push_back(next);
      }
    }
  }
  mask.order = queue.size();
  return mask;
}

}  // namespace

SubgroupMask subgroup_mask(const FiniteGroup& parent, std::span<const std::size_t> generator_indices) {
  std::vector<ElementIndex> elems;
  std::vector<std::optional<std::size_t>> as_gen;
  for (auto gi : generator_indices) {
    elems.push_back(parent.right_mul(0, gi));
    as_gen.emplace_back(gi);
  }
  return bfs_mask(parent, elems, as_gen);
}

SubgroupMask subgroup_mask_of(const FiniteGroup& parent, std::span<const ElementIndex> generators) {
  std::vector<std::optional<std::size_t>> as_gen(generators.size());
  for (std::size_t k = 0; k < generators.size(); ++k)
    for (std::size_t gi = 0; gi < parent.generators().size(); ++gi)
      if (parent.right_mul(0, gi) == generators[k]) {
        as_gen[k] = gi;
        break;
      }
  return bfs_mask(parent, generators, as_gen);
}

CosetPartition right_coset_partition(const FiniteGroup& parent, const SubgroupMask& h,
                                     std::span<const ElementIndex> h_generators) {
  constexpr std::uint32_t unset = ~0u;
  CosetPartition part;
  part.coset_of.assign(parent.order(), unset);

  // Left multiplication by a generator of H keeps us inside the right coset H g.
  std::vector<std::optional<std::size_t>> as_gen(h_generators.size());
  for (std::size_t k = 0; k < h_generators.size(); ++k)
    for (std::size_t gi = 0; gi < parent.generators().size(); ++gi)
      if (parent.right_mul(0, gi) == h_generators[k]) {
        as_gen[k] = gi;
        break;
      }

  const auto& rank = parent.order_rank();
  std::vector<ElementIndex> queue;
  for (ElementIndex start = 0; start < parent.order(); ++start) {
    if (part.coset_of[start] != unset) continue;
    auto id = static_cast<std::uint32_t>(part.representative.size());
    ElementIndex best = start;
    queue.assign(1, start);
    part.coset_of[start] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      ElementIndex cur = queue[head];
      if (rank[cur] < rank[best]) best = cur;
      for (std::size_t k = 0; k < h_generators.size(); ++k) {
        ElementIndex next = as_gen[k] ? parent.left_mul(cur, *as_gen[k]) : parent.multiply(h_generators[k], cur);
        if (part.coset_of[next] == unset) {
          part.coset_of[next] = id;
          queue.push_back(next);
        }
      }
    }
    if (queue.size() != h.order) throw NotSubgroup("coset size differs from subgroup order");
    part.representative.push_back(best);
  }
  return part;
}

FiniteGroup subgroup(const FiniteGroup& parent, std::span<const GroupElement> generators) {
  for (const auto& g : generators)
    if (!parent.contains(g)) throw NotSubgroup("generator " + to_string(g) + " is not in the parent group");
  return FiniteGroup::generated_by(parent.identity(), generators);
}

std::vector<GroupElement> right_cosets(const FiniteGroup& g, const FiniteGroup& h) {
  std::vector<ElementIndex> gens;
  for (const auto& x : h.generators()) {
    auto idx = g.find(x);
    if (!idx) throw NotSubgroup("right_cosets: H is not a subgroup of G");
    gens.push_back(*idx);
  }
  if (!g.contains(h.identity())) throw NotSubgroup("right_cosets: H is not a subgroup of G");
  SubgroupMask mask = subgroup_mask_of(g, gens);
  if (mask.order != h.order()) throw NotSubgroup("right_cosets: H is not a subgroup of G");
  CosetPartition part = right_coset_partition(g, mask, gens);
  std::vector<GroupElement> reps;
  for (auto r : part.representative) reps.push_back(g.element(r));
  std::sort(reps.begin(), reps.end());
  return reps;
}

FiniteGroup intersect(const FiniteGroup& h, const FiniteGroup& k) {
  if (!same_kind(h.identity(), k.identity())) throw KindMismatch("intersect: incompatible element kinds");
  const FiniteGroup& small = h.order() <= k.order() ? h : k;
  const FiniteGroup& large = h.order() <= k.order() ? k : h;
  std::vector<GroupElement> common;
  for (const auto& x : small.elements())
    if (large.contains(x)) common.push_back(x);
  std::sort(common.begin(), common.end());

  // Greedy generating set, scanning in the element order.
  std::vector<GroupElement> gens;
  FiniteGroup current = FiniteGroup::generated_by(small.identity(), gens);
  for (const auto& x : common) {
    if (current.contains(x)) continue;
    gens.push_back(x);
    current = FiniteGroup::generated_by(small.identity(), gens);
    if (current.order() == common.size()) break;
  }
  return current;
}

std::optional<std::uint64_t> element_order(const GroupElement& g, std::uint64_t cap) {
  GroupElement x = g;
  for (std::uint64_t m = 1; m <= cap; ++m) {
    if (is_identity(x)) return m;
    x = compose(x, g);
  }
  return std::nullopt;
}

}  // namespace polywythoff
