#include "polywythoff/wythoff.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "polywythoff/errors.hpp"

namespace polywythoff {

CosetPoset build_coset_poset(const FiniteGroup& g, std::vector<CosetFamily> families, int top_rank) {
  CosetPoset out{FacePoset(top_rank), std::move(families), {}, {}, {}};
  FacePoset& poset = out.poset;
  const auto& order_rank = g.order_rank();

  for (const auto& fam : out.families) {
    std::vector<ElementIndex> gen_elems;
    for (auto gi : fam.gens) gen_elems.push_back(g.right_mul(0, gi));
    SubgroupMask mask = subgroup_mask(g, fam.gens);
    out.partitions.push_back(right_coset_partition(g, mask, gen_elems));
  }

  FaceId bottom = poset.add_face(-1, "min");
  out.coset_of_face.emplace_back(~std::size_t{0}, 0);
  out.face_of_coset.resize(out.families.size());
  for (int r = 0; r < top_rank; ++r)
    for (std::size_t f = 0; f < out.families.size(); ++f) {
      if (out.families[f].rank != r) continue;
      const auto& part = out.partitions[f];
      std::vector<std::uint32_t> cosets(part.count());
      std::iota(cosets.begin(), cosets.end(), 0u);
      std::sort(cosets.begin(), cosets.end(), [&](std::uint32_t a, std::uint32_t b) {
        return order_rank[part.representative[a]] < order_rank[part.representative[b]];
      });
      out.face_of_coset[f].resize(part.count());
      for (auto c : cosets) {
        out.face_of_coset[f][c] =
            poset.add_face(r, out.families[f].kind, to_string(g.element(part.representative[c])));
        out.coset_of_face.emplace_back(f, c);
      }
    }
  FaceId top = poset.add_face(top_rank, "max");
  out.coset_of_face.emplace_back(~std::size_t{0}, 0);

  for (std::size_t f = 0; f < out.families.size(); ++f) {
    if (out.families[f].rank == 0)
      for (auto id : out.face_of_coset[f]) poset.add_cover(bottom, id);
    if (out.families[f].rank == top_rank - 1)
      for (auto id : out.face_of_coset[f]) poset.add_cover(id, top);
  }
  // Consecutive-rank cosets meet exactly when some element lies in both.
  for (std::size_t lo = 0; lo < out.families.size(); ++lo)
    for (std::size_t hi = 0; hi < out.families.size(); ++hi) {
      if (out.families[hi].rank != out.families[lo].rank + 1) continue;
      std::vector<std::uint64_t> pairs;
      pairs.reserve(g.order());
      const auto& a = out.partitions[lo].coset_of;
      const auto& b = out.partitions[hi].coset_of;
      for (ElementIndex x = 0; x < g.order(); ++x) pairs.push_back(std::uint64_t{a[x]} << 32 | b[x]);
      std::sort(pairs.begin(), pairs.end());
      pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
      for (auto pr : pairs)
        poset.add_cover(out.face_of_coset[lo][pr >> 32], out.face_of_coset[hi][pr & 0xffffffffu]);
    }
  if (top_rank == 0) poset.add_cover(bottom, top);
  return out;
}

namespace {

std::vector<CosetFamily> wythoff_families(const TailTriangleGroup& g) {
  std::vector<CosetFamily> fams;
  const std::size_t n = g.n();
  for (std::size_t j = 0; j < n; ++j)
    fams.push_back({static_cast<int>(j), "G_" + std::to_string(j), g.members(g.gamma(j))});
  fams.push_back({static_cast<int>(n), "P", g.members(g.facet_p())});
  fams.push_back({static_cast<int>(n), "Q", g.members(g.facet_q())});
  return fams;
}

}  // namespace

CosetPoset build_polytope_unchecked(const TailTriangleGroup& g) {
  return build_coset_poset(g.group(), wythoff_families(g), static_cast<int>(g.n()) + 1);
}

CosetPoset build_polytope(const TailTriangleGroup& g) {
  auto check = check_intersection_reduced(g);
  if (!check.passed) throw NotCGroup("not a tail-triangle C-group: " + check.detail);
  return build_polytope_unchecked(g);
}

CosetPoset build_regular_polytope(const FiniteGroup& g) {
  const std::size_t m = g.generators().size();
  std::vector<CosetFamily> fams;
  for (std::size_t j = 0; j < m; ++j) {
    CosetFamily f{static_cast<int>(j), "G_" + std::to_string(j), {}};
    for (std::size_t i = 0; i < m; ++i)
      if (i != j) f.gens.push_back(i);
    fams.push_back(std::move(f));
  }
  return build_coset_poset(g, std::move(fams), static_cast<int>(m));
}

FlagOrbitReport flag_orbits(const CosetPoset& p, const FiniteGroup& g) {
  FlagOrbitReport rep;
  FlagSystem fs = enumerate_flags(p.poset);
  rep.flags = fs.flags.size();
  if (fs.flags.empty()) return rep;

  const std::size_t ngen = g.generators().size();
  // action[gen][face]: image of a proper face under right multiplication.
  std::vector<std::vector<FaceId>> action(ngen, std::vector<FaceId>(p.poset.size()));
  for (FaceId id = 0; id < p.poset.size(); ++id) {
    auto [fam, coset] = p.coset_of_face[id];
    for (std::size_t gi = 0; gi < ngen; ++gi) {
      if (fam == ~std::size_t{0}) {
        action[gi][id] = id;
        continue;
      }
      const auto& part = p.partitions[fam];
      ElementIndex moved = g.right_mul(part.representative[coset], gi);
      action[gi][id] = p.face_of_coset[fam][part.coset_of[moved]];
    }
  }

  std::vector<std::uint32_t> parent(fs.flags.size());
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<FaceId> image;
  for (std::uint32_t f = 0; f < fs.flags.size(); ++f)
    for (std::size_t gi = 0; gi < ngen; ++gi) {
      image = fs.flags[f];
      for (auto& face : image) face = action[gi][face];
      auto idx = fs.find(image);
      if (!idx) throw InvalidArgument("group action does not preserve flags");
      auto a = find(f), b = find(*idx);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<std::uint32_t, std::size_t> sizes;
  for (std::uint32_t f = 0; f < fs.flags.size(); ++f) ++sizes[find(f)];
  rep.orbits = sizes.size();
  rep.free_action = std::all_of(sizes.begin(), sizes.end(), [&](const auto& kv) { return kv.second == g.order(); });
  return rep;
}

std::string to_string(PolytopeClass c) { return c == PolytopeClass::Regular ? "Regular" : "TwoOrbit"; }

Classification classify(const TailTriangleGroup& g) {
  Classification c;
  std::vector<GroupElement> swapped = g.generators();
  std::swap(swapped[g.n() - 1], swapped[g.n()]);
  std::size_t image = 0;
  bool hom = extends_to_homomorphism(g.group(), swapped, &image);
  if (hom && image == g.order()) {
    c.kind = PolytopeClass::Regular;
    c.aut_order = 2 * g.order();
    auto p = facet_p_generators(g);
    std::vector<Label> labels = schlafli_type(p);
    const Label k = g.diagram().k;
    labels.push_back(k.is_infinite() ? k : Label(2 * k.value()));
    c.schlafli = format_schlafli(labels);
  } else {
    c.kind = PolytopeClass::TwoOrbit;
    c.aut_order = g.order();
  }
  return c;
}

FacePoset vertex_figure(const FacePoset& p, FaceId vertex) {
  if (p.face(vertex).rank != 0) throw InvalidArgument("vertex figure needs a face of rank 0");
  return section(p, vertex, p.top());
}

FacePoset facet_section(const FacePoset& p, FaceId facet) {
  if (p.face(facet).rank != p.top_rank() - 1) throw InvalidArgument("facet section needs a face of rank n");
  return section(p, p.bottom(), facet);
}

std::vector<GroupElement> facet_p_generators(const TailTriangleGroup& g) {
  const auto& s = g.generators();
  return {s.begin(), s.begin() + static_cast<std::ptrdiff_t>(g.n())};
}

std::vector<GroupElement> facet_q_generators(const TailTriangleGroup& g) {
  auto q = facet_p_generators(g);
  q.back() = g.generators()[g.n()];
  return q;
}

bool vertex_figure_matches(const TailTriangleGroup& g, const CosetPoset& p) {
  FacePoset vf = vertex_figure(p.poset, p.poset.rank(0).front());
  if (g.n() == 1) return vf.f_vector() == std::vector<std::size_t>{2};
  const auto& s = g.generators();
  std::vector<GroupElement> alphas(s.begin() + 1, s.begin() + static_cast<std::ptrdiff_t>(g.n()));
  TailTriangleGroup stab = verify_tail_triangle(alphas, s[g.n()]);
  CosetPoset expected = build_polytope(stab);
  return poset_isomorphic(vf, expected.poset);
}

bool facet_sections_match(const TailTriangleGroup& g, const CosetPoset& p) {
  auto pg = facet_p_generators(g);
  auto qg = facet_q_generators(g);
  CosetPoset pp = build_regular_polytope(FiniteGroup::closure(pg));
  CosetPoset qp = build_regular_polytope(FiniteGroup::closure(qg));
  // Facets of one kind are all equivalent under the group, so one of each suffices.
  for (const auto& [kind, model] : {std::pair<std::string, const CosetPoset*>{"P", &pp}, {"Q", &qp}}) {
    const int n = static_cast<int>(g.n());
    auto ids = p.poset.rank(n);
    auto it = std::find_if(ids.begin(), ids.end(), [&](FaceId id) { return p.poset.face(id).kind == kind; });
    if (it == ids.end()) return false;
    if (!poset_isomorphic(facet_section(p.poset, *it), model->poset)) return false;
  }
  return true;
}

std::map<std::size_t, std::size_t> section_histogram(const std::vector<PolygonSection>& sections) {
  std::map<std::size_t, std::size_t> h;
  for (const auto& s : sections) ++h[s.size];
  return h;
}

}  // namespace polywythoff
