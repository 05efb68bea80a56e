#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polywythoff/face_poset.hpp"
#include "polywythoff/finite_group.hpp"
#include "polywythoff/ttgroup.hpp"

namespace polywythoff {

/// One family of faces: right cosets of the subgroup generated by `gens`
/// (indices into the group's generator list), placed at `rank`.
struct CosetFamily {
  int rank = 0;
  std::string kind;
  std::vector<std::size_t> gens;
};

/// A poset whose proper faces are right cosets, with enough bookkeeping to
/// let the group act on faces and flags.
struct CosetPoset {
  FacePoset poset;
  std::vector<CosetFamily> families;
  std::vector<CosetPartition> partitions;             // per family
  std::vector<std::vector<FaceId>> face_of_coset;     // per family, per coset id
  std::vector<std::pair<std::size_t, std::uint32_t>> coset_of_face;  // per proper face: (family, coset)
};

/// Faces are the cosets of each family plus least and greatest faces; covers
/// join faces of consecutive ranks whose cosets share an element.
CosetPoset build_coset_poset(const FiniteGroup& g, std::vector<CosetFamily> families, int top_rank);

/// Wythoff construction for a tail-triangle group. Runs the reduced
/// intersection check first and throws NotCGroup when it fails.
CosetPoset build_polytope(const TailTriangleGroup& g);
/// Same construction without the C-group check (for deliberately broken inputs).
CosetPoset build_polytope_unchecked(const TailTriangleGroup& g);

/// Regular polytope of a string C-group on the group's generators, in order:
/// j-faces are the cosets of <rho_i : i != j>.
CosetPoset build_regular_polytope(const FiniteGroup& g);

struct FlagOrbitReport {
  std::size_t flags = 0;
  std::size_t orbits = 0;
  /// Every orbit has |G| flags.
  bool free_action = false;
};
FlagOrbitReport flag_orbits(const CosetPoset& p, const FiniteGroup& g);

enum class PolytopeClass { Regular, TwoOrbit };
std::string to_string(PolytopeClass c);

struct Classification {
  PolytopeClass kind = PolytopeClass::TwoOrbit;
  std::size_t aut_order = 0;
  /// {p_1,...,p_{n-1},2k} when regular, empty otherwise.
  std::string schlafli;
};

/// Regular exactly when swapping alpha_{n-1} and beta (fixing the other
/// generators) extends to an automorphism of the group.
Classification classify(const TailTriangleGroup& g);

/// Section above a vertex.
FacePoset vertex_figure(const FacePoset& p, FaceId vertex);
/// Section below a facet.
FacePoset facet_section(const FacePoset& p, FaceId facet);

/// Whether the vertex-figure at the base vertex is isomorphic to the Wythoff
/// polytope of the vertex-stabilizer <alpha_1,...,alpha_{n-1},beta> (n >= 2).
bool vertex_figure_matches(const TailTriangleGroup& g, const CosetPoset& p);
/// Whether every facet section is isomorphic to the regular polytope of its facet group.
bool facet_sections_match(const TailTriangleGroup& g, const CosetPoset& p);

/// Generators of the facet groups in string order.
std::vector<GroupElement> facet_p_generators(const TailTriangleGroup& g);
std::vector<GroupElement> facet_q_generators(const TailTriangleGroup& g);

/// Histogram: polygon size -> number of co-rank-2 sections of that size.
std::map<std::size_t, std::size_t> section_histogram(const std::vector<PolygonSection>& sections);

}  // namespace polywythoff
