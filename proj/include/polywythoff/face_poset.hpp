#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace polywythoff {

using FaceId = std::uint32_t;

struct Face {
  int rank = 0;
  /// "P", "Q", "G_j" for Wythoff faces, "F" for generic ones, "min"/"max" for the improper faces.
  std::string kind;
  /// Canonical representative, as element text (may be empty for generic faces).
  std::string rep;
};

/// Ranked poset held as its Hasse diagram. Ranks run from -1 (least face) to
/// top_rank() (greatest face); only covering pairs are stored.
class FacePoset {
 public:
  explicit FacePoset(int top_rank = 0) : top_rank_(top_rank), by_rank_(top_rank + 2) {}

  FaceId add_face(int rank, std::string kind, std::string rep = {});
  void add_cover(FaceId low, FaceId high);

  int top_rank() const { return top_rank_; }
  std::size_t size() const { return faces_.size(); }
  const Face& face(FaceId id) const { return faces_[id]; }
  const std::vector<FaceId>& rank(int r) const { return by_rank_[r + 1]; }
  const std::vector<FaceId>& up(FaceId id) const { return up_[id]; }
  const std::vector<FaceId>& down(FaceId id) const { return down_[id]; }
  std::size_t cover_count() const;

  /// Least and greatest face; throws InvalidArgument unless each is unique.
  FaceId bottom() const;
  FaceId top() const;

  /// Face counts for ranks 0..top_rank()-1.
  std::vector<std::size_t> f_vector() const;
  /// Counts per kind at one rank.
  std::map<std::string, std::size_t> kind_counts(int r) const;

  /// "(4, 12, 16, 4+4)": the top proper rank is split by kind when it has several.
  std::string format_f_vector() const;

  /// Whether a <= b in the reflexive-transitive closure of the covers.
  bool less_equal(FaceId a, FaceId b) const;

 private:
  int top_rank_;
  std::vector<Face> faces_;
  std::vector<std::vector<FaceId>> by_rank_;
  std::vector<std::vector<FaceId>> up_, down_;
};

/// Flags of a poset, with the j-adjacency structure.
struct FlagSystem {
  /// Each flag lists one proper face per rank 0..n (n = top_rank - 1).
  std::vector<std::vector<FaceId>> flags;
  /// adjacent[f][j]: the flag differing from f exactly at rank j, or nullopt
  /// when the diamond condition fails there.
  std::vector<std::vector<std::optional<std::uint32_t>>> adjacent;

  std::optional<std::uint32_t> find(const std::vector<FaceId>& flag) const;
  std::map<std::vector<FaceId>, std::uint32_t> index;
};

/// Enumerates flags by depth-first extension through covers from the least face.
FlagSystem enumerate_flags(const FacePoset& p);

struct CheckResult {
  bool passed = false;
  std::string detail;
};

/// Axiom A: unique least and greatest face, every cover raises rank by one,
/// every proper face lies on some maximal chain.
CheckResult verify_ranked(const FacePoset& p);

/// Axiom B: every pair F < G with rank(G) - rank(F) = 2 has exactly two faces between.
CheckResult verify_diamond(const FacePoset& p);

/// Axiom C: for every section G/F of rank >= 2 (improper bounds included),
/// the faces of rank rank(G)-1 are connected through shared faces of rank rank(G)-2.
CheckResult verify_strong_connectivity(const FacePoset& p);

/// Section G/F = {H : F <= H <= G} as a standalone poset (F becomes rank -1).
FacePoset section(const FacePoset& p, FaceId low, FaceId high);

/// Co-rank-2 sections above each face R of rank top-3 (the faces carrying polygons
/// of facets), in rank order of R.
struct PolygonSection {
  FaceId base = 0;
  std::size_t size = 0;            // number of facets around the polygon
  bool is_single_cycle = false;    // the section is a connected polygon
  bool alternates = false;         // consecutive facets differ in kind
  std::vector<std::string> kinds;  // facet kinds in cyclic order
};
std::vector<PolygonSection> two_sections(const FacePoset& p);

/// Rank- and incidence-preserving bijection, found by mapping a base flag of
/// `a` to each flag of `b` and propagating through flag adjacency. Returns the
/// face map (indexed by face of `a`) on success.
std::optional<std::vector<FaceId>> poset_isomorphism(const FacePoset& a, const FacePoset& b);
inline bool poset_isomorphic(const FacePoset& a, const FacePoset& b) { return poset_isomorphism(a, b).has_value(); }

/// Writes `face` and `cover` lines in the export format.
void write_hasse(std::ostream& out, const FacePoset& p);

}  // namespace polywythoff
