#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "polywythoff/face_poset.hpp"
#include "polywythoff/finite_group.hpp"

namespace polywythoff {

enum class Side : std::uint8_t { P, Q };

struct TransversalLetter {
  Side side = Side::P;
  std::uint32_t index = 0;  // position in the side's transversal; never 0 (the identity) in a reduced word
  friend bool operator==(const TransversalLetter&, const TransversalLetter&) = default;
  friend auto operator<=>(const TransversalLetter&, const TransversalLetter&) = default;
};

/// Reduced decomposition kappa * tau_1 * ... * tau_m of an element of the
/// amalgamated product: kappa indexes the shared facet group, consecutive
/// transversal letters alternate sides.
struct AmalgamWord {
  ElementIndex kappa = 0;
  std::vector<TransversalLetter> taus;

  std::size_t length() const { return taus.size(); }
  friend bool operator==(const AmalgamWord&, const AmalgamWord&) = default;
  friend auto operator<=>(const AmalgamWord&, const AmalgamWord&) = default;
};

/// Face families of the universal polytope: 0..n-1 are the Gamma_j, n is the
/// P-facet group, n+1 the Q-facet group.
using Family = int;

/// Exact arithmetic in Pi = G(P) *_{G(K)} G(Q) for two finite string C-groups
/// whose first n-1 generators generate isomorphic facet groups.
///
/// Generator letters of Pi are 0..n-1 (alpha_i) and n (beta); alpha_i for
/// i <= n-2 lie in the shared facet group.
class AmalgamContext {
 public:
  /// Throws NotCGroup when either input is not a string C-group and
  /// FacetMismatch when the pairing of the first n-1 generators does not
  /// extend to an isomorphism of facet groups.
  static AmalgamContext build(const std::vector<GroupElement>& p_gens, const std::vector<GroupElement>& q_gens);

  std::size_t n() const { return n_; }
  const FiniteGroup& side_group(Side s) const { return side(s).group; }
  const FiniteGroup& shared_group() const { return k_; }
  /// Transversal of the shared group in a side group; entry 0 is the identity.
  const std::vector<ElementIndex>& transversal(Side s) const { return side(s).transversal; }
  /// Largest j with the transversal element in T_{s,j}.
  int level(Side s, std::uint32_t t) const { return side(s).level[t]; }
  /// |T_{s,j}|.
  std::size_t tower_size(Side s, int j) const;

  AmalgamWord identity() const { return {}; }
  AmalgamWord normalize(const std::vector<std::size_t>& letters) const;
  AmalgamWord multiply(const AmalgamWord& a, const AmalgamWord& b) const;
  AmalgamWord inverse(const AmalgamWord& w) const;
  /// Normal form of an element of a side group.
  AmalgamWord embed(Side s, ElementIndex h) const;
  /// Normal form of an element of the shared group.
  AmalgamWord embed_shared(ElementIndex kappa) const;

  /// Membership in Pi_j^+ = <alpha_{j+1},...,alpha_{n-1},beta>, -1 <= j <= n-2.
  bool in_pi_plus(const AmalgamWord& w, int j) const;
  /// Membership in a face family's subgroup.
  bool in_family(const AmalgamWord& w, Family f) const;
  int family_rank(Family f) const { return f < static_cast<int>(n_) ? f : static_cast<int>(n_); }
  std::string family_name(Family f) const;

  /// Canonical representative of the right coset H w, H the family's subgroup.
  AmalgamWord canonical_coset(Family f, AmalgamWord w) const;
  /// Exact coset equality: a b^-1 in H.
  bool same_coset(Family f, const AmalgamWord& a, const AmalgamWord& b) const;

  /// A letter sequence evaluating to w (normalize of it returns w).
  std::vector<std::size_t> to_letters(const AmalgamWord& w) const;
  std::string to_string(const AmalgamWord& w) const;
  /// Whitespace-separated names a0 a1 ... b.
  std::vector<std::size_t> parse_letters(std::string_view text) const;
  std::string format_letters(const std::vector<std::size_t>& letters) const;

 private:
  struct SideData {
    FiniteGroup group;
    std::vector<ElementIndex> transversal;
    std::vector<int> level;
    std::vector<ElementIndex> from_shared;  // shared index -> side index
    std::vector<std::int64_t> to_shared;    // side index -> shared index or -1
    std::vector<std::pair<ElementIndex, std::uint32_t>> decompose;  // side index -> (kappa, tau)
  };
  struct FamilyData {
    std::vector<ElementIndex> in_p, in_q, in_k;  // H ∩ G(P), H ∩ G(Q), H ∩ G(K)
    boost::dynamic_bitset<> k_mask;
  };

  const SideData& side(Side s) const { return s == Side::P ? p_ : q_; }
  ElementIndex k_mul(ElementIndex a, ElementIndex b) const;
  void absorb(AmalgamWord& w, ElementIndex kappa) const;
  void multiply_side(AmalgamWord& w, Side s, ElementIndex h) const;
  void multiply_letter(AmalgamWord& w, std::size_t letter) const;
  void build_side(SideData& d, Side s);

  std::size_t n_ = 0;
  FiniteGroup k_;
  std::vector<ElementIndex> k_table_;  // |K|^2 product table
  SideData p_, q_;
  std::vector<FamilyData> families_;
  std::vector<boost::dynamic_bitset<>> pi_plus_k_;  // per j+1: <alpha_{j+1}..alpha_{n-2}> in K
};

/// Partial universal polytope: all faces with a representative of
/// transversal length <= radius, least and greatest faces added, covers
/// among these faces.
struct AmalgamBall {
  FacePoset poset{1};
  std::vector<std::pair<Family, AmalgamWord>> faces;  // per face id; family -1 for improper
  std::map<std::pair<Family, AmalgamWord>, FaceId> index;
  std::size_t elements = 0;
};

AmalgamBall enumerate_ball(const AmalgamContext& ctx, std::size_t radius, std::size_t max_elements = 4'000'000);

/// The polygon of ridges and facets around the base (n-2)-face within a ball.
struct RidgeSectionReport {
  std::size_t ridges = 0;
  std::size_t facets = 0;
  bool connected = false;
  bool acyclic = false;
  bool alternates = false;
};
RidgeSectionReport base_ridge_section(const AmalgamContext& ctx, const AmalgamBall& ball);

enum class UniversalClass { Regular, TwoOrbit };
/// Regular exactly when the facet-group isomorphism extends to G(P) -> G(Q)
/// with alpha_{n-1} -> beta.
UniversalClass universal_is_regular(const AmalgamContext& ctx);

}  // namespace polywythoff
