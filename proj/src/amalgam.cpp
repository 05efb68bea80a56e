#include "polywythoff/amalgam.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "polywythoff/errors.hpp"
#include "polywythoff/ttgroup.hpp"

namespace polywythoff {

namespace {

std::vector<std::size_t> index_range(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> v;
  for (std::size_t i = lo; i < hi; ++i) v.push_back(i);
  return v;
}

std::vector<ElementIndex> mask_elements(const SubgroupMask& m) {
  std::vector<ElementIndex> out;
  for (auto i = m.members.find_first(); i != boost::dynamic_bitset<>::npos; i = m.members.find_next(i))
    out.push_back(static_cast<ElementIndex>(i));
  return out;
}

}  // namespace

AmalgamContext AmalgamContext::build(const std::vector<GroupElement>& p_gens,
                                     const std::vector<GroupElement>& q_gens) {
  if (p_gens.empty() || p_gens.size() != q_gens.size())
    throw InvalidArgument("amalgam factors need the same positive number of generators");
  for (const auto* gens : {&p_gens, &q_gens}) {
    auto rep = is_string_c_group(*gens);
    if (!rep.passed) throw NotCGroup("amalgam factor is not a string C-group: " + rep.detail);
  }

  AmalgamContext ctx;
  const std::size_t n = p_gens.size();
  ctx.n_ = n;
  ctx.p_.group = FiniteGroup::closure(p_gens);
  ctx.q_.group = FiniteGroup::closure(q_gens);
  std::vector<GroupElement> k_gens(p_gens.begin(), p_gens.begin() + static_cast<std::ptrdiff_t>(n - 1));
  ctx.k_ = FiniteGroup::generated_by(identity_like(p_gens.front()), k_gens);
  const std::size_t korder = ctx.k_.order();

  for (ElementIndex i = 0; i < korder; ++i) ctx.p_.from_shared.push_back(ctx.p_.group.index_of(ctx.k_.element(i)));
  if (n == 1) {
    ctx.q_.from_shared = {0};
  } else {
    std::vector<GroupElement> q_facet(q_gens.begin(), q_gens.begin() + static_cast<std::ptrdiff_t>(n - 1));
    auto images = homomorphism_images(ctx.k_, q_facet);
    if (!images) throw FacetMismatch("facet generator pairing does not extend to a homomorphism");
    std::unordered_set<GroupElement, ElementHash> distinct(images->begin(), images->end());
    if (distinct.size() != korder) throw FacetMismatch("facet generator pairing is not injective");
    for (const auto& img : *images) ctx.q_.from_shared.push_back(ctx.q_.group.index_of(img));
  }
  for (auto* d : {&ctx.p_, &ctx.q_}) {
    d->to_shared.assign(d->group.order(), -1);
    for (ElementIndex i = 0; i < korder; ++i) d->to_shared[d->from_shared[i]] = i;
  }

  if (korder <= 2048) {
    ctx.k_table_.resize(korder * korder);
    for (ElementIndex a = 0; a < korder; ++a)
      for (ElementIndex b = 0; b < korder; ++b) ctx.k_table_[a * korder + b] = ctx.k_.multiply(a, b);
  }

  ctx.build_side(ctx.p_, Side::P);
  ctx.build_side(ctx.q_, Side::Q);

  for (Family f = 0; f <= static_cast<Family>(n + 1); ++f) {
    std::vector<std::size_t> p_idx, q_idx, k_idx;
    const auto all = index_range(0, n), facet = index_range(0, n - 1);
    if (f + 2 <= static_cast<Family>(n)) {
      for (auto i : all)
        if (i != static_cast<std::size_t>(f)) p_idx.push_back(i);
      q_idx = p_idx;
      for (auto i : facet)
        if (i != static_cast<std::size_t>(f)) k_idx.push_back(i);
    } else if (f + 1 == static_cast<Family>(n)) {
      p_idx = q_idx = k_idx = facet;
    } else if (f == static_cast<Family>(n)) {
      p_idx = all;
      q_idx = k_idx = facet;
    } else {
      q_idx = all;
      p_idx = k_idx = facet;
    }
    FamilyData fd;
    fd.in_p = mask_elements(subgroup_mask(ctx.p_.group, p_idx));
    fd.in_q = mask_elements(subgroup_mask(ctx.q_.group, q_idx));
    SubgroupMask km = subgroup_mask(ctx.k_, k_idx);
    fd.in_k = mask_elements(km);
    fd.k_mask = km.members;
    ctx.families_.push_back(std::move(fd));
  }
  for (std::size_t j1 = 0; j1 < n; ++j1) ctx.pi_plus_k_.push_back(subgroup_mask(ctx.k_, index_range(j1, n - 1)).members);
  return ctx;
}

void AmalgamContext::build_side(SideData& d, Side s) {
  const FiniteGroup& g = d.group;
  const auto& rank = g.order_rank();
  const std::size_t n = n_;
  for (int j = static_cast<int>(n) - 1; j >= 0; --j) {
    auto c_gens = index_range(j, n - 1);
    auto a_gens = index_range(j, n);
    SubgroupMask c = subgroup_mask(g, c_gens);
    SubgroupMask a = subgroup_mask(g, a_gens);
    std::vector<ElementIndex> c_elems;
    for (auto i : c_gens) c_elems.push_back(g.right_mul(0, i));
    CosetPartition part = right_coset_partition(g, c, c_elems);

    std::map<std::uint32_t, ElementIndex> chosen;
    for (auto t : d.transversal)
      if (!chosen.emplace(part.coset_of[t], t).second)
        throw NotCGroup(std::string("transversal tower collapses on side ") + (s == Side::P ? "P" : "Q"));
    std::map<std::uint32_t, ElementIndex> fresh;
    for (auto x : mask_elements(a)) {
      auto c_id = part.coset_of[x];
      if (chosen.count(c_id)) continue;
      auto [it, inserted] = fresh.emplace(c_id, x);
      if (!inserted && it->second != 0 && (x == 0 || rank[x] < rank[it->second])) it->second = x;
    }
    std::vector<ElementIndex> reps;
    for (const auto& [c_id, x] : fresh) reps.push_back(x);
    std::sort(reps.begin(), reps.end(), [&](ElementIndex x, ElementIndex y) {
      if ((x == 0) != (y == 0)) return x == 0;
      return rank[x] < rank[y];
    });
    for (auto x : reps) {
      d.transversal.push_back(x);
      d.level.push_back(j);
    }
  }

  d.decompose.assign(g.order(), {0, ~0u});
  for (std::uint32_t t = 0; t < d.transversal.size(); ++t)
    for (ElementIndex kappa = 0; kappa < k_.order(); ++kappa) {
      ElementIndex h = g.multiply(d.from_shared[kappa], d.transversal[t]);
      if (d.decompose[h].second != ~0u) throw NotCGroup("transversal is not a right transversal of the facet group");
      d.decompose[h] = {kappa, t};
    }
  for (const auto& entry : d.decompose)
    if (entry.second == ~0u) throw NotCGroup("transversal does not cover the side group");
}

std::size_t AmalgamContext::tower_size(Side s, int j) const {
  const auto& lv = side(s).level;
  return static_cast<std::size_t>(std::count_if(lv.begin(), lv.end(), [&](int l) { return l >= j; }));
}

ElementIndex AmalgamContext::k_mul(ElementIndex a, ElementIndex b) const {
  if (!k_table_.empty()) return k_table_[a * k_.order() + b];
  return k_.multiply(a, b);
}

void AmalgamContext::absorb(AmalgamWord& w, ElementIndex kappa) const {
  // Push the shared factor leftwards: tau * kappa = kappa' * tau'.
  for (auto it = w.taus.rbegin(); it != w.taus.rend(); ++it) {
    const SideData& d = side(it->side);
    ElementIndex x = d.group.multiply(d.transversal[it->index], d.from_shared[kappa]);
    std::tie(kappa, it->index) = d.decompose[x];
  }
  w.kappa = k_mul(w.kappa, kappa);
}

void AmalgamContext::multiply_side(AmalgamWord& w, Side s, ElementIndex h) const {
  const SideData& d = side(s);
  if (!w.taus.empty() && w.taus.back().side == s) {
    ElementIndex x = d.group.multiply(d.transversal[w.taus.back().index], h);
    auto [kappa, t] = d.decompose[x];
    w.taus.pop_back();
    absorb(w, kappa);
    if (t != 0) w.taus.push_back({s, t});
  } else {
    auto [kappa, t] = d.decompose[h];
    absorb(w, kappa);
    if (t != 0) w.taus.push_back({s, t});
  }
}

void AmalgamContext::multiply_letter(AmalgamWord& w, std::size_t letter) const {
  if (letter > n_) throw InvalidArgument("generator letter out of range");
  if (letter + 1 < n_) {
    ElementIndex kappa = k_.right_mul(0, letter);
    if (w.taus.empty())
      w.kappa = k_mul(w.kappa, kappa);
    else
      multiply_side(w, w.taus.back().side, side(w.taus.back().side).from_shared[kappa]);
    return;
  }
  Side s = letter == n_ ? Side::Q : Side::P;
  multiply_side(w, s, side(s).group.right_mul(0, n_ - 1));
}

AmalgamWord AmalgamContext::normalize(const std::vector<std::size_t>& letters) const {
  AmalgamWord w;
  for (auto l : letters) multiply_letter(w, l);
  return w;
}

AmalgamWord AmalgamContext::multiply(const AmalgamWord& a, const AmalgamWord& b) const {
  AmalgamWord w = a;
  absorb(w, b.kappa);
  for (const auto& t : b.taus) multiply_side(w, t.side, side(t.side).transversal[t.index]);
  return w;
}

AmalgamWord AmalgamContext::inverse(const AmalgamWord& w) const {
  AmalgamWord r;
  for (auto it = w.taus.rbegin(); it != w.taus.rend(); ++it) {
    const SideData& d = side(it->side);
    multiply_side(r, it->side, d.group.inverse(d.transversal[it->index]));
  }
  absorb(r, k_.inverse(w.kappa));
  return r;
}

AmalgamWord AmalgamContext::embed(Side s, ElementIndex h) const {
  AmalgamWord w;
  multiply_side(w, s, h);
  return w;
}

AmalgamWord AmalgamContext::embed_shared(ElementIndex kappa) const { return AmalgamWord{kappa, {}}; }

bool AmalgamContext::in_pi_plus(const AmalgamWord& w, int j) const {
  if (j < -1 || j > static_cast<int>(n_) - 2) throw InvalidArgument("Pi_j^+ needs -1 <= j <= n-2");
  if (!pi_plus_k_[j + 1].test(w.kappa)) return false;
  return std::all_of(w.taus.begin(), w.taus.end(), [&](const auto& t) { return level(t.side, t.index) >= j + 1; });
}

bool AmalgamContext::in_family(const AmalgamWord& w, Family f) const {
  const int n = static_cast<int>(n_);
  if (f < 0 || f > n + 1) throw InvalidArgument("face family out of range");
  if (f + 2 <= n) {
    if (!families_[f].k_mask.test(w.kappa)) return false;
    return std::all_of(w.taus.begin(), w.taus.end(), [&](const auto& t) { return level(t.side, t.index) >= f + 1; });
  }
  if (f + 1 == n) return w.taus.empty();
  Side s = f == n ? Side::P : Side::Q;
  return w.taus.empty() || (w.taus.size() == 1 && w.taus.front().side == s);
}

std::string AmalgamContext::family_name(Family f) const {
  if (f == static_cast<Family>(n_)) return "P";
  if (f == static_cast<Family>(n_) + 1) return "Q";
  return "G_" + std::to_string(f);
}

AmalgamWord AmalgamContext::canonical_coset(Family f, AmalgamWord w) const {
  const FamilyData& fd = families_.at(f);
  // Strip leading factors that H can cancel into the shared group; once
  // stable, the coset is pinned by its least front factor.
  while (!w.taus.empty()) {
    const Side s = w.taus.front().side;
    const SideData& d = side(s);
    const auto& h_list = s == Side::P ? fd.in_p : fd.in_q;
    ElementIndex g = d.group.multiply(d.from_shared[w.kappa], d.transversal[w.taus.front().index]);
    bool stripped = false;
    ElementIndex best = 0;
    bool have_best = false;
    for (auto h : h_list) {
      ElementIndex x = d.group.multiply(h, g);
      if (d.to_shared[x] >= 0) {
        w.kappa = static_cast<ElementIndex>(d.to_shared[x]);
        w.taus.erase(w.taus.begin());
        stripped = true;
        break;
      }
      if (!have_best || d.group.order_rank()[x] < d.group.order_rank()[best]) {
        best = x;
        have_best = true;
      }
    }
    if (stripped) continue;
    auto [kappa, t] = d.decompose[best];
    w.kappa = kappa;
    w.taus.front().index = t;
    return w;
  }
  ElementIndex best = w.kappa;
  for (auto h : fd.in_k) {
    ElementIndex x = k_mul(h, w.kappa);
    if (k_.order_rank()[x] < k_.order_rank()[best]) best = x;
  }
  w.kappa = best;
  return w;
}

bool AmalgamContext::same_coset(Family f, const AmalgamWord& a, const AmalgamWord& b) const {
  return in_family(multiply(a, inverse(b)), f);
}

std::vector<std::size_t> AmalgamContext::to_letters(const AmalgamWord& w) const {
  std::vector<std::size_t> out = k_.word_for(w.kappa);
  for (const auto& t : w.taus) {
    const SideData& d = side(t.side);
    for (auto gi : d.group.word_for(d.transversal[t.index]))
      out.push_back(t.side == Side::Q && gi + 1 == n_ ? n_ : gi);
  }
  return out;
}

std::string AmalgamContext::to_string(const AmalgamWord& w) const {
  std::string out = "[" + polywythoff::to_string(k_.element(w.kappa)) + "]";
  for (const auto& t : w.taus) {
    const SideData& d = side(t.side);
    out += std::string(" ") + (t.side == Side::P ? "P" : "Q") +
           polywythoff::to_string(d.group.element(d.transversal[t.index]));
  }
  return out;
}

std::vector<std::size_t> AmalgamContext::parse_letters(std::string_view text) const {
  std::istringstream is{std::string(text)};
  std::vector<std::size_t> out;
  std::string tok;
  while (is >> tok) {
    if (tok == "b") {
      out.push_back(n_);
      continue;
    }
    if (tok.size() < 2 || tok[0] != 'a' || !std::all_of(tok.begin() + 1, tok.end(), ::isdigit))
      throw ParseError("unknown generator letter '" + tok + "'");
    std::size_t i = std::stoul(tok.substr(1));
    if (i >= n_) throw ParseError("generator letter '" + tok + "' out of range");
    out.push_back(i);
  }
  return out;
}

std::string AmalgamContext::format_letters(const std::vector<std::size_t>& letters) const {
  std::string out;
  for (auto l : letters) {
    if (!out.empty()) out += ' ';
    out += l == n_ ? std::string("b") : "a" + std::to_string(l);
  }
  return out;
}

AmalgamBall enumerate_ball(const AmalgamContext& ctx, std::size_t radius, std::size_t max_elements) {
  const int n = static_cast<int>(ctx.n());
  AmalgamBall ball;
  ball.poset = FacePoset(n + 1);

  // All reduced words of transversal length <= radius.
  std::vector<std::set<AmalgamWord>> keys(n + 2);
  std::vector<AmalgamWord> layer;
  for (ElementIndex k = 0; k < ctx.shared_group().order(); ++k) layer.push_back(ctx.embed_shared(k));
  for (std::size_t len = 0;; ++len) {
    ball.elements += layer.size();
    if (ball.elements > max_elements)
      throw CapExceeded(max_elements);
    for (const auto& w : layer)
      for (Family f = 0; f <= n + 1; ++f) keys[f].insert(ctx.canonical_coset(f, w));
    if (len == radius) break;
    std::vector<AmalgamWord> next;
    for (const auto& w : layer)
      for (Side s : {Side::P, Side::Q}) {
        if (!w.taus.empty() && w.taus.back().side == s) continue;
        for (std::uint32_t t = 1; t < ctx.transversal(s).size(); ++t) {
          AmalgamWord x = w;
          x.taus.push_back({s, t});
          next.push_back(std::move(x));
        }
      }
    layer = std::move(next);
  }

  FacePoset& poset = ball.poset;
  FaceId bottom = poset.add_face(-1, "min");
  ball.faces.push_back({-1, {}});
  for (int r = 0; r <= n; ++r)
    for (Family f = 0; f <= n + 1; ++f) {
      if (ctx.family_rank(f) != r) continue;
      for (const auto& w : keys[f]) {
        FaceId id = poset.add_face(r, ctx.family_name(f), ctx.to_string(w));
        ball.faces.push_back({f, w});
        ball.index.emplace(std::make_pair(f, w), id);
      }
    }
  FaceId top = poset.add_face(n + 1, "max");
  ball.faces.push_back({-1, {}});

  // Elements x with Gamma_{r-1} x mu running over the faces just below Gamma_r mu.
  std::vector<std::vector<AmalgamWord>> lower_moves(n + 2);
  for (Family f = 0; f <= n + 1; ++f) {
    auto& moves = lower_moves[f];
    if (f + 2 <= n) {
      std::vector<std::size_t> l_gens;
      for (int i = 0; i < f; ++i) l_gens.push_back(i);
      for (auto k : mask_elements(subgroup_mask(ctx.shared_group(), l_gens))) moves.push_back(ctx.embed_shared(k));
    } else if (f + 1 == n) {
      for (ElementIndex k = 0; k < ctx.shared_group().order(); ++k) moves.push_back(ctx.embed_shared(k));
    } else {
      Side s = f == n ? Side::P : Side::Q;
      for (ElementIndex h = 0; h < ctx.side_group(s).order(); ++h) moves.push_back(ctx.embed(s, h));
    }
  }

  for (FaceId id = 0; id < poset.size(); ++id) {
    const auto& [f, w] = ball.faces[id];
    if (f < 0) continue;
    const int r = ctx.family_rank(f);
    if (r == 0) poset.add_cover(bottom, id);
    if (r == n) poset.add_cover(id, top);
    if (r == 0) continue;
    const Family lower = r - 1;
    std::set<FaceId> seen;
    for (const auto& x : lower_moves[f]) {
      AmalgamWord key = ctx.canonical_coset(lower, ctx.multiply(x, w));
      auto it = ball.index.find({lower, key});
      if (it != ball.index.end() && seen.insert(it->second).second) poset.add_cover(it->second, id);
    }
  }
  return ball;
}

RidgeSectionReport base_ridge_section(const AmalgamContext& ctx, const AmalgamBall& ball) {
  RidgeSectionReport rep;
  const int n = static_cast<int>(ctx.n());
  const FacePoset& p = ball.poset;
  FaceId base = p.bottom();
  if (n >= 2) {
    auto it = ball.index.find({n - 2, ctx.canonical_coset(n - 2, ctx.identity())});
    if (it == ball.index.end()) return rep;
    base = it->second;
  }
  std::vector<FaceId> ridges = p.up(base);
  std::set<FaceId> facets;
  std::size_t edges = 0;
  rep.alternates = true;
  for (auto r : ridges) {
    const auto& above = p.up(r);
    edges += above.size();
    facets.insert(above.begin(), above.end());
    if (above.size() > 2 || (above.size() == 2 && p.face(above[0]).kind == p.face(above[1]).kind))
      rep.alternates = false;
  }
  rep.ridges = ridges.size();
  rep.facets = facets.size();

  // Union-find over ridges and facets of the section.
  std::map<FaceId, std::uint32_t> local;
  for (auto r : ridges) local.emplace(r, static_cast<std::uint32_t>(local.size()));
  for (auto f : facets) local.emplace(f, static_cast<std::uint32_t>(local.size()));
  std::vector<std::uint32_t> parent(local.size());
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = local.size();
  for (auto r : ridges)
    for (auto f : p.up(r)) {
      auto a = find(local[r]), b = find(local[f]);
      if (a != b) {
        parent[std::max(a, b)] = std::min(a, b);
        --components;
      }
    }
  rep.connected = components == 1;
  rep.acyclic = edges + components == local.size();
  for (auto f : facets) {
    std::size_t deg = 0;
    for (auto r : p.down(f))
      if (local.count(r)) ++deg;
    if (deg > 2) rep.alternates = false;
  }
  return rep;
}

UniversalClass universal_is_regular(const AmalgamContext& ctx) {
  const auto& gp = ctx.side_group(Side::P);
  const auto& gq = ctx.side_group(Side::Q);
  if (gp.order() != gq.order()) return UniversalClass::TwoOrbit;
  std::size_t image = 0;
  if (extends_to_homomorphism(gp, gq.generators(), &image) && image == gp.order()) return UniversalClass::Regular;
  return UniversalClass::TwoOrbit;
}

}  // namespace polywythoff
