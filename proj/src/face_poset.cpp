#include "polywythoff/face_poset.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <numeric>

#include "polywythoff/errors.hpp"

namespace polywythoff {

FaceId FacePoset::add_face(int r, std::string kind, std::string rep) {
  if (r < -1 || r > top_rank_) throw InvalidArgument("face rank " + std::to_string(r) + " out of range");
  auto id = static_cast<FaceId>(faces_.size());
  faces_.push_back(Face{r, std::move(kind), std::move(rep)});
  by_rank_[r + 1].push_back(id);
  up_.emplace_back();
  down_.emplace_back();
  return id;
}

void FacePoset::add_cover(FaceId low, FaceId high) {
  up_[low].push_back(high);
  down_[high].push_back(low);
}

std::size_t FacePoset::cover_count() const {
  std::size_t c = 0;
  for (const auto& u : up_) c += u.size();
  return c;
}

FaceId FacePoset::bottom() const {
  if (rank(-1).size() != 1) throw InvalidArgument("poset has no unique least face");
  return rank(-1).front();
}

FaceId FacePoset::top() const {
  if (rank(top_rank_).size() != 1) throw InvalidArgument("poset has no unique greatest face");
  return rank(top_rank_).front();
}

std::vector<std::size_t> FacePoset::f_vector() const {
  std::vector<std::size_t> out;
  for (int r = 0; r < top_rank_; ++r) out.push_back(rank(r).size());
  return out;
}

std::map<std::string, std::size_t> FacePoset::kind_counts(int r) const {
  std::map<std::string, std::size_t> out;
  for (auto id : rank(r)) ++out[faces_[id].kind];
  return out;
}

std::string FacePoset::format_f_vector() const {
  std::string out = "(";
  for (int r = 0; r < top_rank_; ++r) {
    if (r) out += ", ";
    auto kinds = kind_counts(r);
    if (r + 1 == top_rank_ && kinds.size() > 1) {
      bool first = true;
      for (const auto& [kind, count] : kinds) {
        out += (first ? "" : "+") + std::to_string(count);
        first = false;
      }
    } else {
      out += std::to_string(rank(r).size());
    }
  }
  return out + ")";
}

bool FacePoset::less_equal(FaceId a, FaceId b) const {
  if (a == b) return true;
  if (faces_[a].rank >= faces_[b].rank) return false;
  std::vector<FaceId> stack{a};
  std::vector<char> seen(faces_.size(), 0);
  while (!stack.empty()) {
    FaceId cur = stack.back();
    stack.pop_back();
    for (auto h : up_[cur]) {
      if (h == b) return true;
      if (!seen[h] && faces_[h].rank < faces_[b].rank) {
        seen[h] = 1;
        stack.push_back(h);
      }
    }
  }
  return false;
}

std::optional<std::uint32_t> FlagSystem::find(const std::vector<FaceId>& flag) const {
  auto it = index.find(flag);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

FlagSystem enumerate_flags(const FacePoset& p) {
  FlagSystem fs;
  const int n = p.top_rank() - 1;
  std::vector<FaceId> chain;
  // Depth-first through covers; a flag is complete when it reaches rank n and
  // that face is covered by the greatest face.
  auto extend = [&](auto&& self, FaceId cur) -> void {
    if (p.face(cur).rank == n) {
      fs.index.emplace(chain, static_cast<std::uint32_t>(fs.flags.size()));
      fs.flags.push_back(chain);
      return;
    }
    std::vector<FaceId> next = p.up(cur);
    std::sort(next.begin(), next.end());
    for (auto h : next) {
      chain.push_back(h);
      self(self, h);
      chain.pop_back();
    }
  };
  if (n < 0) return fs;
  extend(extend, p.bottom());

  fs.adjacent.assign(fs.flags.size(), std::vector<std::optional<std::uint32_t>>(n + 1));
  const FaceId bottom = p.bottom(), top = p.top();
  for (std::uint32_t f = 0; f < fs.flags.size(); ++f) {
    const auto& flag = fs.flags[f];
    for (int j = 0; j <= n; ++j) {
      FaceId below = j == 0 ? bottom : flag[j - 1];
      FaceId above = j == n ? top : flag[j + 1];
      std::optional<FaceId> other;
      int found = 0;
      for (auto h : p.up(below)) {
        if (h == flag[j]) continue;
        const auto& hu = p.up(h);
        if (std::find(hu.begin(), hu.end(), above) != hu.end()) {
          other = h;
          ++found;
        }
      }
      if (found != 1) continue;
      auto copy = flag;
      copy[j] = *other;
      fs.adjacent[f][j] = fs.find(copy);
    }
  }
  return fs;
}

CheckResult verify_ranked(const FacePoset& p) {
  CheckResult res;
  if (p.rank(-1).size() != 1 || p.rank(p.top_rank()).size() != 1) {
    res.detail = "least or greatest face is not unique";
    return res;
  }
  for (FaceId id = 0; id < p.size(); ++id) {
    for (auto h : p.up(id))
      if (p.face(h).rank != p.face(id).rank + 1) {
        res.detail = "cover " + std::to_string(id) + " < " + std::to_string(h) + " skips a rank";
        return res;
      }
    int r = p.face(id).rank;
    if (r < p.top_rank() && p.up(id).empty()) {
      res.detail = "face " + std::to_string(id) + " has nothing above it";
      return res;
    }
    if (r > -1 && p.down(id).empty()) {
      res.detail = "face " + std::to_string(id) + " has nothing below it";
      return res;
    }
  }
  res.passed = true;
  return res;
}

CheckResult verify_diamond(const FacePoset& p) {
  CheckResult res;
  std::map<FaceId, std::size_t> middle;
  for (FaceId f = 0; f < p.size(); ++f) {
    middle.clear();
    for (auto h : p.up(f))
      for (auto g : p.up(h)) ++middle[g];
    for (const auto& [g, count] : middle)
      if (count != 2) {
        res.detail = "faces " + std::to_string(f) + " (rank " + std::to_string(p.face(f).rank) + ") and " +
                     std::to_string(g) + " have " + std::to_string(count) + " faces between them";
        return res;
      }
  }
  res.passed = true;
  return res;
}

namespace {

/// above[f]: faces g with f <= g, as bitsets.
std::vector<boost::dynamic_bitset<>> upward_closure(const FacePoset& p) {
  std::vector<boost::dynamic_bitset<>> above(p.size(), boost::dynamic_bitset<>(p.size()));
  for (int r = p.top_rank(); r >= -1; --r)
    for (auto f : p.rank(r)) {
      above[f].set(f);
      for (auto h : p.up(f)) above[f] |= above[h];
    }
  return above;
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

}  // namespace

CheckResult verify_strong_connectivity(const FacePoset& p) {
  CheckResult res;
  auto above = upward_closure(p);
  std::vector<std::uint32_t> local(p.size());
  for (FaceId f = 0; f < p.size(); ++f) {
    const int rf = p.face(f).rank;
    for (auto g = above[f].find_first(); g != boost::dynamic_bitset<>::npos; g = above[f].find_next(g)) {
      const int rg = p.face(g).rank;
      if (rg - rf < 3) continue;
      // Facets of the section are faces of rank rg-1 below g and above f;
      // they are joined when they share a face of rank rg-2 above f.
      std::vector<FaceId> facets;
      for (auto h : p.down(g))
        if (above[f].test(h)) facets.push_back(h);
      for (std::uint32_t i = 0; i < facets.size(); ++i) local[facets[i]] = i;
      UnionFind uf(facets.size());
      std::size_t components = facets.size();
      for (auto h : facets)
        for (auto r : p.down(h)) {
          if (!above[f].test(r)) continue;
          for (auto h2 : p.up(r))
            if (h2 != h && p.face(h2).rank == rg - 1 && above[h2].test(g) && above[f].test(h2))
              if (uf.unite(local[h], local[h2])) --components;
        }
      if (components != 1) {
        res.detail = "section between faces " + std::to_string(f) + " and " + std::to_string(g) + " splits into " +
                     std::to_string(components) + " components";
        return res;
      }
    }
  }
  res.passed = true;
  return res;
}

FacePoset section(const FacePoset& p, FaceId low, FaceId high) {
  const int base = p.face(low).rank;
  FacePoset out(p.face(high).rank - base - 1);
  std::vector<std::optional<FaceId>> map(p.size());
  // Upward search from low restricted to faces below high.
  std::vector<char> below_high(p.size(), 0);
  std::vector<FaceId> stack{high};
  below_high[high] = 1;
  while (!stack.empty()) {
    FaceId cur = stack.back();
    stack.pop_back();
    if (p.face(cur).rank <= base) continue;
    for (auto d : p.down(cur))
      if (!below_high[d]) {
        below_high[d] = 1;
        stack.push_back(d);
      }
  }
  for (int r = base; r <= p.face(high).rank; ++r)
    for (auto id : p.rank(r)) {
      if (!below_high[id]) continue;
      if (r == base && id != low) continue;
      if (r > base) {
        bool reachable = false;
        for (auto d : p.down(id))
          if (map[d]) reachable = true;
        if (!reachable) continue;
      }
      const Face& f = p.face(id);
      std::string kind = id == low ? "min" : id == high ? "max" : f.kind;
      map[id] = out.add_face(r - base - 1, kind, f.rep);
      for (auto d : p.down(id))
        if (map[d]) out.add_cover(*map[d], *map[id]);
    }
  return out;
}

std::vector<PolygonSection> two_sections(const FacePoset& p) {
  std::vector<PolygonSection> out;
  const int n = p.top_rank() - 1;
  if (n < 1) return out;
  for (auto r : p.rank(n - 2)) {
    PolygonSection sec;
    sec.base = r;
    // Ridges above r, facets above those.
    std::vector<FaceId> ridges = p.up(r);
    std::map<FaceId, std::vector<FaceId>> facet_ridges, ridge_facets;
    for (auto e : ridges)
      for (auto f : p.up(e)) {
        facet_ridges[f].push_back(e);
        ridge_facets[e].push_back(f);
      }
    sec.size = facet_ridges.size();
    bool degree_ok = !facet_ridges.empty();
    for (const auto& [f, rs] : facet_ridges) degree_ok = degree_ok && rs.size() == 2;
    for (const auto& [e, fs] : ridge_facets) degree_ok = degree_ok && fs.size() == 2;
    if (degree_ok) {
      // Walk around the polygon.
      FaceId start = facet_ridges.begin()->first;
      FaceId cur = start;
      FaceId via = facet_ridges[start][0];
      std::size_t steps = 0;
      do {
        sec.kinds.push_back(p.face(cur).kind);
        const auto& pair = ridge_facets[via];
        FaceId next = pair[0] == cur ? pair[1] : pair[0];
        const auto& nr = facet_ridges[next];
        via = nr[0] == via ? nr[1] : nr[0];
        cur = next;
        ++steps;
      } while (cur != start && steps <= sec.size);
      sec.is_single_cycle = cur == start && steps == sec.size;
    }
    sec.alternates = sec.is_single_cycle && sec.size % 2 == 0;
    for (std::size_t i = 0; sec.alternates && i < sec.kinds.size(); ++i)
      if (sec.kinds[i] == sec.kinds[(i + 1) % sec.kinds.size()]) sec.alternates = false;
    out.push_back(std::move(sec));
  }
  return out;
}

std::optional<std::vector<FaceId>> poset_isomorphism(const FacePoset& a, const FacePoset& b) {
  if (a.top_rank() != b.top_rank() || a.size() != b.size() || a.f_vector() != b.f_vector() ||
      a.cover_count() != b.cover_count())
    return std::nullopt;
  const int n = a.top_rank() - 1;
  if (n < 0) return std::vector<FaceId>{b.bottom()};
  FlagSystem fa = enumerate_flags(a);
  FlagSystem fb = enumerate_flags(b);
  if (fa.flags.size() != fb.flags.size() || fa.flags.empty()) return std::nullopt;

  constexpr std::uint32_t unset = ~0u;
  std::vector<std::uint32_t> flag_map(fa.flags.size());
  std::vector<FaceId> face_map(a.size());
  for (std::uint32_t candidate = 0; candidate < fb.flags.size(); ++candidate) {
    std::fill(flag_map.begin(), flag_map.end(), unset);
    std::fill(face_map.begin(), face_map.end(), unset);
    bool ok = true;
    auto assign = [&](std::uint32_t fa_idx, std::uint32_t fb_idx) {
      const auto& x = fa.flags[fa_idx];
      const auto& y = fb.flags[fb_idx];
      for (int j = 0; j <= n; ++j) {
        if (face_map[x[j]] == unset)
          face_map[x[j]] = y[j];
        else if (face_map[x[j]] != y[j])
          return false;
      }
      flag_map[fa_idx] = fb_idx;
      return true;
    };
    std::vector<std::uint32_t> queue{0};
    ok = assign(0, candidate);
    for (std::size_t head = 0; ok && head < queue.size(); ++head) {
      std::uint32_t f = queue[head];
      for (int j = 0; ok && j <= n; ++j) {
        auto na = fa.adjacent[f][j];
        auto nb = fb.adjacent[flag_map[f]][j];
        if (na.has_value() != nb.has_value()) {
          ok = false;
          break;
        }
        if (!na) continue;
        if (flag_map[*na] == unset) {
          ok = assign(*na, *nb);
          queue.push_back(*na);
        } else if (flag_map[*na] != *nb) {
          ok = false;
        }
      }
    }
    if (!ok || queue.size() != fa.flags.size()) continue;
    // The flag map is a bijection; confirm the induced face map is one and preserves covers.
    face_map[a.bottom()] = b.bottom();
    face_map[a.top()] = b.top();
    std::vector<char> hit(b.size(), 0);
    for (auto x : face_map) {
      if (x == unset || hit[x]) ok = false;
      if (ok) hit[x] = 1;
    }
    for (FaceId f = 0; ok && f < a.size(); ++f)
      for (auto h : a.up(f)) {
        const auto& bu = b.up(face_map[f]);
        if (std::find(bu.begin(), bu.end(), face_map[h]) == bu.end()) {
          ok = false;
          break;
        }
      }
    if (ok) return face_map;
  }
  return std::nullopt;
}

void write_hasse(std::ostream& out, const FacePoset& p) {
  for (int r = -1; r <= p.top_rank(); ++r)
    for (auto id : p.rank(r)) {
      const Face& f = p.face(id);
      out << "face " << id << " rank=" << f.rank << " kind=" << f.kind << " rep=" << (f.rep.empty() ? "-" : f.rep)
          << "\n";
    }
  for (FaceId id = 0; id < p.size(); ++id)
    for (auto h : p.up(id)) out << "cover " << id << " " << h << "\n";
}

}  // namespace polywythoff
