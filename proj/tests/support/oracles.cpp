#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace polywythoff::oracle {

FacePoset polygon(std::size_t m) {
  FacePoset p(2);
  FaceId bottom = p.add_face(-1, "min");
  std::vector<FaceId> v, e;
  for (std::size_t i = 0; i < m; ++i) v.push_back(p.add_face(0, "F", "v" + std::to_string(i)));
  for (std::size_t i = 0; i < m; ++i) e.push_back(p.add_face(1, "F", "e" + std::to_string(i)));
  FaceId top = p.add_face(2, "max");
  for (std::size_t i = 0; i < m; ++i) {
    p.add_cover(bottom, v[i]);
    p.add_cover(v[i], e[i]);
    p.add_cover(v[(i + 1) % m], e[i]);
    p.add_cover(e[i], top);
  }
  return p;
}

FacePoset cube(std::size_t d) {
  // Face word w in {0,1,2}^d, 2 standing for a free coordinate; rank = number of 2s.
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= 3;
  FacePoset p(static_cast<int>(d));
  FaceId bottom = p.add_face(-1, "min");
  std::vector<FaceId> id(total);
  std::vector<std::string> words(total);
  for (std::size_t code = 0; code < total; ++code) {
    std::string w;
    int rank = 0;
    for (std::size_t c = code, i = 0; i < d; ++i, c /= 3) {
      w += "01*"[c % 3];
      rank += c % 3 == 2;
    }
    words[code] = w;
    id[code] = rank == static_cast<int>(d) ? FaceId{0} : p.add_face(rank, "F", w);
  }
  FaceId top = p.add_face(static_cast<int>(d), "max");
  std::size_t top_code = total - 1;
  id[top_code] = top;
  std::size_t pow3 = 1;
  for (std::size_t code = 0; code < total; ++code) {
    if (std::count(words[code].begin(), words[code].end(), '*') == 0) p.add_cover(bottom, id[code]);
    pow3 = 1;
    for (std::size_t i = 0; i < d; ++i, pow3 *= 3)
      if (words[code][i] == '*') {
        // Fixing a free coordinate to 0 or 1 gives the facets of this face.
        std::size_t base = code - 2 * pow3;
        p.add_cover(id[base], id[code]);
        p.add_cover(id[base + pow3], id[code]);
      }
  }
  return p;
}

FacePoset cross_polytope(std::size_t d) {
  // Face = assignment of each coordinate to {unused, +, -}; rank = used - 1.
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= 3;
  FacePoset p(static_cast<int>(d));
  std::vector<FaceId> id(total);
  for (std::size_t code = 0; code < total; ++code) {
    int used = 0;
    std::string w;
    for (std::size_t c = code, i = 0; i < d; ++i, c /= 3) {
      used += c % 3 != 0;
      w += ".+-"[c % 3];
    }
    id[code] = p.add_face(used - 1, used == 0 ? "min" : "F", w);
  }
  FaceId top = p.add_face(static_cast<int>(d), "max");
  for (std::size_t code = 0; code < total; ++code) {
    int used = 0;
    std::size_t pow3 = 1;
    for (std::size_t c = code, i = 0; i < d; ++i, c /= 3, pow3 *= 3) {
      if (c % 3 != 0) {
        ++used;
        p.add_cover(id[code - (c % 3) * pow3], id[code]);
      }
    }
    if (used == static_cast<int>(d)) p.add_cover(id[code], top);
  }
  return p;
}

std::vector<long> reduce_mod_lattice(std::vector<long> v, const std::vector<std::vector<long>>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    long diag = basis[i][i];
    long q = v[i] >= 0 ? v[i] / diag : -((-v[i] + diag - 1) / diag);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= q * basis[i][j];
  }
  return v;
}

FacePoset cubical_torus(const std::vector<std::vector<long>>& basis) {
  const std::size_t d = basis.size();
  for (std::size_t i = 0; i < d; ++i) {
    if (basis[i].size() != d || basis[i][i] <= 0) throw std::invalid_argument("basis must be upper triangular");
    for (std::size_t j = 0; j < i; ++j)
      if (basis[i][j] != 0) throw std::invalid_argument("basis must be upper triangular");
  }
  // Representatives: 0 <= x_i < basis[i][i].
  std::vector<std::vector<long>> points;
  std::vector<long> x(d, 0);
  while (true) {
    points.push_back(x);
    std::size_t i = 0;
    while (i < d && ++x[i] == basis[i][i]) x[i++] = 0;
    if (i == d) break;
  }
  std::map<std::vector<long>, std::size_t> point_index;
  for (std::size_t i = 0; i < points.size(); ++i) point_index[points[i]] = i;

  FacePoset p(static_cast<int>(d) + 1);
  FaceId bottom = p.add_face(-1, "min");
  const std::size_t masks = std::size_t{1} << d;
  std::vector<std::vector<FaceId>> id(points.size(), std::vector<FaceId>(masks));
  for (std::size_t mask = 0; mask < masks; ++mask)
    for (std::size_t i = 0; i < points.size(); ++i) {
      int rank = __builtin_popcountll(mask);
      std::string rep;
      for (long c : points[i]) rep += std::to_string(c) + ",";
      rep += "/" + std::to_string(mask);
      id[i][mask] = p.add_face(rank, "F", rep);
    }
  FaceId top = p.add_face(static_cast<int>(d) + 1, "max");
  for (std::size_t i = 0; i < points.size(); ++i) {
    p.add_cover(bottom, id[i][0]);
    p.add_cover(id[i][masks - 1], top);
    for (std::size_t mask = 0; mask < masks; ++mask)
      for (std::size_t t = 0; t < d; ++t) {
        if (!(mask >> t & 1)) continue;
        std::size_t lower = mask & ~(std::size_t{1} << t);
        // The face (x, mask) contains (x, lower) and (x + e_t, lower).
        std::vector<long> shifted = points[i];
        ++shifted[t];
        std::size_t j = point_index.at(reduce_mod_lattice(shifted, basis));
        p.add_cover(id[i][lower], id[i][mask]);
        p.add_cover(id[j][lower], id[i][mask]);
      }
  }
  return p;
}

std::vector<std::vector<FaceId>> flags(const FacePoset& p) {
  std::vector<std::vector<FaceId>> out;
  const int n = p.top_rank() - 1;
  std::vector<FaceId> chain;
  auto extend = [&](auto&& self, FaceId f) -> void {
    if (p.face(f).rank == n) {
      out.push_back(chain);
      return;
    }
    for (FaceId g : p.up(f)) {
      chain.push_back(g);
      self(self, g);
      chain.pop_back();
    }
  };
  FaceId bottom = p.rank(-1).front();
  extend(extend, bottom);
  return out;
}

namespace {

struct FlagGraph {
  std::vector<std::vector<FaceId>> flags;
  std::vector<std::vector<std::int64_t>> adjacent;
};

FlagGraph flag_graph(const FacePoset& p) {
  FlagGraph g;
  g.flags = flags(p);
  std::map<std::vector<FaceId>, std::size_t> index;
  for (std::size_t i = 0; i < g.flags.size(); ++i) index[g.flags[i]] = i;
  const FaceId bottom = p.rank(-1).front();
  const FaceId top = p.rank(p.top_rank()).front();
  const std::size_t n = static_cast<std::size_t>(p.top_rank());
  g.adjacent.assign(g.flags.size(), std::vector<std::int64_t>(n, -1));
  for (std::size_t i = 0; i < g.flags.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& f = g.flags[i];
      FaceId below = j == 0 ? bottom : f[j - 1];
      FaceId above = j + 1 == n ? top : f[j + 1];
      for (FaceId h : p.up(below)) {
        if (h == f[j]) continue;
        const auto& down = p.down(h);
        if (std::find(down.begin(), down.end(), below) == down.end()) continue;
        const auto& up = p.up(h);
        if (std::find(up.begin(), up.end(), above) == up.end()) continue;
        auto other = f;
        other[j] = h;
        g.adjacent[i][j] = static_cast<std::int64_t>(index.at(other));
        break;
      }
    }
  return g;
}

bool propagate(const FlagGraph& a, std::size_t faces_a, const FlagGraph& b, std::size_t faces_b, std::size_t from,
               std::size_t to) {
  std::vector<std::int64_t> flag_map(a.flags.size(), -1), face_map(faces_a, -1), face_back(faces_b, -1);
  std::deque<std::size_t> queue{from};
  flag_map[from] = static_cast<std::int64_t>(to);
  std::size_t seen = 1;
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    auto y = static_cast<std::size_t>(flag_map[x]);
    for (std::size_t r = 0; r < a.flags[x].size(); ++r) {
      FaceId fa = a.flags[x][r], fb = b.flags[y][r];
      if (face_map[fa] == -1 && face_back[fb] == -1) {
        face_map[fa] = fb;
        face_back[fb] = fa;
      } else if (face_map[fa] != static_cast<std::int64_t>(fb) || face_back[fb] != static_cast<std::int64_t>(fa)) {
        return false;
      }
    }
    for (std::size_t j = 0; j < a.adjacent[x].size(); ++j) {
      std::int64_t ax = a.adjacent[x][j], by = b.adjacent[y][j];
      if ((ax < 0) != (by < 0)) return false;
      if (ax < 0) continue;
      if (flag_map[ax] == -1) {
        flag_map[ax] = by;
        queue.push_back(static_cast<std::size_t>(ax));
        ++seen;
      } else if (flag_map[ax] != by) {
        return false;
      }
    }
  }
  return seen == a.flags.size();
}

}  // namespace

std::size_t automorphism_count(const FacePoset& p) {
  FlagGraph g = flag_graph(p);
  std::size_t count = 0;
  for (std::size_t to = 0; to < g.flags.size(); ++to) count += propagate(g, p.size(), g, p.size(), 0, to);
  return count;
}

bool isomorphic(const FacePoset& a, const FacePoset& b) {
  if (a.top_rank() != b.top_rank() || a.size() != b.size() || a.f_vector() != b.f_vector()) return false;
  FlagGraph ga = flag_graph(a), gb = flag_graph(b);
  if (ga.flags.size() != gb.flags.size()) return false;
  if (ga.flags.empty()) return true;
  for (std::size_t to = 0; to < gb.flags.size(); ++to)
    if (propagate(ga, a.size(), gb, b.size(), 0, to)) return true;
  return false;
}

std::size_t closure_order(const std::vector<GroupElement>& gens) {
  std::set<GroupElement> seen;
  std::deque<GroupElement> queue;
  GroupElement id = identity_like(gens.front());
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    GroupElement g = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      GroupElement h = compose(g, s);
      if (seen.insert(h).second) queue.push_back(std::move(h));
    }
  }
  return seen.size();
}

std::uint64_t expected_star_group_order(std::uint64_t p) {
  const std::uint64_t p2 = p * p;
  const std::uint64_t plus = 2 * p2 * (p2 - 1) * (p2 - 1);
  const std::uint64_t minus = 2 * p2 * (p2 * p2 - 1);
  switch (p % 24) {
    case 1: case 7: return plus / 2;
    case 5: case 11: return plus;
    case 17: case 23: return minus / 2;
    case 13: case 19: return minus;
    default: throw std::invalid_argument("prime must be at least 5");
  }
}

}  // namespace polywythoff::oracle
