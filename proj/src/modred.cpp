#include "polywythoff/modred.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "polywythoff/errors.hpp"

namespace polywythoff {

std::vector<Rational> parse_lengths(std::string_view text) {
  std::vector<Rational> out;
  std::string s(text);
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) {
    long long num = 0, den = 1;
    try {
      auto slash = tok.find('/');
      std::size_t used = 0;
      num = std::stoll(tok.substr(0, slash), &used);
      if (used != (slash == std::string::npos ? tok.size() : slash)) throw std::invalid_argument(tok);
      if (slash != std::string::npos) {
        den = std::stoll(tok.substr(slash + 1), &used);
        if (used != tok.size() - slash - 1) throw std::invalid_argument(tok);
      }
    } catch (const std::logic_error&) {
      throw ParseError("bad squared length '" + tok + "'");
    }
    if (num <= 0 || den <= 0) throw ParseError("squared lengths must be positive");
    out.emplace_back(num, den);
  }
  if (out.empty()) throw ParseError("no squared lengths given");
  return out;
}

std::string format_lengths(const std::vector<Rational>& lengths) {
  std::string out;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(lengths[i].numerator());
    if (lengths[i].denominator() != 1) out += "/" + std::to_string(lengths[i].denominator());
  }
  return out;
}

int four_cos_squared(Label m) {
  if (m.is_infinite()) return 4;
  switch (m.value()) {
    case 2: return 0;
    case 3: return 1;
    case 4: return 2;
    case 6: return 3;
    default: throw InvalidArgument("label " + m.to_string() + " is not crystallographic");
  }
}

CrystallographicVerdict is_crystallographic(const TailTriangleDiagram& d) {
  CrystallographicVerdict v;
  auto allowed = [](Label l) {
    return l.is_infinite() || l.value() == 2 || l.value() == 3 || l.value() == 4 || l.value() == 6;
  };
  const std::size_t gens = d.n + 1;
  for (std::size_t i = 0; i < gens; ++i)
    for (std::size_t j = i + 1; j < gens; ++j)
      if (!allowed(d.label(i, j))) {
        v.reason = "label " + d.label(i, j).to_string() + " on pair (" + std::to_string(i) + "," +
                   std::to_string(j) + ") is not in {2,3,4,6,inf}";
        return v;
      }
  if (d.n >= 2) {
    const Label tri[] = {d.p, d.q, d.k};
    bool circuit = std::none_of(std::begin(tri), std::end(tri), [](Label l) { return l == Label(2); });
    if (circuit) {
      auto count = [&](std::uint64_t m) { return std::count(std::begin(tri), std::end(tri), Label(m)); };
      if (count(4) == 1 || count(4) == 3) {
        v.reason = "triangular circuit has " + std::to_string(count(4)) + " branches labelled 4";
        return v;
      }
      if (count(6) == 1 || count(6) == 3) {
        v.reason = "triangular circuit has " + std::to_string(count(6)) + " branches labelled 6";
        return v;
      }
    }
  }
  v.yes = true;
  return v;
}

namespace {

/// Integer square root of a rational, when it is the square of an integer.
std::optional<long long> integral_sqrt(Rational x) {
  if (x.denominator() != 1 || x.numerator() < 0) return std::nullopt;
  auto r = static_cast<long long>(std::llround(std::sqrt(static_cast<long double>(x.numerator()))));
  for (long long c = std::max(0LL, r - 1); c <= r + 1; ++c)
    if (c * c == x.numerator()) return c;
  return std::nullopt;
}

long long mod_reduce(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  return r < 0 ? r + p : r;
}

std::optional<std::uint32_t> rational_mod(Rational x, std::uint32_t p) {
  long long den = mod_reduce(x.denominator(), p);
  if (den == 0) return std::nullopt;
  // den^(p-2) mod p
  long long inv = 1, base = den, e = p - 2;
  while (e > 0) {
    if (e & 1) inv = inv * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(mod_reduce(x.numerator(), p) * inv % p);
}

}  // namespace

IntegralReflectionSystem rescale(const TailTriangleDiagram& d, const std::vector<Rational>& squared_lengths) {
  d.validate();
  auto verdict = is_crystallographic(d);
  if (!verdict.yes) throw InvalidArgument("diagram is not crystallographic: " + verdict.reason);
  const std::size_t dim = d.n + 1;
  if (squared_lengths.size() != dim)
    throw InvalidArgument("need " + std::to_string(dim) + " squared lengths, got " +
                          std::to_string(squared_lengths.size()));
  for (const auto& l : squared_lengths)
    if (l <= Rational(0)) throw InvalidArgument("squared lengths must be positive");

  IntegralReflectionSystem sys;
  sys.diagram = d;
  sys.squared_lengths = squared_lengths;
  sys.structure.assign(dim, std::vector<long long>(dim, 0));
  sys.gram.assign(dim, std::vector<Rational>(dim, 0));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      if (i == j) {
        sys.structure[i][j] = -2;
        continue;
      }
      // l_{i,j}^2 = 4cos^2(pi/m) * |c_j|^2 / |c_i|^2, with l_{i,j} >= 0.
      Rational sq = Rational(four_cos_squared(d.label(i, j))) * squared_lengths[j] / squared_lengths[i];
      auto root = integral_sqrt(sq);
      if (!root) throw NonIntegralSystem(i, j);
      sys.structure[i][j] = *root;
    }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      sys.gram[i][j] = i == j ? squared_lengths[i] : Rational(-sys.structure[i][j]) * squared_lengths[i] / 2;

  for (std::size_t g = 0; g < dim; ++g) {
    std::vector<long long> m(dim * dim, 0);
    for (std::size_t i = 0; i < dim; ++i) m[i * dim + i] = 1;
    for (std::size_t j = 0; j < dim; ++j) m[g * dim + j] += sys.structure[g][j];
    sys.generators.push_back(std::move(m));
  }
  return sys;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == Rational(0)) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

bool preserves_form(const IntegralReflectionSystem& sys) {
  const std::size_t n = sys.dim();
  for (const auto& g : sys.generators)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational sum = 0;
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) sum += Rational(g[a * n + i]) * sys.gram[a][b] * Rational(g[b * n + j]);
        if (sum != sys.gram[i][j]) return false;
      }
  return true;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

ModPGroupSpec reduce_mod_p(const IntegralReflectionSystem& sys, std::uint32_t p) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  ModPGroupSpec spec;
  spec.p = p;
  spec.n = sys.diagram.n;
  const std::size_t dim = sys.dim();
  for (std::size_t g = 0; g < dim; ++g) {
    MatModP m = MatModP::from_integers(p, dim, sys.generators[g]);
    if (!(m * m).is_identity()) throw NotInvolution(g);
    spec.generators.push_back(std::move(m));
  }
  spec.discriminant = determinant(sys.gram);
  spec.discriminant_mod_p = rational_mod(spec.discriminant, p);
  std::vector<std::vector<std::uint32_t>> gram(dim, std::vector<std::uint32_t>(dim));
  bool ok = true;
  for (std::size_t i = 0; i < dim && ok; ++i)
    for (std::size_t j = 0; j < dim && ok; ++j) {
      auto v = rational_mod(sys.gram[i][j], p);
      if (!v) ok = false;
      else gram[i][j] = *v;
    }
  if (ok) spec.gram_mod_p = std::move(gram);
  return spec;
}

TailTriangleGroup build_tail_triangle_modp(const ModPGroupSpec& spec, std::size_t cap) {
  std::vector<GroupElement> alphas(spec.generators.begin(), spec.generators.end() - 1);
  TailTriangleGroup g = verify_tail_triangle(std::move(alphas), spec.generators.back(), cap);
  auto check = check_intersection_reduced(g);
  if (!check.passed) throw NotCGroup("reduction mod " + std::to_string(spec.p) + " is not a C-group: " + check.detail);
  return g;
}

RingingsReport three_ringings(const TailTriangleGroup& base) {
  if (base.n() != 3) throw InvalidArgument("three ringings need n = 3");
  RingingsReport rep;
  for (int r = 1; r <= 3; ++r) {
    TailTriangleGroup g = reorder_star(base, r);
    CosetPoset poly = build_polytope(g);
    Classification cls = classify(g);
    rep.builds.push_back(RingingBuild{r, std::move(g), std::move(poly), cls});
  }
  rep.isomorphic.assign(3, std::vector<bool>(3, true));
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      rep.isomorphic[a][b] = rep.isomorphic[b][a] =
          poset_isomorphic(rep.builds[a].polytope.poset, rep.builds[b].polytope.poset);
  return rep;
}

std::vector<LengthSearchRow> search_lengths(const TailTriangleDiagram& d, std::uint32_t p, std::size_t cap) {
  const std::vector<Rational> choices = {Rational(1, 6), Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(1),
                                         Rational(2),    Rational(3),    Rational(4),    Rational(6)};
  const std::size_t dim = d.n + 1;
  std::vector<LengthSearchRow> rows;
  std::vector<std::size_t> pick(dim - 1, 0);
  while (true) {
    std::vector<Rational> lengths{Rational(1)};
    for (auto c : pick) lengths.push_back(choices[c]);
    try {
      IntegralReflectionSystem sys = rescale(d, lengths);
      LengthSearchRow row;
      row.lengths = lengths;
      try {
        ModPGroupSpec spec = reduce_mod_p(sys, p);
        std::vector<GroupElement> alphas(spec.generators.begin(), spec.generators.end() - 1);
        TailTriangleGroup g = verify_tail_triangle(std::move(alphas), spec.generators.back(), cap);
        row.order = g.order();
        auto check = check_intersection_reduced(g);
        row.c_group = check.passed;
        row.detail = check.passed ? "tail-triangle C-group" : check.detail;
      } catch (const Error& e) {
        row.detail = e.what();
      }
      rows.push_back(std::move(row));
    } catch (const NonIntegralSystem&) {
    }
    std::size_t pos = 0;
    while (pos < pick.size() && ++pick[pos] == choices.size()) pick[pos++] = 0;
    if (pos == pick.size()) break;
  }
  return rows;
}

}  // namespace polywythoff
