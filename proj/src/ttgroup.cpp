#include "polywythoff/ttgroup.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_set>

#include "polywythoff/errors.hpp"

namespace polywythoff {

std::string Label::to_string() const { return is_infinite() ? "inf" : std::to_string(value_); }

Label Label::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text == "inf" || text == "∞") return infinity();
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v == 0)
    throw ParseError("bad branch label '" + std::string(text) + "'");
  return Label(v);
}

Label TailTriangleDiagram::label(std::size_t i, std::size_t j) const {
  if (i == j) return Label(1);
  if (i > j) std::swap(i, j);
  if (j == n) {  // alpha_i with beta
    if (i + 1 == n) return k;
    if (i + 2 == n) return q;
    return Label(2);
  }
  if (j != i + 1) return Label(2);
  if (j + 1 == n) return p;
  return tail[j - 1];
}

bool TailTriangleDiagram::must_commute(std::size_t i, std::size_t j) const {
  if (i == j) return false;
  if (i > j) std::swap(i, j);
  if (j == n) return i + 2 < n;
  return j > i + 1;
}

void TailTriangleDiagram::validate() const {
  if (n == 0) throw InvalidArgument("diagram rank parameter n must be >= 1");
  std::size_t want = n >= 2 ? n - 2 : 0;
  if (tail.size() != want)
    throw InvalidArgument("diagram with n=" + std::to_string(n) + " needs " + std::to_string(want) + " tail labels");
  auto check = [](Label l) {
    if (!l.is_infinite() && l.value() < 2) throw InvalidArgument("branch label " + l.to_string() + " is below 2");
  };
  for (auto l : tail) check(l);
  check(k);
  if (n >= 2) {
    check(p);
    check(q);
  }
}

std::string TailTriangleDiagram::to_spec() const {
  if (n < 2) throw InvalidArgument("diagram spec needs n >= 2");
  std::string out = "tail=[";
  for (std::size_t i = 0; i < tail.size(); ++i) out += (i ? "," : "") + tail[i].to_string();
  out += "] triangle=(" + p.to_string() + "," + q.to_string() + "," + k.to_string() + ")";
  return out;
}

namespace {

std::vector<std::string_view> split_commas(std::string_view body) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i)
    if (i == body.size() || body[i] == ',') {
      parts.push_back(body.substr(start, i - start));
      start = i + 1;
    }
  return parts;
}

std::string_view bracketed(std::string_view text, std::string_view key, char open, char close) {
  auto at = text.find(key);
  if (at == std::string_view::npos) throw ParseError("diagram spec lacks '" + std::string(key) + "'");
  auto from = text.find(open, at + key.size());
  auto to = text.find(close, from);
  if (from == std::string_view::npos || to == std::string_view::npos)
    throw ParseError("unbalanced brackets after '" + std::string(key) + "'");
  for (auto c : text.substr(at + key.size(), from - at - key.size()))
    if (!std::isspace(static_cast<unsigned char>(c))) throw ParseError("unexpected text after '" + std::string(key) + "'");
  return text.substr(from + 1, to - from - 1);
}

}  // namespace

TailTriangleDiagram TailTriangleDiagram::parse_spec(std::string_view text) {
  TailTriangleDiagram d;
  std::string_view tail_body = bracketed(text, "tail=", '[', ']');
  std::string_view tri_body = bracketed(text, "triangle=", '(', ')');
  bool empty_tail = std::all_of(tail_body.begin(), tail_body.end(),
                                [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  if (!empty_tail)
    for (auto part : split_commas(tail_body)) d.tail.push_back(Label::parse(part));
  auto tri = split_commas(tri_body);
  if (tri.size() != 3) throw ParseError("triangle needs exactly three labels");
  d.p = Label::parse(tri[0]);
  d.q = Label::parse(tri[1]);
  d.k = Label::parse(tri[2]);
  d.n = d.tail.size() + 2;
  d.validate();
  return d;
}

TailTriangleGroup::TailTriangleGroup(TailTriangleDiagram d, FiniteGroup g)
    : diagram_(std::move(d)), group_(std::move(g)) {
  const GeneratorSet count = GeneratorSet{1} << (diagram_.n + 1);
  subsets_.reserve(count);
  for (GeneratorSet s = 0; s < count; ++s) {
    auto idx = members(s);
    subsets_.push_back(subgroup_mask(group_, idx));
  }
}

GeneratorSet TailTriangleGroup::gamma(std::size_t j) const {
  if (j + 1 == n()) return (GeneratorSet{1} << (n() - 1)) - 1;
  return all_generators() & ~(GeneratorSet{1} << j);
}

GeneratorSet TailTriangleGroup::facet_p() const { return (GeneratorSet{1} << n()) - 1; }

GeneratorSet TailTriangleGroup::facet_q() const {
  return ((GeneratorSet{1} << (n() - 1)) - 1) | (GeneratorSet{1} << n());
}

GeneratorSet TailTriangleGroup::gamma_plus(int i) const {
  GeneratorSet low = (GeneratorSet{1} << (i + 1)) - 1;
  return all_generators() & ~low;
}

std::vector<std::size_t> TailTriangleGroup::members(GeneratorSet set) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= n(); ++i)
    if (set >> i & 1u) out.push_back(i);
  return out;
}

std::vector<ElementIndex> TailTriangleGroup::member_elements(GeneratorSet set) const {
  std::vector<ElementIndex> out;
  for (auto i : members(set)) out.push_back(group_.right_mul(0, i));
  return out;
}

namespace {

Label measured_label(const GroupElement& a, const GroupElement& b) {
  auto ord = element_order(compose(a, b));
  return ord ? Label(*ord) : Label::infinity();
}

}  // namespace

TailTriangleGroup verify_tail_triangle(std::vector<GroupElement> alphas, GroupElement beta, std::size_t cap) {
  if (alphas.empty()) throw InvalidArgument("tail-triangle group needs at least one alpha generator");
  std::vector<GroupElement> gens = std::move(alphas);
  gens.push_back(std::move(beta));
  const std::size_t n = gens.size() - 1;

  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!same_kind(gens[i], gens[0])) throw KindMismatch("generators of mixed kind");
    if (is_identity(gens[i]) || !is_identity(compose(gens[i], gens[i]))) throw NotInvolution(i);
  }

  TailTriangleDiagram d;
  d.n = n;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (d.must_commute(i, j)) {
        GroupElement ab = compose(gens[i], gens[j]);
        if (!is_identity(compose(ab, ab))) throw CommutationViolation(i, j);
      }

  FiniteGroup group = FiniteGroup::closure(gens, cap);

  for (std::size_t j = 1; j + 1 < n; ++j) d.tail.push_back(measured_label(gens[j - 1], gens[j]));
  d.k = measured_label(gens[n - 1], gens[n]);
  if (n >= 2) {
    d.p = measured_label(gens[n - 2], gens[n - 1]);
    d.q = measured_label(gens[n - 2], gens[n]);
  }
  return TailTriangleGroup(std::move(d), std::move(group));
}

TailTriangleGroup reorder_star(const TailTriangleGroup& g, int ringing) {
  if (g.n() != 3) throw InvalidArgument("ringings are defined for n = 3 star diagrams");
  if (g.diagram().k != Label(2)) throw InvalidArgument("ringings need a star diagram (k = 2)");
  const auto& s = g.generators();
  switch (ringing) {
    case 1:
      return verify_tail_triangle({s[0], s[1], s[2]}, s[3]);
    case 2:
      return verify_tail_triangle({s[2], s[1], s[0]}, s[3]);
    case 3:
      return verify_tail_triangle({s[3], s[1], s[2]}, s[0]);
    default:
      throw InvalidArgument("ringing must be 1, 2 or 3");
  }
}

namespace {

std::string describe_set(GeneratorSet set, std::size_t n) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i <= n; ++i)
    if (set >> i & 1u) {
      out += first ? "" : ",";
      out += i == n ? std::string("b") : "a" + std::to_string(i);
      first = false;
    }
  return out + "}";
}

GeneratorSet bits_of(std::span<const std::size_t> indices) {
  GeneratorSet s = 0;
  for (auto i : indices) s |= GeneratorSet{1} << i;
  return s;
}

/// Checks |<X> ∩ <Y>| = |<Z>| with Z ⊆ X ∩ Y, recording a witness on failure.
bool check_condition(const TailTriangleGroup& g, GeneratorSet x, GeneratorSet y, GeneratorSet z,
                     IntersectionReport& report) {
  ++report.conditions_checked;
  const auto& a = g.generated(x).members;
  const auto& b = g.generated(y).members;
  const auto& c = g.generated(z);
  boost::dynamic_bitset<> both = a & b;
  if (both.count() == c.order) return true;
  boost::dynamic_bitset<> extra = both - c.members;
  auto pos = extra.find_first();
  report.passed = false;
  report.witness = IntersectionWitness{x, y, g.group().element(static_cast<ElementIndex>(pos))};
  report.detail = "<" + describe_set(x, g.n()) + "> meets <" + describe_set(y, g.n()) + "> in " +
                  std::to_string(both.count()) + " elements, expected " + std::to_string(c.order) + "; witness " +
                  to_string(report.witness->element);
  return false;
}

/// String C-group check of an ordered generator list, with subgroups looked up by local subset.
StringCGroupReport string_check(std::size_t m, const std::function<GroupElement(std::size_t)>& gen,
                                const std::function<const SubgroupMask&(std::uint32_t)>& sub,
                                const std::function<std::string(std::size_t)>& name) {
  StringCGroupReport rep;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 2; j < m; ++j) {
      GroupElement ab = compose(gen(i), gen(j));
      if (!is_identity(compose(ab, ab))) {
        rep.detail = "generators " + name(i) + " and " + name(j) + " do not commute";
        return rep;
      }
    }
  const std::uint32_t count = std::uint32_t{1} << m;
  for (std::uint32_t x = 0; x < count; ++x)
    for (std::uint32_t y = x + 1; y < count; ++y) {
      if ((x & y) == x || (x & y) == y) continue;
      auto both = sub(x).members & sub(y).members;
      if (both.count() != sub(x & y).order) {
        rep.detail = "intersection condition fails for local subsets " + std::to_string(x) + " and " +
                     std::to_string(y);
        return rep;
      }
    }
  rep.passed = true;
  return rep;
}

std::string gen_name(std::size_t i, std::size_t n) { return i == n ? "b" : "a" + std::to_string(i); }

IntersectionReport reduced_check(const TailTriangleGroup& g, const std::vector<std::size_t>& alphas,
                                 std::size_t beta) {
  IntersectionReport report;
  report.passed = true;
  const std::size_t m = alphas.size();
  const std::size_t n = g.n();
  auto range = [&](std::size_t lo, std::size_t hi) {  // alphas[lo..hi)
    std::vector<std::size_t> v(alphas.begin() + lo, alphas.begin() + hi);
    return v;
  };

  if (m >= 2) {
    auto p_list = range(0, m);
    auto q_list = range(0, m - 1);
    q_list.push_back(beta);
    for (const auto* list : {&p_list, &q_list}) {
      auto r = is_string_c_group(g, *list);
      if (!r.passed) {
        report.passed = false;
        report.precondition_failed = true;
        report.detail = "facet group <" + describe_set(bits_of(*list), n) + "> is not a string C-group: " + r.detail;
        return report;
      }
    }
    IntersectionReport sub = reduced_check(g, range(1, m), beta);
    report.conditions_checked += sub.conditions_checked;
    if (!sub.passed) {
      report.passed = false;
      report.precondition_failed = true;
      report.witness = sub.witness;
      report.detail = "vertex-stabilizer group is not a tail-triangle C-group: " + sub.detail;
      return report;
    }
  }

  const GeneratorSet bbit = GeneratorSet{1} << beta;
  auto set_of = [&](std::size_t lo, std::size_t hi) {
    auto v = range(lo, hi);
    return bits_of(v);
  };
  GeneratorSet p = set_of(0, m);
  GeneratorSet q = set_of(0, m - 1) | bbit;
  if (!check_condition(g, p, q, set_of(0, m - 1), report)) return report;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    GeneratorSet plus = set_of(i + 1, m) | bbit;
    if (!check_condition(g, plus, p, set_of(i + 1, m), report)) return report;
    if (!check_condition(g, plus, q, set_of(i + 1, m - 1) | bbit, report)) return report;
  }
  return report;
}

}  // namespace

IntersectionReport check_intersection_full(const TailTriangleGroup& g) {
  IntersectionReport report;
  report.passed = true;
  const GeneratorSet count = g.all_generators() + 1;
  for (GeneratorSet x = 0; x < count; ++x)
    for (GeneratorSet y = x + 1; y < count; ++y) {
      if ((x & y) == x || (x & y) == y) {
        ++report.conditions_checked;
        continue;
      }
      if (!check_condition(g, x, y, x & y, report)) return report;
    }
  return report;
}

IntersectionReport check_intersection_reduced(const TailTriangleGroup& g) {
  std::vector<std::size_t> alphas(g.n());
  for (std::size_t i = 0; i < g.n(); ++i) alphas[i] = i;
  return reduced_check(g, alphas, g.beta_index());
}

IntersectionReport check_intersection_n3_shortcut(const TailTriangleGroup& g) {
  if (g.n() != 3) throw InvalidArgument("the shortcut applies to n = 3 only");
  IntersectionReport report;
  report.passed = true;
  const std::vector<std::vector<std::size_t>> pre = {{0, 1, 2}, {0, 1, 3}};
  for (const auto& list : pre) {
    auto r = is_string_c_group(g, list);
    if (!r.passed) {
      report.passed = false;
      report.precondition_failed = true;
      report.detail = "facet group is not a string C-group: " + r.detail;
      return report;
    }
  }
  IntersectionReport vertex = reduced_check(g, {1, 2}, 3);
  if (!vertex.passed) {
    vertex.precondition_failed = true;
    return vertex;
  }
  const GeneratorSet p = g.facet_p(), q = g.facet_q(), v = g.gamma(0);
  if (!check_condition(g, p, q, p & q, report)) return report;
  if (!check_condition(g, v, p, v & p, report)) return report;
  check_condition(g, v, q, v & q, report);
  return report;
}

bool distinguished_subgroups_distinct(const TailTriangleGroup& g) {
  std::set<boost::dynamic_bitset<>> seen;
  for (GeneratorSet s = 0; s <= g.all_generators(); ++s)
    if (!seen.insert(g.generated(s).members).second) return false;
  return true;
}

StringCGroupReport is_string_c_group(std::span<const GroupElement> generators, std::size_t cap) {
  StringCGroupReport rep;
  if (generators.empty()) {
    rep.passed = true;
    return rep;
  }
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (is_identity(generators[i]) || !is_identity(compose(generators[i], generators[i]))) {
      rep.detail = "generator " + std::to_string(i) + " is not an involution";
      return rep;
    }
  FiniteGroup group = FiniteGroup::closure(generators, cap);
  const std::size_t m = generators.size();
  std::vector<SubgroupMask> masks;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << m); ++s) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < m; ++i)
      if (s >> i & 1u) idx.push_back(i);
    masks.push_back(subgroup_mask(group, idx));
  }
  return string_check(
      m, [&](std::size_t i) { return generators[i]; },
      [&](std::uint32_t s) -> const SubgroupMask& { return masks[s]; },
      [](std::size_t i) { return "r" + std::to_string(i); });
}

StringCGroupReport is_string_c_group(const TailTriangleGroup& g, std::span<const std::size_t> ordered) {
  auto global = [&](std::uint32_t local) {
    GeneratorSet s = 0;
    for (std::size_t i = 0; i < ordered.size(); ++i)
      if (local >> i & 1u) s |= GeneratorSet{1} << ordered[i];
    return s;
  };
  return string_check(
      ordered.size(), [&](std::size_t i) { return g.generators()[ordered[i]]; },
      [&](std::uint32_t s) -> const SubgroupMask& { return g.generated(global(s)); },
      [&](std::size_t i) { return gen_name(ordered[i], g.n()); });
}

std::vector<Label> schlafli_type(std::span<const GroupElement> generators) {
  std::vector<Label> out;
  for (std::size_t i = 0; i + 1 < generators.size(); ++i) out.push_back(measured_label(generators[i], generators[i + 1]));
  return out;
}

std::string format_schlafli(std::span<const Label> labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "," : "") + labels[i].to_string();
  return out + "}";
}

std::optional<std::vector<GroupElement>> homomorphism_images(const FiniteGroup& source,
                                                             std::span<const GroupElement> target_gens) {
  if (target_gens.size() != source.generators().size())
    throw InvalidArgument("generator lists of different length");
  if (target_gens.empty()) return std::nullopt;
  std::vector<std::optional<GroupElement>> image(source.order());
  image[0] = identity_like(target_gens.front());
  // Elements are stored in breadth-first order, so every element's image is
  // assigned before it is used as a source of further edges.
  for (ElementIndex cur = 0; cur < source.order(); ++cur)
    for (std::size_t gi = 0; gi < target_gens.size(); ++gi) {
      ElementIndex next = source.right_mul(cur, gi);
      GroupElement img = compose(*image[cur], target_gens[gi]);
      if (!image[next])
        image[next] = std::move(img);
      else if (*image[next] != img)
        return std::nullopt;
    }
  std::vector<GroupElement> out;
  out.reserve(image.size());
  for (auto& x : image) out.push_back(std::move(*x));
  return out;
}

bool extends_to_homomorphism(const FiniteGroup& source, std::span<const GroupElement> target_gens,
                             std::size_t* image_order) {
  if (target_gens.size() != source.generators().size())
    throw InvalidArgument("generator lists of different length");
  if (source.generators().empty()) {
    if (image_order) *image_order = 1;
    return true;
  }
  auto images = homomorphism_images(source, target_gens);
  if (!images) return false;
  if (image_order) {
    std::unordered_set<GroupElement, ElementHash> distinct(images->begin(), images->end());
    *image_order = distinct.size();
  }
  return true;
}

}  // namespace polywythoff
