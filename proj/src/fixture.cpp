#include "polywythoff/fixture.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "polywythoff/errors.hpp"

namespace polywythoff {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_count(std::string_view text, std::size_t line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError("expected a number, got '" + std::string(text) + "'", line);
  return v;
}

/// key=value pairs after a leading keyword.
std::map<std::string, std::uint64_t> parse_pairs(std::string_view rest, std::size_t line) {
  std::map<std::string, std::uint64_t> out;
  std::istringstream is{std::string(rest)};
  std::string tok;
  while (is >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value, got '" + tok + "'", line);
    out[tok.substr(0, eq)] = parse_count(std::string_view(tok).substr(eq + 1), line);
  }
  return out;
}

struct RawFixture {
  std::size_t n = 0;
  ElementSpace space;
  std::map<std::string, std::pair<GroupElement, std::size_t>> elements;  // name -> (element, line)
  std::optional<std::uint64_t> expect_order;
};

RawFixture parse_raw(std::string_view text, std::string_view keyword) {
  RawFixture raw;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (!have_header) {
      if (!line.starts_with(keyword))
        throw ParseError("expected header '" + std::string(keyword) + " n=...'", line_no);
      auto kv = parse_pairs(line.substr(keyword.size()), line_no);
      for (const auto& [key, value] : kv)
        if (key != "n" && key != "degree" && key != "mod" && key != "dim")
          throw ParseError("unknown header field '" + key + "'", line_no);
      if (!kv.count("n") || kv["n"] < 1) throw ParseError("header needs n >= 1", line_no);
      raw.n = kv["n"];
      if (kv.count("mod")) {
        if (!kv.count("dim") || kv.count("degree")) throw ParseError("matrix header needs mod= and dim=", line_no);
        raw.space.modulus = static_cast<std::uint32_t>(kv["mod"]);
        raw.space.dim = kv["dim"];
      } else {
        if (!kv.count("degree") || kv.count("dim")) throw ParseError("permutation header needs degree=", line_no);
        raw.space.degree = kv["degree"];
      }
      have_header = true;
      continue;
    }

    if (line.starts_with("expect")) {
      auto kv = parse_pairs(line.substr(6), line_no);
      if (kv.size() != 1 || !kv.count("order")) throw ParseError("expected 'expect order=<m>'", line_no);
      raw.expect_order = kv["order"];
      continue;
    }

    auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected '<name> = <element>'", line_no);
    std::string name(trim(line.substr(0, eq)));
    std::string_view value = trim(line.substr(eq + 1));
    GroupElement g;
    try {
      g = parse_element(value, raw.space.degree);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    } catch (const Error& e) {
      throw ParseError(e.what(), line_no);
    }
    if (raw.space.is_matrix()) {
      const auto* m = std::get_if<MatModP>(&g);
      if (!m || m->modulus() != raw.space.modulus || m->dim() != raw.space.dim)
        throw ParseError("element does not match the header's mod/dim", line_no);
    } else if (!std::holds_alternative<Perm>(g)) {
      throw ParseError("matrix element in a permutation fixture", line_no);
    }
    if (raw.elements.count(name)) throw ParseError("duplicate generator '" + name + "'", line_no);
    raw.elements.emplace(name, std::make_pair(std::move(g), line_no));
  }
  if (!have_header) throw ParseError("empty fixture");
  return raw;
}

GroupElement take(RawFixture& raw, const std::string& name) {
  auto it = raw.elements.find(name);
  if (it == raw.elements.end()) throw ParseError("missing generator '" + name + "'");
  GroupElement g = std::move(it->second.first);
  raw.elements.erase(it);
  return g;
}

void reject_leftovers(const RawFixture& raw) {
  if (!raw.elements.empty()) {
    const auto& [name, entry] = *raw.elements.begin();
    throw ParseError("unexpected generator '" + name + "'", entry.second);
  }
}

std::string header(std::string_view keyword, std::size_t n, const ElementSpace& space) {
  std::string out = std::string(keyword) + " n=" + std::to_string(n);
  if (space.is_matrix())
    out += " mod=" + std::to_string(space.modulus) + " dim=" + std::to_string(space.dim);
  else
    out += " degree=" + std::to_string(space.degree);
  return out + "\n";
}

}  // namespace

TailTriangleFixture parse_tail_triangle_fixture(std::string_view text) {
  RawFixture raw = parse_raw(text, "tail-triangle");
  TailTriangleFixture f;
  f.n = raw.n;
  f.space = raw.space;
  for (std::size_t i = 0; i < raw.n; ++i) f.alphas.push_back(take(raw, "alpha" + std::to_string(i)));
  f.beta = take(raw, "beta");
  reject_leftovers(raw);
  f.expect_order = raw.expect_order;
  return f;
}

std::string print_fixture(const TailTriangleFixture& f) {
  std::string out = header("tail-triangle", f.n, f.space);
  for (std::size_t i = 0; i < f.alphas.size(); ++i)
    out += "alpha" + std::to_string(i) + " = " + to_string(f.alphas[i]) + "\n";
  out += "beta = " + to_string(f.beta) + "\n";
  if (f.expect_order) out += "expect order=" + std::to_string(*f.expect_order) + "\n";
  return out;
}

StringFixture parse_string_fixture(std::string_view text) {
  RawFixture raw = parse_raw(text, "string-c-group");
  StringFixture f;
  f.n = raw.n;
  f.space = raw.space;
  for (std::size_t i = 0; i < raw.n; ++i) f.rhos.push_back(take(raw, "rho" + std::to_string(i)));
  reject_leftovers(raw);
  f.expect_order = raw.expect_order;
  return f;
}

std::string print_fixture(const StringFixture& f) {
  std::string out = header("string-c-group", f.n, f.space);
  for (std::size_t i = 0; i < f.rhos.size(); ++i)
    out += "rho" + std::to_string(i) + " = " + to_string(f.rhos[i]) + "\n";
  if (f.expect_order) out += "expect order=" + std::to_string(*f.expect_order) + "\n";
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace polywythoff
