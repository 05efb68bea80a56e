#include "polywythoff/element.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "polywythoff/errors.hpp"

namespace polywythoff {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

// ---------------------------------------------------------------- Perm

Perm::Perm(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) throw InvalidArgument("Perm: images are not a bijection");
    seen[x] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<std::uint32_t> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<std::uint32_t>(i);
  return Perm(std::move(img));
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<std::uint32_t>(i);
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      std::uint32_t from = c[i];
      std::uint32_t to = c[(i + 1) % c.size()];
      if (from < 1 || from > degree || to < 1 || to > degree)
        throw ParseError("cycle point out of range 1.." + std::to_string(degree));
      if (used[from - 1]) throw ParseError("point " + std::to_string(from) + " repeated in cycles");
      used[from - 1] = true;
      img[from - 1] = to - 1;
    }
  }
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<std::uint32_t>(i);
  return Perm(std::move(inv));
}

std::string Perm::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += ',';
      out += std::to_string(x + 1);
      first = false;
      x = images_[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw KindMismatch("permutation degrees differ");
  std::vector<std::uint32_t> img(a.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = b[a[i]];
  return Perm(std::move(img));
}

// ---------------------------------------------------------------- MatModP

MatModP::MatModP(std::uint32_t p, std::size_t dim, std::vector<std::uint32_t> entries)
    : p_(p), dim_(dim), entries_(std::move(entries)) {
  if (p < 2) throw InvalidArgument("MatModP: modulus must be >= 2");
  if (entries_.size() != dim * dim) throw InvalidArgument("MatModP: entry count is not dim*dim");
  for (auto e : entries_)
    if (e >= p) throw InvalidArgument("MatModP: entry not reduced mod p");
}

MatModP MatModP::from_integers(std::uint32_t p, std::size_t dim, const std::vector<long long>& entries) {
  std::vector<std::uint32_t> e(entries.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    long long r = entries[i] % static_cast<long long>(p);
    if (r < 0) r += p;
    e[i] = static_cast<std::uint32_t>(r);
  }
  return MatModP(p, dim, std::move(e));
}

MatModP MatModP::identity(std::uint32_t p, std::size_t dim) {
  std::vector<std::uint32_t> e(dim * dim, 0);
  for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1 % p;
  return MatModP(p, dim, std::move(e));
}

bool MatModP::is_identity() const {
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c)
      if (at(r, c) != (r == c ? 1u % p_ : 0u)) return false;
  return true;
}

std::uint32_t MatModP::determinant() const {
  // Gaussian elimination over Z_p; assumes p prime.
  std::vector<std::uint64_t> m(entries_.begin(), entries_.end());
  std::uint64_t det = 1;
  for (std::size_t col = 0; col < dim_; ++col) {
    std::size_t pivot = col;
    while (pivot < dim_ && m[pivot * dim_ + col] == 0) ++pivot;
    if (pivot == dim_) return 0;
    if (pivot != col) {
      for (std::size_t c = 0; c < dim_; ++c) std::swap(m[pivot * dim_ + c], m[col * dim_ + c]);
      det = (p_ - det) % p_;
    }
    std::uint64_t pv = m[col * dim_ + col];
    det = det * pv % p_;
    std::uint64_t inv = mod_pow(pv, p_ - 2, p_);
    for (std::size_t r = col + 1; r < dim_; ++r) {
      std::uint64_t f = m[r * dim_ + col] * inv % p_;
      if (!f) continue;
      for (std::size_t c = col; c < dim_; ++c)
        m[r * dim_ + c] = (m[r * dim_ + c] + (p_ - f) * m[col * dim_ + c]) % p_;
    }
  }
  return static_cast<std::uint32_t>(det);
}

MatModP MatModP::inverse() const {
  // Gauss-Jordan on [M | I].
  std::size_t w = 2 * dim_;
  std::vector<std::uint64_t> m(dim_ * w, 0);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) m[r * w + c] = at(r, c);
    m[r * w + dim_ + r] = 1 % p_;
  }
  for (std::size_t col = 0; col < dim_; ++col) {
    std::size_t pivot = col;
    while (pivot < dim_ && m[pivot * w + col] == 0) ++pivot;
    if (pivot == dim_) throw InvalidArgument("MatModP: matrix is singular mod p");
    if (pivot != col)
      for (std::size_t c = 0; c < w; ++c) std::swap(m[pivot * w + c], m[col * w + c]);
    std::uint64_t inv = mod_pow(m[col * w + col], p_ - 2, p_);
    for (std::size_t c = 0; c < w; ++c) m[col * w + c] = m[col * w + c] * inv % p_;
    for (std::size_t r = 0; r < dim_; ++r) {
      if (r == col) continue;
      std::uint64_t f = m[r * w + col];
      if (!f) continue;
      for (std::size_t c = 0; c < w; ++c) m[r * w + c] = (m[r * w + c] + (p_ - f) * m[col * w + c]) % p_;
    }
  }
  std::vector<std::uint32_t> e(dim_ * dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) e[r * dim_ + c] = static_cast<std::uint32_t>(m[r * w + dim_ + c]);
  return MatModP(p_, dim_, std::move(e));
}

std::string MatModP::to_string() const {
  std::ostringstream os;
  os << "mod " << p_ << " dim " << dim_ << " [";
  for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i];
  os << "]";
  return os.str();
}

MatModP operator*(const MatModP& a, const MatModP& b) {
  if (a.modulus() != b.modulus() || a.dim() != b.dim()) throw KindMismatch("matrix modulus or dimension differ");
  std::size_t d = a.dim();
  std::uint64_t p = a.modulus();
  std::vector<std::uint32_t> e(d * d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      std::uint64_t s = 0;
      for (std::size_t k = 0; k < d; ++k) s += static_cast<std::uint64_t>(a.at(r, k)) * b.at(k, c);
      e[r * d + c] = static_cast<std::uint32_t>(s % p);
    }
  return MatModP(a.modulus(), d, std::move(e));
}

// ---------------------------------------------------------------- GroupElement

GroupElement compose(const GroupElement& a, const GroupElement& b) {
  if (a.index() != b.index()) throw KindMismatch("cannot compose a permutation with a matrix");
  if (const auto* pa = std::get_if<Perm>(&a)) return *pa * std::get<Perm>(b);
  return std::get<MatModP>(a) * std::get<MatModP>(b);
}

GroupElement inverse(const GroupElement& g) {
  return std::visit([](const auto& x) -> GroupElement { return x.inverse(); }, g);
}

bool is_identity(const GroupElement& g) {
  return std::visit([](const auto& x) { return x.is_identity(); }, g);
}

GroupElement identity_like(const GroupElement& g) {
  if (const auto* p = std::get_if<Perm>(&g)) return Perm::identity(p->degree());
  const auto& m = std::get<MatModP>(g);
  return MatModP::identity(m.modulus(), m.dim());
}

bool same_kind(const GroupElement& a, const GroupElement& b) {
  if (a.index() != b.index()) return false;
  if (const auto* p = std::get_if<Perm>(&a)) return p->degree() == std::get<Perm>(b).degree();
  const auto& ma = std::get<MatModP>(a);
  const auto& mb = std::get<MatModP>(b);
  return ma.modulus() == mb.modulus() && ma.dim() == mb.dim();
}

GroupElement power(const GroupElement& g, std::uint64_t e) {
  GroupElement result = identity_like(g);
  GroupElement base = g;
  while (e) {
    if (e & 1) result = compose(result, base);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

std::string to_string(const GroupElement& g) {
  if (const auto* p = std::get_if<Perm>(&g)) return p->to_cycle_string();
  return std::get<MatModP>(g).to_string();
}

Perm parse_perm(std::string_view text, std::size_t degree) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty permutation");
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw ParseError("expected '(' in permutation '" + std::string(text) + "'");
    ++i;
    std::vector<std::uint32_t> cycle;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw ParseError("expected point in permutation '" + std::string(text) + "'");
      cycle.push_back(static_cast<std::uint32_t>(std::stoul(std::string(text.substr(start, i - start)))));
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i;
      else if (i >= text.size() || text[i] != ')') throw ParseError("unterminated cycle in '" + std::string(text) + "'");
    }
    if (cycle.size() == 1) throw ParseError("cycles of length 1 are not allowed");
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
  }
  return Perm::from_cycles(degree, cycles);
}

MatModP parse_matrix(std::string_view text) {
  std::string s(trim(text));
  for (char& c : s)
    if (c == '[' || c == ']' || c == ',') c = ' ';
  std::istringstream is(s);
  std::string kw_mod, kw_dim;
  long long p = 0, d = 0;
  if (!(is >> kw_mod >> p >> kw_dim >> d) || kw_mod != "mod" || kw_dim != "dim" || p < 2 || d < 1)
    throw ParseError("expected 'mod <p> dim <d> [entries]' in '" + std::string(text) + "'");
  std::vector<long long> entries;
  long long v;
  while (is >> v) entries.push_back(v);
  if (!is.eof()) throw ParseError("non-integer matrix entry in '" + std::string(text) + "'");
  if (entries.size() != static_cast<std::size_t>(d * d))
    throw ParseError("matrix needs " + std::to_string(d * d) + " entries");
  return MatModP::from_integers(static_cast<std::uint32_t>(p), static_cast<std::size_t>(d), entries);
}

GroupElement parse_element(std::string_view text, std::size_t degree) {
  auto t = trim(text);
  if (t.starts_with("mod")) return parse_matrix(t);
  return parse_perm(t, degree);
}

std::size_t ElementHash::operator()(const GroupElement& g) const noexcept {
  std::size_t h = g.index();
  if (const auto* p = std::get_if<Perm>(&g)) {
    for (auto x : p->images()) h = mix(h, x);
  } else {
    const auto& m = std::get<MatModP>(g);
    h = mix(h, m.modulus());
    for (auto x : m.entries()) h = mix(h, x);
  }
  return h;
}

}  // namespace polywythoff
