#include "fillperm/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace fillperm {

ParseError::ParseError(const std::string& what, std::size_t position)
    : PermutationError(what + " at position " + std::to_string(position)), position_(position) {}

Permutation::Permutation() : images_{0} {}

Permutation::Permutation(std::vector<symbol> zero_based) : images_(std::move(zero_based)) {}

Permutation Permutation::identity(std::size_t n) {
  if (n == 0) throw PermutationError("degree must be positive");
  std::vector<symbol> im(n);
  std::iota(im.begin(), im.end(), symbol{0});
  return Permutation(std::move(im));
}

Permutation Permutation::from_images(std::span<const symbol> images) {
  const std::size_t n = images.size();
  if (n == 0) throw PermutationError("degree must be positive");
  std::vector<symbol> im(n);
  std::vector<bool> seen(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    const symbol v = images[j];
    if (v < 1 || v > n || seen[v - 1]) throw PermutationError("not a permutation");
    seen[v - 1] = true;
    im[j] = v - 1;
  }
  return Permutation(std::move(im));
}

Permutation Permutation::from_images(std::initializer_list<symbol> images) {
  return from_images(std::span<const symbol>(images.begin(), images.size()));
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<Cycle>& cyc) {
  if (n == 0) throw PermutationError("degree must be positive");
  std::vector<symbol> im(n);
  std::iota(im.begin(), im.end(), symbol{0});
  std::vector<bool> used(n, false);
  for (const auto& c : cyc) {
    if (c.size() < 2) continue;
    for (std::size_t t = 0; t < c.size(); ++t) {
      const symbol a = c[t];
      if (a < 1 || a > n) throw PermutationError("symbol out of range");
      if (used[a - 1]) throw PermutationError("not a permutation");
      used[a - 1] = true;
      im[a - 1] = c[(t + 1) % c.size()] - 1;
    }
  }
  return Permutation(std::move(im));
}

Permutation Permutation::from_zero_based_unchecked(std::vector<symbol> images) {
  return Permutation(std::move(images));
}

Permutation::symbol Permutation::operator()(symbol j) const {
  if (j < 1 || j > images_.size()) throw PermutationError("symbol out of range");
  return images_[j - 1] + 1;
}

std::vector<Permutation::symbol> Permutation::images() const {
  std::vector<symbol> out(images_.size());
  std::transform(images_.begin(), images_.end(), out.begin(), [](symbol v) { return v + 1; });
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.images_.begin(), a.images_.end(),
                                                b.images_.begin(), b.images_.end());
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw PermutationError("degree mismatch");
  const auto pz = p.zero_based();
  const auto qz = q.zero_based();
  std::vector<Permutation::symbol> r(p.degree());
  for (std::size_t x = 0; x < r.size(); ++x) r[x] = pz[qz[x]];
  return Permutation::from_zero_based_unchecked(std::move(r));
}

Permutation inverse(const Permutation& p) {
  const auto pz = p.zero_based();
  std::vector<Permutation::symbol> r(p.degree());
  for (std::size_t x = 0; x < r.size(); ++x) r[pz[x]] = static_cast<Permutation::symbol>(x);
  return Permutation::from_zero_based_unchecked(std::move(r));
}

Permutation power(const Permutation& p, long long k) {
  Permutation base = k < 0 ? inverse(p) : p;
  unsigned long long e = k < 0 ? 0ULL - static_cast<unsigned long long>(k) : static_cast<unsigned long long>(k);
  Permutation result = Permutation::identity(p.degree());
  while (e > 0) {
    if (e & 1ULL) result = compose(base, result);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

Permutation conjugate(const Permutation& p, const Permutation& h) {
  if (p.degree() != h.degree()) throw PermutationError("degree mismatch");
  // (h p h^-1)(h(x)) = h(p(x))
  const auto pz = p.zero_based();
  const auto hz = h.zero_based();
  std::vector<Permutation::symbol> r(p.degree());
  for (std::size_t x = 0; x < r.size(); ++x) r[hz[x]] = hz[pz[x]];
  return Permutation::from_zero_based_unchecked(std::move(r));
}

std::vector<Permutation::Cycle> cycles(const Permutation& p) {
  const auto pz = p.zero_based();
  std::vector<bool> seen(p.degree(), false);
  std::vector<Permutation::Cycle> out;
  for (std::size_t start = 0; start < pz.size(); ++start) {
    if (seen[start]) continue;
    Permutation::Cycle c;
    for (std::size_t x = start; !seen[x]; x = pz[x]) {
      seen[x] = true;
      c.push_back(static_cast<Permutation::symbol>(x + 1));
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::size_t> cycle_type(const Permutation& p) {
  std::vector<std::size_t> lengths;
  for (const auto& c : cycles(p)) lengths.push_back(c.size());
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::uint64_t order(const Permutation& p) {
  std::uint64_t r = 1;
  for (std::size_t len : cycle_type(p)) r = std::lcm(r, static_cast<std::uint64_t>(len));
  return r;
}

bool is_n_cycle(const Permutation& p) {
  const auto pz = p.zero_based();
  std::size_t len = 1;
  for (std::size_t x = pz[0]; x != 0; x = pz[x]) ++len;
  return len == pz.size();
}

bool is_parity_respecting(const Permutation& p) {
  if (p.degree() % 2 != 0) throw PermutationError("parity undefined");
  const auto pz = p.zero_based();
  // parity of the image of each class, fixed by its first member
  const std::uint32_t odd_to = pz[0] & 1U;
  const std::uint32_t even_to = pz[1] & 1U;
  if (odd_to == even_to) return false;
  for (std::size_t x = 0; x < pz.size(); ++x) {
    const std::uint32_t expected = (x & 1U) == 0 ? odd_to : even_to;
    if ((pz[x] & 1U) != expected) return false;
  }
  return true;
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::uint64_t number() {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > 1'000'000) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return v;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Permutation parse(std::string_view text, std::optional<std::size_t> degree) {
  Scanner sc(text);
  if (sc.peek() == 'n') {
    sc.accept('n');
    sc.expect('=');
    degree = static_cast<std::size_t>(sc.number());
    sc.accept(':');
    sc.accept(',');
  }
  if (sc.peek() == '[') {
    sc.expect('[');
    std::vector<Permutation::symbol> im;
    if (!sc.accept(']')) {
      do {
        im.push_back(static_cast<Permutation::symbol>(sc.number()));
        sc.accept(',');
      } while (sc.peek() != ']' && sc.peek() != '\0');
      sc.expect(']');
    }
    if (!sc.done()) sc.fail("trailing characters");
    if (im.empty()) sc.fail("empty image list");
    if (degree && *degree != im.size()) throw PermutationError("degree mismatch");
    return Permutation::from_images(im);
  }
  if (sc.peek() != '(') sc.fail("expected '[' or '('");
  std::vector<Permutation::Cycle> cyc;
  std::uint64_t largest = 0;
  while (!sc.done()) {
    sc.expect('(');
    Permutation::Cycle c;
    while (!sc.accept(')')) {
      if (!c.empty()) sc.accept(',');
      const std::uint64_t v = sc.number();
      if (v == 0) sc.fail("symbols are 1-based");
      largest = std::max(largest, v);
      c.push_back(static_cast<Permutation::symbol>(v));
    }
    cyc.push_back(std::move(c));
  }
  const std::size_t n = degree.value_or(std::max<std::uint64_t>(largest, 1));
  if (largest > n) throw PermutationError("symbol out of range");
  return Permutation::from_cycles(n, cyc);
}

std::string format(const Permutation& p) {
  std::ostringstream os;
  os << '[';
  const auto pz = p.zero_based();
  for (std::size_t x = 0; x < pz.size(); ++x) {
    if (x) os << ',';
    os << pz[x] + 1;
  }
  os << ']';
  return os.str();
}

std::string format_cycles(const Permutation& p) {
  std::ostringstream os;
  for (const auto& c : cycles(p)) {
    if (c.size() < 2) continue;
    os << '(';
    for (std::size_t t = 0; t < c.size(); ++t) {
      if (t) os << ',';
      os << c[t];
    }
    os << ')';
  }
  const std::string s = os.str();
  return s.empty() ? "()" : s;
}

}  // namespace fillperm

std::size_t std::hash<fillperm::Permutation>::operator()(const fillperm::Permutation& p) const noexcept {
  // FNV-1a over the image array
  std::uint64_t h = 1469598103934665603ULL;
  for (auto v : p.zero_based()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}
