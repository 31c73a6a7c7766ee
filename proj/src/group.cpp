#include "nearfac/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

#include "nearfac/automorphism.hpp"
#include "nearfac/errors.hpp"

namespace nearfac {

namespace {

std::uint32_t parse_uint(std::string_view text, std::string_view what) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw DomainError("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string power(std::string_view base, std::uint32_t exp) {
  if (exp == 0) return {};
  if (exp == 1) return std::string(base);
  return std::string(base) + "^" + std::to_string(exp);
}

}  // namespace

std::int64_t mod(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

std::uint32_t gcd_u(std::uint32_t a, std::uint32_t b) { return std::gcd(a, b); }

std::uint32_t inverse_mod(std::uint32_t x, std::uint32_t m) {
  if (m == 1) return 0;
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = m, new_r = x % m;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) {
    throw DomainError(std::to_string(x) + " is not a unit modulo " + std::to_string(m));
  }
  return static_cast<std::uint32_t>(mod(t, m));
}

std::vector<std::uint32_t> units_mod(std::uint32_t m) {
  std::vector<std::uint32_t> units;
  if (m == 1) return {0};
  for (std::uint32_t r = 1; r < m; ++r) {
    if (std::gcd(r, m) == 1) units.push_back(r);
  }
  return units;
}

std::uint32_t euler_phi(std::uint32_t m) { return static_cast<std::uint32_t>(units_mod(m).size()); }

// ---------------------------------------------------------------- GroupId

GroupId GroupId::cyclic(std::uint32_t n) {
  if (n == 0) throw DomainError("Z:n requires n >= 1");
  return {GroupFamily::CyclicZ, {n}};
}

GroupId GroupId::dihedral(std::uint32_t n) {
  if (n <= 2) throw DomainError("D:n requires n > 2");
  return {GroupFamily::DihedralD, {n}};
}

GroupId GroupId::z2_times_zn(std::uint32_t n) {
  if (n == 0) throw DomainError("Z2xZ:n requires n >= 1");
  return {GroupFamily::DirectZ2Zn, {n}};
}

GroupId GroupId::d5_times_c5() { return {GroupFamily::DirectD5C5, {}}; }
GroupId GroupId::c5sq_c2() { return {GroupFamily::SemidirectC5sqC2, {}}; }

GroupId GroupId::parse(std::string_view text) {
  text = trim(text);
  if (text == "D5xC5") return d5_times_c5();
  if (text == "C5sqC2") return c5sq_c2();
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw DomainError("unknown group descriptor '" + std::string(text) + "'");
  }
  auto family = text.substr(0, colon);
  auto n = parse_uint(text.substr(colon + 1), "group parameter");
  if (family == "Z") return cyclic(n);
  if (family == "D") return dihedral(n);
  if (family == "Z2xZ") return z2_times_zn(n);
  throw DomainError("unknown group family '" + std::string(family) + "'");
}

std::string GroupId::to_string() const {
  switch (family) {
    case GroupFamily::CyclicZ: return "Z:" + std::to_string(params.at(0));
    case GroupFamily::DihedralD: return "D:" + std::to_string(params.at(0));
    case GroupFamily::DirectZ2Zn: return "Z2xZ:" + std::to_string(params.at(0));
    case GroupFamily::DirectD5C5: return "D5xC5";
    case GroupFamily::SemidirectC5sqC2: return "C5sqC2";
  }
  return "?";
}

// ---------------------------------------------------------------- sets

ElementSet make_set(std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  auto dup = std::adjacent_find(elements.begin(), elements.end());
  if (dup != elements.end()) {
    throw DomainError("duplicate element code " + std::to_string(dup->code) + " in set");
  }
  return elements;
}

ElementSet codes_to_set(std::span<const std::uint32_t> codes) {
  std::vector<Element> out;
  out.reserve(codes.size());
  for (auto c : codes) out.push_back(Element{c});
  return make_set(std::move(out));
}

std::vector<std::uint32_t> set_codes(std::span<const Element> set) {
  std::vector<std::uint32_t> out;
  out.reserve(set.size());
  for (auto x : set) out.push_back(x.code);
  return out;
}

// ---------------------------------------------------------------- FiniteGroup

namespace {

struct Dihedral {
  std::uint32_t n;
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
    std::uint32_t e1 = x / n, h1 = x % n, e2 = y / n, h2 = y % n;
    std::int64_t h = (e2 ? -static_cast<std::int64_t>(h1) : h1) + h2;
    return ((e1 + e2) % 2) * n + static_cast<std::uint32_t>(mod(h, n));
  }
};

}  // namespace

FiniteGroup::FiniteGroup(GroupId id) : id_(std::move(id)) {
  std::function<std::uint32_t(std::uint32_t, std::uint32_t)> product;
  switch (id_.family) {
    case GroupFamily::CyclicZ: {
      auto n = id_.params.at(0);
      order_ = n;
      modulus_ = n;
      product = [n](std::uint32_t x, std::uint32_t y) { return (x + y) % n; };
      generators_ = {Element{n > 1 ? 1u : 0u}};
      generator_names_ = {"1"};
      break;
    }
    case GroupFamily::DihedralD: {
      auto n = id_.params.at(0);
      if (n <= 2) throw DomainError("D:n requires n > 2");
      order_ = 2 * n;
      modulus_ = n;
      Dihedral d{n};
      product = [d](std::uint32_t x, std::uint32_t y) { return d.mul(x, y); };
      generators_ = {Element{n}, Element{1}};
      generator_names_ = {"a", "b"};
      break;
    }
    case GroupFamily::DirectZ2Zn: {
      auto n = id_.params.at(0);
      order_ = 2 * n;
      modulus_ = n;
      product = [n](std::uint32_t x, std::uint32_t y) {
        return ((x / n + y / n) % 2) * n + (x % n + y % n) % n;
      };
      generators_ = {Element{n}, Element{n > 1 ? 1u : 0u}};
      generator_names_ = {"(1,0)", "(0,1)"};
      break;
    }
    case GroupFamily::DirectD5C5: {
      order_ = 50;
      modulus_ = 5;
      Dihedral d{5};
      product = [d](std::uint32_t x, std::uint32_t y) {
        return 5 * d.mul(x / 5, y / 5) + (x % 5 + y % 5) % 5;
      };
      // a = (a, 1), b = (b, 1), c = (e, c)
      generators_ = {Element{25}, Element{5}, Element{1}};
      generator_names_ = {"a", "b", "c"};
      break;
    }
    case GroupFamily::SemidirectC5sqC2: {
      order_ = 50;
      modulus_ = 5;
      // Normal form a^e b^i c^j; moving a^f leftwards past b^i c^j inverts
      // both exponents when f = 1 (aba = b^-1, aca = c^-1, bc = cb).
      product = [](std::uint32_t x, std::uint32_t y) {
        std::int64_t e1 = x / 25, i1 = (x / 5) % 5, j1 = x % 5;
        std::int64_t e2 = y / 25, i2 = (y / 5) % 5, j2 = y % 5;
        std::int64_t s = e2 ? -1 : 1;
        return static_cast<std::uint32_t>(25 * ((e1 + e2) % 2) + 5 * mod(s * i1 + i2, 5) +
                                          mod(s * j1 + j2, 5));
      };
      generators_ = {Element{25}, Element{5}, Element{1}};
      generator_names_ = {"a", "b", "c"};
      break;
    }
  }

  table_.resize(order_ * order_);
  inverse_.resize(order_);
  for (std::uint32_t x = 0; x < order_; ++x) {
    for (std::uint32_t y = 0; y < order_; ++y) {
      auto z = product(x, y);
      table_[static_cast<std::size_t>(x) * order_ + y] = Element{z};
      if (z == 0) inverse_[x] = Element{y};
    }
  }
  abelian_ = true;
  for (std::uint32_t x = 0; x < order_ && abelian_; ++x) {
    for (std::uint32_t y = x + 1; y < order_; ++y) {
      if (table_[x * order_ + y] != table_[y * order_ + x]) {
        abelian_ = false;
        break;
      }
    }
  }
}

FiniteGroup::~FiniteGroup() = default;

void FiniteGroup::check(Element x) const {
  if (!contains(x)) {
    throw DomainError("element code " + std::to_string(x.code) + " out of range for " + name());
  }
}

Element FiniteGroup::mul(Element x, Element y) const {
  check(x);
  check(y);
  return mul_unchecked(x, y);
}

Element FiniteGroup::inv(Element x) const {
  check(x);
  return inverse_[x.code];
}

std::vector<Element> FiniteGroup::elements() const {
  std::vector<Element> out(order_);
  for (std::uint32_t c = 0; c < order_; ++c) out[c] = Element{c};
  return out;
}

std::uint32_t FiniteGroup::element_order(Element x) const {
  check(x);
  std::uint32_t k = 1;
  for (Element y = x; y != identity(); y = mul_unchecked(y, x)) ++k;
  return k;
}

Element FiniteGroup::rotation(std::int64_t j) const {
  if (!is_dihedral()) throw CapabilityError(name() + " is not dihedral");
  return Element{static_cast<std::uint32_t>(mod(j, modulus_))};
}

Element FiniteGroup::reflection(std::int64_t j) const {
  if (!is_dihedral()) throw CapabilityError(name() + " is not dihedral");
  return Element{modulus_ + static_cast<std::uint32_t>(mod(j, modulus_))};
}

bool FiniteGroup::is_rotation(Element x) const {
  if (!is_dihedral()) throw CapabilityError(name() + " is not dihedral");
  check(x);
  return x.code < modulus_;
}

std::uint32_t FiniteGroup::exponent(Element x) const {
  if (!is_dihedral()) throw CapabilityError(name() + " is not dihedral");
  check(x);
  return x.code % modulus_;
}

std::string FiniteGroup::render(Element x) const {
  check(x);
  auto dihedral_word = [](std::uint32_t e, std::uint32_t h) {
    std::string s = (e ? "a" : "") + power("b", h);
    return s.empty() ? std::string("e") : s;
  };
  switch (id_.family) {
    case GroupFamily::CyclicZ: return std::to_string(x.code);
    case GroupFamily::DihedralD: return dihedral_word(x.code / modulus_, x.code % modulus_);
    case GroupFamily::DirectZ2Zn:
      return "(" + std::to_string(x.code / modulus_) + "," + std::to_string(x.code % modulus_) + ")";
    case GroupFamily::DirectD5C5: {
      auto d = x.code / 5, k = x.code % 5;
      auto c = power("c", k);
      return "(" + dihedral_word(d / 5, d % 5) + ", " + (c.empty() ? "e" : c) + ")";
    }
    case GroupFamily::SemidirectC5sqC2: {
      std::string s = (x.code / 25 ? "a" : "") + power("b", (x.code / 5) % 5) + power("c", x.code % 5);
      return s.empty() ? "e" : s;
    }
  }
  return "?";
}

// Word over the named letters with optional exponents: "ab^3", "a*b^3",
// "a b3", "b^4c", "e". Letters are multiplied left to right, so any order of
// letters is accepted.
Element FiniteGroup::parse_word(std::string_view text) const {
  std::string_view letters;
  switch (id_.family) {
    case GroupFamily::DihedralD: letters = "ab"; break;
    case GroupFamily::SemidirectC5sqC2: letters = "abc"; break;
    default: throw CapabilityError("symbolic words are not supported for " + name());
  }
  auto original = std::string(text);
  text = trim(text);
  if (text.empty()) throw DomainError("empty element");
  Element result = identity();
  std::size_t pos = 0;
  while (pos < text.size()) {
    char ch = text[pos];
    if (ch == '*' || ch == ' ' || ch == '.') {
      ++pos;
      continue;
    }
    Element base;
    if (ch == 'e' || ch == '1') {
      base = identity();
    } else {
      auto idx = letters.find(ch);
      if (idx == std::string_view::npos) {
        throw DomainError("cannot parse element '" + original + "' in " + name());
      }
      base = generators_[idx];
    }
    ++pos;
    std::uint32_t exp = 1;
    bool caret = pos < text.size() && text[pos] == '^';
    if (caret) ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos > start) {
      exp = parse_uint(text.substr(start, pos - start), "exponent in '" + original + "'");
    } else if (caret) {
      throw DomainError("missing exponent in element '" + original + "'");
    }
    for (std::uint32_t t = 0; t < exp; ++t) result = mul_unchecked(result, base);
  }
  return result;
}

Element FiniteGroup::from_tuple(std::string_view text) const {
  auto original = std::string(text);
  text = trim(text);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw DomainError("expected a tuple '(x, y)', got '" + original + "'");
  }
  text = text.substr(1, text.size() - 2);
  auto comma = text.find(',');
  if (comma == std::string_view::npos) throw DomainError("expected a tuple '(x, y)', got '" + original + "'");
  auto left = trim(text.substr(0, comma));
  auto right = trim(text.substr(comma + 1));
  if (id_.family == GroupFamily::DirectZ2Zn) {
    auto i = parse_uint(left, "Z_2 component of '" + original + "'");
    auto j = parse_uint(right, "Z_n component of '" + original + "'");
    if (i >= 2 || j >= modulus_) throw DomainError("component out of range in '" + original + "'");
    return Element{i * modulus_ + j};
  }
  // D5xC5: left is a word in a, b; right a power of c.
  auto d5 = make_group(GroupId::dihedral(5));
  Element d;
  try {
    d = d5->parse_element(left);
  } catch (const DomainError&) {
    throw DomainError("cannot parse D_5 component of '" + original + "'");
  }
  std::uint32_t k = 0;
  if (right != "e" && right != "1") {
    if (right.empty() || right.front() != 'c') {
      throw DomainError("cannot parse C_5 component of '" + original + "'");
    }
    auto rest = right.substr(1);
    if (!rest.empty() && rest.front() == '^') rest.remove_prefix(1);
    k = rest.empty() ? 1 : parse_uint(rest, "C_5 exponent in '" + original + "'") % 5;
  }
  return Element{5 * d.code + k};
}

Element FiniteGroup::parse_element(std::string_view text) const {
  auto t = trim(text);
  if (!t.empty() && t.front() == '#') {
    Element x{parse_uint(t.substr(1), "element code")};
    check(x);
    return x;
  }
  switch (id_.family) {
    case GroupFamily::CyclicZ: {
      auto neg = !t.empty() && t.front() == '-';
      auto v = parse_uint(neg ? t.substr(1) : t, "element of " + name());
      return Element{static_cast<std::uint32_t>(mod(neg ? -static_cast<std::int64_t>(v) : v, modulus_))};
    }
    case GroupFamily::DirectZ2Zn:
    case GroupFamily::DirectD5C5: return from_tuple(t);
    case GroupFamily::DihedralD:
    case GroupFamily::SemidirectC5sqC2: return parse_word(t);
  }
  throw DomainError("cannot parse element");
}

const std::vector<Automorphism>& FiniteGroup::automorphisms() const {
  std::call_once(automorphisms_once_, [this] {
    auto self = shared_from_this();
    auto list = std::make_unique<std::vector<Automorphism>>();
    switch (id_.family) {
      case GroupFamily::CyclicZ:
        for (auto r : units_mod(modulus_)) list->push_back(Automorphism::unit(self, r));
        break;
      case GroupFamily::DihedralD:
        for (auto i : units_mod(modulus_)) {
          for (std::uint32_t j = 0; j < modulus_; ++j) list->push_back(Automorphism::dihedral(self, i, j));
        }
        break;
      case GroupFamily::DirectZ2Zn:
        if (modulus_ % 2 == 0) {
          throw CapabilityError("automorphisms of Z2xZn are only provided for odd n");
        }
        for (auto r : units_mod(modulus_)) {
          list->push_back(Automorphism::product(self, ProductForm{{UnitForm{1}, UnitForm{r}}}));
        }
        break;
      case GroupFamily::DirectD5C5:
        for (auto i : units_mod(5)) {
          for (std::uint32_t j = 0; j < 5; ++j) {
            for (auto r : units_mod(5)) {
              list->push_back(Automorphism::product(self, ProductForm{{DihedralForm{i, j}, UnitForm{r}}}));
            }
          }
        }
        break;
      case GroupFamily::SemidirectC5sqC2: {
        auto g = [&](std::string_view a, std::string_view b, std::string_view c) {
          std::vector<Element> images{parse_element(a), parse_element(b), parse_element(c)};
          return Automorphism::from_generator_images(self, images);
        };
        // w, x, y, z. The published list has y: a -> b, which is not a
        // homomorphism (a has order 2, b order 5); a -> ab is used instead.
        std::vector<Automorphism> gens{g("a", "b^4c^4", "b"), g("a", "b^2", "c"), g("ab", "b", "c"),
                                       g("ac", "b", "c")};
        std::map<std::vector<Element>, std::size_t> seen;
        list->push_back(Automorphism::identity(self));
        seen.emplace(std::vector<Element>(list->back().table().begin(), list->back().table().end()), 0);
        for (std::size_t head = 0; head < list->size(); ++head) {
          for (const auto& s : gens) {
            auto next = compose((*list)[head], s);
            std::vector<Element> key(next.table().begin(), next.table().end());
            if (seen.emplace(std::move(key), list->size()).second) list->push_back(std::move(next));
          }
        }
        break;
      }
    }
    automorphisms_ = std::move(list);
  });
  return *automorphisms_;
}

GroupPtr make_group(const GroupId& id) {
  static std::mutex mutex;
  static std::map<std::string, GroupPtr> cache;
  auto key = id.to_string();
  std::lock_guard lock(mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto group = std::make_shared<const FiniteGroup>(id);
  cache.emplace(key, group);
  return group;
}

GroupPtr make_group(std::string_view descriptor) { return make_group(GroupId::parse(descriptor)); }

}  // namespace nearfac
