#include "nearfac/corpus.hpp"

#include "nearfac/errors.hpp"

namespace nearfac {

namespace {

// X' u (-X') in Z_m, as decimal strings.
std::vector<std::string> symmetric_closure(std::vector<int> half, int m) {
  std::vector<std::string> out;
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  for (int x : half) {
    for (int y : {x, (m - x) % m}) {
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        out.push_back(std::to_string(y));
      }
    }
  }
  return out;
}

std::vector<Fixture> build() {
  std::vector<Fixture> f;
  f.push_back({"z16", "Z:16", {"0", "1", "15"}, {"2", "5", "8", "11", "14"}, ""});
  f.push_back({"z16-image", "Z:16", {"2", "9", "11"}, {"0", "1", "6", "11", "12"}, "image of z16 under x -> 7x, h = 2"});
  f.push_back({"d8", "D:8", {"e", "b", "a"}, {"b^2", "b^5", "ab", "ab^4", "ab^7"}, ""});
  f.push_back({"d8-image", "D:8", {"ab", "ab^6", "b^7"}, {"ab^7", "a", "b^4", "b^5", "b^6"},
               "image of d8 under f_{3,2}, h = ab"});
  f.push_back({"d32-decaen", "D:32", {"b", "b^2", "b^3", "a", "ab", "ab^2", "ab^3"},
               {"e", "b^7", "b^14", "b^21", "b^28", "ab^7", "ab^14", "ab^21", "ab^28"}, ""});
  f.push_back({"d32-bacso", "D:32", {"a", "ab^31", "b^31", "ab^10", "b^10", "b^21", "ab^21"},
               {"e", "b^6", "ab^25", "ab^6", "b^25", "b^12", "ab^19", "ab^12", "b^19"}, ""});
  f.push_back({"d32-canonical", "D:32", {"e", "b", "b^2", "b^3", "a", "ab", "ab^2"},
               {"b^4", "b^11", "b^18", "b^25", "ab^3", "ab^10", "ab^17", "ab^24", "ab^31"}, ""});
  f.push_back({"z10", "Z:10", {"0", "1", "9"}, {"2", "5", "8"}, ""});
  f.push_back({"d5", "D:5", {"e", "ab", "ab^4"}, {"b^2", "a", "b^3"}, "Pecher image of z10"});
  f.push_back({"d41-first", "D:41", {"e", "b^2", "b^4", "b^37", "b^39", "ab", "ab^3", "ab^38", "ab^40"},
               {"b^9", "b^14", "b^27", "b^32", "a", "ab^5", "ab^18", "ab^23", "ab^36"}, ""});
  f.push_back({"d41-second", "D:41", {"e", "b^8", "b^10", "b^31", "b^33", "ab", "ab^9", "ab^32", "ab^40"},
               {"b^3", "b^14", "b^27", "b^38", "a", "ab^11", "ab^17", "ab^24", "ab^30"}, ""});
  f.push_back({"z190-first", "Z:190", symmetric_closure({0, 1, 2, 3, 4}, 190),
               symmetric_closure({5, 14, 23, 32, 41, 50, 59, 68, 77, 86, 95}, 190), "published as X' with X = X' u -X'"});
  f.push_back({"z190-second", "Z:190", symmetric_closure({0, 1, 8, 9, 10}, 190),
               symmetric_closure({11, 14, 17, 38, 41, 44, 65, 68, 71, 92, 95}, 190), "published as X' with X = X' u -X'"});
  f.push_back({"d5c5-first", "D5xC5", {"(e,e)", "(e,c)", "(b,c^3)", "(b^2,c^3)", "(a,e)", "(a,c)", "(ab,c^3)"},
               {"(b,c^2)", "(b^4,c)", "(b^4,c^3)", "(a,c^2)", "(ab^2,c^2)", "(ab^3,c)", "(ab^3,c^3)"}, ""});
  f.push_back({"d5c5-second", "D5xC5", {"(e,e)", "(e,c)", "(b,c^3)", "(b^2,c^3)", "(a,e)", "(a,c)", "(ab^4,c^3)"},
               {"(b,c^2)", "(b^4,c)", "(b^4,c^3)", "(a,c^2)", "(ab^2,c)", "(ab^2,c^3)", "(ab^3,c^2)"}, ""});
  f.push_back({"d5c5-pecher", "D5xC5", {"(e,e)", "(a,e)", "(e,c^3)", "(a,c^3)", "(ab,c^4)", "(b,c^4)", "(b^2,c^4)"},
               {"(a,c)", "(b,c)", "(ab^2,c)", "(ab^3,c^3)", "(b^4,c^3)", "(ab^3,c^4)", "(b^4,c^4)"},
               "as printed, (ab,c^4) appears twice and the last element of B reads (r^4,c^4); the second "
               "(ab,c^4) is read as (b,c^4) and r^4 as b^4, the only readings that map onto d5c5-first under "
               "(identity, c -> c^2)"});
  f.push_back({"c5sqc2-first", "C5sqC2", {"e", "c", "b", "b^2c^2", "a", "ac", "ab"},
               {"bc^4", "b^4c", "b^4c^4", "ac^3", "ab^2c^2", "ab^3", "ab^3c^3"}, ""});
  f.push_back({"c5sqc2-second", "C5sqC2", {"e", "c", "b", "b^2c^2", "a", "ac", "ab^4c"},
               {"bc^4", "b^4c", "b^4c^4", "ac^3", "ab^2c", "ab^2c^3", "ab^3c^4"}, ""});
  f.push_back({"c5sqc2-pecher", "C5sqC2", {"e", "a", "b", "c", "ab^4", "ac^4", "b^2c^2"},
               {"ab^2", "ac^2", "ab^3c^3", "b^4c", "bc^4", "ab^2c^2", "b^4c^4"}, ""});
  return f;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = build();
  return all;
}

const Fixture& fixture(std::string_view name) {
  for (const auto& f : fixtures()) {
    if (f.name == name) return f;
  }
  throw DomainError("unknown fixture '" + std::string(name) + "'");
}

NearFactorization load(const Fixture& f) {
  auto g = make_group(f.group);
  std::vector<Element> a, b;
  for (const auto& s : f.a) a.push_back(g->parse_element(s));
  for (const auto& s : f.b) b.push_back(g->parse_element(s));
  return NearFactorization(g, make_set(std::move(a)), make_set(std::move(b)));
}

NearFactorization load_fixture(std::string_view name) { return load(fixture(name)); }

}  // namespace nearfac
