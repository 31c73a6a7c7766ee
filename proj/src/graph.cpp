#include "nearfac/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "nearfac/errors.hpp"

namespace nearfac {

NfGraph::NfGraph(std::size_t order) {
  if (order > kMaxGraphOrder) {
    throw CapabilityError("graph order " + std::to_string(order) + " exceeds the limit " +
                          std::to_string(kMaxGraphOrder));
  }
  adj_.resize(order);
}

NfGraph NfGraph::from_edges(std::size_t order, const std::vector<Edge>& edges) {
  NfGraph g(order);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void NfGraph::add_edge(std::uint32_t u, std::uint32_t v) {
  if (u >= order() || v >= order() || u == v) {
    throw DomainError("bad edge " + std::to_string(u) + " " + std::to_string(v));
  }
  adj_[u].set(v);
  adj_[v].set(u);
}

void NfGraph::remove_edge(std::uint32_t u, std::uint32_t v) {
  adj_[u].reset(v);
  adj_[v].reset(u);
}

std::vector<Edge> NfGraph::edges() const {
  std::vector<Edge> out;
  for (std::uint32_t u = 0; u < order(); ++u) {
    adj_[u].for_each([&](std::size_t v) {
      if (v > u) out.emplace_back(u, static_cast<std::uint32_t>(v));
    });
  }
  return out;
}

std::size_t NfGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

NfGraph NfGraph::complement() const {
  NfGraph h(order());
  auto all = Bitset256::prefix(order());
  for (std::uint32_t v = 0; v < order(); ++v) {
    h.adj_[v] = all - adj_[v];
    h.adj_[v].reset(v);
  }
  return h;
}

std::string NfGraph::edge_list() const {
  std::ostringstream os;
  for (auto [u, v] : edges()) os << u << ' ' << v << '\n';
  return os.str();
}

NfGraph build_p_graph(const NearFactorization& nf) {
  const auto& grp = *nf.group();
  NfGraph g(grp.order());
  std::vector<std::uint32_t> translate(nf.k());
  for (auto x : grp.elements()) {
    for (std::size_t t = 0; t < nf.k(); ++t) translate[t] = grp.mul_unchecked(x, nf.a()[t]).code;
    for (std::size_t s = 0; s < translate.size(); ++s) {
      for (std::size_t t = s + 1; t < translate.size(); ++t) g.add_edge(translate[s], translate[t]);
    }
  }
  return g;
}

// ---------------------------------------------------------------- cliques

namespace {

class CliqueSearch {
 public:
  CliqueSearch(const NfGraph& g, std::size_t target) : g_(g), target_(target) {}

  std::size_t run(const Bitset256& within) {
    if (within.any()) expand(0, within);
    return best_;
  }

 private:
  void expand(std::size_t size, Bitset256 p) {
    // Greedy colouring gives the bound: a clique uses each colour at most once.
    std::vector<std::uint32_t> order;
    std::vector<std::uint32_t> colour;
    Bitset256 uncoloured = p;
    std::uint32_t c = 0;
    while (uncoloured.any()) {
      ++c;
      Bitset256 q = uncoloured;
      while (q.any()) {
        auto v = static_cast<std::uint32_t>(q.first());
        q.reset(v);
        q -= g_.neighbours(v);
        uncoloured.reset(v);
        order.push_back(v);
        colour.push_back(c);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (size + colour[i] <= best_) return;
      auto v = order[i];
      Bitset256 np = p & g_.neighbours(v);
      if (np.none()) {
        best_ = std::max(best_, size + 1);
      } else {
        expand(size + 1, np);
      }
      if (best_ >= target_) return;
      p.reset(v);
    }
  }

  const NfGraph& g_;
  std::size_t target_;
  std::size_t best_ = 0;
};

}  // namespace

std::size_t max_clique_in(const NfGraph& g, const Bitset256& within, std::size_t target) {
  return CliqueSearch(g, target).run(within & Bitset256::prefix(g.order()));
}

std::size_t clique_number(const NfGraph& g) { return max_clique_in(g, Bitset256::prefix(g.order())); }

std::size_t independence_number(const NfGraph& g) { return clique_number(g.complement()); }

namespace {

bool perfect_matching(std::size_t order, const std::vector<Edge>& edges) {
  if (edges.size() * 2 != order) return false;
  std::vector<int> seen(order, 0);
  for (auto [u, v] : edges) {
    if (seen[u]++ || seen[v]++) return false;
  }
  return true;
}

}  // namespace

CriticalReport critical_report(const NfGraph& g) {
  CriticalReport r;
  auto h = g.complement();
  r.alpha = clique_number(h);
  r.omega = clique_number(g);
  for (auto [x, y] : g.edges()) {
    // Removing xy creates an independent set of size alpha + 1 iff alpha - 1
    // vertices outside N[x] u N[y] are independent.
    auto need = r.alpha - 1;
    if (need == 0 || max_clique_in(h, h.neighbours(x) & h.neighbours(y), need) >= need) {
      r.alpha_critical_edges.emplace_back(x, y);
    }
  }
  for (auto [x, y] : h.edges()) {
    auto need = r.omega - 1;
    if (need == 0 || max_clique_in(g, g.neighbours(x) & g.neighbours(y), need) >= need) {
      r.omega_critical_nonedges.emplace_back(x, y);
    }
  }
  r.alternating = g.order() > 0 && perfect_matching(g.order(), r.alpha_critical_edges) &&
                  perfect_matching(g.order(), r.omega_critical_nonedges);
  return r;
}

// ---------------------------------------------------------------- isomorphism

bool is_isomorphism(const NfGraph& g1, const NfGraph& g2, const std::vector<std::uint32_t>& perm) {
  if (g1.order() != g2.order() || perm.size() != g1.order()) return false;
  std::vector<bool> hit(g2.order(), false);
  for (auto w : perm) {
    if (w >= g2.order() || hit[w]) return false;
    hit[w] = true;
  }
  for (std::uint32_t u = 0; u < g1.order(); ++u) {
    for (std::uint32_t v = u + 1; v < g1.order(); ++v) {
      if (g1.adjacent(u, v) != g2.adjacent(perm[u], perm[v])) return false;
    }
  }
  return true;
}

namespace {

using Colouring = std::vector<std::uint32_t>;

// Joint colour refinement of both graphs with a shared colour naming.
// False as soon as the colour histograms differ.
bool refine(const NfGraph& g1, const NfGraph& g2, Colouring& c1, Colouring& c2) {
  auto classes = [](const Colouring& a, const Colouring& b) {
    std::vector<std::uint32_t> all(a);
    all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end());
    return static_cast<std::size_t>(std::unique(all.begin(), all.end()) - all.begin());
  };
  auto before = classes(c1, c2);
  while (true) {
    auto signature = [](const NfGraph& g, const Colouring& c, std::uint32_t v) {
      std::vector<std::uint32_t> s{c[v]};
      g.neighbours(v).for_each([&](std::size_t u) { s.push_back(c[u]); });
      std::sort(s.begin() + 1, s.end());
      return s;
    };
    std::map<std::vector<std::uint32_t>, std::uint32_t> names;
    std::vector<std::vector<std::uint32_t>> s1, s2;
    for (std::uint32_t v = 0; v < g1.order(); ++v) names.emplace(s1.emplace_back(signature(g1, c1, v)), 0);
    for (std::uint32_t v = 0; v < g2.order(); ++v) names.emplace(s2.emplace_back(signature(g2, c2, v)), 0);
    std::uint32_t next = 0;
    for (auto& [sig, name] : names) name = next++;
    std::vector<std::size_t> hist(names.size(), 0);
    for (std::uint32_t v = 0; v < g1.order(); ++v) ++hist[c1[v] = names[s1[v]]];
    for (std::uint32_t v = 0; v < g2.order(); ++v) {
      auto& n = hist[c2[v] = names[s2[v]]];
      if (n == 0) return false;
      --n;
    }
    if (names.size() == before) return true;
    before = names.size();
  }
}

bool search(const NfGraph& g1, const NfGraph& g2, Colouring c1, Colouring c2, std::vector<std::uint32_t>& perm) {
  if (!refine(g1, g2, c1, c2)) return false;
  std::map<std::uint32_t, std::size_t> sizes;
  for (auto c : c1) ++sizes[c];
  std::uint32_t cell = 0;
  std::size_t cell_size = 0;
  for (auto [c, s] : sizes) {
    if (s > 1 && (cell_size == 0 || s < cell_size)) {
      cell = c;
      cell_size = s;
    }
  }
  if (cell_size == 0) {
    std::vector<std::uint32_t> where(g2.order());
    for (std::uint32_t w = 0; w < g2.order(); ++w) where[c2[w]] = w;
    perm.resize(g1.order());
    for (std::uint32_t v = 0; v < g1.order(); ++v) perm[v] = where[c1[v]];
    return is_isomorphism(g1, g2, perm);
  }
  auto v = static_cast<std::uint32_t>(std::find(c1.begin(), c1.end(), cell) - c1.begin());
  auto fresh = static_cast<std::uint32_t>(g1.order() + 1);
  for (std::uint32_t w = 0; w < g2.order(); ++w) {
    if (c2[w] != cell) continue;
    auto d1 = c1, d2 = c2;
    d1[v] = fresh;
    d2[w] = fresh;
    if (search(g1, g2, std::move(d1), std::move(d2), perm)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::uint32_t>> find_isomorphism(const NfGraph& g1, const NfGraph& g2) {
  if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count()) return std::nullopt;
  std::vector<std::uint32_t> perm;
  if (search(g1, g2, Colouring(g1.order(), 0), Colouring(g2.order(), 0), perm)) return perm;
  return std::nullopt;
}

bool graphs_isomorphic(const NfGraph& g1, const NfGraph& g2,
                       const std::optional<std::vector<std::uint32_t>>& certificate) {
  if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count()) return false;
  if (certificate && is_isomorphism(g1, g2, *certificate)) return true;
  return find_isomorphism(g1, g2).has_value();
}

std::vector<std::uint32_t> equivalence_certificate(const EquivalenceMap& m) {
  const auto& g = *m.f.group();
  std::vector<std::uint32_t> perm(g.order());
  for (auto x : g.elements()) perm[x.code] = g.mul_unchecked(m.f(x), m.h).code;
  return perm;
}

}  // namespace nearfac
