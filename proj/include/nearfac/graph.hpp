#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nearfac/bitset256.hpp"
#include "nearfac/near_factorization.hpp"

namespace nearfac {

inline constexpr std::size_t kMaxGraphOrder = 200;

using Edge = std::pair<std::uint32_t, std::uint32_t>;  // u < v

// Simple undirected graph on vertices 0..order-1. Built from an NF the
// vertex index is the element code.
class NfGraph {
 public:
  explicit NfGraph(std::size_t order);  // CapabilityError above kMaxGraphOrder
  static NfGraph from_edges(std::size_t order, const std::vector<Edge>& edges);

  std::size_t order() const { return adj_.size(); }
  void add_edge(std::uint32_t u, std::uint32_t v);
  void remove_edge(std::uint32_t u, std::uint32_t v);
  bool adjacent(std::uint32_t u, std::uint32_t v) const { return adj_[u].test(v); }
  const Bitset256& neighbours(std::uint32_t v) const { return adj_[v]; }
  std::size_t degree(std::uint32_t v) const { return adj_[v].count(); }

  std::vector<Edge> edges() const;  // sorted
  std::size_t edge_count() const;
  NfGraph complement() const;

  // "u v" per line, sorted.
  std::string edge_list() const;

 private:
  std::vector<Bitset256> adj_;
};

// Vertices are the elements; x ~ y iff some left translate gA holds both.
NfGraph build_p_graph(const NearFactorization& nf);

// Exact, by colouring branch and bound.
std::size_t clique_number(const NfGraph& g);
std::size_t independence_number(const NfGraph& g);
// Largest clique inside `within`; stops early once `target` is reached.
std::size_t max_clique_in(const NfGraph& g, const Bitset256& within, std::size_t target = Bitset256::kBits);

struct CriticalReport {
  std::size_t alpha = 0;
  std::size_t omega = 0;
  std::vector<Edge> alpha_critical_edges;     // alpha(G - e) > alpha(G)
  std::vector<Edge> omega_critical_nonedges;  // omega(G + xy) > omega(G)
  bool alternating = false;
};

CriticalReport critical_report(const NfGraph& g);

// perm[v] is the image of vertex v of g1.
bool is_isomorphism(const NfGraph& g1, const NfGraph& g2, const std::vector<std::uint32_t>& perm);

// Exact decision. A certificate, if given and valid, short-circuits the search.
bool graphs_isomorphic(const NfGraph& g1, const NfGraph& g2,
                       const std::optional<std::vector<std::uint32_t>>& certificate = std::nullopt);
// The isomorphism found by search, if any.
std::optional<std::vector<std::uint32_t>> find_isomorphism(const NfGraph& g1, const NfGraph& g2);

// theta(x) = f(x) h, which carries P(A, B) onto P(f(A)h, h^-1 f(B)).
std::vector<std::uint32_t> equivalence_certificate(const EquivalenceMap& m);

}  // namespace nearfac
