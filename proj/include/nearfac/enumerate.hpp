#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nearfac/near_factorization.hpp"

namespace nearfac {

enum class Restriction { All, Symmetric, StronglySymmetric };

std::string to_string(Restriction r);
Restriction parse_restriction(std::string_view text);  // "all", "symmetric", "strong"

struct Budget {
  std::uint64_t max_nodes = 100'000'000;
  double max_seconds = 600.0;
};

struct SearchSpec {
  GroupId group;
  std::uint32_t k = 0;
  std::uint32_t l = 0;
  Restriction restrict = Restriction::All;
  Budget budget;
  unsigned threads = 0;         // 0: hardware concurrency
  std::string checkpoint_path;  // empty: no checkpoint
  // Off: every restricted solution with e in A (All) or every restricted
  // solution (otherwise) is visited, not one lex-minimal A per orbit.
  bool symmetry_breaking = true;
  bool keep_solutions = false;
};

struct EnumeratedClass {
  NearFactorization canonical;  // lexicographic minimum of the class
  NearFactorization example;    // least solution found that obeys the restriction
  std::size_t solutions = 0;    // restricted solutions found in this class
};

struct EnumerationResult {
  std::vector<EnumeratedClass> classes;  // sorted by canonical form
  std::uint64_t nodes_explored = 0;
  double wall_seconds = 0.0;
  bool complete = false;
  std::size_t solutions_found = 0;
  std::size_t tasks_total = 0;
  std::size_t tasks_done = 0;
  std::size_t tasks_resumed = 0;
  // k == l only: classes after also identifying (A, B) with (B, A).
  std::optional<std::size_t> classes_up_to_swap;
  std::vector<NearFactorization> solutions;  // keep_solutions only; sorted
};

// Every NF (A, B) with |A| = k, |B| = l obeying the restriction, up to
// equivalence. For All, only A containing e is searched; every class has
// such a member. When k > l the (l, k) problem is solved and mapped back by
// (A, B) -> (B^-1, A^-1).
EnumerationResult enumerate_nfs(const SearchSpec& spec);

struct ClassPartition {
  NearFactorization canonical;
  std::vector<std::size_t> members;  // indices into the input
};

// Partition by canonical form; classes sorted by canonical form.
// DomainError for mixed groups or shapes, PreconditionError for non-NFs.
std::vector<ClassPartition> classify_given(std::span<const NearFactorization> nfs);

struct SweepEntry {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t l = 0;
  std::size_t classes = 0;
  bool complete = false;
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

// All (k, l) with k l = 2n - 1, 1 <= k < 2n - 1, for n_min <= n <= n_max.
std::vector<SweepEntry> dihedral_sweep(std::uint32_t n_min, std::uint32_t n_max, const Budget& per_entry,
                                       unsigned threads = 0);

// Proper divisors k of m: 1 <= k < m.
std::vector<std::uint32_t> proper_divisors(std::uint32_t m);

}  // namespace nearfac
