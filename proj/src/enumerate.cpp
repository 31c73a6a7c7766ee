#include "nearfac/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include <json.hpp>

#include "nearfac/bitset256.hpp"
#include "nearfac/errors.hpp"

namespace nearfac {

std::string to_string(Restriction r) {
  switch (r) {
    case Restriction::All: return "all";
    case Restriction::Symmetric: return "symmetric";
    case Restriction::StronglySymmetric: return "strong";
  }
  return "all";
}

Restriction parse_restriction(std::string_view text) {
  if (text == "all") return Restriction::All;
  if (text == "symmetric" || text == "sym") return Restriction::Symmetric;
  if (text == "strong" || text == "strongly-symmetric") return Restriction::StronglySymmetric;
  throw DomainError("unknown restriction '" + std::string(text) + "' (all, symmetric, strong)");
}

std::vector<std::uint32_t> proper_divisors(std::uint32_t m) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 1; d < m; ++d) {
    if (m % d == 0) out.push_back(d);
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;
using Key = std::vector<std::uint32_t>;

// The search proper, always with k <= l.
struct Problem {
  GroupPtr group;
  std::size_t order = 0;
  std::uint32_t k = 0;
  std::uint32_t l = 0;
  Restriction restrict = Restriction::All;
  bool swapped = false;

  std::vector<std::vector<Element>> blocks;  // atomic choices for A and B
  std::vector<std::uint32_t> block_of;       // element code -> block
  std::vector<std::uint32_t> ones_after;     // singleton blocks with index >= i
  std::vector<std::uint32_t> twos_after;
  std::vector<Element> forced;               // always in A
  std::uint32_t first_free = 0;              // first block A may use

  // Symmetry breaking. Phi_{f,s} with f in auts and s in {e} + shifts maps
  // admissible pairs to admissible pairs, so only A lex-minimal under these
  // maps is searched.
  std::vector<std::vector<std::uint32_t>> auts;
  std::vector<Element> shifts;               // involutions
  std::vector<std::uint32_t> orbit_min;      // least image of a code under auts
  std::vector<std::uint8_t> is_shift;
};

Problem make_problem(const SearchSpec& spec) {
  Problem p;
  p.group = make_group(spec.group);
  const auto& g = *p.group;
  p.order = g.order();
  if (p.order > Bitset256::kBits) {
    throw CapabilityError("enumeration supports groups of order <= 256, got " + std::to_string(p.order));
  }
  if (static_cast<std::uint64_t>(spec.k) * spec.l + 1 != p.order) {
    throw DomainError("k l must equal |G| - 1 = " + std::to_string(p.order - 1));
  }
  if (spec.restrict == Restriction::StronglySymmetric && !g.is_dihedral()) {
    throw DomainError("strongly symmetric search needs a dihedral group");
  }
  p.restrict = spec.restrict;
  p.swapped = spec.k > spec.l;
  p.k = std::min(spec.k, spec.l);
  p.l = std::max(spec.k, spec.l);

  p.block_of.assign(p.order, UINT32_MAX);
  auto partner = [&](Element x) -> Element {
    switch (p.restrict) {
      case Restriction::All: return x;
      case Restriction::Symmetric: return g.inv_unchecked(x);
      case Restriction::StronglySymmetric: {
        auto n = g.modulus();
        return Element{(x.code / n) * n + (n - x.code % n) % n};
      }
    }
    return x;
  };
  for (auto x : g.elements()) {
    if (p.block_of[x.code] != UINT32_MAX) continue;
    auto y = partner(x);
    auto idx = static_cast<std::uint32_t>(p.blocks.size());
    p.block_of[x.code] = idx;
    p.block_of[y.code] = idx;
    p.blocks.push_back(x == y ? std::vector<Element>{x} : std::vector<Element>{x, y});
  }
  p.ones_after.assign(p.blocks.size() + 1, 0);
  p.twos_after.assign(p.blocks.size() + 1, 0);
  for (std::size_t i = p.blocks.size(); i-- > 0;) {
    p.ones_after[i] = p.ones_after[i + 1] + (p.blocks[i].size() == 1);
    p.twos_after[i] = p.twos_after[i + 1] + (p.blocks[i].size() == 2);
  }
  if (p.restrict == Restriction::All) {
    // Phi_{id, a^-1} moves any a in A to e, so e in A loses nothing.
    p.forced.push_back(g.identity());
    p.first_free = 1;  // block 0 is {e}
  }

  if (!spec.symmetry_breaking) {
    p.orbit_min.resize(p.order);
    for (std::uint32_t y = 0; y < p.order; ++y) p.orbit_min[y] = y;
    p.is_shift.assign(p.order, 0);
    return p;
  }
  for (const auto& f : g.automorphisms()) {
    if (p.restrict == Restriction::StronglySymmetric) {
      // only f_{i,0} fixes a, and so preserves the a-twisted inverse pairing
      const auto* d = std::get_if<DihedralForm>(&f.form());
      if (d == nullptr || d->j != 0) continue;
    }
    std::vector<std::uint32_t> t;
    for (auto x : f.table()) t.push_back(x.code);
    p.auts.push_back(std::move(t));
  }
  p.orbit_min.resize(p.order);
  for (std::uint32_t y = 0; y < p.order; ++y) {
    auto m = y;
    for (const auto& t : p.auts) m = std::min(m, t[y]);
    p.orbit_min[y] = m;
  }
  p.is_shift.assign(p.order, 0);
  if (p.restrict == Restriction::Symmetric) {
    auto elems = g.elements();
    for (auto z : elems) {
      if (z == g.identity() || g.mul_unchecked(z, z) != g.identity()) continue;
      bool central = std::all_of(elems.begin(), elems.end(),
                                 [&](Element x) { return g.mul_unchecked(x, z) == g.mul_unchecked(z, x); });
      if (central) p.shifts.push_back(z);
    }
  } else if (p.restrict == Restriction::StronglySymmetric) {
    p.shifts.push_back(g.reflection(0));
  }
  for (auto z : p.shifts) p.is_shift[z.code] = 1;
  return p;
}

bool size_feasible(const Problem& p, std::size_t from, std::size_t need) {
  auto ones = p.ones_after[from], twos = p.twos_after[from];
  return need <= ones + 2 * static_cast<std::size_t>(twos) && (need % 2 == 0 || ones > 0);
}

using Prefix = std::vector<std::uint32_t>;

// Prefixes of up to two block choices; the unit of work and of checkpointing.
std::vector<Prefix> make_tasks(const Problem& p) {
  std::vector<Prefix> tasks;
  std::size_t need0 = p.k - p.forced.size();
  if (need0 == 0) return {Prefix{}};
  std::vector<std::uint32_t> cur;
  auto rec = [&](auto&& self, std::size_t from, std::size_t need) -> void {
    if (need == 0 || cur.size() == 2) {
      tasks.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < p.blocks.size(); ++i) {
      auto sz = p.blocks[i].size();
      if (sz > need || !size_feasible(p, i + 1, need - sz)) continue;
      cur.push_back(static_cast<std::uint32_t>(i));
      self(self, i + 1, need - sz);
      cur.pop_back();
    }
  };
  if (size_feasible(p, p.first_free, need0)) rec(rec, p.first_free, need0);
  return tasks;
}

struct Solution {
  ElementSet a;
  ElementSet b;
};

struct ClassEntry {
  Key canonical_key;
  std::optional<NearFactorization> canonical;
  Key example_key;
  std::optional<NearFactorization> example;
  std::size_t solutions = 0;
};

class Shared {
 public:
  Shared(const Problem& p, const Budget& budget, std::size_t task_count)
      : problem(p), budget_(budget), start_(Clock::now()), done_(task_count, 0) {}

  const Problem& problem;

  bool stopped() const { return stop_.load(std::memory_order_relaxed); }

  void add_nodes(std::uint64_t n) {
    auto total = nodes_.fetch_add(n, std::memory_order_relaxed) + n;
    if (total > budget_.max_nodes || seconds() > budget_.max_seconds) stop_.store(true);
  }
  std::uint64_t nodes() const { return nodes_.load(); }
  double seconds() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

  std::size_t next_task() { return next_.fetch_add(1); }

  void record(const NearFactorization& nf) {
    auto canon = canonical_form(nf);
    auto ckey = canon.key();
    auto ekey = nf.key();
    std::lock_guard lock(mutex_);
    auto& entry = classes_[ckey];
    if (!entry.canonical) {
      entry.canonical_key = ckey;
      entry.canonical = canon;
    }
    if (!entry.example || ekey < entry.example_key) {
      entry.example_key = ekey;
      entry.example = nf;
    }
    ++entry.solutions;
    ++solutions_;
    if (keep_) all_.push_back(nf);
  }

  void keep_solutions() { keep_ = true; }
  std::vector<NearFactorization>& all_solutions() { return all_; }

  void mark_done(std::size_t task) {
    std::lock_guard lock(mutex_);
    done_[task] = 1;
  }
  bool is_done(std::size_t task) const { return done_[task] != 0; }
  std::size_t done_count() const { return static_cast<std::size_t>(std::count(done_.begin(), done_.end(), 1)); }

  std::mutex& io_mutex() { return io_mutex_; }
  std::map<Key, ClassEntry>& classes() { return classes_; }
  std::size_t solutions() const { return solutions_; }

 private:
  Budget budget_;
  Clock::time_point start_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> stop_{false};
  std::atomic<std::size_t> next_{0};
  std::mutex mutex_;
  std::mutex io_mutex_;
  std::map<Key, ClassEntry> classes_;
  std::vector<std::uint8_t> done_;  // bytes, so distinct tasks never share a word
  std::size_t solutions_ = 0;
  bool keep_ = false;
  std::vector<NearFactorization> all_;
};

class Worker {
 public:
  explicit Worker(Shared& shared)
      : s_(shared), p_(shared.problem), g_(*p_.group), masks_(p_.order), stamp_(p_.order, 0),
        all_(Bitset256::prefix(p_.order)) {}

  // Runs one task. False if the budget stopped it before completion.
  bool run(const Prefix& prefix, std::vector<Solution>& found) {
    found_ = &found;
    a_ = p_.forced;
    x1_ = 0;
    std::size_t need = p_.k - p_.forced.size();
    std::size_t from = p_.first_free;
    for (auto blk : prefix) {
      if (!admit(blk)) return true;
      for (auto x : p_.blocks[blk]) a_.push_back(x);
      need -= p_.blocks[blk].size();
      from = blk + 1;
    }
    extend_a(from, need);
    flush_nodes();
    return !s_.stopped();
  }

 private:
  void tick() {
    if (++pending_ >= 4096) flush_nodes();
  }
  void flush_nodes() {
    s_.add_nodes(pending_);
    pending_ = 0;
  }

  void extend_a(std::size_t from, std::size_t need) {
    tick();
    if (s_.stopped()) return;
    if (need == 0) {
      if (a_is_minimal()) solve_for_a();
      return;
    }
    auto saved_x1 = x1_;
    for (std::size_t i = from; i < p_.blocks.size(); ++i) {
      const auto& blk = p_.blocks[i];
      if (blk.size() > need || !size_feasible(p_, i + 1, need - blk.size())) continue;
      if (!admit(static_cast<std::uint32_t>(i))) {
        x1_ = saved_x1;
        continue;
      }
      for (auto x : blk) a_.push_back(x);
      extend_a(i + 1, need - blk.size());
      a_.resize(a_.size() - blk.size());
      x1_ = saved_x1;
      if (s_.stopped()) return;
    }
  }

  // Prefix conditions for adding block blk; sets x1_ on the first non-identity block.
  // Blocks come in increasing order of their least code.
  bool admit(std::uint32_t blk) {
    const auto& elems = p_.blocks[blk];
    if (elems.front().code == 0) return true;
    if (x1_ == 0) {
      x1_ = elems.front().code;
      if (p_.orbit_min[x1_] != x1_) return false;
    }
    bool has_e = !a_.empty() && a_.front().code == 0;
    for (auto y : elems) {
      if (p_.orbit_min[y.code] < x1_) return false;
      // A s contains e for the involution s in A, which sorts first
      if (!has_e && p_.is_shift[y.code]) return false;
    }
    return true;
  }

  // No image f(A) s is lexicographically smaller than A.
  bool a_is_minimal() {
    std::uint32_t img[Bitset256::kBits], cur[Bitset256::kBits];
    auto k = a_.size();
    for (std::size_t i = 0; i < k; ++i) cur[i] = a_[i].code;
    std::sort(cur, cur + k);
    auto smaller = [&] {
      std::sort(img, img + k);
      return std::lexicographical_compare(img, img + k, cur, cur + k);
    };
    for (const auto& t : p_.auts) {
      for (std::size_t i = 0; i < k; ++i) img[i] = t[a_[i].code];
      if (smaller()) return false;
      for (auto s : p_.shifts) {
        for (std::size_t i = 0; i < k; ++i) img[i] = g_.mul_unchecked(Element{t[a_[i].code]}, s).code;
        if (smaller()) return false;
      }
    }
    return true;
  }

  void solve_for_a() {
    if (++generation_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      generation_ = 1;
    }
    a_inv_.clear();
    for (auto x : a_) a_inv_.push_back(g_.inv_unchecked(x));
    b_blocks_.clear();
    Bitset256 covered;
    covered.set(0);  // e must stay uncovered
    solve_b(covered);
  }

  const Bitset256& mask(Element b) {
    if (stamp_[b.code] != generation_) {
      Bitset256 m;
      for (auto x : a_) m.set(g_.mul_unchecked(x, b).code);
      masks_[b.code] = m;
      stamp_[b.code] = generation_;
    }
    return masks_[b.code];
  }

  void solve_b(const Bitset256& covered) {
    tick();
    if (s_.stopped()) return;
    auto open = all_ - covered;
    if (open.none()) {
      emit();
      return;
    }
    Element target{static_cast<std::uint32_t>(open.first())};
    std::uint32_t tried[Bitset256::kBits];
    std::size_t n_tried = 0;
    for (auto ai : a_inv_) {
      auto b = g_.mul_unchecked(ai, target);
      auto blk = p_.block_of[b.code];
      if (std::find(tried, tried + n_tried, blk) != tried + n_tried) continue;
      tried[n_tried++] = blk;
      Bitset256 m;
      bool ok = true;
      for (auto y : p_.blocks[blk]) {
        const auto& my = mask(y);
        if (my.intersects(covered) || my.intersects(m)) {
          ok = false;
          break;
        }
        m |= my;
      }
      if (!ok) continue;
      b_blocks_.push_back(blk);
      solve_b(covered | m);
      b_blocks_.pop_back();
      if (s_.stopped()) return;
    }
  }

  void emit() {
    std::vector<Element> b;
    for (auto blk : b_blocks_) b.insert(b.end(), p_.blocks[blk].begin(), p_.blocks[blk].end());
    std::vector<Element> a = a_;
    if (p_.swapped) {
      std::vector<Element> na, nb;
      for (auto y : b) na.push_back(g_.inv_unchecked(y));
      for (auto x : a) nb.push_back(g_.inv_unchecked(x));
      a = std::move(na);
      b = std::move(nb);
    }
    found_->push_back(Solution{make_set(std::move(a)), make_set(std::move(b))});
  }

  Shared& s_;
  const Problem& p_;
  const FiniteGroup& g_;
  std::vector<Bitset256> masks_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t generation_ = 0;
  Bitset256 all_;
  std::vector<Element> a_;
  std::uint32_t x1_ = 0;  // least non-identity code of A, 0 while unset
  std::vector<Element> a_inv_;
  std::vector<std::uint32_t> b_blocks_;
  std::vector<Solution>* found_ = nullptr;
  std::uint64_t pending_ = 0;
};

// ---------------------------------------------------------------- checkpoints

using nlohmann::json;

json checkpoint_header(const SearchSpec& spec, std::size_t tasks) {
  return json{{"type", "header"},      {"group", spec.group.to_string()}, {"k", spec.k}, {"l", spec.l},
              {"restrict", to_string(spec.restrict)}, {"tasks", tasks}};
}

// Completed task indices and their solutions from an existing checkpoint.
std::map<std::size_t, std::vector<Solution>> load_checkpoint(const SearchSpec& spec, std::size_t tasks) {
  std::map<std::size_t, std::vector<Solution>> done;
  std::ifstream in(spec.checkpoint_path);
  if (!in) return done;
  std::string line;
  if (!std::getline(in, line)) return done;
  auto header = json::parse(line);
  if (header != checkpoint_header(spec, tasks)) {
    throw DomainError("checkpoint " + spec.checkpoint_path + " belongs to a different search");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json rec;
    try {
      rec = json::parse(line);
    } catch (const json::parse_error&) {
      break;  // torn final line from an interrupted run
    }
    std::vector<Solution> sols;
    for (const auto& s : rec.at("solutions")) {
      sols.push_back(Solution{codes_to_set(s.at(0).get<std::vector<std::uint32_t>>()),
                              codes_to_set(s.at(1).get<std::vector<std::uint32_t>>())});
    }
    done[rec.at("task").get<std::size_t>()] = std::move(sols);
  }
  return done;
}

void append_checkpoint(std::ofstream& out, std::size_t task, std::uint64_t nodes, const std::vector<Solution>& sols) {
  json rec{{"type", "task"}, {"task", task}, {"nodes", nodes}, {"solutions", json::array()}};
  for (const auto& s : sols) rec["solutions"].push_back(json::array({set_codes(s.a), set_codes(s.b)}));
  out << rec.dump() << '\n';
  out.flush();
}

}  // namespace

EnumerationResult enumerate_nfs(const SearchSpec& spec) {
  auto problem = make_problem(spec);
  auto tasks = make_tasks(problem);
  Shared shared(problem, spec.budget, tasks.size());
  if (spec.keep_solutions) shared.keep_solutions();

  std::ofstream checkpoint;
  std::size_t resumed = 0;
  if (!spec.checkpoint_path.empty()) {
    auto previous = load_checkpoint(spec, tasks.size());
    for (auto& [task, sols] : previous) {
      if (task >= tasks.size()) throw DomainError("checkpoint task index out of range");
      for (auto& s : sols) shared.record(NearFactorization(problem.group, s.a, s.b));
      shared.mark_done(task);
      ++resumed;
    }
    bool fresh = previous.empty() && !std::filesystem::exists(spec.checkpoint_path);
    checkpoint.open(spec.checkpoint_path, std::ios::app);
    if (!checkpoint) throw DomainError("cannot write checkpoint " + spec.checkpoint_path);
    if (fresh || std::filesystem::file_size(spec.checkpoint_path) == 0) {
      checkpoint << checkpoint_header(spec, tasks.size()).dump() << '\n';
      checkpoint.flush();
    }
  }

  auto work = [&] {
    Worker worker(shared);
    std::vector<Solution> found;
    while (!shared.stopped()) {
      auto t = shared.next_task();
      if (t >= tasks.size()) break;
      if (shared.is_done(t)) continue;
      found.clear();
      auto before = shared.nodes();
      if (!worker.run(tasks[t], found)) break;
      for (const auto& s : found) shared.record(NearFactorization(problem.group, s.a, s.b));
      shared.mark_done(t);
      if (checkpoint.is_open()) {
        std::lock_guard lock(shared.io_mutex());
        append_checkpoint(checkpoint, t, shared.nodes() - before, found);
      }
    }
  };

  unsigned threads = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, tasks.size())));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work);
  }

  EnumerationResult result;
  result.nodes_explored = shared.nodes();
  result.wall_seconds = shared.seconds();
  result.tasks_total = tasks.size();
  result.tasks_done = shared.done_count();
  result.tasks_resumed = resumed;
  result.complete = result.tasks_done == result.tasks_total;
  result.solutions_found = shared.solutions();
  for (auto& [key, entry] : shared.classes()) {
    result.classes.push_back(EnumeratedClass{*entry.canonical, *entry.example, entry.solutions});
  }
  if (spec.k == spec.l) {
    std::set<Key> merged;
    for (const auto& c : result.classes) {
      NearFactorization swapped(c.canonical.group(), c.canonical.b(), c.canonical.a());
      auto other = verify(swapped).is_nf ? canonical_form(swapped).key() : c.canonical.key();
      merged.insert(std::min(c.canonical.key(), other));
    }
    result.classes_up_to_swap = merged.size();
  }
  result.solutions = std::move(shared.all_solutions());
  std::sort(result.solutions.begin(), result.solutions.end());
  return result;
}

std::vector<ClassPartition> classify_given(std::span<const NearFactorization> nfs) {
  std::map<Key, ClassPartition> parts;
  for (std::size_t i = 0; i < nfs.size(); ++i) {
    const auto& nf = nfs[i];
    if (nf.group()->id() != nfs.front().group()->id() || nf.k() != nfs.front().k() || nf.l() != nfs.front().l()) {
      throw DomainError("classify_given needs NFs of one group and one shape");
    }
    auto report = verify(nf);
    if (!report.is_nf) throw PreconditionError("input " + std::to_string(i) + " is not a near-factorization: " + report.reason);
    auto canon = canonical_form(nf);
    auto key = canon.key();
    auto it = parts.find(key);
    if (it == parts.end()) it = parts.emplace(key, ClassPartition{canon, {}}).first;
    it->second.members.push_back(i);
  }
  std::vector<ClassPartition> out;
  for (auto& [key, part] : parts) out.push_back(std::move(part));
  return out;
}

std::vector<SweepEntry> dihedral_sweep(std::uint32_t n_min, std::uint32_t n_max, const Budget& per_entry,
                                       unsigned threads) {
  std::vector<SweepEntry> out;
  for (auto n = std::max<std::uint32_t>(n_min, 3); n <= n_max; ++n) {
    for (auto k : proper_divisors(2 * n - 1)) {
      SearchSpec spec;
      spec.group = GroupId::dihedral(n);
      spec.k = k;
      spec.l = (2 * n - 1) / k;
      spec.budget = per_entry;
      spec.threads = threads;
      auto r = enumerate_nfs(spec);
      out.push_back(SweepEntry{n, k, spec.l, r.classes.size(), r.complete, r.nodes_explored, r.wall_seconds});
    }
  }
  return out;
}

}  // namespace nearfac
