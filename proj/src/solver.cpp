#include "domset/solver.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

#include "domset/bounds.hpp"
#include "domset/construction.hpp"

namespace domset {

namespace {

using Clock = std::chrono::steady_clock;

enum class Side : std::uint8_t { undecided, in, out };

// Partial assignment with incremental neighbor counts and an undo trail.
class SearchState {
public:
  SearchState(const Graph& g, const ParamTriple& p)
      : g_(g), p_(p), n_(g.vertex_count()),
        side_(static_cast<std::size_t>(n_), Side::undecided),
        in_(static_cast<std::size_t>(n_), 0),
        out_(static_cast<std::size_t>(n_), 0),
        und_(g.degrees().begin(), g.degrees().end()) {}

  bool start() {
    for (Vertex v = 0; v < n_; ++v) work_.push_back(v);
    return propagate();
  }

  std::size_t mark() const { return trail_.size(); }

  void assign(Vertex v, Side s) {
    side_[v] = s;
    trail_.push_back(v);
    if (s == Side::in) ++in_size_;
    for (Vertex w : g_.neighbors(v)) {
      (s == Side::in ? in_[w] : out_[w]) += 1;
      --und_[w];
      work_.push_back(w);
    }
    work_.push_back(v);
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const Vertex v = trail_.back();
      trail_.pop_back();
      const Side s = side_[v];
      if (s == Side::in) --in_size_;
      for (Vertex w : g_.neighbors(v)) {
        (s == Side::in ? in_[w] : out_[w]) -= 1;
        ++und_[w];
      }
      side_[v] = Side::undecided;
    }
  }

  bool propagate() {
    while (!work_.empty()) {
      const Vertex w = work_.back();
      work_.pop_back();
      if (!check(w)) {
        work_.clear();
        return false;
      }
    }
    return true;
  }

  // |In| plus the number of further vertices that must still join S: at least
  // the worst single deficit, and at least the total deficit divided by the
  // most any one undecided vertex can cover.
  int lower_bound() const {
    int worst = 0;
    std::int64_t total = 0;
    int cover = 0;
    for (Vertex v = 0; v < n_; ++v) {
      const int need = side_[v] == Side::in ? p_.k() - in_[v] : p_.kp() - in_[v];
      if (side_[v] == Side::undecided) cover = std::max(cover, g_.degree(v) + std::max(0, need));
      if (need <= 0) continue;
      total += need;
      if (side_[v] != Side::undecided) worst = std::max(worst, need);
    }
    if (total == 0) return in_size_;
    if (cover == 0) return INT_MAX;
    const auto spread = static_cast<int>((total + cover - 1) / cover);
    return in_size_ + std::max(worst, spread);
  }

  // Undecided vertex touching the most deficient neighbors, ties by degree
  // then index. -1 when the assignment is complete.
  Vertex branch_vertex() const {
    Vertex best = -1;
    std::int64_t best_score = -1;
    for (Vertex v = 0; v < n_; ++v) {
      if (side_[v] != Side::undecided) continue;
      int needy = 0;
      for (Vertex w : g_.neighbors(v)) {
        const int need = side_[w] == Side::in ? p_.k() - in_[w] : p_.kp() - in_[w];
        if (need > 0) ++needy;
      }
      const std::int64_t score = std::int64_t{needy} * (n_ + 1) + und_[v] + out_[v];
      if (score > best_score) {
        best_score = score;
        best = v;
      }
    }
    return best;
  }

  int in_size() const { return in_size_; }

  VertexSet in_set() const {
    VertexSet s(n_);
    for (Vertex v = 0; v < n_; ++v)
      if (side_[v] == Side::in) s.insert(v);
    return s;
  }

private:
  void force_neighbors(Vertex w, Side s) {
    for (Vertex x : g_.neighbors(w))
      if (side_[x] == Side::undecided) assign(x, s);
  }

  bool check(Vertex w) {
    const int in = in_[w], out = out_[w], und = und_[w];
    switch (side_[w]) {
      case Side::in:
        if (in + und < p_.k()) return false;
        if (in < p_.k() && in + und == p_.k()) force_neighbors(w, Side::in);
        return true;
      case Side::out:
        if (in + und < p_.kp() || out + und < p_.kpp()) return false;
        if (in < p_.kp() && in + und == p_.kp())
          force_neighbors(w, Side::in);
        else if (out < p_.kpp() && out + und == p_.kpp())
          force_neighbors(w, Side::out);
        return true;
      case Side::undecided: {
        const bool can_in = in + und >= p_.k();
        const bool can_out = in + und >= p_.kp() && out + und >= p_.kpp();
        if (!can_in && !can_out) return false;
        if (!can_in) assign(w, Side::out);
        else if (!can_out) assign(w, Side::in);
        return true;
      }
    }
    return true;
  }

  const Graph& g_;
  ParamTriple p_;
  int n_;
  std::vector<Side> side_;
  std::vector<int> in_;
  std::vector<int> out_;
  std::vector<int> und_;
  std::vector<Vertex> trail_;
  std::vector<Vertex> work_;
  int in_size_ = 0;
};

using Decision = std::pair<Vertex, Side>;

struct Shared {
  std::atomic<int> best;
  int floor = -1;
  std::mutex mu;
  std::optional<VertexSet> witness;
  std::atomic<bool> stop{false};
  std::atomic<bool> budget_hit{false};
  std::atomic<std::uint64_t> nodes{0};
  std::uint64_t max_nodes = 0;
  Clock::time_point deadline;

  bool visit() {
    if (stop.load(std::memory_order_relaxed)) return false;
    const auto count = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (count > max_nodes || ((count & 1023) == 0 && Clock::now() > deadline)) {
      budget_hit = true;
      stop = true;
      return false;
    }
    return true;
  }

  void offer(const SearchState& st) {
    std::lock_guard lock(mu);
    if (st.in_size() >= best.load()) return;
    best = st.in_size();
    witness = st.in_set();
    if (best.load() <= floor) stop = true;
  }
};

void dfs(SearchState& st, Shared& sh) {
  if (!sh.visit()) return;
  if (st.lower_bound() >= sh.best.load(std::memory_order_relaxed)) return;
  const Vertex v = st.branch_vertex();
  if (v < 0) {
    sh.offer(st);
    return;
  }
  for (Side s : {Side::in, Side::out}) {
    const auto mark = st.mark();
    st.assign(v, s);
    if (st.propagate()) dfs(st, sh);
    st.undo(mark);
    if (sh.stop.load(std::memory_order_relaxed)) return;
  }
}

// Expands the tree to `depth` branching levels, handing each open frontier
// node to `tasks` as its decision path. Complete leaves are offered directly.
void split(SearchState& st, Shared& sh, int depth, std::vector<Decision>& path,
           std::vector<std::vector<Decision>>& tasks) {
  if (!sh.visit()) return;
  if (st.lower_bound() >= sh.best.load()) return;
  const Vertex v = st.branch_vertex();
  if (v < 0) {
    sh.offer(st);
    return;
  }
  if (depth == 0) {
    tasks.push_back(path);
    return;
  }
  for (Side s : {Side::in, Side::out}) {
    const auto mark = st.mark();
    st.assign(v, s);
    if (st.propagate()) {
      path.emplace_back(v, s);
      split(st, sh, depth - 1, path, tasks);
      path.pop_back();
    }
    st.undo(mark);
  }
}

void run_parallel(const Graph& g, const ParamTriple& p, Shared& sh, unsigned threads) {
  std::vector<std::vector<Decision>> tasks;
  {
    SearchState root(g, p);
    if (!root.start()) return;
    int depth = 0;
    while ((1u << depth) < threads * 8u && depth < 16) ++depth;
    std::vector<Decision> path;
    split(root, sh, depth, path, tasks);
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    SearchState st(g, p);
    if (!st.start()) return;
    const auto base = st.mark();
    for (std::size_t i = next++; i < tasks.size() && !sh.stop; i = next++) {
      bool ok = true;
      for (const auto& [v, s] : tasks[i]) {
        st.assign(v, s);
        if (!st.propagate()) {
          ok = false;
          break;
        }
      }
      if (ok) {
        // The replayed root of the subtree was already counted while splitting.
        if (st.lower_bound() < sh.best.load()) {
          const Vertex v = st.branch_vertex();
          for (Side s : {Side::in, Side::out}) {
            const auto mark = st.mark();
            st.assign(v, s);
            if (st.propagate()) dfs(st, sh);
            st.undo(mark);
            if (sh.stop) break;
          }
        }
      }
      st.undo(base);
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
}

}  // namespace

std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::budget_exceeded: return "budget_exceeded";
  }
  return "unknown";
}

SolveResult solve_exact(const Graph& g, const ParamTriple& p, const SolveOptions& options) {
  const auto start = Clock::now();
  const int n = g.vertex_count();

  Shared sh;
  sh.best = n + 1;
  sh.max_nodes = options.budget.max_nodes;
  sh.deadline = start + options.budget.max_time;

  if (trivial_feasible(g, p)) {
    sh.best = n;
    sh.witness = VertexSet::full(n);
  }
  if (auto c = best_construction(g, p); c && c->size() < sh.best) {
    sh.best = c->size();
    sh.witness = c->set;
  }
  if (options.bound_pruning && n > 0) {
    for (const auto& lb : {lower_bound_general(g, p), lower_bound_kp_zero(g, p)})
      if (lb) sh.floor = std::max(sh.floor, lb->value);
  }

  if (sh.best.load() > sh.floor) {
    unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
    if (threads <= 1) {
      SearchState st(g, p);
      if (st.start()) dfs(st, sh);
    } else {
      run_parallel(g, p, sh, threads);
    }
  }

  SolveResult r;
  r.nodes_explored = sh.nodes.load();
  if (sh.budget_hit) {
    r.status = SolveStatus::budget_exceeded;
  } else if (sh.witness) {
    r.status = SolveStatus::optimal;
    r.gamma = sh.best.load();
    r.witness = std::move(sh.witness);
  } else {
    r.status = SolveStatus::infeasible;
  }
  r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return r;
}

}  // namespace domset
