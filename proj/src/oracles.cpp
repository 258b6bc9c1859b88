#include "hlnet/oracles.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <limits>
#include <map>
#include <thread>

namespace hlnet {

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> adj(g.vertex_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (VertexId w : g.neighbors(v))
            adj[v] |= Mask{1} << w;
    return adj;
}

int popcount(Mask m) { return std::popcount(m); }

/// Shared node/time budget. Workers count locally and flush every
/// `flush_every` nodes; the node cap is therefore approximate when several
/// workers run at once.
class Budget {
public:
    explicit Budget(const SearchLimits& limits) : limits_(limits) {
        if (limits.time_budget > 0)
            deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                           std::chrono::duration<double>(limits.time_budget));
    }

    bool stopped() const { return stop_.load(std::memory_order_relaxed); }

    /// Called once per expanded node with the worker's unflushed count.
    bool charge(std::uint64_t& local) {
        ++local;
        if (limits_.max_nodes_expanded != 0 &&
            seen_.load(std::memory_order_relaxed) + local >= limits_.max_nodes_expanded) {
            flush(local);
            stop_.store(true, std::memory_order_relaxed);
            return false;
        }
        if (local >= flush_every) {
            flush(local);
            if (deadline_ && Clock::now() >= *deadline_)
                stop_.store(true, std::memory_order_relaxed);
        }
        return !stopped();
    }

    void flush(std::uint64_t& local) {
        seen_.fetch_add(local, std::memory_order_relaxed);
        local = 0;
    }

    std::uint64_t expanded() const { return seen_.load(); }

private:
    static constexpr std::uint64_t flush_every = 1024;
    SearchLimits limits_;
    std::optional<Clock::time_point> deadline_;
    std::atomic<std::uint64_t> seen_{0};
    std::atomic<bool> stop_{false};
};

/// Runs task(i) for i in [0, count) on `threads` workers pulling indices in
/// order.
template <typename Task>
void run_tasks(std::size_t count, unsigned threads, Task&& task) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    const unsigned used = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    for (unsigned w = 0; w < used; ++w)
        workers.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                task(i);
        });
}

/// Lower a shared incumbent; used only for pruning across workers.
void lower_to(std::atomic<std::int64_t>& shared, std::int64_t value) {
    std::int64_t cur = shared.load();
    while (value < cur && !shared.compare_exchange_weak(cur, value)) {
    }
}

void raise_to(std::atomic<std::int64_t>& shared, std::int64_t value) {
    std::int64_t cur = shared.load();
    while (value > cur && !shared.compare_exchange_weak(cur, value)) {
    }
}

void require_oracle_size(const Graph& g, const char* what) {
    if (g.vertex_count() > oracle_max_vertices)
        fail(ErrorCode::limit, std::string(what) + ": graph has " +
                                   std::to_string(g.vertex_count()) + " vertices, limit is " +
                                   std::to_string(oracle_max_vertices));
}

VertexSet mask_to_set(Mask m) {
    std::vector<VertexId> ids;
    while (m) {
        ids.push_back(static_cast<VertexId>(std::countr_zero(m)));
        m &= m - 1;
    }
    return VertexSet(std::move(ids));
}

// --- max induced edges ------------------------------------------------------

class InducedSearch {
public:
    InducedSearch(const std::vector<Mask>& adj, int degree, std::size_t k, Budget& budget,
                  std::atomic<std::int64_t>& global_best)
        : adj_(adj), k_(k), budget_(budget), global_best_(global_best),
          optimistic_(k + 1, 0) {
        // optimistic_[m] = sum_{j=m}^{k-1} min(j, degree): the most edges the
        // remaining k - m vertices can add when |X| = m.
        for (std::size_t m = k; m-- > 0;)
            optimistic_[m] = optimistic_[m + 1] + std::min<std::int64_t>(m, degree);
    }

    /// Search all k-subsets whose smallest element is `first`.
    void run_from(VertexId first) {
        dfs(first + 1, Mask{1} << first, 1, 0);
        budget_.flush(local_nodes_);
    }

    std::int64_t best = -1;
    Mask best_set = 0;

private:
    void dfs(std::size_t start, Mask chosen, std::size_t size, std::int64_t edges) {
        if (!budget_.charge(local_nodes_))
            return;
        if (size == k_) {
            if (edges > best) {
                best = edges;
                best_set = chosen;
                raise_to(global_best_, edges);
            }
            return;
        }
        const std::int64_t bound = edges + optimistic_[size];
        if (bound <= best || bound < global_best_.load(std::memory_order_relaxed))
            return;
        const std::size_t last = adj_.size() - (k_ - size);
        for (std::size_t v = start; v <= last; ++v) {
            dfs(v + 1, chosen | (Mask{1} << v), size + 1, edges + popcount(adj_[v] & chosen));
            if (budget_.stopped())
                return;
        }
    }

    const std::vector<Mask>& adj_;
    std::size_t k_;
    Budget& budget_;
    std::atomic<std::int64_t>& global_best_;
    std::vector<std::int64_t> optimistic_;
    std::uint64_t local_nodes_ = 0;
};

// --- min component edge cut ---------------------------------------------------

constexpr std::int64_t infinite_cost = std::numeric_limits<std::int64_t>::max();

/// Restricted-growth-string enumeration: vertex i goes to a block in
/// [0, max(assign[0..i-1]) + 1], so every partition appears exactly once.
class CutSearch {
public:
    CutSearch(const std::vector<Mask>& adj, std::size_t parts, Budget& budget,
              std::atomic<std::int64_t>& global_best)
        : adj_(adj), n_(adj.size()), parts_(parts), budget_(budget), global_best_(global_best),
          assign_(adj.size(), 0), blocks_(parts, 0), increments_(adj.size(), 0) {}

    /// Search every completion of the given prefix (itself a valid RGS prefix).
    void run_from(const std::vector<std::uint8_t>& prefix) {
        std::fill(blocks_.begin(), blocks_.end(), Mask{0});
        Mask assigned = 0;
        std::size_t used = 0;
        std::int64_t cost = 0;
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            const std::size_t b = prefix[i];
            cost += popcount(adj_[i] & assigned) - popcount(adj_[i] & blocks_[b]);
            blocks_[b] |= Mask{1} << i;
            assigned |= Mask{1} << i;
            assign_[i] = prefix[i];
            used = std::max(used, b + 1);
        }
        dfs(prefix.size(), assigned, used, cost);
        budget_.flush(local_nodes_);
    }

    std::int64_t best = infinite_cost;
    std::vector<std::uint8_t> best_assign;

private:
    // Cost that any completion must still add: each unassigned vertex pays at
    // least its assigned neighbors outside the best existing block, and the
    // (parts - used) vertices that open new blocks pay for all their assigned
    // neighbors.
    std::int64_t lookahead(std::size_t next, Mask assigned, std::size_t used) {
        std::int64_t total = 0;
        std::size_t m = 0;
        for (std::size_t j = next; j < n_; ++j) {
            const int outside = popcount(adj_[j] & assigned);
            int best_inside = 0;
            for (std::size_t b = 0; b < used; ++b)
                best_inside = std::max(best_inside, popcount(adj_[j] & blocks_[b]));
            total += outside - best_inside;
            increments_[m++] = best_inside;
        }
        const std::size_t openers = parts_ - used;
        if (openers > 0) {
            std::partial_sort(increments_.begin(), increments_.begin() + openers,
                              increments_.begin() + m);
            for (std::size_t o = 0; o < openers; ++o)
                total += increments_[o];
        }
        return total;
    }

    void dfs(std::size_t i, Mask assigned, std::size_t used, std::int64_t cost) {
        if (!budget_.charge(local_nodes_))
            return;
        if (i == n_) {
            if (used == parts_ && cost < best) {
                best = cost;
                best_assign = assign_;
                lower_to(global_best_, cost);
            }
            return;
        }
        if (n_ - i < parts_ - used)
            return;
        const std::int64_t bound = cost + lookahead(i, assigned, used);
        if (bound >= best || bound > global_best_.load(std::memory_order_relaxed))
            return;

        const Mask bit = Mask{1} << i;
        const int outside_all = popcount(adj_[i] & assigned);
        const std::size_t top = std::min(used + 1, parts_);
        for (std::size_t b = 0; b < top; ++b) {
            const std::int64_t added = outside_all - popcount(adj_[i] & blocks_[b]);
            assign_[i] = static_cast<std::uint8_t>(b);
            blocks_[b] |= bit;
            dfs(i + 1, assigned | bit, std::max(used, b + 1), cost + added);
            blocks_[b] &= ~bit;
            if (budget_.stopped())
                return;
        }
    }

    const std::vector<Mask>& adj_;
    std::size_t n_;
    std::size_t parts_;
    Budget& budget_;
    std::atomic<std::int64_t>& global_best_;
    std::vector<std::uint8_t> assign_;
    std::vector<Mask> blocks_;
    std::vector<int> increments_;
    std::uint64_t local_nodes_ = 0;
};

/// All RGS prefixes of the given length with fewer than `parts` blocks, in
/// lexicographic order.
std::vector<std::vector<std::uint8_t>> rgs_prefixes(std::size_t length, std::size_t parts) {
    std::vector<std::vector<std::uint8_t>> out{{0}};
    for (std::size_t len = 1; len < length; ++len) {
        std::vector<std::vector<std::uint8_t>> next;
        for (const auto& p : out) {
            const std::size_t used = *std::max_element(p.begin(), p.end()) + 1;
            for (std::size_t b = 0; b < std::min(used + 1, parts); ++b) {
                auto q = p;
                q.push_back(static_cast<std::uint8_t>(b));
                next.push_back(std::move(q));
            }
        }
        out = std::move(next);
    }
    return out;
}

PartitionWitness witness_from_assignment(const Graph& g, const std::vector<std::uint8_t>& assign,
                                         std::size_t parts) {
    std::vector<std::vector<VertexId>> blocks(parts);
    for (std::size_t v = 0; v < assign.size(); ++v)
        blocks[assign[v]].push_back(static_cast<VertexId>(v));
    PartitionWitness w;
    for (auto& b : blocks)
        w.blocks.emplace_back(std::move(b));
    std::vector<Edge> cross;
    for (const Edge& e : g.edges())
        if (assign[e.u] != assign[e.v])
            cross.push_back(e);
    w.cross_edges = EdgeSet(std::move(cross));
    return w;
}

} // namespace

InducedSearchResult max_induced_edges(const Graph& g, std::size_t k, const SearchLimits& limits) {
    require_oracle_size(g, "max_induced_edges");
    const std::size_t count = g.vertex_count();
    if (k < 1 || k > count)
        fail(ErrorCode::domain, "max_induced_edges: k must lie in [1, " + std::to_string(count) +
                                    "] (got " + std::to_string(k) + ")");
    const auto adj = adjacency_masks(g);
    Budget budget(limits);
    std::atomic<std::int64_t> global_best{-1};

    // One task per smallest element of the subset.
    const std::size_t tasks = count - k + 1;
    std::vector<std::int64_t> values(tasks, -1);
    std::vector<Mask> sets(tasks, 0);
    run_tasks(tasks, limits.threads, [&](std::size_t t) {
        if (budget.stopped())
            return;
        InducedSearch search(adj, g.dim(), k, budget, global_best);
        search.run_from(static_cast<VertexId>(t));
        values[t] = search.best;
        sets[t] = search.best_set;
    });

    InducedSearchResult result;
    result.status = budget.stopped() ? SearchStatus::incomplete : SearchStatus::complete;
    result.nodes_expanded = budget.expanded();
    std::int64_t best = -1;
    for (std::size_t t = 0; t < tasks; ++t) {
        if (values[t] > best) {
            best = values[t];
            result.witness = mask_to_set(sets[t]);
        }
    }
    if (best >= 0)
        result.value = best;
    return result;
}

CutSearchResult min_component_edge_cut(const Graph& g, std::size_t parts,
                                       const SearchLimits& limits) {
    require_oracle_size(g, "min_component_edge_cut");
    const std::size_t count = g.vertex_count();
    if (parts < 1 || parts > count)
        fail(ErrorCode::domain, "min_component_edge_cut: parts must lie in [1, " +
                                    std::to_string(count) + "] (got " + std::to_string(parts) + ")");
    const auto adj = adjacency_masks(g);
    Budget budget(limits);
    std::atomic<std::int64_t> global_best{infinite_cost};

    std::size_t prefix_len = 1;
    if (limits.threads > 1) {
        while (prefix_len < count && rgs_prefixes(prefix_len, parts).size() < 8 * limits.threads)
            ++prefix_len;
    }
    const auto prefixes = rgs_prefixes(prefix_len, parts);

    std::vector<std::int64_t> values(prefixes.size(), infinite_cost);
    std::vector<std::vector<std::uint8_t>> assigns(prefixes.size());
    run_tasks(prefixes.size(), limits.threads, [&](std::size_t t) {
        if (budget.stopped())
            return;
        CutSearch search(adj, parts, budget, global_best);
        search.run_from(prefixes[t]);
        values[t] = search.best;
        assigns[t] = std::move(search.best_assign);
    });

    CutSearchResult result;
    result.status = budget.stopped() ? SearchStatus::incomplete : SearchStatus::complete;
    result.nodes_expanded = budget.expanded();
    std::int64_t best = infinite_cost;
    std::size_t best_task = 0;
    for (std::size_t t = 0; t < prefixes.size(); ++t) {
        if (values[t] < best) {
            best = values[t];
            best_task = t;
        }
    }
    if (best != infinite_cost) {
        result.value = best;
        result.witness = witness_from_assignment(g, assigns[best_task], parts);
    }
    return result;
}

PartitionWitness components_after(const Graph& g, const EdgeSet& removed) {
    require_edges(g, removed);
    const std::size_t count = g.vertex_count();
    std::vector<std::int64_t> component(count, -1);
    std::vector<std::vector<VertexId>> blocks;
    std::vector<VertexId> stack;
    for (VertexId root = 0; root < count; ++root) {
        if (component[root] >= 0)
            continue;
        const auto id = static_cast<std::int64_t>(blocks.size());
        blocks.emplace_back();
        component[root] = id;
        stack.push_back(root);
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            blocks.back().push_back(v);
            for (VertexId w : g.neighbors(v)) {
                if (component[w] < 0 && !removed.contains(Edge(v, w))) {
                    component[w] = id;
                    stack.push_back(w);
                }
            }
        }
    }
    PartitionWitness out;
    for (auto& b : blocks)
        out.blocks.emplace_back(std::move(b));
    std::vector<Edge> cross;
    for (const Edge& e : removed)
        if (component[e.u] != component[e.v])
            cross.push_back(e);
    out.cross_edges = EdgeSet(std::move(cross));
    return out;
}

// --- isomorphism --------------------------------------------------------------

namespace {

/// Colour refinement run jointly on both graphs so colour ids are comparable.
std::pair<std::vector<int>, std::vector<int>> refine_colors(const std::vector<Mask>& a,
                                                            const std::vector<Mask>& b) {
    const std::size_t n = a.size();
    std::vector<int> ca(n), cb(n);
    for (std::size_t v = 0; v < n; ++v) {
        ca[v] = popcount(a[v]);
        cb[v] = popcount(b[v]);
    }
    int classes = -1;
    for (std::size_t round = 0; round < n; ++round) {
        std::map<std::vector<int>, int> ids;
        auto signature = [](const std::vector<Mask>& adj, const std::vector<int>& col,
                            std::size_t v) {
            std::vector<int> sig{col[v]};
            std::vector<int> nb;
            for (Mask m = adj[v]; m; m &= m - 1)
                nb.push_back(col[std::countr_zero(m)]);
            std::sort(nb.begin(), nb.end());
            sig.insert(sig.end(), nb.begin(), nb.end());
            return sig;
        };
        std::vector<std::vector<int>> sa(n), sb(n);
        for (std::size_t v = 0; v < n; ++v) {
            sa[v] = signature(a, ca, v);
            sb[v] = signature(b, cb, v);
            ids.emplace(sa[v], 0);
            ids.emplace(sb[v], 0);
        }
        int next = 0;
        for (auto& [sig, id] : ids)
            id = next++;
        std::vector<int> na(n), nb(n);
        for (std::size_t v = 0; v < n; ++v) {
            na[v] = ids[sa[v]];
            nb[v] = ids[sb[v]];
        }
        if (next == classes)
            break;
        classes = next;
        ca = std::move(na);
        cb = std::move(nb);
    }
    return {ca, cb};
}

} // namespace

bool isomorphic_small(const Graph& a, const Graph& b) {
    if (a.vertex_count() > isomorphism_max_vertices || b.vertex_count() > isomorphism_max_vertices)
        fail(ErrorCode::limit, "isomorphic_small: graphs are limited to 16 vertices");
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    const auto adj_a = adjacency_masks(a);
    const auto adj_b = adjacency_masks(b);
    const auto [ca, cb] = refine_colors(adj_a, adj_b);
    {
        auto sa = ca, sb = cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb)
            return false;
    }
    const std::size_t n = adj_a.size();
    std::vector<int> image(n, -1);
    Mask used = 0;
    // Map a's vertices in label order; adjacency to already-mapped vertices
    // must be preserved exactly.
    auto extend = [&](auto&& self, std::size_t v) -> bool {
        if (v == n)
            return true;
        for (std::size_t w = 0; w < n; ++w) {
            if ((used >> w) & 1 || cb[w] != ca[v])
                continue;
            bool ok = true;
            for (std::size_t u = 0; u < v && ok; ++u) {
                const bool in_a = (adj_a[v] >> u) & 1;
                const bool in_b = (adj_b[w] >> image[u]) & 1;
                ok = in_a == in_b;
            }
            if (!ok)
                continue;
            image[v] = static_cast<int>(w);
            used |= Mask{1} << w;
            if (self(self, v + 1))
                return true;
            used &= ~(Mask{1} << w);
        }
        image[v] = -1;
        return false;
    };
    return extend(extend, 0);
}

} // namespace hlnet
