#include "sierpile/sandpile.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace sierpile {

bool SandpileConfig::stable() const {
    for (std::size_t v = 0; v < chips.size(); ++v)
        if (chips[v] >= graph->degree(static_cast<int>(v))) return false;
    return true;
}

SandpileConfig make_config(const ContractedGraph& g, std::vector<long> chips) {
    if (static_cast<int>(chips.size()) != g.site_count())
        throw std::invalid_argument("chip vector size mismatch");
    return {&g, std::move(chips)};
}

SandpileConfig zero_config(const ContractedGraph& g) {
    return {&g, std::vector<long>(g.site_count(), 0)};
}

SandpileConfig max_stable(const ContractedGraph& g) {
    std::vector<long> c(g.site_count());
    for (int v = 0; v < g.site_count(); ++v) c[v] = g.degree(v) - 1;
    return {&g, std::move(c)};
}

std::pair<SandpileConfig, Odometer> stabilize(const SandpileConfig& c) {
    const ContractedGraph& g = *c.graph;
    SandpileConfig out = c;
    Odometer od{std::vector<long>(g.site_count(), 0)};
    std::deque<int> queue;
    std::vector<bool> queued(g.site_count(), false);
    for (int v = 0; v < g.site_count(); ++v)
        if (out.chips[v] >= g.degree(v)) {
            queue.push_back(v);
            queued[v] = true;
        }
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        queued[v] = false;
        long deg = g.degree(v);
        if (out.chips[v] < deg) continue;
        long times = out.chips[v] / deg;
        out.chips[v] -= times * deg;
        od.counts[v] += times;
        for (int w : g.neighbors(v)) {
            out.chips[w] += times;
            if (!queued[w] && out.chips[w] >= g.degree(w)) {
                queue.push_back(w);
                queued[w] = true;
            }
        }
        // chips sent along sink edges leave the system
    }
    return {out, od};
}

SandpileConfig markov_step(const SandpileConfig& c, CounterRng& rng) {
    SandpileConfig x = c;
    int v = static_cast<int>(rng.below(x.chips.size()));
    ++x.chips[v];
    return stabilize(x).first;
}

bool is_recurrent(const SandpileConfig& c) {
    const ContractedGraph& g = *c.graph;
    if (!c.stable()) return false;
    SandpileConfig x = c;
    for (int v = 0; v < g.site_count(); ++v) x.chips[v] += g.sink_multiplicity(v);
    auto [res, od] = stabilize(x);
    if (!(res == c)) return false;
    for (long t : od.counts)
        if (t != 1) return false;
    return true;
}

SandpileConfig group_add(const SandpileConfig& a, const SandpileConfig& b) {
    if (a.graph != b.graph) throw std::invalid_argument("group_add: different graphs");
    if (!is_recurrent(a) || !is_recurrent(b))
        throw std::invalid_argument("group_add: operands must be recurrent");
    SandpileConfig s = a;
    for (std::size_t v = 0; v < s.chips.size(); ++v) s.chips[v] += b.chips[v];
    return stabilize(s).first;
}

SandpileConfig identity_element(const ContractedGraph& g) {
    // e = ((sigma_max - (2 sigma_max)°) + sigma_max)°
    SandpileConfig m = max_stable(g);
    SandpileConfig twice = m;
    for (auto& x : twice.chips) x *= 2;
    SandpileConfig st = stabilize(twice).first;
    SandpileConfig diff = m;
    for (std::size_t v = 0; v < diff.chips.size(); ++v)
        diff.chips[v] = m.chips[v] - st.chips[v] + m.chips[v];
    return stabilize(diff).first;
}

namespace {

// Edge list at a site in the canonical order: non-sink neighbours by the far
// endpoint's canonical address ascending, then the parallel sink edges.
struct EdgeRef {
    int to;      // site id or -1 for sink
    int pidx;    // parallel index for sink edges, else 0
};

std::vector<EdgeRef> ordered_edges(const ContractedGraph& g, int v) {
    std::vector<int> nb = g.neighbors(v);
    std::sort(nb.begin(), nb.end(), [&](int a, int b) {
        return g.base().addr(g.base_vertex(a)) < g.base().addr(g.base_vertex(b));
    });
    std::vector<EdgeRef> out;
    for (int w : nb) out.push_back({w, 0});
    for (int i = 0; i < g.sink_multiplicity(v); ++i) out.push_back({-1, i});
    return out;
}

}  // namespace

bool tree_valid(const RootedSpanningTree& t) {
    const ContractedGraph& g = *t.graph;
    int n = g.site_count();
    std::vector<int> depth(n, -1);
    std::function<bool(int)> reach = [&](int v) -> bool {
        if (depth[v] >= 0) return true;
        std::vector<int> chain;
        int u = v;
        while (u >= 0 && depth[u] < 0) {
            chain.push_back(u);
            depth[u] = -2;  // visiting
            u = t.parent[u];
        }
        if (u >= 0 && depth[u] == -2) return false;  // cycle
        int d = (u < 0) ? 0 : depth[u];
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) depth[*it] = ++d;
        return true;
    };
    for (int v = 0; v < n; ++v)
        if (!reach(v)) return false;
    // parent edges must exist
    for (int v = 0; v < n; ++v) {
        if (t.parent[v] < 0) {
            if (t.edge_index[v] >= g.sink_multiplicity(v)) return false;
        } else {
            const auto& nb = g.neighbors(v);
            if (std::count(nb.begin(), nb.end(), t.parent[v]) == 0) return false;
        }
    }
    return true;
}

namespace {

std::vector<int> tree_levels(const RootedSpanningTree& t) {
    int n = t.graph->site_count();
    std::vector<int> lvl(n, -1);
    std::function<int(int)> depth = [&](int v) -> int {
        if (v < 0) return 0;
        if (lvl[v] >= 0) return lvl[v];
        return lvl[v] = depth(t.parent[v]) + 1;
    };
    for (int v = 0; v < n; ++v) depth(v);
    return lvl;
}

}  // namespace

SandpileConfig tree_to_sandpile(const RootedSpanningTree& t) {
    const ContractedGraph& g = *t.graph;
    auto lvl = tree_levels(t);
    std::vector<long> chips(g.site_count());
    for (int v = 0; v < g.site_count(); ++v) {
        auto edges = ordered_edges(g, v);
        int a = 0, b = 0;
        // position of the parent edge e_T(v) in the order
        int epos = -1;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (edges[i].to == t.parent[v] &&
                (t.parent[v] >= 0 || edges[i].pidx == t.edge_index[v])) {
                epos = static_cast<int>(i);
                break;
            }
        }
        assert(epos >= 0);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            int ly = edges[i].to < 0 ? 0 : lvl[edges[i].to];
            if (ly < lvl[v] - 1) ++a;
            if (ly == lvl[v] - 1 && static_cast<int>(i) < epos) ++b;
        }
        chips[v] = g.degree(v) - 1 - a - b;
    }
    return {&g, std::move(chips)};
}

RootedSpanningTree sandpile_to_tree(const SandpileConfig& c) {
    const ContractedGraph& g = *c.graph;
    if (!is_recurrent(c)) throw std::invalid_argument("sandpile_to_tree: not recurrent");
    int n = g.site_count();
    RootedSpanningTree t{&g, std::vector<int>(n, -2), std::vector<int>(n, 0)};
    std::vector<int> lvl(n, -1);
    std::vector<int> burned_round(n, -1);
    // round 0 burns the sink; a site burns when chips >= deg - (edges to burnt)
    std::vector<int> burnt_edges(n, 0);
    for (int v = 0; v < n; ++v) burnt_edges[v] = g.sink_multiplicity(v);
    int round = 0;
    int remaining = n;
    while (remaining > 0) {
        ++round;
        std::vector<int> now;
        for (int v = 0; v < n; ++v)
            if (burned_round[v] < 0 && c.chips[v] >= g.degree(v) - burnt_edges[v])
                now.push_back(v);
        if (now.empty()) throw std::logic_error("burning stalled on recurrent config");
        for (int v : now) burned_round[v] = round;
        for (int v : now)
            for (int w : g.neighbors(v))
                if (burned_round[w] < 0) ++burnt_edges[w];
        remaining -= static_cast<int>(now.size());
    }
    for (int v = 0; v < n; ++v) {
        auto edges = ordered_edges(g, v);
        // a = edges to rounds < r-1 (with the sink at round 0)
        int a = 0;
        std::vector<int> level_edges;  // indices of edges to round r-1
        for (std::size_t i = 0; i < edges.size(); ++i) {
            int ry = edges[i].to < 0 ? 0 : burned_round[edges[i].to];
            if (ry < burned_round[v] - 1) ++a;
            if (ry == burned_round[v] - 1) level_edges.push_back(static_cast<int>(i));
        }
        long b = g.degree(v) - 1 - a - c.chips[v];
        assert(b >= 0 && b < static_cast<long>(level_edges.size()));
        const EdgeRef& e = edges[level_edges[b]];
        t.parent[v] = e.to;
        t.edge_index[v] = e.to < 0 ? e.pidx : 0;
    }
    assert(tree_valid(t));
    return t;
}

int descendant_count(const RootedSpanningTree& t, int site) {
    const ContractedGraph& g = *t.graph;
    int n = g.site_count();
    // ancestor test by parent chains (graphs here are small)
    auto lvl = tree_levels(t);
    int d = 0;
    for (int y : g.neighbors(site)) {
        int u = y;
        bool anc = false;
        while (u >= 0) {
            if (u == site) {
                anc = true;
                break;
            }
            if (lvl[u] <= lvl[site]) break;
            u = t.parent[u];
        }
        if (anc) ++d;
    }
    return d;
}

std::vector<SandpileConfig> recurrent_configs(const ContractedGraph& g) {
    std::vector<SandpileConfig> out;
    std::vector<long> chips(g.site_count(), 0);
    std::function<void(int)> rec = [&](int v) {
        if (v == g.site_count()) {
            SandpileConfig c{&g, chips};
            if (is_recurrent(c)) out.push_back(c);
            return;
        }
        for (long k = 0; k < g.degree(v); ++k) {
            chips[v] = k;
            rec(v + 1);
        }
        chips[v] = 0;
    };
    rec(0);
    return out;
}

void enumerate_spanning_trees(const ContractedGraph& g,
                              const std::function<bool(const RootedSpanningTree&)>& fn) {
    // edge list: site-site edges once, sink edges with their parallel index
    struct E {
        int a, b, pidx;
    };
    std::vector<E> edges;
    for (int v = 0; v < g.site_count(); ++v) {
        for (int w : g.neighbors(v))
            if (w > v) edges.push_back({v, w, 0});
        for (int i = 0; i < g.sink_multiplicity(v); ++i) edges.push_back({v, -1, i});
    }
    const int n = g.site_count() + 1;  // sites + sink
    const int m = static_cast<int>(edges.size());
    std::vector<int> uf(n);
    auto idx = [&](int v) { return v < 0 ? n - 1 : v; };
    std::vector<int> chosen;
    bool stop = false;

    std::function<bool(int, const std::vector<int>&)> can_connect =
        [&](int from, const std::vector<int>& base) {
            std::vector<int> p = base;
            std::function<int(int)> find = [&](int x) {
                while (p[x] != x) x = p[x] = p[p[x]];
                return x;
            };
            int comps = 0;
            for (int i = 0; i < n; ++i)
                if (p[i] == i) ++comps;
            for (int e = from; e < m && comps > 1; ++e) {
                int ra = find(idx(edges[e].a)), rb = find(idx(edges[e].b));
                if (ra != rb) {
                    p[ra] = rb;
                    --comps;
                }
            }
            return comps == 1;
        };

    std::function<void(int, std::vector<int>, int)> rec = [&](int e, std::vector<int> p,
                                                              int comps) {
        if (stop) return;
        if (comps == 1) {
            // build parents by orienting toward the sink
            RootedSpanningTree t{&g, std::vector<int>(g.site_count(), -2),
                                 std::vector<int>(g.site_count(), 0)};
            std::vector<std::vector<std::pair<int, int>>> adj(n);
            for (int ei : chosen) {
                adj[idx(edges[ei].a)].push_back({idx(edges[ei].b), edges[ei].pidx});
                adj[idx(edges[ei].b)].push_back({idx(edges[ei].a), edges[ei].pidx});
            }
            std::deque<int> dq{n - 1};
            std::vector<bool> seen(n, false);
            seen[n - 1] = true;
            while (!dq.empty()) {
                int v = dq.front();
                dq.pop_front();
                for (auto [w, pi] : adj[v]) {
                    if (seen[w]) continue;
                    seen[w] = true;
                    t.parent[w] = (v == n - 1) ? -1 : v;
                    t.edge_index[w] = (v == n - 1) ? pi : 0;
                    dq.push_back(w);
                }
            }
            if (!fn(t)) stop = true;
            return;
        }
        if (e == m) return;
        std::function<int(std::vector<int>&, int)> find = [](std::vector<int>& pp, int x) {
            while (pp[x] != x) x = pp[x] = pp[pp[x]];
            return x;
        };
        int ra = find(p, idx(edges[e].a)), rb = find(p, idx(edges[e].b));
        if (ra != rb) {
            auto p2 = p;
            p2[ra] = rb;
            chosen.push_back(e);
            rec(e + 1, std::move(p2), comps - 1);
            chosen.pop_back();
        }
        if (stop) return;
        if (can_connect(e + 1, p)) rec(e + 1, std::move(p), comps);
    };
    std::vector<int> p0(n);
    std::iota(p0.begin(), p0.end(), 0);
    rec(0, std::move(p0), n);
}

}  // namespace sierpile
