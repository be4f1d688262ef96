#include "sierpile/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "sierpile/linalg.hpp"

namespace sierpile {

DescDist ForestEnumeration::dist(ForestClass c, int vertex) const {
    const auto& t = tallies.at(c)[vertex];
    BigInt tot = counts.at(c);
    DescDist d = dist_zero();
    for (int k = 0; k < 5; ++k) d[k] = Rat(BigInt(t[k])) / Rat(tot);
    return d;
}

DescDist TreeEnumeration::dist(ForestClass c, int site) const {
    const auto& t = tallies.at(c)[site];
    DescDist d = dist_zero();
    for (int k = 0; k < 5; ++k) d[k] = Rat(t[k], counts.at(c));
    return d;
}

namespace {

// parent pointers (-1 = root) -> depths; iterative to spare the stack
void fill_depths(const std::vector<int>& parent, std::vector<int>& depth) {
    const int n = static_cast<int>(parent.size());
    depth.assign(n, -1);
    std::vector<int> chain;
    for (int v = 0; v < n; ++v) {
        if (depth[v] >= 0) continue;
        chain.clear();
        int u = v;
        while (u >= 0 && depth[u] < 0) {
            chain.push_back(u);
            u = parent[u];
        }
        int d = (u < 0) ? 0 : depth[u];
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) depth[*it] = ++d;
    }
}

// des(v) = #neighbours y whose root path passes v; roots have parent -1 and
// count every neighbour in their own component.
void forest_des(const std::vector<std::vector<int>>& adj, const std::vector<int>& parent,
                std::vector<int>& depth, std::vector<int>& des) {
    const int n = static_cast<int>(adj.size());
    fill_depths(parent, depth);
    des.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        int d = 0;
        for (int y : adj[v]) {
            int u = y;
            while (u >= 0 && depth[u] > depth[v]) u = parent[u];
            if (u == v) ++d;
        }
        des[v] = d;
    }
}

int classify_and_root(const SgGraph& g, const std::vector<std::pair<int, int>>& edges,
                      std::uint64_t mask, std::vector<int>& uf, std::vector<int>& parent) {
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) uf[v] = v;
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    int comps = n;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (!(mask >> e & 1)) continue;
        int ra = find(edges[e].first), rb = find(edges[e].second);
        if (ra == rb) return -1;
        uf[ra] = rb;
        --comps;
    }
    const int c0 = find(g.corner(0)), c1 = find(g.corner(1)), c2 = find(g.corner(2));
    int cls, root_a = -1, root_b = -1, root_c = -1;
    if (comps == 1) {
        cls = 0;
        root_a = g.corner(2);
    } else if (comps == 2) {
        if (c1 == c2 && c0 != c1) {
            cls = 1;  // left isolated; big component rooted at the top
            root_a = g.corner(0);
            root_b = g.corner(2);
        } else if (c0 == c1 && c2 != c0) {
            cls = 2;  // top isolated; big component rooted at the right
            root_a = g.corner(2);
            root_b = g.corner(1);
        } else if (c0 == c2 && c1 != c0) {
            cls = 3;  // right isolated; big component rooted at the top
            root_a = g.corner(1);
            root_b = g.corner(2);
        } else {
            return -1;
        }
    } else if (comps == 3) {
        if (c0 == c1 || c0 == c2 || c1 == c2) return -1;
        cls = 4;
        root_a = g.corner(0);
        root_b = g.corner(1);
        root_c = g.corner(2);
    } else {
        return -1;
    }
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        if (r != c0 && r != c1 && r != c2) return -1;  // component without a corner
    }
    // BFS from the roots inside the forest
    std::vector<std::vector<int>> fadj(n);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (!(mask >> e & 1)) continue;
        fadj[edges[e].first].push_back(edges[e].second);
        fadj[edges[e].second].push_back(edges[e].first);
    }
    parent.assign(n, -2);
    std::vector<int> queue;
    for (int r : {root_a, root_b, root_c})
        if (r >= 0) {
            parent[r] = -1;
            queue.push_back(r);
        }
    for (std::size_t h = 0; h < queue.size(); ++h) {
        int v = queue[h];
        for (int w : fadj[v])
            if (parent[w] == -2) {
                parent[w] = v;
                queue.push_back(w);
            }
    }
    if (static_cast<int>(queue.size()) != n) return -1;
    return cls;
}

}  // namespace

ForestEnumeration enumerate_forests(int level, int num_threads) {
    if (level > 2) throw std::length_error("enumerate_forests: level must be <= 2");
    const SgGraph g(level);
    const auto& edges = g.edges();
    const int n = g.vertex_count();
    const long long total = 1LL << edges.size();
#ifdef _OPENMP
    int nt = num_threads > 0 ? num_threads : omp_get_max_threads();
#else
    int nt = 1;
#endif
    struct Part {
        std::array<long long, 5> counts{};
        std::vector<std::array<std::array<long long, 5>, 5>> tal;  // [vertex][cls][k]
    };
    std::vector<Part> parts(nt);
    for (auto& p : parts) p.tal.assign(n, {});
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);

#ifdef _OPENMP
#pragma omp parallel num_threads(nt)
#endif
    {
#ifdef _OPENMP
        int tid = omp_get_thread_num();
#else
        int tid = 0;
#endif
        Part& part = parts[tid];
        std::vector<int> uf(n), parent(n), depth(n), des(n);
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
        for (long long mask = 0; mask < total; ++mask) {
            int cls = classify_and_root(g, edges, static_cast<std::uint64_t>(mask), uf,
                                        parent);
            if (cls < 0) continue;
            ++part.counts[cls];
            forest_des(adj, parent, depth, des);
            for (int v = 0; v < n; ++v) ++part.tal[v][cls][des[v]];
        }
    }
    ForestEnumeration out;
    out.level = level;
    static const ForestClass cls_of[5] = {ForestClass::T, ForestClass::S1, ForestClass::S2,
                                          ForestClass::S3, ForestClass::R};
    for (int c = 0; c < 5; ++c) {
        BigInt cnt = 0;
        std::vector<std::array<long long, 5>> tal(n, std::array<long long, 5>{});
        for (const auto& p : parts) {
            cnt += p.counts[c];
            for (int v = 0; v < n; ++v)
                for (int k = 0; k < 5; ++k) tal[v][k] += p.tal[v][c][k];
        }
        out.counts[cls_of[c]] = cnt;
        out.tallies[cls_of[c]] = std::move(tal);
    }
    return out;
}

namespace {

// which sink corner the pidx-th parallel sink edge of a site attaches to
int sink_corner_of(const ContractedGraph& g, int site, int pidx) {
    const SgGraph& base = g.base();
    int seen = 0;
    for (int w : base.neighbors(g.base_vertex(site))) {
        if (g.site_of(w) < 0) {
            if (seen == pidx) {
                for (int c = 0; c < 3; ++c)
                    if (base.corner(c) == w) return c;
            }
            ++seen;
        }
    }
    throw std::logic_error("sink edge not found");
}

// lift a contracted-tree parent structure to base-vertex parents (roots = sinks)
void lift_parents(const ContractedGraph& g, const RootedSpanningTree& t,
                  std::vector<int>& bparent) {
    const SgGraph& base = g.base();
    bparent.assign(base.vertex_count(), -1);
    for (int v = 0; v < g.site_count(); ++v) {
        int bv = g.base_vertex(v);
        if (t.parent[v] >= 0)
            bparent[bv] = g.base_vertex(t.parent[v]);
        else
            bparent[bv] = base.corner(sink_corner_of(g, v, t.edge_index[v]));
    }
    for (int c : g.sinks().corners) bparent[base.corner(c)] = -1;
}

}  // namespace

TreeEnumeration enumerate_contraction_trees(const ContractedGraph& g) {
    TreeEnumeration out;
    const SgGraph& base = g.base();
    const int nb = base.vertex_count();
    std::vector<std::vector<int>> adj(nb);
    for (int v = 0; v < nb; ++v) adj[v] = base.neighbors(v);
    std::vector<int> bparent, depth, des;
    const auto& sinks = g.sinks().corners;
    enumerate_spanning_trees(g, [&](const RootedSpanningTree& t) {
        ++out.total;
        lift_parents(g, t, bparent);
        ForestClass cls = ForestClass::T;
        if (sinks.size() == 2) {
            // sinks {top, right}: the left corner drains to one of them
            int u = base.corner(0);
            while (bparent[u] >= 0) u = bparent[u];
            cls = (u == base.corner(1)) ? ForestClass::S2 : ForestClass::S3;
        } else if (sinks.size() == 3) {
            cls = ForestClass::R;
        }
        auto& tal = out.tallies[cls];
        if (tal.empty()) tal.assign(nb, std::array<long long, 5>{});
        ++out.counts[cls];
        forest_des(adj, bparent, depth, des);
        for (int v = 0; v < nb; ++v) ++tal[v][des[v]];
        return true;
    });
    return out;
}

BigInt kirchhoff_count(const SgGraph& g, const std::vector<int>& merged_corners) {
    const int n = g.vertex_count();
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    if (!merged_corners.empty()) {
        int target = g.corner(merged_corners[0]);
        for (int c : merged_corners) id[g.corner(c)] = target;
    }
    std::vector<int> remap(n, -1);
    int m = 0;
    for (int v = 0; v < n; ++v) {
        int r = id[v];
        if (remap[r] < 0) remap[r] = m++;
    }
    std::vector<std::vector<BigInt>> lap(m, std::vector<BigInt>(m, 0));
    for (auto [a, b] : g.edges()) {
        int ra = remap[id[a]], rb = remap[id[b]];
        if (ra == rb) continue;
        lap[ra][ra] += 1;
        lap[rb][rb] += 1;
        lap[ra][rb] -= 1;
        lap[rb][ra] -= 1;
    }
    std::vector<std::vector<BigInt>> red(m - 1, std::vector<BigInt>(m - 1));
    for (int i = 0; i + 1 < m; ++i)
        for (int j = 0; j + 1 < m; ++j) red[i][j] = lap[i][j];
    return bareiss_det(std::move(red));
}

RootedSpanningTree wilson_sample(const ContractedGraph& g, CounterRng& rng) {
    const int n = g.site_count();
    RootedSpanningTree t{&g, std::vector<int>(n, -2), std::vector<int>(n, 0)};
    std::vector<int> next(n, 0), next_pidx(n, 0);
    std::vector<bool> in_tree(n, false);
    for (int v0 = 0; v0 < n; ++v0) {
        if (in_tree[v0]) continue;
        int u = v0;
        while (true) {
            long deg = g.degree(u);
            long r = static_cast<long>(rng.below(static_cast<std::uint64_t>(deg)));
            long ns = static_cast<long>(g.neighbors(u).size());
            if (r < ns) {
                next[u] = g.neighbors(u)[r];
                next_pidx[u] = 0;
            } else {
                next[u] = -1;
                next_pidx[u] = static_cast<int>(r - ns);
            }
            if (next[u] < 0 || in_tree[next[u]]) break;
            u = next[u];
        }
        u = v0;
        while (!in_tree[u]) {
            in_tree[u] = true;
            t.parent[u] = next[u];
            t.edge_index[u] = next[u] < 0 ? next_pidx[u] : 0;
            if (next[u] < 0) break;
            u = next[u];
        }
    }
    return t;
}

std::vector<int> loop_erase(const std::vector<int>& walk) {
    std::vector<int> path;
    std::map<int, std::size_t> pos;
    for (int x : walk) {
        auto it = pos.find(x);
        if (it != pos.end()) {
            while (path.size() > it->second + 1) {
                pos.erase(path.back());
                path.pop_back();
            }
        } else {
            pos[x] = path.size();
            path.push_back(x);
        }
    }
    return path;
}

LerwSample lerw(const ContractedGraph& g, int start, CounterRng& rng) {
    std::vector<int> path{start};
    std::map<int, std::size_t> pos{{start, 0}};
    int u = start;
    while (u >= 0) {
        long deg = g.degree(u);
        long r = static_cast<long>(rng.below(static_cast<std::uint64_t>(deg)));
        long ns = static_cast<long>(g.neighbors(u).size());
        int v = (r < ns) ? g.neighbors(u)[r] : -1;
        auto it = pos.find(v);
        if (it != pos.end()) {
            while (path.size() > it->second + 1) {
                pos.erase(path.back());
                path.pop_back();
            }
        } else {
            pos[v] = path.size();
            path.push_back(v);
        }
        u = v;
    }
    return {path};
}

WilsonStats wilson_monte_carlo(const ContractedGraph& g, long long samples,
                               std::uint64_t seed, int num_threads) {
    const SgGraph& base = g.base();
    const int nb = base.vertex_count();
#ifdef _OPENMP
    int nt = num_threads > 0 ? num_threads : omp_get_max_threads();
#else
    int nt = 1;
#endif
    std::vector<WilsonStats> parts(nt);
    const int ne = base.edge_count();
    for (auto& p : parts) {
        p.des_tallies.assign(nb, {});
        p.edge_hits.assign(ne, 0);
    }
    // base edge id lookup
    std::map<std::pair<int, int>, int> eid;
    for (int e = 0; e < ne; ++e) eid[base.edges()[e]] = e;
    auto edge_id = [&](int a, int b) {
        return eid.at({std::min(a, b), std::max(a, b)});
    };
    std::vector<std::vector<int>> adj(nb);
    for (int v = 0; v < nb; ++v) adj[v] = base.neighbors(v);

#ifdef _OPENMP
#pragma omp parallel num_threads(nt)
#endif
    {
#ifdef _OPENMP
        int tid = omp_get_thread_num();
#else
        int tid = 0;
#endif
        auto& part = parts[tid];
        std::vector<int> bparent, depth, des;
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
        for (long long s = 0; s < samples; ++s) {
            CounterRng rng(seed, static_cast<std::uint64_t>(s));
            auto t = wilson_sample(g, rng);
            lift_parents(g, t, bparent);
            forest_des(adj, bparent, depth, des);
            double tot = 0;
            for (int v = 0; v < nb; ++v) {
                ++part.des_tallies[v][des[v]];
                tot += des[v];
                if (bparent[v] >= 0) ++part.edge_hits[edge_id(v, bparent[v])];
            }
            double mean = tot / nb;
            part.zeta_sum += mean;
            part.zeta_sq_sum += mean * mean;
        }
    }
    WilsonStats out;
    out.samples = samples;
    out.des_tallies.assign(nb, {});
    out.edge_hits.assign(ne, 0);
    for (const auto& p : parts) {
        for (int v = 0; v < nb; ++v)
            for (int k = 0; k < 5; ++k) out.des_tallies[v][k] += p.des_tallies[v][k];
        for (int e = 0; e < ne; ++e) out.edge_hits[e] += p.edge_hits[e];
        out.zeta_sum += p.zeta_sum;
        out.zeta_sq_sum += p.zeta_sq_sum;
    }
    return out;
}

}  // namespace sierpile
