#include "sierpile/gasket.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace sierpile {

VertexAddr canonical(VertexAddr a) {
    // a = (u.X.c^m, c) with X != c  <->  (u.c.X^m, X); global corners have no partner
    const int n = a.level();
    int m = 0;
    while (m < n && a.word[n - 1 - m] == a.corner) ++m;
    if (m == n) return a;  // pure spelling: global corner
    VertexAddr b = a;
    const std::uint8_t x = a.word[n - 1 - m];
    b.word[n - 1 - m] = a.corner;
    for (int i = 0; i < m; ++i) b.word[n - m + i] = x;
    b.corner = x;
    return std::min(a, b);
}

std::string addr_str(const VertexAddr& a) {
    static const char* letters = "LRU";
    static const char* corners = "lrt";
    std::string s;
    for (auto w : a.word) s += letters[w];
    s += ':';
    s += corners[a.corner];
    return s;
}

VertexAddr parse_addr(const std::string& s, int level) {
    auto pos = s.find(':');
    if (pos == std::string::npos || pos != s.size() - 2)
        throw std::invalid_argument("bad address: " + s);
    VertexAddr a;
    for (std::size_t i = 0; i < pos; ++i) {
        switch (s[i]) {
            case 'L': a.word.push_back(0); break;
            case 'R': a.word.push_back(1); break;
            case 'U': a.word.push_back(2); break;
            default: throw std::invalid_argument("bad letter in address: " + s);
        }
    }
    switch (s[pos + 1]) {
        case 'l': a.corner = 0; break;
        case 'r': a.corner = 1; break;
        case 't': a.corner = 2; break;
        default: throw std::invalid_argument("bad corner in address: " + s);
    }
    if (a.level() != level) throw std::invalid_argument("address level mismatch: " + s);
    return canonical(a);
}

CornerPerm perm_compose(const CornerPerm& f, const CornerPerm& g) {
    return {f[g[0]], f[g[1]], f[g[2]]};
}

CornerPerm perm_inverse(const CornerPerm& g) {
    CornerPerm inv{};
    for (std::uint8_t i = 0; i < 3; ++i) inv[g[i]] = i;
    return inv;
}

int max_level() {
    if (const char* env = std::getenv("SIERPILE_MAX_LEVEL")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 12;
}

SgGraph::SgGraph(int level) : level_(level) {
    if (level < 0 || level > max_level())
        throw std::length_error("level above configured maximum");
    // enumerate minimal triangles (words) and glue their corners
    std::vector<std::uint8_t> word(level, 0);
    std::set<std::pair<int, int>> eset;
    auto vertex_id = [&](const VertexAddr& a) {
        auto it = index_.find(a);
        if (it != index_.end()) return it->second;
        int id = static_cast<int>(verts_.size());
        index_.emplace(a, id);
        verts_.push_back(a);
        return id;
    };
    bool done = false;
    while (!done) {
        int vid[3];
        for (std::uint8_t c = 0; c < 3; ++c)
            vid[c] = vertex_id(canonical(VertexAddr{word, c}));
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                eset.insert({std::min(vid[i], vid[j]), std::max(vid[i], vid[j])});
        done = true;
        for (int i = level - 1; i >= 0; --i) {
            if (++word[i] < 3) {
                done = false;
                break;
            }
            word[i] = 0;
        }
        if (level == 0) break;
    }
    edges_.assign(eset.begin(), eset.end());
    adj_.resize(verts_.size());
    for (auto [a, b] : edges_) {
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    for (std::uint8_t c = 0; c < 3; ++c)
        corners_[c] = index_.at(canonical(VertexAddr{std::vector<std::uint8_t>(level, c), c}));
    if (level >= 1) {
        // cut point opposite corner i is shared by the two copies other than i
        for (std::uint8_t i = 0; i < 3; ++i) {
            std::uint8_t a = (i + 1) % 3, b = (i + 2) % 3;
            std::uint8_t x = std::min(a, b), y = std::max(a, b);
            VertexAddr v;
            v.word.assign(level, y);
            v.word[0] = x;
            v.corner = y;
            cuts_[i] = index_.at(canonical(v));
        }
    } else {
        cuts_ = corners_;
    }
}

int SgGraph::index_of(const VertexAddr& a) const {
    auto it = index_.find(canonical(a));
    if (it == index_.end()) throw std::domain_error("address not in graph: " + addr_str(a));
    return it->second;
}

bool SgGraph::is_corner(int v) const {
    return v == corners_[0] || v == corners_[1] || v == corners_[2];
}

int SgGraph::apply(const CornerPerm& g, int v) const {
    VertexAddr a = verts_[v];
    for (auto& w : a.word) w = g[w];
    a.corner = g[a.corner];
    return index_.at(canonical(a));
}

int SgGraph::reflect(int axis, int v) const {
    if (axis < 1 || axis > 3) throw std::domain_error("reflection axis must be 1, 2 or 3");
    static const CornerPerm mirrors[3] = {kMirror1, kMirror2, kMirror3};
    return apply(mirrors[axis - 1], v);
}

int SgGraph::embed(int copy, const VertexAddr& sub) const {
    if (sub.level() != level_ - 1) throw std::domain_error("embed: level mismatch");
    VertexAddr a;
    a.word.reserve(level_);
    a.word.push_back(static_cast<std::uint8_t>(copy));
    a.word.insert(a.word.end(), sub.word.begin(), sub.word.end());
    a.corner = sub.corner;
    return index_.at(canonical(a));
}

std::optional<VertexAddr> SgGraph::local_addr(int copy, int v) const {
    const VertexAddr& a = verts_[v];
    auto strip = [&](const VertexAddr& s) -> std::optional<VertexAddr> {
        if (s.level() == 0 || s.word[0] != copy) return std::nullopt;
        VertexAddr out;
        out.word.assign(s.word.begin() + 1, s.word.end());
        out.corner = s.corner;
        return canonical(out);
    };
    if (auto r = strip(a)) return r;
    // try the partner spelling
    const int n = a.level();
    int m = 0;
    while (m < n && a.word[n - 1 - m] == a.corner) ++m;
    if (m == n) return std::nullopt;
    VertexAddr b = a;
    const std::uint8_t x = a.word[n - 1 - m];
    b.word[n - 1 - m] = a.corner;
    for (int i = 0; i < m; ++i) b.word[n - m + i] = x;
    b.corner = x;
    return strip(b);
}

std::pair<double, double> SgGraph::coords(int v) const {
    const VertexAddr& a = verts_[v];
    static const double cx[3] = {0.0, 1.0, 0.5};
    static const double cy[3] = {0.0, 0.0, 0.5};  // y in units of sqrt(3)
    double x = 0, y = 0, scale = 1.0;
    for (auto w : a.word) {
        scale /= 2;
        x += cx[w] * scale;
        y += cy[w] * scale;
    }
    x += cx[a.corner] * scale;
    y += cy[a.corner] * scale;
    return {x, y};
}

ContractedGraph::ContractedGraph(const SgGraph& g, const SinkSpec& s) : base_(&g), sinks_(s) {
    if (s.corners.empty() || s.corners.size() > 3)
        throw std::domain_error("sink set must contain 1..3 corners");
    std::vector<bool> is_sink(g.vertex_count(), false);
    for (int c : s.corners) is_sink[g.corner(c)] = true;
    site_of_.assign(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!is_sink[v]) {
            site_of_[v] = static_cast<int>(sites_.size());
            sites_.push_back(v);
        }
    }
    adj_.resize(sites_.size());
    bsink_.assign(sites_.size(), 0);
    deg_.assign(sites_.size(), 0);
    for (std::size_t i = 0; i < sites_.size(); ++i) {
        int v = sites_[i];
        for (int w : g.neighbors(v)) {
            if (is_sink[w])
                ++bsink_[i];
            else
                adj_[i].push_back(site_of_[w]);
        }
        deg_[i] = static_cast<int>(adj_[i].size()) + bsink_[i];
    }
}

}  // namespace sierpile
