#include "sierpile/ensembles.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <deque>
#include <numeric>

namespace sierpile {
namespace {

// copy corner -> global boundary position (0,1,2 corners; 3=bcut, 4=lcut, 5=rcut)
constexpr int kPos[3][3] = {{0, 3, 4}, {3, 1, 5}, {4, 5, 2}};

const std::array<CornerPerm, 6>& all_perms() {
    static const std::array<CornerPerm, 6> ps = {
        CornerPerm{0, 1, 2}, CornerPerm{0, 2, 1}, CornerPerm{1, 0, 2},
        CornerPerm{1, 2, 0}, CornerPerm{2, 0, 1}, CornerPerm{2, 1, 0}};
    return ps;
}

struct PType {
    // block root corner -> corner mask; feeds: (feeder block root, entry corner)
    std::vector<std::pair<int, std::uint8_t>> blocks;
    std::vector<std::pair<int, int>> feeds;
};

PType ptype_of(Ens e) {
    switch (e) {
        case Ens::P1: return {{{2, 0b111}}, {}};
        case Ens::P2: return {{{2, 0b100}, {1, 0b011}}, {}};
        case Ens::P2F: return {{{2, 0b100}, {1, 0b011}}, {{2, 0}}};
        case Ens::P3: return {{{0, 0b001}, {1, 0b010}, {2, 0b100}}, {}};
    }
    throw std::logic_error("ptype_of");
}

ForestClass parent_class(Ens e) {
    switch (e) {
        case Ens::P1: return ForestClass::T;
        case Ens::P2:
        case Ens::P2F: return ForestClass::S2;
        case Ens::P3: return ForestClass::R;
    }
    throw std::logic_error("parent_class");
}

const std::array<std::uint8_t, 3>& class_masks(ForestClass c) {
    // component corner masks; unused slots zero
    static const std::map<ForestClass, std::array<std::uint8_t, 3>> m = {
        {ForestClass::T, {0b111, 0, 0}},   {ForestClass::S1, {0b001, 0b110, 0}},
        {ForestClass::S2, {0b100, 0b011, 0}}, {ForestClass::S3, {0b010, 0b101, 0}},
        {ForestClass::R, {0b001, 0b010, 0b100}}};
    return m.at(c);
}

int comp_count(ForestClass c) {
    return c == ForestClass::T ? 1 : c == ForestClass::R ? 3 : 2;
}

std::vector<EnsCase> derive(Ens parent) {
    const PType pt = ptype_of(parent);
    std::array<int, 3> want{};  // corner -> block root
    for (auto [root, mask] : pt.blocks)
        for (int c = 0; c < 3; ++c)
            if (mask >> c & 1) want[c] = root;
    const ForestClass kAll[5] = {ForestClass::T, ForestClass::S1, ForestClass::S2,
                                 ForestClass::S3, ForestClass::R};
    std::vector<EnsCase> out;
    Rat wsum(0);
    for (auto cL : kAll)
        for (auto cR : kAll)
            for (auto cU : kAll) {
                std::array<ForestClass, 3> cls{cL, cR, cU};
                // components
                std::vector<EnsCase::Comp> comps;
                for (int cp = 0; cp < 3; ++cp)
                    for (int k = 0; k < comp_count(cls[cp]); ++k)
                        comps.push_back({cp, class_masks(cls[cp])[k], -1, -1});
                const int nc = static_cast<int>(comps.size());
                auto comp_at = [&](int cp, int corner) {
                    for (int i = 0; i < nc; ++i)
                        if (comps[i].copy == cp && (comps[i].mask >> corner & 1)) return i;
                    throw std::logic_error("comp_at");
                };
                // glue at the three cut positions, rejecting cycles
                std::vector<int> uf(nc);
                std::iota(uf.begin(), uf.end(), 0);
                auto find = [&](int x) {
                    while (uf[x] != x) x = uf[x] = uf[uf[x]];
                    return x;
                };
                // adjacency between comps: (other comp, my corner, their corner)
                std::vector<std::vector<std::array<int, 3>>> cadj(nc);
                bool ok = true;
                for (int cut = 3; cut <= 5; ++cut) {
                    int a = -1, b = -1, ka = -1, kb = -1;
                    for (int cp = 0; cp < 3 && b < 0; ++cp)
                        for (int k = 0; k < 3; ++k)
                            if (kPos[cp][k] == cut) {
                                if (a < 0) {
                                    a = comp_at(cp, k);
                                    ka = k;
                                } else {
                                    b = comp_at(cp, k);
                                    kb = k;
                                    break;
                                }
                            }
                    int ra = find(a), rb = find(b);
                    if (ra == rb) {
                        ok = false;
                        break;
                    }
                    uf[ra] = rb;
                    cadj[a].push_back({b, ka, kb});
                    cadj[b].push_back({a, kb, ka});
                }
                if (!ok) continue;
                // block structure must match the parent partition
                std::array<int, 3> pcc{};  // parent corner -> comp
                for (int pc = 0; pc < 3; ++pc)
                    for (int cp = 0; cp < 3; ++cp)
                        for (int k = 0; k < 3; ++k)
                            if (kPos[cp][k] == pc) pcc[pc] = comp_at(cp, k);
                std::map<int, std::uint8_t> reps;  // uf rep -> parent corner mask
                for (int pc = 0; pc < 3; ++pc) reps[find(pcc[pc])] |= 1 << pc;
                if (reps.size() != pt.blocks.size()) continue;
                std::map<int, int> blockroot;  // uf rep -> block root corner
                bool good = true;
                for (auto [rep, mask] : reps) {
                    int hit = -1;
                    for (auto [root, bm] : pt.blocks)
                        if (bm == mask) hit = root;
                    if (hit < 0) {
                        good = false;
                        break;
                    }
                    blockroot[rep] = hit;
                }
                if (!good) continue;
                for (int i = 0; i < nc && good; ++i)
                    if (!blockroot.count(find(i))) good = false;  // cornerless block
                if (!good) continue;
                // routing: BFS from true sinks following comp edges and feed edges
                std::vector<int> rparent(nc, -2), rpenter(nc, -1), rexit(nc, -1);
                std::deque<int> dq;
                std::vector<bool> feeder_root(3, false);
                for (auto [fr, e] : pt.feeds) feeder_root[fr] = true;
                auto loc = [&](int comp, int pc) {
                    for (int k = 0; k < 3; ++k)
                        if (kPos[comps[comp].copy][k] == pc) return k;
                    throw std::logic_error("loc");
                };
                for (auto [rep, root] : blockroot) {
                    if (feeder_root[root]) continue;
                    int c = pcc[root];
                    rparent[c] = -1;
                    rexit[c] = loc(c, root);
                    dq.push_back(c);
                }
                std::vector<std::array<int, 4>> feed_edges;
                for (auto [fr, e] : pt.feeds)
                    feed_edges.push_back({pcc[fr], loc(pcc[fr], fr), pcc[e], loc(pcc[e], e)});
                while (!dq.empty()) {
                    int c = dq.front();
                    dq.pop_front();
                    for (auto [nb, lc, lnb] : cadj[c]) {
                        if (rparent[nb] == -2) {
                            rparent[nb] = c;
                            rpenter[nb] = lc;  // enter corner of parent comp
                            rexit[nb] = lnb;
                            dq.push_back(nb);
                        }
                    }
                    for (auto [src, lsrc, dst, ldst] : feed_edges) {
                        if (dst == c && rparent[src] == -2) {
                            rparent[src] = dst;
                            rpenter[src] = ldst;
                            rexit[src] = lsrc;
                            dq.push_back(src);
                        }
                    }
                }
                for (int i = 0; i < nc; ++i) assert(rparent[i] != -2);
                EnsCase cs;
                cs.cls = cls;
                cs.comps = comps;
                for (int i = 0; i < nc; ++i) {
                    cs.comps[i].root = rexit[i];
                    cs.comps[i].block = blockroot.at(find(i));
                }
                cs.routes.resize(nc);
                for (int i = 0; i < nc; ++i) {
                    cs.routes[i].push_back({i, -1, rexit[i]});
                    int cur = i;
                    while (rparent[cur] >= 0) {
                        int par = rparent[cur];
                        cs.routes[i].push_back({par, rpenter[cur], rexit[par]});
                        cur = par;
                    }
                }
                // per-copy std map and decorated ensemble
                for (int cp = 0; cp < 3; ++cp) {
                    std::vector<int> mine;
                    for (int i = 0; i < nc; ++i)
                        if (comps[i].copy == cp) mine.push_back(i);
                    if (cls[cp] == ForestClass::T) {
                        int rt = cs.comps[mine[0]].root;
                        for (const auto& h : all_perms())
                            if (h[rt] == 2) {
                                cs.g[cp] = h;
                                break;
                            }
                        // normalise using the tree's mirror symmetry: prefer a rotation
                        for (const auto& h : {kIdentity, kRotCW, kRotCCW})
                            if (h[rt] == 2) cs.g[cp] = h;
                        cs.maptype[cp] = Ens::P1;
                    } else if (cls[cp] == ForestClass::R) {
                        cs.g[cp] = kIdentity;
                        cs.maptype[cp] = Ens::P3;
                    } else {
                        int iso = -1, big = -1;
                        for (int i : mine)
                            (std::popcount(comps[i].mask) == 1 ? iso : big) = i;
                        int iso_c = std::countr_zero(comps[iso].mask);
                        assert(cs.comps[iso].root == iso_c);
                        int bigroot = cs.comps[big].root;
                        for (const auto& h : all_perms())
                            if (h[iso_c] == 2 && h[bigroot] == 1) cs.g[cp] = h;
                        bool feed = false;
                        for (std::size_t s = 1; s < cs.routes[iso].size(); ++s)
                            if (cs.routes[iso][s].comp == big) feed = true;
                        cs.maptype[cp] = feed ? Ens::P2F : Ens::P2;
                    }
                }
                // weight: product of child class counts over the parent count;
                // constant in n (checked at two levels)
                auto weight_at = [&](int n) {
                    Rat w(1);
                    for (auto c : cls) w *= Rat(class_count(c, n));
                    return Rat(w) / Rat(class_count(parent_class(parent), n + 1));
                };
                Rat w0 = weight_at(0), w1 = weight_at(1);
                assert(w0 == w1);
                cs.weight = w0;
                wsum += w0;
                out.push_back(std::move(cs));
            }
    assert(wsum == 1);
    return out;
}

}  // namespace

Ens undecorated(Ens e) { return e == Ens::P2F ? Ens::P2 : e; }

const std::vector<EnsCase>& ensemble_cases(Ens parent) {
    static const std::array<std::vector<EnsCase>, 4> tables = {
        derive(Ens::P1), derive(Ens::P2), derive(Ens::P2F), derive(Ens::P3)};
    return tables[static_cast<int>(parent)];
}

namespace {

const std::map<Ens, std::array<std::uint8_t, 3>>& std_blockroot_of_corner() {
    // corner -> root corner of its block in standard position
    static const std::map<Ens, std::array<std::uint8_t, 3>> m = {
        {Ens::P1, {2, 2, 2}}, {Ens::P2, {1, 1, 2}}, {Ens::P3, {0, 1, 2}}};
    return m;
}

std::vector<std::uint8_t> other_block_roots(Ens e, int corner) {
    auto mine = std_blockroot_of_corner().at(e)[corner];
    std::vector<std::uint8_t> out;
    if (e == Ens::P2) out.push_back(mine == 2 ? 1 : 2);
    if (e == Ens::P3)
        for (std::uint8_t r = 0; r < 3; ++r)
            if (r != mine) out.push_back(r);
    return out;
}

std::vector<CornerAtom> base_joint(Ens e, int x) {
    std::vector<CornerAtom> v;
    auto atom = [&](int d, std::array<std::uint8_t, 3> z, int i, Rat p) {
        CornerAtom a;
        a.d = d;
        a.z = z;
        a.i = i;
        a.p = p;
        v.push_back(a);
    };
    switch (e) {
        case Ens::P1:
            if (x == 2) {
                atom(2, {0, 0, 0}, 0, Rat(1));
            } else {
                atom(0, {0, 0, 0}, 0, Rat(2, 3));
                atom(1, {0, 0, 0}, 1, Rat(1, 3));
            }
            break;
        case Ens::P2:
            if (x == 2)
                atom(0, {0, 2, 0}, 0, Rat(1));  // both neighbours in the block rooted at 1
            else if (x == 1)
                atom(1, {0, 0, 1}, 0, Rat(1));
            else
                atom(0, {0, 0, 1}, 0, Rat(1));
            break;
        case Ens::P3:
            if (x == 0)
                atom(0, {0, 1, 1}, 0, Rat(1));
            else if (x == 1)
                atom(0, {1, 0, 1}, 0, Rat(1));
            else
                atom(0, {1, 1, 0}, 0, Rat(1));
            break;
        default:
            throw std::logic_error("base_joint: decorated ensemble");
    }
    return v;
}

// crossing of a route w.r.t. targets (comp, local corner, side tag 0/1):
// returns 0, 1, or 2+side for "the transit indicator of that side's joint"
int resolve_chi(const std::vector<EnsCase::Seg>& route,
                const std::vector<std::array<int, 3>>& targets) {
    int res = 0;
    for (const auto& seg : route) {
        for (const auto& t : targets) {
            if (seg.comp != t[0] || seg.enter < 0) continue;
            int cand;
            if (seg.exit == t[1] && seg.enter != t[1])
                cand = 1;
            else if (seg.enter == t[1])
                cand = 0;
            else
                cand = 2 + t[2];
            if (cand != 0) {
                assert(res == 0 && "double crossing");
                res = cand;
            }
        }
    }
    return res;
}

struct LocalAtom {
    int d;
    std::array<std::uint8_t, 3> z;  // keyed by local block root corner
    int i;
    Rat p;
};

}  // namespace

DescEngine::DescEngine() = default;

DescEngine& engine() {
    static DescEngine e;
    return e;
}

const SgGraph& DescEngine::graph(int n) {
    while (static_cast<int>(graphs_.size()) <= n)
        graphs_.push_back(std::make_unique<SgGraph>(static_cast<int>(graphs_.size())));
    return *graphs_[n];
}

const std::vector<CornerAtom>& DescEngine::corner_joint(Ens e, int corner, int n) {
    auto key = std::make_tuple(static_cast<int>(e), corner, n);
    auto it = joints_.find(key);
    if (it != joints_.end()) return it->second;
    auto val = (n == 0) ? base_joint(e, corner) : parent_joint(e, corner, n);
    return joints_.emplace(key, std::move(val)).first->second;
}

namespace {

// relabel a std atom of copy ensemble e at std corner g(x) into local block keys
std::vector<LocalAtom> local_atoms(DescEngine& eng, const EnsCase& cs, int cp, int x, int n) {
    Ens e = undecorated(cs.maptype[cp]);
    const CornerPerm& g = cs.g[cp];
    CornerPerm gi = perm_inverse(g);
    auto roots = other_block_roots(e, g[x]);
    std::vector<LocalAtom> out;
    for (const auto& a : eng.corner_joint(e, g[x], n - 1)) {
        LocalAtom la;
        la.d = a.d;
        la.i = a.i;
        la.p = a.p;
        la.z = {0, 0, 0};
        for (auto r : roots) la.z[gi[r]] = a.z[r];
        out.push_back(la);
    }
    return out;
}

}  // namespace

std::vector<CornerAtom> DescEngine::parent_joint(Ens ptype, int X, int n) {
    assert(ptype != Ens::P2F);
    int cp = -1, x = -1;
    for (int c = 0; c < 3 && cp < 0; ++c)
        for (int k = 0; k < 3; ++k)
            if (kPos[c][k] == X) {
                cp = c;
                x = k;
                break;
            }
    auto myroot = std_blockroot_of_corner().at(ptype)[X];
    auto zroots = other_block_roots(ptype, X);
    int pU = -1, pW = -1;
    for (int c = 0; c < 3; ++c)
        if (c != X) (pU < 0 ? pU : pW) = c;
    const auto& broc = std_blockroot_of_corner().at(ptype);
    bool i_rel = broc[pU] == myroot && broc[pW] == myroot && myroot != X;

    std::map<std::tuple<int, std::uint8_t, std::uint8_t, std::uint8_t, int>, Rat> acc;
    for (const auto& cs : ensemble_cases(ptype)) {
        std::vector<int> mine;
        for (std::size_t i = 0; i < cs.comps.size(); ++i)
            if (cs.comps[i].copy == cp) mine.push_back(static_cast<int>(i));
        int Cx = -1;
        for (int i : mine)
            if (cs.comps[i].mask >> x & 1) Cx = i;
        std::vector<std::array<int, 3>> targets = {{Cx, x, 0}};
        std::map<int, int> chi;
        for (int K : mine)
            if (K != Cx) chi[K] = resolve_chi(cs.routes[K], targets);
        int ichi = 0;
        if (i_rel) {
            int cpu = -1, ku = -1;
            for (int c = 0; c < 3 && cpu < 0; ++c)
                for (int k = 0; k < 3; ++k)
                    if (kPos[c][k] == pU) {
                        cpu = c;
                        ku = k;
                        break;
                    }
            int CU = -1;
            for (std::size_t i = 0; i < cs.comps.size(); ++i)
                if (cs.comps[i].copy == cpu && (cs.comps[i].mask >> ku & 1))
                    CU = static_cast<int>(i);
            ichi = resolve_chi(cs.routes[CU], targets);
        }
        for (const auto& la : local_atoms(*this, cs, cp, x, n)) {
            int dX = la.d;
            std::array<std::uint8_t, 3> zpar{0, 0, 0};
            for (int K : mine) {
                if (K == Cx) continue;
                int zK = la.z[cs.comps[K].root];
                int hit = chi[K];
                if (hit == 2) hit = la.i;
                if (cs.comps[K].block == cs.comps[Cx].block) {
                    dX += zK * hit;
                } else {
                    assert(hit == 0);
                    zpar[cs.comps[K].block] += zK;
                }
            }
            int iX = (ichi == 2) ? la.i : ichi;
            // re-key zpar by parent block roots in std position (already is)
            std::array<std::uint8_t, 3> zfinal{0, 0, 0};
            for (auto r : zroots) zfinal[r] = zpar[r];
            acc[{dX, zfinal[0], zfinal[1], zfinal[2], iX}] += cs.weight * la.p;
        }
    }
    std::vector<CornerAtom> out;
    for (const auto& [k, p] : acc) {
        CornerAtom a;
        a.d = std::get<0>(k);
        a.z = {std::get<1>(k), std::get<2>(k), std::get<3>(k)};
        a.i = std::get<4>(k);
        a.p = p;
        out.push_back(a);
    }
    return out;
}

DescDist DescEngine::boundary_dist(Ens e, int pos, int n) {
    auto key = std::make_tuple(static_cast<int>(e), pos, n);
    auto it = bdists_.find(key);
    if (it != bdists_.end()) return it->second;
    DescDist d = eval_boundary(e, pos, n);
    bdists_.emplace(key, d);
    return d;
}

DescDist DescEngine::eval_boundary(Ens ptype, int pos, int n) {
    assert(n >= 1);
    std::vector<std::pair<int, int>> incid;  // (copy, local corner)
    for (int cp = 0; cp < 3; ++cp)
        for (int k = 0; k < 3; ++k)
            if (kPos[cp][k] == pos) incid.push_back({cp, k});
    DescDist out = dist_zero();
    for (const auto& cs : ensemble_cases(ptype)) {
        struct Side {
            int cp, x, Cx;
            std::vector<int> mine;
        };
        std::vector<Side> sides;
        for (auto [cp, x] : incid) {
            Side s;
            s.cp = cp;
            s.x = x;
            for (std::size_t i = 0; i < cs.comps.size(); ++i)
                if (cs.comps[i].copy == cp) s.mine.push_back(static_cast<int>(i));
            s.Cx = -1;
            for (int i : s.mine)
                if (cs.comps[i].mask >> x & 1) s.Cx = i;
            sides.push_back(s);
        }
        std::vector<std::array<int, 3>> targets;
        for (std::size_t t = 0; t < sides.size(); ++t)
            targets.push_back({sides[t].Cx, sides[t].x, static_cast<int>(t)});
        std::map<int, int> chi;  // comp -> 0/1/2+side
        for (const auto& s : sides)
            for (int K : s.mine)
                if (K != s.Cx) chi[K] = resolve_chi(cs.routes[K], targets);
        std::vector<std::vector<LocalAtom>> atoms;
        for (const auto& s : sides) atoms.push_back(local_atoms(*this, cs, s.cp, s.x, n));
        if (atoms.size() == 1) atoms.push_back({LocalAtom{0, {0, 0, 0}, 0, Rat(1)}});
        for (const auto& aA : atoms[0]) {
            for (const auto& aB : atoms[1]) {
                int tot = aA.d + aB.d;
                const int ivals[2] = {aA.i, aB.i};
                for (const auto& [K, cval] : chi) {
                    const bool sideA = cs.comps[K].copy == sides[0].cp;
                    const auto& za = sideA ? aA.z : aB.z;
                    int zK = za[cs.comps[K].root];
                    int hit = cval >= 2 ? ivals[cval - 2] : cval;
                    tot += zK * hit;
                }
                assert(tot >= 0 && tot <= 4);
                out[tot] += cs.weight * aA.p * aB.p;
            }
        }
    }
    return out;
}

void DescEngine::build_map(Ens e, int n) {
    const SgGraph& g = graph(n);
    std::vector<DescDist> M(g.vertex_count(), dist_zero());
    if (n == 0) {
        for (int x = 0; x < 3; ++x) {
            DescDist d = dist_zero();
            for (const auto& a : corner_joint(undecorated(e), x, 0)) {
                int dd = a.d;
                if (e == Ens::P2F && (x == 0 || x == 1)) dd += a.z[0] + a.z[1] + a.z[2];
                d[dd] += a.p;
            }
            M[g.corner(x)] = d;
        }
    } else {
        // boundary positions: 3=bcut (opposite corner 2), 4=lcut (opp. 1), 5=rcut (opp. 0)
        for (int i = 0; i < 3; ++i) {
            M[g.corner(i)] = boundary_dist(e, i, n);
            M[g.cut_point(i)] = boundary_dist(e, 5 - i, n);
        }
        const SgGraph& sub = graph(n - 1);
        std::array<const std::vector<DescDist>*, 4> child{};
        for (const auto& cs : ensemble_cases(e))
            for (int cp = 0; cp < 3; ++cp)
                child[static_cast<int>(cs.maptype[cp])] = &vertex_map(cs.maptype[cp], n - 1);
        std::vector<bool> done(g.vertex_count(), false);
        for (int i = 0; i < 3; ++i) {
            done[g.corner(i)] = done[g.cut_point(i)] = true;
        }
        for (int cp = 0; cp < 3; ++cp) {
            for (int v = 0; v < g.vertex_count(); ++v) {
                if (done[v]) continue;
                auto la = g.local_addr(cp, v);
                if (!la) continue;
                int lv = sub.index_of(*la);
                DescDist dist = dist_zero();
                for (const auto& cs : ensemble_cases(e)) {
                    int gv = sub.apply(cs.g[cp], lv);
                    const DescDist& d2 = (*child[static_cast<int>(cs.maptype[cp])])[gv];
                    for (int k = 0; k < 5; ++k) dist[k] += cs.weight * d2[k];
                }
                M[v] = dist;
                done[v] = true;
            }
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v) assert(dist_sum(M[v]) == 1);
    maps_.emplace(std::make_pair(static_cast<int>(e), n), std::move(M));
}

const std::vector<DescDist>& DescEngine::vertex_map(Ens e, int n) {
    auto key = std::make_pair(static_cast<int>(e), n);
    auto it = maps_.find(key);
    if (it == maps_.end()) {
        build_map(e, n);
        it = maps_.find(key);
    }
    return it->second;
}

}  // namespace sierpile
