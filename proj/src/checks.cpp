#include "sierpile/checks.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "sierpile/census.hpp"
#include "sierpile/ensembles.hpp"
#include "sierpile/expectations.hpp"
#include "sierpile/heights.hpp"
#include "sierpile/oracle.hpp"
#include "sierpile/paperdata.hpp"
#include "sierpile/sandpile.hpp"

namespace sierpile {
namespace {

using Clock = std::chrono::steady_clock;

struct Ctx {
    std::string suite;
    std::uint64_t seed;
    std::vector<CheckResult> results;

    void add(const std::string& name, bool pass, const std::string& detail = "",
             bool erratum = false, double secs = 0) {
        results.push_back({name, pass, erratum, detail, secs});
    }
};

template <typename F>
void timed(Ctx& ctx, const std::string& name, F&& f) {
    auto t0 = Clock::now();
    bool pass = false;
    std::string detail;
    try {
        auto r = f();
        pass = r.first;
        detail = r.second;
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    ctx.add(name, pass, detail, false, secs);
}

std::string rs(const Rat& q) { return rat_str(q); }

// ---------------------------------------------------------------- criterion 1
void census_checks(Ctx& ctx) {
    timed(ctx, "census.values", [] {
        auto c0 = counts_recursive(0), c1 = counts_recursive(1), c2 = counts_recursive(2);
        bool ok = c0.tau == 3 && c0.sigma == 1 && c0.rho == 1 && c1.tau == 54 &&
                  c1.sigma == 30 && c1.rho == 50 && c2.tau == 524880 &&
                  c2.sigma == 486000 && c2.rho == 1350000;
        return std::make_pair(ok, std::string("(tau,sigma,rho) at n=0,1,2"));
    });
    timed(ctx, "census.recursion_equals_closed", [] {
        for (int n = 0; n <= 8; ++n) {
            auto a = counts_recursive(n), b = counts_closed(n);
            if (a.tau != b.tau || a.sigma != b.sigma || a.rho != b.rho)
                return std::make_pair(false, "mismatch at n=" + std::to_string(n));
        }
        return std::make_pair(true, std::string("n <= 8, exact"));
    });
    timed(ctx, "census.table_recount", [] {
        for (int n = 0; n <= 5; ++n) {
            if (table_recount(ForestClass::T, n) != counts_recursive(n + 1).tau)
                return std::make_pair(false, "tree recount failed");
            if (table_recount(ForestClass::S2, n) != counts_recursive(n + 1).sigma)
                return std::make_pair(false, "s2 recount failed");
            if (table_recount(ForestClass::R, n) != counts_recursive(n + 1).rho)
                return std::make_pair(false, "r recount failed");
        }
        return std::make_pair(true, std::string("table products reproduce recursion, n<=5"));
    });
}

// ---------------------------------------------------------------- criterion 10
void erratum_rho_check(Ctx& ctx) {
    timed(ctx, "census.printed_rho_variant_fails", [] {
        auto printed = counts_recursive_printed_rho(2);
        auto closed = counts_closed(2);
        bool printed_fails = printed.rho != closed.rho;
        bool ours_passes = counts_recursive(2).rho == closed.rho;
        std::ostringstream os;
        os << "printed 14*sigma^2 variant gives rho_2=" << printed.rho.get_str()
           << " != closed " << closed.rho.get_str() << "; cubic variant matches";
        return std::make_pair(printed_fails && ours_passes, os.str());
    });
}

// ---------------------------------------------------------------- criterion 2
void oracle_concordance(Ctx& ctx) {
    timed(ctx, "oracle.exhaustive_sg1", [] {
        auto fe = enumerate_forests(1);
        if (fe.counts.at(ForestClass::T) != 54 || fe.counts.at(ForestClass::S1) != 30 ||
            fe.counts.at(ForestClass::S2) != 30 || fe.counts.at(ForestClass::S3) != 30 ||
            fe.counts.at(ForestClass::R) != 50)
            return std::make_pair(false, std::string("class counts wrong"));
        const SgGraph& g = engine().graph(1);
        for (ForestClass c : {ForestClass::T, ForestClass::S1, ForestClass::S2,
                              ForestClass::S3, ForestClass::R}) {
            auto vp = vertex_probs(1, c);
            for (int v = 0; v < g.vertex_count(); ++v)
                if (fe.dist(c, v) != vp.table[v])
                    return std::make_pair(false, std::string("per-vertex mismatch, class ") +
                                                     class_name(c) + " vertex " +
                                                     addr_str(g.addr(v)));
        }
        return std::make_pair(true,
                              std::string("512 subsets; every DescDist matches exactly"));
    });
    timed(ctx, "oracle.kirchhoff", [] {
        bool ok = kirchhoff_count(SgGraph(1), {}) == 54 &&
                  kirchhoff_count(SgGraph(2), {}) == 524880 &&
                  kirchhoff_count(SgGraph(0), {}) == 3;
        return std::make_pair(ok, std::string("tau_1 = 54, tau_2 = 524880 by determinant"));
    });
}

// ---------------------------------------------------------------- criterion 3
void bijection_checks(Ctx& ctx) {
    timed(ctx, "sandpile.burning_bijection_sg1", [] {
        const SgGraph& g = engine().graph(1);
        ContractedGraph cg(g, SinkSpec{{2}});
        std::set<std::vector<long>> images;
        long long trees = 0;
        bool ok = true;
        enumerate_spanning_trees(cg, [&](const RootedSpanningTree& t) {
            ++trees;
            auto sp = tree_to_sandpile(t);
            if (!is_recurrent(sp)) ok = false;
            images.insert(sp.chips);
            auto back = sandpile_to_tree(sp);
            if (back.parent != t.parent || back.edge_index != t.edge_index) ok = false;
            auto again = tree_to_sandpile(back);
            if (!(again == sp)) ok = false;
            return true;
        });
        auto rec = recurrent_configs(cg);
        ok = ok && trees == 54 && images.size() == 54 && rec.size() == 54;
        std::ostringstream os;
        os << trees << " trees, " << images.size() << " distinct recurrent images, "
           << rec.size() << " recurrent configs by scan";
        return std::make_pair(ok, os.str());
    });
}

// ---------------------------------------------------------------- criterion 4
void replay_checks(Ctx& ctx) {
    timed(ctx, "sandpile.lemma21_replay", [] {
        const SgGraph& g = engine().graph(1);
        const long expected[3] = {54, 60, 50};
        const std::vector<std::vector<int>> sinksets = {{2}, {2, 1}, {0, 1, 2}};
        for (std::size_t i = 0; i < sinksets.size(); ++i) {
            ContractedGraph cg(g, SinkSpec{sinksets[i]});
            auto rec = recurrent_configs(cg);
            if (static_cast<long>(rec.size()) != expected[i])
                return std::make_pair(false, "recurrent count mismatch");
            for (const auto& c : rec) {
                SandpileConfig x = c;
                for (int v = 0; v < cg.site_count(); ++v)
                    x.chips[v] += cg.sink_multiplicity(v);
                auto [res, od] = stabilize(x);
                if (!(res == c)) return std::make_pair(false, "replay changed the config");
                for (long tt : od.counts)
                    if (tt != 1) return std::make_pair(false, "odometer not identically 1");
            }
        }
        return std::make_pair(true, std::string("54 + 60 + 50 configs, odometer == 1"));
    });
}

// ---------------------------------------------------------------- criterion 5
void closed_form_checks(Ctx& ctx) {
    timed(ctx, "heights.corner_closed_forms", [] {
        for (int n = 0; n <= 8; ++n) {
            auto a = corner_probs(n);
            auto b = corner_probs_closed(n);
            if (a.p1 != b.p1 || a.p2 != b.p2)
                return std::make_pair(false, "corner mismatch at n=" + std::to_string(n));
            Rat gap = a.p1[0] - Rat(11, 14);
            if (gap != -Rat(5, 42) * rat_pow(Rat(1, 15), n))
                return std::make_pair(false, "limit identity failed");
        }
        return std::make_pair(true, std::string("recursion == closed forms, n <= 8"));
    });
    timed(ctx, "heights.root_closed_forms", [] {
        for (int n = 0; n <= 8; ++n) {
            auto a = root_probs(n);
            auto b = root_probs_closed(n);
            if (a.eta2 != b.eta2 || a.eta2bar != b.eta2bar || a.eta3 != b.eta3)
                return std::make_pair(false, "root mismatch at n=" + std::to_string(n));
        }
        return std::make_pair(true, std::string("recursion == corrected closed forms, n <= 8"));
    });
    // published-table assertions, as stated in the criteria; these are known to
    // fail against the oracle-validated recursion and are kept as documentation
    {
        auto t0 = Clock::now();
        bool eq = true;
        for (int n = 0; n <= 8 && eq; ++n) {
            auto a = root_probs(n);
            if (a.eta2 != paper::table1_eta2(n) || a.eta2bar != paper::table1_eta2bar(n) ||
                a.eta3 != paper::table1_eta3(n))
                eq = false;
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        ctx.add("paper.table1_equality_as_published", eq,
                eq ? "" : "published eta2/eta3 rows differ from the exact recursion "
                          "(see the erratum guards below)",
                true, secs);
    }
    {
        auto t0 = Clock::now();
        bool eq = true;
        for (int n = 1; n <= 8 && eq; ++n) {
            auto ct = cutpoint_probs(n, ForestClass::T);
            if (ct[2] != paper::eval_cut(paper::bcut_tree(), n) ||
                ct[1] != paper::eval_cut(paper::lcut_tree(), n))
                eq = false;
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        ctx.add("paper.cut_matrix_equality_as_published", eq,
                eq ? "" : "published m_n coefficient matrices differ from the exact "
                          "recursion (oracle-adjudicated)",
                true, secs);
    }
    timed(ctx, "erratum.eta2_guard", [] {
        // the published eta2(1) = (2/5)^n contradicts the exhaustive oracle at n=1,
        // while the exact recursion matches it
        auto fe = enumerate_forests(1);
        const SgGraph& g = engine().graph(1);
        DescDist oracle = fe.dist(ForestClass::S2, g.corner(1));
        bool printed_fails = oracle != paper::table1_eta2(1);
        bool ours_matches = oracle == root_probs(1).eta2;
        std::ostringstream os;
        os << "oracle eta2(1)(k=1) = " << rs(oracle[1]) << ", published "
           << rs(paper::table1_eta2(1)[1]) << ", exact " << rs(root_probs(1).eta2[1]);
        return std::make_pair(printed_fails && ours_matches, os.str());
    });
    timed(ctx, "erratum.cut_matrix_guard", [] {
        auto fe = enumerate_forests(1);
        const SgGraph& g = engine().graph(1);
        DescDist oracle = fe.dist(ForestClass::T, g.cut_point(1));  // lcut, tree class
        DescDist printed = paper::eval_cut(paper::lcut_tree(), 1);
        DescDist ours = cutpoint_probs(1, ForestClass::T)[1];
        bool ok = oracle != printed && oracle == ours;
        std::ostringstream os;
        os << "lcut|T at n=1: oracle (";
        for (int k = 0; k < 4; ++k) os << rs(oracle[k]) << (k < 3 ? "," : ")");
        os << " vs published (";
        for (int k = 0; k < 4; ++k) os << rs(printed[k]) << (k < 3 ? "," : ")");
        return std::make_pair(ok, os.str());
    });
}

// ---------------------------------------------------------------- criterion 6
void theorem12_checks(Ctx& ctx) {
    timed(ctx, "paper.theorem12_transcription", [] {
        auto d = paper::PaperPipeline::dbar_limit();
        auto w = paper::PaperPipeline::wbar_limit();
        auto dp = paper::dbar_limits();
        auto wp = paper::wbar_limits();
        for (int i = 0; i < 4; ++i)
            if (d[i] != dp[i] || w[i] != wp[i])
                return std::make_pair(false, "published pipeline does not reproduce the "
                                             "published vectors");
        bool ok = paper::PaperPipeline::wbar() == paper::mean_height_limit() &&
                  paper::PaperPipeline::zeta() == paper::zeta_limit();
        return std::make_pair(ok, std::string("published cut matrices + M reproduce the "
                                              "published limit vectors exactly"));
    });
    timed(ctx, "limits.exact_identities", [] {
        auto r = limit_report();
        Rat wsum = r.w[0] + r.w[1] + r.w[2] + r.w[3];
        bool ok = wsum == 1 && r.wbar == (r.zeta + 3) / 2;
        std::ostringstream os;
        os << "exact limits: zeta = " << rs(r.zeta) << ", wbar = " << rs(r.wbar)
           << ", W = (" << rs(r.w[0]) << ", " << rs(r.w[1]) << ", " << rs(r.w[2]) << ", "
           << rs(r.w[3]) << ")";
        return std::make_pair(ok, os.str());
    });
    {
        auto t0 = Clock::now();
        auto r = limit_report();
        auto wp = paper::wbar_limits();
        bool eq = r.w[0] == wp[0] && r.w[1] == wp[1] && r.w[2] == wp[2] && r.w[3] == wp[3];
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        ctx.add("paper.theorem12_values_vs_exact", eq,
                eq ? ""
                   : "exact W limits differ from the published vector (only W^0 = "
                     "10957/161856 agrees); Monte Carlo sides with the exact values",
                true, secs);
    }
}

// ---------------------------------------------------------------- criterion 7
void theorem11_checks(Ctx& ctx) {
    timed(ctx, "limits.wbar_zeta_identity", [] {
        auto r = limit_report();
        bool ok = r.wbar == (r.zeta + 3) / 2;
        bool okp = paper::mean_height_limit() == (paper::zeta_limit() + 3) / 2;
        return std::make_pair(ok && okp,
                              std::string("wbar = (zeta+3)/2 holds exactly for both the "
                                          "exact and the published constants"));
    });
    {
        auto t0 = Clock::now();
        bool eq = looping_limit() == paper::zeta_limit();
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        std::ostringstream os;
        os << "exact looping limit " << rs(looping_limit()) << " vs published "
           << rs(paper::zeta_limit())
           << " (the published pipeline reproduces its own value: "
           << rs(paper::PaperPipeline::zeta()) << ")";
        ctx.add("paper.zeta_limit_as_published", eq, os.str(), true, secs);
    }
    timed(ctx, "mc.zeta_sg3", [&ctx] {
        const long long N = ctx.suite == "full" ? 1000000 : 200000;
        const SgGraph& g = engine().graph(3);
        ContractedGraph cg(g, SinkSpec{{2, 1}});
        auto st = wilson_monte_carlo(cg, N, ctx.seed);
        double mean = st.zeta_sum / N;
        double var = st.zeta_sq_sum / N - mean * mean;
        double se = std::sqrt(var / N);
        double exact = rat_double(looping_constant(3));
        double dev = std::abs(mean - exact);
        std::ostringstream os;
        os.precision(6);
        os << std::fixed << "zeta_3: exact " << exact << ", MC " << mean << " +- " << se
           << " (" << N << " samples); published limit "
           << rat_double(paper::zeta_limit());
        return std::make_pair(dev <= 3 * se, os.str());
    });
}

// ---------------------------------------------------------------- criterion 8
void matrix_checks(Ctx& ctx) {
    timed(ctx, "matrix.power2x2", [] {
        for (int n = 0; n <= 10; ++n) {
            auto a = matrix_power_2x2(n), b = matrix_power_2x2_iterated(n);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    if (a[i][j] != b[i][j])
                        return std::make_pair(false, "2x2 mismatch at n=" + std::to_string(n));
        }
        return std::make_pair(true, std::string("closed form == iterated product, n <= 10"));
    });
    timed(ctx, "matrix.m_eigenpairs", [] {
        auto m = paper::matrix_m();
        auto ev = paper::m_eigenvalues();
        auto vecs = paper::m_eigenvectors();
        for (int e = 0; e < 5; ++e) {
            for (int i = 0; i < 5; ++i) {
                long acc = 0;
                for (int j = 0; j < 5; ++j) acc += m[i][j] * vecs[e][j];
                if (acc != ev[e] * vecs[e][i])
                    return std::make_pair(false, "eigenpair " + std::to_string(e));
            }
        }
        for (int i = 0; i < 5; ++i) {
            long s = 0;
            for (int j = 0; j < 5; ++j) s += m[i][j];
            if (s != 450) return std::make_pair(false, "row sum");
        }
        return std::make_pair(true, std::string("M v = lambda v exact; M/150 row sums 3"));
    });
}

// ---------------------------------------------------------------- criterion 9
void stationarity_check(Ctx& ctx) {
    timed(ctx, "mc.markov_uniformity_sg1", [&ctx] {
        const SgGraph& g = engine().graph(1);
        ContractedGraph cg(g, SinkSpec{{2}});
        auto rec = recurrent_configs(cg);
        std::map<std::vector<long>, int> index;
        for (std::size_t i = 0; i < rec.size(); ++i) index[rec[i].chips] = static_cast<int>(i);
        CounterRng rng(ctx.seed, 777);
        SandpileConfig c = max_stable(cg);
        for (int burn = 0; burn < 10000; ++burn) c = markov_step(c, rng);
        const long long N = 1000000;
        std::vector<long long> hits(rec.size(), 0);
        for (long long s = 0; s < N; ++s) {
            c = markov_step(c, rng);
            ++hits[index.at(c.chips)];
        }
        double expect = static_cast<double>(N) / rec.size();
        double chi2 = 0;
        for (auto h : hits) chi2 += (h - expect) * (h - expect) / expect;
        std::ostringstream os;
        os.precision(2);
        os << std::fixed << "chi^2 = " << chi2 << " on 53 dof (crit 90.57 at 1e-3)";
        return std::make_pair(chi2 < 90.5734, os.str());
    });
}

// ------------------------------------------------- oracle statistical extras
void sampler_checks(Ctx& ctx) {
    timed(ctx, "mc.wilson_uniformity_sg1", [&ctx] {
        const long long N = ctx.suite == "full" ? 1000000 : 200000;
        const SgGraph& g = engine().graph(1);
        ContractedGraph cg(g, SinkSpec{{2}});
        // frequency per distinct tree
        std::map<std::pair<std::vector<int>, std::vector<int>>, long long> freq;
        for (long long s = 0; s < N; ++s) {
            CounterRng rng(ctx.seed ^ 0xabcdef, static_cast<std::uint64_t>(s));
            auto t = wilson_sample(cg, rng);
            ++freq[{t.parent, t.edge_index}];
        }
        if (freq.size() != 54) return std::make_pair(false, "tree support wrong");
        double expect = static_cast<double>(N) / 54;
        double chi2 = 0;
        for (auto& [k, h] : freq) chi2 += (h - expect) * (h - expect) / expect;
        std::ostringstream os;
        os.precision(2);
        os << std::fixed << "chi^2 = " << chi2 << " over 54 trees, 53 dof (crit 90.57)";
        return std::make_pair(chi2 < 90.5734, os.str());
    });
    timed(ctx, "mc.wilson_edge_inclusion", [&ctx] {
        const long long N = ctx.suite == "full" ? 1000000 : 200000;
        const SgGraph& g = engine().graph(1);
        ContractedGraph cg(g, SinkSpec{{2}});
        auto st = wilson_monte_carlo(cg, N, ctx.seed + 5);
        // exact inclusion by enumeration
        std::vector<long long> inc(g.edge_count(), 0);
        std::map<std::pair<int, int>, int> eid;
        for (int e = 0; e < g.edge_count(); ++e) eid[g.edges()[e]] = e;
        long long trees = 0;
        enumerate_spanning_trees(cg, [&](const RootedSpanningTree& t) {
            ++trees;
            for (int v = 0; v < cg.site_count(); ++v) {
                int bv = cg.base_vertex(v);
                int bp = t.parent[v] >= 0 ? cg.base_vertex(t.parent[v]) : -1;
                if (bp < 0) {
                    // resolve the sink edge's base endpoint by parallel index
                    int seen = 0;
                    for (int w : g.neighbors(bv)) {
                        if (cg.site_of(w) < 0) {
                            if (seen == t.edge_index[v]) bp = w;
                            ++seen;
                        }
                    }
                }
                ++inc[eid.at({std::min(bv, bp), std::max(bv, bp)})];
            }
            return true;
        });
        for (int e = 0; e < g.edge_count(); ++e) {
            double p = static_cast<double>(inc[e]) / trees;
            double phat = static_cast<double>(st.edge_hits[e]) / N;
            double se = std::sqrt(p * (1 - p) / N);
            if (std::abs(phat - p) > 4 * se)
                return std::make_pair(false, "edge " + std::to_string(e) + " off by >4 sigma");
        }
        return std::make_pair(true, std::string("all 9 edge inclusions within 4 sigma"));
    });
    timed(ctx, "mc.lerw_units", [&ctx] {
        bool ok = loop_erase({1, 2, 1, 3}) == std::vector<int>{1, 3};
        const SgGraph& g = engine().graph(2);
        ContractedGraph cg(g, SinkSpec{{2, 1}});
        CounterRng rng(ctx.seed, 11);
        for (int s = 0; s < 200 && ok; ++s) {
            auto sample = lerw(cg, 0, rng);
            std::set<int> seen(sample.path.begin(), sample.path.end());
            ok = seen.size() == sample.path.size() && sample.path.front() == 0 &&
                 sample.path.back() == -1;
        }
        return std::make_pair(ok, std::string("loop erasure unit case + path simplicity"));
    });
}

// ------------------------------------------------------------ n=2 tree oracle
void tree_oracle_checks(Ctx& ctx) {
    timed(ctx, "oracle.sg2_tree_class", [] {
        const SgGraph& g = engine().graph(2);
        ContractedGraph cg(g, SinkSpec{{2}});
        auto en = enumerate_contraction_trees(cg);
        if (en.total != 524880) return std::make_pair(false, "tau_2 enumeration wrong");
        auto vp = vertex_probs(2, ForestClass::T);
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (en.dist(ForestClass::T, v) != vp.table[v])
                return std::make_pair(false, "tree-class mismatch at " + addr_str(g.addr(v)));
        }
        return std::make_pair(true, std::string("524880 trees; all per-vertex dists match"));
    });
    timed(ctx, "oracle.sg2_two_sink_classes", [] {
        const SgGraph& g = engine().graph(2);
        ContractedGraph cg(g, SinkSpec{{2, 1}});
        auto en = enumerate_contraction_trees(cg);
        if (en.counts.at(ForestClass::S2) != 486000 ||
            en.counts.at(ForestClass::S3) != 486000)
            return std::make_pair(false, "sigma_2 class counts wrong");
        for (ForestClass c : {ForestClass::S2, ForestClass::S3}) {
            auto vp = vertex_probs(2, c);
            for (int v = 0; v < g.vertex_count(); ++v) {
                if (en.dist(c, v) != vp.table[v])
                    return std::make_pair(false, std::string("mismatch, class ") +
                                                     class_name(c));
            }
        }
        return std::make_pair(true, std::string("972000 trees; S2 and S3 dists match"));
    });
    timed(ctx, "oracle.sg2_three_sink_class", [] {
        const SgGraph& g = engine().graph(2);
        ContractedGraph cg(g, SinkSpec{{0, 1, 2}});
        auto en = enumerate_contraction_trees(cg);
        if (en.counts.at(ForestClass::R) != 1350000)
            return std::make_pair(false, "rho_2 enumeration wrong");
        auto vp = vertex_probs(2, ForestClass::R);
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (en.dist(ForestClass::R, v) != vp.table[v])
                return std::make_pair(false, "R-class mismatch at " + addr_str(g.addr(v)));
        }
        return std::make_pair(true, std::string("1350000 forests; R dists match"));
    });
    timed(ctx, "oracle.sg1_sandpile_heights", [] {
        // exact height histogram over the 54 recurrent sandpiles vs module output
        const SgGraph& g = engine().graph(1);
        ContractedGraph cg(g, SinkSpec{{2}});
        auto rec = recurrent_configs(cg);
        auto hp = height_probs(1, 1);
        for (int site = 0; site < cg.site_count(); ++site) {
            int bv = cg.base_vertex(site);
            std::vector<long long> tall(cg.degree(site), 0);
            for (const auto& c : rec) ++tall[c.chips[site]];
            for (int k = 0; k < cg.degree(site); ++k)
                if (Rat(tall[k], 54) != hp[bv][k])
                    return std::make_pair(false, "height histogram mismatch");
        }
        return std::make_pair(true, std::string("54-config histogram == Lemma 2.2 exactly"));
    });
}

void full_suite_checks(Ctx& ctx) {
    if (ctx.suite != "full") return;
    timed(ctx, "oracle.exhaustive_sg2_subsets", [] {
        auto fe = enumerate_forests(2);  // 2^27 subsets
        bool ok = fe.counts.at(ForestClass::T) == 524880 &&
                  fe.counts.at(ForestClass::S2) == 486000 &&
                  fe.counts.at(ForestClass::R) == 1350000;
        const SgGraph& g = engine().graph(2);
        for (ForestClass c : {ForestClass::T, ForestClass::S1, ForestClass::S2,
                              ForestClass::S3, ForestClass::R}) {
            auto vp = vertex_probs(2, c);
            for (int v = 0; v < g.vertex_count() && ok; ++v)
                ok = fe.dist(c, v) == vp.table[v];
        }
        return std::make_pair(ok, std::string("2^27 subsets classified; all dists match"));
    });
}

}  // namespace

std::vector<CheckResult> run_checks(const std::string& suite, std::uint64_t seed) {
    Ctx ctx{suite, seed, {}};
    census_checks(ctx);
    erratum_rho_check(ctx);
    oracle_concordance(ctx);
    bijection_checks(ctx);
    replay_checks(ctx);
    closed_form_checks(ctx);
    theorem12_checks(ctx);
    theorem11_checks(ctx);
    matrix_checks(ctx);
    stationarity_check(ctx);
    sampler_checks(ctx);
    tree_oracle_checks(ctx);
    full_suite_checks(ctx);
    return ctx.results;
}

int run_acceptance(const std::string& suite, std::uint64_t seed, bool verbose) {
    auto res = run_checks(suite, seed);
    auto find = [&](const std::string& name) -> const CheckResult& {
        for (const auto& r : res)
            if (r.name == name) return r;
        throw std::logic_error("missing check " + name);
    };
    struct Criterion {
        std::string label;
        std::vector<std::string> checks;
    };
    const std::vector<Criterion> criteria = {
        {"1. census exactness", {"census.values", "census.recursion_equals_closed"}},
        {"2. oracle concordance", {"oracle.exhaustive_sg1", "oracle.kirchhoff"}},
        {"3. burning bijection", {"sandpile.burning_bijection_sg1"}},
        {"4. Lemma 2.1 replay", {"sandpile.lemma21_replay"}},
        {"5. corner/root/cut closed forms",
         {"heights.corner_closed_forms", "heights.root_closed_forms",
          "paper.table1_equality_as_published", "paper.cut_matrix_equality_as_published",
          "erratum.eta2_guard", "erratum.cut_matrix_guard"}},
        {"6. Theorem 1.2 reproduction",
         {"paper.theorem12_transcription", "limits.exact_identities"}},
        {"7. Theorem 1.1 reproduction",
         {"paper.zeta_limit_as_published", "limits.wbar_zeta_identity", "mc.zeta_sg3"}},
        {"8. matrix facts", {"matrix.power2x2", "matrix.m_eigenpairs"}},
        {"9. stationarity sanity", {"mc.markov_uniformity_sg1"}},
        {"10. erratum guard (rho recursion)", {"census.printed_rho_variant_fails"}},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        bool pass = true;
        bool erratum = false;
        for (const auto& name : c.checks) {
            const auto& r = find(name);
            if (!r.pass) {
                pass = false;
                if (r.documented_erratum) erratum = true;
            }
        }
        const char* tag = pass ? "PASS" : (erratum ? "FAIL [documented paper erratum]"
                                                   : "FAIL");
        std::printf("%-40s %s\n", c.label.c_str(), tag);
        if (verbose || !pass) {
            for (const auto& name : c.checks) {
                const auto& r = find(name);
                std::printf("    %-44s %s  %s\n", r.name.c_str(), r.pass ? "ok " : "FAIL",
                            r.detail.c_str());
            }
        }
        if (!pass) ++failed;
    }
    return failed;
}

}  // namespace sierpile
