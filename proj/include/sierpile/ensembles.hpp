#pragma once

#include <array>
#include <map>
#include <memory>
#include <vector>

#include "sierpile/census.hpp"
#include "sierpile/gasket.hpp"
#include "sierpile/rational.hpp"

namespace sierpile {

// Rooted forest ensembles on SG_n in standard position.
//   P1  : uniform spanning tree, root = top corner
//   P2  : uniform S2 forest; isolated component rooted at the top corner,
//         two-corner component rooted at the right corner
//   P2F : as P2, but the isolated component's traffic re-enters the big
//         component at the left corner and drains to the right corner
//   P3  : uniform R forest, each corner the root of its component
enum class Ens { P1, P2, P2F, P3 };
constexpr int kEnsCount = 4;

Ens undecorated(Ens e);

// One decomposition configuration of a parent ensemble into copy ensembles,
// with full routing data (derived automatically from the gluing structure).
struct EnsCase {
    Rat weight;
    std::array<ForestClass, 3> cls;   // classes on copies L,R,U
    std::array<Ens, 3> maptype;       // decorated copy ensembles
    std::array<CornerPerm, 3> g;      // copy-local -> standard position
    // components: identified by (copy, corner set); routing segments per comp
    struct Comp {
        int copy;
        std::uint8_t mask;  // bitmask of local corners
        int root;           // local exit corner
        int block;          // parent block id = parent root corner of its block
    };
    struct Seg {
        int comp;
        int enter;  // local corner, or -1 for the component's own initial segment
        int exit;
    };
    std::vector<Comp> comps;
    std::vector<std::vector<Seg>> routes;  // per comp index
};

const std::vector<EnsCase>& ensemble_cases(Ens parent);

// Joint law of (descendant count, neighbours per foreign component, transit
// indicator) at a corner of an undecorated ensemble. z is indexed by the root
// corner of the foreign block.
struct CornerAtom {
    std::uint8_t d = 0;
    std::array<std::uint8_t, 3> z{0, 0, 0};
    std::uint8_t i = 0;
    Rat p;
};

class DescEngine {
   public:
    DescEngine();

    // joint law at a corner (undecorated ensembles only)
    const std::vector<CornerAtom>& corner_joint(Ens e, int corner, int n);

    // distribution of the descendant count at boundary position P (0,1,2 =
    // corners; 3,4,5 = cut points opposite those corners) of a level-n ensemble
    DescDist boundary_dist(Ens e, int pos, int n);

    // full per-vertex distributions, indexed by SgGraph vertex ids
    const std::vector<DescDist>& vertex_map(Ens e, int n);

    const SgGraph& graph(int n);

   private:
    std::vector<CornerAtom> parent_joint(Ens e, int corner, int n);
    DescDist eval_boundary(Ens e, int pos, int n);
    void build_map(Ens e, int n);

    std::map<std::tuple<int, int, int>, std::vector<CornerAtom>> joints_;
    std::map<std::tuple<int, int, int>, DescDist> bdists_;
    std::map<std::pair<int, int>, std::vector<DescDist>> maps_;
    std::vector<std::unique_ptr<SgGraph>> graphs_;
};

DescEngine& engine();  // shared instance with memoised tables

}  // namespace sierpile
