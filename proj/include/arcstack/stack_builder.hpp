#pragma once

#include "arcstack/oracle.hpp"
#include "arcstack/stack_model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arcstack {

// A sequence in play during stack construction: its exact symbolic form plus
// its expansion over the ambient basis (the input family and the chi's picked
// up along the way). The expansion is an identity of sequences, so the final
// change-of-basis identities hold at every sample point.
struct BuilderSeq {
    std::string id;
    SeqSpec law;
    std::map<std::string, Rat> coords;

    static BuilderSeq basis_element(const std::string& id, SeqSpec law);
};

// Desk-scale shape of a sequence's values along a path after refinement:
// either a clean symbolic asymptotic or a constant on the current window.
struct EffectiveAsym {
    PathAsymptotics asym;
    bool window_constant = false;
    Rat constant_value = Rat(0);
};

struct CaseAResult {
    Window window;                      // B'
    std::vector<BuilderSeq> members;    // H: supported on zeta everywhere on B'
    std::vector<BuilderSeq> outside;    // G \ H
    std::vector<EffectiveAsym> shapes;  // parallel to members
};

// Lemma "Case A": chained oracle refinements establishing (*1)-(*7) on a
// finite window: support membership constant per sequence, values monotone or
// constant, magnitude trichotomy, ratio trends, and avoidance of the listed
// paths.
CaseAResult refine_case_a(FilterOracle& oracle, const Window& b,
                          const std::vector<BuilderSeq>& pool, const Path& zeta,
                          const std::vector<Path>& avoid);

struct CaseA2Result {
    Window window;
    std::vector<BuilderSeq> basis;      // the brick B, g# first
    std::vector<BuilderSeq> replaced;   // sigma images of H \ B
    std::vector<SqrtVal> theta;         // parallel to basis
};

// Lemma "Case A2": ratio-limit table against g#, greedy Q-independent basis
// containing g#, and sigma(g) = g - sum r_{g,h} h for the rest.
CaseA2Result extract_basis_case_a2(FilterOracle& oracle, const CaseAResult& in, const Path& zeta,
                                   std::optional<std::size_t> forced_sharp);

struct BricklineLayer {
    std::vector<BuilderSeq> elements;
    std::vector<SqrtVal> theta;
};

struct BricklineResult {
    Window window;                       // A
    std::vector<BricklineLayer> layers;  // B_j, j < l
    std::vector<BuilderSeq> leftovers;   // G'
};

// Lemma "brickline": peel growth layers off the pool along one path until no
// member rides it, with |G'| < |G| (cardinality descent) and span preservation.
BricklineResult brickline(FilterOracle& oracle, const Window& b,
                          const std::vector<BuilderSeq>& pool, const Path& zeta,
                          const std::vector<Path>& avoid, bool add_chi);

struct CoordinateChoice {
    bool one_to_one_branch = false;
    Index mu = 0;                 // branch 1
    std::size_t witness_seq = 0;  // branch 1: index into pool
    std::vector<Path> zeta_per_seq;  // branch 2, parallel to pool
    Window window;
};

// Lemma "aux lem" made executable for the DSL: either a constant coordinate
// where some sequence has eventually one-to-one (divergent) values, or an
// injective support path per sequence. Detects window-level dependence.
CoordinateChoice find_coordinate(FilterOracle& oracle, const Window& b,
                                 const std::vector<BuilderSeq>& pool,
                                 const std::vector<Path>& used);

struct BuildConfig {
    std::size_t max_samples = 48;  // thinning cap for the final sample set A
};

struct BuildResult {
    RationalStack stack;
    StackBasisData basis;
    std::size_t brickline_calls = 0;
    std::vector<Path> level_paths;  // per level i < k1
};

// Lemma stack.1: full construction. `anchor_hint` seeds the synthetic
// singleton stack when the family is empty (the pipeline still needs a K
// schedule and one nu coordinate in that case).
BuildResult build_stack(FilterOracle& oracle, const Window& b,
                        const std::vector<BuilderSeq>& family, Index anchor_hint,
                        const BuildConfig& cfg = {});

}  // namespace arcstack
