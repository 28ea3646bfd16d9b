#pragma once

#include <string>
#include <vector>

#include "plhyp/complex.hpp"
#include "plhyp/fiberprod.hpp"
#include "plhyp/subdivision.hpp"

namespace plhyp {

/// Regular neighborhood of a subcomplex: the closed star of its image in the
/// second-derived subdivision of the ambient complex.
struct RegularNeighborhood {
    SecondDerived derived;   // of the ambient complex
    Subcomplex core;         // second-derived image of L
    Subcomplex nbhd;         // closed star of the core
    Subcomplex frontier;     // boundary of nbhd away from the ambient boundary
    std::vector<std::string> warnings;
};

RegularNeighborhood regular_neighborhood(const ComplexPtr& k, const Subcomplex& l);

/// Same, reusing an already computed second-derived subdivision of k.
RegularNeighborhood regular_neighborhood_in(const SecondDerived& derived,
                                            const Subcomplex& l);

/// Closed star of a vertex set: face closure of every simplex meeting it.
Subcomplex closed_star(const ComplexPtr& ambient, const std::vector<VertexId>& verts);

struct CollapsePair {
    Simplex free_face;
    Simplex coface;
};

/// Replayable sequence of elementary collapses from a subcomplex down to a
/// core. complete=false means the greedy strategy got stuck, which proves
/// nothing about collapsibility.
struct CollapseCertificate {
    std::vector<CollapsePair> steps;
    bool complete = false;
};

CollapseCertificate greedy_collapse_to(const Subcomplex& nbhd, const Subcomplex& core);

/// Replays a certificate and checks every listed face was free at its step
/// and that exactly nbhd minus core gets removed.
bool replay_collapse(const Subcomplex& nbhd, const Subcomplex& core,
                     const CollapseCertificate& cert);

struct PullbackCheck {
    std::string name;
    bool ok = false;
    std::string note;
};

struct PullbackReport {
    bool ok = false;
    bool fullified = false;
    std::vector<PullbackCheck> checks;
    std::string failed_at;  // first failing check, empty when ok
    // pinned invariants of the pulled-back neighborhood
    long long pullback_euler = 0;
    int frontier_components = -1;
    std::size_t pullback_size = 0;
};

/// Desk-scale verification that hyperbolization pulls the regular
/// neighborhood of L in K back to a regular neighborhood of bL in bK:
/// builds both, pulls back through the derived subdivisions, and runs the
/// manifold / collapse / homology / frontier battery.
PullbackReport verify_pullback(const ComplexPtr& k, const Subcomplex& l,
                               const HyperbolizedSimplex& hs, bool force = false);

}  // namespace plhyp
