#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plhyp/complex.hpp"
#include "plhyp/subdivision.hpp"

namespace plhyp {

enum class CheckResult { pass, fail, unknown };
const char* to_string(CheckResult r);
CheckResult from_trivalent(Trivalent t);

/// A hyperbolized n-simplex: a degree-one-mod-2 map f: (X, dX) -> (Delta, dDelta)
/// from a compact connected n-manifold with boundary, nondegenerate simplicial
/// into a validated triangulation T of Delta, with face preimages X_alpha that
/// are submanifolds of matching dimension.
struct HyperbolizedSimplex {
    int n = -1;
    TriangulationOfDelta t;
    ComplexPtr x;
    SimplicialMap f;  // x -> t.complex

    /// Smallest face of Delta carrying the image of a vertex of X.
    const std::vector<int>& vertex_carrier(VertexId v) const {
        return t.vertex_face[f(v)];
    }
    std::vector<int> carrier_face(const Simplex& s) const;
};

/// X_alpha: the full subcomplex of simplices mapping into T_alpha.
Subcomplex face_preimage(const HyperbolizedSimplex& h, const std::vector<int>& alpha);

/// Preimage of the boundary of a face: simplices of X_alpha whose carrier is
/// a proper face of alpha.
Subcomplex face_boundary_preimage(const HyperbolizedSimplex& h,
                                  const std::vector<int>& alpha);

struct FaceCheck {
    std::vector<int> face;
    CheckResult verdict = CheckResult::unknown;
    std::string message;
};

struct ValidationReport {
    CheckResult c0 = CheckResult::unknown;  // compact connected n-manifold with boundary
    CheckResult c1 = CheckResult::fail;     // degree one mod 2
    CheckResult c2 = CheckResult::unknown;  // face preimages are submanifolds, boundaries match
    CheckResult proper = CheckResult::unknown;
    std::vector<FaceCheck> faces;
    std::vector<std::string> messages;
    std::optional<Simplex> proper_witness;  // simplex of X where properness breaks

    bool valid() const {
        return c0 == CheckResult::pass && c1 == CheckResult::pass &&
               c2 == CheckResult::pass && proper == CheckResult::pass;
    }
    CheckResult overall() const;
};

ValidationReport validate(const HyperbolizedSimplex& h);

/// Combinatorial properness: at every simplex of X whose image carrier is a
/// proper face alpha, the link splits into the link within X_alpha and a
/// vertical part that f maps isomorphically onto the vertical link in T.
/// Sufficient mode: a pass certifies the local product structure used by the
/// fiber product; a fail carries a witness simplex.
CheckResult check_proper(const HyperbolizedSimplex& h,
                         std::optional<Simplex>* witness = nullptr,
                         std::vector<std::string>* notes = nullptr);

/// Diagnostic for the face-restriction recursion: every component of every
/// face preimage should again look like a hyperbolized simplex of the face
/// dimension (checked at the degree level). Not part of validate(); folded
/// but proper fixtures legitimately fail it.
bool check_face_recursion(const HyperbolizedSimplex& h,
                          std::vector<std::string>* notes = nullptr);

/// Connected components of a face preimage, ordered by smallest vertex.
std::vector<Subcomplex> face_components(const HyperbolizedSimplex& h,
                                        const std::vector<int>& alpha);

/// Every edge-face preimage is a single arc; exactly the hypersimplices whose
/// hyperbolizations restrict to an isomorphism over the one-skeleton.
bool has_single_arc_edge_preimages(const HyperbolizedSimplex& h);

/// The restriction of f over one component of X_alpha, repackaged as a
/// hyperbolized simplex of the face dimension (labels renumbered).
HyperbolizedSimplex face_component_restriction(const HyperbolizedSimplex& h,
                                               const std::vector<int>& alpha,
                                               std::size_t component);

HyperbolizedSimplex identity_hypersimplex(int n);

/// The Appendix-style properness counterexample: an arc folded over the edge,
/// colors e1,e2,e1,e2. Passes C0-C2, fails properness at the interior folds.
HyperbolizedSimplex zigzag_fixture();

/// Degree-zero "doubled triangle" used to force a non-manifold hyperbolization.
HyperbolizedSimplex doubled_triangle_fixture();

struct SearchResult {
    std::optional<HyperbolizedSimplex> found;
    std::uint64_t candidates_checked = 0;
};

/// Deterministic brute-force search over glued tile complexes mapping onto T,
/// smallest first; returns the first fully valid candidate that is not
/// isomorphic to T over Delta. skip_proper relaxes the properness check to
/// hunt for counterexample material.
SearchResult search_toy_hypersimplex(int n, int max_vertices,
                                     const TriangulationOfDelta& t,
                                     bool skip_proper = false);

}  // namespace plhyp
