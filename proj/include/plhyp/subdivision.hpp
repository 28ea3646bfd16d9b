#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "plhyp/complex.hpp"

namespace plhyp {

/// A subdivision remembering where its vertices came from: each derived
/// vertex carries the parent simplex whose barycenter it is, and pullback
/// refinements additionally carry the base-triangulation vertex.
struct DerivedComplex {
    ComplexPtr complex;
    ComplexPtr parent;
    std::vector<Simplex> carrier;                       // per derived vertex
    std::vector<std::optional<VertexId>> base_vertex;   // pullback refinements only
    std::unordered_map<Simplex, VertexId, SimplexHash> carrier_index;

    /// Derived vertex sitting at the barycenter of a parent simplex.
    VertexId vertex_over(const Simplex& parent_simplex) const {
        return carrier_index.at(parent_simplex);
    }
};

/// Barycentric subdivision (OpenMP kernel; deterministic output).
DerivedComplex barycentric(const ComplexPtr& c);

namespace reference {
/// Serial reference implementation kept for testing and benchmarking.
DerivedComplex barycentric_serial(const ComplexPtr& c);
}  // namespace reference

struct SecondDerived {
    DerivedComplex first;   // over the original complex
    DerivedComplex second;  // over first.complex
};

SecondDerived second_derived(const ComplexPtr& c);

/// Image of a subcomplex under subdivision: the full subcomplex on derived
/// vertices whose carrier lies in L.
Subcomplex derived_image(const DerivedComplex& dc, const Subcomplex& l);

/// Functoriality of subdivision: barycenter of sigma -> barycenter of g(sigma).
/// Geometrically equal to g when g is nondegenerate.
SimplicialMap derived_map(const SimplicialMap& g, const DerivedComplex& da,
                          const DerivedComplex& db);

/// A triangulation of the standard n-simplex refining its face structure.
/// Vertices carry the face of Delta they sit in, as sorted labels in 1..n+1.
struct TriangulationOfDelta {
    int n = -1;
    ComplexPtr complex;
    std::vector<std::vector<int>> vertex_face;

    /// Smallest face of Delta containing the simplex (union of vertex labels).
    std::vector<int> carrier_face(const Simplex& s) const;

    /// T_alpha: full subcomplex of simplices lying in the face alpha.
    Subcomplex face_restriction(const std::vector<int>& alpha) const;

    /// Checks the refinement really triangulates every face; throws if not.
    void validate() const;

    bool is_trivial() const;  // the bare face complex of Delta
};

/// The face complex of the standard simplex itself, vertices e1..e(n+1).
TriangulationOfDelta trivial_triangulation(int n);
/// First/second barycentric refinements of it, with induced face labels.
TriangulationOfDelta barycentric_triangulation(int n);
TriangulationOfDelta refine_triangulation(const TriangulationOfDelta& t);

std::vector<std::vector<int>> all_faces(int n);  // nonempty label subsets
std::vector<std::vector<int>> proper_faces(const std::vector<int>& alpha);

/// The folding map p_K: K' -> Delta^k, sending the barycenter of every
/// i-dimensional simplex to e_{i+1}; injective on every simplex.
struct FoldingMap {
    DerivedComplex kprime;
    TriangulationOfDelta target;
    SimplicialMap underlying;  // kprime.complex -> target.complex
};

FoldingMap folding_map(const ComplexPtr& k);

/// K'' together with p'': the coarsest common refinement over which both the
/// folding map and a map into T are simplicial. Each K'-simplex (affinely
/// isomorphic to its image face under p) is replaced by a copy of T
/// restricted to that face; copies glue along shared faces through the
/// (parent simplex, T-vertex) vertex identity.
struct PullbackRefinement {
    DerivedComplex kpp;    // parent = K'
    SimplicialMap ppp;     // kpp.complex -> T.complex
};

PullbackRefinement pullback_refinement(const FoldingMap& p,
                                       const TriangulationOfDelta& t);

}  // namespace plhyp
