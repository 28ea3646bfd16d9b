#pragma once

#include <string>
#include <vector>

#include "plhyp/complex.hpp"
#include "plhyp/hypersimplex.hpp"
#include "plhyp/subdivision.hpp"

namespace plhyp {

/// Refusal to hyperbolize with an invalid hyperbolized simplex (overridable
/// with force for counterexample studies).
struct ValidationRefused : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FiberProduct {
    ComplexPtr complex;
    SimplicialMap proj_a;
    SimplicialMap proj_b;
};

/// Fiber product of two nondegenerate simplicial maps into the same base:
/// matched pairs of simplices mapping isomorphically onto a common base cell.
/// OpenMP kernel with deterministic output.
FiberProduct fiber_product(const SimplicialMap& pa, const SimplicialMap& pb);

namespace reference {
/// Independent brute-force pair scan over all simplex pairs.
FiberProduct fiber_product_serial(const SimplicialMap& pa, const SimplicialMap& pb);
}  // namespace reference

struct HyperbolizationResult {
    ComplexPtr bK;            // the hyperbolization **K**_f
    SimplicialMap h;          // hyperbolization map, bK -> K'' (first projection)
    SimplicialMap proj_x;     // second projection, bK -> X
    FoldingMap fold;          // K' with the folding map
    PullbackRefinement base;  // K'' with p''
    HyperbolizedSimplex hs;
    ValidationReport hs_report;
};

HyperbolizationResult hyperbolize(const ComplexPtr& k, const HyperbolizedSimplex& hs,
                                  bool force = false);

/// h^{-1}(L) for a full subcomplex L of K, with the refined copy of L in K''.
struct Restriction {
    Subcomplex refined_l;   // inside K''
    Subcomplex bL;          // inside bK; equals the fiber product over L
    ComplexPtr bL_complex;  // materialized copy
};

Restriction restrict_over_subcomplex(const HyperbolizationResult& r, const Subcomplex& l);

/// h restricted over the 1-skeleton is a simplicial isomorphism.
bool verify_one_skeleton(const HyperbolizationResult& r);

/// h induces a bijection on connected components.
bool verify_pi0(const HyperbolizationResult& r);

struct VertexLinkCheck {
    std::string bk_vertex;
    std::string base_vertex;
    bool ok = false;
    std::string note;
};

struct LinkReport {
    bool all_match = false;
    bool full_isomorphism_mode = false;  // identity hypersimplex: demand isomorphism
    std::size_t vertices_checked = 0;
    std::vector<VertexLinkCheck> failures;
};

/// Property-(2) battery: compare each bK vertex link with the link of its
/// image at the level of computable invariants (components, Euler
/// characteristic, integral homology, low-dimensional classification); full
/// isomorphism when the hypersimplex is the identity.
LinkReport verify_links(const HyperbolizationResult& r);

}  // namespace plhyp
