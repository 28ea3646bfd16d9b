#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace plhyp {

using VertexId = std::uint32_t;

// A simplex is a sorted, duplicate-free list of vertex indices of its complex.
using Simplex = std::vector<VertexId>;

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (VertexId v : s) {
            h ^= v + 1;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

using SimplexSet = std::unordered_set<Simplex, SimplexHash>;

Simplex sorted_simplex(Simplex s);
bool is_face(const Simplex& face, const Simplex& of);
Simplex simplex_union(const Simplex& a, const Simplex& b);
bool simplices_disjoint(const Simplex& a, const Simplex& b);

/// Abstract simplicial complex. Vertices carry opaque string names preserved
/// through I/O; all combinatorics run on dense indices. Immutable once built:
/// the face closure and incidence indices are computed in the constructor, so
/// concurrent reads need no synchronization.
class Complex {
public:
    Complex() = default;

    /// Build from maximal simplices (given as index lists into `names`);
    /// closes under faces. Every name becomes a vertex even if isolated.
    static Complex from_simplices(std::vector<std::string> names,
                                  const std::vector<Simplex>& simplices);

    /// Convenience: vertices named by the strings inside the simplices.
    static Complex from_named_simplices(
        const std::vector<std::vector<std::string>>& simplices);

    /// Trusted constructor for callers that already hold a face-closed set.
    static Complex from_closed_set(std::vector<std::string> names, SimplexSet set);

    /// Trusted constructor: simplices must be face-closed and duplicate-free.
    static Complex from_closed_vector(std::vector<std::string> names,
                                      std::vector<Simplex> simplices);

    int dim() const { return dim_; }
    std::size_t vertex_count() const { return names_.size(); }
    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::string& name(VertexId v) const { return names_[v]; }
    std::optional<VertexId> find_vertex(std::string_view name) const;

    bool contains(const Simplex& s) const { return index_.count(s) > 0; }
    std::size_t size() const { return simplices_.size(); }

    /// Position of a simplex in all_simplices(); throws when absent.
    std::uint32_t flat_index(const Simplex& s) const { return index_.at(s); }

    struct SimplexRange {
        const Simplex* first = nullptr;
        const Simplex* last = nullptr;
        const Simplex* begin() const { return first; }
        const Simplex* end() const { return last; }
        std::size_t size() const { return std::size_t(last - first); }
        bool empty() const { return first == last; }
        const Simplex& operator[](std::size_t i) const { return first[i]; }
    };

    /// Simplices of dimension d, sorted lexicographically. Empty when out of range.
    SimplexRange simplices(int d) const;
    const std::vector<Simplex>& all_simplices() const { return simplices_; }
    std::vector<Simplex> maximal_simplices() const;

    /// Indices (into all_simplices()) of the simplices containing vertex v.
    const std::vector<std::uint32_t>& star_of_vertex(VertexId v) const {
        return vertex_star_[v];
    }

    /// Simplices containing tau (tau itself included).
    std::vector<Simplex> cofaces(const Simplex& tau) const;

    bool is_pure() const;
    bool empty() const { return simplices_.empty(); }

    std::vector<int> f_vector() const;

    /// Connected components via the 1-skeleton; component id per vertex.
    std::vector<int> vertex_components() const;
    int component_count() const;

    bool same_as(const Complex& other) const;  // equal names and simplex sets

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, VertexId> name_index_;
    std::vector<Simplex> simplices_;                 // sorted by (dim, lex)
    std::vector<std::pair<std::size_t, std::size_t>> dim_ranges_;
    std::unordered_map<Simplex, std::uint32_t, SimplexHash> index_;
    std::vector<std::vector<std::uint32_t>> vertex_star_;
    int dim_ = -1;

    void build_indices();
};

using ComplexPtr = std::shared_ptr<const Complex>;

/// Face-closed subset of a complex's simplices, kept as a mask over the
/// ambient simplex list.
class Subcomplex {
public:
    Subcomplex() = default;
    Subcomplex(ComplexPtr ambient, const SimplexSet& simplices);
    Subcomplex(ComplexPtr ambient, const std::vector<Simplex>& simplices);

    static Subcomplex whole(ComplexPtr ambient);
    static Subcomplex empty(ComplexPtr ambient);

    /// Face closure of the vertex-induced ("full") subcomplex on `vertices`.
    static Subcomplex full_on_vertices(ComplexPtr ambient,
                                       const std::vector<VertexId>& vertices);

    const ComplexPtr& ambient() const { return ambient_; }
    bool contains(const Simplex& s) const;
    std::vector<Simplex> simplices() const;
    std::size_t size() const { return count_; }
    int dim() const;
    std::vector<VertexId> vertices() const;

    /// Materialize as a standalone Complex reusing the ambient vertex names.
    Complex as_complex() const;

    bool operator==(const Subcomplex& other) const;

private:
    ComplexPtr ambient_;
    std::vector<char> mask_;  // over ambient->all_simplices()
    std::size_t count_ = 0;

    friend Subcomplex subcomplex_difference(const Subcomplex&, const Subcomplex&);
};

/// Simplicial map given by a total vertex assignment source -> target.
/// Construction checks that every source simplex maps to a target simplex.
class SimplicialMap {
public:
    SimplicialMap() = default;
    SimplicialMap(ComplexPtr source, ComplexPtr target,
                  std::vector<VertexId> vertex_map);

    static SimplicialMap identity(ComplexPtr c);

    const ComplexPtr& source() const { return source_; }
    const ComplexPtr& target() const { return target_; }
    VertexId operator()(VertexId v) const { return vmap_[v]; }
    const std::vector<VertexId>& vertex_map() const { return vmap_; }

    /// Image of a source simplex (sorted, duplicates collapsed).
    Simplex image(const Simplex& s) const;

    /// Injective on every simplex.
    bool nondegenerate() const { return nondegenerate_; }

    SimplicialMap compose_with(const SimplicialMap& then) const;  // then . this

    /// True if the vertex map is a bijection and simplices correspond exactly.
    bool is_isomorphism() const;

private:
    ComplexPtr source_;
    ComplexPtr target_;
    std::vector<VertexId> vmap_;
    bool nondegenerate_ = false;
};

/// Coherent orientation: sign per top simplex relative to sorted vertex order.
struct Orientation {
    std::unordered_map<Simplex, int, SimplexHash> sign;
};

struct OrientResult {
    bool orientable = false;
    Orientation orientation;              // valid when orientable
    std::vector<Simplex> odd_cycle;       // witness when not orientable
};

enum class Trivalent { yes, no, unknown };

const char* to_string(Trivalent t);

// ---- core operations ----

/// Face closure of all simplices containing tau. Throws if tau is missing.
Subcomplex star(const ComplexPtr& c, const Simplex& tau);

/// Simplices rho with rho disjoint from tau and rho U tau in the complex.
Complex link(const ComplexPtr& c, const Simplex& tau);

/// As above, but computed inside a subcomplex.
Complex link_in(const Subcomplex& sub, const Simplex& tau);

Complex skeleton(const Complex& c, int k);

/// Face closure of the codimension-1 simplices lying in exactly one top
/// simplex. Requires a pure complex.
Subcomplex boundary_subcomplex(const ComplexPtr& c);

/// Same computation inside a pure subcomplex, in ambient coordinates.
Subcomplex boundary_of(const Subcomplex& sub);

bool is_full(const Complex& c, const Subcomplex& sub);

/// PL manifold recognition, certified for dim <= 3 (closed or with boundary);
/// `unknown` in higher dimension when pseudomanifold/homology screening passes.
Trivalent is_manifold(const Complex& c);

/// Classification helpers used by link checks (dim <= 2 certified).
bool is_circle(const Complex& c);
bool is_arc(const Complex& c);
bool is_sphere2(const Complex& c);
bool is_disk2(const Complex& c);

/// Pseudomanifold check: pure, codim-1 faces in <= 2 tops, strongly connected.
bool is_pseudomanifold(const Complex& c);

OrientResult orient(const Complex& c);

/// Join of two complexes on disjoint vertex name sets.
Complex join_complexes(const Complex& a, const Complex& b);

/// Checks whether `vmap` (source vertex -> target vertex) defines a simplicial
/// isomorphism between the two complexes.
bool is_isomorphism_via(const Complex& source, const Complex& target,
                        const std::vector<VertexId>& vmap);

Subcomplex subcomplex_difference(const Subcomplex& a, const Subcomplex& b);

}  // namespace plhyp
