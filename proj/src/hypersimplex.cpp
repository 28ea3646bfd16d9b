#include "plhyp/hypersimplex.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "plhyp/homology.hpp"
#include "plhyp/parallel.hpp"

namespace plhyp {

const char* to_string(CheckResult r) {
    switch (r) {
        case CheckResult::pass: return "pass";
        case CheckResult::fail: return "fail";
        default: return "unknown";
    }
}

CheckResult from_trivalent(Trivalent t) {
    switch (t) {
        case Trivalent::yes: return CheckResult::pass;
        case Trivalent::no: return CheckResult::fail;
        default: return CheckResult::unknown;
    }
}

CheckResult ValidationReport::overall() const {
    for (CheckResult r : {c0, c1, c2, proper}) {
        if (r == CheckResult::fail) return CheckResult::fail;
    }
    for (CheckResult r : {c0, c1, c2, proper}) {
        if (r == CheckResult::unknown) return CheckResult::unknown;
    }
    return CheckResult::pass;
}

std::vector<int> HyperbolizedSimplex::carrier_face(const Simplex& s) const {
    std::vector<int> face;
    for (VertexId v : s) {
        for (int l : vertex_carrier(v)) face.push_back(l);
    }
    std::sort(face.begin(), face.end());
    face.erase(std::unique(face.begin(), face.end()), face.end());
    return face;
}

Subcomplex face_preimage(const HyperbolizedSimplex& h, const std::vector<int>& alpha) {
    std::vector<VertexId> verts;
    for (VertexId v = 0; v < h.x->vertex_count(); ++v) {
        const auto& face = h.vertex_carrier(v);
        if (std::includes(alpha.begin(), alpha.end(), face.begin(), face.end())) {
            verts.push_back(v);
        }
    }
    return Subcomplex::full_on_vertices(h.x, verts);
}

Subcomplex face_boundary_preimage(const HyperbolizedSimplex& h,
                                  const std::vector<int>& alpha) {
    SimplexSet set;
    for (const Simplex& s : h.x->all_simplices()) {
        std::vector<int> carrier = h.carrier_face(s);
        if (carrier != alpha &&
            std::includes(alpha.begin(), alpha.end(), carrier.begin(), carrier.end())) {
            set.insert(s);
        }
    }
    return Subcomplex(h.x, set);
}

namespace {

// link of tau as simplices in ambient vertex ids
std::vector<Simplex> link_simplices(const Complex& c, const Simplex& tau) {
    std::vector<Simplex> out;
    for (const Simplex& s : c.cofaces(tau)) {
        Simplex rho;
        std::set_difference(s.begin(), s.end(), tau.begin(), tau.end(),
                            std::back_inserter(rho));
        if (!rho.empty()) out.push_back(std::move(rho));
    }
    return out;
}

}  // namespace

CheckResult check_proper(const HyperbolizedSimplex& h,
                         std::optional<Simplex>* witness,
                         std::vector<std::string>* notes) {
    const Complex& x = *h.x;
    const Complex& tc = *h.t.complex;
    const std::size_t full_size = std::size_t(h.n + 1);

    for (const Simplex& tau : x.all_simplices()) {
        std::vector<int> alpha = h.carrier_face(tau);
        if (alpha.size() == full_size) continue;  // interior carrier: no condition

        auto vertical_in_x = [&](VertexId u) {
            const auto& face = h.vertex_carrier(u);
            return !std::includes(alpha.begin(), alpha.end(), face.begin(), face.end());
        };
        auto vertical_in_t = [&](VertexId w) {
            const auto& face = h.t.vertex_face[w];
            return !std::includes(alpha.begin(), alpha.end(), face.begin(), face.end());
        };

        // vertical links on both sides, as simplex sets in ambient ids
        std::vector<Simplex> lkx = link_simplices(x, tau);
        Simplex ftau = h.f.image(tau);
        std::vector<Simplex> lkt = link_simplices(tc, ftau);

        std::vector<VertexId> vx, vt;
        SimplexSet vxs, vts;
        for (const Simplex& rho : lkx) {
            bool vertical = true;
            for (VertexId u : rho) {
                if (!vertical_in_x(u)) { vertical = false; break; }
            }
            if (vertical) {
                vxs.insert(rho);
                if (rho.size() == 1) vx.push_back(rho[0]);
            }
        }
        for (const Simplex& rho : lkt) {
            bool vertical = true;
            for (VertexId w : rho) {
                if (!vertical_in_t(w)) { vertical = false; break; }
            }
            if (vertical) {
                vts.insert(rho);
                if (rho.size() == 1) vt.push_back(rho[0]);
            }
        }

        // f must map the vertical link isomorphically onto the base vertical link
        bool ok = vx.size() == vt.size() && vxs.size() == vts.size();
        if (ok) {
            std::unordered_set<VertexId> vt_hit;
            for (VertexId u : vx) {
                VertexId w = h.f(u);
                if (!vt_hit.insert(w).second) { ok = false; break; }
            }
            if (ok) {
                for (const Simplex& rho : vxs) {
                    Simplex im = h.f.image(rho);
                    if (im.size() != rho.size() || !vts.count(im)) { ok = false; break; }
                }
            }
        }
        if (!ok) {
            if (witness) *witness = tau;
            if (notes) {
                notes->push_back("vertical link mismatch at a simplex over face carrier size " +
                                 std::to_string(alpha.size()) + ": " +
                                 std::to_string(vx.size()) + " vertical vertices vs " +
                                 std::to_string(vt.size()) + " in the base");
            }
            return CheckResult::fail;
        }
    }
    return CheckResult::pass;
}

bool check_face_recursion(const HyperbolizedSimplex& h, std::vector<std::string>* notes) {
    bool ok = true;
    for (const auto& alpha : all_faces(h.n)) {
        Subcomplex xa = face_preimage(h, alpha);
        Subcomplex ta = h.t.face_restriction(alpha);
        const int d = int(alpha.size()) - 1;

        // top cells of T_alpha
        std::vector<Simplex> ta_tops;
        for (const Simplex& s : ta.simplices()) {
            if (int(s.size()) - 1 == d) ta_tops.push_back(s);
        }

        // split X_alpha into connected components on its vertices
        std::vector<VertexId> verts = xa.vertices();
        std::unordered_map<VertexId, std::size_t> vpos;
        for (std::size_t i = 0; i < verts.size(); ++i) vpos.emplace(verts[i], i);
        std::vector<std::size_t> parent(verts.size());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
            while (parent[a] != a) {
                parent[a] = parent[parent[a]];
                a = parent[a];
            }
            return a;
        };
        for (const Simplex& s : xa.simplices()) {
            for (std::size_t i = 1; i < s.size(); ++i) {
                std::size_t ra = find(vpos.at(s[0]));
                std::size_t rb = find(vpos.at(s[i]));
                if (ra != rb) parent[ra] = rb;
            }
        }
        std::unordered_map<std::size_t, std::unordered_map<Simplex, long long, SimplexHash>> counts;
        for (const Simplex& s : xa.simplices()) {
            if (int(s.size()) - 1 != d) continue;
            Simplex im = h.f.image(s);
            if (int(im.size()) - 1 != d) continue;
            counts[find(vpos.at(s[0]))][im] += 1;
        }
        // every component must hit every top cell an odd number of times
        for (auto& [root, percell] : counts) {
            for (const Simplex& cell : ta_tops) {
                long long c = percell.count(cell) ? percell.at(cell) : 0;
                if (c % 2 != 1) {
                    ok = false;
                    if (notes) {
                        notes->push_back(
                            "face preimage component is not a degree-one piece over a face of dimension " +
                            std::to_string(d));
                    }
                    break;
                }
            }
            if (!ok) break;
        }
        if (!ok) break;
    }
    return ok;
}

ValidationReport validate(const HyperbolizedSimplex& h) {
    ValidationReport r;
    if (!h.x || !h.t.complex) {
        r.c0 = r.c2 = CheckResult::fail;
        r.c1 = CheckResult::fail;
        r.proper = CheckResult::fail;
        r.messages.push_back("missing data");
        return r;
    }
    try {
        h.t.validate();
    } catch (const std::exception& e) {
        r.c0 = r.c1 = r.c2 = r.proper = CheckResult::fail;
        r.messages.push_back(std::string("base triangulation invalid: ") + e.what());
        return r;
    }
    if (!h.f.nondegenerate()) {
        r.c0 = r.c1 = r.c2 = r.proper = CheckResult::fail;
        r.messages.push_back("f is degenerate: the fiber-product triangulation requires "
                             "a map that is injective on every simplex");
        return r;
    }

    // C0: compact connected n-manifold whose boundary maps into the boundary
    if (h.x->empty() || h.x->dim() != h.n) {
        r.c0 = CheckResult::fail;
        r.messages.push_back("X is empty or has the wrong dimension");
    } else if (h.x->component_count() != 1) {
        r.c0 = CheckResult::fail;
        r.messages.push_back("X is not connected");
    } else {
        r.c0 = from_trivalent(is_manifold(*h.x));
        if (r.c0 == CheckResult::fail) r.messages.push_back("X is not a manifold");
        if (r.c0 != CheckResult::fail && h.x->is_pure()) {
            const std::size_t full = std::size_t(h.n + 1);
            for (const Simplex& s : boundary_of(Subcomplex::whole(h.x)).simplices()) {
                if (h.carrier_face(s).size() == full) {
                    r.c0 = CheckResult::fail;
                    r.messages.push_back("the boundary of X does not map into the boundary of Delta");
                    break;
                }
            }
        }
    }

    // C1: degree one mod 2
    try {
        r.c1 = degree_mod2(h.f, true) == 1 ? CheckResult::pass : CheckResult::fail;
        if (r.c1 == CheckResult::fail) r.messages.push_back("degree is zero mod 2");
    } catch (const std::exception& e) {
        r.c1 = CheckResult::fail;
        r.messages.push_back(std::string("degree: ") + e.what());
    }

    // C2: every proper face preimage is a submanifold of matching dimension
    // whose boundary is the preimage of the face boundary
    r.c2 = CheckResult::pass;
    for (const auto& alpha : all_faces(h.n)) {
        if (int(alpha.size()) == h.n + 1) continue;
        FaceCheck fc;
        fc.face = alpha;
        const int d = int(alpha.size()) - 1;
        Subcomplex xa = face_preimage(h, alpha);
        if (xa.size() == 0) {
            fc.verdict = CheckResult::fail;
            fc.message = "empty face preimage";
        } else {
            Complex ca = xa.as_complex();
            if (ca.dim() != d) {
                fc.verdict = CheckResult::fail;
                fc.message = "face preimage has the wrong dimension";
            } else {
                fc.verdict = from_trivalent(is_manifold(ca));
                if (fc.verdict == CheckResult::fail) {
                    fc.message = "face preimage is not a manifold";
                } else {
                    Subcomplex expected = face_boundary_preimage(h, alpha);
                    Subcomplex actual = boundary_of(xa);
                    if (!(expected == actual)) {
                        fc.verdict = CheckResult::fail;
                        fc.message = "boundary of the face preimage mismatches the face boundary preimage";
                    }
                }
            }
        }
        if (fc.verdict == CheckResult::fail) r.c2 = CheckResult::fail;
        else if (fc.verdict == CheckResult::unknown && r.c2 == CheckResult::pass) {
            r.c2 = CheckResult::unknown;
        }
        if (fc.verdict != CheckResult::pass && !fc.message.empty()) {
            r.messages.push_back("face check: " + fc.message);
        }
        r.faces.push_back(std::move(fc));
    }

    r.proper = check_proper(h, &r.proper_witness, &r.messages);
    return r;
}

std::vector<Subcomplex> face_components(const HyperbolizedSimplex& h,
                                        const std::vector<int>& alpha) {
    Subcomplex xa = face_preimage(h, alpha);
    std::vector<VertexId> verts = xa.vertices();
    std::unordered_map<VertexId, std::size_t> vpos;
    for (std::size_t i = 0; i < verts.size(); ++i) vpos.emplace(verts[i], i);
    std::vector<std::size_t> parent(verts.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };
    std::vector<Simplex> simplices = xa.simplices();
    for (const Simplex& s : simplices) {
        for (std::size_t i = 1; i < s.size(); ++i) {
            std::size_t ra = find(vpos.at(s[0]));
            std::size_t rb = find(vpos.at(s[i]));
            if (ra != rb) parent[ra] = rb;
        }
    }
    // component order: by smallest member vertex
    std::vector<std::size_t> comp_of_root(verts.size(), SIZE_MAX);
    std::vector<SimplexSet> sets;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        std::size_t r = find(i);
        if (comp_of_root[r] == SIZE_MAX) {
            comp_of_root[r] = sets.size();
            sets.emplace_back();
        }
    }
    for (const Simplex& s : simplices) {
        sets[comp_of_root[find(vpos.at(s[0]))]].insert(s);
    }
    std::vector<Subcomplex> out;
    out.reserve(sets.size());
    for (auto& set : sets) out.emplace_back(h.x, set);
    return out;
}

bool has_single_arc_edge_preimages(const HyperbolizedSimplex& h) {
    for (const auto& alpha : all_faces(h.n)) {
        if (alpha.size() != 2) continue;
        if (face_components(h, alpha).size() != 1) return false;
    }
    return true;
}

HyperbolizedSimplex face_component_restriction(const HyperbolizedSimplex& h,
                                               const std::vector<int>& alpha,
                                               std::size_t component) {
    std::vector<Subcomplex> comps = face_components(h, alpha);
    if (component >= comps.size()) {
        throw std::invalid_argument("face_component_restriction: no such component");
    }
    HyperbolizedSimplex out;
    out.n = int(alpha.size()) - 1;
    Subcomplex ta = h.t.face_restriction(alpha);
    out.t.n = out.n;
    out.t.complex = std::make_shared<Complex>(ta.as_complex());
    // relabel the face's labels to 1..|alpha|
    std::unordered_map<int, int> relabel;
    for (std::size_t i = 0; i < alpha.size(); ++i) relabel.emplace(alpha[i], int(i) + 1);
    out.t.vertex_face.resize(out.t.complex->vertex_count());
    for (VertexId v = 0; v < out.t.complex->vertex_count(); ++v) {
        VertexId amb = *h.t.complex->find_vertex(out.t.complex->name(v));
        std::vector<int> face;
        for (int l : h.t.vertex_face[amb]) face.push_back(relabel.at(l));
        std::sort(face.begin(), face.end());
        out.t.vertex_face[v] = std::move(face);
    }
    out.x = std::make_shared<Complex>(comps[component].as_complex());
    std::vector<VertexId> vmap(out.x->vertex_count());
    for (VertexId v = 0; v < out.x->vertex_count(); ++v) {
        VertexId amb = *h.x->find_vertex(out.x->name(v));
        vmap[v] = *out.t.complex->find_vertex(h.t.complex->name(h.f(amb)));
    }
    out.f = SimplicialMap(out.x, out.t.complex, std::move(vmap));
    return out;
}

// -------------------------------------------------------------------- fixtures

HyperbolizedSimplex identity_hypersimplex(int n) {
    HyperbolizedSimplex h;
    h.n = n;
    h.t = trivial_triangulation(n);
    h.x = h.t.complex;
    h.f = SimplicialMap::identity(h.x);
    return h;
}

HyperbolizedSimplex zigzag_fixture() {
    HyperbolizedSimplex h;
    h.n = 1;
    h.t = trivial_triangulation(1);
    h.x = std::make_shared<Complex>(Complex::from_named_simplices(
        {{"a", "b"}, {"b", "c"}, {"c", "d"}}));
    // colors e1,e2,e1,e2: three edges fold onto the segment, degree 3 mod 2
    std::vector<VertexId> vmap(4);
    vmap[*h.x->find_vertex("a")] = 0;
    vmap[*h.x->find_vertex("b")] = 1;
    vmap[*h.x->find_vertex("c")] = 0;
    vmap[*h.x->find_vertex("d")] = 1;
    h.f = SimplicialMap(h.x, h.t.complex, std::move(vmap));
    return h;
}

HyperbolizedSimplex doubled_triangle_fixture() {
    HyperbolizedSimplex h;
    h.n = 2;
    h.t = trivial_triangulation(2);
    h.x = std::make_shared<Complex>(Complex::from_named_simplices(
        {{"p", "q", "r"}, {"p", "r", "s"}}));
    std::vector<VertexId> vmap(4);
    vmap[*h.x->find_vertex("p")] = 0;  // e1
    vmap[*h.x->find_vertex("q")] = 1;  // e2
    vmap[*h.x->find_vertex("r")] = 2;  // e3
    vmap[*h.x->find_vertex("s")] = 1;  // e2 again: the doubled color pattern
    h.f = SimplicialMap(h.x, h.t.complex, std::move(vmap));
    return h;
}

// ---------------------------------------------------------------------- search

namespace {

// Static data of the tile-gluing search; per-shard mutable state lives in
// Attempt so count vectors can be explored concurrently.
struct TileSearch {
    const TriangulationOfDelta& t;
    int max_vertices;
    bool skip_proper;
    std::vector<Simplex> cells;                  // top simplices of T
    std::vector<std::array<Simplex, 3>> cell_edges;  // lex-ordered edges per cell
    std::vector<char> edge_on_boundary;          // per cell edge, by flat id 3*c+j
    std::vector<int> boundary_sides_per_cell;
    bool has_interior_color = false;

    explicit TileSearch(const TriangulationOfDelta& tri, int maxv, bool skip)
        : t(tri), max_vertices(maxv), skip_proper(skip) {
        for (const Simplex& c : t.complex->simplices(2)) cells.push_back(c);
        cell_edges.resize(cells.size());
        edge_on_boundary.resize(cells.size() * 3);
        boundary_sides_per_cell.assign(cells.size(), 0);
        const std::size_t full = 3;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const Simplex& cell = cells[c];
            cell_edges[c] = {Simplex{cell[0], cell[1]}, Simplex{cell[0], cell[2]},
                             Simplex{cell[1], cell[2]}};
            for (int j = 0; j < 3; ++j) {
                bool bd = t.carrier_face(cell_edges[c][std::size_t(j)]).size() < full;
                edge_on_boundary[c * 3 + std::size_t(j)] = bd;
                boundary_sides_per_cell[c] += bd;
            }
        }
        for (VertexId v = 0; v < t.complex->vertex_count(); ++v) {
            if (t.vertex_face[v].size() == full) has_interior_color = true;
        }
    }

    // slots of side j within a tile: edge j spans these two sorted-cell slots
    static std::pair<int, int> side_slots(int j) {
        switch (j) {
            case 0: return {0, 1};
            case 1: return {0, 2};
            default: return {1, 2};
        }
    }

    struct UF {
        std::vector<int> p;
        explicit UF(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
        int find(int a) {
            while (p[std::size_t(a)] != a) {
                p[std::size_t(a)] = p[std::size_t(p[std::size_t(a)])];
                a = p[std::size_t(a)];
            }
            return a;
        }
        void unite(int a, int b) { p[std::size_t(find(a))] = find(b); }
    };
};

// One enumeration shard: a fixed per-cell count vector explored by DFS.
struct Attempt {
    const TileSearch& ts;
    std::vector<int> tile_cell;   // tile -> cell index
    // side id = 3*tile + j; slot id = 3*tile + k (vertex k of the sorted cell)
    std::vector<int> partner;     // -1 undecided, -2 boundary, else side id
    std::uint64_t checked = 0;
    std::optional<HyperbolizedSimplex> result;

    using UF = TileSearch::UF;

    explicit Attempt(const TileSearch& search) : ts(search) {}

    bool leaf(const UF& uf_const) {
        UF uf = uf_const;
        const std::size_t tiles = tile_cell.size();
        // quotient triangles
        std::vector<Simplex> tris;
        std::unordered_map<int, VertexId> cls;
        std::vector<VertexId> color;  // per new vertex: T-vertex
        std::vector<std::string> names;
        SimplexSet seen;
        for (std::size_t i = 0; i < tiles; ++i) {
            Simplex tri;
            for (int k = 0; k < 3; ++k) {
                int root = uf.find(int(i) * 3 + k);
                auto it = cls.find(root);
                if (it == cls.end()) {
                    VertexId id = VertexId(names.size());
                    names.push_back("x" + std::to_string(id));
                    color.push_back(ts.cells[std::size_t(tile_cell[i])][std::size_t(k)]);
                    it = cls.emplace(root, id).first;
                }
                tri.push_back(it->second);
            }
            std::sort(tri.begin(), tri.end());
            if (tri[0] == tri[1] || tri[1] == tri[2]) return false;  // collapsed tile
            if (!seen.insert(tri).second) return false;             // repeated triangle
            tris.push_back(std::move(tri));
        }
        if (int(names.size()) > ts.max_vertices) return false;
        ++checked;

        HyperbolizedSimplex h;
        h.n = 2;
        h.t = ts.t;
        h.x = std::make_shared<Complex>(Complex::from_simplices(std::move(names), tris));
        if (h.x->component_count() != 1) return false;
        std::vector<VertexId> vmap(color.begin(), color.end());
        try {
            h.f = SimplicialMap(h.x, ts.t.complex, std::move(vmap));
        } catch (const std::exception&) {
            return false;
        }
        ValidationReport r = validate(h);
        bool good = r.c0 == CheckResult::pass && r.c1 == CheckResult::pass &&
                    r.c2 == CheckResult::pass &&
                    (ts.skip_proper ? r.proper == CheckResult::fail
                                    : r.proper == CheckResult::pass);
        if (!good) return false;
        if (h.f.is_isomorphism()) return false;  // the identity over Delta
        result = std::move(h);
        return true;
    }

    bool dfs(int side, UF uf) {
        const int total = int(tile_cell.size()) * 3;
        while (side < total && partner[std::size_t(side)] != -1) ++side;
        if (side == total) return leaf(uf);

        const int tile = side / 3, j = side % 3;
        const int cell = tile_cell[std::size_t(tile)];
        const Simplex& edge = ts.cell_edges[std::size_t(cell)][std::size_t(j)];

        const bool boundary_able =
            ts.edge_on_boundary[std::size_t(cell) * 3 + std::size_t(j)];
        if (boundary_able) {
            partner[std::size_t(side)] = -2;
            if (dfs(side + 1, uf)) return true;
            partner[std::size_t(side)] = -1;
            // gluing two boundary-carrier sides doubles the vertical link over
            // a base edge with a single coface, which is never proper
            if (!ts.skip_proper) return false;
        }
        for (int other = side + 1; other < total; ++other) {
            if (partner[std::size_t(other)] != -1) continue;
            const int otile = other / 3, oj = other % 3;
            if (otile == tile) continue;
            const int ocell = tile_cell[std::size_t(otile)];
            if (ts.cell_edges[std::size_t(ocell)][std::size_t(oj)] != edge) continue;
            partner[std::size_t(side)] = other;
            partner[std::size_t(other)] = side;
            UF next = uf;
            auto [a1, a2] = TileSearch::side_slots(j);
            auto [b1, b2] = TileSearch::side_slots(oj);
            // identify matching endpoints (same T-vertex on both sides)
            const Simplex& c1 = ts.cells[std::size_t(cell)];
            const Simplex& c2 = ts.cells[std::size_t(ocell)];
            int slots_a[2] = {a1, a2}, slots_b[2] = {b1, b2};
            for (int u = 0; u < 2; ++u) {
                for (int w = 0; w < 2; ++w) {
                    if (c1[std::size_t(slots_a[u])] == c2[std::size_t(slots_b[w])]) {
                        next.unite(tile * 3 + slots_a[u], otile * 3 + slots_b[w]);
                    }
                }
            }
            if (dfs(side + 1, std::move(next))) return true;
            partner[std::size_t(side)] = -1;
            partner[std::size_t(other)] = -1;
        }
        return false;
    }

    bool try_counts(const std::vector<int>& counts) {
        if (!ts.skip_proper) {
            // boundary-able sides must stay on the boundary, and the boundary
            // of a surface has as many vertices as edges: a hard vertex bound
            long long boundary_slots = 0;
            for (std::size_t c = 0; c < counts.size(); ++c) {
                boundary_slots += (long long)counts[c] * ts.boundary_sides_per_cell[c];
            }
            if (boundary_slots + (ts.has_interior_color ? 1 : 0) > ts.max_vertices) {
                return false;
            }
        }
        tile_cell.clear();
        for (std::size_t c = 0; c < counts.size(); ++c) {
            for (int k = 0; k < counts[c]; ++k) tile_cell.push_back(int(c));
        }
        partner.assign(tile_cell.size() * 3, -1);
        UF uf(tile_cell.size() * 3);
        return dfs(0, std::move(uf));
    }
};

void enumerate_counts(const std::size_t m, std::vector<int>& counts, std::size_t pos,
                      int remaining, std::vector<std::vector<int>>& out) {
    if (pos + 1 == m) {
        if (remaining < 1 || remaining % 2 == 0) return;
        counts[pos] = remaining;
        out.push_back(counts);
        return;
    }
    for (int c = 1; c <= remaining - int(m - pos - 1); c += 2) {
        counts[pos] = c;
        enumerate_counts(m, counts, pos + 1, remaining - c, out);
    }
}

}  // namespace

SearchResult search_toy_hypersimplex(int n, int max_vertices,
                                     const TriangulationOfDelta& t,
                                     bool skip_proper) {
    if (n != 2) throw std::invalid_argument("search_toy_hypersimplex: only n = 2 is supported");
    t.validate();
    SearchResult out;
    TileSearch search(t, max_vertices, skip_proper);
    const int m = int(search.cells.size());
    // every cell needs an odd preimage count, so totals step by 2 from m
    long long side_bound = 2LL * max_vertices * (max_vertices - 1) / 2 / 3;
    if (!skip_proper) {
        int min_bd = 3;
        for (int b : search.boundary_sides_per_cell) min_bd = std::min(min_bd, b);
        // with every tile contributing a boundary side, tiles are capped by
        // the vertex budget outright
        if (min_bd >= 1) side_bound = std::min<long long>(side_bound, max_vertices);
    }
    for (int total = m; total <= side_bound; total += 2) {
        // each count vector is an independent shard; the lexicographically
        // first hit wins regardless of completion order
        std::vector<std::vector<int>> vectors;
        std::vector<int> counts(std::size_t(m), 1);
        enumerate_counts(std::size_t(m), counts, 0, total, vectors);
        std::vector<std::optional<HyperbolizedSimplex>> hits(vectors.size());
        std::uint64_t checked = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : checked) \
    num_threads(thread_count())
        for (std::int64_t i = 0; i < std::int64_t(vectors.size()); ++i) {
            Attempt attempt(search);
            if (attempt.try_counts(vectors[std::size_t(i)])) {
                hits[std::size_t(i)] = std::move(attempt.result);
            }
            checked += attempt.checked;
        }
        out.candidates_checked += checked;
        for (auto& hit : hits) {
            if (hit) {
                out.found = std::move(hit);
                return out;
            }
        }
    }
    return out;
}

}  // namespace plhyp
