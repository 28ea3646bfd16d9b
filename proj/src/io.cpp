#include "plhyp/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace plhyp {

namespace {

bool canonical_integer(const std::string& s) {
    if (s.empty() || s.size() > 18) return false;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    if (s[i] == '0') return s.size() == i + 1;  // "0" only, no leading zeros
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

json id_to_json(const std::string& name) {
    if (canonical_integer(name)) return json(std::stoll(name));
    return json(name);
}

std::string id_from_json(const json& j) {
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    if (j.is_string()) return j.get<std::string>();
    throw std::invalid_argument("vertex id must be an integer or a string");
}

// ordering used for canonical vertex and simplex lists: numbers first by
// value, then strings lexicographically
bool id_less(const std::string& a, const std::string& b) {
    bool ia = canonical_integer(a), ib = canonical_integer(b);
    if (ia != ib) return ia;
    if (ia) return std::stoll(a) < std::stoll(b);
    return a < b;
}

}  // namespace

json complex_to_json(const Complex& c) {
    std::vector<std::string> names = c.vertex_names();
    std::sort(names.begin(), names.end(), id_less);
    json vertices = json::array();
    for (const auto& n : names) vertices.push_back(id_to_json(n));

    std::vector<std::vector<std::string>> maximal;
    for (const Simplex& s : c.maximal_simplices()) {
        std::vector<std::string> named;
        for (VertexId v : s) named.push_back(c.name(v));
        std::sort(named.begin(), named.end(), id_less);
        maximal.push_back(std::move(named));
    }
    std::sort(maximal.begin(), maximal.end(),
              [](const auto& a, const auto& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                                      b.end(), id_less);
              });
    json simplices = json::array();
    for (const auto& s : maximal) {
        json row = json::array();
        for (const auto& n : s) row.push_back(id_to_json(n));
        simplices.push_back(std::move(row));
    }
    return json{{"vertices", std::move(vertices)}, {"simplices", std::move(simplices)}};
}

Complex complex_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("simplices")) {
        throw std::invalid_argument("complex: expected {vertices, simplices}");
    }
    std::vector<std::string> names;
    std::unordered_map<std::string, VertexId> index;
    for (const json& v : j.at("vertices")) {
        std::string name = id_from_json(v);
        if (index.count(name)) throw std::invalid_argument("complex: duplicate vertex id " + name);
        index.emplace(name, VertexId(names.size()));
        names.push_back(std::move(name));
    }
    std::vector<Simplex> simplices;
    for (const json& s : j.at("simplices")) {
        Simplex t;
        for (const json& v : s) {
            std::string name = id_from_json(v);
            auto it = index.find(name);
            if (it == index.end()) {
                throw std::invalid_argument("complex: simplex references unknown vertex " + name);
            }
            t.push_back(it->second);
        }
        simplices.push_back(sorted_simplex(std::move(t)));
    }
    return Complex::from_simplices(std::move(names), simplices);
}

json map_to_json(const SimplicialMap& m) {
    json vm = json::object();
    for (VertexId v = 0; v < m.source()->vertex_count(); ++v) {
        vm[m.source()->name(v)] = id_to_json(m.target()->name(m(v)));
    }
    return json{{"source", complex_to_json(*m.source())},
                {"target", complex_to_json(*m.target())},
                {"vertex_map", std::move(vm)}};
}

SimplicialMap map_from_json(const json& j) {
    auto source = std::make_shared<Complex>(complex_from_json(j.at("source")));
    auto target = std::make_shared<Complex>(complex_from_json(j.at("target")));
    std::vector<VertexId> vmap(source->vertex_count());
    const json& vm = j.at("vertex_map");
    for (VertexId v = 0; v < source->vertex_count(); ++v) {
        const std::string& name = source->name(v);
        if (!vm.contains(name)) {
            throw std::invalid_argument("map: vertex_map misses vertex " + name);
        }
        auto w = target->find_vertex(id_from_json(vm.at(name)));
        if (!w) throw std::invalid_argument("map: image vertex unknown for " + name);
        vmap[v] = *w;
    }
    return SimplicialMap(source, target, std::move(vmap));
}

json triangulation_to_json(const TriangulationOfDelta& t) {
    json out = complex_to_json(*t.complex);
    json faces = json::object();
    for (VertexId v = 0; v < t.complex->vertex_count(); ++v) {
        faces[t.complex->name(v)] = t.vertex_face[v];
    }
    out["n"] = t.n;
    out["face"] = std::move(faces);
    return out;
}

TriangulationOfDelta triangulation_from_json(const json& j) {
    TriangulationOfDelta t;
    t.complex = std::make_shared<Complex>(complex_from_json(j));
    t.n = j.contains("n") ? j.at("n").get<int>() : t.complex->dim();
    const json& faces = j.at("face");
    t.vertex_face.resize(t.complex->vertex_count());
    for (VertexId v = 0; v < t.complex->vertex_count(); ++v) {
        const std::string& name = t.complex->name(v);
        if (!faces.contains(name)) {
            throw std::invalid_argument("triangulation: missing face label for vertex " + name);
        }
        std::vector<int> f = faces.at(name).get<std::vector<int>>();
        std::sort(f.begin(), f.end());
        t.vertex_face[v] = std::move(f);
    }
    return t;
}

json derived_to_json(const DerivedComplex& dc) {
    json out = complex_to_json(*dc.complex);
    json carrier = json::object();
    for (VertexId v = 0; v < dc.carrier.size(); ++v) {
        json parent = json::array();
        for (VertexId p : dc.carrier[v]) parent.push_back(id_to_json(dc.parent->name(p)));
        if (dc.base_vertex[v]) {
            carrier[dc.complex->name(v)] =
                json{{"simplex", std::move(parent)}, {"base_vertex", *dc.base_vertex[v]}};
        } else {
            carrier[dc.complex->name(v)] = std::move(parent);
        }
    }
    out["carrier"] = std::move(carrier);
    return out;
}

json hypersimplex_to_json(const HyperbolizedSimplex& h) {
    json f = json::object();
    for (VertexId v = 0; v < h.x->vertex_count(); ++v) {
        f[h.x->name(v)] = id_to_json(h.t.complex->name(h.f(v)));
    }
    return json{{"n", h.n},
                {"T", triangulation_to_json(h.t)},
                {"X", complex_to_json(*h.x)},
                {"f", std::move(f)}};
}

HyperbolizedSimplex hypersimplex_from_json(const json& j) {
    HyperbolizedSimplex h;
    h.n = j.at("n").get<int>();
    h.t = triangulation_from_json(j.at("T"));
    h.x = std::make_shared<Complex>(complex_from_json(j.at("X")));
    const json& f = j.at("f");
    std::vector<VertexId> vmap(h.x->vertex_count());
    for (VertexId v = 0; v < h.x->vertex_count(); ++v) {
        const std::string& name = h.x->name(v);
        if (!f.contains(name)) {
            throw std::invalid_argument("hypersimplex: f misses vertex " + name);
        }
        auto w = h.t.complex->find_vertex(id_from_json(f.at(name)));
        if (!w) throw std::invalid_argument("hypersimplex: image vertex unknown for " + name);
        vmap[v] = *w;
    }
    h.f = SimplicialMap(h.x, h.t.complex, std::move(vmap));
    return h;
}

json result_to_json(const HyperbolizationResult& r) {
    json h = json::object();
    json provenance = json::object();
    for (VertexId v = 0; v < r.bK->vertex_count(); ++v) {
        h[r.bK->name(v)] = r.base.kpp.complex->name(r.h(v));
        provenance[r.bK->name(v)] =
            json::array({r.base.kpp.complex->name(r.h(v)), r.hs.x->name(r.proj_x(v))});
    }
    return json{{"bK", complex_to_json(*r.bK)},
                {"base", complex_to_json(*r.base.kpp.complex)},
                {"h", std::move(h)},
                {"provenance", std::move(provenance)}};
}

json validation_report_to_json(const ValidationReport& r) {
    json faces = json::array();
    for (const auto& fc : r.faces) {
        faces.push_back(json{{"face", fc.face},
                             {"verdict", to_string(fc.verdict)},
                             {"message", fc.message}});
    }
    json out{{"c0", to_string(r.c0)},
             {"c1", to_string(r.c1)},
             {"c2", to_string(r.c2)},
             {"proper", to_string(r.proper)},
             {"overall", to_string(r.overall())},
             {"faces", std::move(faces)},
             {"messages", r.messages}};
    return out;
}

json pullback_report_to_json(const PullbackReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        checks.push_back(json{{"name", c.name}, {"ok", c.ok}, {"note", c.note}});
    }
    return json{{"ok", r.ok},
                {"fullified", r.fullified},
                {"checks", std::move(checks)},
                {"failed_at", r.failed_at},
                {"pullback_euler", r.pullback_euler},
                {"pullback_size", r.pullback_size},
                {"frontier_components", r.frontier_components}};
}

json homology_to_json(const HomologyGroups& h) {
    json out = json::object();
    for (std::size_t d = 0; d < h.betti.size(); ++d) {
        json torsion = json::array();
        for (const Int& t : h.torsion[d]) torsion.push_back(t.str());
        out[std::to_string(d)] = json{{"betti", h.betti[d]}, {"torsion", std::move(torsion)}};
    }
    return out;
}

std::string canonical_dump(const json& j) { return j.dump(); }

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Subcomplex subcomplex_from_json(const ComplexPtr& ambient, const json& j) {
    Complex sub = complex_from_json(j);
    SimplexSet set;
    for (const Simplex& s : sub.all_simplices()) {
        Simplex amb;
        for (VertexId v : s) {
            auto w = ambient->find_vertex(sub.name(v));
            if (!w) {
                throw std::invalid_argument("subcomplex: vertex " + sub.name(v) +
                                            " is not in the ambient complex");
            }
            amb.push_back(*w);
        }
        std::sort(amb.begin(), amb.end());
        if (!ambient->contains(amb)) {
            throw std::invalid_argument("subcomplex: a simplex is not in the ambient complex");
        }
        set.insert(std::move(amb));
    }
    return Subcomplex(ambient, set);
}

// ----------------------------------------------------------------- OFF export

std::string export_off(const Complex& c) {
    if (c.dim() > 3) throw std::invalid_argument("export_off: dimension must be <= 3");
    const std::size_t n = c.vertex_count();
    std::vector<std::array<double, 3>> pos(n);
    // deterministic seed positions from the vertex names
    for (std::size_t v = 0; v < n; ++v) {
        std::uint64_t h = 1469598103934665603ull;
        for (unsigned char ch : c.name(VertexId(v))) {
            h ^= ch;
            h *= 1099511628211ull;
        }
        double a = double(h % 360011) / 360011.0 * 6.28318530717958648;
        double z = double((h / 360011) % 20011) / 20011.0 * 2.0 - 1.0;
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        pos[v] = {r * std::cos(a), r * std::sin(a), z};
    }
    auto edges = c.simplices(1);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<std::array<double, 3>> force(n, {0, 0, 0});
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                double d[3] = {pos[i][0] - pos[j][0], pos[i][1] - pos[j][1],
                               pos[i][2] - pos[j][2]};
                double dist2 = d[0] * d[0] + d[1] * d[1] + d[2] * d[2] + 1e-6;
                double rep = 0.05 / dist2;
                for (int k = 0; k < 3; ++k) {
                    force[i][k] += rep * d[k];
                    force[j][k] -= rep * d[k];
                }
            }
        }
        for (const Simplex& e : edges) {
            double d[3] = {pos[e[0]][0] - pos[e[1]][0], pos[e[0]][1] - pos[e[1]][1],
                           pos[e[0]][2] - pos[e[1]][2]};
            double dist = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]) + 1e-9;
            double att = 0.08 * (dist - 1.0) / dist;
            for (int k = 0; k < 3; ++k) {
                force[e[0]][k] -= att * d[k];
                force[e[1]][k] += att * d[k];
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (int k = 0; k < 3; ++k) pos[i][k] += force[i][k];
        }
    }
    std::ostringstream out;
    out << "OFF\n";
    auto tris = c.simplices(2);
    auto faces_count = tris.size();
    bool edges_as_faces = faces_count == 0 && edges.size() > 0;
    out << n << " " << (edges_as_faces ? edges.size() : faces_count) << " "
        << edges.size() << "\n";
    out.setf(std::ios::fixed);
    out.precision(6);
    for (std::size_t v = 0; v < n; ++v) {
        out << pos[v][0] << " " << pos[v][1] << " " << pos[v][2] << "\n";
    }
    if (edges_as_faces) {
        for (const Simplex& e : edges) out << "2 " << e[0] << " " << e[1] << "\n";
    } else {
        for (const Simplex& t : tris) {
            out << "3 " << t[0] << " " << t[1] << " " << t[2] << "\n";
        }
    }
    return out.str();
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void save_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace plhyp
