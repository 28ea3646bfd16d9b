#pragma once

// Naive integer-reduction homology oracle for cross-checking the library's
// elimination: textbook corner reduction on dense matrices, written
// independently of the library path.

#include <algorithm>
#include <vector>

#include "plhyp/homology.hpp"

namespace plhyp_test {

inline std::vector<plhyp::Int> oracle_divisors(std::vector<std::vector<plhyp::Int>> m) {
    using plhyp::Int;
    std::vector<Int> div;
    std::size_t r0 = 0, c0 = 0;
    while (r0 < m.size() && !m.empty() && c0 < m[0].size()) {
        std::size_t pr = r0, pc = c0;
        bool found = false;
        Int best = 0;
        for (std::size_t i = r0; i < m.size(); ++i) {
            for (std::size_t j = c0; j < m[0].size(); ++j) {
                if (m[i][j] == 0) continue;
                Int a = m[i][j] < 0 ? Int(-m[i][j]) : m[i][j];
                if (!found || a < best) {
                    best = a;
                    pr = i;
                    pc = j;
                    found = true;
                }
            }
        }
        if (!found) break;
        std::swap(m[pr], m[r0]);
        for (auto& row : m) std::swap(row[pc], row[c0]);
        bool dirty = false;
        for (std::size_t i = r0 + 1; i < m.size(); ++i) {
            if (m[i][c0] == 0) continue;
            Int q = m[i][c0] / m[r0][c0];
            for (std::size_t j = c0; j < m[0].size(); ++j) m[i][j] -= q * m[r0][j];
            if (m[i][c0] != 0) dirty = true;
        }
        for (std::size_t j = c0 + 1; j < m[0].size(); ++j) {
            if (m[r0][j] == 0) continue;
            Int q = m[r0][j] / m[r0][c0];
            for (std::size_t i = r0; i < m.size(); ++i) m[i][j] -= q * m[i][c0];
            if (m[r0][j] != 0) dirty = true;
        }
        if (dirty) continue;
        div.push_back(m[r0][c0] < 0 ? Int(-m[r0][c0]) : m[r0][c0]);
        ++r0;
        ++c0;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < div.size(); ++i) {
            for (std::size_t j = i + 1; j < div.size(); ++j) {
                if (div[j] % div[i] == 0) continue;
                Int g = boost::multiprecision::gcd(div[i], div[j]);
                Int l = div[i] / g * div[j];
                div[i] = g;
                div[j] = l;
                changed = true;
            }
        }
        std::sort(div.begin(), div.end());
    }
    return div;
}

inline plhyp::HomologyGroups oracle_homology(const plhyp::Complex& c) {
    using namespace plhyp;
    HomologyGroups h;
    const int dim = c.dim();
    if (dim < 0) return h;
    ChainComplex cc = ChainComplex::from_complex(c);
    std::vector<std::vector<Int>> rank_div(std::size_t(dim + 2));
    std::vector<std::size_t> rank(std::size_t(dim + 2), 0);
    for (int d = 1; d <= dim; ++d) {
        IntMatrix b = cc.boundary_matrix(d);
        if (b.rows == 0 || b.cols == 0) continue;
        std::vector<std::vector<Int>> m(b.rows, std::vector<Int>(b.cols, 0));
        for (std::size_t i = 0; i < b.rows; ++i) {
            for (std::size_t j = 0; j < b.cols; ++j) m[i][j] = b.at(i, j);
        }
        rank_div[std::size_t(d)] = oracle_divisors(std::move(m));
        rank[std::size_t(d)] = rank_div[std::size_t(d)].size();
    }
    h.betti.assign(std::size_t(dim + 1), 0);
    h.torsion.assign(std::size_t(dim + 1), {});
    for (int k = 0; k <= dim; ++k) {
        h.betti[std::size_t(k)] = int(cc.dims[std::size_t(k)] - rank[std::size_t(k)] -
                                      rank[std::size_t(k + 1)]);
        for (const Int& t : rank_div[std::size_t(k + 1)]) {
            if (t > 1) h.torsion[std::size_t(k)].push_back(t);
        }
    }
    return h;
}

inline plhyp::Complex random_complex(std::mt19937& rng) {
    using namespace plhyp;
    std::uniform_int_distribution<int> nv(1, 8);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const int v = nv(rng);
    std::vector<std::string> names;
    for (int i = 0; i < v; ++i) names.push_back(std::to_string(i));
    std::vector<Simplex> sims;
    for (VertexId a = 0; a < VertexId(v); ++a) {
        for (VertexId b = a + 1; b < VertexId(v); ++b) {
            if (coin(rng) < 0.4) sims.push_back({a, b});
            for (VertexId c = b + 1; c < VertexId(v); ++c) {
                if (coin(rng) < 0.25) sims.push_back({a, b, c});
                for (VertexId d = c + 1; d < VertexId(v); ++d) {
                    if (coin(rng) < 0.08) sims.push_back({a, b, c, d});
                }
            }
        }
    }
    return Complex::from_simplices(std::move(names), sims);
}

}  // namespace plhyp_test
