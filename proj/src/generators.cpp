#include "wl/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wl {

namespace {

// symmetric simple graph -> color matrix with diagonal 0, edges 1, non-edges 2
ColorMatrix from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<long long> raw(static_cast<std::size_t>(n) * n, 2);
    for (int u = 0; u < n; ++u) raw[static_cast<std::size_t>(u) * n + u] = 0;
    for (auto [u, v] : edges) {
        raw[static_cast<std::size_t>(u) * n + v] = 1;
        raw[static_cast<std::size_t>(v) * n + u] = 1;
    }
    return ColorMatrix::from_colors(n, raw);
}

}  // namespace

ColorMatrix benzene_stack(int k) {
    if (k < 1) throw std::invalid_argument("benzene_stack: k must be at least 1");
    const int n = 6 * k;
    std::vector<std::pair<int, int>> edges;
    // ring i occupies vertices 6i..6i+5 as a 6-cycle
    for (int i = 0; i < k; ++i)
        for (int l = 0; l < 6; ++l) edges.emplace_back(6 * i + l, 6 * i + (l + 1) % 6);
    // rung j (1-based) joins rings j-1 and j at alternating letter triples
    for (int j = 1; j < k; ++j) {
        const int base = j % 2 == 1 ? 0 : 1;
        for (int l = base; l < 6; l += 2) edges.emplace_back(6 * (j - 1) + l, 6 * j + l);
    }
    return from_edges(n, edges);
}

ColorMatrix moebius_ladder(int k) {
    if (k < 3) throw std::invalid_argument("moebius_ladder: k must be at least 3");
    const int n = 2 * k;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int d = v - u;
            if (d == 1 || d == k || d == 2 * k - 1) edges.emplace_back(u, v);
        }
    return from_edges(n, edges);
}

ColorMatrix dynkin(int n) {
    if (n < 4) throw std::invalid_argument("dynkin: n must be at least 4");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 <= n - 3; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 3, n - 2);
    edges.emplace_back(n - 3, n - 1);
    return from_edges(n, edges);
}

ColorMatrix molecular(const MolecularSpec& spec) {
    const int n = static_cast<int>(spec.atoms.size());
    if (n == 0) throw std::invalid_argument("molecular: no atoms");
    int max_atom = 0;
    for (int a : spec.atoms) {
        if (a < 0) throw std::invalid_argument("molecular: negative atom id");
        max_atom = std::max(max_atom, a);
    }
    if (spec.default_kind < 0) throw std::invalid_argument("molecular: negative bond kind");
    const long long s = max_atom + 1;
    std::vector<long long> raw(static_cast<std::size_t>(n) * n, s + spec.default_kind);
    for (int u = 0; u < n; ++u) raw[static_cast<std::size_t>(u) * n + u] = spec.atoms[u];
    std::set<std::pair<int, int>> seen;
    for (const auto& b : spec.bonds) {
        if (b.u < 0 || b.u >= n || b.v < 0 || b.v >= n)
            throw std::invalid_argument("molecular: bond endpoint out of range");
        if (b.u == b.v) throw std::invalid_argument("molecular: bond joins an atom to itself");
        if (b.kind < 0) throw std::invalid_argument("molecular: negative bond kind");
        auto key = std::minmax(b.u, b.v);
        if (!seen.insert(key).second) throw std::invalid_argument("molecular: duplicate bond");
        raw[static_cast<std::size_t>(b.u) * n + b.v] = s + b.kind;
        raw[static_cast<std::size_t>(b.v) * n + b.u] = s + b.kind;
    }
    return ColorMatrix::from_colors(n, raw);
}

}  // namespace wl
