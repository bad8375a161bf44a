#include "wl/stabil.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

namespace wl {

namespace {

inline std::uint64_t pack(color_t i, color_t j) {
    return (static_cast<std::uint64_t>(i) << 32) | j;
}

// FNV-1a over 64-bit words; good enough for grouping keys.
struct VecHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint64_t x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

// Sorted pair keys for arc (u,v), run-length encoded into flat
// [pair, count, pair, count, ...] form. scratch must have size n.
void flat_fingerprint(const ColorMatrix& m, int u, int v,
                      std::vector<std::uint64_t>& scratch,
                      std::vector<std::uint64_t>& out) {
    const int n = m.n;
    for (int w = 0; w < n; ++w) scratch[w] = pack(m.at(u, w), m.at(w, v));
    std::sort(scratch.begin(), scratch.end());
    out.clear();
    for (int w = 0; w < n;) {
        int w2 = w;
        while (w2 < n && scratch[w2] == scratch[w]) ++w2;
        out.push_back(scratch[w]);
        out.push_back(static_cast<std::uint64_t>(w2 - w));
        w = w2;
    }
}

}  // namespace

Fingerprint arc_fingerprint(const ColorMatrix& m, int u, int v) {
    if (u < 0 || u >= m.n || v < 0 || v >= m.n)
        throw std::invalid_argument("arc_fingerprint: vertex out of range");
    std::vector<std::uint64_t> scratch(m.n), flat;
    flat_fingerprint(m, u, v, scratch, flat);
    Fingerprint fp;
    fp.triples.reserve(flat.size() / 2);
    for (std::size_t t = 0; t < flat.size(); t += 2)
        fp.triples.push_back({static_cast<color_t>(flat[t] >> 32),
                              static_cast<color_t>(flat[t] & 0xffffffffu),
                              static_cast<std::uint32_t>(flat[t + 1])});
    return fp;
}

std::pair<ColorMatrix, bool> stabil_iteration(const ColorMatrix& m) {
    Coloring col = Coloring::from(m);
    ColorMatrix out = m;
    color_t next = m.r;

    std::vector<std::uint64_t> scratch(m.n), flat;
    std::unordered_map<std::vector<std::uint64_t>, color_t, VecHash> groups;
    for (color_t k = 0; k < m.r; ++k) {
        groups.clear();
        bool first = true;
        for (auto [u, v] : col.classes[k].arcs) {
            flat_fingerprint(m, u, v, scratch, flat);
            auto it = groups.find(flat);
            if (it == groups.end()) {
                color_t id = first ? k : next++;
                first = false;
                it = groups.emplace(flat, id).first;
            }
            out.at(u, v) = it->second;
        }
    }
    out.r = next;
    return {std::move(out), next > m.r};
}

StableResult stabil_closure(const ColorMatrix& m, bool with_constants) {
    StableResult res;
    res.stable = m;
    res.iterations = 0;
    for (;;) {
        auto [refined, changed] = stabil_iteration(res.stable);
        ++res.iterations;
        if (!changed) break;
        res.stable = std::move(refined);
    }
    res.rank = res.stable.r;
    res.cells = static_cast<int>(cells(res.stable).size());
    if (with_constants) res.constants = read_constants(res.stable);
    return res;
}

StructureConstants read_constants(const ColorMatrix& stable) {
    Coloring col = Coloring::from(stable);
    StructureConstants sc;
    sc.rank = stable.r;
    for (color_t k = 0; k < stable.r; ++k) {
        auto [u, v] = col.classes[k].arcs.front();
        Fingerprint fp = arc_fingerprint(stable, u, v);
        for (const auto& t : fp.triples) sc.entries.push_back({t.i, t.j, k, t.p});
    }
    std::sort(sc.entries.begin(), sc.entries.end(),
              [](const StructureConstants::Entry& a, const StructureConstants::Entry& b) {
                  if (a.i != b.i) return a.i < b.i;
                  if (a.j != b.j) return a.j < b.j;
                  return a.k < b.k;
              });
    return sc;
}

}  // namespace wl
