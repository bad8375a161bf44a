#include "wl/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <unordered_map>

#include "wl/stabil.hpp"

namespace wl {

namespace {

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

std::uint64_t pack(color_t a, color_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

SymbolicSquare symbolic_square_full(const ColorMatrix& m) {
    const int n = m.n;
    // key per entry: the old color, then the run-length encoded sorted
    // multiset of factor-color pairs; distinct keys become entries of the
    // refined matrix in row-major first-occurrence order
    std::unordered_map<std::vector<std::uint64_t>, color_t, VecHash> ids;
    std::vector<const std::vector<std::uint64_t>*> key_of_id;
    SymbolicSquare out;
    out.refined.n = n;
    out.refined.colors.resize(m.colors.size());
    std::vector<std::uint64_t> scratch(n), key;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            for (int w = 0; w < n; ++w) scratch[w] = pack(m.at(u, w), m.at(w, v));
            std::sort(scratch.begin(), scratch.end());
            key.clear();
            key.push_back(m.at(u, v));
            for (int w = 0; w < n;) {
                int w2 = w;
                while (w2 < n && scratch[w2] == scratch[w]) ++w2;
                key.push_back(scratch[w]);
                key.push_back(static_cast<std::uint64_t>(w2 - w));
                w = w2;
            }
            auto [it, inserted] = ids.emplace(key, static_cast<color_t>(key_of_id.size()));
            if (inserted) key_of_id.push_back(&it->first);
            out.refined.at(u, v) = it->second;
        }
    out.refined.r = static_cast<color_t>(key_of_id.size());
    out.class_expressions.resize(key_of_id.size());
    for (std::size_t c = 0; c < key_of_id.size(); ++c) {
        const auto& k = *key_of_id[c];
        Expression e;
        for (std::size_t t = 1; t + 1 < k.size(); t += 2)
            e.push_back({{static_cast<color_t>(k[t] >> 32), static_cast<color_t>(k[t] & 0xffffffffu)},
                         static_cast<std::uint32_t>(k[t + 1])});
        out.class_expressions[c] = std::move(e);
    }
    return out;
}

ColorMatrix symbolic_square(const ColorMatrix& m) { return symbolic_square_full(m).refined; }

StableResult symbolic_closure(const ColorMatrix& m, bool with_constants) {
    StableResult res;
    res.stable = m;
    res.iterations = 0;
    for (;;) {
        ColorMatrix next = symbolic_square(res.stable);
        ++res.iterations;
        bool changed = next.r != res.stable.r;
        res.stable = std::move(next);
        if (!changed) break;
    }
    res.rank = res.stable.r;
    res.cells = static_cast<int>(cells(res.stable).size());
    if (with_constants) res.constants = structure_constants(res.stable);
    return res;
}

StructureConstants structure_constants(const ColorMatrix& stable) {
    const int n = stable.n;
    Coloring col = Coloring::from(stable);
    StructureConstants out;
    out.rank = stable.r;
    // count per (i, j) over a representative arc of every class, confirming
    // that each further arc of the class agrees
    std::vector<std::uint32_t> counts(static_cast<std::size_t>(stable.r) * stable.r);
    std::vector<std::uint32_t> ref;
    for (color_t k = 0; k < stable.r; ++k) {
        bool first = true;
        for (auto [u, v] : col.classes[k].arcs) {
            std::fill(counts.begin(), counts.end(), 0);
            for (int w = 0; w < n; ++w)
                ++counts[static_cast<std::size_t>(stable.at(u, w)) * stable.r + stable.at(w, v)];
            if (first) {
                ref = counts;
                first = false;
            } else if (counts != ref) {
                std::ostringstream msg;
                msg << "class " << k << ": arcs (" << col.classes[k].arcs[0].first << ","
                    << col.classes[k].arcs[0].second << ") and (" << u << "," << v
                    << ") have different triangle counts";
                throw not_stable_error(msg.str());
            }
        }
        for (color_t i = 0; i < stable.r; ++i)
            for (color_t j = 0; j < stable.r; ++j) {
                std::uint32_t p = ref[static_cast<std::size_t>(i) * stable.r + j];
                if (p) out.entries.push_back({i, j, k, p});
            }
    }
    std::sort(out.entries.begin(), out.entries.end(), [](const auto& a, const auto& b) {
        return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
    });
    return out;
}

CoherenceReport verify_coherent(const ColorMatrix& m) {
    CoherenceReport rep;
    rep.ok = true;
    const int n = m.n;
    auto fail = [&rep](const std::string& s) {
        rep.ok = false;
        if (rep.violations.size() < 32) rep.violations.push_back(s);
    };

    // dense color ids
    std::vector<char> seen(m.r, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            color_t c = m.at(u, v);
            if (c >= m.r) {
                std::ostringstream msg;
                msg << "partition: entry (" << u << "," << v << ") has color " << c
                    << " outside 0.." << m.r - 1;
                fail(msg.str());
                return rep;
            }
            seen[c] = 1;
        }
    for (color_t c = 0; c < m.r; ++c)
        if (!seen[c]) {
            std::ostringstream msg;
            msg << "partition: color " << c << " is declared but absent";
            fail(msg.str());
        }

    // vertex colors and arc colors are disjoint
    std::vector<char> on_diag(m.r, 0), off_diag(m.r, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) (u == v ? on_diag : off_diag)[m.at(u, v)] = 1;
    for (color_t c = 0; c < m.r; ++c)
        if (on_diag[c] && off_diag[c]) {
            std::ostringstream msg;
            msg << "diagonal: color " << c << " appears both on and off the diagonal";
            fail(msg.str());
        }
    if (!rep.ok) return rep;

    // transposes pair up classwise
    rep.transpose_of.assign(m.r, 0);
    std::vector<char> have(m.r, 0);
    for (int u = 0; u < n && rep.ok; ++u)
        for (int v = 0; v < n; ++v) {
            color_t c = m.at(u, v), ct = m.at(v, u);
            if (!have[c]) {
                have[c] = 1;
                rep.transpose_of[c] = ct;
            } else if (rep.transpose_of[c] != ct) {
                std::ostringstream msg;
                msg << "transpose: class " << c << " maps to both " << rep.transpose_of[c]
                    << " and " << ct << " (witness arc (" << u << "," << v << "))";
                fail(msg.str());
                break;
            }
        }
    if (rep.ok)
        for (color_t c = 0; c < m.r; ++c)
            if (rep.transpose_of[rep.transpose_of[c]] != c) {
                std::ostringstream msg;
                msg << "transpose: pairing of class " << c << " is not an involution";
                fail(msg.str());
            }
    if (!rep.ok) {
        rep.transpose_of.clear();
        return rep;
    }

    // per-class triangle fingerprints agree
    Coloring col = Coloring::from(m);
    for (color_t k = 0; k < m.r && rep.ok; ++k) {
        const auto& arcs = col.classes[k].arcs;
        Fingerprint ref = arc_fingerprint(m, arcs[0].first, arcs[0].second);
        for (std::size_t t = 1; t < arcs.size(); ++t) {
            if (arc_fingerprint(m, arcs[t].first, arcs[t].second) != ref) {
                std::ostringstream msg;
                msg << "fingerprint: class " << k << " differs between arcs (" << arcs[0].first
                    << "," << arcs[0].second << ") and (" << arcs[t].first << "," << arcs[t].second
                    << ")";
                fail(msg.str());
                break;
            }
        }
    }
    return rep;
}

ConstantsCheck check_constants_by_multiplication(const ColorMatrix& stable,
                                                 const StructureConstants& c, int max_n) {
    ConstantsCheck res;
    if (stable.n > max_n) {
        res.status = ConstantsCheck::Status::skipped;
        std::ostringstream msg;
        msg << "skipped: n=" << stable.n << " exceeds limit " << max_n;
        res.detail = msg.str();
        return res;
    }
    const int n = stable.n;
    const color_t r = stable.r;
    auto mismatch = [&res](const std::string& s) {
        res.status = ConstantsCheck::Status::mismatch;
        res.detail = s;
    };
    if (c.rank != r) {
        mismatch("rank of the constants does not match the matrix");
        return res;
    }
    for (std::size_t t = 0; t < c.entries.size(); ++t) {
        const auto& en = c.entries[t];
        if (en.i >= r || en.j >= r || en.k >= r || en.p == 0) {
            mismatch("constants contain an out-of-range class or a zero count");
            return res;
        }
        if (t > 0) {
            const auto& pr = c.entries[t - 1];
            if (std::tie(pr.i, pr.j, pr.k) >= std::tie(en.i, en.j, en.k)) {
                mismatch("constants are not sorted by (i, j, k) without duplicates");
                return res;
            }
        }
    }

    Coloring col = Coloring::from(stable);
    // realize each product A_i A_j by enumerating paths u -> w -> v with
    // (u, w) of color i and (w, v) of color j, into a dirty-reset buffer
    std::vector<std::uint32_t> prod(stable.colors.size(), 0);
    std::vector<std::size_t> dirty;
    std::vector<std::vector<int>> tails_by_head(n);
    std::vector<std::uint32_t> expected(r, 0), covered(r, 0);
    std::vector<color_t> exp_classes, touched_classes;

    std::size_t e = 0;
    for (color_t i = 0; i < r; ++i) {
        for (int w = 0; w < n; ++w) tails_by_head[w].clear();
        for (auto [u, w] : col.classes[i].arcs) tails_by_head[w].push_back(u);
        for (color_t j = 0; j < r; ++j) {
            dirty.clear();
            for (auto [w, v] : col.classes[j].arcs)
                for (int u : tails_by_head[w]) {
                    std::size_t pos = static_cast<std::size_t>(u) * n + v;
                    if (!prod[pos]) dirty.push_back(pos);
                    ++prod[pos];
                }
            exp_classes.clear();
            while (e < c.entries.size() && c.entries[e].i == i && c.entries[e].j == j) {
                expected[c.entries[e].k] = c.entries[e].p;
                exp_classes.push_back(c.entries[e].k);
                ++e;
            }
            touched_classes.clear();
            bool bad = false;
            std::ostringstream msg;
            for (std::size_t pos : dirty) {
                color_t k = stable.colors[pos];
                if (!covered[k]) touched_classes.push_back(k);
                ++covered[k];
                if (prod[pos] != expected[k]) {
                    msg << "(" << i << "," << j << "): arc (" << pos / n << "," << pos % n
                        << ") of class " << k << " has product count " << prod[pos]
                        << ", constants say " << expected[k];
                    bad = true;
                    break;
                }
            }
            if (!bad)
                for (color_t k : exp_classes)
                    if (covered[k] != col.classes[k].arcs.size()) {
                        msg << "(" << i << "," << j << "): only " << covered[k] << " of "
                            << col.classes[k].arcs.size() << " arcs of class " << k
                            << " carry a nonzero product count";
                        bad = true;
                        break;
                    }
            for (std::size_t pos : dirty) prod[pos] = 0;
            for (color_t k : exp_classes) expected[k] = 0;
            for (color_t k : touched_classes) covered[k] = 0;
            if (bad) {
                mismatch(msg.str());
                return res;
            }
        }
    }
    if (e != c.entries.size()) {
        mismatch("constants contain entries no product realizes");
        return res;
    }
    res.status = ConstantsCheck::Status::ok;
    res.detail = "verified by explicit multiplication";
    return res;
}

}  // namespace wl
