#include "wl/stabcol.hpp"

#include <algorithm>
#include <cstdint>

#include "wl/stabil.hpp"

namespace wl {

namespace {

// One examined triangle: its basis arc and the colors (i, j) of the nonbasis
// arcs. After pair ranking, i is reused to hold the dense rank.
struct Rec {
    int arc;
    color_t i, j;
};

template <class Key>
void counting_sort(std::vector<Rec>& recs, std::vector<Rec>& tmp, std::size_t buckets, Key key) {
    std::vector<std::uint32_t> cnt(buckets + 1, 0);
    for (const Rec& r : recs) ++cnt[key(r) + 1];
    for (std::size_t b = 1; b <= buckets; ++b) cnt[b] += cnt[b - 1];
    tmp.resize(recs.size());
    for (const Rec& r : recs) tmp[cnt[key(r)]++] = r;
    recs.swap(tmp);
}

// A touched arc's pair-rank sequence (sorted ascending), or an empty sequence
// for an untouched arc of a split-candidate class.
struct SeqRef {
    int arc;
    color_t klass;
    std::uint32_t off, len;
};

// Ascending lexicographic sort of the variable-length strings
// [klass, rank_0, rank_1, ...], shorter prefixes first. Position-wise bucket
// passes from the last position to the first; only buckets that are nonempty
// at a position are visited, so the cost is linear in total string length
// plus the alphabet.
std::vector<std::uint32_t> lex_sort(const std::vector<SeqRef>& seqs,
                                    const std::vector<std::uint32_t>& ranks,
                                    std::uint32_t alphabet) {
    const std::uint32_t count = static_cast<std::uint32_t>(seqs.size());
    if (count == 0) return {};
    std::uint32_t L = 0;
    std::size_t total = 0;
    for (const auto& s : seqs) {
        L = std::max(L, s.len + 1);
        total += s.len + 1;
    }
    auto symbol = [&](std::uint32_t idx, std::uint32_t p) -> std::uint32_t {
        return p == 0 ? seqs[idx].klass : ranks[seqs[idx].off + p - 1];
    };

    // sorted distinct symbols occurring at each position
    std::vector<std::pair<std::uint32_t, std::uint32_t>> sym_pos;
    sym_pos.reserve(total);
    for (std::uint32_t idx = 0; idx < count; ++idx)
        for (std::uint32_t p = 0; p <= seqs[idx].len; ++p)
            sym_pos.emplace_back(symbol(idx, p), p);
    {
        std::vector<std::uint32_t> cnt(alphabet + 1, 0);
        for (const auto& sp : sym_pos) ++cnt[sp.first + 1];
        for (std::uint32_t b = 1; b <= alphabet; ++b) cnt[b] += cnt[b - 1];
        std::vector<std::pair<std::uint32_t, std::uint32_t>> sorted(sym_pos.size());
        for (const auto& sp : sym_pos) sorted[cnt[sp.first]++] = sp;
        sym_pos.swap(sorted);
    }
    std::vector<std::vector<std::uint32_t>> possyms(L);
    for (const auto& [s, p] : sym_pos)
        if (possyms[p].empty() || possyms[p].back() != s) possyms[p].push_back(s);
    sym_pos.clear();
    sym_pos.shrink_to_fit();

    std::vector<std::vector<std::uint32_t>> bylen(L + 1);
    for (std::uint32_t idx = 0; idx < count; ++idx) bylen[seqs[idx].len + 1].push_back(idx);

    // bucket chains indexed by symbol, reset only where used
    std::vector<std::int64_t> head(alphabet, -1), tail(alphabet, -1);
    std::vector<std::int64_t> next(count, -1);
    std::vector<std::uint32_t> queue, nq;
    queue.reserve(count);
    nq.reserve(count);
    for (std::uint32_t p = L; p-- > 0;) {
        nq.clear();
        nq.insert(nq.end(), bylen[p + 1].begin(), bylen[p + 1].end());
        nq.insert(nq.end(), queue.begin(), queue.end());
        for (std::uint32_t idx : nq) {
            std::uint32_t s = symbol(idx, p);
            next[idx] = -1;
            if (head[s] < 0) head[s] = idx;
            else next[tail[s]] = idx;
            tail[s] = idx;
        }
        queue.clear();
        for (std::uint32_t s : possyms[p]) {
            for (std::int64_t idx = head[s]; idx >= 0; idx = next[idx])
                queue.push_back(static_cast<std::uint32_t>(idx));
            head[s] = tail[s] = -1;
        }
    }
    return queue;
}

}  // namespace

WorkSet initial_workset(const ColorMatrix& m) {
    WorkSet w;
    w.new_colors.resize(m.r);
    for (color_t c = 0; c < m.r; ++c) w.new_colors[c] = c;
    w.touched_arcs.reserve(m.colors.size());
    for (int u = 0; u < m.n; ++u)
        for (int v = 0; v < m.n; ++v) w.touched_arcs.emplace_back(u, v);
    return w;
}

std::pair<ColorMatrix, WorkSet> stabcol_round(const ColorMatrix& m, const WorkSet& w,
                                              unsigned long long* triangle_counter) {
    if (w.new_colors.empty()) return {m, WorkSet{}};
    const int n = m.n;
    const std::size_t nn = m.colors.size();
    std::vector<char> is_new(m.r, 0);
    for (color_t c : w.new_colors) is_new[c] = 1;
    Coloring col = Coloring::from(m);

    // T_M, each triangle once: a new-color arc (x,y) emits its triangles as
    // first nonbasis arc always, as second nonbasis arc only when the first
    // nonbasis arc is not new (that case is emitted by the other arc).
    std::vector<Rec> recs;
    {
        std::size_t estimate = 0;
        for (color_t c : w.new_colors) estimate += col.classes[c].arcs.size() * 2 * n;
        recs.reserve(estimate);
    }
    for (color_t c : w.new_colors)
        for (auto [x, y] : col.classes[c].arcs) {
            for (int v = 0; v < n; ++v) recs.push_back({x * n + v, c, m.at(y, v)});
            for (int u = 0; u < n; ++u) {
                color_t ci = m.at(u, x);
                if (!is_new[ci]) recs.push_back({u * n + y, ci, c});
            }
        }
    if (triangle_counter) *triangle_counter += recs.size();

    // two stable counting passes by (j, i), dense pair ranks, then by arc
    std::vector<Rec> tmp;
    counting_sort(recs, tmp, m.r, [](const Rec& r) { return r.j; });
    counting_sort(recs, tmp, m.r, [](const Rec& r) { return r.i; });
    std::uint32_t nranks = 0;
    {
        color_t pi = 0, pj = 0;
        for (std::size_t t = 0; t < recs.size(); ++t) {
            if (t == 0 || recs[t].i != pi || recs[t].j != pj) ++nranks;
            pi = recs[t].i;
            pj = recs[t].j;
            recs[t].i = nranks - 1;
        }
    }
    counting_sort(recs, tmp, nn, [](const Rec& r) { return r.arc; });
    tmp.clear();
    tmp.shrink_to_fit();

    // per-arc rank sequences; untouched arcs of affected classes join with
    // the empty sequence (the R_{k0} group)
    std::vector<std::uint32_t> ranks;
    ranks.reserve(recs.size());
    std::vector<SeqRef> seqs;
    std::vector<char> touched(nn, 0);
    std::vector<std::uint32_t> class_touched(m.r, 0);
    for (std::size_t t = 0; t < recs.size();) {
        std::size_t t2 = t;
        while (t2 < recs.size() && recs[t2].arc == recs[t].arc) ++t2;
        const int arc = recs[t].arc;
        const color_t k = m.colors[arc];
        seqs.push_back({arc, k, static_cast<std::uint32_t>(ranks.size()),
                        static_cast<std::uint32_t>(t2 - t)});
        for (std::size_t q = t; q < t2; ++q) ranks.push_back(recs[q].i);
        touched[arc] = 1;
        ++class_touched[k];
        t = t2;
    }
    recs.clear();
    recs.shrink_to_fit();
    for (color_t k = 0; k < m.r; ++k) {
        if (!class_touched[k]) continue;
        for (auto [u, v] : col.classes[k].arcs) {
            int arc = u * n + v;
            if (!touched[arc]) seqs.push_back({arc, k, 0, 0});
        }
    }

    std::vector<std::uint32_t> order =
        lex_sort(seqs, ranks, std::max<std::uint32_t>(m.r, std::max<std::uint32_t>(nranks, 1)));

    // split classes: largest group keeps the old id (tie: the lex-smallest,
    // scanned first), the rest get fresh ids in sorted order
    ColorMatrix out = m;
    color_t next = m.r;
    std::vector<std::pair<int, int>> fresh_arcs;
    std::vector<color_t> fresh_ids;
    auto seq_equal = [&](const SeqRef& a, const SeqRef& b) {
        return a.klass == b.klass && a.len == b.len &&
               std::equal(ranks.begin() + a.off, ranks.begin() + a.off + a.len,
                          ranks.begin() + b.off);
    };
    std::size_t ci = 0;
    while (ci < order.size()) {
        std::size_t ce = ci;
        const color_t k = seqs[order[ci]].klass;
        while (ce < order.size() && seqs[order[ce]].klass == k) ++ce;
        std::vector<std::pair<std::size_t, std::size_t>> grp;
        for (std::size_t g = ci; g < ce;) {
            std::size_t g2 = g + 1;
            while (g2 < ce && seq_equal(seqs[order[g2]], seqs[order[g]])) ++g2;
            grp.emplace_back(g, g2);
            g = g2;
        }
        if (grp.size() > 1) {
            std::size_t keeper = 0;
            for (std::size_t gi = 1; gi < grp.size(); ++gi)
                if (grp[gi].second - grp[gi].first > grp[keeper].second - grp[keeper].first)
                    keeper = gi;
            for (std::size_t gi = 0; gi < grp.size(); ++gi) {
                if (gi == keeper) continue;
                color_t id = next++;
                fresh_ids.push_back(id);
                for (std::size_t t = grp[gi].first; t < grp[gi].second; ++t) {
                    int arc = seqs[order[t]].arc;
                    out.colors[arc] = id;
                    fresh_arcs.emplace_back(arc / n, arc % n);
                }
            }
        }
        ci = ce;
    }
    out.r = next;

    WorkSet nw;
    nw.new_colors = std::move(fresh_ids);
    if (!nw.new_colors.empty()) {
        std::vector<char> mark(nn, 0);
        for (auto [x, y] : fresh_arcs) {
            for (int v = 0; v < n; ++v) mark[static_cast<std::size_t>(x) * n + v] = 1;
            for (int u = 0; u < n; ++u) mark[static_cast<std::size_t>(u) * n + y] = 1;
        }
        for (std::size_t p = 0; p < nn; ++p)
            if (mark[p])
                nw.touched_arcs.emplace_back(static_cast<int>(p / n), static_cast<int>(p % n));
    }
    return {std::move(out), std::move(nw)};
}

StableResult stabcol_closure(const ColorMatrix& m, bool with_constants, StabcolStats* stats) {
    StableResult res;
    res.stable = m;
    WorkSet w = initial_workset(m);
    unsigned long long tri = 0;
    int rounds = 0;
    for (;;) {
        auto [refined, nw] = stabcol_round(res.stable, w, &tri);
        ++rounds;
        res.stable = std::move(refined);
        w = std::move(nw);
        if (w.empty()) break;
    }
    res.iterations = rounds;
    res.rank = res.stable.r;
    res.cells = static_cast<int>(cells(res.stable).size());
    if (stats) {
        stats->rounds = rounds;
        stats->triangles = tri;
    }
    if (with_constants) res.constants = read_constants(res.stable);
    return res;
}

}  // namespace wl
