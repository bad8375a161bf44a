#include "wl/degree.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>

namespace wl {

namespace {

std::vector<int> diagonal_classes(const ColorMatrix& m, int& count) {
    // dense vertex-class ids from diagonal colors, first occurrence order
    std::vector<int> id(m.r, -1);
    std::vector<int> cls(m.n);
    count = 0;
    for (int u = 0; u < m.n; ++u) {
        color_t c = m.at(u, u);
        if (id[c] < 0) id[c] = count++;
        cls[u] = id[c];
    }
    return cls;
}

}  // namespace

VertexPartition total_degree_partition(const ColorMatrix& m) {
    int count = 0;
    std::vector<int> cls = diagonal_classes(m, count);

    std::vector<std::uint64_t> packed(m.n);
    for (;;) {
        // key of u: [class(u)] ++ run-length-encoded sorted (class(w), color(u,w))
        std::vector<std::pair<std::vector<std::uint64_t>, int>> items(m.n);
        for (int u = 0; u < m.n; ++u) {
            for (int w = 0; w < m.n; ++w)
                packed[w] = (static_cast<std::uint64_t>(cls[w]) << 32) | m.at(u, w);
            std::sort(packed.begin(), packed.end());
            std::vector<std::uint64_t> key;
            key.push_back(static_cast<std::uint64_t>(cls[u]));
            for (int w = 0; w < m.n;) {
                int w2 = w;
                while (w2 < m.n && packed[w2] == packed[w]) ++w2;
                key.push_back(packed[w]);
                key.push_back(static_cast<std::uint64_t>(w2 - w));
                w = w2;
            }
            items[u] = {std::move(key), u};
        }
        std::sort(items.begin(), items.end());

        // new ids follow (old class, lexicographic key) order
        int new_count = 0;
        std::vector<int> new_cls(m.n);
        for (std::size_t idx = 0; idx < items.size(); ++idx) {
            if (idx == 0 || items[idx].first != items[idx - 1].first) ++new_count;
            new_cls[items[idx].second] = new_count - 1;
        }
        if (new_count == count) break;
        count = new_count;
        cls = std::move(new_cls);
    }

    VertexPartition part(count);
    for (int u = 0; u < m.n; ++u) part[cls[u]].push_back(u);
    return part;
}

ColorMatrix preprocess_recolor(const ColorMatrix& m) {
    // one vertex round: profile = old diagonal color + per-color (out, in) counts
    std::vector<std::uint32_t> out_cnt(m.r, 0), in_cnt(m.r, 0);
    std::vector<color_t> dirty;
    std::map<std::vector<std::uint64_t>, int> vclass_ids;
    std::vector<int> vclass(m.n);
    for (int u = 0; u < m.n; ++u) {
        dirty.clear();
        for (int v = 0; v < m.n; ++v) {
            if (v == u) continue;
            color_t co = m.at(u, v), ci = m.at(v, u);
            if (!out_cnt[co] && !in_cnt[co]) dirty.push_back(co);
            if (!out_cnt[ci] && !in_cnt[ci]) dirty.push_back(ci);
            ++out_cnt[co];
            ++in_cnt[ci];
        }
        std::sort(dirty.begin(), dirty.end());
        dirty.erase(std::unique(dirty.begin(), dirty.end()), dirty.end());
        std::vector<std::uint64_t> profile;
        profile.push_back(m.at(u, u));
        for (color_t c : dirty) {
            profile.push_back((static_cast<std::uint64_t>(c) << 32) | out_cnt[c]);
            profile.push_back(in_cnt[c]);
            out_cnt[c] = in_cnt[c] = 0;
        }
        auto [it, fresh] = vclass_ids.try_emplace(std::move(profile),
                                                  static_cast<int>(vclass_ids.size()));
        (void)fresh;
        vclass[u] = it->second;
    }

    // one arc round: split each color by the ordered endpoint classes
    ColorMatrix out;
    out.n = m.n;
    out.colors.resize(m.colors.size());
    std::map<std::array<long long, 4>, color_t> ids;
    color_t next = 0;
    for (int u = 0; u < m.n; ++u)
        for (int v = 0; v < m.n; ++v) {
            std::array<long long, 4> key;
            if (u == v)
                key = {0, vclass[u], 0, 0};
            else
                key = {1, m.at(u, v), vclass[u], vclass[v]};
            auto [it, fresh] = ids.try_emplace(key, next);
            if (fresh) ++next;
            out.at(u, v) = it->second;
        }
    out.r = next;
    return out;
}

}  // namespace wl
