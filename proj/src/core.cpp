#include "wl/core.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace wl {

namespace {
constexpr color_t kUnset = std::numeric_limits<color_t>::max();
}

ColorMatrix ColorMatrix::from_colors(int n, const std::vector<long long>& row_major) {
    if (n < 1) throw std::invalid_argument("from_colors: n must be positive");
    if (row_major.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("from_colors: need n*n entries");
    std::vector<long long> distinct(row_major);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.front() < 0) throw std::invalid_argument("from_colors: negative entry");

    ColorMatrix m;
    m.n = n;
    m.r = static_cast<color_t>(distinct.size());
    m.colors.resize(row_major.size());
    for (std::size_t p = 0; p < row_major.size(); ++p) {
        auto it = std::lower_bound(distinct.begin(), distinct.end(), row_major[p]);
        m.colors[p] = static_cast<color_t>(it - distinct.begin());
    }
    m.validate();
    return m;
}

void ColorMatrix::validate() const {
    if (n < 1) throw std::invalid_argument("ColorMatrix: n must be positive");
    if (colors.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("ColorMatrix: wrong number of entries");
    std::vector<char> on_diag(r, 0), off_diag(r, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            color_t c = at(u, v);
            if (c >= r) throw std::invalid_argument("ColorMatrix: color id out of range");
            (u == v ? on_diag[c] : off_diag[c]) = 1;
        }
    for (color_t c = 0; c < r; ++c) {
        if (!on_diag[c] && !off_diag[c])
            throw std::invalid_argument("ColorMatrix: unused color id " + std::to_string(c));
        if (on_diag[c] && off_diag[c])
            throw std::invalid_argument("ColorMatrix: color " + std::to_string(c) +
                                        " occurs both on and off the diagonal");
    }
}

Coloring Coloring::from(const ColorMatrix& m) {
    Coloring col;
    col.classes.resize(m.r);
    for (int u = 0; u < m.n; ++u)
        for (int v = 0; v < m.n; ++v) {
            ColorClass& cc = col.classes[m.at(u, v)];
            cc.arcs.emplace_back(u, v);
            if (u == v) cc.diagonal = true;
        }
    return col;
}

std::uint32_t StructureConstants::get(color_t i, color_t j, color_t k) const {
    auto key_less = [](const Entry& e, const Entry& f) {
        if (e.i != f.i) return e.i < f.i;
        if (e.j != f.j) return e.j < f.j;
        return e.k < f.k;
    };
    Entry probe{i, j, k, 0};
    auto it = std::lower_bound(entries.begin(), entries.end(), probe, key_less);
    if (it != entries.end() && it->i == i && it->j == j && it->k == k) return it->p;
    return 0;
}

ColorMatrix normalize(const std::vector<std::vector<long long>>& raw) {
    const int n = static_cast<int>(raw.size());
    if (n == 0) throw std::invalid_argument("normalize: empty matrix");
    for (const auto& row : raw)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("normalize: matrix is not square");

    ColorMatrix m;
    m.n = n;
    m.colors.resize(static_cast<std::size_t>(n) * n);
    std::map<std::pair<long long, bool>, color_t> ids;
    color_t next = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            long long val = raw[u][v];
            if (val < 0) throw std::invalid_argument("normalize: negative entry");
            auto [it, fresh] = ids.try_emplace({val, u == v}, next);
            if (fresh) ++next;
            m.at(u, v) = it->second;
        }
    m.r = next;
    return m;
}

std::vector<color_t> canonical_renumbering(const ColorMatrix& m) {
    std::vector<color_t> map(m.r, kUnset);
    color_t next = 0;
    for (int u = 0; u < m.n; ++u) {
        color_t c = m.at(u, u);
        if (map[c] == kUnset) map[c] = next++;
    }
    for (int u = 0; u < m.n; ++u)
        for (int v = 0; v < m.n; ++v) {
            color_t c = m.at(u, v);
            if (map[c] == kUnset) map[c] = next++;
        }
    return map;
}

ColorMatrix canonical_form(const ColorMatrix& m) {
    std::vector<color_t> map = canonical_renumbering(m);
    ColorMatrix out = m;
    for (auto& c : out.colors) c = map[c];
    return out;
}

bool same_partition(const ColorMatrix& a, const ColorMatrix& b) {
    if (a.n != b.n) throw std::invalid_argument("same_partition: size mismatch");
    std::vector<color_t> a2b(a.r, kUnset), b2a(b.r, kUnset);
    for (std::size_t p = 0; p < a.colors.size(); ++p) {
        color_t ca = a.colors[p], cb = b.colors[p];
        if (a2b[ca] == kUnset) a2b[ca] = cb;
        else if (a2b[ca] != cb) return false;
        if (b2a[cb] == kUnset) b2a[cb] = ca;
        else if (b2a[cb] != ca) return false;
    }
    return true;
}

bool is_automorphism(const std::vector<int>& perm, const ColorMatrix& m) {
    if (perm.size() != static_cast<std::size_t>(m.n))
        throw std::invalid_argument("is_automorphism: permutation size mismatch");
    std::vector<char> seen(m.n, 0);
    for (int x : perm) {
        if (x < 0 || x >= m.n || seen[x])
            throw std::invalid_argument("is_automorphism: not a bijection");
        seen[x] = 1;
    }
    for (int u = 0; u < m.n; ++u)
        for (int v = 0; v < m.n; ++v)
            if (m.at(u, v) != m.at(perm[u], perm[v])) return false;
    return true;
}

VertexPartition cells(const ColorMatrix& m) {
    std::vector<color_t> order(m.r, kUnset);
    color_t next = 0;
    for (int u = 0; u < m.n; ++u) {
        color_t c = m.at(u, u);
        if (order[c] == kUnset) order[c] = next++;
    }
    VertexPartition part(next);
    for (int u = 0; u < m.n; ++u) part[order[m.at(u, u)]].push_back(u);
    return part;
}

}  // namespace wl
