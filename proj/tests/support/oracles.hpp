#pragma once

// Brute-force oracles for the test suites. Nothing here reuses the library's
// search or enumeration code paths.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "dualramsey/dualramsey.hpp"

namespace oracle {

using dualramsey::PosPair;

/// Every total map {0..n-1} -> {0..m-1}, lexicographic in the image tuple.
template <class Visitor>
void for_each_total_map(std::size_t n, std::size_t m, Visitor&& visit)
{
    std::vector<std::size_t> images(n, 0);
    while (true) {
        visit(std::span<const std::size_t>(images));
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (++images[i] < m)
                break;
            images[i] = 0;
            if (i == 0)
                return;
        }
        if (n == 0)
            return;
    }
}

/// Generate-and-filter hom-set: all total maps that pass the class predicate.
template <dualramsey::MorphismCategory Cat>
std::vector<std::vector<std::size_t>> naive_homset(const typename Cat::Object& a, const typename Cat::Object& b)
{
    std::vector<std::vector<std::size_t>> out;
    for_each_total_map(Cat::chain_of(a).size(), Cat::chain_of(b).size(), [&](std::span<const std::size_t> m) {
        if (Cat::member(m, a, b))
            out.emplace_back(m.begin(), m.end());
    });
    return out;
}

/// Anti-lexicographic comparison of characteristic vectors: the last coordinate
/// is the most significant, 0 < 1.
inline bool alex_by_characteristic_vector(std::span<const std::size_t> x, std::span<const std::size_t> y,
                                          std::size_t n)
{
    std::vector<int> vx(n, 0), vy(n, 0);
    for (auto i : x)
        vx[i] = 1;
    for (auto i : y)
        vy[i] = 1;
    for (std::size_t i = n; i-- > 0;) {
        if (vx[i] != vy[i])
            return vx[i] < vy[i];
    }
    return false;
}

/// Rigid surjection straight from the min-preimage definition.
inline bool rigid_by_definition(std::span<const std::size_t> images, std::size_t m)
{
    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = 0; y < m; ++y) {
            if (x >= y)
                continue;
            std::optional<std::size_t> mx, my;
            for (std::size_t i = 0; i < images.size(); ++i) {
                if (images[i] == x && !mx)
                    mx = i;
                if (images[i] == y && !my)
                    my = i;
            }
            if (!mx || !my || *mx >= *my)
                return false;
        }
    }
    return true;
}

/// Lexicographically least k-coloring (point 0 most significant) with no
/// monochromatic edge, by enumerating all k^N colorings.
inline std::optional<std::vector<std::size_t>> naive_bad_coloring(const dualramsey::CompositeHypergraph& h,
                                                                  std::size_t k)
{
    const std::size_t n = h.points;
    std::vector<std::size_t> colors(n, 0);
    auto bad = [&] {
        for (const auto& e : h.edges) {
            bool mono = true;
            for (auto p : e)
                mono = mono && colors[p] == colors[e.front()];
            if (mono)
                return false;
        }
        return true;
    };
    while (true) {
        if (bad())
            return colors;
        std::size_t i = n;
        while (true) {
            if (i == 0)
                return std::nullopt;
            --i;
            if (++colors[i] < k)
                break;
            colors[i] = 0;
        }
    }
}

/// Two-color enumeration over bitmasks, for up to 63 points. Same contract as
/// `naive_bad_coloring` with k = 2.
inline std::optional<std::vector<std::size_t>> naive_bad_two_coloring(const dualramsey::CompositeHypergraph& h)
{
    const std::size_t n = h.points;
    if (n > 63)
        throw std::invalid_argument("bitmask oracle handles at most 63 points");
    std::vector<std::uint64_t> masks;
    for (const auto& e : h.edges) {
        std::uint64_t m = 0;
        for (auto p : e)
            m |= std::uint64_t{1} << (n - 1 - p);
        masks.push_back(m);
    }
    // The complement of a proper coloring is proper, and one of the two starts
    // with color 0, so the least one lies in the lower half.
    const std::uint64_t end = n == 0 ? 1 : std::uint64_t{1} << (n - 1);
    for (std::uint64_t x = 0; x < end; ++x) {
        bool ok = true;
        for (auto m : masks) {
            const auto hit = x & m;
            if (hit == 0 || hit == m) {
                ok = false;
                break;
            }
        }
        if (ok) {
            std::vector<std::size_t> colors(n);
            for (std::size_t p = 0; p < n; ++p)
                colors[p] = x >> (n - 1 - p) & 1;
            return colors;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Set partitions, generated by inserting elements one at a time

using Blocks = std::vector<std::vector<std::size_t>>;

inline void set_partitions(std::size_t n, std::size_t i, Blocks& cur, std::vector<Blocks>& out)
{
    if (i == n) {
        out.push_back(cur);
        return;
    }
    for (std::size_t b = 0; b < cur.size(); ++b) {
        cur[b].push_back(i);
        set_partitions(n, i + 1, cur, out);
        cur[b].pop_back();
    }
    cur.push_back({i});
    set_partitions(n, i + 1, cur, out);
    cur.pop_back();
}

inline std::vector<Blocks> set_partitions(std::size_t n, std::size_t blocks)
{
    std::vector<Blocks> all, out;
    Blocks cur;
    set_partitions(n, 0, cur, all);
    for (auto& p : all)
        if (p.size() == blocks)
            out.push_back(std::move(p));
    return out;
}

/// Every block of `fine` is contained in some block of `coarse`.
inline bool coarser(const Blocks& coarse, const Blocks& fine)
{
    return std::all_of(fine.begin(), fine.end(), [&](const auto& fb) {
        return std::any_of(coarse.begin(), coarse.end(), [&](const auto& cb) {
            return std::all_of(fb.begin(), fb.end(),
                               [&](auto x) { return std::find(cb.begin(), cb.end(), x) != cb.end(); });
        });
    });
}

/// The finite dual Ramsey instance straight on partitions of an n-set.
inline dualramsey::CompositeHypergraph partition_lattice_hypergraph(std::size_t a, std::size_t m, std::size_t n)
{
    const auto points = set_partitions(n, a);
    const auto betas = set_partitions(n, m);
    dualramsey::CompositeHypergraph h;
    h.points = points.size();
    for (std::size_t b = 0; b < betas.size(); ++b) {
        std::vector<std::size_t> edge;
        for (std::size_t p = 0; p < points.size(); ++p)
            if (coarser(points[p], betas[b]))
                edge.push_back(p);
        h.add(std::move(edge), b);
    }
    return h;
}

/// A singleton edge is monochromatic under every coloring, which settles large
/// instances without enumeration.
inline bool arrow_holds_naively(const dualramsey::CompositeHypergraph& h, std::size_t k)
{
    if (k == 1 && !h.edges.empty())
        return true;
    for (const auto& e : h.edges)
        if (e.size() == 1)
            return true;
    if (k == 2)
        return !naive_bad_two_coloring(h);
    return !naive_bad_coloring(h, k);
}

/// Composite sets built from generate-and-filter hom-sets. Dual: points hom(c, a),
/// one edge {g . w : g in hom(b, a)} per w in hom(c, b). Direct: points hom(a, c),
/// one edge {w . g : g in hom(a, b)} per w in hom(b, c).
template <dualramsey::MorphismCategory Cat>
dualramsey::CompositeHypergraph naive_composites(const typename Cat::Object& c, const typename Cat::Object& b,
                                                 const typename Cat::Object& a, bool dual)
{
    const auto points = dual ? naive_homset<Cat>(c, a) : naive_homset<Cat>(a, c);
    const auto inner = dual ? naive_homset<Cat>(b, a) : naive_homset<Cat>(a, b);
    const auto outer = dual ? naive_homset<Cat>(c, b) : naive_homset<Cat>(b, c);
    dualramsey::CompositeHypergraph h;
    h.points = points.size();
    for (std::size_t w = 0; w < outer.size(); ++w) {
        std::vector<std::size_t> edge;
        for (const auto& g : inner) {
            const auto& first = dual ? outer[w] : g;
            const auto& second = dual ? g : outer[w];
            std::vector<std::size_t> comp(first.size());
            for (std::size_t i = 0; i < first.size(); ++i)
                comp[i] = second[first[i]];
            const auto at = std::find(points.begin(), points.end(), comp);
            if (at == points.end())
                throw std::logic_error("composite outside the colored hom-set");
            edge.push_back(static_cast<std::size_t>(at - points.begin()));
        }
        h.add(std::move(edge), w);
    }
    return h;
}

} // namespace oracle
