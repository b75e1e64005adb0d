#pragma once

// Ordered oriented graphs, digraphs with a linear extension, the forward /
// backward split of an ordered oriented graph, homomorphism-family predicates
// and the induced map on arcs.
//
// Relations are reflexive: loops are never stored and every predicate treats
// (v, v) as present.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dualramsey/chain.hpp"
#include "dualramsey/error.hpp"

namespace dualramsey {

namespace detail {

/// Irreflexive arc storage over a chain, with O(1) membership.
class ArcTable {
public:
    ArcTable() = default;
    ArcTable(std::size_t n, std::vector<PosPair> arcs) : n_(n), adjacency_(n * n, 0)
    {
        for (auto [u, v] : arcs) {
            if (u >= n || v >= n)
                throw InvalidObject("arc endpoint outside the chain");
            if (u == v)
                throw InvalidObject("loops are implicit and must not be listed");
            adjacency_[u * n + v] = 1;
        }
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v)
                if (adjacency_[u * n + v])
                    arcs_.emplace_back(u, v);
    }

    bool stored(std::size_t u, std::size_t v) const { return adjacency_[u * n_ + v] != 0; }
    std::span<const PosPair> arcs() const noexcept { return arcs_; }

    friend bool operator==(const ArcTable&, const ArcTable&) = default;

private:
    std::size_t n_ = 0;
    std::vector<unsigned char> adjacency_;
    std::vector<PosPair> arcs_; // row-major, duplicate free
};

inline std::vector<PosPair> label_arcs_to_positions(const Chain& chain, std::span<const LabelPair> arcs)
{
    std::vector<PosPair> out;
    out.reserve(arcs.size());
    for (const auto& a : arcs) {
        auto u = chain.find(a.first);
        auto v = chain.find(a.second);
        if (!u || !v)
            throw InvalidObject("arc (" + a.first + ", " + a.second + ") uses a label outside the chain");
        out.emplace_back(*u, *v);
    }
    return out;
}

} // namespace detail

/// Chain plus a loop-free antisymmetric arc set.
class OrderedOrientedGraph {
public:
    OrderedOrientedGraph(Chain chain, std::vector<PosPair> arcs)
        : chain_(std::move(chain)), table_(chain_.size(), std::move(arcs))
    {
        for (auto [u, v] : table_.arcs()) {
            if (table_.stored(v, u))
                throw InvalidObject("oriented graph has both (" + chain_.label(u) + ", " + chain_.label(v) +
                                    ") and its reverse");
        }
    }

    static OrderedOrientedGraph from_labels(Chain chain, std::span<const LabelPair> arcs)
    {
        auto pos = detail::label_arcs_to_positions(chain, arcs);
        return OrderedOrientedGraph(std::move(chain), std::move(pos));
    }

    const Chain& chain() const noexcept { return chain_; }
    std::size_t size() const noexcept { return chain_.size(); }
    /// Non-loop arcs in row-major position order.
    std::span<const PosPair> arcs() const noexcept { return table_.arcs(); }
    /// Membership in the reflexive relation.
    bool related(std::size_t u, std::size_t v) const { return u == v || table_.stored(u, v); }

    friend bool operator==(const OrderedOrientedGraph& a, const OrderedOrientedGraph& b)
    {
        return a.chain_ == b.chain_ && a.table_ == b.table_;
    }

private:
    Chain chain_;
    detail::ArcTable table_;
};

/// Chain plus an arc set whose arcs all go forward in the chain.
class LinExtDigraph {
public:
    LinExtDigraph(Chain chain, std::vector<PosPair> arcs)
        : chain_(std::move(chain)), table_(chain_.size(), std::move(arcs))
    {
        for (auto [u, v] : table_.arcs()) {
            if (u > v)
                throw InvalidObject("arc (" + chain_.label(u) + ", " + chain_.label(v) +
                                    ") goes backward in the linear extension");
        }
    }

    static LinExtDigraph from_labels(Chain chain, std::span<const LabelPair> arcs)
    {
        auto pos = detail::label_arcs_to_positions(chain, arcs);
        return LinExtDigraph(std::move(chain), std::move(pos));
    }

    /// The arcless digraph on a chain.
    explicit LinExtDigraph(Chain chain) : LinExtDigraph(std::move(chain), {}) {}

    const Chain& chain() const noexcept { return chain_; }
    std::size_t size() const noexcept { return chain_.size(); }
    std::span<const PosPair> arcs() const noexcept { return table_.arcs(); }
    bool related(std::size_t u, std::size_t v) const { return u == v || table_.stored(u, v); }

    /// Loops followed by arcs, sorted by the special anti-lexicographic order.
    std::vector<PosPair> arcs_with_loops_sal() const
    {
        std::vector<PosPair> out;
        out.reserve(size() + arcs().size());
        for (std::size_t v = 0; v < size(); ++v)
            out.emplace_back(v, v);
        out.insert(out.end(), arcs().begin(), arcs().end());
        std::sort(out.begin(), out.end(), [](PosPair p, PosPair q) { return sal_less(p, q); });
        return out;
    }

    friend bool operator==(const LinExtDigraph& a, const LinExtDigraph& b)
    {
        return a.chain_ == b.chain_ && a.table_ == b.table_;
    }

private:
    Chain chain_;
    detail::ArcTable table_;
};

/// Anything with a chain and a reflexive `related` relation.
template <class G>
concept ReflexiveGraph = requires(const G& g, std::size_t u) {
    { g.chain() } -> std::convertible_to<const Chain&>;
    { g.related(u, u) } -> std::convertible_to<bool>;
    { g.arcs() } -> std::convertible_to<std::span<const PosPair>>;
};

/// Forward arcs of an ordered oriented graph (the relation rho_<).
inline LinExtDigraph forward_part(const OrderedOrientedGraph& g)
{
    std::vector<PosPair> arcs;
    for (auto [u, v] : g.arcs())
        if (u < v)
            arcs.emplace_back(u, v);
    return LinExtDigraph(g.chain(), std::move(arcs));
}

/// Backward arcs of an ordered oriented graph, reversed so they go forward (the relation (rho_>)^{-1}).
inline LinExtDigraph backward_part_reversed(const OrderedOrientedGraph& g)
{
    std::vector<PosPair> arcs;
    for (auto [u, v] : g.arcs())
        if (u > v)
            arcs.emplace_back(v, u);
    return LinExtDigraph(g.chain(), std::move(arcs));
}

// ---------------------------------------------------------------------------
// Homomorphism-family predicates

/// First arc of `g` (row-major) whose image is not related in `h`.
template <ReflexiveGraph G, ReflexiveGraph H>
std::optional<PosPair> first_unpreserved_arc(std::span<const std::size_t> images, const G& g, const H& h)
{
    for (auto [u, v] : g.arcs())
        if (!h.related(images[u], images[v]))
            return PosPair{u, v};
    return std::nullopt;
}

template <ReflexiveGraph G, ReflexiveGraph H>
bool is_homomorphism(const VertexMorphism& f, const G& g, const H& h)
{
    const auto images = images_between(f, g.chain(), h.chain());
    return !first_unpreserved_arc(images, g, h);
}

template <ReflexiveGraph G, ReflexiveGraph H>
bool is_embedding(const VertexMorphism& f, const G& g, const H& h)
{
    const auto images = images_between(f, g.chain(), h.chain());
    if (first_unpreserved_arc(images, g, h))
        return false;
    const std::size_t n = g.chain().size();
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (u != v && images[u] == images[v])
                return false;
            if (h.related(images[u], images[v]) && !g.related(u, v))
                return false;
        }
    }
    return true;
}

template <ReflexiveGraph G, ReflexiveGraph H>
bool is_quotient_map(const VertexMorphism& f, const G& g, const H& h)
{
    const auto images = images_between(f, g.chain(), h.chain());
    if (first_unpreserved_arc(images, g, h))
        throw PreconditionError("quotient-map test needs a homomorphism");
    const std::size_t m = h.chain().size();
    std::vector<unsigned char> covered(m * m, 0);
    for (std::size_t v = 0; v < images.size(); ++v)
        covered[images[v] * m + images[v]] = 1;
    for (auto [u, v] : g.arcs())
        covered[images[u] * m + images[v]] = 1;
    for (std::size_t w = 0; w < m; ++w)
        if (!covered[w * m + w])
            return false;
    for (auto [w1, w2] : h.arcs())
        if (!covered[w1 * m + w2])
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Induced arc map

/// The map (u, v) -> (f(u), f(v)) from the arcs-with-loops of one linear-extension
/// digraph to those of another. Domain and codomain are listed in special
/// anti-lexicographic order; `image[i]` indexes into `codomain`.
struct InducedArcMap {
    bool accepted = false;
    Chain domain_chain;
    Chain codomain_chain;
    std::vector<PosPair> domain;
    std::vector<PosPair> codomain;
    std::vector<std::size_t> image;
    /// When rejected: the first domain arc (in sal order) and its image outside the codomain.
    std::optional<std::pair<PosPair, PosPair>> witness;

    std::optional<std::size_t> codomain_index(PosPair arc) const
    {
        auto it = std::find(codomain.begin(), codomain.end(), arc);
        if (it == codomain.end())
            return std::nullopt;
        return static_cast<std::size_t>(it - codomain.begin());
    }

    /// The table as label pairs, domain order.
    std::vector<std::pair<LabelPair, LabelPair>> labeled() const
    {
        std::vector<std::pair<LabelPair, LabelPair>> out;
        for (std::size_t i = 0; i < image.size(); ++i) {
            const auto [u, v] = domain[i];
            const auto [x, y] = codomain[image[i]];
            out.push_back({{domain_chain.label(u), domain_chain.label(v)},
                           {codomain_chain.label(x), codomain_chain.label(y)}});
        }
        return out;
    }
};

/// Works directly on image positions (source positions of `p` to positions of `q`).
inline InducedArcMap induced_arc_map(std::span<const std::size_t> images, const LinExtDigraph& p,
                                     const LinExtDigraph& q)
{
    InducedArcMap out{false, p.chain(), q.chain(), p.arcs_with_loops_sal(), q.arcs_with_loops_sal(), {}, {}};
    const std::size_t m = q.size();
    std::vector<std::size_t> index(m * m, static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < out.codomain.size(); ++i)
        index[out.codomain[i].first * m + out.codomain[i].second] = i;
    out.image.reserve(out.domain.size());
    for (auto [u, v] : out.domain) {
        const PosPair img{images[u], images[v]};
        const auto at = index[img.first * m + img.second];
        if (at == static_cast<std::size_t>(-1)) {
            out.image.clear();
            out.witness = std::pair{PosPair{u, v}, img};
            return out;
        }
        out.image.push_back(at);
    }
    out.accepted = true;
    return out;
}

inline InducedArcMap induced_arc_map(const VertexMorphism& f, const LinExtDigraph& p, const LinExtDigraph& q)
{
    return induced_arc_map(images_between(f, p.chain(), q.chain()), p, q);
}

} // namespace dualramsey
