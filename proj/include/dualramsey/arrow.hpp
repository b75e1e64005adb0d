#pragma once

// The arrow relation C -> (B)^A_k in a morphism class and in its opposite, decided
// by searching for a counterexample coloring.
//
// Both modes reduce to the same hypergraph question. The colored points are the
// morphisms of one hom-set; every candidate w contributes the set of composites it
// produces. The arrow holds iff every k-coloring of the points leaves at least one
// composite set monochromatic, i.e. iff the hypergraph has no coloring in which
// every edge sees two colors.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dualramsey/chain.hpp"
#include "dualramsey/error.hpp"
#include "dualramsey/hom_enum.hpp"
#include "dualramsey/srq.hpp"

namespace dualramsey {

struct ArrowGuards {
    std::size_t max_homset = 24; // colored points
    std::size_t max_colors = 4;
    EnumGuard enumeration{};
};

/// Points 0..points-1 and the deduplicated composite sets. `owner[e]` is the
/// index (in the hom-set of candidates w) of the first w producing edge e.
struct CompositeHypergraph {
    std::size_t points = 0;
    std::vector<std::vector<std::size_t>> edges;
    std::vector<std::size_t> owner;

    void add(std::vector<std::size_t> edge, std::size_t w)
    {
        std::sort(edge.begin(), edge.end());
        edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
        if (std::find(edges.begin(), edges.end(), edge) != edges.end())
            return;
        edges.push_back(std::move(edge));
        owner.push_back(w);
    }
};

/// The color of the edge if all its points share it.
inline std::optional<std::size_t> monochromatic_color(std::span<const std::size_t> edge,
                                                      std::span<const std::size_t> colors)
{
    if (edge.empty())
        return std::nullopt;
    const auto c = colors[edge.front()];
    for (auto p : edge)
        if (colors[p] != c)
            return std::nullopt;
    return c;
}

/// First (edge, color) left monochromatic by a coloring, if any.
inline std::optional<std::pair<std::size_t, std::size_t>>
find_monochromatic_edge(const CompositeHypergraph& h, std::span<const std::size_t> colors)
{
    for (std::size_t e = 0; e < h.edges.size(); ++e)
        if (auto c = monochromatic_color(h.edges[e], colors))
            return std::pair{e, *c};
    return std::nullopt;
}

/// Searches for a k-coloring (colors 0..k-1) under which no edge is monochromatic.
/// Backtracking over points in index order with forward checking on edges that
/// have a single uncolored point, and with colors introduced in order. The first
/// coloring found is the lexicographically least one.
class CounterexampleSearch {
public:
    CounterexampleSearch(const CompositeHypergraph& h, std::size_t k)
        : h_(h), k_(k), incident_(h.points), domain_(h.points, all_colors(k)), assigned_(h.edges.size(), 0),
          color_count_(h.edges.size() * k, 0), colors_(h.points, 0)
    {
        for (std::size_t e = 0; e < h.edges.size(); ++e)
            for (auto p : h.edges[e])
                incident_.at(p).push_back(e);
    }

    std::optional<std::vector<std::size_t>> run()
    {
        if (search(0, 0))
            return colors_;
        return std::nullopt;
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    static std::uint64_t all_colors(std::size_t k)
    {
        if (k == 0 || k > 63)
            throw PreconditionError("number of colors must be between 1 and 63");
        return (std::uint64_t{1} << k) - 1;
    }

    bool search(std::size_t p, std::size_t used)
    {
        ++nodes_;
        if (p == h_.points)
            return true;
        const std::size_t limit = std::min(used + 1, k_);
        for (std::size_t c = 0; c < limit; ++c) {
            if (!(domain_[p] >> c & 1))
                continue;
            const auto mark = trail_.size();
            colors_[p] = c;
            if (assign(p, c) && search(p + 1, std::max(used, c + 1)))
                return true;
            unassign(p, c);
            while (trail_.size() > mark) {
                domain_[trail_.back().first] = trail_.back().second;
                trail_.pop_back();
            }
        }
        return false;
    }

    // Updates edge counters; always completes the update so unassign stays symmetric.
    bool assign(std::size_t p, std::size_t c)
    {
        bool ok = true;
        for (auto e : incident_[p]) {
            const auto size = h_.edges[e].size();
            const auto n = ++assigned_[e];
            const auto same = ++color_count_[e * k_ + c];
            if (!ok || same != n)
                continue;
            if (n == size) {
                ok = false;
            } else if (n + 1 == size) {
                for (auto q : h_.edges[e]) {
                    if (q > p) { // points are colored in index order, so q is the free one
                        trail_.emplace_back(q, domain_[q]);
                        domain_[q] &= ~(std::uint64_t{1} << c);
                        if (domain_[q] == 0)
                            ok = false;
                        break;
                    }
                }
            }
        }
        return ok;
    }

    void unassign(std::size_t p, std::size_t c)
    {
        for (auto e : incident_[p]) {
            --assigned_[e];
            --color_count_[e * k_ + c];
        }
    }

    const CompositeHypergraph& h_;
    std::size_t k_;
    std::vector<std::vector<std::size_t>> incident_;
    std::vector<std::uint64_t> domain_;
    std::vector<std::size_t> assigned_;
    std::vector<std::size_t> color_count_;
    std::vector<std::size_t> colors_;
    std::vector<std::pair<std::size_t, std::uint64_t>> trail_;
    std::uint64_t nodes_ = 0;
};

inline std::optional<std::vector<std::size_t>> find_bad_coloring(const CompositeHypergraph& h, std::size_t k)
{
    return CounterexampleSearch(h, k).run();
}

// ---------------------------------------------------------------------------
// Verdicts

/// A k-coloring of a hom-set; colors are 1..k, indexed like the hom-set.
struct Coloring {
    std::size_t k = 0;
    std::vector<std::size_t> colors;

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

struct ArrowVerdict {
    bool holds = false;
    /// The colored hom-set in canonical order.
    std::vector<VertexMorphism> points;
    /// The composite sets, over indices of `points`.
    CompositeHypergraph composites;
    /// Present iff the arrow fails; verified before it is returned.
    std::optional<Coloring> counterexample;
    /// When the arrow holds and some w works for every coloring at once (its
    /// composite set is a singleton, or k = 1), that w.
    std::optional<VertexMorphism> universal_witness;

    explicit operator bool() const noexcept { return holds; }
};

namespace detail {

inline std::vector<std::size_t> images_key(std::span<const std::size_t> images)
{
    return {images.begin(), images.end()};
}

inline ArrowVerdict decide(std::vector<VertexMorphism> points, CompositeHypergraph h,
                           const std::vector<VertexMorphism>& candidates, std::size_t k)
{
    ArrowVerdict v;
    v.points = std::move(points);
    auto bad = find_bad_coloring(h, k);
    if (bad) {
        if (find_monochromatic_edge(h, *bad))
            throw InvariantViolation("counterexample coloring leaves a composite set monochromatic");
        Coloring col{k, {}};
        for (auto c : *bad)
            col.colors.push_back(c + 1);
        v.counterexample = std::move(col);
    } else {
        v.holds = true;
        for (std::size_t e = 0; e < h.edges.size(); ++e) {
            if (h.edges[e].size() == 1 || k == 1) {
                v.universal_witness = candidates[h.owner[e]];
                break;
            }
        }
    }
    v.composites = std::move(h);
    return v;
}

inline void check_arrow_guards(std::size_t points, std::size_t k, const ArrowGuards& guards)
{
    if (k == 0)
        throw PreconditionError("at least one color is required");
    if (k > guards.max_colors)
        throw GuardExceeded(std::to_string(k) + " colors exceed the guard of " + std::to_string(guards.max_colors));
    if (points > guards.max_homset)
        throw GuardExceeded("colored hom-set has " + std::to_string(points) + " morphisms, guard is " +
                            std::to_string(guards.max_homset));
}

inline std::map<std::vector<std::size_t>, std::size_t> index_by_images(const std::vector<VertexMorphism>& ms)
{
    std::map<std::vector<std::size_t>, std::size_t> out;
    for (std::size_t i = 0; i < ms.size(); ++i)
        out.emplace(images_key(ms[i].images()), i);
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Categories for the arrow relation

/// A morphism class read as a category: hom(a, b) and composition `after . before`.
template <MorphismCategory Cat>
struct Forward {
    using Object = typename Cat::Object;
    static std::vector<VertexMorphism> hom(const Object& a, const Object& b, const EnumGuard& g)
    {
        return enumerate_homset<Cat>(a, b, g).morphisms;
    }
    static VertexMorphism compose(const VertexMorphism& after, const VertexMorphism& before)
    {
        return compose_maps(after, before);
    }
};

/// The opposite category: hom_op(a, b) = hom(b, a), after .op before = before . after.
template <MorphismCategory Cat>
struct Opposite {
    using Object = typename Cat::Object;
    static std::vector<VertexMorphism> hom(const Object& a, const Object& b, const EnumGuard& g)
    {
        return enumerate_homset<Cat>(b, a, g).morphisms;
    }
    static VertexMorphism compose(const VertexMorphism& after, const VertexMorphism& before)
    {
        return compose_maps(before, after);
    }
};

/// c -> (b)^a_k in an arbitrary category: every k-coloring of hom(a, c) admits
/// w in hom(b, c) with w . hom(a, b) monochromatic.
template <class Category>
ArrowVerdict check_arrow_in(const typename Category::Object& c, const typename Category::Object& b,
                            const typename Category::Object& a, std::size_t k, const ArrowGuards& guards = {})
{
    const auto ab = Category::hom(a, b, guards.enumeration);
    if (ab.empty())
        throw PreconditionError("hom(a, b) is empty");
    auto points = Category::hom(a, c, guards.enumeration);
    detail::check_arrow_guards(points.size(), k, guards);
    const auto bc = Category::hom(b, c, guards.enumeration);
    const auto index = detail::index_by_images(points);

    CompositeHypergraph h;
    h.points = points.size();
    for (std::size_t w = 0; w < bc.size(); ++w) {
        std::vector<std::size_t> edge;
        for (const auto& g : ab) {
            auto it = index.find(detail::images_key(Category::compose(bc[w], g).images()));
            if (it == index.end())
                throw InvariantViolation("composite is missing from the colored hom-set");
            edge.push_back(it->second);
        }
        h.add(std::move(edge), w);
    }
    return detail::decide(std::move(points), std::move(h), bc, k);
}

/// The arrow relation in the class itself.
template <MorphismCategory Cat>
ArrowVerdict check_arrow_direct(const typename Cat::Object& c, const typename Cat::Object& b,
                                const typename Cat::Object& a, std::size_t k, const ArrowGuards& guards = {})
{
    return check_arrow_in<Forward<Cat>>(c, b, a, k, guards);
}

/// The arrow relation in the opposite class: every k-coloring of hom(c, a) admits
/// w in hom(c, b) with hom(b, a) . w monochromatic. Built directly from the
/// quotient-side hom-sets rather than through `Opposite`.
template <MorphismCategory Cat>
ArrowVerdict check_arrow_dual(const typename Cat::Object& c, const typename Cat::Object& b,
                              const typename Cat::Object& a, std::size_t k, const ArrowGuards& guards = {})
{
    const auto ba = enumerate_homset<Cat>(b, a, guards.enumeration).morphisms;
    if (ba.empty())
        throw PreconditionError("hom(b, a) is empty");
    auto points = enumerate_homset<Cat>(c, a, guards.enumeration).morphisms;
    detail::check_arrow_guards(points.size(), k, guards);
    const auto cb = enumerate_homset<Cat>(c, b, guards.enumeration).morphisms;

    // Composites g . w on positions: images[i] = g(w(i)).
    const auto index = detail::index_by_images(points);
    CompositeHypergraph h;
    h.points = points.size();
    std::vector<std::size_t> images(Cat::chain_of(c).size());
    for (std::size_t w = 0; w < cb.size(); ++w) {
        std::vector<std::size_t> edge;
        for (const auto& g : ba) {
            for (std::size_t i = 0; i < images.size(); ++i)
                images[i] = g(cb[w](i));
            auto it = index.find(detail::images_key(images));
            if (it == index.end())
                throw InvariantViolation("composite is missing from the colored hom-set");
            edge.push_back(it->second);
        }
        h.add(std::move(edge), w);
    }
    return detail::decide(std::move(points), std::move(h), cb, k);
}

// ---------------------------------------------------------------------------
// Smallest dual witness

template <class Object>
struct DualWitnessReport {
    std::optional<Object> witness;
    std::size_t size = 0;                  // size of the witness, when found
    std::size_t largest_size_examined = 0; // all candidates up to this size were decided
    bool guard_exceeded = false;
    std::string note;
};

/// Tries candidates c = gen(1), gen(2), ..., gen(bound) in order (each call returns
/// the candidates of that size in canonical order) and returns the first c with
/// c -> (b)^a_k in the opposite class. A guard hit ends the search with a
/// partial report.
template <MorphismCategory Cat, class Generator>
DualWitnessReport<typename Cat::Object> find_minimal_dual_witness(const typename Cat::Object& b,
                                                                  const typename Cat::Object& a, std::size_t k,
                                                                  Generator&& gen, std::size_t bound,
                                                                  const ArrowGuards& guards = {})
{
    DualWitnessReport<typename Cat::Object> report;
    for (std::size_t size = 1; size <= bound; ++size) {
        for (const auto& c : gen(size)) {
            try {
                if (check_arrow_dual<Cat>(c, b, a, k, guards).holds) {
                    report.witness = c;
                    report.size = size;
                    report.largest_size_examined = size;
                    return report;
                }
            } catch (const GuardExceeded& e) {
                report.guard_exceeded = true;
                report.note = e.what();
                return report;
            }
        }
        report.largest_size_examined = size;
    }
    report.note = "no witness up to size " + std::to_string(bound);
    return report;
}

/// One chain per size: 1 < ... < n.
inline std::vector<Chain> chain_candidates(std::size_t n) { return {Chain::numbered(n)}; }

} // namespace dualramsey
