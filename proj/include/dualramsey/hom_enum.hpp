#pragma once

// Hom-set enumeration and counting for the four morphism classes.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dualramsey/chain.hpp"
#include "dualramsey/error.hpp"
#include "dualramsey/graph.hpp"
#include "dualramsey/srq.hpp"

namespace dualramsey {

struct EnumGuard {
    std::size_t max_vertices = 8; // graph classes
    std::size_t max_chain = 10;   // chain classes
};

/// hom_C(source, target) in canonical order: lexicographic in the image tuple.
template <MorphismCategory Cat>
struct HomSet {
    typename Cat::Object source;
    typename Cat::Object target;
    std::vector<VertexMorphism> morphisms;

    static constexpr MorphismClass morphism_class = Cat::tag;
    std::size_t size() const noexcept { return morphisms.size(); }
};

namespace detail {

template <MorphismCategory Cat>
void check_enum_guard(const typename Cat::Object& a, const typename Cat::Object& b, const EnumGuard& guard)
{
    const auto n = std::max(Cat::chain_of(a).size(), Cat::chain_of(b).size());
    const bool chains = Cat::tag == MorphismClass::ch_emb || Cat::tag == MorphismClass::ch_rs;
    const auto limit = chains ? guard.max_chain : guard.max_vertices;
    if (n > limit)
        throw GuardExceeded("object with " + std::to_string(n) + " vertices exceeds the enumeration guard of " +
                            std::to_string(limit));
}

template <class Visitor>
void for_each_increasing(std::size_t n, std::size_t m, Visitor&& visit)
{
    if (n > m)
        return;
    std::vector<std::size_t> images(n);
    auto rec = [&](auto& self, std::size_t i, std::size_t from) -> void {
        if (i == n) {
            visit(std::span<const std::size_t>(images));
            return;
        }
        for (std::size_t t = from; t + (n - i) <= m; ++t) {
            images[i] = t;
            self(self, i + 1, t + 1);
        }
    };
    rec(rec, 0, 0);
}

/// Backtracking over vertex images in chain order. A decided arc must land on a
/// loop or on an arc of the target with the same direction; anything else already
/// breaks the homomorphism or the well-definedness of f-hat on one of the legs.
/// Leaves are filtered by the full class predicate.
template <MorphismCategory Cat, class Visitor>
void for_each_graph_hom(const typename Cat::Object& a, const typename Cat::Object& b, Visitor&& visit)
{
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    std::vector<std::vector<PosPair>> closing(n); // arcs whose later endpoint is i
    for (auto arc : a.arcs())
        closing[std::max(arc.first, arc.second)].push_back(arc);

    std::vector<std::size_t> images(n);
    auto consistent = [&](std::size_t i) {
        for (auto [x, y] : closing[i]) {
            const auto fx = images[x], fy = images[y];
            if (fx == fy)
                continue;
            if (!b.related(fx, fy) || (fx < fy) != (x < y))
                return false;
        }
        return true;
    };
    auto rec = [&](auto& self, std::size_t i) -> void {
        if (i == n) {
            if (Cat::member(images, a, b))
                visit(std::span<const std::size_t>(images));
            return;
        }
        for (std::size_t t = 0; t < m; ++t) {
            images[i] = t;
            if (consistent(i))
                self(self, i + 1);
        }
    };
    rec(rec, 0);
}

} // namespace detail

/// Calls `visit(std::span<const std::size_t>)` for each morphism in canonical order.
template <MorphismCategory Cat, class Visitor>
void for_each_hom(const typename Cat::Object& a, const typename Cat::Object& b, Visitor&& visit,
                  const EnumGuard& guard = {})
{
    detail::check_enum_guard<Cat>(a, b, guard);
    if constexpr (Cat::tag == MorphismClass::ch_emb)
        detail::for_each_increasing(a.size(), b.size(), visit);
    else if constexpr (Cat::tag == MorphismClass::ch_rs)
        for_each_rigid_surjection(a.size(), b.size(), visit);
    else
        detail::for_each_graph_hom<Cat>(a, b, visit);
}

template <MorphismCategory Cat>
HomSet<Cat> enumerate_homset(const typename Cat::Object& a, const typename Cat::Object& b,
                             const EnumGuard& guard = {})
{
    HomSet<Cat> out{a, b, {}};
    const auto& ca = Cat::chain_of(a);
    const auto& cb = Cat::chain_of(b);
    for_each_hom<Cat>(a, b, [&](std::span<const std::size_t> images) {
        out.morphisms.emplace_back(ca, cb, std::vector<std::size_t>(images.begin(), images.end()));
    }, guard);
    return out;
}

/// Stirling number of the second kind.
inline std::uint64_t stirling2(std::size_t n, std::size_t k)
{
    std::vector<std::uint64_t> row(k + 1, 0);
    row[0] = 1; // S(0, 0)
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = std::min(i, k); j >= 1; --j)
            row[j] = j * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[k];
}

inline std::uint64_t binomial(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

template <MorphismCategory Cat>
std::uint64_t count_homset(const typename Cat::Object& a, const typename Cat::Object& b,
                           const EnumGuard& guard = {})
{
    detail::check_enum_guard<Cat>(a, b, guard);
    if constexpr (Cat::tag == MorphismClass::ch_emb) {
        return binomial(b.size(), a.size());
    } else if constexpr (Cat::tag == MorphismClass::ch_rs) {
        return a.size() < b.size() ? 0 : stirling2(a.size(), b.size());
    } else {
        std::uint64_t n = 0;
        detail::for_each_graph_hom<Cat>(a, b, [&](std::span<const std::size_t>) { ++n; });
        return n;
    }
}

} // namespace dualramsey
