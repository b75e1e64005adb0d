#pragma once

// Pairs of linear-extension digraphs, the subcategory of pairs that come from
// ordered oriented graphs, binary diagrams and the cocone gluing construction.

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dualramsey/chain.hpp"
#include "dualramsey/error.hpp"
#include "dualramsey/graph.hpp"
#include "dualramsey/srq.hpp"

namespace dualramsey {

/// An object of the product EDig_srq x EDig_srq.
struct EDigPair {
    LinExtDigraph first;
    LinExtDigraph second;

    friend bool operator==(const EDigPair&, const EDigPair&) = default;
};

/// A morphism of a product category.
struct MorphismPair {
    VertexMorphism first;
    VertexMorphism second;

    friend bool operator==(const MorphismPair&, const MorphismPair&) = default;
};

/// Componentwise composition `after . before` in Cat x Cat, for before: a -> b and after: b -> c.
template <MorphismCategory Cat>
MorphismPair product_compose(const MorphismPair& after, const MorphismPair& before,
                             const std::pair<typename Cat::Object, typename Cat::Object>& a,
                             const std::pair<typename Cat::Object, typename Cat::Object>& b,
                             const std::pair<typename Cat::Object, typename Cat::Object>& c)
{
    return {compose<Cat>(after.first, before.first, a.first, b.first, c.first),
            compose<Cat>(after.second, before.second, a.second, b.second, c.second)};
}

inline EDigPair split_oograph(const OrderedOrientedGraph& g)
{
    return {forward_part(g), backward_part_reversed(g)};
}

/// Same chain, and the two arc sets share no arc in either orientation.
inline bool is_in_subcategory_D(const EDigPair& p)
{
    if (!(p.first.chain() == p.second.chain()))
        return false;
    for (auto [u, v] : p.first.arcs()) {
        if (p.second.related(u, v) || p.second.related(v, u))
            return false;
    }
    return true;
}

/// Inverse of `split_oograph` on the subcategory.
inline OrderedOrientedGraph unsplit_pair(const EDigPair& p)
{
    if (!is_in_subcategory_D(p))
        throw PreconditionError("pair is not the split of an ordered oriented graph");
    std::vector<PosPair> arcs(p.first.arcs().begin(), p.first.arcs().end());
    for (auto [u, v] : p.second.arcs())
        arcs.emplace_back(v, u);
    return OrderedOrientedGraph(p.first.chain(), std::move(arcs));
}

// ---------------------------------------------------------------------------
// Binary diagrams

/// An arrow from a bottom vertex to top vertex `leg`, labelled by a strong rigid
/// quotient map from the top object to the bottom object.
struct ShapeArrow {
    std::size_t leg = 0;
    VertexMorphism label;
};

struct BottomVertex {
    ShapeArrow left;
    ShapeArrow right;
};

/// Top vertices are 0..top-1; each bottom vertex sends exactly two arrows up.
struct BinaryShape {
    std::size_t top = 0;
    std::vector<BottomVertex> bottom;
};

/// A commuting-cocone candidate in the product category over a binary diagram whose
/// top row is split(target) and whose bottom row is split(base).
///
/// `apex_second` holds sigma as a forward relation in its own order; the glued
/// graph receives sigma reversed.
struct BinaryCoconeData {
    LinExtDigraph apex_first;
    LinExtDigraph apex_second;
    OrderedOrientedGraph target;
    OrderedOrientedGraph base;
    std::vector<MorphismPair> legs; // (f_i, g_i): apex -> split(target)
    BinaryShape shape;
};

/// Throws PreconditionError or DisjointnessError when `d` is malformed.
inline void validate(const BinaryCoconeData& d)
{
    for (const auto& l : d.apex_second.chain().labels())
        if (d.apex_first.chain().contains(l))
            throw DisjointnessError("apex components share label '" + l + "'");
    const auto split = split_oograph(d.target);
    for (std::size_t i = 0; i < d.legs.size(); ++i) {
        if (!is_srq_edig(d.legs[i].first, d.apex_first, split.first))
            throw PreconditionError("leg " + std::to_string(i) + ": first component is not a strong rigid quotient map");
        if (!is_srq_edig(d.legs[i].second, d.apex_second, split.second))
            throw PreconditionError("leg " + std::to_string(i) + ": second component is not a strong rigid quotient map");
    }
    if (d.shape.top != d.legs.size())
        throw PreconditionError("shape must have one top vertex per leg");
    for (const auto& b : d.shape.bottom) {
        for (const auto* arrow : {&b.left, &b.right}) {
            if (arrow->leg >= d.shape.top)
                throw PreconditionError("shape arrow points at a missing top vertex");
            if (!is_srq_oograph(arrow->label, d.target, d.base))
                throw PreconditionError("shape arrow label is not a strong rigid quotient map");
        }
        if (b.left.leg == b.right.leg)
            throw PreconditionError("the two arrows of a bottom vertex must reach different top vertices");
    }
}

/// How often each min-preimage comparison of the rigidity argument fell into
/// each case, per leg of the glued graph. For the forward leg "own" pairs lie in
/// V x V (rho) and "other" pairs in the diagonal of W; for the backward leg the
/// roles of V and W swap.
///   case 1: own, own    case 2: other, other
///   case 3: own, other  case 4: other, own
struct GlueCaseCounts {
    std::array<std::size_t, 4> forward{};
    std::array<std::size_t, 4> backward{};

    std::size_t total(std::size_t case_number) const
    {
        return forward.at(case_number - 1) + backward.at(case_number - 1);
    }

    GlueCaseCounts& operator+=(const GlueCaseCounts& o)
    {
        for (std::size_t i = 0; i < 4; ++i) {
            forward[i] += o.forward[i];
            backward[i] += o.backward[i];
        }
        return *this;
    }
};

struct GlueResult {
    OrderedOrientedGraph graph;
    std::vector<VertexMorphism> phi;
    GlueCaseCounts cases;
};

namespace detail {

inline std::size_t glue_case(bool x_own, bool y_own)
{
    if (x_own && y_own)
        return 0;
    if (!x_own && !y_own)
        return 1;
    return x_own ? 2 : 3;
}

/// Classifies every comparison a < b of target arcs by where min phi-hat^{-1}(a)
/// and min phi-hat^{-1}(b) live. `own_is_first` selects V as the own component.
inline void count_cases(std::span<const std::size_t> images, const LinExtDigraph& from, const LinExtDigraph& to,
                        std::size_t first_size, bool own_is_first, std::array<std::size_t, 4>& counts)
{
    const auto fhat = induced_arc_map(images, from, to);
    if (!fhat.accepted)
        return;
    const auto mins = min_preimages(fhat.image, fhat.codomain.size());
    auto own = [&](std::size_t at) {
        const auto arc = fhat.domain[at];
        const bool in_first = arc.first < first_size && arc.second < first_size;
        return in_first == own_is_first;
    };
    for (std::size_t a = 0; a < mins.size(); ++a) {
        for (std::size_t b = a + 1; b < mins.size(); ++b) {
            if (!mins[a] || !mins[b])
                continue;
            ++counts[glue_case(own(*mins[a]), own(*mins[b]))];
        }
    }
}

} // namespace detail

struct GlueOptions {
    /// Check the construction's postconditions and throw InvariantViolation on failure.
    bool verify = true;
};

/// Glues the apex into one ordered oriented graph on V followed by W, with arcs
/// rho and sigma reversed, and the maps phi_i = f_i on V, g_i on W.
inline GlueResult glue(const BinaryCoconeData& d, const GlueOptions& options = {})
{
    validate(d);
    const auto& v_chain = d.apex_first.chain();
    const auto& w_chain = d.apex_second.chain();
    const auto chain = concat(v_chain, w_chain);
    const std::size_t offset = v_chain.size();

    std::vector<PosPair> rho(d.apex_first.arcs().begin(), d.apex_first.arcs().end());
    std::vector<PosPair> sigma;
    for (auto [u, v] : d.apex_second.arcs())
        sigma.emplace_back(u + offset, v + offset);
    std::vector<PosPair> arcs = rho;
    for (auto [u, v] : sigma)
        arcs.emplace_back(v, u);
    OrderedOrientedGraph glued(chain, std::move(arcs));

    const auto b_split = split_oograph(d.target);
    const auto d_split = split_oograph(glued);
    GlueResult out{glued, {}, {}};
    for (const auto& leg : d.legs) {
        const auto f = images_between(leg.first, v_chain, d.target.chain());
        const auto g = images_between(leg.second, w_chain, d.target.chain());
        std::vector<std::size_t> images(f);
        images.insert(images.end(), g.begin(), g.end());
        detail::count_cases(images, d_split.first, b_split.first, offset, true, out.cases.forward);
        detail::count_cases(images, d_split.second, b_split.second, offset, false, out.cases.backward);
        out.phi.emplace_back(chain, d.target.chain(), std::move(images));
    }

    if (options.verify) {
        if (!is_in_subcategory_D(d_split))
            throw InvariantViolation("split of the glued graph is not in the subcategory");
        if (!(d_split.first == LinExtDigraph(chain, rho)))
            throw InvariantViolation("forward part of the glued graph differs from rho");
        if (!(d_split.second == LinExtDigraph(chain, sigma)))
            throw InvariantViolation("reversed backward part of the glued graph differs from sigma");
        for (std::size_t i = 0; i < out.phi.size(); ++i) {
            const auto verdict = is_srq_oograph(out.phi[i], glued, d.target);
            if (!verdict)
                throw InvariantViolation("phi_" + std::to_string(i) + " is not a strong rigid quotient map (" +
                                         std::string(to_string(verdict.stage)) + ", " +
                                         std::string(to_string(verdict.leg)) + " leg)");
        }
    }
    return out;
}

namespace detail {

/// u . h on positions, where h: X -> target and u: target -> base.
inline std::vector<std::size_t> after(const VertexMorphism& u, std::span<const std::size_t> h,
                                      const BinaryCoconeData& d)
{
    const auto ui = images_between(u, d.target.chain(), d.base.chain());
    std::vector<std::size_t> out(h.size());
    for (std::size_t i = 0; i < h.size(); ++i)
        out[i] = ui[h[i]];
    return out;
}

} // namespace detail

/// Whether (u, u) . e_i = (v, v) . e_j for every bottom vertex of the shape.
inline bool legs_commute(const BinaryCoconeData& d)
{
    for (const auto& b : d.shape.bottom) {
        const auto& li = d.legs.at(b.left.leg);
        const auto& lj = d.legs.at(b.right.leg);
        const auto& tc = d.target.chain();
        const auto fi = images_between(li.first, d.apex_first.chain(), tc);
        const auto fj = images_between(lj.first, d.apex_first.chain(), tc);
        const auto gi = images_between(li.second, d.apex_second.chain(), tc);
        const auto gj = images_between(lj.second, d.apex_second.chain(), tc);
        if (detail::after(b.left.label, fi, d) != detail::after(b.right.label, fj, d) ||
            detail::after(b.left.label, gi, d) != detail::after(b.right.label, gj, d))
            return false;
    }
    return true;
}

/// For each bottom vertex with arrows (i, u) and (j, v): whenever u . e_i = v . e_j
/// on the apex, u . phi_i = v . phi_j must hold pointwise on the glued graph.
inline bool check_commuting_cocone(const BinaryCoconeData& d, const std::vector<VertexMorphism>& phi)
{
    if (phi.size() != d.legs.size())
        throw PreconditionError("one phi per leg is required");
    const auto& tc = d.target.chain();
    for (const auto& b : d.shape.bottom) {
        if (b.left.leg >= phi.size() || b.right.leg >= phi.size())
            throw PreconditionError("shape arrow points at a missing leg");
        BinaryCoconeData single = d;
        single.shape.bottom = {b};
        if (!legs_commute(single))
            continue;
        const auto& chain = phi[b.left.leg].source();
        const auto pi = images_between(phi[b.left.leg], chain, tc);
        const auto pj = images_between(phi[b.right.leg], chain, tc);
        if (detail::after(b.left.label, pi, d) != detail::after(b.right.label, pj, d))
            return false;
    }
    return true;
}

} // namespace dualramsey
