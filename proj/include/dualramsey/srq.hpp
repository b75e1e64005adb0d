#pragma once

// Strong rigid quotient maps, the four morphism classes and their composition.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dualramsey/chain.hpp"
#include "dualramsey/error.hpp"
#include "dualramsey/graph.hpp"

namespace dualramsey {

enum class MorphismClass { ch_emb, ch_rs, edig_srq, oogra_srq };

inline std::string_view to_string(MorphismClass c)
{
    switch (c) {
    case MorphismClass::ch_emb: return "ch-emb";
    case MorphismClass::ch_rs: return "ch-rs";
    case MorphismClass::edig_srq: return "edig-srq";
    case MorphismClass::oogra_srq: return "oogra-srq";
    }
    return "?";
}

inline std::optional<MorphismClass> parse_morphism_class(std::string_view s)
{
    for (auto c : {MorphismClass::ch_emb, MorphismClass::ch_rs, MorphismClass::edig_srq, MorphismClass::oogra_srq})
        if (to_string(c) == s)
            return c;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Staged srq verdicts

/// The earliest check a candidate morphism failed. `none` when accepted.
enum class SrqStage { none, homomorphism, well_defined, surjectivity, rigidity };
/// Which half of an ordered oriented graph the failure was found in.
enum class SrqLeg { none, forward, backward };

inline std::string_view to_string(SrqStage s)
{
    switch (s) {
    case SrqStage::none: return "none";
    case SrqStage::homomorphism: return "homomorphism";
    case SrqStage::well_defined: return "well_defined";
    case SrqStage::surjectivity: return "surjectivity";
    case SrqStage::rigidity: return "rigidity";
    }
    return "?";
}

inline std::string_view to_string(SrqLeg l)
{
    switch (l) {
    case SrqLeg::none: return "none";
    case SrqLeg::forward: return "forward";
    case SrqLeg::backward: return "backward";
    }
    return "?";
}

/// Witness layout by stage:
///   homomorphism, well_defined: {source arc, its image}
///   surjectivity:               {target arc with no preimage}
///   rigidity:                   {x, y} target arcs, x before y, whose least preimages are out of order
/// Arcs of the backward leg are reported reversed, as they appear in (rho_>)^{-1}.
struct SrqVerdict {
    bool accepted = false;
    SrqStage stage = SrqStage::none;
    SrqLeg leg = SrqLeg::none;
    std::vector<LabelPair> witness;

    explicit operator bool() const noexcept { return accepted; }
};

namespace detail {

inline LabelPair label_pair(const Chain& c, PosPair p) { return {c.label(p.first), c.label(p.second)}; }

/// One linear-extension leg: f-hat well defined, surjective and rigid.
inline SrqVerdict check_srq_leg(std::span<const std::size_t> images, const LinExtDigraph& p,
                                const LinExtDigraph& q, SrqStage undefined_stage, SrqLeg leg)
{
    SrqVerdict v;
    v.leg = leg;
    const auto fhat = induced_arc_map(images, p, q);
    if (!fhat.accepted) {
        v.stage = undefined_stage;
        v.witness = {label_pair(p.chain(), fhat.witness->first), label_pair(q.chain(), fhat.witness->second)};
        return v;
    }
    if (auto bad = find_rigidity_violation(fhat.image, fhat.codomain.size())) {
        if (bad->kind == RigidityViolation::Kind::missed_target) {
            v.stage = SrqStage::surjectivity;
            v.witness = {label_pair(q.chain(), fhat.codomain[bad->first])};
        } else {
            v.stage = SrqStage::rigidity;
            v.witness = {label_pair(q.chain(), fhat.codomain[bad->first]),
                         label_pair(q.chain(), fhat.codomain[bad->second])};
        }
        return v;
    }
    v.accepted = true;
    v.leg = SrqLeg::none;
    return v;
}

} // namespace detail

/// Position-level test; `images` maps positions of p to positions of q.
inline SrqVerdict is_srq_edig(std::span<const std::size_t> images, const LinExtDigraph& p, const LinExtDigraph& q)
{
    return detail::check_srq_leg(images, p, q, SrqStage::homomorphism, SrqLeg::none);
}

inline SrqVerdict is_srq_edig(const VertexMorphism& f, const LinExtDigraph& p, const LinExtDigraph& q)
{
    return is_srq_edig(images_between(f, p.chain(), q.chain()), p, q);
}

inline SrqVerdict is_srq_oograph(std::span<const std::size_t> images, const OrderedOrientedGraph& g,
                                 const OrderedOrientedGraph& h)
{
    if (auto arc = first_unpreserved_arc(images, g, h)) {
        SrqVerdict v;
        v.stage = SrqStage::homomorphism;
        v.witness = {detail::label_pair(g.chain(), *arc),
                     detail::label_pair(h.chain(), {images[arc->first], images[arc->second]})};
        return v;
    }
    auto forward = detail::check_srq_leg(images, forward_part(g), forward_part(h), SrqStage::well_defined,
                                         SrqLeg::forward);
    if (!forward)
        return forward;
    return detail::check_srq_leg(images, backward_part_reversed(g), backward_part_reversed(h),
                                 SrqStage::well_defined, SrqLeg::backward);
}

inline SrqVerdict is_srq_oograph(const VertexMorphism& f, const OrderedOrientedGraph& g,
                                 const OrderedOrientedGraph& h)
{
    return is_srq_oograph(images_between(f, g.chain(), h.chain()), g, h);
}

/// A strong rigid quotient map of ordered oriented graphs is a rigid surjection on
/// vertices and a quotient map. Always true when the precondition holds.
inline bool derived_rigid_surjection_and_quotient(const VertexMorphism& f, const OrderedOrientedGraph& g,
                                                  const OrderedOrientedGraph& h)
{
    if (!is_srq_oograph(f, g, h))
        throw PreconditionError("morphism is not a strong rigid quotient map");
    const VertexMorphism on_chains(g.chain(), h.chain(), images_between(f, g.chain(), h.chain()));
    return is_rigid_surjection(on_chains).accepted && is_quotient_map(on_chains, g, h);
}

/// min fhat^{-1}(min S) == min fhat^{-1}(S) for a nonempty set S of codomain arcs.
inline bool min_preimage_lemma_check(const InducedArcMap& fhat, std::span<const PosPair> s)
{
    if (!fhat.accepted)
        throw PreconditionError("induced arc map is not well defined");
    if (s.empty())
        throw PreconditionError("arc subset must be nonempty");
    std::vector<bool> in_s(fhat.codomain.size());
    std::size_t min_s = fhat.codomain.size();
    for (auto arc : s) {
        auto at = fhat.codomain_index(arc);
        if (!at)
            throw DomainError("arc is not in the codomain of the induced map");
        in_s[*at] = true;
        min_s = std::min(min_s, *at);
    }
    // Domain is listed in sal order, so the first hit is the minimum.
    std::optional<std::size_t> of_min, of_set;
    for (std::size_t i = 0; i < fhat.image.size(); ++i) {
        if (!of_min && fhat.image[i] == min_s)
            of_min = i;
        if (!of_set && in_s[fhat.image[i]])
            of_set = i;
    }
    return of_min == of_set;
}

// ---------------------------------------------------------------------------
// Morphism classes as compile-time categories

/// Finite chains and order embeddings.
struct ChEmb {
    using Object = Chain;
    static constexpr MorphismClass tag = MorphismClass::ch_emb;
    static const Chain& chain_of(const Chain& c) noexcept { return c; }
    static bool member(std::span<const std::size_t> images, const Chain&, const Chain&)
    {
        return std::adjacent_find(images.begin(), images.end(), std::greater_equal<>()) == images.end();
    }
};

/// Finite chains and rigid surjections.
struct ChRs {
    using Object = Chain;
    static constexpr MorphismClass tag = MorphismClass::ch_rs;
    static const Chain& chain_of(const Chain& c) noexcept { return c; }
    static bool member(std::span<const std::size_t> images, const Chain&, const Chain& b)
    {
        return !find_rigidity_violation(images, b.size());
    }
};

/// Digraphs with a linear extension and strong rigid quotient maps.
struct EDigSrq {
    using Object = LinExtDigraph;
    static constexpr MorphismClass tag = MorphismClass::edig_srq;
    static const Chain& chain_of(const LinExtDigraph& g) noexcept { return g.chain(); }
    static bool member(std::span<const std::size_t> images, const LinExtDigraph& a, const LinExtDigraph& b)
    {
        return is_srq_edig(images, a, b).accepted;
    }
};

/// Ordered oriented graphs and strong rigid quotient maps.
struct OOGraSrq {
    using Object = OrderedOrientedGraph;
    static constexpr MorphismClass tag = MorphismClass::oogra_srq;
    static const Chain& chain_of(const OrderedOrientedGraph& g) noexcept { return g.chain(); }
    static bool member(std::span<const std::size_t> images, const OrderedOrientedGraph& a,
                       const OrderedOrientedGraph& b)
    {
        return is_srq_oograph(images, a, b).accepted;
    }
};

template <class C>
concept MorphismCategory = requires(std::span<const std::size_t> images, const typename C::Object& a) {
    { C::tag } -> std::convertible_to<MorphismClass>;
    { C::chain_of(a) } -> std::convertible_to<const Chain&>;
    { C::member(images, a, a) } -> std::convertible_to<bool>;
};

template <MorphismCategory Cat>
bool is_member(const VertexMorphism& f, const typename Cat::Object& a, const typename Cat::Object& b)
{
    return Cat::member(images_between(f, Cat::chain_of(a), Cat::chain_of(b)), a, b);
}

template <MorphismCategory Cat>
VertexMorphism identity_of(const typename Cat::Object& a)
{
    return VertexMorphism::identity(Cat::chain_of(a));
}

/// g2 after g1 for g1: a -> b and g2: b -> c, both members of the class. The
/// composite is checked for membership again; a failure there is a bug.
template <MorphismCategory Cat>
VertexMorphism compose(const VertexMorphism& g2, const VertexMorphism& g1, const typename Cat::Object& a,
                       const typename Cat::Object& b, const typename Cat::Object& c)
{
    const auto& ca = Cat::chain_of(a);
    const auto& cb = Cat::chain_of(b);
    const auto& cc = Cat::chain_of(c);
    const auto first = images_between(g1, ca, cb);
    const auto second = images_between(g2, cb, cc);
    if (!Cat::member(first, a, b) || !Cat::member(second, b, c))
        throw PreconditionError(std::string("composition operands are not ") + std::string(to_string(Cat::tag)) +
                                " morphisms");
    std::vector<std::size_t> images(first.size());
    for (std::size_t i = 0; i < images.size(); ++i)
        images[i] = second[first[i]];
    if (!Cat::member(images, a, c))
        throw InvariantViolation(std::string("composite left the class ") + std::string(to_string(Cat::tag)));
    return VertexMorphism(ca, cc, std::move(images));
}

} // namespace dualramsey
