#pragma once

// Partitions of a chain and their encoding as rigid surjections, and the finite
// dual Ramsey statement for partitions decided through that encoding.

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "dualramsey/arrow.hpp"
#include "dualramsey/chain.hpp"
#include "dualramsey/error.hpp"
#include "dualramsey/srq.hpp"

namespace dualramsey {

/// Blocks of labels. The canonical form lists blocks by their least element and
/// each block in chain order.
using Partition = std::vector<std::vector<std::string>>;

/// Sends every element to the least element of its block. The target chain is the
/// set of block minima in source order, so block minima keep their labels.
inline VertexMorphism partition_to_rigid_surjection(const Chain& c, const Partition& p)
{
    std::vector<std::size_t> block_of(c.size(), p.size());
    std::vector<std::size_t> block_min(p.size(), c.size());
    for (std::size_t b = 0; b < p.size(); ++b) {
        if (p[b].empty())
            throw InvalidObject("partition has an empty block");
        for (const auto& l : p[b]) {
            const auto pos = c.find(l);
            if (!pos)
                throw InvalidObject("partition uses label '" + l + "' outside the chain");
            if (block_of[*pos] != p.size())
                throw InvalidObject("label '" + l + "' appears in two blocks");
            block_of[*pos] = b;
            block_min[b] = std::min(block_min[b], *pos);
        }
    }
    if (std::count(block_of.begin(), block_of.end(), p.size()) != 0)
        throw InvalidObject("partition does not cover the chain");

    std::vector<std::size_t> minima(block_min);
    std::sort(minima.begin(), minima.end());
    std::vector<std::string> target_labels;
    for (auto m : minima)
        target_labels.push_back(c.label(m));
    Chain target(std::move(target_labels));

    std::vector<std::size_t> images(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        images[i] = target.position(c.label(block_min[block_of[i]]));
    return VertexMorphism(c, std::move(target), std::move(images));
}

/// The kernel {f^{-1}(y)} of a rigid surjection, in canonical form.
inline Partition rigid_surjection_to_partition(const VertexMorphism& f)
{
    if (!is_rigid_surjection(f))
        throw PreconditionError("kernel partition is defined for rigid surjections only");
    Partition p(f.target().size());
    for (std::size_t i = 0; i < f.source().size(); ++i)
        p[f(i)].push_back(f.source().label(i));
    // Rigidity lists the fibers by their least element already.
    return p;
}

/// Every set partition of {0..n-1} with exactly `blocks` blocks, as block-index
/// vectors; equals the image vectors of rigid surjections onto a `blocks`-chain.
inline std::vector<std::vector<std::size_t>> block_index_vectors(std::size_t n, std::size_t blocks)
{
    std::vector<std::vector<std::size_t>> out;
    for_each_rigid_surjection(n, blocks, [&](std::span<const std::size_t> v) { out.emplace_back(v.begin(), v.end()); });
    return out;
}

/// Whether partition `coarse` is coarser than `fine` (both as block-index vectors):
/// every block of `fine` lies inside a block of `coarse`.
inline bool is_coarser(std::span<const std::size_t> coarse, std::span<const std::size_t> fine)
{
    std::vector<std::size_t> seen(fine.size() + 1, static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < fine.size(); ++i) {
        auto& slot = seen.at(fine[i]);
        if (slot == static_cast<std::size_t>(-1))
            slot = coarse[i];
        else if (slot != coarse[i])
            return false;
    }
    return true;
}

/// Points: a-block partitions of an n-set. Edges: for each m-block partition beta,
/// the a-block partitions coarser than beta. Indexed in the same canonical order
/// as the rigid-surjection hom-sets.
inline CompositeHypergraph coarsening_hypergraph(std::size_t a, std::size_t m, std::size_t n)
{
    const auto points = block_index_vectors(n, a);
    const auto betas = block_index_vectors(n, m);
    CompositeHypergraph h;
    h.points = points.size();
    for (std::size_t b = 0; b < betas.size(); ++b) {
        std::vector<std::size_t> edge;
        for (std::size_t p = 0; p < points.size(); ++p)
            if (is_coarser(points[p], betas[b]))
                edge.push_back(p);
        h.add(std::move(edge), b);
    }
    return h;
}

/// Every k-coloring of the a-block partitions of an n-set admits an m-block
/// partition whose a-block coarsenings are monochromatic. Decided as the dual
/// arrow n -> (m)^a_k among chains and rigid surjections; the composite sets are
/// cross-checked against the coarsening relation on partitions.
inline ArrowVerdict check_fdrt_instance(std::size_t k, std::size_t a, std::size_t m, std::size_t n,
                                        const ArrowGuards& guards = {})
{
    if (!(1 <= a && a <= m && m <= n))
        throw PreconditionError("need 1 <= a <= m <= n");
    auto v = check_arrow_dual<ChRs>(Chain::numbered(n), Chain::numbered(m), Chain::numbered(a), k, guards);
    const auto by_partitions = coarsening_hypergraph(a, m, n);
    auto as_set = [](const CompositeHypergraph& h) {
        return std::set<std::vector<std::size_t>>(h.edges.begin(), h.edges.end());
    };
    if (by_partitions.points != v.composites.points || as_set(by_partitions) != as_set(v.composites))
        throw InvariantViolation("rigid-surjection and partition encodings disagree");
    return v;
}

} // namespace dualramsey
