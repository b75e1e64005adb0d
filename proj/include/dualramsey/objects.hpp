#pragma once

// Canonical enumeration of all objects of a given size.

#include <cstddef>
#include <vector>

#include "dualramsey/chain.hpp"
#include "dualramsey/graph.hpp"

namespace dualramsey {

/// Unordered vertex pairs {i < j} of an n-chain in anti-lexicographic order:
/// (0,1), (0,2), (1,2), (0,3), ...
inline std::vector<PosPair> vertex_pairs(std::size_t n)
{
    std::vector<PosPair> out;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i)
            out.emplace_back(i, j);
    return out;
}

/// Every digraph with a linear extension on the chain 1 < ... < n. The arc set is
/// read as a binary counter over `vertex_pairs(n)`, first pair least significant.
inline std::vector<LinExtDigraph> all_lin_ext_digraphs(std::size_t n)
{
    const auto chain = Chain::numbered(n);
    const auto pairs = vertex_pairs(n);
    std::vector<LinExtDigraph> out;
    for (std::size_t code = 0; code < (std::size_t{1} << pairs.size()); ++code) {
        std::vector<PosPair> arcs;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (code >> i & 1)
                arcs.push_back(pairs[i]);
        out.emplace_back(chain, std::move(arcs));
    }
    return out;
}

/// Every ordered oriented graph on the chain 1 < ... < n. Each vertex pair is
/// absent (0), forward (1) or backward (2); the arc set is read as a base-3
/// counter over `vertex_pairs(n)`, first pair least significant.
inline std::vector<OrderedOrientedGraph> all_oographs(std::size_t n)
{
    const auto chain = Chain::numbered(n);
    const auto pairs = vertex_pairs(n);
    std::size_t total = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        total *= 3;
    std::vector<OrderedOrientedGraph> out;
    out.reserve(total);
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<PosPair> arcs;
        auto rest = code;
        for (auto [i, j] : pairs) {
            const auto digit = rest % 3;
            rest /= 3;
            if (digit == 1)
                arcs.emplace_back(i, j);
            else if (digit == 2)
                arcs.emplace_back(j, i);
        }
        out.emplace_back(chain, std::move(arcs));
    }
    return out;
}

} // namespace dualramsey
