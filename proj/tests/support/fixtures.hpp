#pragma once

#include <string>
#include <vector>

#include "dualramsey/dualramsey.hpp"

namespace fixtures {

using namespace dualramsey;

/// Triangle 1 -> 2 -> 3 -> 1 on the chain 1 < 2 < 3.
inline OrderedOrientedGraph triangle()
{
    std::vector<LabelPair> arcs{{"1", "2"}, {"2", "3"}, {"3", "1"}};
    return OrderedOrientedGraph::from_labels(Chain::numbered(3), arcs);
}

/// Hexagon 1 -> 2 -> ... -> 6 -> 1 on the chain 1 < ... < 6.
inline OrderedOrientedGraph hexagon()
{
    std::vector<LabelPair> arcs{{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "6"}, {"6", "1"}};
    return OrderedOrientedGraph::from_labels(Chain::numbered(6), arcs);
}

inline VertexMorphism map_of(const Chain& from, const Chain& to, std::vector<std::string> images)
{
    std::map<std::string, std::string, std::less<>> table;
    for (std::size_t i = 0; i < images.size(); ++i)
        table[from.label(i)] = images[i];
    return VertexMorphism::from_labels(from, to, table);
}

/// Hexagon -> triangle, 1 2 3 4 5 6 -> 1 2 3 1 2 3 (not strong rigid).
inline VertexMorphism wrap_map()
{
    return map_of(Chain::numbered(6), Chain::numbered(3), {"1", "2", "3", "1", "2", "3"});
}

/// Hexagon -> triangle, 1 2 3 4 5 6 -> 1 2 2 3 3 3 (strong rigid).
inline VertexMorphism collapse_map()
{
    return map_of(Chain::numbered(6), Chain::numbered(3), {"1", "2", "2", "3", "3", "3"});
}

inline std::vector<std::size_t> iota(std::size_t n)
{
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = i;
    return v;
}

} // namespace fixtures
