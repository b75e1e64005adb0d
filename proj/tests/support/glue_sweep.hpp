#pragma once

// Exhaustive sweep over small binary cocone data: every target B, every pair of
// apex components, every tuple of legs and every one-bottom-vertex shape.

#include <functional>
#include <string>
#include <vector>

#include "dualramsey/dualramsey.hpp"

namespace sweep {

using namespace dualramsey;

struct Limits {
    std::size_t apex = 3;   // vertices per apex component
    std::size_t target = 3; // vertices of B
    std::size_t legs = 2;
    std::size_t base = 3; // vertices of A
};

struct Stats {
    std::size_t instances = 0;      // glue calls
    std::size_t cocone_checks = 0;  // (instance, shape) pairs
    std::size_t commuting = 0;      // of those, legs commuted
    std::size_t violations = 0;
    GlueCaseCounts cases;
    std::string first_violation;
};

inline Chain prefixed(const std::string& prefix, std::size_t n)
{
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i)
        labels.push_back(prefix + std::to_string(i));
    return Chain(std::move(labels));
}

inline std::vector<LinExtDigraph> components(const std::string& prefix, std::size_t max)
{
    std::vector<LinExtDigraph> out;
    for (std::size_t n = 1; n <= max; ++n)
        for (const auto& g : all_lin_ext_digraphs(n))
            out.emplace_back(prefixed(prefix, n), std::vector<PosPair>(g.arcs().begin(), g.arcs().end()));
    return out;
}

inline void note(Stats& s, const std::string& what)
{
    if (s.violations++ == 0)
        s.first_violation = what;
}

inline Stats run(const Limits& lim)
{
    Stats s;
    const auto vs = components("v", lim.apex);
    const auto ws = components("w", lim.apex);
    for (std::size_t nb = 1; nb <= lim.target; ++nb) {
        for (const auto& b : all_oographs(nb)) {
            const auto split = split_oograph(b);
            // One-bottom-vertex shapes (u, v): B -> A, per base A.
            std::vector<std::pair<OrderedOrientedGraph, std::vector<VertexMorphism>>> bases;
            for (std::size_t na = 1; na <= std::min(lim.base, nb); ++na)
                for (const auto& a : all_oographs(na)) {
                    auto hom = enumerate_homset<OOGraSrq>(b, a).morphisms;
                    if (!hom.empty())
                        bases.emplace_back(a, std::move(hom));
                }
            for (const auto& rho : vs) {
                const auto fs = enumerate_homset<EDigSrq>(rho, split.first).morphisms;
                if (fs.empty())
                    continue;
                for (const auto& sigma : ws) {
                    const auto gs = enumerate_homset<EDigSrq>(sigma, split.second).morphisms;
                    if (gs.empty())
                        continue;
                    std::vector<MorphismPair> pairs;
                    for (const auto& f : fs)
                        for (const auto& g : gs)
                            pairs.push_back({f, g});
                    std::vector<std::vector<MorphismPair>> tuples;
                    for (const auto& p : pairs)
                        tuples.push_back({p});
                    if (lim.legs >= 2)
                        for (const auto& p : pairs)
                            for (const auto& q : pairs)
                                tuples.push_back({p, q});
                    for (auto& legs : tuples) {
                        BinaryCoconeData d{rho, sigma, b, b, legs, {legs.size(), {}}};
                        GlueResult r{b, {}, {}};
                        try {
                            r = glue(d);
                        } catch (const Error& e) {
                            note(s, e.what());
                            continue;
                        }
                        ++s.instances;
                        s.cases += r.cases;
                        if (legs.size() < 2)
                            continue;
                        for (const auto& [a, hom] : bases) {
                            for (const auto& u : hom)
                                for (const auto& v : hom) {
                                    BinaryCoconeData shaped{rho, sigma, b, a, legs, {2, {{{0, u}, {1, v}}}}};
                                    ++s.cocone_checks;
                                    if (!legs_commute(shaped))
                                        continue;
                                    ++s.commuting;
                                    if (!check_commuting_cocone(shaped, r.phi))
                                        note(s, "cocone does not commute after gluing");
                                }
                        }
                    }
                }
            }
        }
    }
    return s;
}

} // namespace sweep
