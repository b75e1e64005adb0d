#pragma once

// Finite chains, the anti-lexicographic and special anti-lexicographic orders,
// vertex morphisms between chains and rigid surjections.
//
// Everything below the label-level API works on positions: the i-th label of a
// chain has position i, and the chain order is the order of positions.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dualramsey/error.hpp"

namespace dualramsey {

using PosPair = std::pair<std::size_t, std::size_t>;
using LabelPair = std::pair<std::string, std::string>;

/// A nonempty finite chain of distinct labels; the listing order is the chain order.
/// Copies share the immutable label storage.
class Chain {
public:
    explicit Chain(std::vector<std::string> labels)
    {
        if (labels.empty())
            throw InvalidObject("chain must be nonempty");
        auto data = std::make_shared<Data>();
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (!data->index.emplace(labels[i], i).second)
                throw InvalidObject("duplicate chain label '" + labels[i] + "'");
        }
        data->labels = std::move(labels);
        data_ = std::move(data);
    }

    /// The chain "1" < "2" < ... < "n".
    static Chain numbered(std::size_t n)
    {
        std::vector<std::string> labels;
        labels.reserve(n);
        for (std::size_t i = 1; i <= n; ++i)
            labels.push_back(std::to_string(i));
        return Chain(std::move(labels));
    }

    std::size_t size() const noexcept { return data_->labels.size(); }
    const std::string& label(std::size_t pos) const { return data_->labels.at(pos); }
    std::span<const std::string> labels() const noexcept { return data_->labels; }

    std::optional<std::size_t> find(std::string_view label) const
    {
        auto it = data_->index.find(label);
        if (it == data_->index.end())
            return std::nullopt;
        return it->second;
    }

    bool contains(std::string_view label) const { return find(label).has_value(); }

    std::size_t position(std::string_view label) const
    {
        if (auto p = find(label))
            return *p;
        throw DomainError("label '" + std::string(label) + "' is not in the chain");
    }

    /// Equality of the underlying label sets, ignoring order.
    bool same_labels(const Chain& other) const
    {
        if (size() != other.size())
            return false;
        return std::all_of(data_->labels.begin(), data_->labels.end(),
                           [&](const std::string& l) { return other.contains(l); });
    }

    friend bool operator==(const Chain& a, const Chain& b)
    {
        return a.data_ == b.data_ || a.data_->labels == b.data_->labels;
    }

private:
    struct Data {
        std::vector<std::string> labels;
        std::map<std::string, std::size_t, std::less<>> index;
    };
    std::shared_ptr<const Data> data_;
};

/// Concatenation: every label of `a` precedes every label of `b`.
inline Chain concat(const Chain& a, const Chain& b)
{
    std::vector<std::string> labels(a.labels().begin(), a.labels().end());
    for (const auto& l : b.labels()) {
        if (a.contains(l))
            throw DisjointnessError("cannot concatenate chains sharing label '" + l + "'");
        labels.push_back(l);
    }
    return Chain(std::move(labels));
}

// ---------------------------------------------------------------------------
// Orders on pairs and subsets (position level)

/// Anti-lexicographic order on pairs: second coordinate first.
constexpr bool alex_less(PosPair p, PosPair q) noexcept
{
    return p.second < q.second || (p.second == q.second && p.first < q.first);
}

/// Anti-lexicographic order on subsets, via the max-difference rule.
/// Inputs are position sets in any order without repetitions.
inline bool alex_set_less(std::span<const std::size_t> x, std::span<const std::size_t> y)
{
    std::vector<std::size_t> xs(x.begin(), x.end());
    std::vector<std::size_t> ys(y.begin(), y.end());
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    std::vector<std::size_t> x_only;
    std::vector<std::size_t> y_only;
    std::set_difference(xs.begin(), xs.end(), ys.begin(), ys.end(), std::back_inserter(x_only));
    std::set_difference(ys.begin(), ys.end(), xs.begin(), xs.end(), std::back_inserter(y_only));
    if (y_only.empty())
        return false;
    if (x_only.empty())
        return true;
    return x_only.back() < y_only.back();
}

/// Special anti-lexicographic order on A x A: diagonal pairs first (by vertex),
/// then non-diagonal pairs grouped by their two-element support.
constexpr bool sal_less(PosPair p, PosPair q) noexcept
{
    const bool p_diag = p.first == p.second;
    const bool q_diag = q.first == q.second;
    if (p_diag && q_diag)
        return p.first < q.first;
    if (p_diag != q_diag)
        return p_diag;
    const auto p_lo = std::min(p.first, p.second), p_hi = std::max(p.first, p.second);
    const auto q_lo = std::min(q.first, q.second), q_hi = std::max(q.first, q.second);
    if (p_lo == q_lo && p_hi == q_hi)
        return alex_less(p, q);
    // Two-element sets: the max-difference rule reduces to comparing (hi, lo) anti-lexicographically.
    return alex_less({p_lo, p_hi}, {q_lo, q_hi});
}

// ---------------------------------------------------------------------------
// Orders on pairs and subsets (label level)

inline PosPair positions_of(const LabelPair& p, const Chain& c)
{
    return {c.position(p.first), c.position(p.second)};
}

inline bool alex_pair_less(const LabelPair& p, const LabelPair& q, const Chain& c)
{
    return alex_less(positions_of(p, c), positions_of(q, c));
}

inline bool alex_set_less(std::span<const std::string> x, std::span<const std::string> y, const Chain& c)
{
    auto to_positions = [&](std::span<const std::string> s) {
        std::vector<std::size_t> out;
        for (const auto& l : s)
            out.push_back(c.position(l));
        std::sort(out.begin(), out.end());
        if (std::adjacent_find(out.begin(), out.end()) != out.end())
            throw DomainError("subset lists a label twice");
        return out;
    };
    return alex_set_less(to_positions(x), to_positions(y));
}

inline bool sal_less(const LabelPair& p, const LabelPair& q, const Chain& c)
{
    return sal_less(positions_of(p, c), positions_of(q, c));
}

// ---------------------------------------------------------------------------
// Rigidity of a map between finite linear orders

/// Why an index map fails to be a rigid surjection.
struct RigidityViolation {
    enum class Kind { missed_target, order };
    Kind kind;
    /// missed_target: `first` is the least target index without a preimage.
    /// order: first < second in the target, yet min preimage of first > min preimage of second.
    std::size_t first = 0;
    std::size_t second = 0;

    friend bool operator==(const RigidityViolation&, const RigidityViolation&) = default;
};

/// min f^{-1}(t) for every target index t, for a map given as `images[i] = f(i)`
/// on domain and codomain indexed in their order.
inline std::vector<std::optional<std::size_t>> min_preimages(std::span<const std::size_t> images,
                                                             std::size_t codomain_size)
{
    std::vector<std::optional<std::size_t>> mins(codomain_size);
    for (std::size_t i = 0; i < images.size(); ++i) {
        auto& m = mins.at(images[i]);
        if (!m)
            m = i;
    }
    return mins;
}

/// Returns the least violation of rigid surjectivity, or nothing when the map is a
/// rigid surjection. Missed targets are reported before order violations; order
/// violations are reported as the lexicographically least target pair.
inline std::optional<RigidityViolation> find_rigidity_violation(std::span<const std::size_t> images,
                                                                std::size_t codomain_size)
{
    const auto mins = min_preimages(images, codomain_size);
    for (std::size_t t = 0; t < codomain_size; ++t) {
        if (!mins[t])
            return RigidityViolation{RigidityViolation::Kind::missed_target, t, t};
    }
    for (std::size_t x = 0; x < codomain_size; ++x) {
        for (std::size_t y = x + 1; y < codomain_size; ++y) {
            if (*mins[x] > *mins[y])
                return RigidityViolation{RigidityViolation::Kind::order, x, y};
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Vertex morphisms

/// A total map between the label sets of two chains, stored by positions.
class VertexMorphism {
public:
    VertexMorphism(Chain source, Chain target, std::vector<std::size_t> images)
        : source_(std::move(source)), target_(std::move(target)), images_(std::move(images))
    {
        if (images_.size() != source_.size())
            throw InvalidObject("morphism must assign exactly one image to every source label");
        for (auto t : images_) {
            if (t >= target_.size())
                throw InvalidObject("morphism image outside the target chain");
        }
    }

    /// Builds a morphism from a label-to-label table covering every source label.
    static VertexMorphism from_labels(Chain source, Chain target,
                                      const std::map<std::string, std::string, std::less<>>& table)
    {
        if (table.size() != source.size())
            throw InvalidObject("morphism table must have exactly one entry per source label");
        std::vector<std::size_t> images(source.size());
        for (const auto& [from, to] : table) {
            auto s = source.find(from);
            if (!s)
                throw InvalidObject("morphism maps unknown source label '" + from + "'");
            auto t = target.find(to);
            if (!t)
                throw InvalidObject("morphism image '" + to + "' is not a target label");
            images[*s] = *t;
        }
        return VertexMorphism(std::move(source), std::move(target), std::move(images));
    }

    static VertexMorphism identity(const Chain& c)
    {
        std::vector<std::size_t> images(c.size());
        for (std::size_t i = 0; i < images.size(); ++i)
            images[i] = i;
        return VertexMorphism(c, c, std::move(images));
    }

    const Chain& source() const noexcept { return source_; }
    const Chain& target() const noexcept { return target_; }
    std::span<const std::size_t> images() const noexcept { return images_; }
    std::size_t operator()(std::size_t pos) const { return images_.at(pos); }

    const std::string& image_of(std::string_view label) const
    {
        return target_.label(images_[source_.position(label)]);
    }

    bool is_surjective() const
    {
        std::vector<bool> hit(target_.size());
        for (auto t : images_)
            hit[t] = true;
        return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    }

    bool is_injective() const
    {
        std::vector<bool> hit(target_.size());
        for (auto t : images_) {
            if (hit[t])
                return false;
            hit[t] = true;
        }
        return true;
    }

    friend bool operator==(const VertexMorphism& a, const VertexMorphism& b)
    {
        return a.images_ == b.images_ && a.source_ == b.source_ && a.target_ == b.target_;
    }

private:
    Chain source_;
    Chain target_;
    std::vector<std::size_t> images_;
};

/// The images of `f` re-expressed on the positions of `from` and `to`. The chains
/// must carry the same label sets as f's source and target; order comes from them.
inline std::vector<std::size_t> images_between(const VertexMorphism& f, const Chain& from, const Chain& to)
{
    if (f.source() == from && f.target() == to)
        return {f.images().begin(), f.images().end()};
    if (!f.source().same_labels(from) || !f.target().same_labels(to))
        throw DomainError("morphism chains do not match the objects' label sets");
    std::vector<std::size_t> out(from.size());
    for (std::size_t i = 0; i < from.size(); ++i)
        out[i] = to.position(f.image_of(from.label(i)));
    return out;
}

/// g2 after g1. The target of g1 and the source of g2 must carry the same labels.
inline VertexMorphism compose_maps(const VertexMorphism& g2, const VertexMorphism& g1)
{
    if (!g1.target().same_labels(g2.source()))
        throw DomainError("morphisms are not composable");
    const auto second = images_between(g2, g1.target(), g2.target());
    std::vector<std::size_t> images(g1.source().size());
    for (std::size_t i = 0; i < images.size(); ++i)
        images[i] = second[g1(i)];
    return VertexMorphism(g1.source(), g2.target(), std::move(images));
}

// ---------------------------------------------------------------------------
// Rigid surjections

struct RigidSurjectionVerdict {
    bool accepted = false;
    /// Least target label without a preimage.
    std::optional<std::string> missed;
    /// Least target pair (x, y), x < y, with min f^{-1}(x) > min f^{-1}(y).
    std::optional<LabelPair> violation;

    explicit operator bool() const noexcept { return accepted; }
};

inline RigidSurjectionVerdict is_rigid_surjection(const VertexMorphism& f)
{
    RigidSurjectionVerdict v;
    const auto bad = find_rigidity_violation(f.images(), f.target().size());
    if (!bad) {
        v.accepted = true;
    } else if (bad->kind == RigidityViolation::Kind::missed_target) {
        v.missed = f.target().label(bad->first);
    } else {
        v.violation = LabelPair{f.target().label(bad->first), f.target().label(bad->second)};
    }
    return v;
}

/// Whether every initial segment of the source maps onto an initial segment of the target.
inline bool is_initial_segment_preserving(const VertexMorphism& f)
{
    if (!f.is_surjective())
        throw PreconditionError("initial-segment test needs a surjection");
    std::vector<bool> hit(f.target().size());
    std::size_t count = 0;
    std::size_t max_hit = 0;
    for (auto t : f.images()) {
        if (!hit[t]) {
            hit[t] = true;
            ++count;
        }
        max_hit = std::max(max_hit, t);
        // The image of the prefix is {0, ..., count-1} iff its maximum is count-1.
        if (max_hit + 1 != count)
            return false;
    }
    return true;
}

/// Visits every rigid surjection source -> target as an image vector, in
/// lexicographic order of the image tuple. These are exactly the restricted
/// growth strings of length |source| with maximum |target| - 1.
template <class Visitor>
void for_each_rigid_surjection(std::size_t source_size, std::size_t target_size, Visitor&& visit)
{
    if (source_size < target_size || target_size == 0)
        return;
    std::vector<std::size_t> images(source_size, 0);
    auto rec = [&](auto& self, std::size_t i, std::size_t used) -> void {
        // `used` targets already hit; the remaining slots must still reach the rest.
        if (i == source_size) {
            if (used == target_size)
                visit(std::span<const std::size_t>(images));
            return;
        }
        if (target_size - used > source_size - i)
            return;
        const std::size_t limit = std::min(used + 1, target_size);
        for (std::size_t t = 0; t < limit; ++t) {
            images[i] = t;
            self(self, i + 1, std::max(used, t + 1));
        }
    };
    images[0] = 0;
    rec(rec, 1, 1);
}

inline std::vector<VertexMorphism> enumerate_rigid_surjections(const Chain& a, const Chain& b)
{
    std::vector<VertexMorphism> out;
    for_each_rigid_surjection(a.size(), b.size(), [&](std::span<const std::size_t> images) {
        out.emplace_back(a, b, std::vector<std::size_t>(images.begin(), images.end()));
    });
    return out;
}

} // namespace dualramsey
