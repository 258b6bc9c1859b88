#ifndef HLNET_RECIPE_HPP
#define HLNET_RECIPE_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "hlnet/common.hpp"

namespace hlnet {

/// Perfect matching between the two halves of a node: image(i) is the local
/// index in the right half joined to local index i of the left half.
class MatchingPerm {
public:
    MatchingPerm() = default;

    /// Throws ErrorCode::invalid_argument unless `map` is a permutation of
    /// {0, ..., map.size()-1}; the message names the offending entry.
    explicit MatchingPerm(std::vector<VertexId> map);

    static MatchingPerm identity(std::size_t size);

    std::size_t size() const noexcept { return map_.size(); }
    VertexId operator[](std::size_t i) const { return map_[i]; }
    std::span<const VertexId> values() const noexcept { return map_; }

    friend bool operator==(const MatchingPerm&, const MatchingPerm&) = default;

private:
    std::vector<VertexId> map_;
};

/// Recursive construction tree of an HL-network. A leaf is the single-vertex
/// network of dimension 0; a node joins two equal-dimension recipes with a
/// perfect matching. Recipes are immutable and share subtrees freely.
class Recipe {
public:
    /// The dimension-0 leaf.
    Recipe();

    static Recipe leaf() { return Recipe(); }

    /// Join two recipes. Requires left.dim() == right.dim() and
    /// matching.size() == 2^left.dim().
    static Recipe compose(const Recipe& left, const Recipe& right, MatchingPerm matching);

    int dim() const noexcept;
    bool is_leaf() const noexcept;

    /// Children and matching of a node; throws on a leaf.
    std::tuple<Recipe, Recipe, MatchingPerm> split() const;

    const Recipe& left() const;
    const Recipe& right() const;
    const MatchingPerm& matching() const;

    /// Structural equality (shared subtrees compare by pointer first).
    friend bool operator==(const Recipe& a, const Recipe& b);

private:
    struct Node;
    explicit Recipe(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// Q_n: identity matchings at every level, so u ~ v iff u ^ v is a power of two.
Recipe hypercube(int n);

/// Member of HL_n whose matchings are drawn independently and uniformly from
/// all permutations. Each node seeds its own splitmix64 stream from `seed` and
/// its heap position (root = 1, children 2k and 2k+1), so results are
/// bit-identical across platforms.
Recipe random_hl(int n, std::uint64_t seed);

/// The 3-dimensional HL-network that is not Q_3: two 4-cycles joined by the
/// matching [0, 1, 3, 2].
Recipe g84();

/// Resolve a recipe source string: "hypercube", "g84", "random:seed=S",
/// "random" (seed 0) or "file:PATH". `n` is ignored for g84 and files but
/// must match their dimension when it is non-negative.
Recipe recipe_from_source(const std::string& source, int n);

// JSON serialization. Leaves are {"dim": 0, "leaf": true}; nodes are
// {"dim": n, "node": {"left": ..., "right": ..., "matching": [...]}}.
std::string recipe_to_json(const Recipe& r);
Recipe recipe_from_json(const std::string& text);
void save_recipe(const Recipe& r, const std::filesystem::path& path);
Recipe load_recipe(const std::filesystem::path& path);

} // namespace hlnet

#endif
