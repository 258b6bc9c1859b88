#include "hlnet/recipe.hpp"

#include <atomic>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hlnet/rng.hpp"

namespace hlnet {

namespace {

std::atomic<int> g_max_dimension{20};

void check_dimension(int n, const char* what) {
    if (n < 0)
        fail(ErrorCode::invalid_argument, std::string(what) + ": negative dimension");
    if (n > max_dimension())
        fail(ErrorCode::limit, std::string(what) + ": dimension " + std::to_string(n) +
                                   " exceeds the configured maximum " +
                                   std::to_string(max_dimension()));
}

} // namespace

int max_dimension() noexcept { return g_max_dimension.load(std::memory_order_relaxed); }

void set_max_dimension(int n) {
    if (n < 0 || n > 30)
        fail(ErrorCode::invalid_argument, "maximum dimension must lie in [0, 30]");
    g_max_dimension.store(n, std::memory_order_relaxed);
}

// --- MatchingPerm -----------------------------------------------------------

MatchingPerm::MatchingPerm(std::vector<VertexId> map) : map_(std::move(map)) {
    std::vector<std::int64_t> preimage(map_.size(), -1);
    for (std::size_t i = 0; i < map_.size(); ++i) {
        const VertexId image = map_[i];
        if (image >= map_.size())
            fail(ErrorCode::invalid_argument,
                 "matching entry " + std::to_string(i) + " maps to " + std::to_string(image) +
                     ", outside [0, " + std::to_string(map_.size()) + ")");
        if (preimage[image] >= 0)
            fail(ErrorCode::invalid_argument,
                 "matching is not a permutation: image " + std::to_string(image) +
                     " is used by entries " + std::to_string(preimage[image]) + " and " +
                     std::to_string(i));
        preimage[image] = static_cast<std::int64_t>(i);
    }
}

MatchingPerm MatchingPerm::identity(std::size_t size) {
    std::vector<VertexId> map(size);
    for (std::size_t i = 0; i < size; ++i)
        map[i] = static_cast<VertexId>(i);
    MatchingPerm m;
    m.map_ = std::move(map);
    return m;
}

// --- Recipe -----------------------------------------------------------------

struct Recipe::Node {
    int dim = 0;
    // Empty for the leaf.
    std::vector<Recipe> children;
    MatchingPerm matching;
};

Recipe::Recipe() : node_(nullptr) {}

int Recipe::dim() const noexcept { return node_ ? node_->dim : 0; }

bool Recipe::is_leaf() const noexcept { return node_ == nullptr; }

Recipe Recipe::compose(const Recipe& left, const Recipe& right, MatchingPerm matching) {
    if (left.dim() != right.dim())
        fail(ErrorCode::invalid_argument, "compose: halves have dimensions " +
                                              std::to_string(left.dim()) + " and " +
                                              std::to_string(right.dim()));
    const std::size_t half = std::size_t{1} << left.dim();
    if (matching.size() != half)
        fail(ErrorCode::invalid_argument, "compose: matching has length " +
                                              std::to_string(matching.size()) + ", expected " +
                                              std::to_string(half));
    auto node = std::make_shared<Node>();
    node->dim = left.dim() + 1;
    node->children = {left, right};
    node->matching = std::move(matching);
    return Recipe(std::move(node));
}

std::tuple<Recipe, Recipe, MatchingPerm> Recipe::split() const {
    if (is_leaf())
        fail(ErrorCode::invalid_argument, "split: a leaf has no halves");
    return {node_->children[0], node_->children[1], node_->matching};
}

const Recipe& Recipe::left() const {
    if (is_leaf())
        fail(ErrorCode::invalid_argument, "left: a leaf has no halves");
    return node_->children[0];
}

const Recipe& Recipe::right() const {
    if (is_leaf())
        fail(ErrorCode::invalid_argument, "right: a leaf has no halves");
    return node_->children[1];
}

const MatchingPerm& Recipe::matching() const {
    if (is_leaf())
        fail(ErrorCode::invalid_argument, "matching: a leaf has no matching");
    return node_->matching;
}

bool operator==(const Recipe& a, const Recipe& b) {
    if (a.node_ == b.node_)
        return true;
    if (a.is_leaf() || b.is_leaf())
        return false;
    return a.node_->dim == b.node_->dim && a.node_->matching == b.node_->matching &&
           a.node_->children[0] == b.node_->children[0] &&
           a.node_->children[1] == b.node_->children[1];
}

// --- constructors -----------------------------------------------------------

Recipe hypercube(int n) {
    check_dimension(n, "hypercube");
    Recipe r;
    for (int d = 0; d < n; ++d)
        r = Recipe::compose(r, r, MatchingPerm::identity(std::size_t{1} << d));
    return r;
}

namespace {

Recipe random_node(int dim, std::uint64_t seed, std::uint64_t position) {
    if (dim == 0)
        return Recipe();
    Recipe left = random_node(dim - 1, seed, 2 * position);
    Recipe right = random_node(dim - 1, seed, 2 * position + 1);

    SplitMix64 rng(seed ^ SplitMix64::mix(position));
    const std::size_t half = std::size_t{1} << (dim - 1);
    std::vector<VertexId> map(half);
    for (std::size_t i = 0; i < half; ++i)
        map[i] = static_cast<VertexId>(i);
    // Fisher-Yates, high index down.
    for (std::size_t i = half; i > 1; --i) {
        const std::size_t j = rng.below(i);
        std::swap(map[i - 1], map[j]);
    }
    return Recipe::compose(left, right, MatchingPerm(std::move(map)));
}

} // namespace

Recipe random_hl(int n, std::uint64_t seed) {
    check_dimension(n, "random_hl");
    return random_node(n, seed, 1);
}

Recipe g84() {
    const Recipe c4 = hypercube(2);
    return Recipe::compose(c4, c4, MatchingPerm({0, 1, 3, 2}));
}

Recipe recipe_from_source(const std::string& source, int n) {
    auto require_n = [&](const char* what) {
        if (n < 0)
            fail(ErrorCode::invalid_argument, std::string(what) + " recipe needs a dimension");
    };
    Recipe r;
    if (source == "hypercube") {
        require_n("hypercube");
        return hypercube(n);
    }
    if (source == "g84") {
        r = g84();
    } else if (source == "random" || source.rfind("random:", 0) == 0) {
        require_n("random");
        std::uint64_t seed = 0;
        if (source != "random") {
            const std::string rest = source.substr(7);
            const std::string key = "seed=";
            if (rest.rfind(key, 0) != 0)
                fail(ErrorCode::invalid_argument, "expected random:seed=<int>, got '" + source + "'");
            const char* first = rest.data() + key.size();
            const char* last = rest.data() + rest.size();
            auto [ptr, ec] = std::from_chars(first, last, seed);
            if (ec != std::errc() || ptr != last || first == last)
                fail(ErrorCode::invalid_argument, "bad seed in '" + source + "'");
        }
        return random_hl(n, seed);
    } else if (source.rfind("file:", 0) == 0) {
        r = load_recipe(source.substr(5));
    } else {
        fail(ErrorCode::invalid_argument,
             "unknown recipe '" + source + "' (expected hypercube, g84, random:seed=S or file:PATH)");
    }
    if (n >= 0 && r.dim() != n)
        fail(ErrorCode::invalid_argument, "recipe '" + source + "' has dimension " +
                                              std::to_string(r.dim()) + ", requested " +
                                              std::to_string(n));
    return r;
}

// --- JSON -------------------------------------------------------------------

namespace {

using nlohmann::ordered_json;

ordered_json to_json(const Recipe& r) {
    ordered_json j;
    j["dim"] = r.dim();
    if (r.is_leaf()) {
        j["leaf"] = true;
        return j;
    }
    ordered_json node;
    node["left"] = to_json(r.left());
    node["right"] = to_json(r.right());
    node["matching"] = std::vector<VertexId>(r.matching().values().begin(),
                                             r.matching().values().end());
    j["node"] = std::move(node);
    return j;
}

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
    fail(ErrorCode::parse, "recipe schema error at " + (where.empty() ? "/" : where) + ": " + what);
}

Recipe from_json(const ordered_json& j, const std::string& where, int depth) {
    if (!j.is_object())
        schema_error(where, "expected an object");
    if (depth > 30)
        schema_error(where, "recursion too deep");
    const auto dim_it = j.find("dim");
    if (dim_it == j.end() || !dim_it->is_number_integer())
        schema_error(where + "/dim", "missing or non-integer \"dim\"");
    const auto dim = dim_it->get<std::int64_t>();
    if (dim < 0 || dim > 30)
        schema_error(where + "/dim", "dimension " + std::to_string(dim) + " out of range");

    if (dim == 0) {
        const auto leaf = j.find("leaf");
        if (leaf == j.end() || !leaf->is_boolean() || !leaf->get<bool>())
            schema_error(where, "dimension-0 recipe must be {\"dim\": 0, \"leaf\": true}");
        if (j.contains("node"))
            schema_error(where + "/node", "a leaf cannot have a node");
        return Recipe();
    }
    if (j.contains("leaf"))
        schema_error(where + "/leaf", "only dimension-0 recipes are leaves");
    const auto node_it = j.find("node");
    if (node_it == j.end() || !node_it->is_object())
        schema_error(where + "/node", "missing \"node\" object");
    const std::string node_where = where + "/node";
    for (const char* key : {"left", "right", "matching"})
        if (!node_it->contains(key))
            schema_error(node_where, std::string("missing \"") + key + "\"");

    Recipe left = from_json((*node_it)["left"], node_where + "/left", depth + 1);
    Recipe right = from_json((*node_it)["right"], node_where + "/right", depth + 1);
    if (left.dim() != dim - 1 || right.dim() != dim - 1)
        schema_error(node_where, "halves have dimensions " + std::to_string(left.dim()) + " and " +
                                     std::to_string(right.dim()) + ", expected " +
                                     std::to_string(dim - 1) + " each");

    const auto& arr = (*node_it)["matching"];
    const std::string m_where = node_where + "/matching";
    if (!arr.is_array())
        schema_error(m_where, "expected an array");
    const std::size_t half = std::size_t{1} << (dim - 1);
    if (arr.size() != half)
        schema_error(m_where, "length " + std::to_string(arr.size()) + ", expected " +
                                  std::to_string(half));
    std::vector<VertexId> map;
    map.reserve(half);
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_number_unsigned())
            schema_error(m_where + "/" + std::to_string(i), "expected a non-negative integer");
        const auto v = arr[i].get<std::uint64_t>();
        if (v >= half)
            schema_error(m_where + "/" + std::to_string(i),
                         "image " + std::to_string(v) + " outside [0, " + std::to_string(half) + ")");
        map.push_back(static_cast<VertexId>(v));
    }
    try {
        return Recipe::compose(left, right, MatchingPerm(std::move(map)));
    } catch (const Error& e) {
        schema_error(m_where, e.what());
    }
}

} // namespace

std::string recipe_to_json(const Recipe& r) { return to_json(r).dump() + "\n"; }

Recipe recipe_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        fail(ErrorCode::parse, std::string("recipe is not valid JSON: ") + e.what());
    }
    return from_json(j, "", 0);
}

void save_recipe(const Recipe& r, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        fail(ErrorCode::io, "cannot open " + path.string() + " for writing");
    out << recipe_to_json(r);
    if (!out)
        fail(ErrorCode::io, "write to " + path.string() + " failed");
}

Recipe load_recipe(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(ErrorCode::io, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return recipe_from_json(buf.str());
}

} // namespace hlnet
