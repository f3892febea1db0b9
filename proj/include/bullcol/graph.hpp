#pragma once

#include "bullcol/errors.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bullcol {

using Vertex = int;
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on dense ids 0..n-1.
///
/// Immutable after construction. Each vertex carries an external label (the
/// id as written in the input file) so certificates can be reported in the
/// caller's numbering.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Duplicate edges are collapsed;
    /// self-loops and out-of-range endpoints raise InputError.
    Graph(int n, std::span<const Edge> edges, std::vector<long long> labels = {});
    Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int order() const noexcept { return n_; }
    int size() const noexcept { return m_; }

    bool adjacent(Vertex u, Vertex v) const noexcept {
        return matrix_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)] != 0;
    }
    std::span<const Vertex> neighbours(Vertex v) const noexcept { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const noexcept { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    int max_degree() const noexcept;
    int min_degree() const noexcept;

    bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

    /// All edges (u < v), sorted lexicographically.
    std::vector<Edge> edges() const;

    long long label(Vertex v) const { return labels_[static_cast<std::size_t>(v)]; }
    const std::vector<long long>& labels() const noexcept { return labels_; }
    std::optional<Vertex> vertex_with_label(long long label) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::uint8_t> matrix_;
    std::vector<long long> labels_;
};

using Colour = int;
inline constexpr Colour kUncoloured = -1;
inline constexpr Colour kRed = 0;
inline constexpr Colour kGreen = 1;
inline constexpr Colour kBlue = 2;

std::string_view colour_name(Colour c);

/// Vertex -> colour in {0,1,2}; kUncoloured marks vertices not yet assigned.
class Colouring {
public:
    Colouring() = default;
    explicit Colouring(int n) : colours_(static_cast<std::size_t>(n), kUncoloured) {}
    explicit Colouring(std::vector<Colour> colours) : colours_(std::move(colours)) {}

    int size() const noexcept { return static_cast<int>(colours_.size()); }
    Colour operator[](Vertex v) const { return colours_[static_cast<std::size_t>(v)]; }
    Colour& operator[](Vertex v) { return colours_[static_cast<std::size_t>(v)]; }
    bool coloured(Vertex v) const { return (*this)[v] != kUncoloured; }
    bool complete() const noexcept;
    const std::vector<Colour>& values() const noexcept { return colours_; }

    friend bool operator==(const Colouring&, const Colouring&) = default;

private:
    std::vector<Colour> colours_;
};

/// Subgraph induced by `s`; vertex i of the result is s[i] and keeps its label.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> s);

/// True iff no edge is monochromatic. Throws InputError if `c` is not a
/// complete colouring of g with colours in {0,1,2}.
bool is_proper_colouring(const Graph& g, const Colouring& c);

/// First monochromatic edge, if any (same preconditions as is_proper_colouring).
std::optional<Edge> monochromatic_edge(const Graph& g, const Colouring& c);

bool is_connected(const Graph& g);

enum class GraphFormat { dimacs, edgelist };

std::optional<GraphFormat> parse_graph_format(std::string_view name);

/// Parses DIMACS .col ("p edge n m", "e u v", 1-indexed) or an edge list
/// ("u v" per line, 0-indexed, optional leading "n <count>").
Graph parse_graph(std::string_view text, GraphFormat format);

/// Writes the header first and edges sorted lexicographically.
std::string serialize_graph(const Graph& g, GraphFormat format);

} // namespace bullcol
