#include "bullcol/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace bullcol {

Graph::Graph(int n, std::span<const Edge> edges, std::vector<long long> labels)
    : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))),
      matrix_(static_cast<std::size_t>(std::max(n, 0)) * static_cast<std::size_t>(std::max(n, 0)), 0),
      labels_(std::move(labels)) {
    if (n < 0)
        throw InputError("negative vertex count");
    if (labels_.empty()) {
        labels_.resize(static_cast<std::size_t>(n));
        std::iota(labels_.begin(), labels_.end(), 0LL);
    } else if (labels_.size() != static_cast<std::size_t>(n)) {
        throw InputError("label table size does not match vertex count");
    }
    for (auto [u, v] : edges) {
        if (!contains(u) || !contains(v))
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v)
            throw InputError("self-loop at vertex " + std::to_string(u));
        auto idx = static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
        if (matrix_[idx])
            continue;
        matrix_[idx] = 1;
        matrix_[static_cast<std::size_t>(v) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(u)] = 1;
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
        ++m_;
    }
    for (auto& list : adj_)
        std::sort(list.begin(), list.end());
}

int Graph::max_degree() const noexcept {
    int best = 0;
    for (const auto& list : adj_)
        best = std::max(best, static_cast<int>(list.size()));
    return best;
}

int Graph::min_degree() const noexcept {
    if (adj_.empty())
        return 0;
    int best = n_;
    for (const auto& list : adj_)
        best = std::min(best, static_cast<int>(list.size()));
    return best;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbours(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

std::optional<Vertex> Graph::vertex_with_label(long long label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
        return std::nullopt;
    return static_cast<Vertex>(it - labels_.begin());
}

std::string_view colour_name(Colour c) {
    switch (c) {
    case kRed: return "red";
    case kGreen: return "green";
    case kBlue: return "blue";
    default: return "uncoloured";
    }
}

bool Colouring::complete() const noexcept {
    return std::none_of(colours_.begin(), colours_.end(), [](Colour c) { return c == kUncoloured; });
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
    std::vector<int> position(static_cast<std::size_t>(g.order()), -1);
    std::vector<long long> labels;
    labels.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        Vertex v = s[i];
        if (!g.contains(v))
            throw InputError("vertex " + std::to_string(v) + " out of range");
        if (position[static_cast<std::size_t>(v)] != -1)
            throw InputError("duplicate vertex " + std::to_string(v) + " in vertex set");
        position[static_cast<std::size_t>(v)] = static_cast<int>(i);
        labels.push_back(g.label(v));
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (Vertex w : g.neighbours(s[i])) {
            int j = position[static_cast<std::size_t>(w)];
            if (j > static_cast<int>(i))
                edges.emplace_back(static_cast<Vertex>(i), j);
        }
    return Graph(static_cast<int>(s.size()), edges, std::move(labels));
}

std::optional<Edge> monochromatic_edge(const Graph& g, const Colouring& c) {
    if (c.size() != g.order())
        throw InputError("colouring covers " + std::to_string(c.size()) + " vertices, graph has " +
                         std::to_string(g.order()));
    for (Vertex v = 0; v < g.order(); ++v)
        if (c[v] < 0 || c[v] > 2)
            throw InputError("vertex " + std::to_string(v) + " has no colour in {0,1,2}");
    for (auto [u, v] : g.edges())
        if (c[u] == c[v])
            return Edge{u, v};
    return std::nullopt;
}

bool is_proper_colouring(const Graph& g, const Colouring& c) {
    return !monochromatic_edge(g, c).has_value();
}

bool is_connected(const Graph& g) {
    if (g.order() == 0)
        return true;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbours(v))
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == g.order();
}

std::optional<GraphFormat> parse_graph_format(std::string_view name) {
    if (name == "dimacs")
        return GraphFormat::dimacs;
    if (name == "edgelist")
        return GraphFormat::edgelist;
    return std::nullopt;
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        if (i > start)
            fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

long long parse_int(std::string_view field, int line) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size())
        throw ParseError(line, "expected an integer, got '" + std::string(field) + "'");
    return value;
}

template <typename LineFn>
void for_each_line(std::string_view text, LineFn&& fn) {
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        ++number;
        fn(text.substr(pos, end - pos), number);
        if (end == text.size())
            break;
        pos = end + 1;
    }
}

Graph parse_dimacs(std::string_view text) {
    std::optional<long long> n;
    std::vector<std::pair<Edge, int>> edges;
    for_each_line(text, [&](std::string_view line, int number) {
        auto fields = split_fields(line);
        if (fields.empty() || fields[0] == "c")
            return;
        if (fields[0] == "p") {
            if (n)
                throw ParseError(number, "duplicate problem line");
            if (fields.size() != 4 || fields[1] != "edge")
                throw ParseError(number, "malformed header, expected 'p edge <n> <m>'");
            n = parse_int(fields[2], number);
            long long m = parse_int(fields[3], number);
            if (*n < 0 || m < 0)
                throw ParseError(number, "negative count in header");
            return;
        }
        if (fields[0] == "e") {
            if (!n)
                throw ParseError(number, "edge line before header");
            if (fields.size() != 3)
                throw ParseError(number, "malformed edge line, expected 'e <u> <v>'");
            long long u = parse_int(fields[1], number);
            long long v = parse_int(fields[2], number);
            if (u < 1 || u > *n || v < 1 || v > *n)
                throw ParseError(number, "vertex index out of range 1.." + std::to_string(*n));
            if (u == v)
                throw ParseError(number, "self-loop at vertex " + std::to_string(u));
            edges.push_back({{static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)}, number});
            return;
        }
        throw ParseError(number, "unrecognised line '" + std::string(line) + "'");
    });
    if (!n)
        throw ParseError(1, "missing 'p edge' header");
    std::vector<Edge> plain;
    plain.reserve(edges.size());
    for (auto& [e, line] : edges)
        plain.push_back(e);
    std::vector<long long> labels(static_cast<std::size_t>(*n));
    std::iota(labels.begin(), labels.end(), 1LL);
    return Graph(static_cast<int>(*n), plain, std::move(labels));
}

Graph parse_edgelist(std::string_view text) {
    std::optional<long long> declared;
    long long max_id = -1;
    std::vector<Edge> edges;
    bool seen_content = false;
    for_each_line(text, [&](std::string_view line, int number) {
        auto fields = split_fields(line);
        if (fields.empty() || fields[0].starts_with('#'))
            return;
        if (fields[0] == "n") {
            if (seen_content)
                throw ParseError(number, "'n <count>' must be the first line");
            if (fields.size() != 2)
                throw ParseError(number, "malformed count line, expected 'n <count>'");
            declared = parse_int(fields[1], number);
            if (*declared < 0)
                throw ParseError(number, "negative vertex count");
            seen_content = true;
            return;
        }
        seen_content = true;
        if (fields.size() != 2)
            throw ParseError(number, "malformed edge line, expected '<u> <v>'");
        long long u = parse_int(fields[0], number);
        long long v = parse_int(fields[1], number);
        if (u < 0 || v < 0)
            throw ParseError(number, "negative vertex index");
        if (declared && (u >= *declared || v >= *declared))
            throw ParseError(number, "vertex index out of range 0.." + std::to_string(*declared - 1));
        if (u == v)
            throw ParseError(number, "self-loop at vertex " + std::to_string(u));
        max_id = std::max({max_id, u, v});
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    });
    long long n = declared ? *declared : max_id + 1;
    return Graph(static_cast<int>(n), edges);
}

} // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
    return format == GraphFormat::dimacs ? parse_dimacs(text) : parse_edgelist(text);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    std::ostringstream out;
    auto edges = g.edges();
    if (format == GraphFormat::dimacs) {
        out << "p edge " << g.order() << ' ' << g.size() << '\n';
        for (auto [u, v] : edges)
            out << "e " << u + 1 << ' ' << v + 1 << '\n';
    } else {
        out << "n " << g.order() << '\n';
        for (auto [u, v] : edges)
            out << u << ' ' << v << '\n';
    }
    return out.str();
}

} // namespace bullcol
