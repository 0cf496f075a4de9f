#include "subclique/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

namespace subclique {

Graph Graph::from_edges(uint32_t n_hint,
                        std::span<const std::pair<VertexId, VertexId>> edges) {
    uint32_t n = n_hint;
    for (const auto& [u, v] : edges) n = std::max({n, u + 1, v + 1});

    std::vector<uint32_t> deg(n, 0);
    for (const auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }

    Graph g;
    g.n_ = n;
    g.offsets_.assign(n + 1, 0);
    for (uint32_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.neighbors_.resize(g.offsets_[n]);

    std::vector<uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        g.neighbors_[cursor[u]++] = v;
        g.neighbors_[cursor[v]++] = u;
    }
    for (uint32_t v = 0; v < n; ++v) {
        auto begin = g.neighbors_.begin() + static_cast<int64_t>(g.offsets_[v]);
        auto end = g.neighbors_.begin() + static_cast<int64_t>(g.offsets_[v + 1]);
        std::sort(begin, end);
    }
    return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    // probe the shorter list
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors_of(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

namespace {

bool parse_u32(std::string_view token, uint32_t& out) {
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc{} && ptr == token.data() + token.size();
}

// Splits a line into whitespace-separated tokens, dropping '#' comments.
std::vector<std::string_view> tokenize(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
    std::vector<std::string_view> tokens;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

}  // namespace

Graph load_edge_list(std::istream& in, LoadMode mode) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    uint32_t n_hint = 0;
    bool saw_content = false;

    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;

        if (!saw_content && tokens.size() == 2 && tokens[0] == "n") {
            if (!parse_u32(tokens[1], n_hint))
                throw ParseError(line_no, "bad vertex count in header");
            saw_content = true;
            continue;
        }
        saw_content = true;

        if (tokens.size() != 2)
            throw ParseError(line_no, "expected two vertex ids");
        uint32_t u, v;
        if (!parse_u32(tokens[0], u) || !parse_u32(tokens[1], v))
            throw ParseError(line_no, "bad vertex id");
        if (u == v) {
            if (mode == LoadMode::strict)
                throw ParseError(line_no, "self-loop at line " + std::to_string(line_no));
            continue;
        }
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }

    uint32_t max_id_plus1 = 0;
    for (const auto& [u, v] : edges) max_id_plus1 = std::max(max_id_plus1, v + 1);
    if (n_hint > 0 && n_hint < max_id_plus1)
        throw ParseError(0, "header vertex count smaller than max vertex id + 1");

    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph::from_edges(std::max(n_hint, max_id_plus1), edges);
}

Graph load_edge_list_file(const std::filesystem::path& path, LoadMode mode) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return load_edge_list(in, mode);
}

void save_edge_list(const Graph& g, std::ostream& out) {
    out << "n " << g.n() << "\n";
    for (VertexId u = 0; u < g.n(); ++u) {
        for (VertexId v : g.neighbors_of(u)) {
            if (u < v) out << u << " " << v << "\n";
        }
    }
}

void save_edge_list_file(const Graph& g, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    save_edge_list(g, out);
}

}  // namespace subclique
