#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace subclique {

using VertexId = uint32_t;

// Immutable simple undirected graph in CSR form. Neighbor lists are sorted
// ascending by id. m() counts ordered edges, i.e. the sum of all degrees.
class Graph {
public:
    Graph() = default;

    // Build from undirected edge pairs; dedupes and drops nothing (self
    // loops must be filtered by the caller). n is at least n_hint.
    static Graph from_edges(uint32_t n_hint,
                            std::span<const std::pair<VertexId, VertexId>> edges);

    uint32_t n() const { return n_; }
    uint64_t m() const { return neighbors_.size(); }

    uint32_t degree(VertexId v) const {
        return static_cast<uint32_t>(offsets_[v + 1] - offsets_[v]);
    }

    std::span<const VertexId> neighbors_of(VertexId v) const {
        return {neighbors_.data() + offsets_[v], degree(v)};
    }

    // i is 0-based here; the oracle exposes the 1-based form.
    VertexId neighbor_at(VertexId v, uint32_t i) const {
        return neighbors_[offsets_[v] + i];
    }

    // Bounds-checked neighbor access with a single offset read pair.
    VertexId neighbor_checked(VertexId v, uint32_t i0) const {
        const uint64_t base = offsets_[v];
        if (i0 >= offsets_[v + 1] - base)
            throw std::out_of_range("neighbor: index out of range");
        return neighbors_[base + i0];
    }

    bool has_edge(VertexId u, VertexId v) const;

    bool in_range(VertexId v) const { return v < n_; }

private:
    uint32_t n_ = 0;
    std::vector<uint64_t> offsets_{0};
    std::vector<VertexId> neighbors_;
};

// Total order on vertices: ascending degree, ties by ascending id. Strict:
// comparing a vertex with itself is a caller bug.
inline bool precedes(const Graph& g, VertexId u, VertexId v) {
    if (u == v) throw std::invalid_argument("precedes: u == v");
    const uint32_t du = g.degree(u), dv = g.degree(v);
    if (du != dv) return du < dv;
    return u < v;
}

struct ParseError : std::runtime_error {
    ParseError(size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_number(line) {}
    size_t line_number;
};

enum class LoadMode { strict, lenient };

// Edge-list text format: lines "u v" with 0-based ids, '#' comments, blank
// lines, optional leading header "n <count>" for trailing isolated vertices.
// strict rejects self loops, lenient skips them; duplicates collapse.
Graph load_edge_list(std::istream& in, LoadMode mode = LoadMode::strict);
Graph load_edge_list_file(const std::filesystem::path& path,
                          LoadMode mode = LoadMode::strict);

void save_edge_list(const Graph& g, std::ostream& out);
void save_edge_list_file(const Graph& g, const std::filesystem::path& path);

}  // namespace subclique
