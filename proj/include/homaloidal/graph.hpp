#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "homaloidal/mpoly.hpp"

namespace homaloidal {

struct DisconnectedGraph : std::runtime_error {
    DisconnectedGraph() : std::runtime_error("graph is not connected") {}
};

struct Edge {
    int u, v;          // endpoints, 1-based, u < v
    std::string var;   // edge variable name
};

/// Simple undirected graph with labeled edges. Vertices are 1..n.
class Graph {
public:
    Graph(int n, std::vector<std::pair<int, int>> edges);
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge(int i, int j) const;
    bool is_connected() const;
    std::vector<int> neighbors(int v) const;

    static Graph cycle(int n);
    static Graph complete(int n);
    static Graph path(int n);
    /// A four-vertex chordal example: edges A={1,2}, B={2,3},
    /// C={3,4}, D={1,4}, E={1,3}.
    static Graph chordal_example();

    /// Edge-list text: first line "n"; then "i j [name]" per edge.
    static Graph parse_edge_list(const std::string& text);
    static Graph from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
    std::string to_dot() const;

private:
    int n_;
    std::vector<Edge> edges_;
    void validate() const;
};

/// Symmetric matrix of polynomials with vertex labels on rows/columns.
class SymMatrix {
public:
    SymMatrix() = default;
    SymMatrix(std::size_t dim, std::vector<int> labels);

    std::size_t dim() const { return dim_; }
    const std::vector<int>& labels() const { return labels_; }
    MPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const MPoly& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * dim_ + j];
    }
    bool is_symmetric() const;

private:
    std::size_t dim_ = 0;
    std::vector<int> labels_;
    std::vector<MPoly> entries_;
};

/// Graph Laplacian with symbolic edge weights; every row sums to zero.
SymMatrix laplacian(const Graph& g);

/// Deletes row and column k (a vertex label, 1-based); other labels kept.
SymMatrix principal_minor(const SymMatrix& m, int k);

/// Exact determinant by Laplace expansion memoized over column subsets.
MPoly symbolic_det(const SymMatrix& m);

/// Sum over spanning trees of the products of their edge variables,
/// enumerated by deletion-contraction. Throws DisconnectedGraph.
MPoly spanning_tree_poly(const Graph& g);

/// Chordality via maximum cardinality search. When chordal, returns a
/// perfect elimination ordering verified against the clique condition.
std::pair<bool, std::optional<std::vector<int>>> is_chordal(const Graph& g);

enum class MLDegreeKind { One, CycleEulerian, Unknown };

struct MLDegreeCertificate {
    MLDegreeKind kind;
    std::optional<long long> ml_degree;           // absent when Unknown
    std::optional<std::vector<int>> elimination_order;  // present when chordal
    std::string note;
};

/// Chordal graphs get degree one; cycles get the closed-form count;
/// everything else is reported unknown (conjectured greater than one).
MLDegreeCertificate ml_degree_certificate(const Graph& g);

}  // namespace homaloidal
