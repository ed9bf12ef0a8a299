#include "homaloidal/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace homaloidal {

namespace {

std::string default_edge_var(int i, int j) {
    return "x_" + std::to_string(i) + "_" + std::to_string(j);
}

}  // namespace

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    for (auto [i, j] : edges) {
        if (i > j) std::swap(i, j);
        edges_.push_back({i, j, default_edge_var(i, j)});
    }
    validate();
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    for (auto& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.var.empty()) e.var = default_edge_var(e.u, e.v);
    }
    validate();
}

void Graph::validate() const {
    if (n_ < 1) throw std::invalid_argument("graph needs at least one vertex");
    std::set<std::pair<int, int>> seen;
    std::set<std::string> names;
    for (const auto& e : edges_) {
        if (e.u < 1 || e.v > n_ || e.u == e.v)
            throw std::invalid_argument("bad edge {" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + "}");
        if (!seen.insert({e.u, e.v}).second)
            throw std::invalid_argument("duplicate edge");
        if (!names.insert(e.var).second)
            throw std::invalid_argument("duplicate edge variable '" + e.var + "'");
    }
}

bool Graph::has_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::any_of(edges_.begin(), edges_.end(),
                       [&](const Edge& e) { return e.u == i && e.v == j; });
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (const auto& e : edges_) {
        if (e.u == v) out.push_back(e.v);
        if (e.v == v) out.push_back(e.u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool Graph::is_connected() const {
    if (n_ == 1) return true;
    std::vector<bool> seen(n_ + 1, false);
    std::vector<int> stack{1};
    seen[1] = true;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : neighbors(v))
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n_;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(1, n);
    return Graph(n, e);
}

Graph Graph::complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph Graph::path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph Graph::chordal_example() {
    return Graph(4, std::vector<Edge>{{1, 2, "x_A"},
                                      {2, 3, "x_B"},
                                      {3, 4, "x_C"},
                                      {1, 4, "x_D"},
                                      {1, 3, "x_E"}});
}

Graph Graph::parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n)) continue;
            continue;
        }
        int i, j;
        if (!(ls >> i >> j)) continue;
        std::string name;
        ls >> name;
        edges.push_back({i, j, name});
    }
    if (n < 0) throw std::invalid_argument("edge list: missing vertex count");
    return Graph(n, edges);
}

Graph Graph::from_json(const nlohmann::json& j) {
    int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        Edge edge{e.at(0).get<int>(), e.at(1).get<int>(), ""};
        if (e.size() > 2) edge.var = e.at(2).get<std::string>();
        edges.push_back(edge);
    }
    return Graph(n, edges);
}

nlohmann::json Graph::to_json() const {
    nlohmann::json j;
    j["n"] = n_;
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : edges_) edges.push_back({e.u, e.v, e.var});
    j["edges"] = edges;
    return j;
}

std::string Graph::to_dot() const {
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 1; v <= n_; ++v) os << "  " << v << ";\n";
    for (const auto& e : edges_)
        os << "  " << e.u << " -- " << e.v << " [label=\"" << e.var << "\"];\n";
    os << "}\n";
    return os.str();
}

SymMatrix::SymMatrix(std::size_t dim, std::vector<int> labels)
    : dim_(dim), labels_(std::move(labels)), entries_(dim * dim) {}

bool SymMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

SymMatrix laplacian(const Graph& g) {
    std::size_t n = g.vertex_count();
    std::vector<int> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<int>(i) + 1;
    SymMatrix m(n, labels);
    for (const auto& e : g.edges()) {
        MPoly x = MPoly::variable(e.var);
        std::size_t i = e.u - 1, j = e.v - 1;
        m(i, i) = m(i, i) + x;
        m(j, j) = m(j, j) + x;
        m(i, j) = m(i, j) - x;
        m(j, i) = m(j, i) - x;
    }
    return m;
}

SymMatrix principal_minor(const SymMatrix& m, int k) {
    auto it = std::find(m.labels().begin(), m.labels().end(), k);
    if (it == m.labels().end())
        throw std::out_of_range("principal_minor: no row/column labeled " +
                                std::to_string(k));
    std::size_t drop = it - m.labels().begin();
    std::vector<int> labels;
    for (std::size_t i = 0; i < m.dim(); ++i)
        if (i != drop) labels.push_back(m.labels()[i]);
    SymMatrix out(m.dim() - 1, labels);
    for (std::size_t i = 0, r = 0; i < m.dim(); ++i) {
        if (i == drop) continue;
        for (std::size_t j = 0, c = 0; j < m.dim(); ++j) {
            if (j == drop) continue;
            out(r, c++) = m(i, j);
        }
        ++r;
    }
    return out;
}

MPoly symbolic_det(const SymMatrix& m) {
    std::size_t n = m.dim();
    if (n == 0) return MPoly(Rational(1));
    if (n > 31) throw std::domain_error("symbolic_det: matrix too large");
    // minors[mask] = det of the submatrix on the last popcount(mask) rows
    // and the column set given by mask.
    std::map<unsigned, MPoly> memo;
    auto rec = [&](auto&& self, unsigned mask) -> MPoly {
        if (mask == 0) return MPoly(Rational(1));
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        std::size_t size = __builtin_popcount(mask);
        std::size_t row = n - size;
        MPoly acc;
        int sign = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(mask & (1u << j))) continue;
            const MPoly& entry = m(row, j);
            if (!entry.is_zero()) {
                MPoly sub = self(self, mask & ~(1u << j));
                MPoly t = entry * sub;
                acc = (sign > 0) ? acc + t : acc - t;
            }
            sign = -sign;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return rec(rec, (n == 32) ? 0xffffffffu : ((1u << n) - 1));
}

namespace {

// Multigraph on contracted vertex classes; parallel edges keep their own
// variables, self-loops are dropped.
struct ContractState {
    int n;                     // live vertex classes
    std::vector<int> parent;   // union-find
    std::vector<Edge> edges;

    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
};

bool multigraph_connected(ContractState& st) {
    std::set<int> roots;
    for (std::size_t v = 1; v < st.parent.size(); ++v) roots.insert(st.find(v));
    if (roots.size() == 1) return true;
    std::map<int, int> comp;
    int idx = 0;
    for (int r : roots) comp[r] = idx++;
    std::vector<std::set<int>> adj(roots.size());
    for (const auto& e : st.edges) {
        int a = comp[st.find(e.u)], b = comp[st.find(e.v)];
        if (a != b) {
            adj[a].insert(b);
            adj[b].insert(a);
        }
    }
    std::vector<bool> seen(roots.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == roots.size();
}

void enumerate_trees(ContractState st, MPoly chosen, MPoly& total) {
    // drop self-loops
    std::vector<Edge> live;
    for (const auto& e : st.edges)
        if (st.find(e.u) != st.find(e.v)) live.push_back(e);
    st.edges = std::move(live);

    std::set<int> roots;
    for (std::size_t v = 1; v < st.parent.size(); ++v) roots.insert(st.find(v));
    if (roots.size() == 1) {
        total = total + chosen;
        return;
    }
    if (!multigraph_connected(st)) return;  // connectivity cutoff

    Edge e = st.edges.front();

    // contract e: trees through e
    ContractState with = st;
    with.parent[with.find(e.v)] = with.find(e.u);
    with.edges.erase(with.edges.begin());
    enumerate_trees(std::move(with), chosen * MPoly::variable(e.var), total);

    // delete e: trees avoiding e
    ContractState without = st;
    without.edges.erase(without.edges.begin());
    enumerate_trees(std::move(without), chosen, total);
}

}  // namespace

MPoly spanning_tree_poly(const Graph& g) {
    if (!g.is_connected()) throw DisconnectedGraph();
    if (g.vertex_count() == 1) return MPoly(Rational(1));
    ContractState st;
    st.n = g.vertex_count();
    st.parent.resize(st.n + 1);
    for (int v = 0; v <= st.n; ++v) st.parent[v] = v;
    st.edges = g.edges();
    MPoly total;
    enumerate_trees(std::move(st), MPoly(Rational(1)), total);
    return total;
}

std::pair<bool, std::optional<std::vector<int>>> is_chordal(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::set<int>> adj(n + 1);
    for (const auto& e : g.edges()) {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }

    // Maximum cardinality search; the reverse visiting order is a perfect
    // elimination ordering iff the graph is chordal.
    std::vector<int> weight(n + 1, 0), order;
    std::vector<bool> visited(n + 1, false);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 1; v <= n; ++v)
            if (!visited[v] && (best == -1 || weight[v] > weight[best])) best = v;
        visited[best] = true;
        order.push_back(best);
        for (int w : adj[best])
            if (!visited[w]) ++weight[w];
    }
    std::vector<int> peo(order.rbegin(), order.rend());

    // Verify the clique condition from scratch: the later neighbors of each
    // vertex must be pairwise adjacent.
    std::vector<int> pos(n + 1);
    for (int i = 0; i < n; ++i) pos[peo[i]] = i;
    for (int i = 0; i < n; ++i) {
        std::vector<int> later;
        for (int w : adj[peo[i]])
            if (pos[w] > i) later.push_back(w);
        for (std::size_t a = 0; a < later.size(); ++a)
            for (std::size_t b = a + 1; b < later.size(); ++b)
                if (!adj[later[a]].count(later[b])) return {false, std::nullopt};
    }
    return {true, peo};
}

namespace {

bool is_cycle_graph(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3 || static_cast<int>(g.edges().size()) != n) return false;
    for (int v = 1; v <= n; ++v)
        if (g.neighbors(v).size() != 2) return false;
    return g.is_connected();
}

}  // namespace

MLDegreeCertificate ml_degree_certificate(const Graph& g) {
    if (!g.is_connected()) throw DisconnectedGraph();
    auto [chordal, peo] = is_chordal(g);
    if (chordal)
        return {MLDegreeKind::One, 1, peo, "chordal graph: ML degree one for every k"};
    if (is_cycle_graph(g)) {
        int n = g.vertex_count();
        long long deg = (1LL << (n - 1)) - n;
        return {MLDegreeKind::CycleEulerian, deg, std::nullopt,
                "cycle graph: ML degree 2^(n-1) - n"};
    }
    return {MLDegreeKind::Unknown, std::nullopt, std::nullopt,
            "not chordal, not a cycle; conjectured ML degree > 1"};
}

}  // namespace homaloidal
