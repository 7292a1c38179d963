#include "gci/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "gci/rng.hpp"

namespace gci {

namespace {

bool connected(int n, const std::vector<std::vector<int>>& adj) {
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                cnt++;
                q.push(w);
            }
        }
    }
    return cnt == n;
}

} // namespace

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 1) throw std::invalid_argument("graph needs at least one agent");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("self-loop");
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n) throw std::invalid_argument("vertex id out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");

    Graph g;
    g.n = n;
    g.edges = std::move(edges);
    g.adj.assign(n, {});
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    if (!connected(g.n, g.adj)) throw std::invalid_argument("graph not connected");
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) return false;
    const auto& nb = adj[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph line_graph(int n) {
    if (n < 1) throw std::invalid_argument("line needs n >= 1");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; i++) es.push_back({i, i + 1});
    return Graph::from_edges(n, es);
}

Graph ring_graph(int n) {
    if (n < 3) throw std::invalid_argument("ring needs n >= 3");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; i++) es.push_back({i, i + 1});
    es.push_back({0, n - 1});
    return Graph::from_edges(n, es);
}

Graph star_graph(int n) {
    if (n < 1) throw std::invalid_argument("star needs n >= 1");
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i < n; i++) es.push_back({0, i});
    return Graph::from_edges(n, es);
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete needs n >= 1");
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++) es.push_back({u, v});
    return Graph::from_edges(n, es);
}

Graph random_tree(int n, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("tree needs n >= 1");
    if (n <= 2) return line_graph(n);
    // Uniform labeled tree from a random Pruefer sequence.
    std::mt19937_64 rng(seed);
    std::vector<int> pruefer(n - 2);
    for (auto& x : pruefer) x = static_cast<int>(bounded(rng, n));
    std::vector<int> deg(n, 1);
    for (int x : pruefer) deg[x]++;
    std::vector<std::pair<int, int>> es;
    // Smallest-leaf decoding with a priority queue.
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; v++)
        if (deg[v] == 1) leaves.push(v);
    for (int x : pruefer) {
        int leaf = leaves.top();
        leaves.pop();
        es.push_back({std::min(leaf, x), std::max(leaf, x)});
        if (--deg[x] == 1) leaves.push(x);
    }
    int a = leaves.top();
    leaves.pop();
    int b = leaves.top();
    es.push_back({std::min(a, b), std::max(a, b)});
    return Graph::from_edges(n, es);
}

Graph random_kregular(int k, int n, uint64_t seed) {
    if (k < 1 || n <= k) throw std::invalid_argument("k-regular needs 1 <= k < n");
    if ((static_cast<int64_t>(n) * k) % 2 != 0)
        throw std::invalid_argument("k-regular needs n*k even");
    // Configuration model: pair up k stubs per agent, reject on loops,
    // multi-edges, or disconnectedness.
    for (uint64_t round = 0; round < 10000; round++) {
        std::mt19937_64 rng(mix_seed(seed, round));
        std::vector<int> stubs;
        stubs.reserve(static_cast<size_t>(n) * k);
        for (int v = 0; v < n; v++)
            for (int i = 0; i < k; i++) stubs.push_back(v);
        for (size_t i = stubs.size(); i > 1; i--)
            std::swap(stubs[i - 1], stubs[bounded(rng, i)]);
        std::vector<std::pair<int, int>> es;
        bool ok = true;
        for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) {
                ok = false;
                break;
            }
            es.push_back({std::min(u, v), std::max(u, v)});
        }
        if (!ok) continue;
        std::sort(es.begin(), es.end());
        if (std::adjacent_find(es.begin(), es.end()) != es.end()) continue;
        try {
            return Graph::from_edges(n, es);
        } catch (const std::invalid_argument&) {
            continue;
        }
    }
    throw std::runtime_error("k-regular generation did not produce a connected simple graph");
}

Graph random_bipartite(int a, int b, double p, uint64_t seed) {
    if (a < 1 || b < 1) throw std::invalid_argument("bipartite needs a,b >= 1");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("bipartite needs p in [0,1]");
    // Parts {0..a-1} and {a..a+b-1}; each cross edge independently with
    // probability p; reject if disconnected.
    for (uint64_t round = 0; round < 100000; round++) {
        std::mt19937_64 rng(mix_seed(seed, round));
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < a; u++)
            for (int v = 0; v < b; v++) {
                double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
                if (x < p) es.push_back({u, a + v});
            }
        try {
            return Graph::from_edges(a + b, es);
        } catch (const std::invalid_argument&) {
            continue;
        }
    }
    throw std::runtime_error("bipartite generation did not produce a connected graph");
}

Graph add_edge(const Graph& g, int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= g.n || v >= g.n)
        throw std::invalid_argument("add-edge: invalid endpoints");
    if (g.has_edge(u, v)) throw std::invalid_argument("add-edge: edge already present");
    auto es = g.edges;
    es.push_back({std::min(u, v), std::max(u, v)});
    return Graph::from_edges(g.n, es);
}

Graph del_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("del-edge: edge not present");
    std::vector<std::pair<int, int>> es;
    auto target = std::make_pair(std::min(u, v), std::max(u, v));
    for (auto e : g.edges)
        if (e != target) es.push_back(e);
    return Graph::from_edges(g.n, es);
}

bool is_tree(const Graph& g) {
    return g.edge_count() == g.n - 1;
}

bool is_ring(const Graph& g) {
    if (g.n < 3) return false;
    for (int v = 0; v < g.n; v++)
        if (g.degree(v) != 2) return false;
    return true;
}

bool is_line(const Graph& g) {
    if (g.n == 1) return true;
    int ends = 0;
    for (int v = 0; v < g.n; v++) {
        int d = g.degree(v);
        if (d > 2) return false;
        if (d == 1) ends++;
    }
    return ends == 2;
}

bool is_star(const Graph& g) {
    if (g.n <= 2) return true;
    int hubs = 0, leaves = 0;
    for (int v = 0; v < g.n; v++) {
        int d = g.degree(v);
        if (d == g.n - 1) hubs++;
        else if (d == 1) leaves++;
    }
    return hubs == 1 && leaves == g.n - 1;
}

bool is_kregular(const Graph& g, int k) {
    for (int v = 0; v < g.n; v++)
        if (g.degree(v) != k) return false;
    return true;
}

bool is_bipartite(const Graph& g) {
    std::vector<int> color(g.n, -1);
    std::queue<int> q;
    color[0] = 0;
    q.push(0);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.adj[v]) {
            if (color[w] == -1) {
                color[w] = color[v] ^ 1;
                q.push(w);
            } else if (color[w] == color[v]) {
                return false;
            }
        }
    }
    return true;
}

Graph parse_graph_file(const std::string& text) {
    std::istringstream in(text);
    int n, m;
    if (!(in >> n >> m)) throw std::invalid_argument("malformed header");
    if (n < 1 || m < 0) throw std::invalid_argument("malformed header");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < m; i++) {
        int u, v;
        if (!(in >> u >> v)) throw std::invalid_argument("truncated edge list");
        if (u >= v) throw std::invalid_argument("edges must satisfy u < v");
        es.push_back({u, v});
    }
    int extra;
    if (in >> extra) throw std::invalid_argument("trailing data after edge list");
    return Graph::from_edges(n, es);
}

std::string write_graph_file(const Graph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
    return out.str();
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph_file(buf.str());
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

int to_int(const std::string& s) {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad integer: " + s);
    return v;
}

uint64_t to_u64(const std::string& s) {
    size_t pos = 0;
    uint64_t v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad integer: " + s);
    return v;
}

Graph parse_base_spec(const std::string& spec) {
    auto parts = split(spec, ':');
    const auto& kind = parts[0];
    auto want = [&](size_t k) {
        if (parts.size() != k + 1)
            throw std::invalid_argument("graph spec '" + kind + "' takes " +
                                        std::to_string(k) + " arguments");
    };
    if (kind == "line") {
        want(1);
        return line_graph(to_int(parts[1]));
    }
    if (kind == "ring") {
        want(1);
        return ring_graph(to_int(parts[1]));
    }
    if (kind == "star") {
        want(1);
        return star_graph(to_int(parts[1]));
    }
    if (kind == "complete") {
        want(1);
        return complete_graph(to_int(parts[1]));
    }
    if (kind == "tree") {
        want(2);
        return random_tree(to_int(parts[1]), to_u64(parts[2]));
    }
    if (kind == "kregular") {
        want(3);
        return random_kregular(to_int(parts[1]), to_int(parts[2]), to_u64(parts[3]));
    }
    if (kind == "bipartite") {
        want(4);
        return random_bipartite(to_int(parts[1]), to_int(parts[2]), std::stod(parts[3]),
                                to_u64(parts[4]));
    }
    if (kind == "file") {
        if (parts.size() < 2) throw std::invalid_argument("file spec needs a path");
        return load_graph_file(spec.substr(5));
    }
    throw std::invalid_argument("unknown graph family: " + kind);
}

} // namespace

Graph parse_graph_spec(const std::string& spec) {
    auto chunks = split(spec, '+');
    Graph g = parse_base_spec(chunks[0]);
    for (size_t i = 1; i < chunks.size(); i++) {
        auto parts = split(chunks[i], ':');
        if (parts.size() != 3)
            throw std::invalid_argument("mutation needs op:u:v, got: " + chunks[i]);
        int u = to_int(parts[1]), v = to_int(parts[2]);
        if (parts[0] == "add-edge") g = add_edge(g, u, v);
        else if (parts[0] == "del-edge") g = del_edge(g, u, v);
        else throw std::invalid_argument("unknown mutation: " + parts[0]);
    }
    return g;
}

} // namespace gci
