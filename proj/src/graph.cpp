#include "vnlab/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <random>
#include <set>
#include <sstream>

#include "vnlab/errors.hpp"

namespace vnlab {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                        bool allow_disconnected) {
  if (n < 1) throw input_error("graph needs at least one node");
  Graph g;
  g.n_ = n;
  g.adj_ = Matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw input_error("edge index out of range");
    if (u == v) throw input_error("self-loop not allowed");
    g.adj_(u, v) = 1.0;
    g.adj_(v, u) = 1.0;
  }
  g.finalize();
  if (!allow_disconnected && !g.connected_)
    throw input_error("graph is disconnected");
  return g;
}

void Graph::finalize() {
  degrees_.assign(n_, 0);
  edges_.clear();
  neighbors_.assign(n_, {});
  int diag = 0;
  for (int i = 0; i < n_; ++i) {
    int deg = 0;
    for (int j = 0; j < n_; ++j) {
      if (adj_(i, j) == 0.0) continue;
      deg += 1;
      neighbors_[i].push_back(j);
      if (i < j) edges_.emplace_back(i, j);
      if (i == j) {
        edges_.emplace_back(i, i);
        diag += 1;
      }
    }
    degrees_[i] = deg;
  }
  int off = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && adj_(i, j) != 0.0) off += 1;
  edge_count_ = off / 2 + diag;

  const std::vector<int> dist = bfs_distances(0);
  connected_ = std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

Matrix Graph::laplacian() const {
  Matrix l(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    double rowsum = 0.0;
    for (int j = 0; j < n_; ++j) rowsum += adj_(i, j);
    for (int j = 0; j < n_; ++j) l(i, j) = -adj_(i, j);
    l(i, i) += rowsum;
  }
  return l;
}

std::vector<int> Graph::bfs_distances(int from) const {
  if (from < 0 || from >= n_) throw input_error("bfs start node out of range");
  std::vector<int> dist(n_, -1);
  std::queue<int> q;
  dist[from] = 0;
  q.push(from);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int v : neighbors_[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

GenSpec::Kind parse_kind(const std::string& name) {
  if (name == "path") return GenSpec::Kind::path;
  if (name == "cycle") return GenSpec::Kind::cycle;
  if (name == "star") return GenSpec::Kind::star;
  if (name == "complete") return GenSpec::Kind::complete;
  if (name == "grid") return GenSpec::Kind::grid;
  if (name == "er" || name == "erdos-renyi") return GenSpec::Kind::erdos_renyi;
  throw input_error("unknown graph kind: " + name);
}

std::string kind_name(GenSpec::Kind kind) {
  switch (kind) {
    case GenSpec::Kind::path: return "path";
    case GenSpec::Kind::cycle: return "cycle";
    case GenSpec::Kind::star: return "star";
    case GenSpec::Kind::complete: return "complete";
    case GenSpec::Kind::grid: return "grid";
    case GenSpec::Kind::erdos_renyi: return "erdos-renyi";
  }
  return "?";
}

namespace {

std::vector<std::pair<int, int>> er_sample(int n, double p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (unif(rng) < p) edges.emplace_back(i, j);
  return edges;
}

}  // namespace

Graph generate(const GenSpec& spec) {
  using Kind = GenSpec::Kind;
  if (spec.kind == Kind::grid) {
    if (spec.rows < 1 || spec.cols < 1 || spec.rows * spec.cols < 2)
      throw input_error("grid needs rows*cols >= 2");
  } else if (spec.n < 2) {
    throw input_error("generator needs n >= 2");
  }

  std::vector<std::pair<int, int>> edges;
  switch (spec.kind) {
    case Kind::path:
      for (int i = 0; i + 1 < spec.n; ++i) edges.emplace_back(i, i + 1);
      break;
    case Kind::cycle:
      if (spec.n < 3) throw input_error("cycle needs n >= 3");
      for (int i = 0; i + 1 < spec.n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(spec.n - 1, 0);
      break;
    case Kind::star:
      for (int i = 1; i < spec.n; ++i) edges.emplace_back(0, i);
      break;
    case Kind::complete:
      for (int i = 0; i < spec.n; ++i)
        for (int j = i + 1; j < spec.n; ++j) edges.emplace_back(i, j);
      break;
    case Kind::grid: {
      const int r = spec.rows, c = spec.cols;
      auto id = [c](int i, int j) { return i * c + j; };
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
          if (j + 1 < c) edges.emplace_back(id(i, j), id(i, j + 1));
          if (i + 1 < r) edges.emplace_back(id(i, j), id(i + 1, j));
        }
      return Graph::from_edges(r * c, edges);
    }
    case Kind::erdos_renyi: {
      if (!(spec.p > 0.0 && spec.p <= 1.0))
        throw input_error("erdos-renyi probability must be in (0, 1]");
      std::mt19937_64 rng(spec.seed);
      for (int attempt = 0; attempt < 1000; ++attempt) {
        auto sampled = er_sample(spec.n, spec.p, rng);
        Graph g = Graph::from_edges(spec.n, sampled, /*allow_disconnected=*/true);
        if (g.connected()) return g;
      }
      throw numeric_error("erdos-renyi: no connected sample within 1000 attempts");
    }
  }
  return Graph::from_edges(spec.n, edges);
}

Graph load_edge_list(std::istream& in) {
  std::vector<std::pair<int, int>> edges;
  std::string line;
  int line_no = 0;
  int max_idx = -1;
  std::set<std::pair<int, int>> seen;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long u, v;
    if (!(ls >> u)) continue;  // blank or comment-only line
    if (!(ls >> v)) throw input_error("line " + std::to_string(line_no) + ": expected \"u v\"");
    std::string trailing;
    if (ls >> trailing)
      throw input_error("line " + std::to_string(line_no) + ": trailing token \"" + trailing + "\"");
    if (u < 0 || v < 0)
      throw input_error("line " + std::to_string(line_no) + ": negative node index");
    if (u == v) throw input_error("line " + std::to_string(line_no) + ": self-loop " +
                                  std::to_string(u) + " " + std::to_string(v));
    if (u > 5000 || v > 5000)
      throw input_error("line " + std::to_string(line_no) +
                        ": node index too large for the dense backend");
    auto e = std::minmax(static_cast<int>(u), static_cast<int>(v));
    if (seen.insert({e.first, e.second}).second) edges.emplace_back(e.first, e.second);
    max_idx = std::max(max_idx, e.second);
  }
  if (edges.empty()) throw input_error("edge list is empty");
  return Graph::from_edges(max_idx + 1, edges, /*allow_disconnected=*/true);
}

Graph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  return load_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

Graph augment_with_vn(const Graph& g) {
  if (g.has_vn()) throw input_error("graph is already VN-augmented");
  const int n = g.node_count();
  Graph a;
  a.n_ = n + 1;
  a.adj_ = Matrix(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(n + 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.adj_(i, j) = g.adjacency()(i, j);
  for (int i = 0; i < n; ++i) {
    a.adj_(i, n) = 1.0;
    a.adj_(n, i) = 1.0;
  }
  a.adj_(n, n) = 1.0;  // the corner entry of the augmented block matrix
  a.has_vn_ = true;
  a.finalize();
  return a;
}

}  // namespace vnlab
