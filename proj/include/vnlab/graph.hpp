#ifndef VNLAB_GRAPH_HPP
#define VNLAB_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "vnlab/linalg.hpp"

namespace vnlab {

// Undirected simple graph with dense adjacency. The only self-loop ever
// allowed is the one created on the virtual node by augment_with_vn.
class Graph {
 public:
  // edges are unordered pairs, 0-indexed; duplicates are collapsed.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                          bool allow_disconnected = false);

  int node_count() const { return n_; }

  // Unordered edge count; a self-loop counts once.
  int edge_count() const { return edge_count_; }

  // |E| term used in commute-time formulas: the VN self-loop is excluded,
  // so an augmented graph contributes |E| + n.
  int commute_edge_count() const { return has_vn_ ? edge_count_ - 1 : edge_count_; }

  const Matrix& adjacency() const { return adj_; }
  const std::vector<int>& degrees() const { return degrees_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<std::vector<int>>& neighbors() const { return neighbors_; }

  bool has_vn() const { return has_vn_; }
  bool connected() const { return connected_; }

  // L = D - A with D the diagonal of adjacency row sums.
  Matrix laplacian() const;

  // Hop distances from `from`; unreachable nodes get -1.
  std::vector<int> bfs_distances(int from) const;

 private:
  friend Graph augment_with_vn(const Graph& g);

  void finalize();

  int n_ = 0;
  int edge_count_ = 0;
  bool has_vn_ = false;
  bool connected_ = false;
  Matrix adj_;
  std::vector<int> degrees_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> neighbors_;
};

struct GenSpec {
  enum class Kind { path, cycle, star, complete, grid, erdos_renyi };
  Kind kind = Kind::path;
  int n = 2;          // node count (path, cycle, star, complete, erdos_renyi)
  int rows = 2;       // grid only
  int cols = 2;       // grid only
  double p = 0.5;     // erdos_renyi edge probability, in (0, 1]
  std::uint64_t seed = 0;
};

GenSpec::Kind parse_kind(const std::string& name);
std::string kind_name(GenSpec::Kind kind);

// Deterministic per spec; ER graphs are resampled until connected
// (at most 1000 attempts).
Graph generate(const GenSpec& spec);

// Edge-list text: one "u v" pair per line, '#' starts a comment line,
// blank lines ignored. n is inferred as max index + 1. Self-loops are
// rejected; duplicate edges collapse. Disconnected graphs load fine and
// are only rejected later by spectral routines.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);

void write_edge_list(const Graph& g, std::ostream& out);

// Returns the graph on n+1 nodes with the block adjacency [[A, 1],[1^T, 1]]:
// the new node is adjacent to every original node and carries a unit
// self-loop. Its Laplacian is [[L + I, -1],[-1^T, n]].
Graph augment_with_vn(const Graph& g);

}  // namespace vnlab

#endif
