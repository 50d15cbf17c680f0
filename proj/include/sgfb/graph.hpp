#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sgfb/errors.hpp"

namespace sgfb {

struct Edge {
  int u;
  int v;
  double w;
};

// Weighted undirected graph without self-loops. Adjacency is kept dense;
// target sizes are a few thousand vertices.
class Graph {
 public:
  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int size() const { return n_; }
  const Eigen::MatrixXd& adjacency() const { return adjacency_; }
  const std::vector<Edge>& edges() const { return edges_; }

  Eigen::VectorXd degrees() const { return adjacency_.rowwise().sum(); }

  // Breadth-first reachability from vertex 0 covers all vertices.
  bool connected() const;

 private:
  Graph(int n, std::vector<Edge> edges, Eigen::MatrixXd adjacency)
      : n_(n), edges_(std::move(edges)), adjacency_(std::move(adjacency)) {}

  int n_ = 0;
  std::vector<Edge> edges_;
  Eigen::MatrixXd adjacency_;
};

struct SensorGraphParams {
  int knn = 6;
  int max_attempts = 100;
};

struct CommunityGraphParams {
  double p_intra = 0.3;
  double p_inter = 0.01;
  int max_attempts = 100;
};

// n points uniform in the unit square, symmetrized k-nearest-neighbor edges
// with Gaussian weights exp(-d^2 / 2 theta^2), theta = mean k-NN distance.
// Re-draws the placement until the graph is connected.
Graph random_sensor_graph(int n, std::uint64_t seed, const SensorGraphParams& params = {});

// Contiguous blocks of vertices per community, unit-weight Bernoulli edges
// with separate intra/inter probabilities. Retries until connected.
Graph random_community_graph(int n, int n_communities, std::uint64_t seed,
                             const CommunityGraphParams& params = {});

// Edge-list text format: one "u v w" triple per line, 0-indexed,
// '#' starts a comment; each undirected edge stored once.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace sgfb
