#include "sgfb/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

#include "sgfb/rng.hpp"

namespace sgfb {

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "vertex count must be positive");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw Error(ErrorCode::IndexOutOfRange,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range");
    if (e.u == e.v)
      throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
    if (e.w < 0.0)
      throw Error(ErrorCode::NegativeWeight, "negative weight on edge (" + std::to_string(e.u) +
                                                 "," + std::to_string(e.v) + ")");
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second)
      throw Error(ErrorCode::DuplicateEdge, "duplicate edge (" + std::to_string(e.u) + "," +
                                                std::to_string(e.v) + ")");
    a(e.u, e.v) = e.w;
    a(e.v, e.u) = e.w;
  }
  return Graph(n, edges, std::move(a));
}

bool Graph::connected() const {
  std::vector<char> seen(n_, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int count = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v = 0; v < n_; ++v) {
      if (adjacency_(u, v) > 0.0 && !seen[v]) {
        seen[v] = 1;
        ++count;
        queue.push_back(v);
      }
    }
  }
  return count == n_;
}

Graph random_sensor_graph(int n, std::uint64_t seed, const SensorGraphParams& params) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "sensor graph needs n >= 2");
  const int k = std::min(params.knn, n - 1);
  for (int attempt = 0; attempt < params.max_attempts; ++attempt) {
    Rng rng = Rng::derived(seed, static_cast<std::uint64_t>(attempt));
    std::vector<double> xs(n), ys(n);
    for (int i = 0; i < n; ++i) {
      xs[i] = rng.uniform();
      ys[i] = rng.uniform();
    }
    // k nearest neighbors per vertex, ties by lower index
    std::vector<std::vector<int>> nbrs(n);
    double dist_sum = 0.0;
    for (int i = 0; i < n; ++i) {
      std::vector<std::pair<double, int>> cand;
      cand.reserve(n - 1);
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        double dx = xs[i] - xs[j], dy = ys[i] - ys[j];
        cand.emplace_back(std::sqrt(dx * dx + dy * dy), j);
      }
      std::partial_sort(cand.begin(), cand.begin() + k, cand.end());
      for (int m = 0; m < k; ++m) {
        nbrs[i].push_back(cand[m].second);
        dist_sum += cand[m].first;
      }
    }
    const double theta = dist_sum / (static_cast<double>(n) * k);
    std::set<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j : nbrs[i]) pairs.insert(std::minmax(i, j));
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs) {
      double dx = xs[u] - xs[v], dy = ys[u] - ys[v];
      double d2 = dx * dx + dy * dy;
      edges.push_back({u, v, std::exp(-d2 / (2.0 * theta * theta))});
    }
    Graph g = Graph::from_edges(n, edges);
    if (g.connected()) return g;
  }
  throw Error(ErrorCode::ConnectivityFailure,
              "sensor graph not connected after " + std::to_string(params.max_attempts) +
                  " attempts");
}

Graph random_community_graph(int n, int n_communities, std::uint64_t seed,
                             const CommunityGraphParams& params) {
  if (n_communities < 1 || n < n_communities)
    throw Error(ErrorCode::InvalidArgument, "need n >= n_communities >= 1");
  // contiguous blocks, first (n % c) blocks one vertex larger
  std::vector<int> community(n);
  {
    int base = n / n_communities, extra = n % n_communities, v = 0;
    for (int c = 0; c < n_communities; ++c) {
      int sz = base + (c < extra ? 1 : 0);
      for (int i = 0; i < sz; ++i) community[v++] = c;
    }
  }
  for (int attempt = 0; attempt < params.max_attempts; ++attempt) {
    Rng rng = Rng::derived(seed, static_cast<std::uint64_t>(attempt));
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        double p = community[u] == community[v] ? params.p_intra : params.p_inter;
        if (rng.uniform() < p) edges.push_back({u, v, 1.0});
      }
    }
    Graph g = Graph::from_edges(n, edges);
    if (g.connected()) return g;
  }
  throw Error(ErrorCode::ConnectivityFailure,
              "community graph not connected after " + std::to_string(params.max_attempts) +
                  " attempts");
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<Edge> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "n") {
      if (!(ls >> n)) throw Error(ErrorCode::IoError, "bad vertex count at line " + std::to_string(lineno));
      continue;
    }
    Edge e;
    try {
      e.u = std::stoi(tag);
    } catch (const std::exception&) {
      throw Error(ErrorCode::IoError, "bad edge line " + std::to_string(lineno));
    }
    if (!(ls >> e.v >> e.w))
      throw Error(ErrorCode::IoError, "bad edge line " + std::to_string(lineno));
    edges.push_back(e);
  }
  if (n < 0) {
    for (const Edge& e : edges) n = std::max({n, e.u + 1, e.v + 1});
  }
  if (n < 1) throw Error(ErrorCode::IoError, "empty edge list");
  return Graph::from_edges(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# sgfb edge list\n";
  out << "n " << g.size() << "\n";
  char buf[64];
  for (const Edge& e : g.edges()) {
    std::snprintf(buf, sizeof(buf), "%d %d %.17g\n", e.u, e.v, e.w);
    out << buf;
  }
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
  write_edge_list(out, g);
}

}  // namespace sgfb
