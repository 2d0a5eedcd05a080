#include "osint/network.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <sstream>

#include "osint/errors.hpp"

namespace osint {

int SocialGraph::add_node(const std::string& id) {
    auto it = index_.find(id);
    if (it != index_.end()) return it->second;
    const int idx = static_cast<int>(ids_.size());
    ids_.push_back(id);
    index_.emplace(id, idx);
    adj_.emplace_back();
    return idx;
}

void SocialGraph::add_edge(const std::string& u, const std::string& v) {
    add_edge(add_node(u), add_node(v));
}

void SocialGraph::add_edge(int u, int v) {
    if (u == v) throw ValidationError("graph: self-loop on node '" + ids_[u] + "'");
    auto insert_sorted = [](std::vector<int>& vec, int value) {
        auto pos = std::lower_bound(vec.begin(), vec.end(), value);
        if (pos == vec.end() || *pos != value) vec.insert(pos, value);
    };
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
}

bool SocialGraph::has_edge(int u, int v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int SocialGraph::edge_count() const {
    int total = 0;
    for (const auto& nbrs : adj_) total += static_cast<int>(nbrs.size());
    return total / 2;
}

int SocialGraph::index_of(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
}

std::vector<int> SocialGraph::bfs_distances(int source) const {
    std::vector<int> dist(ids_.size(), -1);
    dist[source] = 0;
    std::deque<int> queue{source};
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v : adj_[u]) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

SocialGraph parse_edge_list(std::istream& in) {
    SocialGraph g;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        std::string u, v, extra;
        if (!(fields >> u >> v) || (fields >> extra))
            throw ValidationError("edge list line " + std::to_string(lineno) +
                                  ": expected exactly two node ids");
        g.add_edge(u, v);
    }
    return g;
}

SocialGraph read_edge_list(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw IoError("cannot open edge list '" + path + "'");
    return parse_edge_list(file);
}

void validate(const NetworkParams& p) {
    if (p.kappa < 0.0) throw ValidationError("network: kappa must be >= 0");
    if (!(p.q_max > 0.0 && p.q_max <= 1.0))
        throw ValidationError("network: q_max must lie in (0, 1]");
    if (!(p.q0 >= 0.0 && p.q0 < p.q_max))
        throw ValidationError("network: q0 must lie in [0, q_max)");
}

double closeness(const SocialGraph& g, int node) {
    const int n = g.node_count();
    if (n < 2) throw ValidationError("closeness: graph needs at least two nodes");
    const std::vector<int> dist = g.bfs_distances(node);
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
        if (j == node || dist[j] <= 0) continue;  // unreachable contributes 0
        sum += 1.0 / dist[j];
    }
    return sum / (n - 1);
}

double degree_effect(double degree, double closeness_value, const NetworkParams& p) {
    return p.theta0 + p.theta1 * std::log1p(degree) + p.theta2 * closeness_value;
}

double attention(double degree_effect_value, bool verified, double delay,
                 const NetworkParams& p) {
    const double quality = verified ? p.q_max : p.q0;
    return degree_effect_value * quality * std::exp(-p.kappa * delay);
}

std::vector<double> split_attention(const std::vector<double>& raw, double pool) {
    double total = 0.0;
    for (double r : raw) total += r;
    std::vector<double> alloc(raw.size(), 0.0);
    if (total <= 0.0) return alloc;
    for (std::size_t i = 0; i < raw.size(); ++i) alloc[i] = pool * raw[i] / total;
    return alloc;
}

}  // namespace osint
