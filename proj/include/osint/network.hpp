#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace osint {

/// Undirected follower/verification network. No self-loops, no duplicate
/// edges; adding an existing edge is a no-op.
class SocialGraph {
public:
    /// Returns the node index, creating the node when absent.
    int add_node(const std::string& id);
    /// Adds an undirected edge, creating endpoints as needed. Self-loops are
    /// rejected with ValidationError.
    void add_edge(const std::string& u, const std::string& v);
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    int node_count() const { return static_cast<int>(ids_.size()); }
    int edge_count() const;
    /// -1 when the id is unknown.
    int index_of(const std::string& id) const;
    const std::string& id_of(int idx) const { return ids_[idx]; }
    int degree(int idx) const { return static_cast<int>(adj_[idx].size()); }
    const std::vector<int>& neighbors(int idx) const { return adj_[idx]; }

    /// Unweighted shortest-path distances from source; -1 marks unreachable.
    std::vector<int> bfs_distances(int source) const;

private:
    std::vector<std::string> ids_;
    std::map<std::string, int> index_;
    std::vector<std::vector<int>> adj_;  // sorted, unique
};

/// Edge-list text: one "u v" pair per line; blank lines and lines starting
/// with '#' are skipped.
SocialGraph parse_edge_list(std::istream& in);
SocialGraph read_edge_list(const std::string& path);  // throws IoError

struct NetworkParams {
    double theta0 = 0.1;   // baseline attention
    double theta1 = 0.42;  // log-degree coefficient
    double theta2 = 0.38;  // closeness coefficient
    double kappa = 0.4;    // timeliness decay rate per step
    double q_max = 1.0;    // verified quality, in (0, 1]
    double q0 = 0.4;       // unverified quality, in [0, q_max)

    bool operator==(const NetworkParams&) const = default;
};

void validate(const NetworkParams& p);  // throws ValidationError

/// Mean inverse shortest-path distance to all other nodes; unreachable nodes
/// contribute 0, so disconnected graphs are handled gracefully. Throws
/// ValidationError on graphs with fewer than two nodes.
double closeness(const SocialGraph& g, int node);

/// g(d) = theta0 + theta1*ln(1 + d) + theta2*C
double degree_effect(double degree, double closeness_value, const NetworkParams& p);

/// A = g(d) * Q * exp(-kappa * t) with Q = q_max when verified, q0 otherwise.
double attention(double degree_effect_value, bool verified, double delay,
                 const NetworkParams& p);

/// Proportional allocation of the pool over raw attention weights, preserving
/// input order. A zero raw sum allocates 0 to everyone.
std::vector<double> split_attention(const std::vector<double>& raw, double pool);

}  // namespace osint
