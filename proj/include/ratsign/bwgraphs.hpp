#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace ratsign {

using Partition = std::vector<int>;

enum class Color : std::uint8_t { white, black };
inline Color opposite(Color c) { return c == Color::white ? Color::black : Color::white; }
std::string to_string(Color c);

// Upper member of a conjugate pair of trees hanging off a real vertex. The
// root is the vertex adjacent to the real vertex; children are listed
// counterclockwise starting after the edge to the parent.
struct PlaneTree {
    Color root_color = Color::white;
    std::vector<PlaneTree> children;

    bool operator==(const PlaneTree& o) const;
    bool operator<(const PlaneTree& o) const;
};

PlaneTree mirror(const PlaneTree& t);
std::string to_string(const PlaneTree& t);

struct RealVertex {
    // Trees in the upper half plane, counterclockwise from the rightward real
    // direction.
    std::vector<PlaneTree> forest;
    bool operator==(const RealVertex& o) const { return forest == o.forest; }
};

struct RealBwGraph {
    Color first_color = Color::white;
    std::vector<RealVertex> real_vertices;
    int cycle_pos = 1;  // the cycle joins real vertices cycle_pos and cycle_pos + 1 (1-based)

    bool operator==(const RealBwGraph& o) const = default;
    bool operator<(const RealBwGraph& o) const;

    int size() const { return static_cast<int>(real_vertices.size()); }
    // Indices below are 0-based positions on the real line.
    Color color(int i) const { return i % 2 == 0 ? first_color : opposite(first_color); }
    bool on_cycle(int i) const { return i == cycle_pos - 1 || i == cycle_pos; }
    bool is_border(int i) const { return i == 0 || i == size() - 1; }
    int real_neighbors(int i) const;
    int degree(int i) const;
    bool white_sided() const { return color(size() - 1) == Color::white; }
    // Long graphs have no border vertex on the cycle.
    bool is_long() const { return cycle_pos != 1 && cycle_pos != size() - 1; }
};

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct RealSequences {
    std::vector<int> white;
    std::vector<int> black;
    bool operator==(const RealSequences&) const = default;
};
RealSequences real_sequences(const RealBwGraph& g);

// Full degree multisets, sorted decreasingly.
std::pair<Partition, Partition> degree_partitions(const RealBwGraph& g);
std::size_t vertex_count(const RealBwGraph& g);
std::size_t edge_count(const RealBwGraph& g);
// Throws GraphError describing the first violated invariant.
void validate(const RealBwGraph& g);

struct SignBreakdown {
    std::int64_t lev = 0;
    std::int64_t pol = 0;
    int sign = 1;
    bool operator==(const SignBreakdown&) const = default;
};
SignBreakdown sign(const RealBwGraph& g);

std::vector<RealBwGraph> enumerate(const Partition& white, const Partition& black);

RealBwGraph flip(const RealBwGraph& g, int v, int w);

// Empty when all four restricted sequences reduce to symmetric ones;
// otherwise the first non-symmetric pair of real vertex positions.
std::optional<std::pair<int, int>> first_non_symmetric_pair(const RealBwGraph& g);
inline bool nearly_symmetric(const RealBwGraph& g) { return !first_non_symmetric_pair(g).has_value(); }
bool is_reduced(const RealBwGraph& g);
// Whether some odd restricted sequence is (1,b,b), (b,b,1) or (1).
bool rotation_flips_sign(const RealBwGraph& g);

RealBwGraph rotate(const RealBwGraph& g);

struct SignedSums {
    std::int64_t white = 0;
    std::int64_t black = 0;
    std::size_t graphs = 0;
    bool operator==(const SignedSums&) const = default;
};
SignedSums signed_sums(const Partition& white, const Partition& black);

std::vector<Partition> partitions_of(int d);

struct InvarianceReport {
    int d = 0;
    std::size_t pairs = 0;
    std::size_t graphs = 0;
    std::vector<std::pair<Partition, Partition>> failures;
};
InvarianceReport verify_invariance(int d);

nlohmann::json to_json(const RealBwGraph& g);
std::string to_string(const Partition& p);
Partition parse_partition(const std::string& s);

}  // namespace ratsign
