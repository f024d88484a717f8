#include "ratsign/bwgraphs.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>

#include "ratsign/alternations.hpp"
#include "ratsign/parallel.hpp"

namespace ratsign {

std::string to_string(Color c) { return c == Color::white ? "white" : "black"; }

bool PlaneTree::operator==(const PlaneTree& o) const {
    return root_color == o.root_color && children == o.children;
}

bool PlaneTree::operator<(const PlaneTree& o) const {
    if (root_color != o.root_color) return root_color < o.root_color;
    return std::lexicographical_compare(children.begin(), children.end(), o.children.begin(), o.children.end());
}

PlaneTree mirror(const PlaneTree& t) {
    PlaneTree m{t.root_color, {}};
    for (auto it = t.children.rbegin(); it != t.children.rend(); ++it) m.children.push_back(mirror(*it));
    return m;
}

std::string to_string(const PlaneTree& t) {
    std::string s(1, t.root_color == Color::white ? 'w' : 'b');
    if (!t.children.empty()) {
        s += '[';
        for (std::size_t k = 0; k < t.children.size(); ++k) {
            if (k) s += ',';
            s += to_string(t.children[k]);
        }
        s += ']';
    }
    return s;
}

bool RealBwGraph::operator<(const RealBwGraph& o) const {
    if (first_color != o.first_color) return first_color < o.first_color;
    if (cycle_pos != o.cycle_pos) return cycle_pos < o.cycle_pos;
    if (size() != o.size()) return size() < o.size();
    for (int i = 0; i < size(); ++i) {
        const auto& a = real_vertices[i].forest;
        const auto& b = o.real_vertices[i].forest;
        if (a != b) return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
    return false;
}

int RealBwGraph::real_neighbors(int i) const {
    int count = 0;
    if (i > 0 && i != cycle_pos) ++count;             // edge to i-1 unless it crosses the gap
    if (i + 1 < size() && i + 1 != cycle_pos) ++count;  // edge to i+1 likewise
    return count;
}

int RealBwGraph::degree(int i) const {
    return real_neighbors(i) + 2 * static_cast<int>(real_vertices[i].forest.size()) + (on_cycle(i) ? 2 : 0);
}

RealSequences real_sequences(const RealBwGraph& g) {
    RealSequences s;
    for (int i = 0; i < g.size(); ++i) (g.color(i) == Color::white ? s.white : s.black).push_back(g.degree(i));
    return s;
}

namespace {

void collect_tree_degrees(const PlaneTree& t, Partition& white, Partition& black, std::size_t& vertices) {
    (t.root_color == Color::white ? white : black).push_back(1 + static_cast<int>(t.children.size()));
    ++vertices;
    for (const auto& c : t.children) collect_tree_degrees(c, white, black, vertices);
}

bool colors_alternate(const PlaneTree& t) {
    for (const auto& c : t.children)
        if (c.root_color == t.root_color || !colors_alternate(c)) return false;
    return true;
}

}  // namespace

std::pair<Partition, Partition> degree_partitions(const RealBwGraph& g) {
    Partition white, black, tw, tb;
    std::size_t tree_vertices = 0;
    for (int i = 0; i < g.size(); ++i) {
        (g.color(i) == Color::white ? white : black).push_back(g.degree(i));
        for (const auto& t : g.real_vertices[i].forest) collect_tree_degrees(t, tw, tb, tree_vertices);
    }
    for (int x : tw) white.insert(white.end(), {x, x});
    for (int x : tb) black.insert(black.end(), {x, x});
    std::sort(white.rbegin(), white.rend());
    std::sort(black.rbegin(), black.rend());
    return {white, black};
}

std::size_t vertex_count(const RealBwGraph& g) {
    auto [w, b] = degree_partitions(g);
    return w.size() + b.size();
}

std::size_t edge_count(const RealBwGraph& g) {
    std::size_t edges = 2;  // the two conjugate cycle edges
    for (int i = 0; i + 1 < g.size(); ++i)
        if (i + 1 != g.cycle_pos) ++edges;
    std::size_t tree_vertices = 0;
    Partition tw, tb;
    for (const auto& v : g.real_vertices)
        for (const auto& t : v.forest) collect_tree_degrees(t, tw, tb, tree_vertices);
    return edges + 2 * tree_vertices;  // every tree vertex has one edge towards the root side
}

void validate(const RealBwGraph& g) {
    if (g.size() < 2) throw GraphError("a real bw-graph needs at least two real vertices");
    if (g.cycle_pos < 1 || g.cycle_pos > g.size() - 1) throw GraphError("cycle position out of range");
    for (int i = 0; i < g.size(); ++i)
        for (const auto& t : g.real_vertices[i].forest) {
            if (t.root_color == g.color(i)) throw GraphError("tree root has the color of its real vertex");
            if (!colors_alternate(t)) throw GraphError("tree colors do not alternate");
        }
    if (vertex_count(g) != edge_count(g)) throw GraphError("graph is not unicyclic");
    auto [w, b] = degree_partitions(g);
    int sw = 0, sb = 0;
    for (int x : w) sw += x;
    for (int x : b) sb += x;
    if (sw != sb || static_cast<std::size_t>(sw) != edge_count(g)) throw GraphError("degree sums are inconsistent");
}

SignBreakdown sign(const RealBwGraph& g) {
    const auto s = real_sequences(g);
    SignBreakdown out;
    out.lev = static_cast<std::int64_t>(disorders(s.white) + disorders(s.black));
    for (int i = 0; i < g.cycle_pos; ++i)
        if (g.degree(i) > 1) ++out.pol;
    out.sign = (out.lev + out.pol) % 2 == 0 ? 1 : -1;
    return out;
}

namespace {

using Counts = std::array<std::vector<int>, 2>;  // [color][degree] -> multiplicity

int idx(Color c) { return c == Color::white ? 0 : 1; }

void check_partition(const Partition& p) {
    for (int x : p)
        if (x < 1) throw GraphError("partition entries must be positive");
}

// Enumerates ordered forests whose roots have the given colors and whose
// vertex degrees use up `counts` exactly.
class ForestGenerator {
public:
    using Sink = std::function<void(const std::vector<PlaneTree>&)>;

    ForestGenerator(Counts counts, std::size_t total) : counts_(std::move(counts)), remaining_(total) {}

    void run(const std::vector<Color>& roots, const Sink& sink) {
        std::vector<PlaneTree> out;
        forest(roots, 0, out, [&] {
            if (remaining_ == 0) sink(out);
        });
    }

private:
    Counts counts_;
    std::size_t remaining_;

    void forest(const std::vector<Color>& roots, std::size_t k, std::vector<PlaneTree>& out,
                const std::function<void()>& done) {
        if (k == roots.size()) {
            done();
            return;
        }
        tree(roots[k], [&](PlaneTree t) {
            out.push_back(std::move(t));
            forest(roots, k + 1, out, done);
            out.pop_back();
        });
    }

    void tree(Color c, const std::function<void(PlaneTree)>& emit) {
        auto& row = counts_[idx(c)];
        for (int deg = 1; deg < static_cast<int>(row.size()); ++deg) {
            if (row[deg] == 0) continue;
            // Each of the deg-1 children needs at least one more vertex.
            if (remaining_ < static_cast<std::size_t>(deg)) break;
            --row[deg];
            --remaining_;
            std::vector<Color> kids(deg - 1, opposite(c));
            std::vector<PlaneTree> children;
            forest(kids, 0, children, [&] { emit(PlaneTree{c, children}); });
            ++remaining_;
            ++row[deg];
        }
    }
};

}  // namespace

std::vector<RealBwGraph> enumerate(const Partition& white, const Partition& black) {
    check_partition(white);
    check_partition(black);
    int d = 0, db = 0;
    for (int x : white) d += x;
    for (int x : black) db += x;
    if (d != db) throw GraphError("partitions have different sums");
    std::vector<RealBwGraph> result;
    const int total_vertices = static_cast<int>(white.size() + black.size());
    if (d < 2 || total_vertices != d) return result;

    Counts full{std::vector<int>(d + 1, 0), std::vector<int>(d + 1, 0)};
    for (int x : white) ++full[0][x];
    for (int x : black) ++full[1][x];

    for (int n = 2; n <= total_vertices; ++n) {
        for (Color first : {Color::white, Color::black}) {
            const int n_first = (n + 1) / 2, n_second = n / 2;
            const int nw = first == Color::white ? n_first : n_second;
            const int nb = n - nw;
            if (nw > static_cast<int>(white.size()) || nb > static_cast<int>(black.size())) continue;
            for (int c = 1; c <= n - 1; ++c) {
                RealBwGraph shape;
                shape.first_color = first;
                shape.cycle_pos = c;
                shape.real_vertices.resize(n);
                std::vector<int> base(n);
                for (int i = 0; i < n; ++i) base[i] = shape.real_neighbors(i) + (shape.on_cycle(i) ? 2 : 0);

                Counts counts = full;
                std::vector<int> degs(n);
                std::function<void(int)> assign = [&](int i) {
                    if (i == n) {
                        Counts trees{std::vector<int>(d + 1, 0), std::vector<int>(d + 1, 0)};
                        std::size_t tree_vertices = 0;
                        for (int col = 0; col < 2; ++col)
                            for (int x = 1; x <= d; ++x) {
                                if (counts[col][x] % 2) return;
                                trees[col][x] = counts[col][x] / 2;
                                tree_vertices += trees[col][x];
                            }
                        std::vector<Color> roots;
                        for (int v = 0; v < n; ++v)
                            roots.insert(roots.end(), (degs[v] - base[v]) / 2, opposite(shape.color(v)));
                        if (roots.size() > tree_vertices) return;
                        ForestGenerator gen(trees, tree_vertices);
                        gen.run(roots, [&](const std::vector<PlaneTree>& forest) {
                            RealBwGraph g = shape;
                            std::size_t k = 0;
                            for (int v = 0; v < n; ++v) {
                                const auto m = static_cast<std::size_t>((degs[v] - base[v]) / 2);
                                g.real_vertices[v].forest.assign(forest.begin() + k, forest.begin() + k + m);
                                k += m;
                            }
                            result.push_back(std::move(g));
                        });
                        return;
                    }
                    auto& row = counts[idx(shape.color(i))];
                    for (int x = base[i]; x <= d; x += 2) {
                        if (x == 0 || row[x] == 0) continue;
                        --row[x];
                        degs[i] = x;
                        assign(i + 1);
                        ++row[x];
                    }
                };
                assign(0);
            }
        }
    }
    return result;
}

namespace {

struct Entry {
    int degree;
    int pos;
};

// Vertices of one color and degree parity, left to right.
std::vector<Entry> restricted(const RealBwGraph& g, Color c, int parity) {
    std::vector<Entry> out;
    for (int i = 0; i < g.size(); ++i)
        if (g.color(i) == c && g.degree(i) % 2 == parity) out.push_back({g.degree(i), i});
    return out;
}

std::optional<std::pair<int, int>> asymmetric_pair(const std::vector<Entry>& seq) {
    std::vector<Entry> e;
    for (const auto& x : seq)
        if (x.degree != 1) e.push_back(x);
    if (e.size() % 2) e.erase(e.begin());
    const std::size_t m = e.size() / 2;
    for (std::size_t k = 0; k < m; ++k) {
        const auto& a = e[m - 1 - k];
        const auto& b = e[m + k];
        if (a.degree != b.degree) return std::make_pair(a.pos, b.pos);
    }
    return std::nullopt;
}

constexpr std::array<std::pair<Color, int>, 4> kPriority{{
    {Color::white, 0}, {Color::white, 1}, {Color::black, 0}, {Color::black, 1}}};

std::vector<int> degrees_of(const std::vector<Entry>& seq) {
    std::vector<int> out;
    for (const auto& x : seq) out.push_back(x.degree);
    return out;
}

bool odd_border(const RealBwGraph& g, int i) { return g.is_border(i) && g.degree(i) % 2 == 1; }

// The forest F(v): an odd border vertex keeps its rightmost tree pair, which
// is the first one counterclockwise from the rightward direction.
std::vector<PlaneTree> movable_forest(const RealBwGraph& g, int i) {
    const auto& f = g.real_vertices[i].forest;
    if (odd_border(g, i)) {
        if (f.empty()) throw GraphError("odd border vertex without trees has no movable forest");
        return {f.begin() + 1, f.end()};
    }
    return f;
}

void replant(RealBwGraph& g, int i, bool keeps_fixed, std::vector<PlaneTree> forest) {
    auto& f = g.real_vertices[i].forest;
    if (keeps_fixed) forest.insert(forest.begin(), f.front());
    f = std::move(forest);
}

void cyclic_shift(RealBwGraph& g, const std::vector<int>& positions) {
    const std::size_t k = positions.size();
    if (k < 2) return;
    std::vector<std::vector<PlaneTree>> forests;
    std::vector<bool> fixed;
    for (int p : positions) {
        forests.push_back(movable_forest(g, p));
        fixed.push_back(odd_border(g, p));
    }
    for (std::size_t t = 0; t < k; ++t) replant(g, positions[(t + 1) % k], fixed[(t + 1) % k], forests[t]);
}

}  // namespace

RealBwGraph flip(const RealBwGraph& g, int v, int w) {
    if (v < 0 || w < 0 || v >= g.size() || w >= g.size() || v == w) throw GraphError("flip needs two distinct real vertices");
    if (g.color(v) != g.color(w) || g.degree(v) % 2 != g.degree(w) % 2 || g.degree(v) <= 1 || g.degree(w) <= 1)
        throw GraphError("flip needs two real vertices of the same type");
    RealBwGraph out = g;
    auto fv = movable_forest(g, v), fw = movable_forest(g, w);
    replant(out, v, odd_border(g, v), std::move(fw));
    replant(out, w, odd_border(g, w), std::move(fv));
    return out;
}

std::optional<std::pair<int, int>> first_non_symmetric_pair(const RealBwGraph& g) {
    for (auto [c, parity] : kPriority)
        if (auto p = asymmetric_pair(restricted(g, c, parity))) return p;
    return std::nullopt;
}

bool is_reduced(const RealBwGraph& g) {
    for (Color c : {Color::white, Color::black}) {
        const auto s = degrees_of(restricted(g, c, 1));
        const bool ok = (s.size() == 1 && s[0] != 1) ||
                        (s.size() == 3 && s[0] == 1 && s[1] != 1 && s[2] == 1) ||
                        (s.size() == 3 && s[0] != 1 && s[1] != 1 && s[1] == s[2]);
        if (!ok) return false;
    }
    return true;
}

bool rotation_flips_sign(const RealBwGraph& g) {
    for (Color c : {Color::white, Color::black}) {
        const auto s = degrees_of(restricted(g, c, 1));
        if (s == std::vector<int>{1}) return true;
        if (s.size() == 3 && s[0] == 1 && s[1] != 1 && s[1] == s[2]) return true;
        if (s.size() == 3 && s[2] == 1 && s[0] != 1 && s[0] == s[1]) return true;
    }
    return false;
}

RealBwGraph rotate(const RealBwGraph& g) {
    if (!nearly_symmetric(g)) throw GraphError("rotation needs a nearly symmetric graph");
    const int n = g.size();
    RealBwGraph r;
    r.first_color = g.color(n - 1);
    r.cycle_pos = n - g.cycle_pos;
    r.real_vertices.resize(n);
    for (int i = 0; i < n; ++i) {
        const auto& src = g.real_vertices[i].forest;
        auto& dst = r.real_vertices[n - 1 - i].forest;
        for (auto it = src.rbegin(); it != src.rend(); ++it) dst.push_back(mirror(*it));
    }
    for (auto [c, parity] : kPriority) {
        const auto seq = restricted(r, c, parity);
        if (!asymmetric_pair(seq)) continue;
        std::vector<int> positions;
        for (const auto& e : seq)
            if (e.degree != 1) positions.push_back(e.pos);
        cyclic_shift(r, positions);
    }
    return r;
}

SignedSums signed_sums(const Partition& white, const Partition& black) {
    SignedSums s;
    for (const auto& g : enumerate(white, black)) {
        ++s.graphs;
        (g.white_sided() ? s.white : s.black) += sign(g).sign;
    }
    return s;
}

std::vector<Partition> partitions_of(int d) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int rest, int max_part) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int x = std::min(rest, max_part); x >= 1; --x) {
            cur.push_back(x);
            rec(rest - x, x);
            cur.pop_back();
        }
    };
    if (d >= 1) rec(d, d);
    return out;
}

InvarianceReport verify_invariance(int d) {
    InvarianceReport rep;
    rep.d = d;
    const auto parts = partitions_of(d);
    std::vector<std::pair<Partition, Partition>> pairs;
    for (const auto& w : parts)
        for (const auto& b : parts) pairs.emplace_back(w, b);
    std::vector<SignedSums> sums(pairs.size());
    parallel_for(pairs.size(), [&](std::size_t i) { sums[i] = signed_sums(pairs[i].first, pairs[i].second); });
    rep.pairs = pairs.size();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        rep.graphs += sums[i].graphs;
        if (sums[i].white != sums[i].black) rep.failures.push_back(pairs[i]);
    }
    return rep;
}

nlohmann::json to_json(const RealBwGraph& g) {
    nlohmann::json vertices = nlohmann::json::array();
    for (int i = 0; i < g.size(); ++i) {
        nlohmann::json forest = nlohmann::json::array();
        for (const auto& t : g.real_vertices[i].forest) forest.push_back(to_string(t));
        vertices.push_back({{"color", to_string(g.color(i))}, {"degree", g.degree(i)}, {"forest", forest}});
    }
    const auto s = real_sequences(g);
    const auto sg = sign(g);
    return {{"first_color", to_string(g.first_color)},
            {"cycle_pos", g.cycle_pos},
            {"real_vertices", vertices},
            {"sigma_w", s.white},
            {"sigma_b", s.black},
            {"lev", sg.lev},
            {"pol", sg.pol},
            {"sign", sg.sign},
            {"side", g.white_sided() ? "white" : "black"},
            {"long", g.is_long()}};
}

std::string to_string(const Partition& p) {
    std::string s;
    for (std::size_t k = 0; k < p.size(); ++k) s += (k ? "," : "") + std::to_string(p[k]);
    return s;
}

Partition parse_partition(const std::string& s) {
    Partition p;
    if (s.find_first_not_of(' ') == std::string::npos) return p;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.find_first_not_of(' ') == std::string::npos) throw std::invalid_argument("empty partition entry");
        std::size_t used = 0;
        int x = 0;
        try {
            x = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed partition entry '" + item + "'");
        }
        if (item.find_first_not_of(' ', used) != std::string::npos || x < 1)
            throw std::invalid_argument("malformed partition entry '" + item + "'");
        p.push_back(x);
    }
    std::sort(p.rbegin(), p.rend());
    return p;
}

}  // namespace ratsign
