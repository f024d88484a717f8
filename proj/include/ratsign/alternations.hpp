#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ratsign/algebra.hpp"

namespace ratsign {

using Permutation = std::vector<int>;

// Euler zigzag numbers A_0..A_{n_max} from the boustrophedon triangle.
std::vector<Integer> zigzag_numbers(int n_max);

std::uint64_t disorders(const std::vector<int>& seq);

struct Classification {
    enum class Kind { ordinary, broken, neither };
    Kind kind = Kind::neither;
    int break_index = 0;  // 1-based index i of the violated pair (i, i+1)

    bool operator==(const Classification&) const = default;
    static Classification ordinary() { return {Kind::ordinary, 0}; }
    static Classification broken(int i) { return {Kind::broken, i}; }
    static Classification neither() { return {Kind::neither, 0}; }
};

Classification classify(const Permutation& perm);

struct AlternationTables {
    int n_max = 0;
    std::vector<Integer> A;
    std::vector<Integer> B;
    // B_by_pos[n][j] = B_n^j for 1 <= j <= n; index 0 unused.
    std::vector<std::vector<Integer>> B_by_pos;
};

AlternationTables count_recursive(int n_max);

struct BruteForceCounts {
    Integer A;
    Integer B;
    std::vector<Integer> by_pos;  // index j = 1..n
};

class SizeLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

inline constexpr int kBruteForceLimit = 10;
BruteForceCounts count_bruteforce(int n);

enum class BaseSeries { f, g, u, v };
GElement base_series(BaseSeries which);

// Series of u (odd n) and v (even n) from the broken-alternation counts.
TruncatedSeries broken_series(BaseSeries which, int order);

bool verify_odes(int order);
// The first ODE with u replaced by an arbitrary element, for negative checks.
bool satisfies_u_ode(const GElement& u, int order);

enum class Family { f_c, g_c, gt_c, u_c, v_c };
GElement family(Family kind, int c);
std::string family_name(Family kind);
Family parse_family(const std::string& name);

}  // namespace ratsign
