#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ratsign/algebra.hpp"
#include "ratsign/bwgraphs.hpp"

namespace ratsign {

enum class Parity { odd, even };
enum class BaseType { A, B, C };

std::string to_string(Parity p);
std::string to_string(BaseType t);
Parity parse_parity(const std::string& s);
BaseType parse_base_type(const std::string& s);

struct ReducedProfiles {
    std::vector<Partition> partitions;
    Parity parity = Parity::odd;
};

// Semicolon-separated partitions, each comma-separated; "" or "-" is λ = ∅.
std::vector<Partition> parse_profiles(const std::string& s);
std::string to_string(const std::vector<Partition>& lambda);
nlohmann::json to_json(const ReducedProfiles& lambda);

struct ProfileStats {
    int c_frak = 0;
    int o_frak = 0;
    int e_frak = 0;
    int b_frak = 0;
    Integer A = 1;
};

ProfileStats stats(const ReducedProfiles& lambda);
// Whether every partition has at most one odd and at most one even entry
// appearing an odd number of times; 2𝔠 + 𝔬 + 𝔢 = Σ l(λ_j) holds exactly then.
bool per_partition_condition(const ReducedProfiles& lambda);

std::optional<std::string> trivially_vanishes(const ReducedProfiles& lambda);
bool nonvanishing(const ReducedProfiles& lambda);

struct DegreeBounds {
    BiDegree deg_f;
    BiDegree deg_g;
};
DegreeBounds degree_bounds(const ReducedProfiles& lambda);

struct BaseItem {
    int label = 0;         // 1-based index of the partition
    int ramification = 0;  // local degree; the dessin valence is twice this
    auto operator<=>(const BaseItem&) const = default;
};

enum class PieceKind { left_end, segment, special, right_end };

struct RealPiece {
    PieceKind kind = PieceKind::segment;
    std::optional<BaseItem> maximum;  // segments only
};

struct CrossingPlacement {
    BaseItem crossing;
    int piece = 0;  // index into SimpleBase::pieces
    int side = 0;   // on a segment: 0 on the rising side, 1 on the falling side
};

struct SimpleBase {
    BaseType base_type = BaseType::C;
    Parity parity = Parity::odd;
    std::vector<RealPiece> pieces;                  // connected components of B ∩ R, left to right
    std::vector<std::vector<BaseItem>> components;  // upper components adjacent to each chain, left to right
    int sp = 1;                                     // 1-based special chain
    std::vector<CrossingPlacement> crossings;

    int chains() const { return static_cast<int>(components.size()); }
    // Number of chains to the left of a piece.
    int chains_left_of(int piece) const { return parity == Parity::odd ? piece : piece + 1; }
};

struct SignedBase {
    SimpleBase base;
    int sign = 1;
};

std::vector<SignedBase> enumerate_simple_bases(const ReducedProfiles& lambda, BaseType type);

struct SimpleBaseSummary {
    Integer signed_sum = 0;
    std::size_t bases = 0;
    // Bases up to moving crossings, i.e. flip-equivalence classes.
    std::size_t classes = 0;
};
SimpleBaseSummary summarize_simple_bases(const ReducedProfiles& lambda, BaseType type);

struct ClosedCounts {
    Integer count_C;
    std::optional<Integer> count_B;
};
ClosedCounts simple_base_counts_closed(const ReducedProfiles& lambda);

// Signed sums predicted by the sign analysis of simple bases, where the
// analysis makes a claim; empty otherwise.
std::optional<Integer> predicted_signed_sum(const ReducedProfiles& lambda, BaseType type);

struct LeadingTerm {
    Parity parity;
    Side side;
    BiDegree monomial;
    Rational coefficient;
};
// Odd f-side, odd g-side, even f-side, even g-side.
std::vector<LeadingTerm> leading_coefficients(const ReducedProfiles& lambda);

}  // namespace ratsign
