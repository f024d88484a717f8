#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ratsign/algebra.hpp"
#include "ratsign/profiles.hpp"

namespace ratsign {

class InvalidDescriptor : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct LabeledVertex {
    int ramification = 1;  // 1 for a regular (2-valent) point
    int chains_left = 0;   // number of chains lying to the left of the vertex
    bool operator==(const LabeledVertex&) const = default;
};

struct BaseDescriptor {
    BaseType base_type = BaseType::C;
    Parity parity = Parity::odd;
    int sp = 1;
    std::vector<int> c;                               // one entry per chain, so l = c.size()
    std::vector<std::vector<LabeledVertex>> labels;  // real vertices of each label, left to right

    int l() const { return static_cast<int>(c.size()); }
    int c_total() const;
};

void validate(const BaseDescriptor& b);
BaseDescriptor descriptor_of(const SimpleBase& base);
std::vector<int> sign_sequence(const BaseDescriptor& b, std::size_t label);
int epsilon_base(const BaseDescriptor& b);
GElement assemble_FB(const BaseDescriptor& b);

nlohmann::json to_json(const BaseDescriptor& b);
BaseDescriptor descriptor_from_json(const nlohmann::json& j);

// Degrees and leading coefficients of F_B as tabulated for the base type.
struct ExpectedShape {
    Degrees degrees;
    std::optional<Rational> lead_f;
    std::optional<Rational> lead_g;
};
ExpectedShape tabulated_shape(const BaseDescriptor& b);
// The same table with the factor n+1 carried by the leading coefficient of
// u_n and v_n, which is what the operator definitions produce.
ExpectedShape derived_shape(const BaseDescriptor& b);

int broken_alternation_sign(int n);

class NonIntegralCoefficient : public std::domain_error {
public:
    using std::domain_error::domain_error;
};
std::vector<Integer> extract_s_numbers(const GElement& F, int max_m);

struct SNumberReport {
    ReducedProfiles lambda;
    std::vector<std::pair<int, Integer>> values;
    GElement series_used;
    nlohmann::json diagnostics = nlohmann::json::object();
};
SNumberReport s_numbers_empty(int max_m, Parity parity);
nlohmann::json to_json(const SNumberReport& r);

class InsufficientData : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct AsymptoticReport {
    std::vector<std::pair<int, double>> log_growth;         // (m, ln|S| / (m ln m))
    std::vector<std::pair<int, double>> naive_ratio;        // (k, |b_{k+1}/b_k|)
    std::vector<std::pair<int, double>> corrected_ratio;    // (k, |b_{k+1}/b_k| k/(k+1))
    double radius_estimate = 0;            // 1 / last naive ratio, in Q = q^2
    double corrected_radius_estimate = 0;  // 1 / last corrected ratio
};
AsymptoticReport asymptotic_report(const SNumberReport& r);
// Works on the coefficients b_k of a series in Q directly.
AsymptoticReport asymptotic_report_from_coefficients(const std::vector<Rational>& b);
nlohmann::json to_json(const AsymptoticReport& a);

Integer complex_reference(int m);

}  // namespace ratsign
