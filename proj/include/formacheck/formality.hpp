#pragma once

#include "formacheck/cohomology.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace formacheck {

/// Positive degrees carrying cohomology, strictly increasing.
struct DegreeSet {
    std::vector<int> degrees;
};

DegreeSet degree_set(const GradedAlgebra& h);

/// Trivial cup product: no nonzero product of two or more generators.
bool check_condition_i(const EFamily& e);

/// The classes indexed by the distinct monomials of E are linearly
/// independent. Two monomials with the same class make the family dependent.
bool check_condition_ii(const EFamily& e);

/// flag[k] is true iff degrees[k] is not an integer combination of the
/// earlier degrees, i.e. gcd(n_1..n_{k-1}) does not divide n_k. The first
/// entry is vacuously true. Throws std::invalid_argument if the degrees
/// are not positive and strictly increasing.
std::vector<bool> corollary_integer_check(std::span<const int> degrees);

/// flag[k] is true iff degrees[k] is not a nonnegative integer combination
/// of the earlier degrees.
std::vector<bool> corollary_nonnegative_check(std::span<const int> degrees);

enum class Classification { formal_by_theorem, inconclusive, hypothesis_violated };

std::string_view to_string(Classification c);

struct Verdict {
    bool hypothesis_ok = false;
    bool condition_i = false;
    bool condition_ii = false;
    DegreeSet degrees;
    std::vector<bool> corollary_integer;
    std::vector<bool> corollary_nonnegative;
    bool corollary_holds = false;
    Classification classification = Classification::inconclusive;
    /// Theorem-level verdict is formal but H(phi~) fails within the cap.
    bool discrepancy = false;
    std::optional<int> discrepancy_degree;

    /// 0 formal and verified, 2 inconclusive, 3 hypothesis violated, 4 discrepancy.
    int exit_code() const;
};

/// `e` and `quasi` are absent when the hypothesis fails and the model was
/// not built.
Verdict render_verdict(const GradedAlgebra& h, const ValidationReport& validation, const EFamily* e,
                       const QuasiIsoReport* quasi);

} // namespace formacheck
