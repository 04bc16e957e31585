#include "formacheck/formality.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace formacheck {

namespace {

void require_increasing(std::span<const int> degrees)
{
    for (std::size_t k = 0; k < degrees.size(); ++k)
        if (degrees[k] <= 0 || (k > 0 && degrees[k] <= degrees[k - 1]))
            throw std::invalid_argument("degree set must be positive and strictly increasing");
}

} // namespace

DegreeSet degree_set(const GradedAlgebra& h)
{
    DegreeSet f;
    for (int n = 1; n <= h.top_degree(); ++n)
        if (!h.indices_of_degree(n).empty())
            f.degrees.push_back(n);
    return f;
}

bool check_condition_i(const EFamily& e) { return e.empty(); }

bool check_condition_ii(const EFamily& e)
{
    if (e.empty())
        return true;
    std::vector<VecQ> columns;
    for (const auto& entry : e.entries)
        columns.push_back(entry.image.coeffs);
    return rank(MatQ::from_columns(columns, columns.front().size())) == columns.size();
}

std::vector<bool> corollary_integer_check(std::span<const int> degrees)
{
    require_increasing(degrees);
    std::vector<bool> flags;
    int g = 0;
    for (int n : degrees) {
        flags.push_back(g == 0 || n % g != 0);
        g = std::gcd(g, n);
    }
    return flags;
}

std::vector<bool> corollary_nonnegative_check(std::span<const int> degrees)
{
    require_increasing(degrees);
    std::vector<bool> flags;
    for (std::size_t k = 0; k < degrees.size(); ++k) {
        const int target = degrees[k];
        std::vector<bool> reachable(static_cast<std::size_t>(target) + 1, false);
        reachable[0] = true;
        for (std::size_t i = 0; i < k; ++i)
            for (int v = degrees[i]; v <= target; ++v)
                if (reachable[static_cast<std::size_t>(v - degrees[i])])
                    reachable[static_cast<std::size_t>(v)] = true;
        // every earlier degree is smaller, so a hit uses at least two summands
        flags.push_back(!reachable[static_cast<std::size_t>(target)]);
    }
    return flags;
}

std::string_view to_string(Classification c)
{
    switch (c) {
    case Classification::formal_by_theorem:
        return "FORMAL_BY_THEOREM";
    case Classification::inconclusive:
        return "INCONCLUSIVE";
    case Classification::hypothesis_violated:
        return "HYPOTHESIS_VIOLATED";
    }
    return "UNKNOWN";
}

int Verdict::exit_code() const
{
    switch (classification) {
    case Classification::formal_by_theorem:
        return discrepancy ? 4 : 0;
    case Classification::inconclusive:
        return 2;
    case Classification::hypothesis_violated:
        return 3;
    }
    return 1;
}

Verdict render_verdict(const GradedAlgebra& h, const ValidationReport& validation, const EFamily* e,
                       const QuasiIsoReport* quasi)
{
    Verdict v;
    v.hypothesis_ok = validation.odd_vanishing && validation.finite_dimension.passed;
    v.degrees = degree_set(h);
    v.corollary_integer = corollary_integer_check(v.degrees.degrees);
    v.corollary_nonnegative = corollary_nonnegative_check(v.degrees.degrees);
    v.corollary_holds = std::all_of(v.corollary_integer.begin(), v.corollary_integer.end(), [](bool b) { return b; });

    if (!v.hypothesis_ok || e == nullptr) {
        v.classification = Classification::hypothesis_violated;
        return v;
    }

    v.condition_i = check_condition_i(*e);
    v.condition_ii = check_condition_ii(*e);
    v.classification = (v.condition_i || v.condition_ii) ? Classification::formal_by_theorem : Classification::inconclusive;

    if (v.classification == Classification::formal_by_theorem && quasi != nullptr && !quasi->all_bijective) {
        v.discrepancy = true;
        v.discrepancy_degree = quasi->first_failure;
    }
    return v;
}

} // namespace formacheck
