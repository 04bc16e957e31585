#pragma once

#include "formacheck/sullivan_model.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace formacheck {

struct CohomologyBasis {
    std::size_t dim = 0;
    /// Cocycles (in the monomials_of_degree basis) whose classes
    /// form a basis of the cohomology group.
    std::vector<VecQ> representatives;
};

/// H^n of the model. Representatives are kernel vectors of d_n reduced
/// against the RREF of the image of d_{n-1}, then row reduced.
CohomologyBasis cohomology_basis(const Model& model, int n);

enum class DegreeStatus { bijective, fails_injective, fails_surjective };

std::string_view to_string(DegreeStatus s);

struct DegreeReport {
    int degree = 0;
    std::size_t model_cohomology_dim = 0;
    std::size_t target_dim = 0;
    std::size_t induced_map_rank = 0;
    bool injective = false;
    bool surjective = false;

    bool bijective() const { return injective && surjective; }
    /// Injectivity failures take precedence when both fail.
    DegreeStatus status() const;
};

/// H^n(phi~): H^n(model) -> H^n(h).
DegreeReport induced_map(const Model& model, const GradedAlgebra& h, int n);

struct QuasiIsoReport {
    int cap = 0; // verified for degrees 0..cap, nothing claimed beyond
    std::vector<DegreeReport> degrees;
    bool all_bijective = true;
    std::optional<int> first_failure;
};

/// 2 * top_degree + 1.
int default_cap(const GradedAlgebra& h);

/// FORMACHECK_THREADS when set to a positive integer, otherwise the
/// hardware concurrency.
unsigned thread_count_from_env();

/// Degreewise check of H(phi~) for 0 <= n <= cap. Throws InputError if
/// cap < top_degree(h). `threads == 0` means thread_count_from_env().
QuasiIsoReport verify_quasi_iso(const Model& model, const GradedAlgebra& h, int cap, unsigned threads = 0);

/// Finite chain complex over Q: dims[n] = dim C_n for n = 0..N, and
/// boundary(n): C_n -> C_{n-1} (a dims[n-1] x dims[n] matrix) for n >= 1.
class ChainComplexQ {
public:
    /// `boundaries[k]` is the boundary out of degree k+1. Missing trailing
    /// boundaries are zero. Throws InputError on shape mismatch.
    ChainComplexQ(std::vector<std::size_t> dims, std::vector<MatQ> boundaries);

    std::size_t top() const { return dims_.size() - 1; }
    std::span<const std::size_t> dims() const { return dims_; }
    /// Zero matrix for n == 0 or n > top().
    MatQ boundary(std::size_t n) const;

    /// Least n with boundary(n-1) * boundary(n) != 0, if any.
    std::optional<std::size_t> square_zero_violation() const;

private:
    std::vector<std::size_t> dims_;
    std::vector<MatQ> boundaries_;
};

struct DualityRow {
    std::size_t degree = 0;
    std::size_t homology_dim = 0;
    std::size_t dual_cohomology_dim = 0;
    bool equal = false;
};

/// Homology of c against cohomology of the dual complex with transposed
/// boundaries, degree by degree. Throws InputError if d^2 != 0.
std::vector<DualityRow> duality_check(const ChainComplexQ& c);

} // namespace formacheck
