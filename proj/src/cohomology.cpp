#include "formacheck/cohomology.hpp"

#include "formacheck/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

namespace formacheck {

CohomologyBasis cohomology_basis(const Model& model, int n)
{
    CohomologyBasis out;
    if (n < 0)
        return out;

    const auto cocycles = kernel_basis(differential_matrix(model, n));
    if (cocycles.empty())
        return out;
    const std::size_t width = cocycles.front().size();

    RrefResult image;
    if (n > 0)
        image = rref(differential_matrix(model, n - 1).transpose());

    std::vector<VecQ> reduced = cocycles;
    if (image.rank > 0)
        for (auto& z : reduced)
            reduce_against(z, image);

    const auto red = rref(MatQ::from_rows(reduced, width));
    out.dim = red.rank;
    for (std::size_t r = 0; r < red.rank; ++r)
        out.representatives.push_back(red.rref.row(r));
    return out;
}

std::string_view to_string(DegreeStatus s)
{
    switch (s) {
    case DegreeStatus::bijective:
        return "bijective";
    case DegreeStatus::fails_injective:
        return "fails-injective";
    case DegreeStatus::fails_surjective:
        return "fails-surjective";
    }
    return "unknown";
}

DegreeStatus DegreeReport::status() const
{
    if (!injective)
        return DegreeStatus::fails_injective;
    if (!surjective)
        return DegreeStatus::fails_surjective;
    return DegreeStatus::bijective;
}

DegreeReport induced_map(const Model& model, const GradedAlgebra& h, int n)
{
    DegreeReport report;
    report.degree = n;
    const auto cohom = cohomology_basis(model, n);
    report.model_cohomology_dim = cohom.dim;
    report.target_dim = h.indices_of_degree(n).size();

    if (cohom.dim > 0 && report.target_dim > 0) {
        const MatQ phi = phi_tilde_matrix(model, h, n);
        std::vector<VecQ> images;
        for (const auto& rep : cohom.representatives)
            images.push_back(phi * rep);
        report.induced_map_rank = rank(MatQ::from_columns(images, report.target_dim));
    }
    report.injective = report.induced_map_rank == report.model_cohomology_dim;
    report.surjective = report.induced_map_rank == report.target_dim;
    return report;
}

int default_cap(const GradedAlgebra& h) { return 2 * h.top_degree() + 1; }

unsigned thread_count_from_env()
{
    if (const char* env = std::getenv("FORMACHECK_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0)
                return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

QuasiIsoReport verify_quasi_iso(const Model& model, const GradedAlgebra& h, int cap, unsigned threads)
{
    if (cap < h.top_degree())
        throw InputError("cap " + std::to_string(cap) + " is below the top degree " + std::to_string(h.top_degree()));

    QuasiIsoReport report;
    report.cap = cap;
    report.degrees.resize(static_cast<std::size_t>(cap) + 1);

    if (threads == 0)
        threads = thread_count_from_env();
    threads = std::min<unsigned>(threads, static_cast<unsigned>(report.degrees.size()));

    std::atomic<int> next{0};
    auto worker = [&] {
        for (int n = next++; n <= cap; n = next++)
            report.degrees[static_cast<std::size_t>(n)] = induced_map(model, h, n);
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }

    for (const auto& d : report.degrees)
        if (!d.bijective()) {
            report.all_bijective = false;
            report.first_failure = d.degree;
            break;
        }
    return report;
}

ChainComplexQ::ChainComplexQ(std::vector<std::size_t> dims, std::vector<MatQ> boundaries)
    : dims_(std::move(dims)), boundaries_(std::move(boundaries))
{
    if (dims_.empty())
        throw InputError("chain complex needs at least one degree");
    if (boundaries_.size() > top())
        throw InputError("chain complex has more boundary maps than degrees");
    for (std::size_t k = 0; k < boundaries_.size(); ++k) {
        const std::size_t n = k + 1;
        const auto& b = boundaries_[k];
        if (b.rows() != dims_[n - 1] || b.cols() != dims_[n])
            throw InputError("boundary out of degree " + std::to_string(n) + " must be " + std::to_string(dims_[n - 1]) +
                             "x" + std::to_string(dims_[n]));
    }
}

MatQ ChainComplexQ::boundary(std::size_t n) const
{
    if (n == 0)
        return MatQ(0, dims_[0]);
    if (n > top())
        return MatQ(dims_[top()], 0);
    if (n - 1 < boundaries_.size())
        return boundaries_[n - 1];
    return MatQ(dims_[n - 1], dims_[n]);
}

std::optional<std::size_t> ChainComplexQ::square_zero_violation() const
{
    for (std::size_t n = 2; n <= top(); ++n)
        if (!(boundary(n - 1) * boundary(n)).is_zero())
            return n;
    return std::nullopt;
}

std::vector<DualityRow> duality_check(const ChainComplexQ& c)
{
    if (auto bad = c.square_zero_violation())
        throw InputError("boundary maps do not square to zero: d_" + std::to_string(*bad - 1) + " * d_" +
                         std::to_string(*bad) + " != 0");

    std::vector<DualityRow> rows;
    for (std::size_t n = 0; n <= c.top(); ++n) {
        DualityRow row;
        row.degree = n;
        // H_n = ker(d_n) / im(d_{n+1})
        row.homology_dim = kernel_basis(c.boundary(n)).size() - rank(c.boundary(n + 1));
        // H^n = ker(d_{n+1}^T) / im(d_n^T)
        row.dual_cohomology_dim = kernel_basis(c.boundary(n + 1).transpose()).size() - rank(c.boundary(n).transpose());
        row.equal = row.homology_dim == row.dual_cohomology_dim;
        rows.push_back(row);
    }
    return rows;
}

} // namespace formacheck
