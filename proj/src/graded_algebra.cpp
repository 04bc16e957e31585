#include "formacheck/graded_algebra.hpp"

#include "formacheck/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace formacheck {

namespace {

using SparseVec = std::vector<std::pair<std::size_t, Rat>>;

SparseVec to_sparse(const VecQ& v)
{
    SparseVec s;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!is_zero(v[k]))
            s.emplace_back(k, v[k]);
    return s;
}

bool all_zero(const VecQ& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return is_zero(x); });
}

std::string describe(const GradedAlgebra& h, const VecQ& v)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (is_zero(v[k]))
            continue;
        if (!first)
            os << " + ";
        os << to_string(v[k]) << "*" << h.basis()[k].label;
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

} // namespace

bool AlgebraElement::is_zero() const { return all_zero(coeffs); }

GradedAlgebra::GradedAlgebra(std::string name, std::vector<BasisElement> basis, std::size_t unit_index, ProductTable upper)
    : name_(std::move(name)), basis_(std::move(basis)), unit_(unit_index), upper_(std::move(upper))
{
    if (basis_.empty())
        throw InputError("algebra has an empty basis");
    if (unit_ >= basis_.size())
        throw InputError("unit index " + std::to_string(unit_) + " out of range");

    std::set<std::string> seen;
    for (const auto& b : basis_) {
        if (b.degree < 0)
            throw InputError("basis element '" + b.label + "' has negative degree");
        if (!seen.insert(b.label).second)
            throw InputError("duplicate basis label '" + b.label + "'");
        top_degree_ = std::max(top_degree_, b.degree);
    }

    for (const auto& [key, value] : upper_) {
        const auto [i, j] = key;
        if (i >= basis_.size() || j >= basis_.size())
            throw InputError("product table index out of range");
        if (i > j)
            throw InputError("product table entry (" + basis_[i].label + ", " + basis_[j].label +
                             ") is below the diagonal; only left <= right is stored");
        if (value.size() != basis_.size())
            throw InputError("product " + basis_[i].label + "*" + basis_[j].label + " has a coefficient vector of wrong length");
    }

    by_degree_.assign(static_cast<std::size_t>(top_degree_) + 1, {});
    for (std::size_t i = 0; i < basis_.size(); ++i)
        by_degree_[static_cast<std::size_t>(basis_[i].degree)].push_back(i);
}

std::span<const std::size_t> GradedAlgebra::indices_of_degree(int n) const
{
    if (n < 0 || n > top_degree_)
        return {};
    return by_degree_[static_cast<std::size_t>(n)];
}

std::optional<std::size_t> GradedAlgebra::find_label(std::string_view label) const
{
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].label == label)
            return i;
    return std::nullopt;
}

VecQ GradedAlgebra::basis_product(std::size_t i, std::size_t j) const
{
    const bool swapped = i > j;
    const auto key = swapped ? std::pair{j, i} : std::pair{i, j};

    if (auto it = upper_.find(key); it != upper_.end()) {
        VecQ v = it->second;
        if (swapped && (degree(i) % 2 != 0) && (degree(j) % 2 != 0))
            for (auto& x : v)
                x = -x;
        return v;
    }

    VecQ v(dim());
    if (i == unit_)
        v[j] = 1;
    else if (j == unit_)
        v[i] = 1;
    return v;
}

AlgebraElement GradedAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const
{
    AlgebraElement out{VecQ(dim()), std::nullopt};
    if (a.degree && b.degree)
        out.degree = *a.degree + *b.degree;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (is_zero(a.coeffs[i]))
            continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (is_zero(b.coeffs[j]))
                continue;
            const Rat f = a.coeffs[i] * b.coeffs[j];
            const VecQ p = basis_product(i, j);
            for (std::size_t k = 0; k < dim(); ++k)
                if (!is_zero(p[k]))
                    out.coeffs[k] += f * p[k];
        }
    }
    return out;
}

AlgebraElement GradedAlgebra::basis_element(std::size_t i) const
{
    AlgebraElement e{VecQ(dim()), degree(i)};
    e.coeffs.at(i) = 1;
    return e;
}

AlgebraElement GradedAlgebra::zero() const { return AlgebraElement{VecQ(dim()), std::nullopt}; }

bool ValidationReport::ok() const
{
    return single_unit.passed && graded_multiplicativity.passed && unit_law.passed && associativity.passed &&
           commutativity.passed && finite_dimension.passed;
}

std::string ValidationReport::first_failure() const
{
    const std::pair<const char*, const ValidationCheck*> checks[] = {
        {"single unit in degree 0", &single_unit},
        {"graded multiplicativity", &graded_multiplicativity},
        {"unit law", &unit_law},
        {"associativity", &associativity},
        {"graded commutativity", &commutativity},
        {"finite dimension", &finite_dimension},
    };
    for (const auto& [name, check] : checks)
        if (!check->passed)
            return std::string(name) + ": " + check->detail;
    return {};
}

ValidationReport validate(const GradedAlgebra& h)
{
    ValidationReport report;
    const std::size_t n = h.dim();
    const auto& basis = h.basis();

    const auto degree0 = h.indices_of_degree(0);
    if (degree0.size() != 1 || degree0[0] != h.unit_index()) {
        report.single_unit.passed = false;
        if (basis[h.unit_index()].degree != 0)
            report.single_unit.detail = "unit '" + basis[h.unit_index()].label + "' is not in degree 0";
        else
            report.single_unit.detail = "degree 0 has dimension " + std::to_string(degree0.size());
    }

    for (const auto& [key, value] : h.table()) {
        const auto [i, j] = key;
        const int expected = basis[i].degree + basis[j].degree;
        for (std::size_t k = 0; k < n; ++k) {
            if (!is_zero(value[k]) && basis[k].degree != expected) {
                report.graded_multiplicativity.passed = false;
                report.graded_multiplicativity.detail = basis[i].label + "*" + basis[j].label + " has a component on '" +
                                                        basis[k].label + "' (degree " + std::to_string(basis[k].degree) +
                                                        "), expected degree " + std::to_string(expected);
                break;
            }
        }
        if (!report.graded_multiplicativity.passed)
            break;
    }

    for (std::size_t b = 0; b < n && report.unit_law.passed; ++b) {
        VecQ e(n);
        e[b] = 1;
        if (h.basis_product(h.unit_index(), b) != e) {
            report.unit_law.passed = false;
            report.unit_law.detail = "1*" + basis[b].label + " = " + describe(h, h.basis_product(h.unit_index(), b));
        }
    }

    for (std::size_t i = 0; i < n && report.commutativity.passed; ++i) {
        if (basis[i].degree % 2 == 0)
            continue;
        const VecQ sq = h.basis_product(i, i);
        if (!all_zero(sq)) {
            report.commutativity.passed = false;
            report.commutativity.detail = "odd-degree class " + basis[i].label + " has nonzero square " + describe(h, sq);
        }
    }

    std::vector<std::vector<SparseVec>> products(n, std::vector<SparseVec>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            products[i][j] = to_sparse(h.basis_product(i, j));

    // Triples through the unit, or above the top degree, are trivially
    // associative once the unit law and graded multiplicativity hold.
    const bool skip_unit = report.unit_law.passed;
    const bool skip_high = report.graded_multiplicativity.passed;
    const int top = h.top_degree();
    VecQ left(n), right(n);
    std::vector<std::size_t> touched;
    for (std::size_t a = 0; a < n && report.associativity.passed; ++a) {
        if (skip_unit && a == h.unit_index())
            continue;
        for (std::size_t b = 0; b < n && report.associativity.passed; ++b) {
            if ((skip_unit && b == h.unit_index()) || (skip_high && basis[a].degree + basis[b].degree > top))
                continue;
            for (std::size_t c = 0; c < n; ++c) {
                if ((skip_unit && c == h.unit_index()) ||
                    (skip_high && basis[a].degree + basis[b].degree + basis[c].degree > top))
                    continue;
                touched.clear();
                for (const auto& [k, f] : products[a][b])
                    for (const auto& [m, g] : products[k][c]) {
                        left[m] += f * g;
                        touched.push_back(m);
                    }
                for (const auto& [k, f] : products[b][c])
                    for (const auto& [m, g] : products[a][k]) {
                        right[m] += f * g;
                        touched.push_back(m);
                    }
                const bool equal = std::all_of(touched.begin(), touched.end(),
                                               [&](std::size_t m) { return left[m] == right[m]; });
                if (!equal) {
                    report.associativity.passed = false;
                    report.associativity.detail = "(" + basis[a].label + "*" + basis[b].label + ")*" + basis[c].label +
                                                  " = " + describe(h, left) + " but " + basis[a].label + "*(" +
                                                  basis[b].label + "*" + basis[c].label + ") = " + describe(h, right);
                }
                for (auto m : touched)
                    left[m] = right[m] = 0;
                if (!equal)
                    break;
            }
        }
    }

    report.odd_vanishing = std::none_of(basis.begin(), basis.end(), [](const BasisElement& b) { return b.degree % 2 != 0; });
    return report;
}

std::vector<std::vector<VecQ>> decomposables(const GradedAlgebra& h)
{
    const auto top = static_cast<std::size_t>(h.top_degree());
    std::vector<std::vector<VecQ>> spanning(top + 1);
    for (std::size_t i = 0; i < h.dim(); ++i) {
        if (h.degree(i) == 0)
            continue;
        for (std::size_t j = i; j < h.dim(); ++j) {
            if (h.degree(j) == 0)
                continue;
            const int d = h.degree(i) + h.degree(j);
            if (d > h.top_degree())
                continue;
            VecQ p = h.basis_product(i, j);
            if (!all_zero(p))
                spanning[static_cast<std::size_t>(d)].push_back(std::move(p));
        }
    }

    std::vector<std::vector<VecQ>> out(top + 1);
    for (std::size_t d = 1; d <= top; ++d) {
        if (spanning[d].empty())
            continue;
        const auto red = rref(MatQ::from_rows(spanning[d], h.dim()));
        for (std::size_t r = 0; r < red.rank; ++r)
            out[d].push_back(red.rref.row(r));
    }
    return out;
}

int GeneratorSet::max_degree() const
{
    int m = 0;
    for (const auto& g : generators)
        m = std::max(m, g.degree);
    return m;
}

bool GeneratorSet::all_even() const
{
    return std::all_of(generators.begin(), generators.end(), [](const Generator& g) { return g.degree % 2 == 0; });
}

GeneratorSet choose_generators(const GradedAlgebra& h)
{
    const auto dec = decomposables(h);
    GeneratorSet gens;
    for (int d = 1; d <= h.top_degree(); ++d) {
        const auto idx = h.indices_of_degree(d);
        if (idx.empty())
            continue;
        std::vector<VecQ> local;
        for (const auto& v : dec[static_cast<std::size_t>(d)]) {
            VecQ w(idx.size());
            for (std::size_t k = 0; k < idx.size(); ++k)
                w[k] = v[idx[k]];
            local.push_back(std::move(w));
        }
        for (const auto& e : extend_to_complement(local, idx.size())) {
            const auto k = static_cast<std::size_t>(std::find(e.begin(), e.end(), Rat(1)) - e.begin());
            const std::size_t b = idx[k];
            VecQ cls(h.dim());
            cls[b] = 1;
            gens.generators.push_back(Generator{h.basis()[b].label, d, std::move(cls)});
        }
    }
    return gens;
}

AlgebraElement evaluate_phi(const GradedAlgebra& h, const GeneratorSet& gens, std::span<const std::size_t> factors)
{
    if (factors.empty())
        throw std::invalid_argument("evaluate_phi: empty factor multiset");

    int total = 0;
    for (auto f : factors)
        total += gens.generators.at(f).degree;
    if (total > h.top_degree()) {
        auto z = h.zero();
        z.degree = total;
        return z;
    }

    AlgebraElement acc{gens[factors[0]].class_vector, gens[factors[0]].degree};
    for (std::size_t k = 1; k < factors.size(); ++k) {
        if (acc.is_zero())
            break;
        acc = h.multiply(acc, AlgebraElement{gens[factors[k]].class_vector, gens[factors[k]].degree});
    }
    acc.degree = total;
    return acc;
}

} // namespace formacheck
