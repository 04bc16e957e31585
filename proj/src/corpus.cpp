#include "formacheck/corpus.hpp"

#include "formacheck/errors.hpp"
#include "formacheck/sullivan_model.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace formacheck::corpus {

namespace {

bool all_zero(const VecQ& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return is_zero(x); });
}

/// Labels for the right operand's positive classes, primed until they no
/// longer collide with the left operand.
std::vector<std::string> right_labels(const GradedAlgebra& a, const GradedAlgebra& b)
{
    std::set<std::string> left;
    for (const auto& e : a.basis())
        left.insert(e.label);
    std::vector<std::string> labels;
    for (const auto& e : b.basis())
        labels.push_back(e.label);

    auto clashes = [&] {
        for (std::size_t j = 0; j < labels.size(); ++j)
            if (j != b.unit_index() && left.contains(labels[j]))
                return true;
        return false;
    };
    while (clashes())
        for (std::size_t j = 0; j < labels.size(); ++j)
            if (j != b.unit_index())
                labels[j] += "'";
    return labels;
}

} // namespace

GradedAlgebra even_sphere(int n)
{
    if (n <= 0 || n % 2 != 0)
        throw InputError("even_sphere: dimension must be a positive even integer, got " + std::to_string(n));
    return GradedAlgebra("S^" + std::to_string(n), {{"1", 0}, {"x", n}}, 0, {});
}

GradedAlgebra truncated_poly(int degree, int height)
{
    if (height < 2)
        throw InputError("truncated_poly: height must be at least 2, got " + std::to_string(height));
    if (degree <= 0)
        throw InputError("truncated_poly: degree must be positive, got " + std::to_string(degree));
    if (degree % 2 != 0 && height > 2)
        throw InputError("truncated_poly: an odd-degree generator squares to zero, so height must be 2");

    std::vector<BasisElement> basis;
    for (int k = 0; k < height; ++k)
        basis.push_back({k == 0 ? "1" : (k == 1 ? "x" : "x^" + std::to_string(k)), k * degree});

    ProductTable table;
    const auto n = static_cast<std::size_t>(height);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = i; i + j < n; ++j) {
            VecQ v(n);
            v[i + j] = 1;
            table.emplace(std::pair{i, j}, std::move(v));
        }
    return GradedAlgebra("truncated_poly(" + std::to_string(degree) + "," + std::to_string(height) + ")",
                         std::move(basis), 0, std::move(table));
}

GradedAlgebra product(const GradedAlgebra& a, const GradedAlgebra& b)
{
    const auto blabels = right_labels(a, b);

    struct Pair {
        std::size_t i, j;
        int degree;
    };
    std::vector<Pair> pairs;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            pairs.push_back({i, j, a.degree(i) + b.degree(j)});
    std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) { return x.degree < y.degree; });

    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
    std::vector<BasisElement> basis;
    std::size_t unit = 0;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto [i, j, d] = pairs[p];
        const bool ui = i == a.unit_index();
        const bool uj = j == b.unit_index();
        std::string label;
        if (ui && uj) {
            label = a.basis()[i].label;
            unit = p;
        } else if (uj)
            label = a.basis()[i].label;
        else if (ui)
            label = blabels[j];
        else
            label = a.basis()[i].label + "*" + blabels[j];
        basis.push_back({std::move(label), d});
        index.emplace(std::pair{i, j}, p);
    }

    ProductTable table;
    for (std::size_t p = 0; p < pairs.size(); ++p)
        for (std::size_t q = p; q < pairs.size(); ++q) {
            if (p == unit || q == unit)
                continue;
            const auto& x = pairs[p];
            const auto& y = pairs[q];
            const VecQ left = a.basis_product(x.i, y.i);
            const VecQ right = b.basis_product(x.j, y.j);
            const int sign = (b.degree(x.j) * a.degree(y.i)) % 2 == 0 ? 1 : -1;
            VecQ v(pairs.size());
            for (std::size_t s = 0; s < left.size(); ++s) {
                if (is_zero(left[s]))
                    continue;
                for (std::size_t t = 0; t < right.size(); ++t)
                    if (!is_zero(right[t]))
                        v[index.at({s, t})] += sign * left[s] * right[t];
            }
            if (!all_zero(v))
                table.emplace(std::pair{p, q}, std::move(v));
        }
    return GradedAlgebra(a.name() + " x " + b.name(), std::move(basis), unit, std::move(table));
}

GradedAlgebra wedge(const GradedAlgebra& a, const GradedAlgebra& b)
{
    const auto blabels = right_labels(a, b);
    std::vector<BasisElement> basis{{a.basis()[a.unit_index()].label, 0}};
    std::vector<std::size_t> from_a(a.dim(), 0), from_b(b.dim(), 0);
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (i != a.unit_index()) {
            from_a[i] = basis.size();
            basis.push_back(a.basis()[i]);
        }
    for (std::size_t j = 0; j < b.dim(); ++j)
        if (j != b.unit_index()) {
            from_b[j] = basis.size();
            basis.push_back({blabels[j], b.degree(j)});
        }

    ProductTable table;
    auto copy = [&](const GradedAlgebra& src, const std::vector<std::size_t>& map) {
        for (const auto& [key, value] : src.table()) {
            if (key.first == src.unit_index() || key.second == src.unit_index())
                continue;
            VecQ v(basis.size());
            for (std::size_t k = 0; k < value.size(); ++k)
                if (!is_zero(value[k]))
                    v[map[k]] += value[k];
            if (!all_zero(v))
                table.emplace(std::minmax(map[key.first], map[key.second]), std::move(v));
        }
    };
    copy(a, from_a);
    copy(b, from_b);
    return GradedAlgebra(a.name() + " v " + b.name(), std::move(basis), 0, std::move(table));
}

GradedAlgebra monomial_algebra(const std::vector<int>& generator_degrees,
                               const std::vector<std::vector<unsigned>>& relations, int top)
{
    const std::size_t k = generator_degrees.size();
    for (int d : generator_degrees)
        if (d <= 0 || d % 2 != 0)
            throw InputError("monomial_algebra: generator degrees must be positive and even");
    for (const auto& r : relations)
        if (r.size() != k)
            throw InputError("monomial_algebra: relation has wrong length");

    auto exponents = [k](const Monomial& m) {
        std::vector<unsigned> e(k, 0);
        for (const auto& [g, x] : m.even)
            e[g] = x;
        return e;
    };
    auto in_ideal = [&](const std::vector<unsigned>& e) {
        return std::any_of(relations.begin(), relations.end(), [&](const std::vector<unsigned>& r) {
            for (std::size_t g = 0; g < k; ++g)
                if (e[g] < r[g])
                    return false;
            return true;
        });
    };

    std::vector<std::string> names;
    for (std::size_t g = 0; g < k; ++g)
        names.push_back("x" + std::to_string(g + 1));

    std::vector<std::vector<unsigned>> mons;
    std::vector<BasisElement> basis;
    for (int n = 0; n <= top; ++n)
        for (const auto& m : monomials_of_degree(generator_degrees, n)) {
            auto e = exponents(m);
            if (in_ideal(e))
                continue;
            basis.push_back({format_monomial(m, names), n});
            mons.push_back(std::move(e));
        }
    std::map<std::vector<unsigned>, std::size_t> index;
    for (std::size_t i = 0; i < mons.size(); ++i)
        index.emplace(mons[i], i);

    ProductTable table;
    for (std::size_t i = 1; i < mons.size(); ++i)
        for (std::size_t j = i; j < mons.size(); ++j) {
            std::vector<unsigned> e(k);
            for (std::size_t g = 0; g < k; ++g)
                e[g] = mons[i][g] + mons[j][g];
            if (auto it = index.find(e); it != index.end()) {
                VecQ v(mons.size());
                v[it->second] = 1;
                table.emplace(std::pair{i, j}, std::move(v));
            }
        }
    return GradedAlgebra("monomial_algebra", std::move(basis), 0, std::move(table));
}

} // namespace formacheck::corpus
