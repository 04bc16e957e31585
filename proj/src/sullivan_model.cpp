#include "formacheck/sullivan_model.hpp"

#include "formacheck/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace formacheck {

std::size_t Monomial::length() const
{
    std::size_t n = odd.size();
    for (const auto& [g, e] : even)
        n += e;
    return n;
}

std::vector<std::size_t> Monomial::even_factors() const
{
    std::vector<std::size_t> out;
    for (const auto& [g, e] : even)
        out.insert(out.end(), e, g);
    return out;
}

Monomial monomial_from_factors(std::span<const std::size_t> factors, std::span<const int> degrees)
{
    Monomial m;
    std::vector<std::size_t> sorted(factors.begin(), factors.end());
    std::sort(sorted.begin(), sorted.end());
    for (auto g : sorted) {
        if (degrees[g] % 2 != 0)
            throw std::invalid_argument("monomial_from_factors: odd generator in an even multiset");
        if (!m.even.empty() && m.even.back().first == g)
            ++m.even.back().second;
        else
            m.even.emplace_back(g, 1u);
        m.degree += degrees[g];
    }
    return m;
}

std::string format_monomial(const Monomial& m, std::span<const std::string> labels)
{
    if (m.is_unit())
        return "1";
    std::string s;
    auto append = [&s](const std::string& part) {
        if (!s.empty())
            s += '*';
        s += part;
    };
    for (const auto& [g, e] : m.even)
        append(e == 1 ? labels[g] : labels[g] + "^" + std::to_string(e));
    for (auto g : m.odd)
        append(labels[g]);
    return s;
}

SignedMonomial multiply(const Monomial& a, const Monomial& b)
{
    SignedMonomial out;
    Monomial& p = out.monomial;
    p.degree = a.degree + b.degree;

    // even parts: merge exponent lists
    auto ia = a.even.begin();
    auto ib = b.even.begin();
    while (ia != a.even.end() || ib != b.even.end()) {
        if (ib == b.even.end() || (ia != a.even.end() && ia->first < ib->first))
            p.even.push_back(*ia++);
        else if (ia == a.even.end() || ib->first < ia->first)
            p.even.push_back(*ib++);
        else {
            p.even.emplace_back(ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        }
    }

    // odd parts: merge, counting how many of a's factors each b factor passes
    std::size_t inversions = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.odd.size() || j < b.odd.size()) {
        if (j == b.odd.size() || (i < a.odd.size() && a.odd[i] < b.odd[j]))
            p.odd.push_back(a.odd[i++]);
        else if (i == a.odd.size() || b.odd[j] < a.odd[i]) {
            inversions += a.odd.size() - i;
            p.odd.push_back(b.odd[j++]);
        } else {
            out.sign = 0;
            out.monomial = Monomial{};
            return out;
        }
    }
    out.sign = inversions % 2 == 0 ? 1 : -1;
    return out;
}

Model::Model(GeneratorSet even, std::vector<OddGenerator> odd) : even_(std::move(even)), odd_(std::move(odd))
{
    for (const auto& g : even_.generators) {
        if (g.degree <= 0 || g.degree % 2 != 0)
            throw InputError("model generator '" + g.label + "' must have positive even degree");
        degrees_.push_back(g.degree);
        labels_.push_back(g.label);
    }
    for (const auto& w : odd_) {
        if (w.degree <= 0 || w.degree % 2 == 0)
            throw InputError("model generator '" + w.label + "' must have positive odd degree");
        if (!w.target.pure_even() || w.target.degree != w.degree + 1)
            throw InputError("differential of '" + w.label + "' must be an even monomial of degree " +
                             std::to_string(w.degree + 1));
        for (const auto& [g, e] : w.target.even)
            if (g >= even_.size())
                throw InputError("differential of '" + w.label + "' refers to an unknown generator");
        degrees_.push_back(w.degree);
        labels_.push_back(w.label);
    }
}

std::vector<Monomial> monomials_of_degree(std::span<const int> degrees, int n)
{
    std::vector<Monomial> out;
    if (n < 0)
        return out;

    Monomial current;
    std::function<void(std::size_t, int)> rec = [&](std::size_t g, int remaining) {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        if (g == degrees.size())
            return;
        const int d = degrees[g];
        if (d <= 0)
            throw std::invalid_argument("monomials_of_degree: generator degrees must be positive");
        if (d % 2 != 0) {
            if (d <= remaining) {
                current.odd.push_back(g);
                current.degree += d;
                rec(g + 1, remaining - d);
                current.degree -= d;
                current.odd.pop_back();
            }
            rec(g + 1, remaining);
            return;
        }
        for (auto e = static_cast<unsigned>(remaining / d); e >= 1; --e) {
            current.even.emplace_back(g, e);
            current.degree += static_cast<int>(e) * d;
            rec(g + 1, remaining - static_cast<int>(e) * d);
            current.degree -= static_cast<int>(e) * d;
            current.even.pop_back();
        }
        rec(g + 1, remaining);
    };
    rec(0, n);
    return out;
}

std::vector<Monomial> monomials_of_degree(const Model& model, int n) { return monomials_of_degree(model.degrees(), n); }

namespace {

std::vector<int> generator_degrees(const GeneratorSet& gens)
{
    std::vector<int> d;
    for (const auto& g : gens.generators)
        d.push_back(g.degree);
    return d;
}

AlgebraElement phi_of(const GradedAlgebra& h, const GeneratorSet& gens, const Monomial& m)
{
    if (m.is_unit())
        return h.basis_element(h.unit_index());
    const auto factors = m.even_factors();
    return evaluate_phi(h, gens, factors);
}

class PhiCache {
public:
    PhiCache(const GradedAlgebra& h, const GeneratorSet& gens) : h_(h), gens_(gens) {}

    const AlgebraElement& operator()(const Monomial& m)
    {
        auto it = cache_.find(m);
        if (it == cache_.end())
            it = cache_.emplace(m, phi_of(h_, gens_, m)).first;
        return it->second;
    }

private:
    const GradedAlgebra& h_;
    const GeneratorSet& gens_;
    std::map<Monomial, AlgebraElement> cache_;
};

/// Every sub-monomial of m (pure even), including the unit and m itself.
std::vector<Monomial> divisors(const Monomial& m, std::span<const int> degrees)
{
    std::vector<Monomial> out;
    std::vector<unsigned> exps(m.even.size(), 0);
    while (true) {
        Monomial d;
        for (std::size_t k = 0; k < exps.size(); ++k)
            if (exps[k] > 0) {
                d.even.emplace_back(m.even[k].first, exps[k]);
                d.degree += static_cast<int>(exps[k]) * degrees[m.even[k].first];
            }
        out.push_back(std::move(d));

        std::size_t k = 0;
        while (k < exps.size() && exps[k] == m.even[k].second)
            exps[k++] = 0;
        if (k == exps.size())
            break;
        ++exps[k];
    }
    std::sort(out.begin(), out.end());
    return out;
}

void require_even(const GeneratorSet& gens, const char* what)
{
    if (!gens.all_even())
        throw InputError(std::string(what) + ": all generators must have even degree");
}

} // namespace

EFamily compute_E(const GradedAlgebra& h, const GeneratorSet& gens)
{
    require_even(gens, "compute_E");
    const auto degrees = generator_degrees(gens);
    EFamily family;
    for (int n = 1; n <= h.top_degree(); ++n)
        for (auto& m : monomials_of_degree(degrees, n)) {
            if (m.length() < 2)
                continue;
            auto image = phi_of(h, gens, m);
            if (!image.is_zero())
                family.entries.push_back(EEntry{std::move(m), std::move(image)});
        }
    return family;
}

std::vector<GoodObject> good_objects(const GradedAlgebra& h, const GeneratorSet& gens)
{
    require_even(gens, "good_objects");
    const auto degrees = generator_degrees(gens);
    const int bound = h.top_degree() + gens.max_degree();
    PhiCache phi(h, gens);

    std::vector<GoodObject> goods;
    for (int n = 1; n <= bound; ++n)
        for (auto& m : monomials_of_degree(degrees, n)) {
            const std::size_t len = m.length();
            if (len < 2 || !phi(m).is_zero())
                continue;
            GoodObject good{m, {}, phi(m)};
            bool ok = true;
            for (auto& d : divisors(m, degrees)) {
                const std::size_t dl = d.length();
                if (dl < 2 || dl >= len)
                    continue;
                const auto& image = phi(d);
                if (image.is_zero()) {
                    ok = false;
                    break;
                }
                good.divisor_images.emplace_back(std::move(d), image);
            }
            if (ok)
                goods.push_back(std::move(good));
        }
    return goods;
}

Model build_model(const GeneratorSet& gens, std::span<const GoodObject> goods)
{
    require_even(gens, "build_model");
    std::vector<std::string> labels;
    for (const auto& g : gens.generators)
        labels.push_back(g.label);

    std::vector<OddGenerator> odd;
    for (const auto& good : goods)
        odd.push_back(OddGenerator{"w[" + format_monomial(good.monomial, labels) + "]", good.monomial.degree - 1,
                                   good.monomial});
    return Model(gens, std::move(odd));
}

Model build_model(const GradedAlgebra& h, const GeneratorSet& gens)
{
    const auto goods = good_objects(h, gens);
    return build_model(gens, goods);
}

Cochain differential(const Model& model, const Monomial& m)
{
    Cochain out;
    Monomial prefix;
    prefix.even = m.even;
    for (const auto& [g, e] : m.even)
        prefix.degree += static_cast<int>(e) * model.degrees()[g];

    for (std::size_t j = 0; j < m.odd.size(); ++j) {
        const std::size_t g = m.odd[j];
        const auto& target = model.odd_generators()[g - model.even_count()].target;

        Monomial suffix;
        for (std::size_t k = j + 1; k < m.odd.size(); ++k) {
            suffix.odd.push_back(m.odd[k]);
            suffix.degree += model.degrees()[m.odd[k]];
        }

        // (-1)^{|prefix|} prefix * d(w) * suffix
        const auto left = multiply(prefix, target);
        const auto full = multiply(left.monomial, suffix);
        const int sign = ((prefix.degree % 2 == 0) ? 1 : -1) * left.sign * full.sign;
        if (sign != 0) {
            auto& c = out[full.monomial];
            c += sign;
            if (is_zero(c))
                out.erase(full.monomial);
        }

        prefix.odd.push_back(g);
        prefix.degree += model.degrees()[g];
    }
    return out;
}

MatQ differential_matrix(const Model& model, int n)
{
    const auto source = monomials_of_degree(model, n);
    const auto target = monomials_of_degree(model, n + 1);
    std::map<Monomial, std::size_t> row_of;
    for (std::size_t r = 0; r < target.size(); ++r)
        row_of.emplace(target[r], r);

    MatQ d(target.size(), source.size());
    for (std::size_t c = 0; c < source.size(); ++c)
        for (const auto& [mono, coeff] : differential(model, source[c]))
            d(row_of.at(mono), c) += coeff;
    return d;
}

AlgebraElement phi_tilde(const Model& model, const GradedAlgebra& h, const Cochain& element)
{
    AlgebraElement out = h.zero();
    std::optional<int> degree;
    for (const auto& [m, coeff] : element) {
        if (degree && *degree != m.degree)
            throw std::invalid_argument("phi_tilde: element is not homogeneous");
        degree = m.degree;
        if (!m.pure_even() || is_zero(coeff))
            continue;
        const auto image = phi_of(h, model.even_generators(), m);
        for (std::size_t k = 0; k < h.dim(); ++k)
            if (!is_zero(image.coeffs[k]))
                out.coeffs[k] += coeff * image.coeffs[k];
    }
    out.degree = degree;
    return out;
}

MatQ phi_tilde_matrix(const Model& model, const GradedAlgebra& h, int n)
{
    const auto source = monomials_of_degree(model, n);
    const auto rows = h.indices_of_degree(n);
    MatQ m(rows.size(), source.size());
    if (rows.empty())
        return m;
    for (std::size_t c = 0; c < source.size(); ++c) {
        if (!source[c].pure_even())
            continue;
        const auto image = phi_of(h, model.even_generators(), source[c]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            m(r, c) = image.coeffs[rows[r]];
    }
    return m;
}

} // namespace formacheck
