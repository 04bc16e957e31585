#pragma once

#include "formacheck/graded_algebra.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace formacheck {

/// Canonical monomial in a free graded-commutative algebra. Even factors
/// are (generator, exponent) pairs sorted by generator; odd factors are a
/// strictly increasing list of generator indices. The canonical form
/// carries sign +1.
struct Monomial {
    std::vector<std::pair<std::size_t, unsigned>> even;
    std::vector<std::size_t> odd;
    int degree = 0;

    /// Number of factors counted with multiplicity.
    std::size_t length() const;
    bool is_unit() const { return even.empty() && odd.empty(); }
    bool pure_even() const { return odd.empty(); }

    /// Even factors as a sorted multiset of generator indices.
    std::vector<std::size_t> even_factors() const;

    auto operator<=>(const Monomial&) const = default;
};

/// Builds a pure-even monomial from a multiset of generator indices.
Monomial monomial_from_factors(std::span<const std::size_t> factors, std::span<const int> degrees);

std::string format_monomial(const Monomial& m, std::span<const std::string> labels);

struct SignedMonomial {
    int sign = 0; // +1, -1, or 0 when the product vanishes
    Monomial monomial;
};

/// Graded-commutative product with the Koszul sign. Vanishes when a and b
/// share an odd factor.
SignedMonomial multiply(const Monomial& a, const Monomial& b);

/// Finite linear combination of monomials.
using Cochain = std::map<Monomial, Rat>;

struct OddGenerator {
    std::string label;
    int degree = 0;
    Monomial target; // d(w) = target, pure even

    friend bool operator==(const OddGenerator&, const OddGenerator&) = default;
};

/// Free CDGA on closed even generators v (indices 0..m-1, the chosen
/// GeneratorSet) and odd generators w (indices m..m+k-1) with d(w) = target.
class Model {
public:
    Model(GeneratorSet even, std::vector<OddGenerator> odd);

    const GeneratorSet& even_generators() const { return even_; }
    std::span<const OddGenerator> odd_generators() const { return odd_; }

    std::size_t generator_count() const { return degrees_.size(); }
    std::size_t even_count() const { return even_.size(); }
    bool is_odd(std::size_t g) const { return g >= even_.size(); }
    std::span<const int> degrees() const { return degrees_; }
    std::span<const std::string> labels() const { return labels_; }

    std::string format(const Monomial& m) const { return format_monomial(m, labels_); }

    friend bool operator==(const Model&, const Model&) = default;

private:
    GeneratorSet even_;
    std::vector<OddGenerator> odd_;
    std::vector<int> degrees_;
    std::vector<std::string> labels_;
};

/// All canonical monomials of degree n in generators of the given degrees
/// (odd degree => exterior), in descending lexicographic order of the
/// exponent vectors (x^2, x*y, y^2). Degree 0 yields only the unit.
std::vector<Monomial> monomials_of_degree(std::span<const int> degrees, int n);
std::vector<Monomial> monomials_of_degree(const Model& model, int n);

struct EEntry {
    Monomial monomial;
    AlgebraElement image;
};

/// Nonzero phi-images of monomials with at least two factors.
struct EFamily {
    std::vector<EEntry> entries;

    bool empty() const { return entries.empty(); }
    std::size_t size() const { return entries.size(); }
};

EFamily compute_E(const GradedAlgebra& h, const GeneratorSet& gens);

struct GoodObject {
    Monomial monomial;
    /// Every proper divisor with at least two factors, with its nonzero image.
    std::vector<std::pair<Monomial, AlgebraElement>> divisor_images;
    /// phi(monomial), always zero.
    AlgebraElement image;
};

std::vector<GoodObject> good_objects(const GradedAlgebra& h, const GeneratorSet& gens);

/// One odd generator w_m of degree |m| - 1 per good object m, d(w_m) = m.
Model build_model(const GradedAlgebra& h, const GeneratorSet& gens);
Model build_model(const GeneratorSet& gens, std::span<const GoodObject> goods);

/// d of a single monomial by the graded Leibniz rule.
Cochain differential(const Model& model, const Monomial& m);

/// Matrix of d from degree n to degree n+1 in the monomials_of_degree bases.
MatQ differential_matrix(const Model& model, int n);

/// Extension of phi sending every w to zero.
AlgebraElement phi_tilde(const Model& model, const GradedAlgebra& h, const Cochain& element);

/// Matrix of phi~ from the monomial basis of degree n to H^n, rows indexed
/// by h.indices_of_degree(n).
MatQ phi_tilde_matrix(const Model& model, const GradedAlgebra& h, int n);

} // namespace formacheck
