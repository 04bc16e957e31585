#pragma once

#include "formacheck/matrix.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace formacheck {

struct BasisElement {
    std::string label;
    int degree = 0;

    friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Upper half of a multiplication table: (i, j) with i <= j maps to the
/// coefficient vector of b_i * b_j. Missing pairs are zero products.
using ProductTable = std::map<std::pair<std::size_t, std::size_t>, VecQ>;

/// Element of the algebra as a coefficient vector over the basis.
/// `degree` is set when the producer knows the element is homogeneous.
struct AlgebraElement {
    VecQ coeffs;
    std::optional<int> degree;

    bool is_zero() const;
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.coeffs == b.coeffs; }
};

/// Finite-dimensional graded commutative unital algebra over Q, given by a
/// basis and the upper half of its multiplication table.
///
/// Products with the unit that are not listed explicitly follow the unit
/// law; the (j, i) product for i < j is (-1)^{|b_i||b_j|} times the (i, j)
/// entry. Construction only enforces structural sanity (index ranges,
/// nonnegative degrees, vector lengths); algebraic axioms are checked by
/// validate().
class GradedAlgebra {
public:
    GradedAlgebra(std::string name, std::vector<BasisElement> basis, std::size_t unit_index, ProductTable upper);

    const std::string& name() const { return name_; }
    std::span<const BasisElement> basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }
    std::size_t unit_index() const { return unit_; }
    int top_degree() const { return top_degree_; }
    const ProductTable& table() const { return upper_; }

    int degree(std::size_t i) const { return basis_.at(i).degree; }

    /// Basis indices of degree n, in index order.
    std::span<const std::size_t> indices_of_degree(int n) const;

    std::optional<std::size_t> find_label(std::string_view label) const;

    /// Product of two basis elements with unit and commutativity rules applied.
    VecQ basis_product(std::size_t i, std::size_t j) const;

    AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
    AlgebraElement basis_element(std::size_t i) const;
    AlgebraElement zero() const;

    friend bool operator==(const GradedAlgebra&, const GradedAlgebra&) = default;

private:
    std::string name_;
    std::vector<BasisElement> basis_;
    std::size_t unit_ = 0;
    ProductTable upper_;
    int top_degree_ = 0;
    std::vector<std::vector<std::size_t>> by_degree_;
};

struct ValidationCheck {
    bool passed = true;
    std::string detail; // witness when the check fails
};

struct ValidationReport {
    ValidationCheck single_unit;
    ValidationCheck graded_multiplicativity;
    ValidationCheck unit_law;
    ValidationCheck associativity;
    ValidationCheck commutativity;
    ValidationCheck finite_dimension;
    bool odd_vanishing = true;

    /// All algebra axioms hold (odd-degree vanishing is a hypothesis, not an axiom).
    bool ok() const;
    /// First failing axiom as "name: detail", empty when ok().
    std::string first_failure() const;
};

ValidationReport validate(const GradedAlgebra& h);

/// For each degree 0..top_degree, a basis (in full basis coordinates) of
/// the span of products of two positive-degree classes landing in that
/// degree. Degree 0 is always empty.
std::vector<std::vector<VecQ>> decomposables(const GradedAlgebra& h);

struct Generator {
    std::string label;
    int degree = 0;
    VecQ class_vector;

    friend bool operator==(const Generator&, const Generator&) = default;
};

/// Chosen complement V of the decomposables, ordered by (degree, basis index).
struct GeneratorSet {
    std::vector<Generator> generators;

    std::size_t size() const { return generators.size(); }
    const Generator& operator[](std::size_t i) const { return generators[i]; }
    int max_degree() const;
    bool all_even() const;

    friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;
};

GeneratorSet choose_generators(const GradedAlgebra& h);

/// phi(v_{t_1} ... v_{t_k}) for the multiset of generator indices `factors`.
/// Zero when the degree exceeds top_degree. Throws std::invalid_argument on
/// an empty multiset.
AlgebraElement evaluate_phi(const GradedAlgebra& h, const GeneratorSet& gens, std::span<const std::size_t> factors);

} // namespace formacheck
