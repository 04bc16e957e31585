#pragma once

#include "formacheck/graded_algebra.hpp"

#include <vector>

namespace formacheck::corpus {

/// H(S^n) = Q{1, x}, x of degree n. n must be positive and even.
GradedAlgebra even_sphere(int n);

/// Q[x]/(x^height) with |x| = degree. Requires height >= 2; an odd degree
/// is only allowed for height 2 (the odd sphere).
GradedAlgebra truncated_poly(int degree, int height);

/// Tensor product with the Koszul sign (a⊗b)(a'⊗b') = (-1)^{|b||a'|} aa'⊗bb'.
GradedAlgebra product(const GradedAlgebra& a, const GradedAlgebra& b);

/// Units identified, positive parts side by side, cross products zero.
GradedAlgebra wedge(const GradedAlgebra& a, const GradedAlgebra& b);

/// Q[x_1..x_k] modulo the monomial ideal spanned by `relations` and by
/// every monomial of degree > top. Generator degrees must be positive and
/// even; each relation is an exponent vector of length k.
GradedAlgebra monomial_algebra(const std::vector<int>& generator_degrees,
                               const std::vector<std::vector<unsigned>>& relations, int top);

} // namespace formacheck::corpus
