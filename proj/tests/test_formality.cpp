#include "formacheck/corpus.hpp"
#include "formacheck/formality.hpp"
#include "formacheck/pipeline.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <functional>
#include <stdexcept>

using namespace formacheck;

namespace {

// 1, a, b (2), c (4) with a^2 = b^2 = c and ab = 0.
GradedAlgebra equal_squares()
{
    std::vector<BasisElement> basis{{"1", 0}, {"a", 2}, {"b", 2}, {"c", 4}};
    ProductTable t;
    t[{1, 1}] = testutil::vec({"0", "0", "0", "1"});
    t[{2, 2}] = testutil::vec({"0", "0", "0", "1"});
    return GradedAlgebra("equal_squares", basis, 0, t);
}

EFamily e_of(const GradedAlgebra& h) { return compute_E(h, choose_generators(h)); }

} // namespace

TEST_CASE("condition (i)")
{
    CHECK(check_condition_i(e_of(corpus::even_sphere(2))));
    CHECK(check_condition_i(e_of(corpus::wedge(corpus::even_sphere(2), corpus::even_sphere(4)))));
    CHECK_FALSE(check_condition_i(e_of(corpus::truncated_poly(2, 3))));
}

TEST_CASE("condition (ii)")
{
    CHECK(check_condition_ii(e_of(corpus::truncated_poly(2, 4))));
    CHECK(check_condition_ii(EFamily{}));
    CHECK_FALSE(check_condition_ii(e_of(equal_squares())));
    // S^2 x S^2: E = {x*x'} only, independent
    CHECK(check_condition_ii(e_of(corpus::product(corpus::even_sphere(2), corpus::even_sphere(2)))));
}

TEST_CASE("degree set")
{
    CHECK(degree_set(corpus::truncated_poly(2, 3)).degrees == std::vector<int>{2, 4});
    CHECK(degree_set(corpus::wedge(corpus::even_sphere(2), corpus::even_sphere(6))).degrees == std::vector<int>{2, 6});
    CHECK(degree_set(GradedAlgebra("pt", {{"1", 0}}, 0, {})).degrees.empty());
}

TEST_CASE("corollary checks")
{
    CHECK(corollary_integer_check(std::vector<int>{2, 4}) == std::vector<bool>{true, false});
    CHECK(corollary_integer_check(std::vector<int>{4, 6}) == std::vector<bool>{true, true});
    CHECK(corollary_integer_check(std::vector<int>{4, 6, 9}) == std::vector<bool>{true, true, true});
    CHECK(corollary_integer_check(std::vector<int>{3}) == std::vector<bool>{true});
    CHECK(corollary_integer_check(std::vector<int>{4, 6, 8}) == std::vector<bool>{true, true, false});
    CHECK(corollary_integer_check(std::vector<int>{}).empty());

    CHECK(corollary_nonnegative_check(std::vector<int>{2, 4}) == std::vector<bool>{true, false});
    CHECK(corollary_nonnegative_check(std::vector<int>{4, 6}) == std::vector<bool>{true, true});
    CHECK(corollary_nonnegative_check(std::vector<int>{4, 6, 10}) == std::vector<bool>{true, true, false});

    CHECK_THROWS_AS(corollary_integer_check(std::vector<int>{4, 2}), std::invalid_argument);
    CHECK_THROWS_AS(corollary_integer_check(std::vector<int>{0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(corollary_nonnegative_check(std::vector<int>{2, 2}), std::invalid_argument);
}

TEST_CASE("property: integer check agrees with bounded exhaustive search")
{
    // every strictly increasing set with at most 3 elements from 1..20
    std::vector<int> f;
    std::function<void(int)> rec = [&](int next) {
        if (!f.empty()) {
            const auto flags = corollary_integer_check(f);
            for (std::size_t k = 1; k < f.size(); ++k) {
                std::vector<int> prefix(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(k));
                CHECK(flags[k] == !oracle::integer_combination(prefix, f[k], f[k]));
            }
        }
        if (f.size() == 3)
            return;
        for (int n = next; n <= 20; ++n) {
            f.push_back(n);
            rec(n + 1);
            f.pop_back();
        }
    };
    rec(1);
}

TEST_CASE("property: nonnegative check agrees with brute force")
{
    auto representable = [](const std::vector<int>& gens, int n) {
        std::vector<bool> ok(static_cast<std::size_t>(n) + 1, false);
        ok[0] = true;
        for (int s = 1; s <= n; ++s)
            for (int g : gens)
                if (g <= s && ok[static_cast<std::size_t>(s - g)])
                    ok[static_cast<std::size_t>(s)] = true;
        return static_cast<bool>(ok[static_cast<std::size_t>(n)]);
    };
    for (int a = 1; a <= 12; ++a)
        for (int b = a + 1; b <= 24; ++b)
            for (int c = b + 1; c <= 30; c += 3) {
                std::vector<int> f{a, b, c};
                auto flags = corollary_nonnegative_check(f);
                CHECK(flags[1] == !representable({a}, b));
                CHECK(flags[2] == !representable({a, b}, c));
            }
}

TEST_CASE("verdicts")
{
    SUBCASE("sphere: formal by (i), verified")
    {
        auto r = run_pipeline(corpus::even_sphere(2), 12);
        CHECK(r.verdict.classification == Classification::formal_by_theorem);
        CHECK(r.verdict.condition_i);
        CHECK_FALSE(r.verdict.discrepancy);
        CHECK(r.verdict.exit_code() == 0);
    }
    SUBCASE("projective plane: formal by (ii)")
    {
        auto r = run_pipeline(corpus::truncated_poly(2, 3), 12);
        CHECK_FALSE(r.verdict.condition_i);
        CHECK(r.verdict.condition_ii);
        CHECK(r.verdict.exit_code() == 0);
    }
    SUBCASE("wedge of spheres: discrepancy at degree 5")
    {
        auto s2 = corpus::even_sphere(2);
        auto r = run_pipeline(corpus::wedge(s2, s2));
        CHECK(r.verdict.classification == Classification::formal_by_theorem);
        CHECK(r.verdict.discrepancy);
        CHECK(r.verdict.discrepancy_degree == std::optional<int>(5));
        CHECK(r.verdict.exit_code() == 4);
    }
    SUBCASE("dependent E: inconclusive")
    {
        auto r = run_pipeline(equal_squares());
        CHECK(r.verdict.classification == Classification::inconclusive);
        CHECK(r.verdict.exit_code() == 2);
    }
    SUBCASE("odd sphere: hypothesis violated, model skipped")
    {
        auto r = run_pipeline(corpus::truncated_poly(3, 2));
        CHECK(r.verdict.classification == Classification::hypothesis_violated);
        CHECK_FALSE(r.model);
        CHECK_FALSE(r.quasi);
        CHECK(r.verdict.exit_code() == 3);
    }
    CHECK(to_string(Classification::formal_by_theorem) == "FORMAL_BY_THEOREM");
    CHECK(to_string(Classification::inconclusive) == "INCONCLUSIVE");
    CHECK(to_string(Classification::hypothesis_violated) == "HYPOTHESIS_VIOLATED");
}
