#include <doctest.h>

#include "amalgam/amalgam.hpp"
#include "amalgam/errors.hpp"
#include "amalgam/fayers.hpp"
#include "amalgam/linalg.hpp"
#include "oracles.hpp"

using namespace amalgam;

namespace {

Matrix<Rational> random_square(std::size_t n, SeededEntries& rng) {
    Matrix<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(rng.entry());
    return m;
}

template <class T>
T minor_product_oracle(const Matrix<T>& m, const Tableau& t) {
    T out(1);
    for (std::size_t c = 0; c < t.shape().num_cols(); ++c) {
        std::vector<std::size_t> rows;
        for (auto label : column(t, c)) rows.push_back(label - 1);
        out *= oracle::cofactor_det(m.select_rows(rows));
    }
    return out;
}

// The permutation sum written out directly.
Rational perm_sum_oracle(const AmalgamPair<Rational>& p, const Tableau& alpha, const Tableau& beta) {
    std::vector<std::uint32_t> s(p.m * p.n);
    std::iota(s.begin(), s.end(), 1u);
    Rational total = 0;
    do {
        const Rational term = minor_product_oracle(p.a, apply_perm(s, alpha)) * minor_product_oracle(p.b, apply_perm(s, beta));
        total += oracle::inversion_sign(s) * term;
    } while (std::next_permutation(s.begin(), s.end()));
    return total;
}

const std::vector<std::pair<std::size_t, std::size_t>> kShapes{{1, 3}, {2, 2}, {2, 3}, {3, 2}, {4, 2}, {3, 3}};

}  // namespace

TEST_CASE("star agrees with the row-wise Kronecker layout") {
    SeededEntries rng(1);
    const auto p = random_pair(3, 2, rng);
    CHECK(star(p) == oracle::face_splitting(p.a, p.b));
    const auto s = symbolic_pair(2, 2);
    CHECK(star(s)(0, 2) == s.a(0, 0) * s.b(0, 1));
    CHECK(s.a(1, 0).to_string() == "a2_1");
    CHECK(s.b(3, 1).to_string() == "b4_2");
}

TEST_CASE("pair construction checks dimensions") {
    CHECK_THROWS_AS(make_amalgam_pair(Matrix<Rational>(4, 2), Matrix<Rational>(3, 2)), Error);
    CHECK_THROWS_AS(make_amalgam_pair(Matrix<Rational>(5, 2), Matrix<Rational>(5, 2)), Error);
    CHECK_NOTHROW(make_amalgam_pair(Matrix<Rational>(6, 3), Matrix<Rational>(6, 2)));
}

TEST_CASE("tableau minor products") {
    SeededEntries rng(2);
    const auto p = random_pair(3, 2, rng);
    for (const auto& t : enumerate_syt(3, 2)) {
        CHECK(tableau_minor_product(p.a, t) == minor_product_oracle(p.a, t));
        CHECK(tableau_minor_product(p.b, conjugate(t)) == minor_product_oracle(p.b, conjugate(t)));
    }
    CHECK_THROWS_AS(tableau_minor_product(p.a, trivial_tableau(2, 3)), ShapeError);
    CHECK_THROWS_AS(tableau_minor_product(p.a, trivial_tableau(4, 2)), Error);
}

TEST_CASE("expansion equals det(A*B) on random integer pairs") {
    for (auto [m, n] : kShapes) {
        SeededEntries rng(derive_seed(100, m * 10 + n));
        for (int t = 0; t < 10; ++t) {
            const auto p = random_pair(m, n, rng);
            const auto e = phi_expansion(p);
            CHECK(e.total == det(star(p)));
        }
    }
}

TEST_CASE("expansion is an identity of polynomials for 2^2") {
    const auto p = symbolic_pair(2, 2);
    const auto e = phi_expansion(p);
    CHECK(e.terms.size() == 2);
    CHECK(e.total == oracle::leibniz_det(star(p)));
}

TEST_CASE("expansion terms for 2^3 follow the printed formula") {
    const auto p = symbolic_pair(3, 2);
    const auto e = phi_expansion(p);
    const auto basis = enumerate_syt(3, 2);
    // (alpha index, beta index, coefficient), beta_j the conjugate of alpha_j
    std::vector<std::tuple<std::size_t, std::size_t, int>> expected{{0, 0, 1}, {0, 4, 1}, {1, 1, -1},
                                                                     {2, 2, 1}, {3, 3, 1}, {4, 4, -1}};
    REQUIRE(e.terms.size() == expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) {
        const auto [i, j, c] = expected[k];
        CHECK(e.terms[k].alpha == basis[i]);
        CHECK(e.terms[k].beta == conjugate(basis[j]));
        CHECK(e.terms[k].coef == c);
    }
    CHECK(e.total == det(star(p)));
}

TEST_CASE("a corrupted coefficient breaks the identity") {
    SeededEntries rng(7);
    const auto p = random_pair(3, 2, rng);
    auto phi = phi_matrix(3, 2);
    phi.entries(2, 2) += 1;
    CHECK(phi_expansion(p, &phi).total != det(star(p)));
    const auto wrong = phi_matrix(2, 3);
    CHECK_THROWS_AS(phi_expansion(p, &wrong), ShapeError);
}

TEST_CASE("permutation sum against the written-out sum") {
    SeededEntries rng(3);
    const auto p = random_pair(2, 2, rng);
    for (const auto& a : enumerate_syt(2, 2))
        for (const auto& b : enumerate_syt(2, 2)) CHECK(perm_sum(p, a, conjugate(b)) == perm_sum_oracle(p, a, conjugate(b)));
    const auto q = random_pair(3, 2, rng);
    const Tableau one = trivial_tableau(3, 2);
    CHECK(perm_sum(q, one, conjugate(one)) == perm_sum_oracle(q, one, conjugate(one)));
}

TEST_CASE("permutation sum of the trivial pair is H det(A*B)") {
    for (auto [m, n] : {std::pair<std::size_t, std::size_t>{2, 2}, {3, 2}, {2, 3}}) {
        SeededEntries rng(derive_seed(5, m * 10 + n));
        const auto p = random_pair(m, n, rng);
        const Tableau one = trivial_tableau(m, n);
        CHECK(perm_sum(p, one, conjugate(one)) == Rational(hook_product(m, n)) * det(star(p)));
    }
    const auto s = symbolic_pair(2, 2);
    const Tableau one = trivial_tableau(2, 2);
    CHECK(perm_sum(s, one, conjugate(one)) == Poly(12) * det(star(s)));
}

TEST_CASE("threaded permutation sum matches the serial one") {
    SeededEntries rng(9);
    const auto p = random_pair(3, 2, rng);
    const Tableau one = trivial_tableau(3, 2);
    CHECK(perm_sum(p, one, conjugate(one), {10, 4}) == perm_sum(p, one, conjugate(one), {10, 1}));
}

TEST_CASE("permutation sum limits and shape checks") {
    SeededEntries rng(4);
    const auto p = random_pair(3, 3, rng);
    const Tableau one = trivial_tableau(3, 3);
    CHECK_THROWS_AS(perm_sum(p, one, conjugate(one), {8, 1}), ResourceError);
    const auto q = random_pair(3, 2, rng);
    CHECK_THROWS_AS(perm_sum(q, trivial_tableau(2, 3), trivial_tableau(3, 2)), ShapeError);
}

TEST_CASE("kappa vanishes exactly with the pairing") {
    for (auto [m, n] : {std::pair<std::size_t, std::size_t>{2, 2}, {3, 2}}) {
        const auto basis = enumerate_syt(m, n);
        for (const auto& a : basis)
            for (const auto& b : basis) {
                const Integer k = kappa(m, n, a, conjugate(b), 17);
                CHECK((k == 0) == (pairing(a, conjugate(b)) == 0));
            }
        CHECK(kappa(m, n, trivial_tableau(m, n), conjugate(trivial_tableau(m, n)), 3) == hook_product(m, n));
    }
}

TEST_CASE("Kronecker embedding") {
    SeededEntries rng(8);
    for (auto [m, n] : {std::pair<std::size_t, std::size_t>{2, 2}, {3, 2}, {2, 3}, {4, 3}, {3, 4}}) {
        const auto c = random_square(m, rng);
        const auto d = random_square(n, rng);
        const auto p = kron_embed(c, d);
        const auto s = star(p);
        // row i + j*m, column a + b*m holds c(i,a) d(j,b)
        bool layout = true;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t a = 0; a < m; ++a)
                    for (std::size_t b = 0; b < n; ++b) layout = layout && s(i + j * m, a + b * m) == c(i, a) * d(j, b);
        CHECK(layout);
        CHECK(det(s) == oracle::power(det(c), static_cast<unsigned>(n)) * oracle::power(det(d), static_cast<unsigned>(m)));
    }
    CHECK_THROWS_AS(kron_embed(Matrix<Rational>(2, 3), Matrix<Rational>(2, 2)), Error);
}
