#include <doctest.h>

#include <random>

#include "amalgam/errors.hpp"
#include "amalgam/io.hpp"
#include "amalgam/linalg.hpp"
#include "amalgam/poly.hpp"
#include "amalgam/rational.hpp"
#include "oracles.hpp"

using namespace amalgam;

namespace {

Matrix<Rational> random_rational_matrix(std::size_t n, std::mt19937_64& g, int zero_every = 0) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    Matrix<Rational> m(n, n);
    int k = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational q(num(g), den(g));
            q.canonicalize();
            if (zero_every && ++k % zero_every == 0) q = 0;
            m(i, j) = q;
        }
    return m;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK(parse_rational("+2/4") == Rational(1, 2));
    CHECK(to_string(parse_rational("-6/3")) == "-2");
    CHECK(to_string(Rational(5, 7)) == "5/7");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK(from_double(0.375) == Rational(3, 8));
    CHECK_THROWS_AS(from_double(std::numeric_limits<double>::infinity()), DomainError);
    CHECK(factorial(6) == 720);
}

TEST_CASE("polynomial arithmetic") {
    auto v = make_vars({"x", "y"});
    const Poly x = Poly::variable(v, "x"), y = Poly::variable(v, "y");
    const Poly p = (x + y) * (x - y);
    CHECK(p == x * x - y * y);
    CHECK(p.size() == 2);
    CHECK(p.total_degree() == 2);
    CHECK(p.degree_in("y") == 2);
    CHECK((p - p).is_zero());
    CHECK(Poly(3) * x == x + x + x);
    CHECK(p.diff("x") == Poly(2) * x);
    CHECK(p.evaluate({{"x", Rational(3)}, {"y", Rational(1, 2)}}) == Rational(35, 4));
    CHECK_THROWS_AS(p.evaluate({{"x", Rational(1)}}), NameError);
    CHECK_THROWS_AS(p.evaluate({{"x", 1}, {"y", 1}, {"z", 1}}), NameError);
    CHECK_THROWS_AS(p.diff("z"), NameError);
    CHECK_THROWS_AS(make_vars({"x", "x"}), ArgumentError);

    auto w = make_vars({"x", "y"});
    CHECK_THROWS_AS(x + Poly::variable(make_vars({"u"}), "u"), NameError);
    CHECK(x == Poly::variable(w, "x"));  // equal name lists are the same universe

    // coefficient of x^2 in (x + 2y)^3 is 6y
    const Poly q = (x + Poly(2) * y) * (x + Poly(2) * y) * (x + Poly(2) * y);
    const std::pair<std::string, unsigned> a[] = {{"x", 2}};
    CHECK(q.coefficient(a) == Poly(6) * y);
    const std::pair<std::string, unsigned> bad[] = {{"x", 1}, {"x", 1}};
    CHECK_THROWS_AS(q.coefficient(bad), ArgumentError);

    CHECK((x * x - y * y).divide_exact(x - y) == x + y);
    CHECK_THROWS_AS((x * x + y).divide_exact(x - y), DomainError);
    CHECK_THROWS_AS(x.divide_exact(Poly()), DomainError);

    auto t = make_vars({"s"});
    const Poly s = Poly::variable(t, "s");
    CHECK(p.substitute({{"x", s + Poly(1)}, {"y", s}}, t) == Poly(2) * s + Poly(1));
    CHECK(Poly(Rational(1, 2)).to_string() == "1/2");
    CHECK((Poly(3) * x * x * y - Poly(Rational(1, 2)) * y + Poly(4)).to_string() == "3*x^2*y - 1/2*y + 4");
}

TEST_CASE("rational determinant agrees with cofactor expansion") {
    std::mt19937_64 g(11);
    for (std::size_t n = 0; n <= 6; ++n)
        for (int rep = 0; rep < 5; ++rep) {
            const auto m = random_rational_matrix(n, g, rep % 3 ? 0 : 3);
            CHECK(det(m) == oracle::cofactor_det(m));
        }
    Matrix<Integer> z(3, 3, std::vector<Integer>{2, 0, 1, 1, 3, 2, 1, 1, 1});
    CHECK(det(z) == oracle::cofactor_det(z));
    CHECK_THROWS_AS(det(Matrix<Rational>(2, 3)), DimensionError);
}

TEST_CASE("singular, pivoting and degenerate matrices") {
    Matrix<Rational> zero_pivot(3, 3, std::vector<Rational>{0, 1, 2, 1, 0, 3, 4, -3, 8});
    CHECK(det(zero_pivot) == oracle::cofactor_det(zero_pivot));
    Matrix<Rational> dup(3, 3, std::vector<Rational>{1, 2, 3, 1, 2, 3, 0, 1, 5});
    CHECK(det(dup) == 0);
    CHECK(rank(dup) == 2);
    CHECK_THROWS_AS(inverse(dup), SingularError);
    CHECK(det(Matrix<Rational>(0, 0)) == 1);
}

TEST_CASE("inverse and kernel") {
    std::mt19937_64 g(5);
    auto m = random_rational_matrix(4, g);
    REQUIRE(det(m) != 0);
    CHECK(m * inverse(m) == Matrix<Rational>::identity(4));

    // x + y + z = 0 and x = z: kernel is spanned by (1, -2, 1)
    Matrix<Rational> a(2, 3, std::vector<Rational>{1, 1, 1, 1, 0, -1});
    const auto k = right_kernel(a);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == std::vector<Rational>{1, -2, 1});
    CHECK(right_kernel(Matrix<Rational>::identity(3)).empty());
}

TEST_CASE("polynomial determinants agree across methods") {
    auto v = make_vars({"a", "b", "c", "d", "e", "f", "g", "h", "i"});
    Matrix<Poly> m(3, 3);
    for (std::size_t k = 0; k < 9; ++k) m(k / 3, k % 3) = Poly::variable(v, v->name(k));
    const Poly ref = oracle::leibniz_det(m);
    CHECK(ref.size() == 6);
    CHECK(det(m) == ref);
    CHECK(det_laplace(m) == ref);
    CHECK(det_bareiss(m) == ref);

    // 1-D Vandermonde as a product of differences
    auto xs = make_vars({"x1", "x2", "x3", "x4"});
    Matrix<Poly> vdm(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        Poly p(1);
        for (std::size_t j = 0; j < 4; ++j) {
            vdm(i, j) = p;
            p = p * Poly::variable(xs, xs->name(i));
        }
    }
    Poly prod = Poly::constant(xs, 1);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) prod = prod * (Poly::variable(xs, xs->name(j)) - Poly::variable(xs, xs->name(i)));
    CHECK(det(vdm) == prod);
    CHECK(det_bareiss(vdm) == prod);
}

TEST_CASE("matrix and points JSON") {
    Matrix<Rational> m(2, 2, std::vector<Rational>{Rational(1, 2), -3, 0, 7});
    CHECK(io::matrix_from_json(io::matrix_to_json(m)) == m);
    CHECK_THROWS_AS(io::matrix_from_json(io::json{{"rows", 2}, {"cols", 2}, {"entries", {"1"}}}), Error);
    CHECK_THROWS_AS(io::matrix_from_json(io::json::parse(R"({"rows":1,"cols":1,"entries":["x"]})")), ParseError);
    const auto pts = io::points_from_json(io::json::parse(R"([{"z":["1/2","-3"]},{"z":["0","4"]}])"));
    CHECK(pts[0][0] == Rational(1, 2));
    CHECK(io::points_from_json(io::points_to_json(pts)) == pts);
    CHECK_THROWS_AS(io::points_from_json(io::json::parse(R"([{"z":["1"]},{"z":["0","4"]}])")), ShapeError);
    CHECK_THROWS_AS(io::read_json_file("/nonexistent/file.json"), ArgumentError);

    auto v = make_vars({"x", "y"});
    const Poly p = Poly::variable(v, "x") * Poly::variable(v, "y") - Poly(Rational(2, 3));
    CHECK(io::poly_from_json(io::poly_to_json(p)) == p);
}
