#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "nrack/cyclotomic.hpp"
#include "nrack/error.hpp"
#include "nrack/monomial.hpp"

using namespace nrack;

namespace {

// Independent oracle: evaluate the power basis numerically.
std::complex<double> numeric(const Cyclotomic& c) {
  const double pi = std::acos(-1.0);
  std::complex<double> z = std::polar(1.0, 2 * pi / c.field()), acc = 0, pw = 1;
  for (const auto& q : c.coeffs()) {
    acc += q.get_d() * pw;
    pw *= z;
  }
  return acc;
}

Cyclotomic random_cyc(std::mt19937& rng, int n) {
  std::vector<mpq_class> c(static_cast<std::size_t>(euler_phi(n)));
  for (auto& x : c) x = mpq_class(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
  return Cyclotomic(n, c);
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9 * (1 + std::abs(a)); }

}  // namespace

TEST_CASE("roots of unity satisfy their minimal relations") {
  Cyclotomic w = cyc_root_of_unity(3, 1);
  CHECK((Cyclotomic(1) + w + w * w).is_zero());
  CHECK(w.pow(3).is_one());
  CHECK(w.root_order() == 3);
  CHECK(Cyclotomic(-1).root_order() == 2);
  CHECK(Cyclotomic(2).root_order() == 0);
  CHECK(cyc_root_of_unity(4, 1) * cyc_root_of_unity(4, 1) == Cyclotomic(-1));
  CHECK(cyc_root_of_unity(6, 1) == -cyc_root_of_unity(3, 2));
  CHECK(is_primitive_root(cyc_root_of_unity(12, 5), 12));
  CHECK(!is_primitive_root(cyc_root_of_unity(12, 4), 12));
}

TEST_CASE("mixed fields lift to the common field") {
  Cyclotomic a = cyc_root_of_unity(3, 1), b = cyc_root_of_unity(4, 1);
  Cyclotomic p = a * b;
  CHECK(p.field() % 12 == 0);
  CHECK(p.root_order() == 12);
  CHECK(close(numeric(p), numeric(a) * numeric(b)));
  CHECK(a.lift(12) == a);
}

TEST_CASE("field operations agree with numerical evaluation") {
  std::mt19937 rng(3);
  for (int n : {1, 3, 4, 5, 7, 8, 9, 12, 15}) {
    for (int t = 0; t < 20; ++t) {
      Cyclotomic a = random_cyc(rng, n), b = random_cyc(rng, n);
      CHECK(close(numeric(a + b), numeric(a) + numeric(b)));
      CHECK(close(numeric(a * b), numeric(a) * numeric(b)));
      if (!b.is_zero()) {
        CHECK(close(numeric(a / b), numeric(a) / numeric(b)));
        CHECK((b * b.inverse()).is_one());
      }
    }
  }
}

TEST_CASE("cyclotomic text round trip") {
  CHECK(parse_cyclotomic("E(3)") == cyc_root_of_unity(3, 1));
  CHECK(parse_cyclotomic("E(3)^2") == cyc_root_of_unity(3, 2));
  CHECK(parse_cyclotomic("zeta5^2") == cyc_root_of_unity(5, 2));
  CHECK(parse_cyclotomic("-1") == Cyclotomic(-1));
  CHECK(parse_cyclotomic("1/2 + E(4)") == Cyclotomic(mpq_class(1, 2)) + cyc_root_of_unity(4, 1));
  std::mt19937 rng(5);
  for (int n : {3, 5, 8, 12}) {
    Cyclotomic a = random_cyc(rng, n);
    CHECK(parse_cyclotomic(a.str()) == a);
  }
  CHECK_THROWS_AS(parse_cyclotomic("E(3"), Error);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
  CHECK(euler_phi(15) == 8);
}

TEST_CASE("monomials parse, reduce torsion and print") {
  SymbolTable decl{{"q", 4}};
  Monomial m = parse_monomial("q^5*x1^2/(x2*x3)", decl);
  CHECK(m.param_exp("x1") == 2);
  CHECK(m.param_exp("x2") == -1);
  CHECK(m.torsion_part().at("q").exp == 1);
  CHECK(parse_monomial(m.str(), decl) == m);
  CHECK(parse_monomial("q^4", decl).is_one());
  CHECK(parse_monomial("x^(1/3)").pow(3) == Monomial::param("x"));
  CHECK(parse_monomial("(x*y)^(1/2)") == parse_monomial("x^(1/2)*y^(1/2)"));
  CHECK(parse_monomial("-1").pow(2).is_one());
  CHECK(parse_monomial("E(6)").torsion_order() == 6);
  CHECK(parse_monomial("x1^-1") == Monomial::param("x1").inverse());
  CHECK_THROWS_AS(parse_monomial("2*x"), Error);
  CHECK_THROWS_AS(parse_monomial("x^"), Error);
}

TEST_CASE("monomial substitution composes") {
  Monomial m = parse_monomial("x^2*y^(1/2)");
  std::map<std::string, Monomial, NaturalLess> s{{"x", parse_monomial("a*b")}, {"y", parse_monomial("a^2")}};
  CHECK(m.substitute(s) == parse_monomial("a^3*b^2"));
}

TEST_CASE("evaluation uses the supplied roots") {
  Monomial m = parse_monomial("x^(1/2)*q", {{"q", 3}});
  // x = -1 with x^(1/2) fixed to E(4); q = E(3)
  Assignment a{{"x", RootValue{cyc_root_of_unity(4, 1), 2}}, {"q", RootValue{cyc_root_of_unity(3, 1), 1}}};
  CHECK(evaluate(m, a) == cyc_root_of_unity(4, 1) * cyc_root_of_unity(3, 1));
  CHECK(evaluate(m.pow(2), a) == Cyclotomic(-1) * cyc_root_of_unity(3, 2));
  CHECK_THROWS_AS(evaluate(parse_monomial("x^(1/4)"), a), Error);
  CHECK_THROWS_AS(evaluate(parse_monomial("y"), a), Error);
}

TEST_CASE("natural order on symbol names") {
  NaturalLess lt;
  CHECK(lt("x2", "x10"));
  CHECK(!lt("x10", "x2"));
  CHECK(lt("eps1", "x1"));
}
