#include "nrack/fixtures.hpp"

#include <algorithm>
#include <sstream>

#include "nrack/error.hpp"
#include "nrack/intmat.hpp"

namespace nrack {

namespace {

using Strings = std::vector<std::string>;

// "x36 = x26 = x1" -> {"x36 = x1", "x26 = x1"}
void chain(Strings& out, const Strings& names, const std::string& target) {
  for (const auto& n : names) out.push_back(n + " = " + target);
}

std::vector<CoefficientFixture> build_coefficient_fixtures() {
  std::vector<CoefficientFixture> v;

  {
    CoefficientFixture f;
    f.id = "d3";
    f.title = "near-rack over the dihedral rack D3";
    f.anchor = "printed coefficient family, dihedral D3";
    f.size = 3;
    f.sigma = {"id", "(1,3,2)", "(1,2,3)"};
    f.tau = "(2,3)";
    chain(f.relations, {"x6", "x8"}, "x1");
    f.relations.insert(f.relations.end(), {"x3 = x2^2/x1", "x7 = x1*x2/x5", "x9 = x2^2/x4"});
    f.conditions = {"x1^3 = x2^3"};
    f.branch = {"x2 = x1"};
    f.z = {"1", "(x4*x5/x1^2)^(1/3)", "(x1^2/(x4*x5))^(1/3)"};
    v.push_back(f);
  }
  {
    CoefficientFixture f;
    f.id = "alt4";
    f.title = "near-rack over the class of (1,2,3) in Alt4";
    f.anchor = "printed coefficient family, Alt4";
    f.size = 4;
    f.sigma = {"(1,2,4)", "(1,3,2)", "(2,3,4)", "(1,4,3)"};
    f.tau = "(1,4)(2,3)";
    chain(f.relations, {"x13", "x10", "x7"}, "x4");
    f.relations.insert(f.relations.end(),
                       {"x2 = x3^3/(x1*x4)", "x8 = x3^2*x4*x5/(x1^2*x6)", "x9 = x3*x4^2/(x1*x6)",
                        "x12 = x3^2*x4^4*x5/(x1^3*x6^3)", "x15 = x3*x4^3/(x1^2*x6)", "x11 = x3*x4/x5",
                        "x14 = x3^2*x4^3*x5/(x1^3*x6^2)", "x16 = x4^3*x5/(x1*x3*x6)"});
    f.conditions = {"x3^6*x4^2*x5^2 = x1^6*x6^4"};
    f.z = {"1", "x1*x6/x3^2", "x3^3*x4^3*x5/(x1^4*x6^3)", "x3*x4^3*x5/(x1^3*x6^2)"};
    v.push_back(f);
  }
  {
    CoefficientFixture f;
    f.id = "s4-4cycles-1";
    f.title = "first near-rack over the class of (1,2,3,4) in S4";
    f.anchor = "printed coefficient family, first (1,2,3,4)^S4";
    f.size = 6;
    f.sigma = {"(2,3,5,4)", "(1,3)(2,5)(4,6)", "(1,5)(2,6)(3,4)", "(1,2)(3,4)(5,6)", "(1,4)(2,5)(3,6)", "(2,4,5,3)"};
    f.tau = "(2,5)(3,4)";
    chain(f.relations, {"x36", "x26", "x21", "x16", "x11"}, "x1");
    f.relations.insert(
        f.relations.end(),
        {"x5 = x1^4/(x2*x3*x4)", "x8 = x2^2*x3^2/(x1^2*x6)", "x29 = x1^6/(x2^2*x3^2*x6)",
         "x9 = x2^2*x3^2/(x1*x6*x7)", "x32 = x1*x6/x4", "x12 = x2^2*x3^2/(x1*x10*x6)", "x31 = x6",
         "x13 = x1^3*x7/(x2^2*x4)", "x17 = x1^4/(x4*x6*x7)", "x14 = x1^4*x10*x6/(x2^2*x3*x4^2)",
         "x18 = x1^3*x3/(x10*x6^2)", "x25 = x1^6*x7/(x2^3*x3^2*x4)", "x27 = x1^4*x10*x6^2/(x2^3*x3^2*x4)",
         "x28 = x1*x2*x4/(x6*x7)", "x30 = x1^3*x2*x4/(x10*x6^3)", "x19 = x1*x4*x7/(x2*x3)",
         "x20 = x2^3*x3*x4/(x1^2*x6*x7)", "x23 = x1^4*x10/(x2*x3^2*x6)", "x24 = x2^3*x3^2*x4^2/(x1^5*x10)",
         "x15 = x1^6/(x2^2*x4^2*x6)", "x22 = x2^2*x4^2/(x1^2*x6)", "x33 = x1*x6/x2",
         "x34 = x2*x3*x4*x6/x1^3", "x35 = x1*x6/x3"});
    f.conditions = {"x1^4 = x6^4"};
    f.z = {"1", "x2*x3/x1^2", "x1^2/(x2*x4)", "x2*x4/x1^2", "x1^2/(x2*x3)", "x6^2/x1^2"};
    v.push_back(f);
  }
  {
    CoefficientFixture f;
    f.id = "s4-4cycles-2";
    f.title = "second near-rack over the class of (1,2,3,4) in S4";
    f.anchor = "printed coefficient family, second (1,2,3,4)^S4";
    f.size = 6;
    f.sigma = {"(1,2,3)(4,6,5)", "(1,6)(2,5)", "(1,3,5)(2,6,4)", "(1,3,2)(4,5,6)", "(2,5)(3,4)", "(1,5,3)(2,4,6)"};
    f.tau = "(1,3)(2,5)(4,6)";
    f.torsion = {{"q2", 2}, {"q3", 3}};
    chain(f.relations, {"x34", "x26", "x24", "x13", "x11"}, "x3");
    f.relations.insert(
        f.relations.end(),
        {"x6 = x1*x2*x3/(x4*x5)", "x7 = q2*x4*x5*x9^2/(x2*x3^2)", "x8 = q3*x9^2/x3", "x10 = x9",
         "x12 = q3^2*x2*x3^2/(q2*x4*x5)", "x14 = q2*x4*x5*x9/(q3^2*x1*x2)", "x15 = x3*x9/x2",
         "x16 = x3^3/(q3*x5*x9)", "x17 = x3^3/(q2*x1*x9)", "x18 = x3^2/x4", "x19 = x4", "x20 = x3*x4/(q3*x1)",
         "x21 = q3*x3*x4/x2", "x22 = q3*x3*x4/x5", "x23 = x4^2*x5/(q3*x1*x2)", "x25 = x3^2/(q2*x9)",
         "x27 = q3*x3*x5/(q2*x2)", "x28 = x2*x3^3/(q2*x5*x9^2)", "x29 = q3^2*x3^3/x9^2", "x30 = q2*x3^2/x9",
         "x31 = q3^2*x1*x9/(q2*x4)", "x32 = x5*x9/(q3*x4)", "x33 = x3^2/x4", "x35 = q3*x2*x3^2/(x4*x9)",
         "x36 = q2*q3*x1*x2*x3^3/(x4^2*x5*x9)"});
    f.branch = {"q3 = 1"};
    f.z = {"z1",
           "q2^(1/3)*x9*z1/(x1*x2*x3)^(1/3)",
           "x3*z1*(x1*x2*x3)^(1/3)/(q2^(1/3)*x1*x2)",
           "q2^(2/3)*x4*z1*(x1*x2*x3)^(1/3)/(q3^2*x1*x2)",
           "q3*x3^2*z1/(q2^(2/3)*x9*(x1*x2*x3)^(1/3))",
           "x3*z1/(q2*x4)"};
    v.push_back(f);
  }
  {
    CoefficientFixture f;
    f.id = "aff52";
    f.title = "near-rack over Aff(5,2)";
    f.anchor = "printed coefficient family, Aff(5,2)";
    f.size = 5;
    f.sigma = {"(2,4,5,3)", "(1,5,2,3)", "(1,4,3,5)", "(1,3,4,2)", "(1,2,5,4)"};
    f.tau = "(2,5)(3,4)";
    chain(f.relations, {"x22", "x18", "x14", "x10"}, "x1");
    f.relations.insert(
        f.relations.end(),
        {"x5 = x1^4/(x2*x3*x4)", "x7 = x2*x4/x3", "x8 = x2^3*x3*x4^3/(x1^5*x6)", "x9 = x2*x4/x1",
         "x11 = x1*x3*x6/x4^2", "x12 = x2*x3/x1", "x13 = x2^2*x3^2*x4/x1^4", "x15 = x2^2*x3*x4/(x1^2*x6)",
         "x16 = x1^7*x6/(x2^3*x3^2*x4^2)", "x17 = x2*x4^2/(x3*x6)", "x19 = x1^4/(x2^2*x3)",
         "x20 = x1^3/(x2*x3)", "x21 = x1^6*x6/(x2^3*x4^3)", "x23 = x1^3/(x2*x4)", "x24 = x1*x4/x6",
         "x25 = x1^4/(x2*x4^2)"});
    f.z = {"z1", "x2*x4*z1/x1^2", "x2*x3*z1/x1^2", "x1^2*z1/(x2*x3)", "x1^2*z1/(x2*x4)"};
    v.push_back(f);
  }
  {
    CoefficientFixture f;
    f.id = "aff53";
    f.title = "near-rack over Aff(5,3)";
    f.anchor = "printed coefficient family, Aff(5,3)";
    f.size = 5;
    f.sigma = {"(2,3,5,4)", "(1,4,5,2)", "(1,2,4,3)", "(1,5,3,4)", "(1,3,2,5)"};
    f.tau = "(2,5)(3,4)";
    chain(f.relations, {"x22", "x18", "x14", "x10"}, "x1");
    f.relations.insert(
        f.relations.end(),
        {"x5 = x1^4/(x2*x3*x4)", "x7 = x2^2*x3^2/(x1*x4*x6)", "x8 = x2*x3/x1", "x9 = x2^2*x3^2*x4/x1^4",
         "x11 = x1^3*x6/(x2^2*x3)", "x12 = x1^4/(x2*x4^2)", "x13 = x1^4*x3/(x2*x4^2*x6)",
         "x15 = x1^3/(x2*x4)", "x16 = x2*x4^2*x6/x1^3", "x17 = x2*x4/x1", "x19 = x2^2*x3*x4/(x1^2*x6)",
         "x20 = x2*x4/x3", "x21 = x1^2*x4*x6/(x2*x3^2)", "x23 = x1^4/(x2^2*x3)", "x24 = x1^3/(x2*x3)",
         "x25 = x1^5/(x2*x3*x4*x6)"});
    f.z = {"z1", "x2*x3*z1/x1^2", "x1^2*z1/(x2*x4)", "x2*x4*z1/x1^2", "x1^2*z1/(x2*x3)"};
    v.push_back(f);
  }
  {
    CoefficientFixture f;
    f.id = "s4-transpositions-1";
    f.title = "first near-rack over the class of (1,2) in S4";
    f.anchor = "printed coefficient family, first (1,2)^S4";
    f.size = 6;
    f.sigma = {"id", "(1,4,2)(3,5,6)", "(1,5,3)(2,4,6)", "(1,2,4)(3,6,5)", "(1,3,5)(2,6,4)", "(2,5)(3,4)"};
    f.tau = "(2,4)(3,5)";
    f.torsion = {{"q", 4}};
    chain(f.relations, {"x36", "x17", "x27", "x10", "x20", "x6"}, "x1");
    f.relations.insert(
        f.relations.end(),
        {"x3 = x2^2/x1", "x4 = x2^2/x1", "x5 = x2", "x12 = x2^6*x7*x8/(x1^5*x11*x9)", "x14 = q^2*x9",
         "x15 = q*x1*x9^3/(x13*x7*x8)", "x16 = x1^5*x11*x13/(q*x2^5*x7)", "x18 = x2^2*x9^2/(x11*x13*x8)",
         "x19 = x1*x2/x8", "x21 = x1^2*x11*x9/(x2*x7*x8)", "x22 = x2^2/x7", "x23 = x2^3/(x1*x9)",
         "x24 = x2^4/(x1^2*x11)", "x25 = x13*x2^2*x7*x8/(q*x1*x9^3)", "x26 = x1^4*x11*x13*x8/(x2^4*x9^2)",
         "x28 = q^2*x2^3/(x1*x9)", "x29 = x1*x2/x13", "x30 = q*x2^4*x7/(x1^2*x11*x13)", "x31 = q^2*x1",
         "x32 = x1^3*x13*x8/(q*x2^3*x9)", "x33 = x2^3*x9^2/(x1^2*x13*x8)", "x34 = x13*x2*x8/x9^2",
         "x35 = q*x1^3*x9/(x13*x2*x8)"});
    f.conditions = {"x1^3 = x2^3"};
    f.branch = {"x1 = x2", "q^2 = 1"};
    f.z = {"z1", "z1*(x7*x8/x1^2)^(1/3)", "x9*z1/(q*x1*(x7*x8/x1^2)^(1/3))", "z1/(x7*x8/x1^2)^(1/3)",
           "q*x1*z1*(x7*x8/x1^2)^(1/3)/x9", "z1/q"};
    v.push_back(f);
  }
  {
    CoefficientFixture f;
    f.id = "s4-transpositions-2";
    f.title = "second near-rack over the class of (1,2) in S4";
    f.anchor = "printed coefficient family, second (1,2)^S4";
    f.size = 6;
    f.sigma = {"(2,3)(4,5)", "(1,4,6,3)(2,5)", "(1,5,6,2)(3,4)", "(1,2,6,5)(3,4)", "(1,3,6,4)(2,5)", "(2,4)(3,5)"};
    f.tau = "(2,5)(3,4)";
    f.torsion = {{"q", 4}};
    chain(f.relations, {"x36", "x27", "x20", "x17", "x10", "x6"}, "x1");
    f.relations.insert(
        f.relations.end(),
        {"x3 = x2^2/x1", "x4 = x2^2/x1", "x5 = x2", "x12 = x1*x7*x8/(x11*x9)", "x14 = q^2*x9",
         "x15 = q*x1*x9^3/(x13*x7*x8)", "x16 = x11*x13*x2/(q*x1*x7)", "x18 = x1^3*x9^2/(x11*x13*x2*x8)",
         "x19 = x1*x2/x8", "x21 = x11*x2^2*x9/(x1*x7*x8)", "x22 = x2^2/x7", "x23 = x1^2/x9",
         "x24 = x1*x2/x11", "x25 = x13*x2^2*x7*x8/(q*x1*x9^3)", "x26 = x1*x11*x13*x8/(x2*x9^2)",
         "x28 = q^2*x1^2/x9", "x29 = x1*x2/x13", "x30 = q*x1^4*x7/(x11*x13*x2^2)", "x31 = q^2*x1",
         "x32 = x13*x8/(q*x9)", "x33 = x1*x9^2/(x13*x8)", "x34 = x13*x2*x8/x9^2",
         "x35 = q*x1^3*x9/(x13*x2*x8)"});
    f.conditions = {"x2^3 = x1^3"};
    f.z = {"z1", "q*x13*x8*z1/(x2*x9)", "x2*x9^2*z1/(q^2*x1*x13*x8)", "q^2*x1*x13*x8*z1/(x2*x9^2)",
           "x2*x9*z1/(q*x13*x8)", "q^2*z1"};
    v.push_back(f);
  }
  {
    CoefficientFixture f;
    f.id = "aff73";
    f.title = "near-rack over Aff(7,3)";
    f.anchor = "printed coefficient family, Aff(7,3)";
    f.size = 7;
    f.sigma = {"(2,5,3)(4,6,7)", "(1,6,5)(2,3,7)", "(1,4,2)(3,5,6)", "(1,2,6)(4,7,5)",
               "(1,7,3)(2,4,5)", "(1,5,7)(3,6,4)", "(1,3,4)(2,7,6)"};
    f.tau = "(2,7)(3,6)(4,5)";
    chain(f.relations, {"x44", "x38", "x32", "x26", "x20", "x14"}, "x1");
    f.relations.insert(
        f.relations.end(),
        {"x5 = x1^3/(x2*x3)", "x7 = x1^3/(x4*x6)", "x10 = x3^3*x9^2/x1^4", "x11 = x3*x9/x1",
         "x12 = x3^3*x9^3/(x1^2*x2*x6*x8)", "x13 = x2*x6/x1", "x15 = x1*x3*x8/(x4*x6)",
         "x16 = x3^4*x9^3/(x1^3*x6^2*x8)", "x17 = x2*x3^3*x9/(x1^3*x6)", "x18 = x3*x4/x1",
         "x19 = x3^3*x9^2/(x1*x2*x6^2)", "x21 = x3^2*x9/(x1*x6)", "x22 = x1^2*x2*x4*x6^2*x8/(x3^3*x9^3)",
         "x23 = x2*x4/x1", "x24 = x2*x4*x6/(x3*x9)", "x25 = x2*x4^2*x6^2/(x1^2*x3*x9)",
         "x27 = x2*x4*x6/(x1*x8)", "x28 = x1*x2^2*x4*x6/(x3^2*x9^2)", "x29 = x1^2*x8/(x2*x4)",
         "x30 = x1^2*x3^2*x9^2/(x2*x4^2*x6^2)", "x31 = x3^4*x9^3/(x1*x2*x4*x6^2*x8)",
         "x33 = x1^3*x3*x9/(x2^2*x4*x6)", "x34 = x1^2*x3*x9/(x2*x4*x6)", "x35 = x1^5/(x2*x3*x4*x6)",
         "x36 = x1^4*x2*x6^2*x8/(x3^4*x9^3)", "x37 = x1^3*x6/(x3^2*x9)", "x39 = x1^4*x4*x6^2/(x3^4*x9^2)",
         "x40 = x1^2*x6/(x2*x3)", "x41 = x1^4*x6/(x3^2*x4*x9)", "x42 = x1^3/(x3*x8)",
         "x43 = x1^6*x6*x8/(x3^4*x9^3)", "x45 = x1^2*x3/(x4*x6)", "x46 = x1*x4/x8", "x47 = x1^3/(x3*x9)",
         "x48 = x1^4*x6/(x3^2*x9^2)", "x49 = x1^4/(x3*x6*x9)"});
    f.z = {"z1",
           "x3*x9*z1/x1^2",
           "x3^2*x9*z1/(x1^2*x6)",
           "x2*x4*x6*z1/(x1*x3*x9)",
           "x1*x3*x9*z1/(x2*x4*x6)",
           "x1^2*x6*z1/(x3^2*x9)",
           "x1^2*z1/(x3*x9)"};
    v.push_back(f);
  }
  {
    CoefficientFixture f;
    f.id = "aff75";
    f.title = "near-rack over Aff(7,5)";
    f.anchor = "printed coefficient family, Aff(7,5)";
    f.size = 7;
    f.sigma = {"(2,3,5)(4,7,6)", "(1,4,3)(2,6,7)", "(1,7,5)(3,4,6)", "(1,3,7)(2,5,4)",
               "(1,6,2)(4,5,7)", "(1,2,4)(3,6,5)", "(1,5,6)(2,7,3)"};
    f.tau = "(2,7)(3,6)(4,5)";
    chain(f.relations, {"x44", "x38", "x32", "x26", "x20", "x14"}, "x1");
    f.relations.insert(
        f.relations.end(),
        {"x4 = x1*x10^2*x2^2*x8^2/(x6^3*x9^3)", "x5 = x1^3/(x2*x3)", "x7 = x1^2*x6^2*x9^3/(x10^2*x2^2*x8^2)",
         "x11 = x10^2*x2^3*x8^2/(x6^3*x9^3)", "x12 = x10*x2*x8/(x6*x9)",
         "x13 = x10^3*x2^3*x8^3/(x1*x6^3*x9^4)", "x15 = x1^2*x8/(x2*x6)", "x16 = x1^2*x6*x9^2/(x10*x2^2*x8)",
         "x17 = x1^2*x6^3*x9^4/(x10^2*x2^4*x8^2)", "x18 = x1^3*x9^2/(x10*x2^2*x8)",
         "x19 = x1^3*x6^2*x9^3/(x10*x2^3*x3*x8^2)", "x21 = x1*x3*x6^2*x9^3/(x10^2*x2^2*x8^2)",
         "x22 = x10*x2^3*x3*x8^2/(x6^3*x9^3)", "x23 = x10*x2^3*x3^2*x8/(x1^2*x6^2*x9^2)",
         "x24 = x10^2*x2^2*x3*x8^2/(x6^3*x9^3)", "x25 = x1*x10^2*x2^3*x3*x8^2/(x6^4*x9^4)",
         "x27 = x10*x2^2*x3*x8/(x6^2*x9^2)", "x28 = x2*x3/x8", "x29 = x1^3*x6^2*x9^3/(x10^2*x2^3*x3*x8)",
         "x30 = x1*x6^3*x9^3/(x10*x2^2*x3*x8^2)", "x31 = x1^2*x6^2*x9^2/(x10*x2^2*x3*x8)",
         "x33 = x1^3*x6*x9/(x2^2*x3^2)", "x34 = x1^2*x6/(x2*x3)", "x35 = x1^2*x6^5*x9^5/(x10^3*x2^4*x3*x8^3)",
         "x36 = x1*x10*x2^2*x8^2/(x6^2*x9^3)", "x37 = x2*x6/x1", "x39 = x10^2*x2^3*x8/(x6^2*x9^3)",
         "x40 = x1*x10*x2^2*x8/(x3*x6*x9^2)", "x41 = x10^2*x2^4*x3*x8^2/(x1^2*x6^2*x9^4)",
         "x42 = x10*x2^2*x8/(x6*x9^2)", "x43 = x1*x3/x10", "x45 = x1^3*x6*x9/(x10*x2^2*x8)",
         "x46 = x1^2*x6*x9/(x10*x2*x8)", "x47 = x1^4*x6^2*x9^3/(x10^2*x2^3*x3*x8^2)", "x48 = x1*x6/x8",
         "x49 = x1^2*x6^2*x9^2/(x10^2*x2*x8^2)"});
    f.z = {"z1",
           "x10*x2*x8*z1/(x1*x6*x9)",
           "x1*x6*x9^2*z1/(x10*x2^2*x8)",
           "x10*x2^2*x3*x8*z1/(x1*x6^2*x9^2)",
           "x1*x6^2*x9^2*z1/(x10*x2^2*x3*x8)",
           "x10*x2^2*x8*z1/(x1*x6*x9^2)",
           "x1*x6*x9*z1/(x10*x2*x8)"};
    v.push_back(f);
  }
  // Involutive near-racks: sigma_x = tau for every x.
  {
    CoefficientFixture f;
    f.id = "involutive-2";
    f.title = "involutive near-rack on two points (a = x1, b = x2 = x3, e = x4)";
    f.anchor = "two-dimensional involutive example";
    f.size = 2;
    f.sigma = {"(1,2)", "(1,2)"};
    f.tau = "(1,2)";
    f.relations = {"x3 = x2"};
    f.z = {"1", "(x4/x1)^(1/2)"};
    f.gdd_vertices = {"x2", "x2"};
    f.gdd_edges = {{{1, 2}, "x1*x4"}};
    v.push_back(f);
  }
  {
    CoefficientFixture f;
    f.id = "involutive-3";
    f.title = "involutive near-rack on three points, tau = (1,2)";
    f.anchor = "three-dimensional involutive example";
    f.size = 3;
    f.sigma = {"(1,2)", "(1,2)", "(1,2)"};
    f.tau = "(1,2)";
    f.relations = {"x4 = x2", "x8 = x6*x7/x3", "x5 = x1*x6^2/x3^2"};
    f.z = {"z1", "x6*z1/x3", "z1*(x6/x3)^(1/2)"};
    f.gdd_vertices = {"x2", "x2", "x9"};
    f.gdd_edges = {{{1, 2}, "(x1*x6)^2/x3^2"}, {{1, 3}, "x6*x7"}, {{2, 3}, "x6*x7"}};
    v.push_back(f);
  }
  {
    CoefficientFixture f;
    f.id = "involutive-4";
    f.title = "involutive near-rack on four points, tau = (1,2)(3,4)";
    f.anchor = "four-dimensional involutive example";
    f.size = 4;
    f.sigma = {"(1,2)(3,4)", "(1,2)(3,4)", "(1,2)(3,4)", "(1,2)(3,4)"};
    f.tau = "(1,2)(3,4)";
    f.relations = {"x5 = x2",
                   "x15 = x12",
                   "x14 = x8*x9/x3",
                   "x13 = x4*x10/x7",
                   "x16 = x4*x8*x11/(x3*x7)",
                   "x6 = x1*x7*x8/(x3*x4)"};
    f.z = {"z1", "z1*(x7*x8/(x3*x4))^(1/2)", "z1*(x7/x4)^(1/2)", "z1*(x8/x3)^(1/2)"};
    f.gdd_vertices = {"x2", "x2", "x12", "x12"};
    f.gdd_edges = {{{1, 2}, "x1^2*x7*x8/(x3*x4)"},  {{1, 3}, "x4*x10"}, {{2, 4}, "x4*x10"},
                   {{1, 4}, "x8*x9"},               {{2, 3}, "x8*x9"},  {{3, 4}, "x11^2*x4*x8/(x3*x7)"}};
    v.push_back(f);
  }
  return v;
}

json sol_doc(std::size_t n, const Strings& sigma, const std::string& tau) {
  return json{{"size", n}, {"sigma", sigma}, {"tau", tau}};
}

std::vector<EnumerationFixture> build_enumeration_fixtures() {
  std::vector<EnumerationFixture> v;
  const auto& coeff = coefficient_fixtures();
  auto printed = [&](const std::string& id) {
    for (const auto& f : coeff)
      if (f.id == id) return sol_doc(f.size, f.sigma, f.tau);
    throw usage_error("unknown fixture " + id);
  };

  v.push_back({"d3", "dihedral rack D3", "near-racks over D3", json{{"kind", "dihedral"}, {"n", 3}}, 1, {printed("d3")}});
  v.push_back({"s4-transpositions", "class of (1,2) in S4", "near-racks over (1,2)^S4",
               json{{"table",
                     {{1, 4, 5, 2, 3, 6},
                      {4, 2, 6, 1, 5, 3},
                      {5, 6, 3, 4, 1, 2},
                      {2, 1, 3, 4, 6, 5},
                      {3, 2, 1, 6, 5, 4},
                      {1, 3, 2, 5, 4, 6}}}},
               2,
               {printed("s4-transpositions-1"), printed("s4-transpositions-2")}});
  v.push_back({"alt4", "class of (1,2,3) in Alt4", "near-racks over (1,2,3)^Alt4",
               json{{"table", {{1, 3, 4, 2}, {4, 2, 1, 3}, {2, 4, 3, 1}, {3, 1, 2, 4}}}},
               1,
               {printed("alt4")}});
  v.push_back({"s4-4cycles", "class of (1,2,3,4) in S4", "near-racks over (1,2,3,4)^S4",
               json{{"kind", "conjugation"}, {"degree", 4}, {"class_of", "(1,2,3,4)"}},
               2,
               {printed("s4-4cycles-1"), printed("s4-4cycles-2")}});
  v.push_back({"aff52", "affine rack Aff(5,2)", "near-racks over Aff(5,2)",
               json{{"kind", "affine"}, {"m", 5}, {"u", 2}}, 1, {printed("aff52")}});
  v.push_back({"aff53", "affine rack Aff(5,3)", "near-racks over Aff(5,3)",
               json{{"kind", "affine"}, {"m", 5}, {"u", 3}}, 1, {printed("aff53")}});
  v.push_back({"aff73", "affine rack Aff(7,3)", "near-racks over Aff(7,3)",
               json{{"kind", "affine"}, {"m", 7}, {"u", 3}}, 1, {printed("aff73")}});
  v.push_back({"aff75", "affine rack Aff(7,5)", "near-racks over Aff(7,5)",
               json{{"kind", "affine"}, {"m", 7}, {"u", 5}}, 1, {printed("aff75")}});
  v.push_back(
      {"s5-transpositions", "class of (1,2) in S5", "near-racks over (1,2)^S5",
       json{{"table",
             {{1, 5, 6, 7, 2, 3, 4, 8, 9, 10},
              {5, 2, 8, 9, 1, 6, 7, 3, 4, 10},
              {6, 8, 3, 10, 5, 1, 7, 2, 9, 4},
              {7, 9, 10, 4, 5, 6, 1, 8, 2, 3},
              {2, 1, 3, 4, 5, 8, 9, 6, 7, 10},
              {3, 2, 1, 4, 8, 6, 10, 5, 9, 7},
              {4, 2, 3, 1, 9, 10, 7, 8, 5, 6},
              {1, 3, 2, 4, 6, 5, 7, 8, 10, 9},
              {1, 4, 3, 2, 7, 6, 5, 10, 9, 8},
              {1, 2, 4, 3, 5, 7, 6, 9, 8, 10}}}},
       2,
       {sol_doc(10,
                {"id", "(1,5,2)(3,6,8)(4,7,9)", "(1,6,3)(2,5,8)(4,7,10)", "(1,7,4)(2,5,9)(3,6,10)",
                 "(1,2,5)(3,8,6)(4,9,7)", "(1,3,6)(2,8,5)(4,10,7)", "(1,4,7)(2,9,5)(3,10,6)",
                 "(2,6)(3,5)(4,7)(9,10)", "(2,7)(3,6)(4,5)(8,10)", "(2,5)(3,7)(4,6)(8,9)"},
                "(2,5)(3,6)(4,7)"),
        sol_doc(10,
                {"(3,4)(6,7)(8,9)", "(1,5,2)(3,7,8,4,6,9)", "(1,6,10,4)(2,5,8,9)(3,7)", "(1,7,10,3)(2,5,9,8)(4,6)",
                 "(1,2,5)(3,9,6,4,8,7)", "(1,3,10,7)(2,8,9,5)(4,6)", "(1,4,10,6)(2,9,8,5)(3,7)",
                 "(2,6,4,5,3,7)(8,10,9)", "(2,7,3,5,4,6)(8,9,10)", "(2,5)(3,6)(4,7)"},
                "(2,5)(3,7)(4,6)(8,9)")}});
  return v;
}

std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::pair<std::string, std::string> split_equation(const std::string& text) {
  auto pos = text.find('=');
  if (pos == std::string::npos || text.find('=', pos + 1) != std::string::npos)
    throw usage_error("expected a single '=' in \"" + text + "\"");
  return {trim(text.substr(0, pos)), trim(text.substr(pos + 1))};
}

std::vector<Monomial> parse_equations(const Strings& eqs, const SymbolTable& decl) {
  std::vector<Monomial> out;
  for (const auto& e : eqs) out.push_back(parse_equation(e, decl));
  return out;
}

bool all_implied(const ConditionLattice& lat, const std::vector<Monomial>& ms, std::string& detail) {
  for (std::size_t k = 0; k < ms.size(); ++k)
    if (!lat.implies(ms[k])) {
      detail = "entry " + std::to_string(k + 1) + " reduces to " + ms[k].str() + " != 1";
      return false;
    }
  return true;
}

std::string join_orders(const std::vector<mpz_class>& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k].get_str();
  return s + "]";
}

}  // namespace

const std::vector<CoefficientFixture>& coefficient_fixtures() {
  static const std::vector<CoefficientFixture> v = build_coefficient_fixtures();
  return v;
}

const std::vector<EnumerationFixture>& enumeration_fixtures() {
  static const std::vector<EnumerationFixture> v = build_enumeration_fixtures();
  return v;
}

SetSolution fixture_solution(const CoefficientFixture& f) { return solution_from_json(sol_doc(f.size, f.sigma, f.tau)); }

Monomial parse_equation(const std::string& text, const SymbolTable& decl) {
  auto [l, r] = split_equation(text);
  return parse_monomial(l, decl) / parse_monomial(r, decl);
}

SymbolicSpace fixture_space(const CoefficientFixture& f) {
  const std::size_t m = f.size;
  std::map<std::string, Monomial, NaturalLess> subs;
  for (const auto& rel : f.relations) {
    auto [l, r] = split_equation(rel);
    if (subs.count(l)) throw usage_error("fixture " + f.id + ": " + l + " defined twice");
    subs[l] = parse_monomial(r, f.torsion);
  }
  // Relations are stated in the free symbols; substitute once more in case one refers to another.
  for (auto& [name, expr] : subs) expr = expr.substitute(subs);
  std::vector<Monomial> entries;
  for (const auto& name : coefficient_names(m)) {
    auto it = subs.find(name);
    entries.push_back(it == subs.end() ? Monomial::param(name) : it->second);
  }
  for (const auto& e : entries)
    for (const auto& [p, _] : e.params())
      if (subs.count(p)) throw usage_error("fixture " + f.id + ": relation chain through " + p);
  return symbolic_space(fixture_solution(f), entries, f.torsion);
}

std::vector<Monomial> fixture_conditions(const CoefficientFixture& f) { return parse_equations(f.conditions, f.torsion); }
std::vector<Monomial> fixture_branch(const CoefficientFixture& f) { return parse_equations(f.branch, f.torsion); }

std::vector<Monomial> fixture_z(const CoefficientFixture& f) {
  std::vector<Monomial> z;
  for (const auto& t : f.z) z.push_back(parse_monomial(t, f.torsion));
  return z;
}

GroupInvariants fixture_invariants(const CoefficientFixture& f) {
  SymbolicSpace b = fixture_space(f);
  std::vector<std::string> syms;
  for (const auto& row : b.R)
    for (const auto& e : row)
      for (const auto& [p, _] : e.params())
        if (std::find(syms.begin(), syms.end(), p) == syms.end()) syms.push_back(p);
  std::size_t nparams = syms.size();
  for (const auto& [t, _] : f.torsion) syms.push_back(t);
  auto col = [&](const std::string& s) {
    return static_cast<std::size_t>(std::find(syms.begin(), syms.end(), s) - syms.begin());
  };

  IntMat rows;
  for (const auto& c : fixture_conditions(f)) {
    if (sgn(c.constant()) != 0) throw usage_error("fixture " + f.id + ": condition with a constant factor");
    IntVec r(syms.size(), 0);
    for (const auto& [p, e] : c.params()) {
      if (e.get_den() != 1) throw usage_error("fixture " + f.id + ": fractional exponent in a condition");
      r[col(p)] = e.get_num();
    }
    for (const auto& [t, tp] : c.torsion_part()) r[col(t)] = tp.exp.get_num();
    rows.push_back(r);
  }
  for (const auto& [t, order] : f.torsion) {
    IntVec r(syms.size(), 0);
    r[col(t)] = order;
    rows.push_back(r);
  }
  (void)nparams;
  GroupInvariants g;
  if (rows.empty()) {
    g.free_rank = syms.size();
    return g;
  }
  SmithForm snf = smith_normal_form(rows, syms.size());
  g.free_rank = syms.size() - snf.rank;
  for (const auto& d : snf.diag)
    if (abs(d) > 1) g.torsion_orders.push_back(abs(d));
  return g;
}

bool FixtureResult::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const FixtureCheck& c) { return c.ok; });
}

FixtureResult run_coefficient_fixture(const CoefficientFixture& f) {
  FixtureResult res;
  res.id = f.id;
  auto add = [&](std::string name, bool ok, std::string detail) {
    res.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  SymbolicSpace space = fixture_space(f);
  std::vector<Monomial> conds = fixture_conditions(f);
  std::vector<Monomial> with_branch = conds;
  for (const auto& m : fixture_branch(f)) with_branch.push_back(m);
  ConditionLattice lat(conds), lat_branch(with_branch);

  {
    MultSystem sys = ybe_coefficient_system(space.solution);
    std::vector<Monomial> residues;
    std::vector<Monomial> flat;
    for (const auto& row : space.R) flat.insert(flat.end(), row.begin(), row.end());
    for (const auto& r : sys.rows) residues.push_back(substitute_row(r, flat));
    std::string d;
    bool ok = all_implied(lat, residues, d);
    add("printed family solves the braid relation", ok, ok ? std::to_string(sys.rows.size()) + " rows" : d);

    SolveResult sr = solve(sys);
    if (const auto* fam = std::get_if<SolutionFamily>(&sr)) {
      GroupInvariants want = fixture_invariants(f);
      bool same = fam->free_rank == want.free_rank && fam->torsion_orders == want.torsion_orders;
      add("solver family matches printed family", same,
          "solver rank " + std::to_string(fam->free_rank) + " torsion " + join_orders(fam->torsion_orders) +
              ", printed rank " + std::to_string(want.free_rank) + " torsion " + join_orders(want.torsion_orders));
    } else {
      add("solver family matches printed family", false, std::get<Inconsistency>(sr).message);
    }
  }

  std::vector<Monomial> z = fixture_z(f);
  {
    std::string d;
    bool ok = all_implied(lat_branch, z_residuals(space, z), d);
    add("printed twist solves the z-system", ok, d);
  }

  std::optional<SymbolicCertificate> solver_cert;
  {
    TEquivResult tr = solve_tequiv(space);
    if (auto* c = std::get_if<SymbolicCertificate>(&tr)) {
      std::string d;
      bool ok = all_implied(lat_branch, c->conditions, d);
      add("solver twist exists under the printed conditions", ok,
          ok ? std::to_string(c->conditions.size()) + " side conditions" : d);
      solver_cert = *c;
    } else {
      add("solver twist exists under the printed conditions", false, std::get<TEquivObstruction>(tr).message);
    }
  }

  auto concrete = [&](const std::string& name, SymbolicCertificate cert) {
    for (const auto& c : with_branch) cert.conditions.push_back(c);
    auto a = sample_assignment(cert);
    if (!a) {
      add(name, false, "no sample point meets the conditions");
      return;
    }
    CertificateCheck chk = verify_certificate(instantiate(cert, *a));
    add(name, chk.ok, chk.failure);
  };
  concrete("printed twist verifies at a sample point", make_certificate(space, z, {}));
  if (solver_cert) concrete("solver twist verifies at a sample point", *solver_cert);

  if (!f.gdd_vertices.empty()) {
    SymbolicCertificate cert = make_certificate(space, z, {});
    SymbolicGdd g = gdd(cert.derived);
    bool ok = g.size() == f.gdd_vertices.size();
    std::string d;
    for (std::size_t i = 0; ok && i < g.size(); ++i)
      if (!lat_branch.implies(g.vertex[i] / parse_monomial(f.gdd_vertices[i], f.torsion))) {
        ok = false;
        d = "vertex " + std::to_string(i + 1) + " is " + g.vertex[i].str();
      }
    for (const auto& [e, label] : f.gdd_edges) {
      if (!ok) break;
      Monomial have = g.mixed(e.first - 1, e.second - 1);
      if (!lat_branch.implies(have / parse_monomial(label, f.torsion))) {
        ok = false;
        d = "edge " + std::to_string(e.first) + "-" + std::to_string(e.second) + " is " + have.str();
      }
    }
    add("twisted diagram matches printed labels", ok, d);
  }
  return res;
}

FixtureResult run_enumeration_fixture(const EnumerationFixture& f) {
  FixtureResult res;
  res.id = f.id;
  Rack r = rack_from_json(f.rack);
  NearRackEnumeration e = enum_near_racks(r);
  res.checks.push_back({"class count", e.class_count() == f.expected_classes,
                        "found " + std::to_string(e.class_count()) + ", expected " +
                            std::to_string(f.expected_classes) + "; " + std::to_string(e.taus.size()) +
                            " compatible involutions"});
  std::vector<SetSolution> reps;
  for (std::size_t k : e.representatives) reps.push_back(near_rack_from(r, e.taus[k]));
  std::vector<char> hit(reps.size(), 0);
  for (std::size_t p = 0; p < f.printed.size(); ++p) {
    SetSolution s = solution_from_json(f.printed[p]);
    Report rep = verify(s);
    bool ok = rep.is_ybe && rep.near_rack;
    std::string detail = ok ? "" : "not a near-rack solution";
    if (ok && !isomorphic(rack_solution(derived_rack(s)), rack_solution(r))) {
      ok = false;
      detail = "derived rack is not isomorphic to the listed rack";
    }
    if (ok) {
      ok = false;
      for (std::size_t k = 0; k < reps.size(); ++k)
        if (isomorphic(s, reps[k])) {
          ok = !hit[k];
          hit[k] = 1;
          detail = ok ? "class " + std::to_string(k + 1) : "duplicates class " + std::to_string(k + 1);
          break;
        }
      if (detail.empty()) detail = "matches no enumerated class";
    }
    res.checks.push_back({"printed solution " + std::to_string(p + 1), ok, detail});
  }
  return res;
}

}  // namespace nrack
