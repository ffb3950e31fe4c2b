#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "aperylike/sequences.hpp"
#include "oracles.hpp"

using namespace aperylike;

namespace {

// first seven terms of every row, frozen from brute-force evaluation of the
// binomial sums
const std::map<std::string, std::vector<long long>> k_golden = {
    {"a", {1, 2, 10, 56, 346, 2252, 15184}},
    {"b", {1, 3, 19, 147, 1251, 11253, 104959}},
    {"c", {1, 3, 15, 93, 639, 4653, 35169}},
    {"d", {1, 4, 20, 112, 676, 4304, 28496}},
    {"f", {1, 3, 9, 21, 9, -297, -2421}},
    {"g", {1, 6, 42, 312, 2394, 18756, 149136}},
    {"delta", {1, 3, 9, 3, -279, -2997, -19431}},
    {"eta", {1, 5, 35, 275, 2275, 19255, 163925}},
    {"alpha", {1, 4, 28, 256, 2716, 31504, 387136}},
    {"epsilon", {1, 4, 40, 544, 8536, 145504, 2618176}},
    {"zeta", {1, 3, 27, 309, 4059, 57753, 866349}},
    {"gamma", {1, 5, 73, 1445, 33001, 819005, 21460825}},
    {"s7", {1, 4, 48, 760, 13840, 273504, 5703096}},
    {"s10", {1, 2, 18, 164, 1810, 21252, 263844}},
    {"s18", {1, 6, 54, 564, 6390, 76356, 948276}},
};

}  // namespace

TEST_CASE("registry carries the fifteen rows with their parameters") {
  REQUIRE(registry().size() == 15);
  const auto& gamma = descriptor(SequenceId::gamma);
  CHECK(gamma.order == 3);
  CHECK(gamma.params.a == 17);
  CHECK(gamma.params.b == 5);
  CHECK(gamma.params.c == 1);
  CHECK(gamma.params.d == 0);
  const auto& s18 = descriptor(SequenceId::s18);
  CHECK(s18.params.a == 14);
  CHECK(s18.params.b == 6);
  CHECK(s18.params.c == 192);
  CHECK(s18.params.d == -12);
  CHECK(s18.level == 18);
  CHECK(descriptor(SequenceId::b).params.a == 11);
  CHECK(descriptor(SequenceId::a).search_label == "A");
  CHECK(descriptor(SequenceId::f).search_label == "B");
  CHECK(find_sequence("epsilon") != nullptr);
  CHECK(find_sequence("nope") == nullptr);
}

TEST_CASE("golden first terms, both evaluators") {
  for (const auto& s : registry()) {
    const auto& expect = k_golden.at(s.name);
    auto t = terms(s, 6);
    for (int n = 0; n <= 6; ++n) {
      CAPTURE(s.name, n);
      REQUIRE(t[n] == expect[n]);
      REQUIRE(term_by_sum(s, n) == expect[n]);
    }
  }
}

TEST_CASE("spot values against independent brute force") {
  oracles::PascalOracle tri;
  // gamma(2) = sum C(2,k)^2 C(2+k,k)^2
  ExactInt g2 = 0;
  for (long k = 0; k <= 2; ++k) g2 += tri.at(2, k) * tri.at(2, k) * tri.at(2 + k, k) * tri.at(2 + k, k);
  CHECK(g2 == 73);
  CHECK(term_by_sum(descriptor(SequenceId::gamma), 2) == g2);
  CHECK(term_by_recurrence(descriptor(SequenceId::gamma), 2) == 73);
  // b(2) via the recurrence: 4 u_2 = 25*3 + 1
  CHECK(term_by_recurrence(descriptor(SequenceId::b), 2) == 19);
  // delta(1..3) = 3, 9, 3
  auto dz = terms(descriptor(SequenceId::delta), 3);
  CHECK(dz[1] == 3);
  CHECK(dz[2] == 9);
  CHECK(dz[3] == 3);
  // s18(1) = 6 by both forms, eta(1) = 5 by the negative-entry form
  CHECK(sums::seq_s18(1) == 6);
  CHECK(sums::seq_s18_table(1) == 6);
  CHECK(sums::seq_eta(1) == 5);
  // u_0 = 1 everywhere
  for (const auto& s : registry()) CHECK(term_by_recurrence(s, 0) == 1);
}

TEST_CASE("terms memo matches the single-term evaluator") {
  auto t = terms(descriptor(SequenceId::gamma), 3);
  CHECK(t == std::vector<ExactInt>{1, 5, 73, 1445});
  CHECK(terms(descriptor(SequenceId::s10), 2) == std::vector<ExactInt>{1, 2, 18});
  auto ta = terms(descriptor(SequenceId::a), 3);
  CHECK(ta == std::vector<ExactInt>{1, 2, 10, 56});
  for (long n = 0; n <= 3; ++n)
    CHECK(ta[n] == term_by_recurrence(descriptor(SequenceId::a), n));
}

TEST_CASE("dual evaluators agree") {
  for (const auto& s : registry()) {
    auto t = terms(s, 120);
    for (long n = 0; n <= 120; ++n) {
      CAPTURE(s.name, n);
      REQUIRE(term_by_sum(s, n) == t[n]);
    }
  }
}

TEST_CASE("bracketed forms equal the negative-entry forms") {
  for (long n = 0; n <= 120; ++n) {
    REQUIRE(sums::seq_s18(n) == sums::seq_s18_table(n));
    REQUIRE(sums::seq_eta(n) == sums::seq_eta_table(n));
  }
}

TEST_CASE("central binomial identity") {
  for (long n = 0; n <= 400; ++n) {
    ExactInt s = 0;
    for (const ExactInt& v : rows::binom(n)) s += v * v;
    REQUIRE(s == binomial(2 * n, n));
  }
}

TEST_CASE("row helpers match direct binomials") {
  oracles::PascalOracle tri;
  for (long n : {0L, 1L, 2L, 7L, 40L}) {
    auto r1 = rows::binom(n);
    auto r2 = rows::binom_shifted(n);
    auto r3 = rows::central(n);
    auto r4 = rows::central_cross(n);
    auto r5 = rows::central_multinomial(n);
    for (long k = 0; k <= n; ++k) {
      REQUIRE(r1[k] == tri.at(n, k));
      REQUIRE(r2[k] == tri.at(n + k, k));
      REQUIRE(r3[k] == tri.at(2 * k, k));
      REQUIRE(r4[k] == tri.at(2 * k, n));
      REQUIRE(r5[k] == tri.at(3 * k, k) * tri.at(2 * k, k));
    }
  }
}

TEST_CASE("recurrence fails loudly on a wrong parameter tuple") {
  SequenceDescriptor bogus{SequenceId::a, "bogus", 2, {1, 1, 1, 0}, "", 0, nullptr, nullptr};
  CHECK_THROWS_AS(term_by_recurrence(bogus, 5), NonIntegralStep);
  try {
    term_by_recurrence(bogus, 5);
  } catch (const NonIntegralStep& e) {
    CHECK(e.step >= 1);
  }
  for (const auto& s : registry()) CHECK_NOTHROW(terms(s, 50));
}

TEST_CASE("residue_stream equals reduce-after-exact") {
  for (std::uint64_t m : {2, 8, 9, 12}) {
    auto rs = residue_stream(descriptor(SequenceId::delta), 80, m);
    auto t = terms(descriptor(SequenceId::delta), 80);
    for (long n = 0; n <= 80; ++n) REQUIRE(rs[n] == mod_reduce(t[n], m));
  }
}

TEST_CASE("family spot values") {
  CHECK(family_term(FamilySpec::apery_generalized(2, 2), 2) == 73);
  CHECK(family_term(FamilySpec::power_sum(4), 2) == 18);
  CHECK(family_term(FamilySpec::eta_family(1, 1), 1) == 5);  // C(4,3) - C(-1,3)
  CHECK(FamilySpec::eta_family(3, 1).name() == "eta_family(3,1)");
  CHECK_THROWS_AS(FamilySpec::apery_generalized(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::eta_family(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::power_sum(3), std::invalid_argument);
}

TEST_CASE("family coincidences with registered rows") {
  auto gamma = terms(descriptor(SequenceId::gamma), 200);
  auto b = terms(descriptor(SequenceId::b), 200);
  auto eta = terms(descriptor(SequenceId::eta), 200);
  auto s10 = terms(descriptor(SequenceId::s10), 200);
  for (long n = 0; n <= 200; ++n) {
    REQUIRE(family_term(FamilySpec::apery_generalized(2, 2), n) == gamma[n]);
    REQUIRE(family_term(FamilySpec::apery_generalized(2, 1), n) == b[n]);
    REQUIRE(family_term(FamilySpec::eta_family(3, 1), n) == eta[n]);
    REQUIRE(family_term(FamilySpec::power_sum(4), n) == s10[n]);
  }
}

TEST_CASE("family residues equal exact values mod p") {
  const FamilySpec specs[] = {FamilySpec::apery_generalized(2, 2), FamilySpec::eta_family(2, 0),
                              FamilySpec::eta_family(2, 1), FamilySpec::eta_family(1, 1),
                              FamilySpec::power_sum(6)};
  for (const auto& f : specs) {
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
      BinomModP t(p);
      for (long n = 0; n <= 60; ++n) {
        CAPTURE(f.name(), p, n);
        REQUIRE(family_term_mod(f, n, t) == mod_reduce(family_term(f, n), p));
      }
    }
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(term_by_recurrence(descriptor(SequenceId::a), -1), std::invalid_argument);
  CHECK_THROWS_AS(term_by_sum(descriptor(SequenceId::a), -1), std::invalid_argument);
  CHECK_THROWS_AS(terms(descriptor(SequenceId::a), -1), std::invalid_argument);
  CHECK_THROWS_AS(residue_stream(descriptor(SequenceId::a), 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(family_term(FamilySpec::power_sum(4), -2), std::invalid_argument);
}
