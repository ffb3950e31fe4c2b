#include <catch2/catch_amalgamated.hpp>

#include "aperylike/prime_survey.hpp"
#include "aperylike/reporting.hpp"

using namespace aperylike;

TEST_CASE("prime sieve") {
  auto p = sieve_primes(100);
  CHECK(p.size() == 25);
  CHECK(p.front() == 2);
  CHECK(p.back() == 97);
  CHECK(sieve_primes(1).empty());
  CHECK(sieve_primes(2) == std::vector<std::uint64_t>{2});
}

TEST_CASE("divides_witness") {
  const auto& gamma = descriptor(SequenceId::gamma);
  auto v7 = divides_witness(gamma, 7);
  CHECK_FALSE(v7.divides);
  CHECK(v7.first_zero_index == -1);
  auto v5 = divides_witness(gamma, 5);
  CHECK(v5.divides);
  CHECK(v5.first_zero_index == 1);  // gamma(1) = 5
  CHECK_FALSE(divides_witness(gamma, 2).divides);
}

TEST_CASE("palindrome shortcut never changes the verdict") {
  const auto& gamma = descriptor(SequenceId::gamma);
  for (std::uint64_t p : sieve_primes(499)) {
    CAPTURE(p);
    REQUIRE(divides_witness(gamma, p, true) == divides_witness(gamma, p, false));
  }
}

TEST_CASE("primes_not_dividing matches the known lists") {
  CHECK(primes_not_dividing(descriptor(SequenceId::gamma), 50) ==
        std::vector<std::uint64_t>{2, 3, 7, 13, 23, 29, 43, 47});
  CHECK(primes_not_dividing(descriptor(SequenceId::a), 100) ==
        std::vector<std::uint64_t>{3, 11, 17, 19, 43, 83, 89, 97});
  CHECK(primes_not_dividing(descriptor(SequenceId::s10), 100).empty());
}

TEST_CASE("survey report structure") {
  auto rep = survey(descriptor(SequenceId::gamma), 100);
  CHECK(rep.id == "gamma");
  CHECK(rep.total_primes == 25);
  CHECK(rep.rows.size() == 25);
  CHECK(rep.curve.size() == 25);
  CHECK(rep.non_dividing_primes ==
        std::vector<std::uint64_t>{2, 3, 7, 13, 23, 29, 43, 47, 53, 67, 71, 79, 83, 89});
  CHECK(rep.non_dividing_count() == 14);
  CHECK(rep.proportion_decimal() == decimal_ratio(14, 25, 4));
  // curve is monotone and consistent with the final count
  long prev = 0;
  for (const auto& pt : rep.curve) {
    CHECK(pt.non_dividing >= prev);
    prev = pt.non_dividing;
  }
  CHECK(rep.curve.back().non_dividing == rep.non_dividing_count());
  CHECK(rep.curve.back().primes_seen == rep.total_primes);
}

TEST_CASE("survey is independent of the worker count") {
  auto one = survey(descriptor(SequenceId::delta), 300, 1);
  auto three = survey(descriptor(SequenceId::delta), 300, 3);
  auto eight = survey(descriptor(SequenceId::delta), 300, 8);
  CHECK(one == three);
  CHECK(one == eight);
  CHECK(to_json(one).dump() == to_json(three).dump());
}

TEST_CASE("survey validates input") {
  CHECK_THROWS_AS(survey(descriptor(SequenceId::a), 1), std::invalid_argument);
  CHECK_THROWS_AS(survey(descriptor(SequenceId::a), 100, 0), std::invalid_argument);
}

TEST_CASE("heuristic proportion") {
  auto h3 = heuristic_proportion(3);
  CHECK(h3.numerator == 4);
  CHECK(h3.denominator == 9);
  auto h7 = heuristic_proportion(7);
  CHECK(h7.numerator == 1296);  // 6^4
  CHECK(h7.denominator == 2401);
  CHECK(std::abs(h7.value() - 1296.0 / 2401.0) < 1e-12);
  auto big = heuristic_proportion(9973);
  CHECK(std::abs(big.value() - k_limit_non_dividing) < 1e-3);
  CHECK_THROWS_AS(heuristic_proportion(10), std::invalid_argument);
}

TEST_CASE("decimal rendering rounds half to even") {
  CHECK(decimal_ratio(1, 8, 2) == "0.12");   // 0.125
  CHECK(decimal_ratio(3, 8, 2) == "0.38");   // 0.375
  CHECK(decimal_ratio(758, 1229, 4) == "0.6168");
  CHECK(decimal_ratio(1, 2, 4) == "0.5000");
  CHECK(decimal_ratio(25, 25, 4) == "1.0000");
  CHECK(decimal_ratio(1, 3, 4) == "0.3333");
  CHECK(decimal_ratio(2, 3, 4) == "0.6667");
}

TEST_CASE("survey JSON round-trips losslessly") {
  auto rep = survey(descriptor(SequenceId::b), 200);
  Json j = to_json(rep);
  SurveyReport back = survey_from_json(j);
  CHECK(back == rep);
  CHECK(to_json(back).dump() == j.dump());
}

TEST_CASE("survey CSV schema") {
  auto rep = survey(descriptor(SequenceId::gamma), 20);
  std::string csv = survey_csv(rep);
  CHECK(csv.rfind("prime,divides,first_zero_index\n", 0) == 0);
  CHECK(csv.find("\n2,0,\n") != std::string::npos);   // 2 divides no Apery number
  CHECK(csv.find("\n5,1,1\n") != std::string::npos);  // gamma(1) = 5
  std::string curve = curve_csv(rep);
  CHECK(curve.rfind("prime,cumulative_proportion\n", 0) == 0);
}
