#include "doctest.h"
#include "rmt/errors.hpp"
#include "rmt/serialize.hpp"

using rmt::Json;
using rmt::Rational;

TEST_CASE("fractions round-trip through JSON text") {
    for (const Rational& r : {Rational(0), Rational(3, 4), Rational(-7, 262144), Rational(12345678901LL)}) {
        const Json j = rmt::scalar_json(r);
        CHECK(rmt::scalar_from_json(Json::parse(j.dump())) == r);
    }
    CHECK(rmt::scalar_json(Rational(1, 4), true).get<double>() == 0.25);
    CHECK_THROWS_AS(rmt::scalar_from_json(Json(0.5)), rmt::DomainError);
}

TEST_CASE("coefficients run in increasing degree") {
    const rmt::Polynomial p(std::vector<Rational>{Rational(3, 4), 0, 1});
    CHECK(rmt::coefficients_json(p).dump() == R"(["3/4","0","1"])");
}

TEST_CASE("ensemble keys") {
    CHECK(rmt::ensemble_json(rmt::EnsembleSpec::gue(3)).dump() == R"({"kind":"GUE","N":3})");
    CHECK(rmt::ensemble_json(rmt::EnsembleSpec::jue(2, Rational(1, 2), 0)).dump() ==
          R"({"kind":"JUE","N":2,"gamma1":"1/2","gamma2":"0"})");
}

TEST_CASE("csv quoting") {
    CHECK(rmt::csv_field("plain") == "plain");
    CHECK(rmt::csv_field("[2,1]") == "\"[2,1]\"");
    CHECK(rmt::csv_field("say \"x\"") == "\"say \"\"x\"\"\"");
}

TEST_CASE("recovery report lists the recovered coefficients") {
    const auto j = rmt::recovery_json(rmt::semicircle_recovery(1, 4, 9));
    CHECK(j["ok"].get<bool>());
    CHECK(j["coefficients"].dump() == R"(["1","-1/8","-1/128"])");
}
