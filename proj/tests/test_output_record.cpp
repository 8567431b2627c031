#include <catch2/catch_amalgamated.hpp>

#include "secant/output_record.hpp"
#include "secant/record_json.hpp"

using namespace secant;

namespace {

OutputRecord sample_record() {
    OutputRecord r;
    r.m = 1.0;
    r.c = 1.0;
    r.potential = "oscillator";
    r.beta = 0.2506453859123456;
    r.gamma = 0.5003223812345678;
    r.E_lower = 2.501934931234567;
    r.E_reference = 2.664013212345678;
    r.k_cross = 2.818085112345678;
    r.cert_nodeless = true;
    r.cert_monotone = true;
    r.cert_W_nonneg = true;
    r.round_floats();
    return r;
}

}  // namespace

TEST_CASE("doubles are serialized with 10 significant digits", "[record]") {
    CHECK(format_double(0.2506453859123456) == "0.2506453859");
    CHECK(format_double(10.65385969123) == "10.65385969");
    CHECK(format_double(2.0) == "2");
    CHECK(round10(0.2506453859123456) == 0.2506453859);
}

TEST_CASE("CSV header matches the column contract", "[record]") {
    CHECK(csv_header() ==
          "m,c,potential,beta,gamma,E_lower,E_reference,k_cross,"
          "cert_nodeless,cert_monotone,cert_W_nonneg");
}

TEST_CASE("CSV round trip is lossless", "[record]") {
    auto r = sample_record();
    const std::string row = to_csv_row(r);
    auto back = record_from_csv_row(row);
    CHECK(back == r);
    CHECK(to_csv_row(back) == row);
}

TEST_CASE("CSV round trip with null fields", "[record]") {
    auto r = sample_record();
    r.potential = "linear";
    r.gamma.reset();
    r.E_reference.reset();
    const std::string row = to_csv_row(r);
    auto back = record_from_csv_row(row);
    CHECK(back == r);
    CHECK_FALSE(back.gamma.has_value());
    CHECK(to_csv_row(back) == row);
}

TEST_CASE("JSON round trip is lossless", "[record]") {
    auto r = sample_record();
    auto j = to_json(r);
    auto back = record_from_json(j);
    CHECK(back == r);
    CHECK(to_json(back).dump() == j.dump());

    r.gamma.reset();
    r.E_reference.reset();
    auto j2 = to_json(r);
    CHECK(j2["gamma"].is_null());
    CHECK(record_from_json(j2) == r);
}

TEST_CASE("CSV quoting handles embedded separators", "[record]") {
    auto r = sample_record();
    r.potential = "power, P=1.5";
    const std::string row = to_csv_row(r);
    CHECK(row.find("\"power, P=1.5\"") != std::string::npos);
    CHECK(record_from_csv_row(row) == r);
}
