#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "qec/chebyshev.hpp"
#include "qec/error.hpp"
#include "qec/join_qec.hpp"
#include "qec/output.hpp"
#include "qec/parallel.hpp"
#include "qec/verify.hpp"

using namespace qec;
using nlohmann::json;

namespace {

OutputRecord qec_record() {
    OutputRecord r;
    r.kind = "qec";
    r.input = "join(empty:2, complete:2)";
    r.value = -0.5;
    r.alpha = -1.5;
    r.source = "lambda1";
    r.lambda_sets = to_record_sets(compute_lambda_sets(2, family(Family::complete, 2)));
    r.timing_ms = 0.125;
    return r;
}

OutputRecord poly_record(int n) {
    OutputRecord r;
    r.kind = "phi";
    r.input = std::to_string(n);
    r.n = n;
    r.polynomials.emplace_back("phi", phi(n));
    return r;
}

// Writers print 15 significant digits, so a round trip is exact only after rounding.
OutputRecord rounded(OutputRecord r) {
    for (auto* f : {&r.value, &r.alpha, &r.timing_ms})
        if (*f) **f = round15(**f);
    if (r.lambda_sets)
        for (auto* v : {&r.lambda_sets->lambda0, &r.lambda_sets->lambda1, &r.lambda_sets->lambda2,
                        &r.lambda_sets->lambda3})
            for (double& x : *v) x = round15(x);
    return r;
}

}  // namespace

TEST_CASE("fifteen significant digits") {
    CHECK(format15(-0.5) == "-0.5");
    CHECK(format15(0.1 + 0.2) == "0.3");
    CHECK(format15(std::sqrt(2.0)) == "1.4142135623731");  // %g drops the trailing zero
    CHECK(round15(1.0 / 3) == 0.333333333333333);
    CHECK(format15(-4 * std::pow(std::sin(M_PI / 10), 2)) == "-0.381966011250105");
}

TEST_CASE("json round trip") {
    const OutputRecord r = qec_record();
    const std::string text = to_json(r);
    const json j = json::parse(text);
    CHECK(j["value"] == -0.5);
    CHECK(j["source"] == "lambda1");
    CHECK(j["lambda_sets"]["lambda1"].size() == 1);
    CHECK(record_from_json(text) == rounded(r));

    const OutputRecord irr = [] {
        OutputRecord x;
        x.kind = "fan-qec";
        x.input = "3";
        x.n = 3;
        x.value = std::sqrt(3.0) - 2;
        x.alpha = -std::sqrt(3.0);
        x.source = "fan-closed-form";
        return x;
    }();
    CHECK(record_from_json(to_json(irr)) == rounded(irr));

    const OutputRecord p = poly_record(4);
    CHECK(record_from_json(to_json(p)) == p);
    CHECK(json::parse(to_json(p))["polynomials"][0]["text"] == phi(4).to_string());
}

TEST_CASE("big coefficients serialise as strings") {
    OutputRecord r;
    r.kind = "phi";
    r.input = "big";
    IntPoly big{1};
    for (int i = 0; i < 90; ++i) big = big * IntPoly{1, 1};
    r.polynomials.emplace_back("p", big);
    const json j = json::parse(to_json(r));
    CHECK(j["polynomials"][0]["coeffs"][0] == 1);
    CHECK(j["polynomials"][0]["coeffs"][45].is_string());
    CHECK(record_from_json(to_json(r)) == r);
    CHECK(records_from_csv(to_csv({r})).at(0) == r);
}

TEST_CASE("json arrays") {
    const std::vector<OutputRecord> rs{poly_record(1), poly_record(2), poly_record(3)};
    const auto back = records_from_json_array(to_json_array(rs));
    CHECK(back == rs);
    CHECK(records_from_json_array("[]").empty());
}

TEST_CASE("csv round trip") {
    std::vector<OutputRecord> rs;
    for (int n = 1; n <= 6; ++n) rs.push_back(poly_record(n));
    const std::string csv = to_csv(rs);
    CHECK(csv.substr(0, csv.find('\n')).find("phi_coeffs") != std::string::npos);
    CHECK(records_from_csv(csv) == rs);

    // Mixed records: the header is the union of the fields.
    std::vector<OutputRecord> mixed{qec_record(), poly_record(2)};
    CHECK(records_from_csv(to_csv(mixed)) == std::vector<OutputRecord>{rounded(mixed[0]), mixed[1]});

    // Quoting: inputs with commas and quotes survive.
    OutputRecord q = poly_record(1);
    q.input = "a, \"b\"";
    CHECK(records_from_csv(to_csv({q})).at(0) == q);
}

TEST_CASE("malformed input raises ParseError") {
    CHECK_THROWS_AS(record_from_json("{"), ParseError);
    CHECK_THROWS_AS(record_from_json("[1,2]"), ParseError);
    CHECK_THROWS_AS(record_from_json(R"({"input":"x"})"), ParseError);
    CHECK_THROWS_AS(record_from_json(R"({"kind":"qec","input":"x","value":"high"})"), ParseError);
    CHECK_THROWS_AS(records_from_json_array(R"({"kind":"qec"})"), ParseError);
    CHECK_THROWS_AS(records_from_csv("kind,input\n\"qec,x\n"), ParseError);
    CHECK_THROWS_AS(records_from_csv("kind,input\nqec\n"), ParseError);
    CHECK_THROWS_AS(records_from_csv("kind,input,value\nqec,x,abc\n"), ParseError);
}

TEST_CASE("ordered_map keeps index order") {
    setenv("QEC_THREADS", "4", 1);
    CHECK(worker_count() == 4);
    const auto out = ordered_map(50, [](std::size_t i) {
        // Later indices finish first.
        std::this_thread::sleep_for(std::chrono::microseconds(50 * (50 - i)));
        return static_cast<int>(i * i);
    });
    REQUIRE(out.size() == 50);
    for (int i = 0; i < 50; ++i) CHECK(out[i] == i * i);

    setenv("QEC_THREADS", "1", 1);
    CHECK(worker_count() == 1);
    CHECK(ordered_map(3, [](std::size_t i) { return i; }) == std::vector<std::size_t>{0, 1, 2});

    setenv("QEC_THREADS", "0", 1);
    CHECK(worker_count() >= 1);
    unsetenv("QEC_THREADS");
    CHECK(ordered_map(0, [](std::size_t i) { return i; }).empty());
}

TEST_CASE("ordered_map rethrows the first failure") {
    setenv("QEC_THREADS", "3", 1);
    try {
        ordered_map(20, [](std::size_t i) -> int {
            if (i == 7) throw std::runtime_error("seven");
            if (i == 12) throw std::runtime_error("twelve");
            return 0;
        });
        FAIL("no exception");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()) == "seven");
    }
    unsetenv("QEC_THREADS");
}

TEST_CASE("report formatting") {
    Report r;
    r.checks.push_back(Check{"fan", "ok-check", 1e-8, 1e-12, 10, {}});
    r.checks.push_back(Check{"fan", "bad-check", 1e-8, 0.5, 3, {R"({"n":4})"}});
    CHECK_FALSE(r.passed());
    const std::string text = format_report(r);
    CHECK(text.find("PASS fan/ok-check") != std::string::npos);
    CHECK(text.find("FAIL fan/bad-check") != std::string::npos);
    CHECK(text.find(R"(replay {"n":4})") != std::string::npos);
    CHECK(text.find("1 of 2 checks failed") != std::string::npos);

    r.checks.pop_back();
    CHECK(r.passed());
    CHECK(format_report(r).find("all 1 checks passed") != std::string::npos);
}

TEST_CASE("verify suites are deterministic and pass") {
    CHECK_THROWS_AS(run_suite("nope"), InvalidArgument);
    for (const char* s : {"chebyshev", "recurrence", "embedding"}) {
        const Report a = run_suite(s, {7, 12});
        const Report b = run_suite(s, {7, 12});
        CHECK(a.passed());
        CHECK(format_report(a) == format_report(b));
    }
    const auto c0 = join_corpus(0, 20), c1 = join_corpus(0, 20), c2 = join_corpus(1, 20);
    CHECK(c0 == c1);
    CHECK(c0 != c2);
    for (const Graph& g : c0) CHECK(g.is_connected());
}
