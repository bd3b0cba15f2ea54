#include "rat/cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>
#include <sstream>

using namespace rat::cli;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome call(const CommandRequest& req) {
    std::ostringstream out, err;
    const int code = run(req, out, err);
    return {code, out.str(), err.str()};
}

CommandRequest word_request(const char* sub, const char* word) {
    CommandRequest r;
    r.subcommand = sub;
    r.word = word;
    return r;
}

CommandRequest stationary(std::size_t n, std::size_t r, const char* a, const char* b, const char* q) {
    CommandRequest req;
    req.subcommand = "stationary";
    req.n = n;
    req.r = r;
    req.alpha = a;
    req.beta = b;
    req.q = q;
    return req;
}

}  // namespace

TEST(cli, weight_text) {
    Outcome o = call(word_request("weight", "DE"));
    EXPECT_EQ(o.code, 0);
    EXPECT_NE(o.out.find("weight: a^2*b + a*b^2 + q*a*b"), std::string::npos);
    EXPECT_NE(o.out.find("reduced: a + b + q"), std::string::npos);
    EXPECT_NE(o.out.find("fillings: 3"), std::string::npos);
}

TEST(cli, weight_json) {
    CommandRequest req = word_request("weight", "DAE");
    req.output = OutputFormat::Json;
    Outcome o = call(req);
    ASSERT_EQ(o.code, 0);
    auto j = nlohmann::json::parse(o.out);
    EXPECT_EQ(j["schema_version"], kSchemaVersion);
    EXPECT_EQ(j["command"], "weight");
    EXPECT_EQ(j["inputs"]["word"], "DAE");
    EXPECT_EQ(j["results"]["reduced_weight"], "q*a*b + a*b + q^2*a + q*a + q^2*b + q*b + q^3");
    EXPECT_EQ(j["results"]["fillings"], "7");
}

TEST(cli, fillings_json_lists_every_filling) {
    CommandRequest req = word_request("fillings", "DAE");
    req.output = OutputFormat::Json;
    req.tiling = TilingChoice::Maximal;
    Outcome o = call(req);
    ASSERT_EQ(o.code, 0);
    auto j = nlohmann::json::parse(o.out);
    EXPECT_EQ(j["inputs"]["tiling"], "maximal");
    EXPECT_EQ(j["results"]["fillings"].size(), 7u);
}

TEST(cli, stationary) {
    Outcome o = call(stationary(2, 0, "1", "1", "0"));
    EXPECT_EQ(o.code, 0);
    EXPECT_NE(o.out.find("pi(DE) = 2/5 predicted 2/5 match=true"), std::string::npos);
    EXPECT_NE(o.out.find("match=true"), std::string::npos);

    CommandRequest json = stationary(2, 1, "1/2", "1/3", "1/5");
    json.output = OutputFormat::Json;
    o = call(json);
    ASSERT_EQ(o.code, 0);
    EXPECT_NO_THROW(nlohmann::json::parse(o.out));
}

TEST(cli, count) {
    CommandRequest req;
    req.subcommand = "count";
    req.count = CountKind::Classes;
    req.count_args = {3, 1};
    EXPECT_EQ(call(req).out, "36\n");
    req.count = CountKind::Mct;
    req.count_args = {3, 1, 1};
    EXPECT_EQ(call(req).out, "8\n");
    req.count = CountKind::Macmahon;
    req.count_args = {2, 2, 2};
    EXPECT_EQ(call(req).out, "20\n");
    req.count_args = {2, 2};
    EXPECT_EQ(call(req).code, 2);
}

TEST(cli, verify) {
    CommandRequest req;
    req.subcommand = "verify";
    req.max_n = 3;
    req.suites = {"ansatz", "bijection"};
    Outcome o = call(req);
    EXPECT_EQ(o.code, 0);
    EXPECT_NE(o.out.find("ansatz: "), std::string::npos);
    EXPECT_NE(o.out.find("bijection: "), std::string::npos);
    EXPECT_EQ(o.out.find("main-theorem"), std::string::npos);
}

TEST(cli, render) {
    CommandRequest req = word_request("render", "DAE");
    Outcome o = call(req);
    EXPECT_EQ(o.code, 0);
    EXPECT_EQ(o.out.rfind("<?xml", 0), 0u);
    req.filling_index = 99;
    EXPECT_EQ(call(req).code, 2);
}

TEST(cli, invalid_requests_exit_2) {
    EXPECT_EQ(call(word_request("weight", "DQ")).code, 2);
    EXPECT_EQ(call(word_request("weight", "DAADDEDAE")).code, 2);  // over the default length
    EXPECT_EQ(call(stationary(7, 0, "1", "1", "1")).code, 2);
    EXPECT_EQ(call(stationary(2, 0, "3/2", "1", "1")).code, 2);
    EXPECT_EQ(call(stationary(2, 0, "1", "1", "x")).code, 2);
    EXPECT_EQ(call(stationary(2, 3, "1", "1", "1")).code, 2);
    CommandRequest unknown;
    unknown.subcommand = "nope";
    EXPECT_EQ(call(unknown).code, 2);
}

TEST(cli, max_area_raises_the_length_cap) {
    CommandRequest req = word_request("weight", "DAADDEDAE");
    req.max_area = 21;
    Outcome o = call(req);
    EXPECT_EQ(o.code, 0) << o.err;
}
