#include <gtest/gtest.h>

#include "qtkern/suites.hpp"

using namespace qtkern;

namespace {

const MacdonaldContext& ctx() {
    static const MacdonaldContext c;
    return c;
}

}  // namespace

TEST(Suites, Names) {
    EXPECT_EQ(suite_names(), (std::vector<std::string>{"macdonald", "kernel", "tableau", "shuffle", "wfock"}));
}

TEST(Suites, AllPassAtSmallSize) {
    for (const auto& name : suite_names()) {
        SuiteReport r = run_suite(ctx(), name, {2, 1});
        EXPECT_TRUE(r.pass()) << name << "\n" << to_markdown(r);
        EXPECT_FALSE(r.jobs.empty()) << name;
        EXPECT_EQ(r.failures(), 0u);
    }
}

TEST(Suites, Bounds) {
    EXPECT_THROW(run_suite(ctx(), "macdonald", {7, 1}), ResourceLimit);
    EXPECT_THROW(run_suite(ctx(), "macdonald", {-1, 1}), DomainError);
    EXPECT_THROW(run_suite(ctx(), "nothing", {1, 1}), MalformedInput);
}

TEST(Suites, InformationalRecordsDoNotFail) {
    SuiteReport r{"x", {}, {}};
    CheckRecord shown{"displayed"};
    shown.informational = true;
    r.jobs.push_back({shown, 0});
    EXPECT_TRUE(r.pass());
    CheckRecord bad{"real"};
    r.jobs.push_back({bad, 0});
    EXPECT_FALSE(r.pass());
    EXPECT_EQ(r.failures(), 1u);
}

TEST(Suites, WfockKeepsDisplayedFormsVisible) {
    SuiteReport r = run_suite(ctx(), "wfock", {3, 1});
    EXPECT_TRUE(r.pass());
    int info_failing = 0;
    for (const auto& j : r.jobs) info_failing += j.record.informational && !j.record.verdict;
    EXPECT_GT(info_failing, 0);
    std::string md = to_markdown(r);
    EXPECT_NE(md.find("fail (info)"), std::string::npos);
}

TEST(Suites, JsonReport) {
    SuiteReport r = run_suite(ctx(), "kernel", {1, 3});
    auto j = to_json(r);
    EXPECT_EQ(j.at("suite"), "kernel");
    EXPECT_EQ(j.at("seed"), 3);
    EXPECT_EQ(j.at("verdict"), "pass");
    EXPECT_EQ(j.at("jobs").size(), r.jobs.size());
    EXPECT_TRUE(j.at("jobs").at(0).contains("runtime_ms"));
    EXPECT_FALSE(to_json(r, false).at("jobs").at(0).contains("runtime_ms"));
    // same seed, same records
    auto k = to_json(run_suite(ctx(), "kernel", {1, 3}), false);
    EXPECT_EQ(to_json(r, false), k);
}
