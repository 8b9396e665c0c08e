#include <catch_amalgamated.hpp>

#include <sstream>

#include "kronrad/verify.hpp"

using namespace kronrad;

TEST_CASE("all suites pass on a short run") {
    VerifyConfig cfg;
    cfg.seed = 7;
    cfg.trials = 3;
    std::ostringstream os;
    const VerifySummary sum = run_verify(cfg, os);
    INFO(os.str());
    REQUIRE(sum.failures() == 0);
    REQUIRE(sum.suites.size() == all_suites().size());
}

TEST_CASE("identical configs give byte-identical reports") {
    VerifyConfig cfg;
    cfg.seed = 42;
    cfg.trials = 2;
    cfg.suites = {"p3", "polyroots", "p2x2", "hou_du"};
    std::ostringstream a, b;
    run_verify(cfg, a);
    run_verify(cfg, b);
    REQUIRE(a.str() == b.str());
    REQUIRE_FALSE(a.str().empty());
}

TEST_CASE("suite selection and validation") {
    VerifyConfig cfg;
    cfg.trials = 1;
    cfg.suites = {"p3"};
    std::ostringstream os;
    const VerifySummary sum = run_verify(cfg, os);
    REQUIRE(sum.suites.size() == 1);
    REQUIRE(sum.suites.front().name == "p3");
    REQUIRE(os.str().find("# suite p3 anchor=") != std::string::npos);

    cfg.suites = {"nope"};
    REQUIRE_THROWS_AS(run_verify(cfg, os), std::invalid_argument);
}

TEST_CASE("different seeds draw different instances") {
    VerifyConfig a, b;
    a.trials = b.trials = 2;
    a.suites = b.suites = {"p3"};
    a.seed = 1;
    b.seed = 2;
    std::ostringstream ra, rb;
    run_verify(a, ra);
    run_verify(b, rb);
    REQUIRE(ra.str() != rb.str());
}
