#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "grasp/ci_statement.hpp"
#include "grasp/errors.hpp"

using namespace grasp;

TEST_CASE("statements normalize endpoint order and conditioning set")
{
    CiStatement s(4, 1, {3, 0, 3});
    CHECK(s.i == 1);
    CHECK(s.j == 4);
    CHECK(s.z == std::vector<int>{0, 3});

    CHECK(CiStatement(1, 4, {0, 3}) == s);
    CHECK(CiStatement(0, 1, {}) < CiStatement(0, 2, {}));
}

TEST_CASE("invalid statements are rejected")
{
    CHECK_THROWS_AS(CiStatement(2, 2, {}), InvalidQuery);
    CHECK_THROWS_AS(CiStatement(0, 1, {0}), InvalidQuery);
    CHECK_THROWS_AS(CiStatement(0, 1, {1}), InvalidQuery);
}

TEST_CASE("normalized statements deduplicate in ordered containers")
{
    std::set<CiStatement> set;
    set.insert(CiStatement(2, 0, {1}));
    set.insert(CiStatement(0, 2, {1}));
    CHECK(set.size() == 1);
}
