#include "gdlog/dist.hpp"
#include "gdlog/errors.hpp"

#include "support/testutil.hpp"

#include <doctest.h>

#include <random>

using namespace gdlog;
using namespace gdlog::test;

namespace {

Rat outcomeValue(const SupportEntry &entry) {
    return Interner::instance().constant(entry.outcome).code;
}

} // namespace

TEST_CASE("flip support") {
    auto &reg = builtins();
    SUBCASE("p = 1/10") {
        Support s = reg.support("flip", {Rat(1, 10)});
        REQUIRE(s.size() == 2);
        CHECK(outcomeValue(s[0]) == 0);
        CHECK(s[0].prob == Rat(9, 10));
        CHECK(outcomeValue(s[1]) == 1);
        CHECK(s[1].prob == Rat(1, 10));
    }
    SUBCASE("degenerate p = 1") {
        Support s = reg.support("flip", {Rat(1)});
        REQUIRE(s.size() == 1);
        CHECK(outcomeValue(s[0]) == 1);
        CHECK(s[0].prob == 1);
    }
    SUBCASE("degenerate p = 0") {
        Support s = reg.support("flip", {Rat(0)});
        REQUIRE(s.size() == 1);
        CHECK(outcomeValue(s[0]) == 0);
    }
    SUBCASE("p outside [0,1] is an error") {
        CHECK_THROWS_AS(reg.support("flip", {Rat(3, 2)}), InputError);
        CHECK_THROWS_AS(reg.support("flip", {Rat(-1, 2)}), InputError);
    }
}

TEST_CASE("die support") {
    auto &reg = builtins();
    SUBCASE("uniform die") {
        std::vector<Rat> uniform(6, Rat(1, 6));
        Support s = reg.support("die", uniform);
        REQUIRE(s.size() == 6);
        for (std::size_t i = 0; i < 6; ++i) {
            CHECK(outcomeValue(s[i]) == Rat(static_cast<long>(i + 1)));
            CHECK(s[i].prob == Rat(1, 6));
        }
    }
    SUBCASE("deterministic die") {
        Support s = reg.support("die", {Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)});
        REQUIRE(s.size() == 1);
        CHECK(outcomeValue(s[0]) == 1);
        CHECK(s[0].prob == 1);
    }
    SUBCASE("invalid parameters map to outcome 0") {
        Support s = reg.support("die", {Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(0), Rat(0), Rat(0)});
        REQUIRE(s.size() == 1);
        CHECK(outcomeValue(s[0]) == 0);
        CHECK(s[0].prob == 1);
    }
}

TEST_CASE("support lookup errors") {
    auto &reg = builtins();
    CHECK_THROWS_AS(reg.support("flop", {Rat(1)}), InputError);
    CHECK_THROWS_AS(reg.support("flip", {Rat(1, 2), Rat(1, 2)}), InputError);
    CHECK_THROWS_AS(reg.support("die", {Rat(1)}), InputError);
}

TEST_CASE("user distributions from JSON") {
    SUBCASE("flip-equivalent table matches the built-in") {
        DistributionRegistry reg = DistributionRegistry::withBuiltins();
        reg.addFromJson(R"({
          "myflip": {"dimension": 1,
                     "table": [{"params": ["1/10"],
                                "support": [{"value": 1, "prob": "1/10"},
                                            {"value": 0, "prob": "9/10"}]}]}
        })");
        Support mine = reg.support("myflip", {Rat(1, 10)});
        Support builtin = reg.support("flip", {Rat(1, 10)});
        REQUIRE(mine.size() == builtin.size());
        for (std::size_t i = 0; i < mine.size(); ++i) {
            CHECK(mine[i].outcome == builtin[i].outcome);
            CHECK(mine[i].prob == builtin[i].prob);
        }
    }
    SUBCASE("single-outcome distribution is valid") {
        DistributionRegistry reg = DistributionRegistry::withBuiltins();
        reg.addFromJson(R"({
          "point": {"dimension": 1,
                    "table": [{"params": [1], "support": [{"value": 7, "prob": 1}]}]}
        })");
        Support s = reg.support("point", {Rat(1)});
        REQUIRE(s.size() == 1);
        CHECK(outcomeValue(s[0]) == 7);
    }
    SUBCASE("probabilities must sum to 1") {
        DistributionRegistry reg = DistributionRegistry::withBuiltins();
        CHECK_THROWS_AS(reg.addFromJson(R"({
          "bad": {"dimension": 1,
                  "table": [{"params": [1], "support": [{"value": 1, "prob": "9/10"}]}]}
        })"),
                        InputError);
    }
    SUBCASE("duplicate support values are rejected") {
        DistributionRegistry reg = DistributionRegistry::withBuiltins();
        CHECK_THROWS_AS(reg.addFromJson(R"({
          "dup": {"dimension": 1,
                  "table": [{"params": [1], "support": [{"value": 1, "prob": "1/2"},
                                                        {"value": 1, "prob": "1/2"}]}]}
        })"),
                        InputError);
    }
    SUBCASE("duplicate registry names are rejected") {
        DistributionRegistry reg = DistributionRegistry::withBuiltins();
        CHECK_THROWS_AS(reg.addFromJson(R"({"flip": {"dimension": 1, "table": []}})"), InputError);
    }
}

TEST_CASE("support invariants hold over random parameters") {
    auto &reg = builtins();
    std::mt19937 rng(5);
    for (int round = 0; round < 200; ++round) {
        std::vector<Rat> params;
        if (rng() % 2) {
            params = {Rat(static_cast<long>(rng() % 100), 100)};
            Support s = reg.support("flip", params);
            Rat total(0);
            for (std::size_t i = 0; i < s.size(); ++i) {
                CHECK(s[i].prob > 0);
                if (i > 0) CHECK(constSemanticLess(s[i - 1].outcome, s[i].outcome));
                total += s[i].prob;
            }
            CHECK(total == 1);
        } else {
            // Random die parameters, sometimes invalid on purpose.
            long rest = 60;
            for (int i = 0; i < 6; ++i) {
                long take = static_cast<long>(rng() % (rest + 1));
                params.push_back(Rat(take, 60));
                rest -= take;
            }
            if (rng() % 3 == 0) params[rng() % 6] += Rat(1, 7); // spoil the sum
            Support s = reg.support("die", params);
            Rat total(0);
            for (std::size_t i = 0; i < s.size(); ++i) {
                CHECK(s[i].prob > 0);
                if (i > 0) CHECK(constSemanticLess(s[i - 1].outcome, s[i].outcome));
                total += s[i].prob;
            }
            CHECK(total == 1);
        }
    }
}
