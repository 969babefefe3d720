#include "doctest.h"

#include <map>
#include <vector>

#include "sdg/engine.hpp"

using namespace sdg;

namespace {

// Independent oracle: top-down memoized evaluation with its own mex. Shares
// no code with the bottom-up table builder.
struct TopDownOracle {
    GameSpec spec;
    std::map<std::uint64_t, unsigned> memo;

    unsigned sg(std::uint64_t n) {
        if (n <= spec.overrides.size()) return spec.overrides[n - 1];
        if (n == 1) return 0;
        auto it = memo.find(n);
        if (it != memo.end()) return it->second;
        std::vector<unsigned> kids;
        kids.push_back(sg((n + spec.b - 1) / spec.b));
        if (n > spec.a) {
            kids.push_back(sg(n - spec.a));
        } else if (spec.boundary.kind == Boundary::Kind::VirtualValue) {
            kids.push_back(spec.boundary.virtual_value);
        }
        unsigned m = 0;
        while (std::find(kids.begin(), kids.end(), m) != kids.end()) ++m;
        memo[n] = m;
        return m;
    }
};

// Pure win/loss minimax over legal moves only (no phantom children), for
// game variants where every mex child is a real move.
struct MinimaxOracle {
    std::uint64_t a, b;
    std::map<std::uint64_t, bool> memo;

    bool win(std::uint64_t n) {
        if (n == 1) return false;
        auto it = memo.find(n);
        if (it != memo.end()) return it->second;
        memo[n] = false;  // guard (no cycles: all moves decrease n)
        bool w = !win((n + b - 1) / b);
        if (!w && n > a) w = !win(n - a);
        memo[n] = w;
        return w;
    }
};

const std::vector<SgValue> kPaper22 = {0, 2, 1, 0, 0, 2, 1, 1, 2, 2, 0, 0,
                                       2, 2, 0, 0, 1, 1, 0, 0, 1, 1, 2, 2};

}  // namespace

TEST_CASE("mex basics") {
    CHECK(mex({}) == 0);
    CHECK(mex({0u, 1u}) == 2);
    CHECK(mex({0u, 2u}) == 1);
    CHECK(mex({1u, 2u}) == 0);
    CHECK(mex({0u, 1u, 2u}) == 3);
}

TEST_CASE("G_{1,2} first ten values") {
    SgTable t({1, 2}, 10);
    const std::vector<SgValue> want = {0, 1, 0, 2, 1, 2, 0, 1, 0, 2};
    for (std::uint64_t n = 1; n <= 10; ++n) CHECK(t.value(n) == want[n - 1]);
}

TEST_CASE("G_{2,2} reproduces the published sequence") {
    SgTable t({2, 2}, 24);
    for (std::uint64_t n = 1; n <= 24; ++n) CHECK(t.value(n) == kPaper22[n - 1]);
    CHECK(t.value(2) == 2);
}

TEST_CASE("misere G_{1,2} via override") {
    GameSpec spec{1, 2};
    spec.overrides = {1};
    SgTable t(spec, 9);
    const std::vector<SgValue> want = {1, 0, 1, 2, 0, 2, 0, 1, 2};
    for (std::uint64_t n = 1; n <= 9; ++n) CHECK(t.value(n) == want[n - 1]);
}

TEST_CASE("outcome and best_move") {
    SgTable t({1, 2}, 16);
    CHECK(outcome(t, 2) == Outcome::FirstPlayerWin);
    CHECK(outcome(t, 9) == Outcome::FirstPlayerLoss);
    CHECK(outcome(t, 1) == Outcome::FirstPlayerLoss);
    CHECK(best_move(t, 4) == MoveKind::Subtract);
    CHECK(best_move(t, 9) == std::nullopt);
    CHECK(best_move(t, 2) == MoveKind::Subtract);
    CHECK(best_move(t, 1) == std::nullopt);
    // any winning move must land on an SG-0 child
    for (std::uint64_t n = 2; n <= 16; ++n) {
        auto mv = best_move(t, n);
        if (!mv) continue;
        const std::uint64_t child = *mv == MoveKind::Subtract ? n - 1 : (n + 1) / 2;
        CHECK(t.value(child) == 0);
    }
}

TEST_CASE("configuration errors") {
    CHECK_THROWS_AS(SgTable({0, 2}, 5), ConfigError);
    CHECK_THROWS_AS(SgTable({1, 1}, 5), ConfigError);
    GameSpec bad{1, 2};
    bad.overrides = {0, 1, 3};
    CHECK_THROWS_AS(SgTable(bad, 5), ConfigError);
    GameSpec toolong{1, 2};
    toolong.overrides = {0, 1, 2, 0, 1, 2};
    CHECK_THROWS_AS(SgTable(toolong, 5), ConfigError);
    SgTable t({1, 2}, 5);
    CHECK_THROWS_AS(t.value(0), std::out_of_range);
    CHECK_THROWS_AS(t.value(6), std::out_of_range);
}

TEST_CASE("mex consistency and child-exclusion invariants") {
    for (auto [a, b] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
             {1, 2}, {2, 2}, {1, 4}, {2, 4}, {3, 5}}) {
        SgTable t({a, b}, 5000);
        for (std::uint64_t n = 2; n <= 5000; ++n) {
            const SgValue div_child = t.value((n + b - 1) / b);
            std::vector<unsigned> kids{div_child};
            if (n > a) {
                kids.push_back(t.value(n - a));
            } else {
                kids.push_back(1);  // default boundary
            }
            CHECK(t.value(n) == mex({kids[0], kids[1]}));
            CHECK(t.value(n) != div_child);
        }
    }
}

TEST_CASE("a=1 never repeats adjacent values") {
    SgTable t({1, 6}, 20000);
    for (std::uint64_t n = 2; n <= 20000; ++n) CHECK(t.value(n) != t.value(n - 1));
}

TEST_CASE("determinism") {
    GameSpec spec{3, 4};
    SgTable t1(spec, 3000), t2(spec, 3000);
    for (std::uint64_t n = 1; n <= 3000; ++n) CHECK(t1.value(n) == t2.value(n));
}

TEST_CASE("agrees with top-down oracle to 2000") {
    std::vector<GameSpec> specs;
    specs.push_back({1, 2});
    specs.push_back({2, 2});
    specs.push_back({1, 4});
    specs.push_back({4, 2});
    specs.push_back({2, 4, Boundary::subtract_disallowed()});
    GameSpec misere{1, 2};
    misere.overrides = {1};
    specs.push_back(misere);
    GameSpec v2{3, 3, Boundary{Boundary::Kind::VirtualValue, 2}};
    specs.push_back(v2);
    for (const GameSpec& spec : specs) {
        SgTable t(spec, 2000);
        TopDownOracle oracle{spec, {}};
        for (std::uint64_t n = 1; n <= 2000; ++n) {
            CAPTURE(spec.a);
            CAPTURE(spec.b);
            CAPTURE(n);
            CHECK(t.value(n) == oracle.sg(n));
        }
    }
}

TEST_CASE("win/loss agrees with pure minimax where all moves are real") {
    {
        SgTable t({1, 2}, 1500);
        MinimaxOracle mm{1, 2, {}};
        for (std::uint64_t n = 1; n <= 1500; ++n) {
            CHECK((outcome(t, n) == Outcome::FirstPlayerWin) == mm.win(n));
        }
    }
    {
        SgTable t({2, 2, Boundary::subtract_disallowed()}, 1500);
        MinimaxOracle mm{2, 2, {}};
        for (std::uint64_t n = 1; n <= 1500; ++n) {
            CHECK((outcome(t, n) == Outcome::FirstPlayerWin) == mm.win(n));
        }
    }
}
