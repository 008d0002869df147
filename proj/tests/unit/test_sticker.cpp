#include <gtest/gtest.h>

#include "../support.hpp"

using namespace bonding;

namespace {

StickerSystem example_system() {
    StickerSystem s;
    s.alphabet = {'a', 'b', 'c', 'd'};
    s.axioms = {Domino::of("a", "ab", 0)};
    s.rules = {{std::nullopt, Domino::of("bc", "cb", 1)}, {std::nullopt, Domino::of("bd", "", 0)}};
    return s;
}

}  // namespace

TEST(Domino, Invariants) {
    EXPECT_FALSE(Domino::make("", ""));
    EXPECT_FALSE(Domino::make("ab", "b", 0));      // mismatch in column 0
    EXPECT_FALSE(Domino::make("ab", "cd", 2));     // no paired column
    EXPECT_TRUE(Domino::make("ab", "bc", 1));
    EXPECT_THROW(Domino::of("a", "b"), Error);
    EXPECT_EQ(Domino::of("ab", "", 5).offset(), 0);
}

TEST(Domino, Classes) {
    auto blunt = Domino::complete("abc");
    EXPECT_TRUE(blunt.is_complete());
    EXPECT_TRUE(blunt.is_r());
    auto sticky = Domino::of("", "ab");
    EXPECT_TRUE(sticky.is_sticky_end());
    EXPECT_FALSE(sticky.is_lr());
    auto left_overhang = Domino::of("abc", "bc", 1);
    EXPECT_TRUE(left_overhang.is_lr());
    EXPECT_FALSE(left_overhang.is_r());
    auto right_overhang = Domino::of("a", "ab", 0);
    EXPECT_TRUE(right_overhang.is_r());
    EXPECT_FALSE(right_overhang.is_complete());
}

TEST(Stick, DisplayedExample) {
    // (ab/λ)[cd](λ/e) · (e/λ)[aab] = (ab/λ)[cdeaab]
    auto x = Domino::of("abcd", "cde", 2);
    auto y = Domino::of("eaab", "aab", 1);
    auto r = stick(x, y);
    ASSERT_TRUE(r);
    EXPECT_EQ(*r, Domino::of("abcdeaab", "cdeaab", 2));
}

TEST(Stick, ExampleSystemSteps) {
    auto s = example_system();
    auto first = stick(s.axioms[0], s.rules[0].right);
    ASSERT_TRUE(first);
    EXPECT_EQ(*first, Domino::of("abc", "abcb", 0));
    auto second = stick(*first, s.rules[1].right);
    ASSERT_TRUE(second);
    EXPECT_EQ(*second, Domino::of("abcbd", "abcb", 0));
    // The second rule also pairs directly with the axiom overhang.
    EXPECT_EQ(*stick(s.axioms[0], s.rules[1].right), Domino::of("abd", "ab", 0));
}

TEST(Stick, BluntAndMismatch) {
    EXPECT_EQ(*stick(Domino::complete("aa"), Domino::complete("b")), Domino::complete("aab"));
    // Upper overhang "ab" against lower overhang "ac".
    auto x = Domino::of("cab", "c", 0);
    auto y = Domino::of("d", "acd", -2);
    EXPECT_FALSE(stick(x, y));
    EXPECT_TRUE(stick(x, Domino::of("d", "abd", -2)));
    // Overhangs on the same strand collide.
    EXPECT_FALSE(stick(x, Domino::of("xd", "d", 1)));
    EXPECT_THROW(stick(Domino::of("", "a"), Domino::complete("a")), Error);
}

TEST(Stick, Associative) {
    Sampler rng(8);
    const std::string sigma = "ab";
    auto word = [&](std::size_t n) {
        std::string w;
        for (std::size_t i = 0; i < n; ++i) w += sigma[rng.below(2)];
        return w;
    };
    auto random_piece = [&]() {
        std::string core = word(1 + rng.below(2));
        std::string up = core, lo = core;
        int off = 0;
        switch (rng.below(4)) {
            case 1: up = word(1) + up; off = 1; break;
            case 2: lo = word(1) + lo; off = -1; break;
            default: break;
        }
        if (rng.coin()) up += word(rng.below(2));
        else lo += word(rng.below(2));
        return Domino::make(up, lo, off);
    };
    int checked = 0;
    for (int round = 0; round < 3000; ++round) {
        auto x = random_piece(), y = random_piece(), z = random_piece();
        if (!x || !y || !z) continue;
        auto xy = stick(*x, *y);
        auto yz = stick(*y, *z);
        if (!xy || !yz) continue;
        auto left = stick(*xy, *z);
        auto right = stick(*x, *yz);
        EXPECT_EQ(left.has_value(), right.has_value());
        if (left && right) {
            EXPECT_EQ(*left, *right);
        }
        ++checked;
    }
    EXPECT_GT(checked, 100);
}

TEST(StickerGenerates, Depths) {
    auto s = example_system();
    auto r = Domino::of("abcbd", "abcb", 0);
    auto d0 = sticker_generates(s, 0);
    EXPECT_EQ(d0, std::set<Domino>(s.axioms.begin(), s.axioms.end()));
    auto d1 = sticker_generates(s, 1);
    EXPECT_TRUE(d1.count(Domino::of("abc", "abcb", 0)));
    EXPECT_FALSE(d1.count(r));
    EXPECT_TRUE(sticker_generates(s, 2).count(r));
    EXPECT_TRUE(sticker_derives(s, r));
    EXPECT_FALSE(sticker_derives(s, Domino::of("abcbd", "abcbd", 0)));
}

TEST(StickerSystem, RegularityAndValidation) {
    auto s = example_system();
    EXPECT_TRUE(s.regular());
    auto two_sided = s;
    two_sided.rules.push_back({Domino::complete("a"), Domino::complete("b")});
    EXPECT_FALSE(two_sided.regular());
    try {
        sticker_generates(two_sided, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotRegular);
    }
    auto left_axiom = s;
    left_axiom.axioms = {Domino::of("ab", "b", 1)};
    EXPECT_THROW(left_axiom.require_regular(), Error);
    auto foreign = s;
    foreign.axioms = {Domino::complete("z")};
    EXPECT_THROW(foreign.validate(), Error);
}

TEST(Render, TwoRows) {
    EXPECT_EQ(render(Domino::of("a", "ab", 0)), "a.\nab");
    EXPECT_EQ(render(Domino::of("abc", "bc", 1)), "abc\n.bc");
    EXPECT_EQ(to_string(Domino::of("bc", "cb", 1)), "(bc/cb@1)");
}
