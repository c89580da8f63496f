#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "parastacks/arches.hpp"
#include "walk_enum.hpp"

#include <set>

using namespace parastacks;
using parastacks::testing::all_valid_words;
using parastacks::testing::random_step_word;
using parastacks::testing::random_valid_word;

namespace {

const char* kEightItemWord = "ENEEWWWESWNENSSW";  // output 43125867

// Reference eager normal form: repeatedly commute the leftmost I1 O2 (ES)
// or I2 O1 (NW) factor. Each swap is lexicographically decreasing under
// O1 < O2 < I1 < I2, so this terminates.
OpWord eager_by_swaps(OpWord w) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < w.letters.size(); ++i) {
            Step a = w.letters[i], b = w.letters[i + 1];
            if ((a == Step::E && b == Step::S) || (a == Step::N && b == Step::W)) {
                std::swap(w.letters[i], w.letters[i + 1]);
                changed = true;
                break;
            }
        }
    }
    return w;
}

}  // namespace

TEST_CASE("word to arches and back") {
    ArchSystem x = opword_to_arches(opword_from_string("EW"));
    REQUIRE(x.n == 1);
    CHECK(x.arches[0].open == 1);
    CHECK(x.arches[0].close == 2);
    CHECK(x.arches[0].colour == ArchColour::red);

    ArchSystem big = opword_to_arches(opword_from_string(kEightItemWord));
    CHECK(big.n == 8);
    CHECK(components(big).size() == 5);
    CHECK(left_right_pairs(big) == 1);

    std::mt19937 rng(4242);
    for (int trial = 0; trial < 10000; ++trial) {
        OpWord w = random_valid_word(rng, 1 + trial % 10);
        CHECK(arches_to_opword(opword_to_arches(w)) == w);
    }
}

TEST_CASE("arch numbering follows left endpoints and same-colour arches never cross") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 2000; ++trial) {
        OpWord w = random_valid_word(rng, 1 + trial % 8);
        ArchSystem x = opword_to_arches(w);
        for (int k = 1; k < x.n; ++k) CHECK(x.arches[k - 1].open < x.arches[k].open);
        for (int i = 0; i < x.n; ++i)
            for (int j = i + 1; j < x.n; ++j) {
                const Arch &a = x.arches[i], &b = x.arches[j];
                if (a.colour != b.colour) continue;
                bool interleaved = (a.open < b.open && b.open < a.close && a.close < b.close) ||
                                   (b.open < a.open && a.open < b.close && b.close < a.close);
                CHECK(!interleaved);
            }
    }
}

TEST_CASE("components") {
    // nested same-colour pair: no crossing, two components
    CHECK(components(opword_to_arches(opword_from_string("EEWW"))).size() == 2);
    // crossing pair of opposite colours: one component
    CHECK(components(opword_to_arches(opword_from_string("ENWS"))).size() == 1);

    // the 8-arch system: arches 6, 7 cross; 8 is nested inside alone
    ArchSystem big = opword_to_arches(opword_from_string(kEightItemWord));
    auto comps = components(big);
    std::set<std::vector<int>> as_set(comps.begin(), comps.end());
    CHECK(as_set.count({6, 7}) == 1);
    CHECK(as_set.count({8}) == 1);
}

TEST_CASE("left_right_pairs") {
    CHECK(left_right_pairs(opword_from_string("ENSW")) == 0);
    CHECK(left_right_pairs(opword_from_string("ENWS")) == 1);
    CHECK(left_right_pairs(opword_to_arches(opword_from_string(kEightItemWord))) == 1);
    // canonical systems have none, by definition of eager output
    std::mt19937 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        OpWord w = canonicalize(random_valid_word(rng, 1 + trial % 8));
        CHECK(left_right_pairs(w) == 0);
    }
}

TEST_CASE("standard and canonical predicates") {
    ArchSystem fig5 = opword_to_arches(opword_from_string(kEightItemWord));
    CHECK(!is_canonical(fig5));

    OpWord canon = canonicalize(opword_from_string(kEightItemWord));
    ArchSystem fig6 = opword_to_arches(canon);
    CHECK(is_standard(fig6));
    CHECK(is_canonical(fig6));

    CHECK(!is_standard(opword_to_arches(opword_from_string("NS"))));
}

TEST_CASE("canonicalize") {
    OpWord fig5 = opword_from_string(kEightItemWord);
    OpWord canon = canonicalize(fig5);
    CHECK(execute(canon) == execute(fig5));
    CHECK(execute(canon) == permutation_from_string("43125867"));
    CHECK(canonicalize(canon) == canon);  // fixed point
    CHECK(canon == canonical_sequence(permutation_from_string("43125867")));

    // agreement with the machine-side construction on all short words
    for (int n = 1; n <= 5; ++n)
        for (const OpWord& w : all_valid_words(n))
            CHECK(canonicalize(w) == canonical_sequence(execute(w)));

    // output preservation on longer random words
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        OpWord w = random_valid_word(rng, 6 + trial % 15);
        CHECK(execute(canonicalize(w)) == execute(w));
    }
}

TEST_CASE("eager normal form agrees with the swap rewriting") {
    for (int n = 1; n <= 4; ++n)
        for (const OpWord& w : all_valid_words(n))
            CHECK(eager_normal_form(w) == eager_by_swaps(w));
    std::mt19937 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        OpWord w = random_valid_word(rng, 5 + trial % 6);
        OpWord e = eager_normal_form(w);
        CHECK(e == eager_by_swaps(w));
        CHECK(outputs_eagerly(e));
        CHECK(execute(e) == execute(w));
    }
}

TEST_CASE("connected arch systems are primitive") {
    for (int n = 1; n <= 6; ++n)
        for (const OpWord& w : all_valid_words(n))
            if (components(opword_to_arches(w)).size() == 1)
                CHECK(primitive_factorization(w).size() == 1);
}

TEST_CASE("primitive_factorization") {
    auto factors = primitive_factorization(opword_from_string("EWEW"));
    REQUIRE(factors.size() == 2);
    CHECK(to_string(factors[0]) == "EW");
    CHECK(to_string(factors[1]) == "EW");

    CHECK(primitive_factorization(opword_from_string("ENWS")).size() == 1);
    CHECK(primitive_factorization(OpWord{}).empty());

    std::mt19937 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        OpWord w = random_valid_word(rng, 1 + trial % 10);
        OpWord glued;
        for (const OpWord& f : primitive_factorization(w))
            glued.letters.insert(glued.letters.end(), f.letters.begin(), f.letters.end());
        CHECK(glued == w);
    }
}

TEST_CASE("corner_involution") {
    CHECK(to_string(corner_involution(opword_from_string("ENWWSSNWES"))) == "EWWNSSWNES");
    CHECK(to_string(corner_involution(opword_from_string("ESSEES"))) == "ESSEES");

    std::mt19937 rng(23);
    for (int trial = 0; trial < 10000; ++trial) {
        OpWord w = random_step_word(rng, trial % 24);
        OpWord f = corner_involution(w);
        CHECK(corner_involution(f) == w);

        // stays in the shuffle class
        auto project = [](const OpWord& v, bool vertical) {
            std::string s;
            for (Step st : v.letters) {
                if (vertical && (st == Step::N || st == Step::S)) s += to_string(OpWord{{st}});
                if (!vertical && (st == Step::E || st == Step::W)) s += to_string(OpWord{{st}});
            }
            return s;
        };
        CHECK(project(f, true) == project(w, true));
        CHECK(project(f, false) == project(w, false));

        // swaps NW with WN, fixes ES and SE
        CornerCounts cw = corner_counts(w), cf = corner_counts(f);
        CHECK(cf.nw == cw.wn);
        CHECK(cf.wn == cw.nw);
        CHECK(cf.es == cw.es);
        CHECK(cf.se == cw.se);
    }
}

TEST_CASE("corner bi-statistics are equidistributed inside shuffle classes") {
    // Pointwise: the involution maps each word of the class to a word of the
    // same class with (#NW, #ES) and (#WN, #ES) exchanged; checked
    // exhaustively on all words of length <= 8.
    for (int len = 1; len <= 8; ++len) {
        std::vector<Step> word(len, Step::E);
        long total = 1;
        for (int i = 0; i < len; ++i) total *= 4;
        for (long code = 0; code < total; ++code) {
            long c = code;
            for (int i = 0; i < len; ++i) {
                word[i] = static_cast<Step>(c & 3);
                c >>= 2;
            }
            OpWord w{word};
            OpWord f = corner_involution(w);
            CornerCounts cw = corner_counts(w), cf = corner_counts(f);
            if (!(cf.nw == cw.wn && cf.es == cw.es)) {
                CHECK(cf.nw == cw.wn);
                CHECK(cf.es == cw.es);
            }
        }
    }
}
