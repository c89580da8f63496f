#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "parastacks/machine.hpp"
#include "walk_enum.hpp"

#include <map>
#include <set>

using namespace parastacks;
using parastacks::testing::all_valid_words;

namespace {

// The machine-side illustration word with output 43125867.
const char* kEightItemWord = "ENEEWWWESWNENSSW";

Permutation perm(const std::string& s) { return permutation_from_string(s); }

// Position-based restatement of the Even-Itai edge rule, used as an
// independent oracle: {i,j} with i<j is an edge iff some value above j
// appears before i, which appears before j.
std::set<std::pair<int, int>> edges_by_positions(const Permutation& p) {
    const int n = p.size();
    std::vector<int> pos(n + 1);
    for (int idx = 0; idx < n; ++idx) pos[p.entries[idx]] = idx;
    std::set<std::pair<int, int>> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (pos[i] > pos[j]) continue;
            for (int k = j + 1; k <= n; ++k)
                if (pos[k] < pos[i]) {
                    out.insert({i, j});
                    break;
                }
        }
    return out;
}

}  // namespace

TEST_CASE("word and permutation text forms") {
    OpWord w = opword_from_string("enws");
    CHECK(to_string(w) == "ENWS");
    CHECK_THROWS_AS(opword_from_string("ENXW"), std::invalid_argument);

    CHECK(perm("312").entries == std::vector<int>{3, 1, 2});
    CHECK(perm("10 2 3 4 5 6 7 8 9 1").size() == 10);
    CHECK_THROWS(perm("313"));
    CHECK_THROWS(perm("1 2 2"));
}

TEST_CASE("execute") {
    CHECK(execute(opword_from_string("EW")) == perm("1"));
    CHECK(execute(opword_from_string(kEightItemWord)) == perm("43125867"));
    CHECK(execute(opword_from_string("ENEWWS")) == perm("312"));

    // invalid words report the offending position
    try {
        execute(opword_from_string("EWW"));
        CHECK(false);
    } catch (const invalid_word& e) {
        CHECK(e.position() == 2);
    }
    try {
        execute(opword_from_string("ENEW"));
        CHECK(false);
    } catch (const invalid_word& e) {
        CHECK(e.position() == 4);  // stack 2 still holds an item
    }
}

TEST_CASE("execute yields a permutation for every valid word") {
    for (int n = 1; n <= 4; ++n)
        for (const OpWord& w : all_valid_words(n)) {
            Permutation p = execute(w);
            REQUIRE(p.size() == n);
            std::set<int> seen(p.entries.begin(), p.entries.end());
            CHECK(static_cast<int>(seen.size()) == n);
        }
}

TEST_CASE("even_itai_graph") {
    EvenItaiGraph g = even_itai_graph(perm("312"));
    CHECK(g.edges == std::vector<std::pair<int, int>>{{1, 2}});

    CHECK(even_itai_graph(perm("1234")).edges.empty());

    // full agreement with the positional oracle on all permutations, n <= 6
    for (int n = 1; n <= 6; ++n) {
        Permutation p;
        p.entries.resize(n);
        for (int i = 0; i < n; ++i) p.entries[i] = i + 1;
        do {
            auto got = even_itai_graph(p);
            std::set<std::pair<int, int>> expect = edges_by_positions(p);
            CHECK(std::set<std::pair<int, int>>(got.edges.begin(), got.edges.end()) ==
                  expect);
        } while (std::next_permutation(p.entries.begin(), p.entries.end()));
    }
}

TEST_CASE("achievability") {
    CHECK(is_achievable(perm("312")));
    // every permutation of length <= 3
    for (int n = 1; n <= 3; ++n) {
        Permutation p;
        p.entries.resize(n);
        for (int i = 0; i < n; ++i) p.entries[i] = i + 1;
        do {
            CHECK(is_achievable(p));
        } while (std::next_permutation(p.entries.begin(), p.entries.end()));
    }
    // exactly one permutation of length 4 fails, identified by exhaustion
    std::vector<Permutation> bad;
    Permutation p = perm("1234");
    do {
        if (!is_achievable(p)) bad.push_back(p);
    } while (std::next_permutation(p.entries.begin(), p.entries.end()));
    REQUIRE(bad.size() == 1);
    CHECK(bad[0] == perm("4123"));
}

TEST_CASE("canonical_sequence") {
    CHECK(to_string(canonical_sequence(perm("12"))) == "EWEW");
    CHECK(to_string(canonical_sequence(perm("312"))) == "ENEWWS");
    CHECK_THROWS_AS(canonical_sequence(perm("4123")), std::domain_error);

    // the canonical producer of 312 is unique among all valid words of length 6
    int producers_matching = 0;
    for (const OpWord& w : all_valid_words(3))
        if (execute(w) == perm("312") && to_string(w) == "ENEWWS") ++producers_matching;
    CHECK(producers_matching == 1);

    Permutation big = perm("43125867");
    CHECK(execute(canonical_sequence(big)) == big);
}

TEST_CASE("canonical words biject with achievable permutations (small n)") {
    // counts 1, 1, 2, 6, 23, 103 for n = 0..5
    const long long expected[] = {1, 1, 2, 6, 23, 103};
    for (int n = 1; n <= 5; ++n) {
        std::set<Permutation> outputs;
        long long canonical_count = 0;
        for (const OpWord& w : all_valid_words(n)) {
            Permutation p = execute(w);
            if (canonical_sequence(p) == w) {
                ++canonical_count;
                outputs.insert(p);
            }
        }
        CHECK(canonical_count == expected[n]);
        CHECK(static_cast<long long>(outputs.size()) == canonical_count);
        CHECK(enumerate_achievable(n) == expected[n]);
    }
}

TEST_CASE("enumerate_achievable") {
    CHECK(enumerate_achievable(1) == 1);
    CHECK(enumerate_achievable(4) == 23);
    CHECK(enumerate_achievable(6) == 513);
    CHECK(enumerate_achievable(6, 10, 3) == 513);  // parallel partition agrees
    CHECK_THROWS_AS(enumerate_achievable(11), std::invalid_argument);

    std::vector<Permutation> listing;
    CHECK(enumerate_achievable(4, 10, 1, &listing) == 23);
    CHECK(listing.size() == 23);
}

TEST_CASE("supermultiplicativity of the achievable counts") {
    std::map<int, long long> s;
    for (int n = 1; n <= 7; ++n) s[n] = enumerate_achievable(n);
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; m + n <= 7; ++n) CHECK(s[m + n] >= s[m] * s[n]);
}

TEST_CASE("achievability is closed under sub-permutations") {
    std::vector<Permutation> achievable;
    enumerate_achievable(6, 10, 1, &achievable);
    std::mt19937 rng(99);
    std::uniform_int_distribution<size_t> pick(0, achievable.size() - 1);
    for (int trial = 0; trial < 60; ++trial) {
        const Permutation& p = achievable[pick(rng)];
        const int n = p.size();
        for (int drop = 0; drop < n; ++drop) {
            Permutation q;
            for (int i = 0; i < n; ++i) {
                if (i == drop) continue;
                int v = p.entries[i];
                // renormalize values to 1..n-1
                q.entries.push_back(v - (v > p.entries[drop] ? 1 : 0));
            }
            CHECK(is_achievable(q));
        }
    }
}
