// Test helpers: exhaustive and random generation of operation words.
#pragma once

#include "parastacks/machine.hpp"

#include <functional>
#include <random>
#include <vector>

namespace parastacks::testing {

// All valid operation words of length 2n (quarter-plane loops), by DFS.
inline std::vector<OpWord> all_valid_words(int n) {
    std::vector<OpWord> out;
    OpWord cur;
    std::function<void(int, int, int)> rec = [&](int x, int y, int remaining) {
        if (remaining == 0) {
            if (x == 0 && y == 0) out.push_back(cur);
            return;
        }
        if (x + y > remaining) return;
        for (Step st : {Step::E, Step::N, Step::W, Step::S}) {
            int nx = x, ny = y;
            switch (st) {
                case Step::E: ++nx; break;
                case Step::N: ++ny; break;
                case Step::W: --nx; break;
                case Step::S: --ny; break;
            }
            if (nx < 0 || ny < 0) continue;
            cur.letters.push_back(st);
            rec(nx, ny, remaining - 1);
            cur.letters.pop_back();
        }
    };
    rec(0, 0, 2 * n);
    return out;
}

// A uniform-ish random valid word of length 2n (each step chosen uniformly
// among the letters that keep the word completable).
inline OpWord random_valid_word(std::mt19937& rng, int n) {
    OpWord w;
    int x = 0, y = 0;
    for (int remaining = 2 * n; remaining > 0; --remaining) {
        std::vector<Step> ok;
        for (Step st : {Step::E, Step::N, Step::W, Step::S}) {
            int nx = x, ny = y;
            switch (st) {
                case Step::E: ++nx; break;
                case Step::N: ++ny; break;
                case Step::W: --nx; break;
                case Step::S: --ny; break;
            }
            if (nx >= 0 && ny >= 0 && nx + ny <= remaining - 1) ok.push_back(st);
        }
        Step pick = ok[std::uniform_int_distribution<size_t>(0, ok.size() - 1)(rng)];
        w.letters.push_back(pick);
        switch (pick) {
            case Step::E: ++x; break;
            case Step::N: ++y; break;
            case Step::W: --x; break;
            case Step::S: --y; break;
        }
    }
    return w;
}

// An arbitrary (not necessarily valid) step word.
inline OpWord random_step_word(std::mt19937& rng, int len) {
    OpWord w;
    std::uniform_int_distribution<int> pick(0, 3);
    for (int i = 0; i < len; ++i) w.letters.push_back(static_cast<Step>(pick(rng)));
    return w;
}

}  // namespace parastacks::testing
