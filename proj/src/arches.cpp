#include "parastacks/arches.hpp"

#include <algorithm>

namespace parastacks {

ArchSystem opword_to_arches(const OpWord& w) {
    ArchSystem x;
    std::vector<int> s1, s2;  // arch numbers currently open per stack
    int next = 0;
    x.arches.resize(w.size() / 2);
    for (size_t i = 0; i < w.letters.size(); ++i) {
        const int pos = static_cast<int>(i) + 1;
        switch (w.letters[i]) {
            case Step::E:
                if (next >= static_cast<int>(x.arches.size()))
                    throw invalid_word("more inputs than outputs in the word", i);
                x.arches[next] = {pos, 0, ArchColour::red};
                s1.push_back(next++);
                break;
            case Step::N:
                if (next >= static_cast<int>(x.arches.size()))
                    throw invalid_word("more inputs than outputs in the word", i);
                x.arches[next] = {pos, 0, ArchColour::blue};
                s2.push_back(next++);
                break;
            case Step::W:
                if (s1.empty()) throw invalid_word("output from empty stack 1", i);
                x.arches[s1.back()].close = pos;
                s1.pop_back();
                break;
            case Step::S:
                if (s2.empty()) throw invalid_word("output from empty stack 2", i);
                x.arches[s2.back()].close = pos;
                s2.pop_back();
                break;
        }
    }
    if (!s1.empty() || !s2.empty())
        throw invalid_word("stacks not empty after the last operation", w.size());
    x.n = next;
    return x;
}

OpWord arches_to_opword(const ArchSystem& x) {
    OpWord w;
    w.letters.assign(2 * static_cast<size_t>(x.n), Step::E);
    for (const Arch& a : x.arches) {
        const bool red = a.colour == ArchColour::red;
        w.letters[a.open - 1] = red ? Step::E : Step::N;
        w.letters[a.close - 1] = red ? Step::W : Step::S;
    }
    return w;
}

bool arches_cross(const Arch& a, const Arch& b) {
    if (a.colour == b.colour) return false;
    return (a.open < b.open && b.open < a.close && a.close < b.close) ||
           (b.open < a.open && a.open < b.close && b.close < a.close);
}

std::vector<std::vector<int>> components(const ArchSystem& x) {
    std::vector<int> comp(x.n, -1);
    std::vector<std::vector<int>> out;
    for (int root = 0; root < x.n; ++root) {
        if (comp[root] >= 0) continue;
        const int id = static_cast<int>(out.size());
        std::vector<int> members{root};
        comp[root] = id;
        for (size_t qi = 0; qi < members.size(); ++qi) {
            int v = members[qi];
            for (int u = 0; u < x.n; ++u)
                if (comp[u] < 0 && arches_cross(x.arches[v], x.arches[u])) {
                    comp[u] = id;
                    members.push_back(u);
                }
        }
        std::sort(members.begin(), members.end());
        for (int& m : members) ++m;  // 1-based arch numbers
        out.push_back(std::move(members));
    }
    return out;
}

int left_right_pairs(const ArchSystem& x) {
    return left_right_pairs(arches_to_opword(x));
}

int left_right_pairs(const OpWord& w) {
    int count = 0;
    for (size_t i = 0; i + 1 < w.letters.size(); ++i) {
        const Step a = w.letters[i], b = w.letters[i + 1];
        if ((a == Step::E && b == Step::S) || (a == Step::N && b == Step::W)) ++count;
    }
    return count;
}

bool is_standard(const ArchSystem& x) {
    for (const auto& comp : components(x))
        if (x.arches[comp.front() - 1].colour != ArchColour::red) return false;
    return true;
}

bool is_canonical(const ArchSystem& x) {
    return is_standard(x) && left_right_pairs(x) == 0;
}

bool outputs_eagerly(const OpWord& w) { return left_right_pairs(w) == 0; }

OpWord eager_normal_form(const OpWord& w) {
    // The rewriting I1 O2 -> O2 I1, I2 O1 -> O1 I2 keeps the output
    // permutation and every item's stack; its normal form is the eager word
    // with the same item assignment, which an eager re-simulation produces
    // directly.
    Permutation p = execute(w);
    return simulate_with_stacks(p, item_stacks(w));
}

OpWord canonicalize(const OpWord& w) {
    OpWord eager = eager_normal_form(w);
    ArchSystem x = opword_to_arches(eager);
    for (const auto& comp : components(x)) {
        if (x.arches[comp.front() - 1].colour == ArchColour::red) continue;
        for (int k : comp) {
            Arch& a = x.arches[k - 1];
            a.colour = a.colour == ArchColour::red ? ArchColour::blue : ArchColour::red;
        }
    }
    return arches_to_opword(x);
}

std::vector<OpWord> primitive_factorization(const OpWord& w) {
    if (!is_valid_word(w)) {
        execute(w);  // raises invalid_word with the offending position
    }
    std::vector<OpWord> factors;
    OpWord cur;
    int h = 0, v = 0;
    for (Step st : w.letters) {
        cur.letters.push_back(st);
        switch (st) {
            case Step::E: ++h; break;
            case Step::N: ++v; break;
            case Step::W: --h; break;
            case Step::S: --v; break;
        }
        if (h == 0 && v == 0) {
            factors.push_back(std::move(cur));
            cur = OpWord{};
        }
    }
    return factors;
}

OpWord corner_involution(const OpWord& w) {
    OpWord out;
    out.letters.reserve(w.size());
    size_t i = 0;
    while (i < w.letters.size()) {
        Step st = w.letters[i];
        if (st == Step::N || st == Step::W) {
            size_t j = i;
            while (j < w.letters.size() &&
                   (w.letters[j] == Step::N || w.letters[j] == Step::W))
                ++j;
            for (size_t k = j; k > i; --k) out.letters.push_back(w.letters[k - 1]);
            i = j;
        } else {
            out.letters.push_back(st);
            ++i;
        }
    }
    return out;
}

CornerCounts corner_counts(const OpWord& w) {
    CornerCounts c;
    for (size_t i = 0; i + 1 < w.letters.size(); ++i) {
        Step a = w.letters[i], b = w.letters[i + 1];
        if (a == Step::N && b == Step::W) ++c.nw;
        if (a == Step::E && b == Step::S) ++c.es;
        if (a == Step::W && b == Step::N) ++c.wn;
        if (a == Step::S && b == Step::E) ++c.se;
    }
    return c;
}

}  // namespace parastacks
