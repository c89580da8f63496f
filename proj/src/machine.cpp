#include "parastacks/machine.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <numeric>
#include <sstream>
#include <thread>

namespace parastacks {

OpWord opword_from_string(const std::string& text) {
    OpWord w;
    w.letters.reserve(text.size());
    for (size_t i = 0; i < text.size(); ++i) {
        switch (std::toupper(static_cast<unsigned char>(text[i]))) {
            case 'E': w.letters.push_back(Step::E); break;
            case 'N': w.letters.push_back(Step::N); break;
            case 'W': w.letters.push_back(Step::W); break;
            case 'S': w.letters.push_back(Step::S); break;
            case ' ': break;
            default:
                throw std::invalid_argument("operation word: unexpected letter '" +
                                            std::string(1, text[i]) + "' at position " +
                                            std::to_string(i));
        }
    }
    return w;
}

std::string to_string(const OpWord& w) {
    static const char names[] = {'E', 'N', 'W', 'S'};
    std::string s;
    s.reserve(w.size());
    for (Step st : w.letters) s.push_back(names[static_cast<int>(st)]);
    return s;
}

Permutation permutation_from_string(const std::string& text) {
    std::vector<int> entries;
    const bool has_sep = text.find_first_of(" ,\t") != std::string::npos;
    if (has_sep) {
        std::istringstream in(text);
        std::string tok;
        while (in >> tok) {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("bad permutation entry '" + tok + "'");
            entries.push_back(v);
        }
    } else {
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("bad permutation digit '" + std::string(1, c) + "'");
            entries.push_back(c - '0');
        }
        if (entries.size() > 9)
            throw std::invalid_argument("compact permutation form is limited to n <= 9");
    }
    Permutation p{std::move(entries)};
    std::vector<char> seen(p.size() + 1, 0);
    for (int v : p.entries) {
        if (v < 1 || v > p.size() || seen[v])
            throw std::invalid_argument("not a permutation of 1..n: " + text);
        seen[v] = 1;
    }
    return p;
}

std::string to_string(const Permutation& p) {
    std::string s;
    for (int i = 0; i < p.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(p.entries[i]);
    }
    return s;
}

bool is_valid_word(const OpWord& w) {
    int h = 0, v = 0;
    for (Step st : w.letters) {
        switch (st) {
            case Step::E: ++h; break;
            case Step::N: ++v; break;
            case Step::W: --h; break;
            case Step::S: --v; break;
        }
        if (h < 0 || v < 0) return false;
    }
    return h == 0 && v == 0;
}

Permutation execute(const OpWord& w) {
    std::vector<int> s1, s2, out;
    int next = 1;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        switch (w.letters[i]) {
            case Step::E: s1.push_back(next++); break;
            case Step::N: s2.push_back(next++); break;
            case Step::W:
                if (s1.empty()) throw invalid_word("output from empty stack 1 at position " + std::to_string(i), i);
                out.push_back(s1.back());
                s1.pop_back();
                break;
            case Step::S:
                if (s2.empty()) throw invalid_word("output from empty stack 2 at position " + std::to_string(i), i);
                out.push_back(s2.back());
                s2.pop_back();
                break;
        }
    }
    if (!s1.empty() || !s2.empty())
        throw invalid_word("stacks not empty after the last operation", w.size());
    return Permutation{std::move(out)};
}

std::vector<int> item_stacks(const OpWord& w) {
    std::vector<int> stacks(1, 0);  // entry 0 unused
    for (Step st : w.letters) {
        if (st == Step::E) stacks.push_back(1);
        if (st == Step::N) stacks.push_back(2);
    }
    return stacks;
}

EvenItaiGraph even_itai_graph(const Permutation& p) {
    const int n = p.size();
    EvenItaiGraph g;
    g.n = n;
    // Edge {i,j} iff the values k, i, j appear in this order in p for some
    // k > j. Direct cubic scan over position triples.
    std::vector<std::vector<char>> adj(n + 1, std::vector<char>(n + 1, 0));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                int k = p.entries[a], i = p.entries[b], j = p.entries[c];
                if (i < j && k > j) adj[i][j] = 1;
            }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (adj[i][j]) g.edges.emplace_back(i, j);
    return g;
}

namespace {

// BFS two-colouring; roots each component at its smallest vertex, coloured 1.
bool two_colour(const EvenItaiGraph& g, std::vector<int>& colour) {
    const int n = g.n;
    std::vector<std::vector<int>> adj(n + 1);
    for (auto [i, j] : g.edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    colour.assign(n + 1, 0);
    for (int root = 1; root <= n; ++root) {
        if (colour[root]) continue;
        colour[root] = 1;
        std::vector<int> queue{root};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int u : adj[v]) {
                if (!colour[u]) {
                    colour[u] = 3 - colour[v];
                    queue.push_back(u);
                } else if (colour[u] == colour[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

bool is_achievable(const Permutation& p, TwoColouring* colouring) {
    EvenItaiGraph g = even_itai_graph(p);
    std::vector<int> colour;
    if (!two_colour(g, colour)) return false;
    if (colouring) colouring->colour = std::move(colour);
    return true;
}

OpWord simulate_with_stacks(const Permutation& p, const std::vector<int>& stacks) {
    const int n = p.size();
    OpWord w;
    w.letters.reserve(2 * n);
    std::vector<int> s1, s2;
    int next_in = 1, done = 0;
    while (done < n) {
        const int want = p.entries[done];
        if (!s1.empty() && s1.back() == want) {
            w.letters.push_back(Step::W);
            s1.pop_back();
            ++done;
        } else if (!s2.empty() && s2.back() == want) {
            w.letters.push_back(Step::S);
            s2.pop_back();
            ++done;
        } else if (next_in <= n) {
            if (stacks[next_in] == 1) {
                w.letters.push_back(Step::E);
                s1.push_back(next_in);
            } else {
                w.letters.push_back(Step::N);
                s2.push_back(next_in);
            }
            ++next_in;
        } else {
            throw std::logic_error("stack assignment cannot produce the permutation");
        }
    }
    return w;
}

OpWord canonical_sequence(const Permutation& p) {
    TwoColouring colouring;
    if (!is_achievable(p, &colouring))
        throw std::domain_error("permutation is not achievable with two parallel stacks");
    return simulate_with_stacks(p, colouring.colour);
}

namespace {

long long count_achievable_with_prefix(int n, int first) {
    // Permutations of 1..n whose first entry is `first`.
    std::vector<int> rest;
    for (int v = 1; v <= n; ++v)
        if (v != first) rest.push_back(v);
    long long count = 0;
    Permutation p;
    p.entries.resize(n);
    p.entries[0] = first;
    do {
        std::copy(rest.begin(), rest.end(), p.entries.begin() + 1);
        if (is_achievable(p)) ++count;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return count;
}

}  // namespace

long long enumerate_achievable(int n, int brute_bound, int jobs,
                               std::vector<Permutation>* listing) {
    if (n < 0 || n > brute_bound)
        throw std::invalid_argument("enumerate_achievable: n exceeds the brute-force bound " +
                                    std::to_string(brute_bound));
    if (n == 0) return 1;  // the empty permutation
    if (listing) {
        listing->clear();
        Permutation p;
        p.entries.resize(n);
        std::iota(p.entries.begin(), p.entries.end(), 1);
        long long count = 0;
        do {
            if (is_achievable(p)) {
                ++count;
                listing->push_back(p);
            }
        } while (std::next_permutation(p.entries.begin(), p.entries.end()));
        return count;
    }
    // Partition the scan by the first entry; reduce in index order.
    std::vector<long long> partial(n, 0);
    if (jobs <= 1) {
        for (int first = 1; first <= n; ++first)
            partial[first - 1] = count_achievable_with_prefix(n, first);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> cursor{0};
        for (int t = 0; t < std::min(jobs, n); ++t)
            pool.emplace_back([&] {
                for (int idx; (idx = cursor.fetch_add(1)) < n;)
                    partial[idx] = count_achievable_with_prefix(n, idx + 1);
            });
        for (auto& th : pool) th.join();
    }
    long long total = 0;
    for (long long c : partial) total += c;
    return total;
}

}  // namespace parastacks
