// The two-parallel-stacks device: execute operation sequences, decide
// achievability through the Even-Itai graph, and build canonical operation
// sequences.
//
// Operation sequences are written in the walk alphabet: E = input to stack 1,
// N = input to stack 2, W = output from stack 1, S = output from stack 2.
// A word is valid when each stack's letters form a balanced prefix-dominant
// pair and both stacks are empty at the end; equivalently the word traces a
// lattice loop confined to the quarter plane.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace parastacks {

enum class Step : uint8_t { E, N, W, S };

struct OpWord {
    std::vector<Step> letters;

    size_t size() const { return letters.size(); }
    bool operator==(const OpWord& o) const { return letters == o.letters; }
};

OpWord opword_from_string(const std::string& text);  // letters ENWS
std::string to_string(const OpWord& w);

struct Permutation {
    std::vector<int> entries;  // one-line notation, a bijection on {1..n}

    int size() const { return static_cast<int>(entries.size()); }
    bool operator==(const Permutation& o) const { return entries == o.entries; }
    bool operator<(const Permutation& o) const { return entries < o.entries; }
};

// Accepts space-separated values, or a compact digit string when n <= 9.
Permutation permutation_from_string(const std::string& text);
std::string to_string(const Permutation& p);

// Raised when a word is not a valid operation sequence; carries the
// offending position (0-based; size() means "stacks not empty at the end").
class invalid_word : public std::runtime_error {
public:
    invalid_word(std::string msg, size_t position)
        : std::runtime_error(std::move(msg)), position_(position) {}
    size_t position() const { return position_; }

private:
    size_t position_;
};

bool is_valid_word(const OpWord& w);

// Runs the machine on inputs 1..n and returns the output permutation.
Permutation execute(const OpWord& w);

// Stack assignment of each item (1 or 2), read off the word's input letters.
std::vector<int> item_stacks(const OpWord& w);

struct EvenItaiGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // {i,j} with i < j, sorted
};

// Edge {i,j} (i<j) present iff some k>j occurs before i before j in p.
EvenItaiGraph even_itai_graph(const Permutation& p);

// Two-colouring of the Even-Itai graph; colour[v] is 1 (red, stack 1) or
// 2 (blue, stack 2), the smallest element of each component coloured red.
struct TwoColouring {
    std::vector<int> colour;  // indexed 1..n (entry 0 unused)
};

bool is_achievable(const Permutation& p, TwoColouring* colouring = nullptr);

// The unique canonical operation sequence producing p. Throws
// std::domain_error when p is not achievable.
OpWord canonical_sequence(const Permutation& p);

// Eager simulation with a prescribed item-to-stack assignment. Fails (throws
// std::logic_error) when the assignment cannot produce p.
OpWord simulate_with_stacks(const Permutation& p, const std::vector<int>& stacks);

// Count of achievable permutations of length n by exhaustive testing.
// The optional listing collects the achievable ones when requested.
long long enumerate_achievable(int n, int brute_bound = 10, int jobs = 1,
                               std::vector<Permutation>* listing = nullptr);

}  // namespace parastacks
