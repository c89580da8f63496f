// Bicoloured arch systems and their walk encodings: crossing graph,
// connected components, left-right pairs, canonicalization of operation
// sequences, primitive factorization, and the corner-exchanging involution.
//
// Arch k joins the time of the k-th input to the time of its output; red
// arches live above the line (stack 1), blue below (stack 2). Same-colour
// arches never cross; two opposite-colour arches cross when their intervals
// interleave.
#pragma once

#include "parastacks/machine.hpp"

#include <cstdint>

namespace parastacks {

enum class ArchColour : uint8_t { red, blue };

struct Arch {
    int open = 0;   // positions 1..2n
    int close = 0;
    ArchColour colour = ArchColour::red;
};

struct ArchSystem {
    int n = 0;                 // number of arches
    std::vector<Arch> arches;  // numbered by left endpoint: arches[k-1] is arch k
};

ArchSystem opword_to_arches(const OpWord& w);
OpWord arches_to_opword(const ArchSystem& x);

bool arches_cross(const Arch& a, const Arch& b);

// Connected components of the crossing graph, each a sorted list of arch
// numbers (1-based), ordered by smallest member.
std::vector<std::vector<int>> components(const ArchSystem& x);

// Positions where a left endpoint of one colour is immediately followed by a
// right endpoint of the other colour; equals the number of NW plus ES factors
// of the walk encoding.
int left_right_pairs(const ArchSystem& x);
int left_right_pairs(const OpWord& w);

bool is_standard(const ArchSystem& x);   // first arch of each component red
bool is_canonical(const ArchSystem& x);  // standard and no left-right pairs
bool outputs_eagerly(const OpWord& w);   // no ES or NW factor

// The eager word equivalent to w that keeps every item on its stack
// (normal form of the I1 O2 -> O2 I1, I2 O1 -> O1 I2 rewriting).
OpWord eager_normal_form(const OpWord& w);

// The unique canonical word equivalent to w: eager normal form, then every
// component whose first arch is blue is reflected.
OpWord canonicalize(const OpWord& w);

// Splits w at interior origin visits of its walk; the concatenation of the
// factors is w and each factor is primitive.
std::vector<OpWord> primitive_factorization(const OpWord& w);

// Reverses each maximal {N,W} block. An involution on arbitrary walk words:
// swaps the numbers of NW and WN factors, fixes ES and SE counts, and
// preserves the projections onto {N,S} and {E,W}.
OpWord corner_involution(const OpWord& w);

struct CornerCounts {
    int nw = 0, es = 0, wn = 0, se = 0;
};
CornerCounts corner_counts(const OpWord& w);

}  // namespace parastacks
