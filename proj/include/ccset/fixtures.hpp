#pragma once

#include "io.hpp"

// Bundled example data set "example1": a binary (4,3)-CCC seed and the
// (8,4,6,2)-SZCCS it extends to with P = 2, sign sequences (-,-) and (+,-),
// and permutations (1,2,3,4) and (2,1,4,3). The CLI accepts "example1"
// wherever a seed, sequence family, or permutation spec is expected.

namespace ccset::fixtures {

inline constexpr std::string_view example1_seed_text =
    "+++\n"
    "++-\n"
    "++-\n"
    "-+-\n"
    "\n"
    "+-+\n"
    "++-\n"
    "--+\n"
    "+++\n"
    "\n"
    "+--\n"
    "+++\n"
    "-+-\n"
    "+--\n"
    "\n"
    "+--\n"
    "+-+\n"
    "+++\n"
    "-++\n";

inline constexpr std::string_view example1_szccs_text =
    "----+-\n"
    "--+--+\n"
    "--+++-\n"
    "+-+---\n"
    "\n"
    "+++-+-\n"
    "++---+\n"
    "++-++-\n"
    "-+----\n"
    "\n"
    "-++-++\n"
    "----+-\n"
    "+-+---\n"
    "-+++--\n"
    "\n"
    "+---++\n"
    "+++-+-\n"
    "-+----\n"
    "+--+--\n"
    "\n"
    "-+----\n"
    "--+--+\n"
    "++---+\n"
    "---+-+\n"
    "\n"
    "+-+---\n"
    "++---+\n"
    "--+--+\n"
    "++++-+\n"
    "\n"
    "-++-++\n"
    "-+----\n"
    "---+-+\n"
    "+---++\n"
    "\n"
    "+---++\n"
    "+-+---\n"
    "++++-+\n"
    "-++-++\n";

// The four seed codes C1..C4, each 4 x 3 over the binary alphabet.
inline CodeSet example1_seed() {
    return parse_sign_document(std::string(example1_seed_text)).as_set();
}

// The eight extended codes B1..B8 (set-major), each 4 x 6.
inline CodeSet example1_szccs_codes() {
    return parse_sign_document(std::string(example1_szccs_text)).as_set();
}

// The two sign sequences (-,-) and (+,-).
inline MosFamily example1_mos() {
    return MosFamily({Sequence(PhaseAlphabet{2}, {1, 1}), Sequence(PhaseAlphabet{2}, {0, 1})});
}

// The permutations (1,2,3,4) and (2,1,4,3), zero-based internally.
inline PermutationFamily example1_perms() {
    return PermutationFamily({{0, 1, 2, 3}, {1, 0, 3, 2}});
}

}  // namespace ccset::fixtures
