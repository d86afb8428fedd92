#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace anglespec {

// A word in the generators of a group: nonzero signed indices, +k encodes
// the k-th generator (1-based), -k its inverse. The empty word is the
// identity. Words are kept freely reduced (no adjacent g g^-1).
using Word = std::vector<std::int32_t>;

Word free_reduce(Word w);
Word inverse_word(const Word& w);
Word concat_reduced(const Word& u, const Word& v);

// Strips matching conjugating letters from both ends: x u x^-1 -> u.
Word cyclic_reduce(Word w);

// Total order used for deterministic tie-breaking: by length, then
// letter-by-letter with +1 < -1 < +2 < -2 < ...
bool word_less(const Word& a, const Word& b);

std::string word_to_string(const Word& w);  // "1 -2 1"; "" for the identity

}  // namespace anglespec
