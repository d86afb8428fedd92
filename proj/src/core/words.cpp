#include "core/words.hpp"

#include <cstdlib>

namespace anglespec {

namespace {

// +1 < -1 < +2 < -2 < ...
int letter_rank(std::int32_t v) {
  return (std::abs(v) - 1) * 2 + (v < 0 ? 1 : 0);
}

}  // namespace

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (std::int32_t letter : w) {
    if (!out.empty() && out.back() == -letter) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

Word concat_reduced(const Word& u, const Word& v) {
  Word out = u;
  for (std::int32_t letter : v) {
    if (!out.empty() && out.back() == -letter) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return out;
}

Word cyclic_reduce(Word w) {
  w = free_reduce(std::move(w));
  std::size_t i = 0, j = w.size();
  while (j - i >= 2 && w[i] == -w[j - 1]) {
    ++i;
    --j;
  }
  return Word(w.begin() + i, w.begin() + j);
}

bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return letter_rank(a[i]) < letter_rank(b[i]);
  }
  return false;
}

std::string word_to_string(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w[i]);
  }
  return s;
}

}  // namespace anglespec
