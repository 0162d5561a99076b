#ifndef SSG_WORD_HPP
#define SSG_WORD_HPP

#include <string>
#include <vector>

namespace ssg {

/// Word over a generating set S and its inverses. Entry +i stands for s_i,
/// -i for s_i^-1 (i is 1-based). The empty word is the identity.
struct Word {
  std::vector<int> letters;

  Word() = default;
  explicit Word(std::vector<int> ls) : letters(std::move(ls)) {}

  static Word parse(const std::string& text);  // e.g. "s2 s1^-1"; "" or "e" is empty

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }

  // Reversal with all signs flipped: (t1 t2 ... tk)^-1 = tk^-1 ... t1^-1.
  Word formal_inverse() const;

  std::string str() const;  // "s2 s1^-1"; empty word prints "e"

  friend bool operator==(const Word&, const Word&) = default;
};

Word concat(const Word& a, const Word& b);

}  // namespace ssg

#endif
