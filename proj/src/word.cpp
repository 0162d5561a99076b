#include "ssg/word.hpp"

#include <sstream>
#include <stdexcept>

namespace ssg {

Word Word::parse(const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "e") continue;
    if (tok.empty() || tok[0] != 's')
      throw std::invalid_argument("Word::parse: bad token '" + tok + "'");
    bool inv = false;
    std::string body = tok.substr(1);
    if (auto pos = body.find("^-1"); pos != std::string::npos) {
      if (pos + 3 != body.size()) throw std::invalid_argument("Word::parse: bad token '" + tok + "'");
      inv = true;
      body = body.substr(0, pos);
    }
    if (body.empty()) throw std::invalid_argument("Word::parse: bad token '" + tok + "'");
    int idx = 0;
    for (char c : body) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("Word::parse: bad token '" + tok + "'");
      idx = idx * 10 + (c - '0');
    }
    if (idx < 1) throw std::invalid_argument("Word::parse: generator index must be >= 1");
    w.letters.push_back(inv ? -idx : idx);
  }
  return w;
}

Word Word::formal_inverse() const {
  Word w;
  w.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(-*it);
  return w;
}

std::string Word::str() const {
  if (letters.empty()) return "e";
  std::ostringstream out;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) out << ' ';
    int l = letters[i];
    out << 's' << (l > 0 ? l : -l);
    if (l < 0) out << "^-1";
  }
  return out.str();
}

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return w;
}

}  // namespace ssg
