#include "groupeq/free_word.hpp"

#include "groupeq/finite_group.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace groupeq {

namespace {

void push_reduced(std::vector<int>& out, int letter) {
  if (letter == 0) throw std::invalid_argument("FreeWord: zero letter");
  if (!out.empty() && out.back() == -letter)
    out.pop_back();
  else
    out.push_back(letter);
}

}  // namespace

FreeWord::FreeWord(std::vector<int> letters) {
  letters_.reserve(letters.size());
  for (int l : letters) push_reduced(letters_, l);
}

FreeWord FreeWord::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& l : out) l = -l;
  FreeWord w;
  w.letters_ = std::move(out);  // reversal of a reduced word is reduced
  return w;
}

int FreeWord::max_generator() const {
  int m = 0;
  for (int l : letters_) m = std::max(m, std::abs(l));
  return m;
}

FreeWord operator*(const FreeWord& u, const FreeWord& v) {
  FreeWord w;
  w.letters_ = u.letters_;
  for (int l : v.letters_) push_reduced(w.letters_, l);
  return w;
}

IntVec abelianize(const FreeWord& w, int rank) {
  IntVec v = IntVec::Zero(rank);
  for (int l : w.letters()) {
    int g = std::abs(l) - 1;
    if (g >= rank) throw std::invalid_argument("abelianize: letter exceeds rank");
    v[g] += l > 0 ? 1 : -1;
  }
  return v;
}

std::string word_to_string(const FreeWord& w, const std::vector<std::string>& gen_names) {
  std::ostringstream os;
  bool first = true;
  for (int l : w.letters()) {
    int g = std::abs(l) - 1;
    if (g >= static_cast<int>(gen_names.size()))
      throw std::invalid_argument("word_to_string: letter exceeds rank");
    os << (first ? "" : " ") << gen_names[g] << (l < 0 ? "^-1" : "");
    first = false;
  }
  return os.str();
}

FreeWord word_from_string(const std::string& text, const std::vector<std::string>& gen_names) {
  std::vector<int> letters;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    bool inv = false;
    if (tok.size() > 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) {
      inv = true;
      tok = tok.substr(0, tok.size() - 3);
    }
    int idx = -1;
    for (size_t g = 0; g < gen_names.size(); ++g)
      if (gen_names[g] == tok) idx = static_cast<int>(g);
    if (idx < 0) throw std::invalid_argument("word_from_string: unknown generator '" + tok + "'");
    letters.push_back(inv ? -(idx + 1) : idx + 1);
  }
  return FreeWord(std::move(letters));
}

FreeWord substitute(const FreeWord& w, const std::vector<FreeWord>& images) {
  FreeWord out;
  for (int l : w.letters()) {
    int g = std::abs(l) - 1;
    if (g >= static_cast<int>(images.size()))
      throw std::invalid_argument("substitute: letter exceeds image count");
    out = out * (l > 0 ? images[g] : images[g].inverse());
  }
  return out;
}

int finite_image(const FreeWord& w, const FiniteGroup& g, const std::vector<int>& targets) {
  int acc = g.identity();
  for (int l : w.letters()) {
    int gen = std::abs(l) - 1;
    if (gen >= static_cast<int>(targets.size()))
      throw std::invalid_argument("finite_image: letter exceeds target count");
    int t = targets[gen];
    acc = g.mul(acc, l > 0 ? t : g.inv(t));
  }
  return acc;
}

}  // namespace groupeq
