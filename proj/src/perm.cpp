#include "groupeq/perm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace groupeq {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
      throw std::invalid_argument("Perm: images are not a bijection");
    seen[v] = true;
  }
}

Perm Perm::identity(int degree) {
  std::vector<int> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = i;
  return Perm(std::move(im));
}

Perm Perm::from_one_based(const std::vector<int>& images) {
  std::vector<int> im(images.size());
  for (size_t i = 0; i < images.size(); ++i) im[i] = images[i] - 1;
  return Perm(std::move(im));
}

std::vector<int> Perm::one_based_images() const {
  std::vector<int> out(images_.size());
  for (size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
  return out;
}

Perm Perm::from_cycles(const std::string& text, int degree) {
  std::vector<int> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = i;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos < text.size() && text.compare(pos, 1, "e") == 0) ++pos;
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '(') throw std::invalid_argument("Perm: expected '(' in cycle string");
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw std::invalid_argument("Perm: expected point in cycle string");
      int v = std::stoi(text.substr(start, pos - start));
      if (v < 1 || v > degree) throw std::invalid_argument("Perm: point out of range");
      cycle.push_back(v - 1);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') ++pos;
    }
    for (size_t i = 0; i < cycle.size(); ++i)
      im[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return Perm(std::move(im));
}

Perm Perm::inverse() const {
  std::vector<int> im(images_.size());
  for (size_t i = 0; i < images_.size(); ++i) im[images_[i]] = static_cast<int>(i);
  return Perm(std::move(im));
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("Perm: degree mismatch");
  std::vector<int> im(p.degree());
  for (int i = 0; i < p.degree(); ++i) im[i] = p(q(i));
  return Perm(std::move(im));
}

std::string Perm::cycle_string() const {
  std::vector<bool> seen(images_.size(), false);
  std::ostringstream os;
  bool any = false;
  for (size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == static_cast<int>(start)) continue;
    os << "(";
    size_t i = start;
    bool first = true;
    while (!seen[i]) {
      seen[i] = true;
      os << (first ? "" : " ") << i + 1;
      first = false;
      i = static_cast<size_t>(images_[i]);
    }
    os << ")";
    any = true;
  }
  return any ? os.str() : "e";
}

}  // namespace groupeq
