#include "groupeq/finite_group.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace groupeq {

void FiniteGroup::finish_from_table() {
  n_ = static_cast<int>(table_.size());
  // Identity must be element 0.
  for (int a = 0; a < n_; ++a)
    if (table_[0][a] != a || table_[a][0] != a)
      throw std::invalid_argument("FiniteGroup: element 0 is not an identity");
  inverse_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b)
      if (table_[a][b] == 0 && table_[b][a] == 0) {
        inverse_[a] = b;
        break;
      }
    if (inverse_[a] < 0) throw std::invalid_argument("FiniteGroup: missing inverse");
  }
  auto check = [&](int a, int b, int c) {
    if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
      throw std::invalid_argument("FiniteGroup: table is not associative");
  };
  if (n_ <= 64) {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c) check(a, b, c);
  } else {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> d(0, n_ - 1);
    for (int k = 0; k < 100000; ++k) check(d(rng), d(rng), d(rng));
  }
  if (names_.empty()) {
    names_.resize(n_);
    for (int a = 0; a < n_; ++a) names_[a] = a == 0 ? "e" : std::to_string(a);
  }
  if (static_cast<int>(names_.size()) != n_)
    throw std::invalid_argument("FiniteGroup: name count mismatch");
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                    std::vector<std::string> names) {
  FiniteGroup g;
  const int n = static_cast<int>(table.size());
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("FiniteGroup: table not square");
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("FiniteGroup: entry out of range");
  }
  g.table_ = std::move(table);
  g.names_ = std::move(names);
  g.finish_from_table();
  return g;
}

FiniteGroup FiniteGroup::closure(const std::map<std::string, Perm>& generators,
                                 int degree, size_t max_order) {
  for (const auto& [label, p] : generators)
    if (p.degree() != degree)
      throw std::invalid_argument("closure: generator degree mismatch");
  FiniteGroup g;
  g.degree_ = degree;
  g.perms_.push_back(Perm::identity(degree));
  g.names_.push_back("e");
  g.perm_index_[g.perms_[0]] = 0;
  // BFS in sorted generator order; names are product words.
  for (size_t head = 0; head < g.perms_.size(); ++head) {
    Perm base = g.perms_[head];
    for (const auto& [label, p] : generators) {
      Perm next = base * p;  // append the generator on the right
      if (g.perm_index_.count(next)) continue;
      if (g.perms_.size() >= max_order)
        throw std::runtime_error("closure: order cap exceeded");
      g.perm_index_[next] = static_cast<int>(g.perms_.size());
      g.perms_.push_back(next);
      g.names_.push_back(head == 0 ? label : g.names_[head] + "*" + label);
    }
  }
  const int n = static_cast<int>(g.perms_.size());
  g.table_.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto it = g.perm_index_.find(g.perms_[a] * g.perms_[b]);
      if (it == g.perm_index_.end())
        throw std::logic_error("closure: product escaped the closure");
      g.table_[a][b] = it->second;
    }
  for (const auto& [label, p] : generators) g.generators_[label] = g.perm_index_.at(p);
  g.finish_from_table();
  return g;
}

int FiniteGroup::pow(int a, long e) const {
  int r = 0;
  int base = e < 0 ? inv(a) : a;
  long k = e < 0 ? -e : e;
  for (long i = 0; i < k; ++i) r = mul(r, base);
  return r;
}

int FiniteGroup::index_of_name(const std::string& name) const {
  for (int a = 0; a < n_; ++a)
    if (names_[a] == name) return a;
  return -1;
}

int FiniteGroup::index_of_perm(const Perm& p) const {
  auto it = perm_index_.find(p);
  return it == perm_index_.end() ? -1 : it->second;
}

bool FiniteGroup::equal_tables(const FiniteGroup& other) const {
  return table_ == other.table_;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int n = a.order() * b.order();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  auto idx = [&](int x, int y) { return x * b.order() + y; };
  for (int x1 = 0; x1 < a.order(); ++x1)
    for (int y1 = 0; y1 < b.order(); ++y1) {
      names[idx(x1, y1)] = a.name_of(x1) + "|" + b.name_of(y1);
      for (int x2 = 0; x2 < a.order(); ++x2)
        for (int y2 = 0; y2 < b.order(); ++y2)
          table[idx(x1, y1)][idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
    }
  return FiniteGroup::from_table(std::move(table), std::move(names));
}

Subgroup subgroup_of(const FiniteGroup& g, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || elements[0] != g.identity())
    throw std::invalid_argument("subgroup_of: subset must contain the identity first");
  Subgroup sub;
  sub.to_parent = elements;
  for (size_t i = 0; i < elements.size(); ++i)
    sub.from_parent[elements[i]] = static_cast<int>(i);
  const int n = static_cast<int>(elements.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = g.name_of(elements[i]);
    for (int j = 0; j < n; ++j) {
      int prod = g.mul(elements[i], elements[j]);
      auto it = sub.from_parent.find(prod);
      if (it == sub.from_parent.end())
        throw std::invalid_argument("subgroup_of: subset is not closed");
      table[i][j] = it->second;
    }
  }
  sub.group = FiniteGroup::from_table(std::move(table), std::move(names));
  return sub;
}

}  // namespace groupeq
