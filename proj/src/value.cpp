#include "groupeq/value.hpp"

namespace groupeq {

int value_cmp(const GroupValue& a, const GroupValue& b) {
  if (a.v.index() != b.v.index()) return a.v.index() < b.v.index() ? -1 : 1;
  switch (a.v.index()) {
    case 0: {
      int x = std::get<FiniteElt>(a.v).index, y = std::get<FiniteElt>(b.v).index;
      return x == y ? 0 : (x < y ? -1 : 1);
    }
    case 1:
      return vec_cmp(std::get<IntVec>(a.v), std::get<IntVec>(b.v));
    case 2: {
      const auto& x = std::get<FreeWord>(a.v), &y = std::get<FreeWord>(b.v);
      if (x == y) return 0;
      return x < y ? -1 : 1;
    }
    case 3: {
      const auto& x = std::get<ValueTuple>(a.v), &y = std::get<ValueTuple>(b.v);
      if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
      for (size_t i = 0; i < x.size(); ++i)
        if (int c = value_cmp(x[i], y[i])) return c;
      return 0;
    }
    default: {
      const auto& x = std::get<ExtElt>(a.v), &y = std::get<ExtElt>(b.v);
      if (x.top != y.top) return x.top < y.top ? -1 : 1;
      return value_cmp(*x.base, *y.base);
    }
  }
}

bool value_eq(const GroupValue& a, const GroupValue& b) { return value_cmp(a, b) == 0; }

}  // namespace groupeq
