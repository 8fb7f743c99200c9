#include "ea/decomp.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace ea {

std::optional<ElementId> vector_sum(const EffectAlgebra& alg, const OrderStructure& order,
                                    const AtomVector& v) {
  ElementId acc = kZero;
  for (size_t t = 0; t < order.atoms.size(); ++t) {
    for (int i = 0; i < v[t]; ++i) {
      ElementId next = alg.sum(acc, order.atoms[t]);
      if (next == kNoSum) return std::nullopt;
      acc = next;
    }
  }
  return acc;
}

namespace {

// Suffix completions from (accumulated element, next atom index), memoized.
// A prefix whose accumulated sum goes undefined never reappears here: the
// caller abandons it before recursing.
struct SeqSearch {
  const EffectAlgebra& alg;
  const OrderStructure& order;
  int m;
  std::unordered_map<int, std::vector<AtomVector>> memo;

  const std::vector<AtomVector>& suffixes(ElementId acc, int t) {
    int key = acc * (m + 1) + t;
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    std::vector<AtomVector> result;
    if (t == m) {
      if (acc == alg.unit()) result.push_back({});
    } else {
      ElementId a = order.atoms[t];
      ElementId cur = acc;
      for (int k = 0; k <= order.ord_of[a]; ++k) {
        if (k > 0) {
          ElementId next = alg.sum(cur, a);
          if (next == kNoSum) break;  // adding more copies stays undefined
          cur = next;
        }
        for (const AtomVector& tail : suffixes(cur, t + 1)) {
          AtomVector row;
          row.reserve(m - t);
          row.push_back(k);
          row.insert(row.end(), tail.begin(), tail.end());
          result.push_back(std::move(row));
        }
      }
    }
    return memo.emplace(key, std::move(result)).first->second;
  }
};

}  // namespace

SeqSet enumerate_seq(const EffectAlgebra& alg, const OrderStructure& order) {
  SeqSearch search{alg, order, static_cast<int>(order.atoms.size()), {}};
  SeqSet seq;
  seq.rows = search.suffixes(kZero, 0);
  std::sort(seq.rows.begin(), seq.rows.end());
  if (seq.rows.empty()) {
    throw std::logic_error("Seq(E) is empty; the algebra is not a valid atomic effect algebra");
  }
  return seq;
}

namespace {

bool decompose_dfs(const EffectAlgebra& alg, const OrderStructure& order, ElementId target,
                   int t, ElementId acc, AtomVector& v) {
  const int m = static_cast<int>(order.atoms.size());
  if (acc == target && t == m) return true;
  if (t == m) return false;
  if (!order.le(acc, target)) return false;  // acc + rest = target forces acc <= target
  ElementId a = order.atoms[t];
  ElementId cur = acc;
  for (int k = 0; k <= order.ord_of[a]; ++k) {
    if (k > 0) {
      ElementId next = alg.sum(cur, a);
      if (next == kNoSum) break;
      cur = next;
    }
    v.push_back(k);
    if (decompose_dfs(alg, order, target, t + 1, cur, v)) return true;
    v.pop_back();
  }
  return false;
}

}  // namespace

AtomVector decompose(const EffectAlgebra& alg, const OrderStructure& order, ElementId x) {
  AtomVector v;
  v.reserve(order.atoms.size());
  if (!decompose_dfs(alg, order, x, 0, kZero, v)) {
    throw std::logic_error("no atom decomposition for " + alg.name(x) +
                           "; the algebra is not a valid finite effect algebra");
  }
  return v;
}

}  // namespace ea
