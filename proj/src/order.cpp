#include "ea/order.hpp"

#include <stdexcept>

namespace ea {

OrderStructure derive_order(const EffectAlgebra& alg) {
  const int n = alg.size();
  OrderStructure os;
  os.n = n;
  os.leq.assign(static_cast<size_t>(n) * n, 0);

  // p <= q iff some r has p + r = q.
  for (ElementId p = 0; p < n; ++p) {
    for (ElementId r = 0; r < n; ++r) {
      ElementId q = alg.sum(p, r);
      if (q != kNoSum) os.leq[static_cast<size_t>(p) * n + q] = 1;
    }
  }

  os.orthosupplement.assign(n, kNoSum);
  for (ElementId p = 0; p < n; ++p) {
    for (ElementId q = 0; q < n; ++q) {
      if (alg.sum(p, q) == alg.unit()) {
        if (os.orthosupplement[p] != kNoSum) {
          throw std::logic_error("orthosupplement not unique for " + alg.name(p));
        }
        os.orthosupplement[p] = q;
      }
    }
    if (os.orthosupplement[p] == kNoSum) {
      throw std::logic_error("orthosupplement missing for " + alg.name(p));
    }
  }

  // Atoms: minimal elements of E \ {0}, ascending id.
  for (ElementId a = 1; a < n; ++a) {
    bool minimal = true;
    for (ElementId x = 1; x < n && minimal; ++x) {
      if (x != a && os.le(x, a)) minimal = false;
    }
    if (minimal) os.atoms.push_back(a);
  }

  os.ord_of.assign(n, 0);
  for (ElementId x = 1; x < n; ++x) {
    int k = 1;
    ElementId acc = x;
    while (alg.sum(acc, x) != kNoSum) {
      acc = alg.sum(acc, x);
      if (++k > n) {
        // k*x strictly increases in a valid algebra, so > n repeats a value.
        throw std::logic_error("ord(" + alg.name(x) + ") does not terminate; table is invalid");
      }
    }
    os.ord_of[x] = k;
  }

  os.atomic = true;
  for (ElementId x = 1; x < n; ++x) {
    bool dominated = false;
    for (ElementId a : os.atoms) {
      if (os.le(a, x)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      os.atomic = false;
      os.non_atomic.push_back(x);
    }
  }

  return os;
}

}  // namespace ea
