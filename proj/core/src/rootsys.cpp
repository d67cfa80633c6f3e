#include "psct/rootsys.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>

#include "psct/errors.hpp"

namespace psct {

namespace {

constexpr std::size_t kMaxPositiveRoots = 120;

IntVector neg(IntVector v) {
  for (auto& x : v) x = -x;
  return v;
}

IntVector sub(const IntVector& a, const IntVector& b) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVector add(const IntVector& a, const IntVector& b) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

long ip(const IntVector& a, const IntVector& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_positive(const IntVector& v) {
  for (long x : v) {
    if (x != 0) return x > 0;
  }
  return false;
}

IntVector unit_sum(int d, std::initializer_list<std::pair<int, long>> terms) {
  IntVector v(static_cast<std::size_t>(d), 0);
  for (auto [i, c] : terms) v[static_cast<std::size_t>(i)] += c;
  return v;
}

// +-2e_i +- 2e_j and (+-1, ..., +-1) with an even number of minus signs.
std::vector<IntVector> e8_roots() {
  std::vector<IntVector> r;
  for (int i = 0; i < 8; ++i) {
    for (int j = i + 1; j < 8; ++j) {
      for (long a : {2L, -2L}) {
        for (long b : {2L, -2L}) r.push_back(unit_sum(8, {{i, a}, {j, b}}));
      }
    }
  }
  for (int m = 0; m < 256; ++m) {
    if (__builtin_popcount(static_cast<unsigned>(m)) % 2) continue;
    IntVector v(8);
    for (int i = 0; i < 8; ++i) v[i] = (m >> i) & 1 ? -1 : 1;
    r.push_back(v);
  }
  return r;
}

std::vector<IntVector> all_roots(char type, int n) {
  std::vector<IntVector> r;
  auto pm_pairs = [&](int d, bool plus, bool minus) {
    for (int i = 0; i < d; ++i) {
      for (int j = i + 1; j < d; ++j) {
        for (long a : {1L, -1L}) {
          if (minus) r.push_back(unit_sum(d, {{i, a}, {j, -a}}));
          if (plus) r.push_back(unit_sum(d, {{i, a}, {j, a}}));
        }
      }
    }
  };
  switch (type) {
    case 'A':
      if (n < 1) break;
      pm_pairs(n + 1, false, true);
      return r;
    case 'B':
      if (n < 2) break;
      pm_pairs(n, true, true);
      for (int i = 0; i < n; ++i) {
        r.push_back(unit_sum(n, {{i, 1}}));
        r.push_back(unit_sum(n, {{i, -1}}));
      }
      return r;
    case 'C':
      if (n < 2) break;
      pm_pairs(n, true, true);
      for (int i = 0; i < n; ++i) {
        r.push_back(unit_sum(n, {{i, 2}}));
        r.push_back(unit_sum(n, {{i, -2}}));
      }
      return r;
    case 'D':
      if (n < 3) break;
      pm_pairs(n, true, true);
      return r;
    case 'G':
      if (n != 2) break;
      pm_pairs(3, false, true);
      for (int i = 0; i < 3; ++i) {
        IntVector v(3, -1);
        v[static_cast<std::size_t>(i)] = 2;
        r.push_back(v);
        r.push_back(neg(v));
      }
      return r;
    case 'F':
      if (n != 4) break;
      for (int i = 0; i < 4; ++i) {
        r.push_back(unit_sum(4, {{i, 2}}));
        r.push_back(unit_sum(4, {{i, -2}}));
      }
      for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
          for (long a : {2L, -2L}) {
            for (long b : {2L, -2L}) r.push_back(unit_sum(4, {{i, a}, {j, b}}));
          }
        }
      }
      for (int m = 0; m < 16; ++m) {
        IntVector v(4);
        for (int i = 0; i < 4; ++i) v[i] = (m >> i) & 1 ? -1 : 1;
        r.push_back(v);
      }
      return r;
    case 'E': {
      if (n < 6 || n > 8) break;
      const IntVector theta1(8, 1);
      const IntVector theta2 = unit_sum(8, {{6, 2}, {7, 2}});
      for (const auto& v : e8_roots()) {
        if (n <= 7 && ip(v, theta1) != 0) continue;
        if (n == 6 && ip(v, theta2) != 0) continue;
        r.push_back(v);
      }
      return r;
    }
    default:
      break;
  }
  throw DomainError(std::string("unsupported root system ") + type + std::to_string(n));
}

int ambient_of(char type, int n) {
  switch (type) {
    case 'A':
      return n + 1;
    case 'G':
      return 3;
    case 'F':
      return 4;
    case 'E':
      return 8;
    default:
      return n;
  }
}

}  // namespace

bool RootSystem::is_root(const IntVector& v) const {
  if (v.size() != static_cast<std::size_t>(ambient)) return false;
  const IntVector m = neg(v);
  for (const auto& p : positive) {
    if (p == v || p == m) return true;
  }
  return false;
}

std::string RootSystem::name() const {
  if (components.empty()) return "empty";
  std::string s;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) s += " x ";
    s += components[i].first + std::to_string(components[i].second);
  }
  return s;
}

RootSystem positive_roots(char type, int rank) {
  auto roots = all_roots(type, rank);
  std::vector<IntVector> pos;
  for (const auto& r : roots) {
    if (is_positive(r)) pos.push_back(r);
  }
  if (pos.size() > kMaxPositiveRoots) throw DomainError("root system exceeds the size bound");
  std::set<IntVector> pos_set(pos.begin(), pos.end());
  std::vector<IntVector> simple;
  for (const auto& b : pos) {
    bool decomposable = false;
    for (const auto& a : pos) {
      if (a != b && pos_set.count(sub(b, a))) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(b);
  }
  std::map<IntVector, int> height;
  std::function<int(const IntVector&)> h = [&](const IntVector& b) -> int {
    auto it = height.find(b);
    if (it != height.end()) return it->second;
    int value = 1;
    if (std::find(simple.begin(), simple.end(), b) == simple.end()) {
      value = 0;
      for (const auto& s : simple) {
        IntVector rest = sub(b, s);
        if (pos_set.count(rest)) {
          value = h(rest) + 1;
          break;
        }
      }
      if (value == 0) throw InconsistencyError("positive root is not a sum of simple roots");
    }
    height.emplace(b, value);
    return value;
  };
  std::sort(pos.begin(), pos.end(), [&](const IntVector& a, const IntVector& b) {
    const int ha = h(a), hb = h(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  RootSystem R;
  R.components = {{type, rank}};
  R.ambient = ambient_of(type, rank);
  R.positive = std::move(pos);
  R.component_of.assign(R.positive.size(), 0);
  return R;
}

RootSystem empty_root_system() { return RootSystem{}; }

RootSystem product(const RootSystem& a, const RootSystem& b) {
  RootSystem R;
  R.components = a.components;
  R.components.insert(R.components.end(), b.components.begin(), b.components.end());
  R.ambient = a.ambient + b.ambient;
  for (std::size_t i = 0; i < a.positive.size(); ++i) {
    IntVector v = a.positive[i];
    v.resize(static_cast<std::size_t>(R.ambient), 0);
    R.positive.push_back(std::move(v));
    R.component_of.push_back(a.component_of[i]);
  }
  const int shift = static_cast<int>(a.components.size());
  for (std::size_t i = 0; i < b.positive.size(); ++i) {
    IntVector v(static_cast<std::size_t>(a.ambient), 0);
    v.insert(v.end(), b.positive[i].begin(), b.positive[i].end());
    R.positive.push_back(std::move(v));
    R.component_of.push_back(b.component_of[i] + shift);
  }
  return R;
}

std::optional<std::vector<int>> is_balanced(const std::vector<IntVector>& roots) {
  const std::size_t n = roots.size();
  if (n == 0) return std::vector<int>{};
  const std::size_t d = roots[0].size();
  for (const auto& r : roots) {
    if (r.size() != d) throw DimensionError("roots of different lengths");
  }
  // The parity of each coordinate of the signed sum does not depend on the signs.
  for (std::size_t c = 0; c < d; ++c) {
    long total = 0;
    for (const auto& r : roots) total += r[c];
    if (total % 2 != 0) return std::nullopt;
  }
  // suffix[i][c] bounds what roots i.. can still cancel in coordinate c.
  std::vector<IntVector> suffix(n + 1, IntVector(d, 0));
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t c = 0; c < d; ++c) suffix[i][c] = suffix[i + 1][c] + std::labs(roots[i][c]);
  }
  IntVector partial(d, 0);
  std::vector<int> signs(n, 0);
  std::function<bool(std::size_t)> dfs = [&](std::size_t i) -> bool {
    if (i == n) return std::all_of(partial.begin(), partial.end(), [](long x) { return x == 0; });
    for (int s : {1, -1}) {
      if (i == 0 && s < 0) break;
      bool feasible = true;
      for (std::size_t c = 0; c < d; ++c) {
        partial[c] += s * roots[i][c];
        if (std::labs(partial[c]) > suffix[i + 1][c]) feasible = false;
      }
      signs[i] = s;
      if (feasible && dfs(i + 1)) return true;
      for (std::size_t c = 0; c < d; ++c) partial[c] -= s * roots[i][c];
    }
    return false;
  };
  if (dfs(0)) return signs;
  return std::nullopt;
}

bool is_strongly_orthogonal(const std::vector<std::size_t>& C, const RootSystem& R) {
  for (std::size_t a = 0; a < C.size(); ++a) {
    for (std::size_t b = a + 1; b < C.size(); ++b) {
      const IntVector& x = R.positive.at(C[a]);
      const IntVector& y = R.positive.at(C[b]);
      if (R.is_root(add(x, y)) || R.is_root(sub(x, y))) return false;
    }
  }
  return true;
}

namespace {

struct Partial {
  std::vector<std::size_t> complement;
  std::vector<std::size_t> S;
  std::vector<int> signs;
};

// All (complement, signs) pairs within one irreducible component.
std::vector<Partial> component_results(const RootSystem& R, const std::vector<std::size_t>& members) {
  const std::size_t m = members.size();
  std::vector<std::vector<bool>> compatible(m, std::vector<bool>(m, true));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      const bool ok = is_strongly_orthogonal({members[a], members[b]}, R);
      compatible[a][b] = compatible[b][a] = ok;
    }
  }
  std::vector<std::vector<std::size_t>> complements;
  std::vector<std::size_t> current;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    complements.push_back(current);
    for (std::size_t c = from; c < m; ++c) {
      bool ok = true;
      for (std::size_t x : current) ok = ok && compatible[x][c];
      if (!ok) continue;
      current.push_back(c);
      grow(c + 1);
      current.pop_back();
    }
  };
  grow(0);
  std::stable_sort(complements.begin(), complements.end(),
                   [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
  std::vector<Partial> out;
  for (const auto& comp : complements) {
    Partial p;
    std::vector<IntVector> roots;
    for (std::size_t i = 0; i < m; ++i) {
      if (std::find(comp.begin(), comp.end(), i) != comp.end()) {
        p.complement.push_back(members[i]);
      } else {
        p.S.push_back(members[i]);
        roots.push_back(R.positive[members[i]]);
      }
    }
    auto signs = is_balanced(roots);
    if (!signs) continue;
    p.signs = *signs;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<std::vector<std::size_t>> components(const RootSystem& R) {
  const std::size_t n = R.size();
  std::vector<int> label(n, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    std::vector<std::size_t> stack{s}, members;
    label[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (std::size_t w = 0; w < n; ++w) {
        if (label[w] < 0 && !is_strongly_orthogonal({v, w}, R)) {
          label[w] = label[s];
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace

std::vector<WellBalancedResult> well_balanced_search(const RootSystem& R, const WellBalancedOptions& options) {
  if (R.size() > options.cap_roots) {
    throw DomainError("root system has " + std::to_string(R.size()) + " positive roots, above the cap of " +
                      std::to_string(options.cap_roots));
  }
  std::vector<std::vector<Partial>> per_component;
  double combos = 1;
  for (const auto& members : components(R)) {
    per_component.push_back(component_results(R, members));
    combos *= static_cast<double>(per_component.back().size());
  }
  if (combos > 1e6) throw DomainError("too many well-balanced combinations; search factors separately");
  std::vector<WellBalancedResult> out;
  if (combos == 0) return out;
  std::vector<std::size_t> pos(per_component.size(), 0);
  while (true) {
    std::vector<std::pair<std::size_t, int>> signed_s;
    std::vector<std::size_t> complement;
    for (std::size_t f = 0; f < per_component.size(); ++f) {
      const Partial& p = per_component[f][pos[f]];
      complement.insert(complement.end(), p.complement.begin(), p.complement.end());
      for (std::size_t i = 0; i < p.S.size(); ++i) signed_s.emplace_back(p.S[i], p.signs[i]);
    }
    if (!(options.forbid_singleton_complement && complement.size() == 1)) {
      std::sort(complement.begin(), complement.end());
      std::sort(signed_s.begin(), signed_s.end());
      WellBalancedResult w;
      w.complement = std::move(complement);
      for (auto [i, s] : signed_s) {
        w.S.push_back(i);
        w.signs.push_back(s);
      }
      out.push_back(std::move(w));
    }
    std::size_t f = 0;
    while (f < pos.size() && ++pos[f] == per_component[f].size()) pos[f++] = 0;
    if (f == pos.size()) break;
  }
  std::stable_sort(out.begin(), out.end(), [](const WellBalancedResult& a, const WellBalancedResult& b) {
    return a.complement.size() != b.complement.size() ? a.complement.size() < b.complement.size()
                                                      : a.complement < b.complement;
  });
  if (out.size() > options.cap_results) out.resize(options.cap_results);
  return out;
}

bool verify_well_balanced(const RootSystem& R, const WellBalancedResult& w, bool forbid_singleton_complement) {
  if (w.S.size() != w.signs.size()) return false;
  std::vector<int> seen(R.size(), 0);
  for (std::size_t i : w.S) {
    if (i >= R.size()) return false;
    ++seen[i];
  }
  for (std::size_t i : w.complement) {
    if (i >= R.size()) return false;
    ++seen[i];
  }
  if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) return false;
  IntVector sum(static_cast<std::size_t>(R.ambient), 0);
  for (std::size_t a = 0; a < w.S.size(); ++a) {
    if (w.signs[a] != 1 && w.signs[a] != -1) return false;
    for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += w.signs[a] * R.positive[w.S[a]][c];
  }
  if (std::any_of(sum.begin(), sum.end(), [](long x) { return x != 0; })) return false;
  if (forbid_singleton_complement && w.complement.size() == 1) return false;
  return is_strongly_orthogonal(w.complement, R);
}

}  // namespace psct
