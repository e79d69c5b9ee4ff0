#include "thetacov/characters.hpp"
#include "thetacov/errors.hpp"
#include "thetacov/sergeev.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace thetacov {

namespace {

// Dense integer keys for Sergeev elements at tiny degree: eps bit, xi word,
// then the permutation packed 3 bits per image. d <= 5 fits comfortably.
uint32_t pack(const SergeevElem& x, int d) {
  uint32_t k = x.eps;
  k |= static_cast<uint32_t>(x.xi) << 1;
  uint32_t gbits = 0;
  for (int i = 0; i < d; ++i) gbits |= static_cast<uint32_t>(x.g(i)) << (3 * i);
  return k | gbits << (1 + d);
}

struct GroupTable {
  int d;
  std::vector<SergeevElem> elems;
  std::unordered_map<uint32_t, size_t> index;
  std::vector<int> class_of;
  int classes = 0;

  explicit GroupTable(int dd) : d(dd) {
    for (const Perm& g : all_permutations(d)) {
      for (uint64_t xi = 0; xi < (uint64_t{1} << d); ++xi) {
        for (int e = 0; e < 2; ++e) {
          SergeevElem x{static_cast<uint8_t>(e), xi, g};
          index.emplace(pack(x, d), elems.size());
          elems.push_back(x);
        }
      }
    }
    // conjugacy classes: orbit closure under the self-inverse generators
    // (adjacent transpositions and the first Clifford generator)
    std::vector<SergeevElem> gens;
    for (int i = 0; i + 1 < d; ++i) {
      Perm s = Perm::identity(d);
      s.img[i] = i + 1;
      s.img[i + 1] = i;
      gens.push_back(SergeevElem::pure(s));
    }
    if (d >= 1) gens.push_back(SergeevElem{0, 1, Perm::identity(d)});

    class_of.assign(elems.size(), -1);
    for (size_t s = 0; s < elems.size(); ++s) {
      if (class_of[s] >= 0) continue;
      int id = classes++;
      std::vector<size_t> stack{s};
      class_of[s] = id;
      while (!stack.empty()) {
        size_t cur = stack.back();
        stack.pop_back();
        for (const auto& h : gens) {
          size_t nxt = index.at(pack(conj(h, elems[cur]), d));
          if (class_of[nxt] < 0) {
            class_of[nxt] = id;
            stack.push_back(nxt);
          }
        }
      }
    }
  }

  size_t idx(const SergeevElem& x) const { return index.at(pack(x, d)); }
};

// Characteristic polynomial of an integer matrix by the Faddeev-LeVerrier
// recurrence; returns monic coefficients c[0..n] with c[n] = 1.
std::vector<Rational> char_poly(const std::vector<std::vector<Rational>>& A) {
  size_t n = A.size();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n, Rational(0)));
  for (size_t k = 1; k <= n; ++k) {
    // M <- A M + c_{n-k+1} I ; c_{n-k} = -tr(A M)/k
    std::vector<std::vector<Rational>> AM(n, std::vector<Rational>(n, Rational(0)));
    if (k == 1) {
      AM = A;
    } else {
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
          Rational s(0);
          for (size_t l = 0; l < n; ++l) s += A[i][l] * M[l][j];
          AM[i][j] = s;
        }
    }
    Rational tr(0);
    for (size_t i = 0; i < n; ++i) tr += AM[i][i];
    c[n - k] = -tr / Rational(static_cast<long>(k));
    c[n - k].canonicalize();
    M = AM;
    for (size_t i = 0; i < n; ++i) M[i][i] += c[n - k];
  }
  return c;
}

// All roots of a monic integer polynomial that is known to split over the
// integers (eigenvalues of an integer matrix that the representation theory
// makes rational, hence integral).
std::vector<long> integer_roots(std::vector<Rational> c) {
  size_t deg = c.size() - 1;
  std::vector<long> roots;
  auto value_at = [&](long t) {
    Rational v(0);
    for (size_t i = c.size(); i-- > 0;) v = v * Rational(t) + c[i];
    return v;
  };
  while (deg > 0) {
    long root = 0;
    bool found = false;
    if (c[0] == 0) {
      found = true;
    } else {
      Integer a0 = c[0].get_num();
      Integer abs0 = a0 < 0 ? Integer(-a0) : a0;
      for (Integer t = 1; t * t <= abs0 && !found; ++t) {
        if (abs0 % t != 0) continue;
        Integer cands[2] = {t, Integer(abs0 / t)};
        for (const Integer& cand : cands) {
          for (int sgn : {1, -1}) {
            long v = cand.get_si() * sgn;
            if (value_at(v) == 0) {
              root = v;
              found = true;
              break;
            }
          }
          if (found) break;
        }
      }
    }
    if (!found) throw std::logic_error("eigenvalue is not an integer");
    roots.push_back(root);
    // synthetic division by (x - root)
    std::vector<Rational> q(deg);
    Rational carry(0);
    for (size_t i = deg; i-- > 0;) {
      carry = c[i + 1] + Rational(root) * carry;
      q[i] = carry;
    }
    c = std::move(q);
    --deg;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

} // namespace

std::vector<Rational> class_sum_eigenvalues(int d, const Partition& mu_reduced) {
  if (d < 1 || d > 5) throw ResourceLimit("class sum degree bound is 5");
  if (!all_parts_odd(mu_reduced))
    throw InvalidRamification("profile has an even part");
  Partition mu = strip_ones(mu_reduced);
  if (size_of(mu) > d)
    throw InvalidRamification("profile larger than the degree");
  Partition mu_hat = pad_with_ones(mu, d);

  GroupTable G(d);

  // Surviving class sums in the spin quotient: classes not fixed by
  // multiplication with the central eps. Each surviving pair contributes
  // one basis vector, recorded on eps-0 keys with signs.
  std::vector<int> partner(G.classes, -1);
  for (size_t i = 0; i < G.elems.size(); ++i) {
    SergeevElem x = G.elems[i];
    x.eps ^= 1;
    partner[G.class_of[i]] = G.class_of[G.idx(x)];
  }
  std::vector<std::map<size_t, int>> basis;  // eps-0 element index -> sign
  std::vector<char> used(G.classes, 0);
  for (int k = 0; k < G.classes; ++k) {
    if (used[k] || partner[k] == k) continue;
    used[k] = used[partner[k]] = 1;
    std::map<size_t, int> v;
    for (size_t i = 0; i < G.elems.size(); ++i) {
      if (G.class_of[i] != k) continue;
      const SergeevElem& x = G.elems[i];
      SergeevElem x0 = x;
      x0.eps = 0;
      v[G.idx(x0)] = x.eps == 0 ? 1 : -1;
    }
    basis.push_back(std::move(v));
  }

  // The operator: sum of distinguished lifts over the positive pure class
  // of mu_hat, acting by left multiplication.
  std::vector<SergeevElem> op;
  for (const Perm& g : permutations_of_type(d, mu_hat))
    for (uint64_t m : positive_sign_masks(g))
      op.push_back(canonical_lift(SignedPerm{g, m}));

  size_t n = basis.size();
  std::vector<std::vector<Rational>> mat(n, std::vector<Rational>(n, Rational(0)));
  for (size_t j = 0; j < n; ++j) {
    std::map<size_t, long> w;
    for (const auto& [i0, sgn] : basis[j]) {
      for (const auto& t : op) {
        SergeevElem y = t * G.elems[i0];
        SergeevElem y0 = y;
        y0.eps = 0;
        w[G.idx(y0)] += (y.eps == 0 ? sgn : -sgn);
      }
    }
    // cancellation on collapsed classes leaves exact zero entries behind
    for (auto it = w.begin(); it != w.end();)
      it = it->second == 0 ? w.erase(it) : std::next(it);
    // exact decomposition in the basis
    for (size_t i = 0; i < n; ++i) {
      auto anchor = basis[i].begin();
      auto hit = w.find(anchor->first);
      long coef = hit == w.end() ? 0 : hit->second * anchor->second;
      if (coef == 0) continue;
      mat[i][j] = Rational(coef);
      for (const auto& [key, sgn] : basis[i]) {
        w[key] -= coef * sgn;
        if (w[key] == 0) w.erase(key);
      }
    }
    if (!w.empty())
      throw std::logic_error("class sum image left the surviving span");
  }

  std::vector<Rational> out;
  for (long r : integer_roots(char_poly(mat))) out.push_back(Rational(r));
  return out;
}

} // namespace thetacov
