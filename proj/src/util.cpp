#include "opns/util.hpp"

#include <algorithm>
#include <cassert>

namespace opns {

long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

std::vector<int> permUnrank(int k, long long rank) {
  std::vector<int> pool(k);
  for (int i = 0; i < k; ++i) pool[i] = i;
  std::vector<int> perm;
  perm.reserve(k);
  long long f = factorial(k);
  for (int i = k; i >= 1; --i) {
    f /= i;
    int idx = static_cast<int>(rank / f);
    rank %= f;
    perm.push_back(pool[idx]);
    pool.erase(pool.begin() + idx);
  }
  return perm;
}

long long permRank(const std::vector<int>& perm) {
  int k = static_cast<int>(perm.size());
  std::vector<int> pool;
  pool.reserve(k);
  for (int i = 0; i < k; ++i) pool.push_back(i);
  long long rank = 0;
  for (int i = 0; i < k; ++i) {
    auto it = std::find(pool.begin(), pool.end(), perm[i]);
    assert(it != pool.end());
    rank = rank * (k - i) + (it - pool.begin());
    pool.erase(it);
  }
  // mixed-radix accumulated above equals the lexicographic rank
  return rank;
}

int permSign(const std::vector<int>& perm) {
  int k = static_cast<int>(perm.size());
  int inv = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

std::vector<int> permInverse(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (int i = 0; i < static_cast<int>(perm.size()); ++i) inv[perm[i]] = i;
  return inv;
}

std::vector<int> permCompose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(b.size());
  for (int i = 0; i < static_cast<int>(b.size()); ++i) c[i] = a[b[i]];
  return c;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

} // namespace opns
