#pragma once
#include <cstdint>
#include <vector>

namespace opns {

long long factorial(int n);

// Permutations of {0..k-1} in lexicographic order of their value sequences.
std::vector<int> permUnrank(int k, long long rank);
long long permRank(const std::vector<int>& perm);
int permSign(const std::vector<int>& perm);
std::vector<int> permInverse(const std::vector<int>& perm);
// (a o b)(i) = a[b[i]]
std::vector<int> permCompose(const std::vector<int>& a, const std::vector<int>& b);

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k);

} // namespace opns
