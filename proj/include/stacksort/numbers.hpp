#pragma once

#include <string>
#include <vector>

#include "stacksort/bigint.hpp"

namespace stacksort::numbers {

// Tuple of positive integers. Partitions additionally have nonincreasing parts
// (possibly empty). Both are plain part lists.
using Composition = std::vector<int>;
using Partition = std::vector<int>;

// binomial(n,k) = 0 whenever k < 0, k > n, or n < 0.
BigInt binomial(long long n, long long k);
BigInt power_of_two(long long e);  // e >= 0

BigInt catalan(int n);
BigInt catalan_product(const Composition& q);

// N(i,j) = (1/i) C(i,j) C(i,j-1): permutations of [i] with j-1 descents.
BigInt narayana(int i, int j);

// V(i,j) = 2^(i-2j+1) C(i-1,2j-2) C_{j-1}: decreasing binary plane trees with
// i vertices and j leaves.
BigInt vee(int i, int j);

// N_k(n,r) = ((k+1)/n) C(n,r+k) C(n,r-1); N_0 is the Narayana triangle.
BigInt gen_narayana(int k, int n, int r);

// W_2(n) = 2/((n+1)(2n+1)) C(3n,n): 2-stack-sortable permutations of [n].
BigInt w2(int n);

// 2/(n(n+1)^2) sum_k C(n+1,k-1) C(n+1,k) C(n+1,k+1): Baxter permutations.
BigInt baxter(int n);

// Fine numbers from the generating function (1/x)(1-sqrt(1-4x))/(3-sqrt(1-4x)).
// This indexing gives F_0=1, F_1=0, F_2=1, F_3=2, F_4=6 (shifted from A000957).
BigInt fine(int n);

// The two Fine-number refinements: g_{n,m} (descents) and h_{n,m} (peaks).
BigInt g_refined(int n, int m);
BigInt h_refined(int n, int m);

// |Av_{n,k}(321)|, sequence A091156 read by rows.
BigInt av321_by_descents(int n, int k);

// Named closed forms from the theorems.
BigInt thm3_total(int n);                 // 2 C_n - 2 C_{n-1}, n >= 2
BigInt thm3_descents(int n, int m);
BigInt thm3_peaks(int n, int m);
BigInt thm9_total(int n);                 // sum_k (1/(n+1)) C(n-k-1,k) C(2n-2k,n)
BigInt thm10_fertility(int n, int k);     // ((2k+2)/(n+1)) C(2n-2k-1,n)
BigInt thm10_descents(int n, int k, int m);  // N_k(n-k, m-k+1)
BigInt thm16_total(int n);                // C(2n-2, n-1)
BigInt thm16_descents(int n, int m);      // C(n-1,m)^2
BigInt thm16_peaks(int n, int m);         // 2^(n-2m-1) C(n-1,2m) C(2m,m)

// String-keyed dispatcher for the CLI; params are the formula's integer
// arguments in the order listed above.
BigInt thm_formula(const std::string& id, const std::vector<int>& params);

// Comp_a(b): compositions of b into a positive parts, lexicographic order.
std::vector<Composition> comp_set(int a, int b);

// Prefix-sum dominance order on Comp_a(b). Also accepts tuples with
// nonnegative parts (a layered minimum tuple can end in a zero part).
bool comp_leq(const Composition& x, const Composition& y);

// psi: Comp_a(b) -> L(b-a, a-1), the poset isomorphism. psi(x) has exactly
// x_i - 1 parts of length a-i for 1 <= i <= a-1.
Partition psi(const Composition& x);
Composition psi_inverse(const Partition& lambda, int a, int b);

// Young order on partitions (diagram containment).
bool partition_leq(const Partition& lambda, const Partition& mu);

// D_x = |{y in Comp_a(b) : y <= x}|, computed as the number of partitions
// fitting inside the Young diagram of psi(x).
BigInt downset_count(const Composition& x);
BigInt downset_count_bruteforce(const Composition& x);  // definitional, tests only

// Conjecture 1: sum over Comp_{k+1}(n-k) of C_q D_q, and the conjectured
// closed form (1/(n+1)) C(n-k-1,k) C(2n-2k,n).
BigInt conj1_lhs(int n, int k);
BigInt conj1_rhs(int n, int k);

}  // namespace stacksort::numbers
