#include "gorjdt/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gorjdt {

long binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long macaulay_growth(long h, int i) {
  if (h < 0 || i < 1) throw std::invalid_argument("macaulay_growth needs h >= 0, i >= 1");
  long out = 0;
  for (int k = i; k >= 1 && h > 0; --k) {
    long a = k;
    while (binomial(a + 1, k) <= h) ++a;
    h -= binomial(a, k);
    out += binomial(a + 1, k + 1);
  }
  return out;
}

bool is_o_sequence(const IntSeq& h) {
  if (h.empty()) return true;
  for (int x : h)
    if (x < 0) return false;
  if (h[0] == 0) return std::all_of(h.begin(), h.end(), [](int x) { return x == 0; });
  if (h[0] != 1) return false;
  for (std::size_t i = 1; i + 1 < h.size(); ++i)
    if (h[i + 1] > macaulay_growth(h[i], static_cast<int>(i))) return false;
  return true;
}

bool is_codim2_o_sequence(const IntSeq& h) {
  if (!is_o_sequence(h)) return false;
  if (h.size() > 1 && h[1] > 2) return false;
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h[i] > static_cast<int>(i) + 1) return false;
  return true;
}

bool is_symmetric(const IntSeq& h) {
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h[i] != h[h.size() - 1 - i]) return false;
  return true;
}

static IntSeq first_half_difference(const IntSeq& T) {
  const std::size_t j = T.size() - 1;
  IntSeq d;
  for (std::size_t i = 0; i <= j / 2; ++i) d.push_back(T[i] - (i ? T[i - 1] : 0));
  return d;
}

static bool gorenstein_shape(const IntSeq& T, int max_embedding) {
  if (T.empty()) return true;
  if (std::all_of(T.begin(), T.end(), [](int x) { return x == 0; })) return true;
  if (T[0] != 1 || !is_symmetric(T)) return false;
  if (T.size() > 1 && T[1] > max_embedding) return false;
  const IntSeq d = first_half_difference(T);
  if (max_embedding <= 2) return is_o_sequence(d) && (d.size() < 2 || d[1] <= max_embedding - 1);
  return is_o_sequence(d);
}

bool is_gorenstein_seq_codim_le3(const IntSeq& T) { return gorenstein_shape(T, 3); }
bool is_gorenstein_seq_codim_le2(const IntSeq& T) { return gorenstein_shape(T, 2); }

IntSeq symmetrize(const IntSeq& H, int j) {
  if (static_cast<int>(H.size()) <= j / 2) throw std::invalid_argument("H too short to symmetrize");
  IntSeq out(j + 1);
  for (int i = 0; i <= j; ++i) out[i] = 2 * i <= j ? H[i] : H[j - i];
  return out;
}

IntSeq shifted_difference(const IntSeq& h1, const IntSeq& h2) {
  const std::size_t n = std::max(h1.size(), h2.size() + 1);
  IntSeq out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const int a = i < h1.size() ? h1[i] : 0;
    const int b = (i >= 1 && i - 1 < h2.size()) ? h2[i - 1] : 0;
    out[i] = a - b;
  }
  return out;
}

DeltaSeq delta_of(const IntSeq& r) {
  if (r.empty()) throw std::invalid_argument("empty r-vector");
  DeltaSeq d;
  for (std::size_t i = 1; i < r.size(); ++i) d.push_back(r[i - 1] - r[i]);
  return d;
}

IntSeq r_of(const DeltaSeq& delta, int s) {
  IntSeq r{s};
  for (int x : delta) r.push_back(r.back() - x);
  return r;
}

bool check_delta_admissible(const DeltaSeq& delta, int s, int k, int codim) {
  int sum = 0;
  for (std::size_t i = 0; i < delta.size(); ++i) {
    const int x = delta[i];
    if (x < 0 || x > s - 1) return false;
    if (i > 0 && x > delta[i - 1]) return false;
    if (i + 1 >= static_cast<std::size_t>(s) + 1 && x != 0) return false;
    sum += x;
  }
  if (sum > s) return false;
  if (codim == 3) {
    if (k >= 3 && !delta.empty() && delta[0] > 3) return false;
    if (s == 6 && delta.size() >= 2 && delta[0] == 3 && delta[1] == 3) return false;
  }
  return true;
}

Partition conjugate(const Partition& p) {
  Partition q = as_partition(p);
  Partition out;
  if (q.empty()) return out;
  for (int i = 1; i <= q.front(); ++i)
    out.push_back(static_cast<int>(std::count_if(q.begin(), q.end(), [i](int x) { return x >= i; })));
  return out;
}

Partition as_partition(const IntSeq& v) {
  Partition p;
  for (int x : v)
    if (x > 0) p.push_back(x);
  std::sort(p.rbegin(), p.rend());
  return p;
}

}  // namespace gorjdt
