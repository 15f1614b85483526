#pragma once

#include <vector>

namespace gorjdt {

using IntSeq = std::vector<int>;
using DeltaSeq = std::vector<int>;
using Partition = std::vector<int>;

long binomial(long n, long k);
long macaulay_growth(long h, int i);
bool is_o_sequence(const IntSeq& h);
bool is_codim2_o_sequence(const IntSeq& h);
// symmetric, first difference of the first half is an O-sequence, at most 3 variables
bool is_gorenstein_seq_codim_le3(const IntSeq& T);
// same shape test for sequences of embedding dimension at most 2
bool is_gorenstein_seq_codim_le2(const IntSeq& T);
bool is_symmetric(const IntSeq& h);
IntSeq symmetrize(const IntSeq& H, int j);
// h1 - (0, h2)
IntSeq shifted_difference(const IntSeq& h1, const IntSeq& h2);
DeltaSeq delta_of(const IntSeq& r);
IntSeq r_of(const DeltaSeq& delta, int s);
bool check_delta_admissible(const DeltaSeq& delta, int s, int k, int codim = 3);
Partition conjugate(const Partition& p);
// drops zeros and sorts decreasing
Partition as_partition(const IntSeq& v);

}  // namespace gorjdt
