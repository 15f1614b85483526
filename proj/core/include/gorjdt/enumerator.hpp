#pragma once

#include <string>
#include <vector>

#include "gorjdt/combinatorics.hpp"
#include "gorjdt/jordan.hpp"

namespace gorjdt {

struct EnumSpec {
  int codim = 3;
  int s = 0;  // Sperner number (d in codimension two)
  int k = 0;

  static EnumSpec codim3(int s, int k) { return {3, s, k}; }
  static EnumSpec codim2(int d, int k) { return {2, d, k}; }

  void validate() const;
  int j() const;
  IntSeq hilbert() const;
  // first degree of the constant block
  int block_begin() const;
};

struct EnumRecord {
  RankMatrix matrix;
  DeltaSeq delta;
  IntSeq r;
  Jdt jdt;
};

std::vector<EnumRecord> enumerate(const EnumSpec& spec, int jobs = 1);
std::vector<EnumRecord> enumerate_codim2(int d, int k, int jobs = 1);

struct CensusRow {
  DeltaSeq delta;
  IntSeq r;
  int count = 0;
  // split by whether the second diagonal loses embedding dimension in degree 1
  int count_full = 0;
  int count_drop = 0;
  std::vector<std::string> jdts;
};

struct Census {
  EnumSpec spec;
  std::vector<CensusRow> rows;
  int total = 0;
  std::string to_text() const;
  std::string to_json() const;
};

// Rows ordered by |delta| ascending, then delta descending.
Census jdt_census(const EnumSpec& spec, int jobs = 1);
Census make_census(const EnumSpec& spec, const std::vector<EnumRecord>& records);
std::string records_to_json(const EnumSpec& spec, const std::vector<EnumRecord>& records);

}  // namespace gorjdt
