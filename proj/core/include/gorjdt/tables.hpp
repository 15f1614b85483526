#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gorjdt/apolarity.hpp"
#include "gorjdt/jordan.hpp"

namespace gorjdt {

// Generator templates: monomials with exponents affine in j (and i inside sums),
// sum_{i=a}^{b}(...), (L)^[e] divided powers, integer coefficients, products and parentheses.
Poly eval_template(std::string_view text, Side side, int j, Field field = Field::rationals());
// Comma-separated ring-side generators.
std::vector<Poly> eval_ideal_template(std::string_view text, int j, Field field = Field::rationals());

enum class EntryKind { Dual, Ideal };

struct TableEntry {
  std::string table;
  std::string id;
  std::string jdt;
  EntryKind kind = EntryKind::Dual;
  std::string generator;
  std::string ell;
  int min_k = 0;
  std::optional<int> max_k;
  std::vector<std::string> xref;
  std::string notes;
  // original printed forms when the stored value was corrected
  std::optional<std::string> printed_jdt;
  std::optional<std::string> printed_generator;
};

struct Table {
  std::string id;
  std::string title;
  int s = 0;
  int socle_offset = 0;  // j = k + socle_offset
  int j_min = 0, j_max = 0;
  std::vector<TableEntry> entries;

  IntSeq hilbert(int j) const;
  int k_of(int j) const { return j - socle_offset; }
  const TableEntry& entry(const std::string& id) const;
};

std::vector<std::string> table_ids();
const Table& table(const std::string& id);
// Parse a fixture document (used for the embedded data and for overrides).
Table parse_table(std::string_view json_text);

bool applies(const Table& t, const TableEntry& e, int j);

struct Instance {
  int j = 0;
  IntSeq hilbert;
  std::optional<Poly> dual;
  std::optional<GradedIdeal> ideal;
  LinearForm ell;
  Jdt expected;
};

Instance instantiate(const TableEntry& e, int j, Field field = Field::rationals());

struct EntryReport {
  std::string table;
  std::string id;
  int j = 0;
  bool pass = false;
  Jdt computed;
  Jdt expected;
  IntSeq hilbert;
  IntSeq socle;
  std::string error;
};

EntryReport verify_entry(const TableEntry& e, int j, Field field = Field::rationals());
// The actual JDT of the entry's generator at j, ignoring the printed expression.
Jdt computed_jdt(const TableEntry& e, int j, Field field = Field::rationals());

struct TableSummary {
  std::string table;
  std::vector<int> js;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  std::vector<EntryReport> reports;
  std::optional<EntryReport> first_failure;
};

TableSummary verify_table(const std::string& id, const std::vector<int>& js,
                          Field field = Field::rationals(), int jobs = 1);

struct SmallKResult {
  int s = 0, k = 0, j = 0;
  std::vector<std::string> entry_ids;  // entries consulted
  std::vector<Jdt> jdts;               // deduplicated, sorted
  std::vector<std::vector<std::string>> classes;  // entry ids per distinct JDT
};

SmallKResult small_k_identifications(int s, int k, Field field = Field::rationals());

}  // namespace gorjdt
