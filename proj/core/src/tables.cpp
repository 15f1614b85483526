#include "gorjdt/tables.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include <json.hpp>

#include "gorjdt/combinatorics.hpp"
#include "gorjdt/errors.hpp"

namespace gorjdt {

namespace detail {
const std::map<std::string, std::string>& embedded_fixtures();
}

IntSeq Table::hilbert(int j) const {
  IntSeq T(j + 1);
  for (int i = 0; i <= j; ++i) {
    const int edge = std::min(i, j - i);
    if (s == 3)
      T[i] = edge == 0 ? 1 : 3;
    else
      T[i] = edge == 0 ? 1 : edge == 1 ? 3 : s;
  }
  return T;
}

const TableEntry& Table::entry(const std::string& eid) const {
  for (const auto& e : entries)
    if (e.id == eid) return e;
  throw OutOfRange("table " + id + " has no entry " + eid);
}

Table parse_table(std::string_view json_text) {
  const auto doc = nlohmann::json::parse(json_text);
  Table t;
  t.id = doc.at("table").get<std::string>();
  t.title = doc.value("title", "");
  t.s = doc.at("s").get<int>();
  t.socle_offset = doc.at("socle_offset").get<int>();
  t.j_min = doc.at("j_range").at(0).get<int>();
  t.j_max = doc.at("j_range").at(1).get<int>();
  for (const auto& r : doc.at("entries")) {
    TableEntry e;
    e.table = t.id;
    e.id = r.at("id").get<std::string>();
    e.jdt = r.at("jdt").get<std::string>();
    e.kind = r.value("kind", "dual") == "ideal" ? EntryKind::Ideal : EntryKind::Dual;
    e.generator = r.at("generator").get<std::string>();
    e.ell = r.value("ell", "x");
    e.min_k = r.value("min_k", doc.value("min_k", 0));
    if (r.contains("max_k"))
      e.max_k = r.at("max_k").get<int>();
    else if (doc.contains("max_k"))
      e.max_k = doc.at("max_k").get<int>();
    if (r.contains("xref")) e.xref = r.at("xref").get<std::vector<std::string>>();
    e.notes = r.value("notes", "");
    if (r.contains("printed_jdt")) e.printed_jdt = r.at("printed_jdt").get<std::string>();
    if (r.contains("printed_generator")) e.printed_generator = r.at("printed_generator").get<std::string>();
    t.entries.push_back(std::move(e));
  }
  return t;
}

namespace {

std::map<std::string, Table> load_tables() {
  std::map<std::string, std::string> sources = detail::embedded_fixtures();
  if (const char* dir = std::getenv("GORJDT_TABLE_DIR")) {
    for (const auto& f : std::filesystem::directory_iterator(dir)) {
      if (f.path().extension() != ".json") continue;
      std::ifstream in(f.path());
      std::stringstream ss;
      ss << in.rdbuf();
      sources[f.path().stem().string()] = ss.str();
    }
  }
  std::map<std::string, Table> out;
  for (const auto& [name, text] : sources) {
    Table t = parse_table(text);
    out.emplace(t.id, std::move(t));
  }
  return out;
}

const std::map<std::string, Table>& all_tables() {
  static const std::map<std::string, Table> tables = load_tables();
  return tables;
}

}  // namespace

std::vector<std::string> table_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, t] : all_tables()) ids.push_back(id);
  std::sort(ids.begin(), ids.end(), [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return ids;
}

const Table& table(const std::string& id) {
  const auto& all = all_tables();
  // the two small-k tables of s=5 are also known by their shape
  auto it = all.find(id == "T-s5k1" ? "T9" : id == "T-s5k2" ? "T10" : id);
  if (it == all.end()) throw UnknownTable("unknown table " + id);
  return it->second;
}

bool applies(const Table& t, const TableEntry& e, int j) {
  const int k = t.k_of(j);
  if (k < e.min_k) return false;
  if (e.max_k && k > *e.max_k) return false;
  return true;
}

Instance instantiate(const TableEntry& e, int j, Field field) {
  const Table& t = table(e.table);
  if (!applies(t, e, j)) throw OutOfRange("entry " + e.table + "#" + e.id + " does not apply at j=" + std::to_string(j));
  Instance in{j, t.hilbert(j), std::nullopt, std::nullopt, parse_linear_form(e.ell, field), parse_jdt(e.jdt, j)};
  if (e.kind == EntryKind::Dual) {
    Poly F = eval_template(e.generator, Side::Dual, j, field);
    if (F.is_zero()) throw ZeroPolynomial("generator vanishes at j=" + std::to_string(j));
    if (F.degree() != j)
      throw NonHomogeneous("generator has degree " + std::to_string(F.degree()) + ", expected " + std::to_string(j));
    in.dual = std::move(F);
  } else {
    in.ideal = GradedIdeal(field, eval_ideal_template(e.generator, j, field), j + 1);
  }
  return in;
}

static Jdt compute_instance(const Instance& in, EntryReport* report) {
  if (in.dual) {
    if (report) report->hilbert = hilbert_function(*in.dual);
    return jdt(*in.dual, in.ell);
  }
  if (report) {
    report->hilbert = quotient_hilbert(*in.ideal, in.j);
    report->socle = socle_dimension(*in.ideal, in.j);
  }
  return jdt_from_matrix(jdt_matrix(rank_matrix_from_ideal(*in.ideal, in.ell, in.j)));
}

Jdt computed_jdt(const TableEntry& e, int j, Field field) {
  const Table& t = table(e.table);
  const Field f = field;
  Instance in{j, t.hilbert(j), std::nullopt, std::nullopt, parse_linear_form(e.ell, f), Jdt()};
  if (e.kind == EntryKind::Dual)
    in.dual = eval_template(e.generator, Side::Dual, j, f);
  else
    in.ideal = GradedIdeal(f, eval_ideal_template(e.generator, j, f), j + 1);
  return compute_instance(in, nullptr);
}

EntryReport verify_entry(const TableEntry& e, int j, Field field) {
  EntryReport r;
  r.table = e.table;
  r.id = e.id;
  r.j = j;
  try {
    const Instance in = instantiate(e, j, field);
    r.expected = in.expected;
    r.computed = compute_instance(in, &r);
    std::vector<std::string> problems;
    if (r.hilbert != in.hilbert) problems.push_back("Hilbert function differs from T");
    if (in.ideal) {
      IntSeq socle(j + 1, 0);
      socle[j] = 1;
      if (r.socle != socle) problems.push_back("socle is not one-dimensional in degree j");
    }
    if (r.computed != r.expected) problems.push_back("computed JDT differs from the expected one");
    r.pass = problems.empty();
    for (const auto& p : problems) r.error += (r.error.empty() ? "" : "; ") + p;
  } catch (const std::exception& ex) {
    r.pass = false;
    r.error = ex.what();
  }
  return r;
}

TableSummary verify_table(const std::string& id, const std::vector<int>& js, Field field, int jobs) {
  const Table& t = table(id);
  TableSummary sum;
  sum.table = id;
  sum.js = js;
  std::vector<std::pair<const TableEntry*, int>> work;
  for (int j : js)
    for (const auto& e : t.entries) {
      if (applies(t, e, j))
        work.emplace_back(&e, j);
      else
        ++sum.skipped;
    }
  std::vector<EntryReport> reports(work.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < work.size(); ++i) reports[i] = verify_entry(*work[i].first, work[i].second, field);
  } else {
    std::size_t next = 0;
    std::mutex m;
    auto worker = [&] {
      for (;;) {
        std::size_t i;
        {
          std::lock_guard<std::mutex> lock(m);
          if (next >= work.size()) return;
          i = next++;
        }
        reports[i] = verify_entry(*work[i].first, work[i].second, field);
      }
    };
    std::vector<std::future<void>> threads;
    for (int t2 = 0; t2 < jobs; ++t2) threads.push_back(std::async(std::launch::async, worker));
    for (auto& th : threads) th.get();
  }
  for (auto& r : reports) {
    if (r.pass) {
      ++sum.passed;
    } else {
      ++sum.failed;
      if (!sum.first_failure) sum.first_failure = r;
    }
  }
  sum.reports = std::move(reports);
  return sum;
}

namespace {

std::vector<std::string> small_k_tables(int s, int k) {
  if (s == 3 && (k == 1 || k == 2)) return {"T7"};
  if (s == 4 && (k == 1 || k == 2)) return {"T8"};
  if (s == 5 && k == 3) return {"T11", "T12"};
  if (s == 5 && k == 2) return {"T10"};
  if (s == 5 && k == 1) return {"T9"};
  throw UnsupportedPair("no small-k data for s=" + std::to_string(s) + ", k=" + std::to_string(k));
}

// The generator's own JDT when it still has Hilbert function T at this j, else the printed expression.
Jdt small_k_jdt(const Table& t, const TableEntry& e, int j, Field field) {
  try {
    const LinearForm ell = parse_linear_form(e.ell, field);
    if (e.kind == EntryKind::Dual) {
      const Poly F = eval_template(e.generator, Side::Dual, j, field);
      if (!F.is_zero() && F.degree() == j && hilbert_function(F) == t.hilbert(j)) return jdt(F, ell);
    } else {
      const GradedIdeal I(field, eval_ideal_template(e.generator, j, field), j + 1);
      if (quotient_hilbert(I, j) == t.hilbert(j))
        return jdt_from_matrix(jdt_matrix(rank_matrix_from_ideal(I, ell, j)));
    }
  } catch (const OutOfRange&) {
  }
  return parse_jdt(e.jdt, j);
}

}  // namespace

SmallKResult small_k_identifications(int s, int k, Field field) {
  SmallKResult out;
  out.s = s;
  out.k = k;
  std::map<Jdt, std::vector<std::string>> classes;
  for (const auto& tid : small_k_tables(s, k)) {
    const Table& t = table(tid);
    out.j = k + t.socle_offset;
    for (const auto& e : t.entries) {
      // entries pinned to a range of k apply only there; open-ended families extend downwards
      if (e.max_k && (k > *e.max_k || k < e.min_k)) continue;
      out.entry_ids.push_back(e.id);
      classes[small_k_jdt(t, e, out.j, field)].push_back(e.id);
    }
  }
  for (auto& [jd, ids] : classes) {
    out.jdts.push_back(jd);
    out.classes.push_back(ids);
  }
  return out;
}

}  // namespace gorjdt
