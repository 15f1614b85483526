#include "gorjdt/enumerator.hpp"

#include <algorithm>
#include <future>
#include <iomanip>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "gorjdt/errors.hpp"

namespace gorjdt {

void EnumSpec::validate() const {
  if (codim == 3) {
    if (s < 3 || s > 6) throw InvalidSpec("codimension three needs 3 <= s <= 6");
    if (k < 3) throw InvalidSpec("codimension three needs k >= 3");
  } else if (codim == 2) {
    if (s < 2) throw InvalidSpec("codimension two needs d >= 2");
    if (k < 2) throw InvalidSpec("codimension two needs k >= 2");
  } else {
    throw InvalidSpec("codimension must be 2 or 3");
  }
}

int EnumSpec::j() const {
  if (codim == 2) return k + 2 * s - 3;
  return s == 3 ? k + 1 : k + 3;
}

int EnumSpec::block_begin() const {
  if (codim == 2) return s - 1;
  return s == 3 ? 1 : 2;
}

IntSeq EnumSpec::hilbert() const {
  IntSeq T(j() + 1);
  const int b0 = block_begin();
  for (int i = 0; i <= j(); ++i) {
    const int edge = std::min(i, j() - i);
    if (edge >= b0)
      T[i] = s;
    else if (codim == 2)
      T[i] = edge + 1;
    else
      T[i] = edge == 0 ? 1 : 3;
  }
  return T;
}

namespace {

std::vector<DeltaSeq> admissible_deltas(const EnumSpec& spec) {
  std::vector<DeltaSeq> out;
  const int len = spec.k - 1;
  DeltaSeq cur;
  auto rec = [&](auto&& self, int max_entry, int budget) -> void {
    if (static_cast<int>(cur.size()) == len) {
      if (check_delta_admissible(cur, spec.s, spec.k, spec.codim)) out.push_back(cur);
      return;
    }
    for (int x = 0; x <= std::min(max_entry, budget); ++x) {
      cur.push_back(x);
      self(self, x, budget - x);
      cur.pop_back();
    }
  };
  rec(rec, spec.s - 1, spec.s);
  std::sort(out.begin(), out.end());
  return out;
}

class Search {
 public:
  Search(const EnumSpec& spec, const DeltaSeq& delta)
      : spec_(spec), j_(spec.j()), b0_(spec.block_begin()), b1_(spec.block_begin() + spec.k - 1),
        delta_(delta), r_(r_of(delta, spec.s)), M_(j_ + 1) {
    const IntSeq T = spec.hilbert();
    for (int u = 0; u <= j_; ++u) M_.set(u, u, T[u]);
  }

  std::vector<RankMatrix> run() {
    diagonal(1);
    return std::move(found_);
  }

 private:
  bool in_block(int u, int v) const { return b0_ <= u && v <= b1_; }

  bool diag_ok(const IntSeq& d) const {
    return spec_.codim == 3 ? is_gorenstein_seq_codim_le3(d) : is_gorenstein_seq_codim_le2(d);
  }

  int upper(int u, int v) const { return std::min(M_.at(u, v - 1), M_.at(u + 1, v)); }
  int lower(int u, int v) const {
    if (v - u < 2) return 0;
    return std::max(0, M_.at(u, v - 1) + M_.at(u + 1, v) - M_.at(u + 1, v - 1));
  }

  void diagonal(int a) {
    if (a > j_) {
      found_.push_back(M_);
      return;
    }
    std::vector<int> free;
    for (int u = 0; 2 * u <= j_ - a; ++u) {
      const int v = u + a;
      if (in_block(u, v)) {
        const int x = r_[a];
        if (x < lower(u, v) || x > upper(u, v)) return;
        M_.set(u, v, x);
        M_.set(j_ - v, j_ - u, x);
        continue;
      }
      free.push_back(u);
    }
    fill(a, free, 0);
  }

  void fill(int a, const std::vector<int>& free, std::size_t idx) {
    if (idx == free.size()) {
      const IntSeq d = M_.diagonal(a);
      if (!diag_ok(d)) return;
      if (!is_o_sequence(shifted_difference(M_.diagonal(a - 1), d))) return;
      diagonal(a + 1);
      return;
    }
    const int u = free[idx], v = u + a;
    const int mu = j_ - v, mv = j_ - u;  // mirror position on the same diagonal
    const int lo = std::max(lower(u, v), lower(mu, mv));
    const int hi = std::min(upper(u, v), upper(mu, mv));
    for (int x = lo; x <= hi; ++x) {
      M_.set(u, v, x);
      M_.set(mu, mv, x);
      fill(a, free, idx + 1);
    }
  }

  const EnumSpec& spec_;
  int j_, b0_, b1_;
  DeltaSeq delta_;
  IntSeq r_;
  RankMatrix M_;
  std::vector<RankMatrix> found_;
};

std::vector<EnumRecord> run_branch(const EnumSpec& spec, const DeltaSeq& delta) {
  std::vector<RankMatrix> ms = Search(spec, delta).run();
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  std::vector<EnumRecord> out;
  for (auto& m : ms) {
    Jdt s = jdt_from_matrix(jdt_matrix(m));
    out.push_back({std::move(m), delta, r_of(delta, spec.s), std::move(s)});
  }
  return out;
}

}  // namespace

std::vector<EnumRecord> enumerate(const EnumSpec& spec, int jobs) {
  spec.validate();
  const auto deltas = admissible_deltas(spec);
  std::vector<std::vector<EnumRecord>> parts(deltas.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < deltas.size(); ++i) parts[i] = run_branch(spec, deltas[i]);
  } else {
    std::size_t next = 0;
    while (next < deltas.size()) {
      std::vector<std::pair<std::size_t, std::future<std::vector<EnumRecord>>>> running;
      for (int t = 0; t < jobs && next < deltas.size(); ++t, ++next)
        running.emplace_back(next, std::async(std::launch::async, run_branch, std::cref(spec),
                                              std::cref(deltas[next])));
      for (auto& [i, f] : running) parts[i] = f.get();
    }
  }
  std::vector<EnumRecord> out;
  for (auto& p : parts)
    for (auto& r : p) out.push_back(std::move(r));
  return out;
}

std::vector<EnumRecord> enumerate_codim2(int d, int k, int jobs) {
  return enumerate(EnumSpec::codim2(d, k), jobs);
}

// Delta read along the row of the first constant degree, s entries long. Past the block the
// row also feels the falling end of T, so those steps are clamped to stay non-increasing.
static DeltaSeq visible_delta(const EnumSpec& spec, const RankMatrix& m, IntSeq& r) {
  const int b0 = spec.block_begin(), b1 = b0 + spec.k - 1;
  r.assign(1, m.at(b0, b0));
  DeltaSeq delta;
  for (int i = 1; i <= spec.s; ++i) {
    int step = r.back() - m.at(b0, b0 + i);
    if (b0 + i > b1) step = std::min(step, delta.empty() ? step : delta.back());
    delta.push_back(step);
    r.push_back(r.back() - step);
  }
  return delta;
}

Census make_census(const EnumSpec& spec, const std::vector<EnumRecord>& records) {
  Census c{spec, {}, 0};
  std::map<DeltaSeq, CensusRow> rows;
  for (const auto& rec : records) {
    IntSeq r;
    const DeltaSeq delta = visible_delta(spec, rec.matrix, r);
    CensusRow& row = rows[delta];
    row.delta = delta;
    row.r = r;
    ++row.count;
    const int b0 = spec.block_begin();
    const int second = rec.matrix.at(1, 2);
    const bool drop = spec.codim == 3 && b0 == 2 && second < std::min(3, rec.matrix.at(b0, b0 + 1));
    ++(drop ? row.count_drop : row.count_full);
    row.jdts.push_back(to_notation(rec.jdt));
    ++c.total;
  }
  for (auto& [d, row] : rows) c.rows.push_back(std::move(row));
  std::sort(c.rows.begin(), c.rows.end(), [](const CensusRow& a, const CensusRow& b) {
    const int sa = std::accumulate(a.delta.begin(), a.delta.end(), 0);
    const int sb = std::accumulate(b.delta.begin(), b.delta.end(), 0);
    return sa != sb ? sa < sb : a.delta > b.delta;
  });
  return c;
}

Census jdt_census(const EnumSpec& spec, int jobs) { return make_census(spec, enumerate(spec, jobs)); }

static std::string seq(const IntSeq& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string Census::to_text() const {
  std::ostringstream out;
  out << "codim " << spec.codim << (spec.codim == 2 ? "  d=" : "  s=") << spec.s << "  k=" << spec.k
      << "  j=" << spec.j() << "  T=" << seq(spec.hilbert()) << "\n";
  std::size_t wd = 5, wr = 1;
  for (const auto& r : rows) {
    wd = std::max(wd, seq(r.delta).size());
    wr = std::max(wr, seq(r.r).size());
  }
  out << std::left << std::setw(4) << "#" << std::setw(wd + 2) << "Delta" << std::setw(wr + 2) << "r"
      << std::setw(7) << "count" << std::setw(7) << "split" << "JDT\n";
  int n = 0;
  for (const auto& r : rows) {
    ++n;
    const std::string split = std::to_string(r.count_full) + "+" + std::to_string(r.count_drop);
    for (std::size_t i = 0; i < r.jdts.size(); ++i) {
      if (i == 0)
        out << std::setw(4) << n << std::setw(wd + 2) << seq(r.delta) << std::setw(wr + 2) << seq(r.r)
            << std::setw(7) << r.count << std::setw(7) << split;
      else
        out << std::setw(4 + wd + 2 + wr + 2 + 14) << "";
      out << r.jdts[i] << "\n";
    }
  }
  out << "total " << total << "\n";
  return out.str();
}

std::string Census::to_json() const {
  nlohmann::json j;
  j["codim"] = spec.codim;
  j["s"] = spec.s;
  j["k"] = spec.k;
  j["j"] = spec.j();
  j["total"] = total;
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows)
    j["rows"].push_back({{"delta", r.delta},
                         {"r", r.r},
                         {"count", r.count},
                         {"count_full", r.count_full},
                         {"count_drop", r.count_drop},
                         {"jdt", r.jdts}});
  return j.dump(2);
}

std::string records_to_json(const EnumSpec& spec, const std::vector<EnumRecord>& records) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& rec : records) {
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& p : rec.jdt.parts()) parts.push_back({p.length, p.degree});
    j.push_back({{"delta", rec.delta},
                 {"r", rec.r},
                 {"j", spec.j()},
                 {"matrix", rec.matrix.flatten()},
                 {"jdt", to_notation(rec.jdt)},
                 {"parts", parts}});
  }
  return j.dump(2);
}

}  // namespace gorjdt
