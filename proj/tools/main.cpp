#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gorjdt/combinatorics.hpp"
#include "gorjdt/enumerator.hpp"
#include "gorjdt/errors.hpp"
#include "gorjdt/jordan.hpp"
#include "gorjdt/tables.hpp"

using namespace gorjdt;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kFailed = 1, kUsage = 2;

struct Config {
  unsigned long characteristic = 0;
  std::string format = "text";
  int jobs = 1;

  Field field() const { return characteristic ? Field::prime(characteristic) : Field::rationals(); }
  bool as_json() const { return format == "json"; }
};

std::string seq(const IntSeq& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

json rows_of(const TriMatrix& m) {
  json out = json::array();
  for (int u = 0; u < m.size(); ++u) {
    json row = json::array();
    for (int v = 0; v < m.size(); ++v) row.push_back(m.at(u, v));
    out.push_back(row);
  }
  return out;
}

json parts_of(const Jdt& s) {
  json out = json::array();
  for (const auto& p : s.parts()) out.push_back({p.length, p.degree});
  return out;
}

// (1,3,s^k,3,1) or (1,3^k,1): returns s and the first degree of the constant block
std::optional<std::pair<int, int>> almost_constant(const IntSeq& T) {
  const int j = static_cast<int>(T.size()) - 1;
  if (j < 2 || T[0] != 1 || T[1] != 3 || !is_symmetric(T)) return std::nullopt;
  const int s = T[j / 2];
  const int b0 = s == 3 ? 1 : 2;
  for (int i = b0; i <= j - b0; ++i)
    if (T[i] != s) return std::nullopt;
  if (s != 3 && (b0 > j - b0 || T[1] != 3)) return std::nullopt;
  return std::make_pair(s, b0);
}

// parse "a..b" or "a"
std::vector<int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) return {std::stoi(text)};
    const int a = std::stoi(text.substr(0, dots)), b = std::stoi(text.substr(dots + 2));
    if (a > b) throw CLI::ValidationError("range", "empty range " + text);
    std::vector<int> out;
    for (int j = a; j <= b; ++j) out.push_back(j);
    return out;
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("range", "expected a or a..b, got " + text);
  }
}

IntSeq parse_sequence(std::string text) {
  for (char& c : text)
    if (c == '(' || c == ')' || c == ',') c = ' ';
  std::istringstream in(text);
  IntSeq out;
  int x;
  while (in >> x) out.push_back(x);
  if (!in.eof()) throw CLI::ValidationError("sequence", "expected integers");
  return out;
}

int cmd_compute(const Config& cfg, const std::string& dual, const std::vector<std::string>& ideal,
                const std::string& ell_text, std::optional<int> j_opt) {
  const Field field = cfg.field();
  const LinearForm ell = parse_linear_form(ell_text, field);
  RankMatrix M;
  int j = 0;
  IntSeq T;
  if (!dual.empty()) {
    const Poly F = parse_poly(dual, Side::Dual, field);
    if (F.is_zero()) throw ZeroPolynomial("dual generator is zero");
    j = F.degree();
    T = hilbert_function(F);
    M = rank_matrix(F, ell);
  } else {
    if (!j_opt) throw CLI::ValidationError("--j", "an ideal needs the socle degree --j");
    j = *j_opt;
    const GradedIdeal I = GradedIdeal::parse(ideal, field, j + 1);
    T = quotient_hilbert(I, j);
    M = rank_matrix_from_ideal(I, ell, j);
  }
  const JdtMatrix J = jdt_matrix(M);
  const Jdt S = jdt_from_matrix(J);
  const bool wl = is_weak_lefschetz(S, T), sl = is_strong_lefschetz(S, T);
  const auto shape = almost_constant(T);

  json out{{"field", field.name()},
           {"j", j},
           {"hilbert", T},
           {"rank_matrix", rows_of(M)},
           {"jdt_matrix", rows_of(J)},
           {"jdt", to_notation(S)},
           {"parts", parts_of(S)},
           {"weak_lefschetz", wl},
           {"strong_lefschetz", sl}};
  if (shape) {
    const auto [s, b0] = *shape;
    IntSeq r;
    for (int i = 0; i <= s && b0 + i <= j; ++i) r.push_back(M.at(b0, b0 + i));
    out["s"] = s;
    out["r"] = r;
    out["delta"] = delta_of(r);
    try {
      const PartClassification c = classify_parts(S, j, s);
      json rep = json::array();
      for (const auto& l : c.repeated) rep.push_back({l.width, l.from, l.to});
      out["classification"] = {{"lengthening", parts_of(Jdt(c.lengthening))},
                               {"repeated", rep},
                               {"sporadic", parts_of(Jdt(c.sporadic))}};
    } catch (const UnclassifiablePart& e) {
      out["classification_error"] = e.what();
    }
  }

  if (cfg.as_json()) {
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  std::cout << "field  " << field.name() << "\n"
            << "T      " << seq(T) << "\n"
            << "rank matrix\n" << M.to_string() << "JDT matrix\n" << J.to_string()
            << "S      " << to_notation(S) << "\n"
            << "WL     " << (wl ? "yes" : "no") << "\n"
            << "SL     " << (sl ? "yes" : "no") << "\n";
  if (shape) {
    std::cout << "Delta  " << seq(out["delta"].get<IntSeq>()) << "\n";
    if (out.contains("classification")) {
      const auto& c = out["classification"];
      auto show = [](const json& parts) {
        std::vector<Part> v;
        for (const auto& p : parts) v.push_back({p[0].get<int>(), p[1].get<int>()});
        return v.empty() ? std::string("-") : to_notation(Jdt(v));
      };
      std::cout << "lengthening " << show(c["lengthening"]) << "\n";
      std::cout << "repeated    ";
      if (c["repeated"].empty()) std::cout << "-";
      for (const auto& l : c["repeated"])
        std::cout << l[0].get<int>() << "\xE2\x86\x91_" << l[1].get<int>() << "^" << l[2].get<int>() << " ";
      std::cout << "\nsporadic    " << show(c["sporadic"]) << "\n";
    } else {
      std::cout << "classification: " << out["classification_error"].get<std::string>() << "\n";
    }
  }
  return kOk;
}

int cmd_enumerate(const Config& cfg, int codim, int s, int d, int k, bool records) {
  const EnumSpec spec = codim == 2 ? EnumSpec::codim2(d, k) : EnumSpec::codim3(s, k);
  spec.validate();
  const auto recs = enumerate(spec, cfg.jobs);
  if (records) {
    std::cout << records_to_json(spec, recs) << "\n";
    return kOk;
  }
  const Census c = make_census(spec, recs);
  std::cout << (cfg.as_json() ? c.to_json() + "\n" : c.to_text());
  return kOk;
}

int cmd_verify(const Config& cfg, const std::vector<std::string>& ids, std::vector<int> js) {
  bool all = true;
  json out = json::array();
  for (const auto& id : ids) {
    const Table& t = table(id);
    std::vector<int> use = js;
    if (use.empty())
      for (int j = t.j_min; j <= t.j_max; ++j) use.push_back(j);
    const TableSummary sum = verify_table(t.id, use, cfg.field(), cfg.jobs);
    all = all && sum.failed == 0;
    if (cfg.as_json()) {
      json reps = json::array();
      for (const auto& r : sum.reports)
        reps.push_back({{"id", r.id},
                        {"j", r.j},
                        {"pass", r.pass},
                        {"computed", to_notation(r.computed)},
                        {"expected", to_notation(r.expected)},
                        {"computed_parts", parts_of(r.computed)},
                        {"error", r.error}});
      out.push_back({{"table", t.id}, {"passed", sum.passed}, {"failed", sum.failed},
                     {"skipped", sum.skipped}, {"reports", reps}});
      continue;
    }
    for (int j : use) {
      int pass = 0, total = 0;
      for (const auto& r : sum.reports)
        if (r.j == j) {
          ++total;
          pass += r.pass;
          if (!r.pass)
            std::cout << "  FAIL " << t.id << "#" << r.id << " j=" << j << ": " << r.error << "\n"
                      << "       expected " << to_notation(r.expected) << "\n"
                      << "       computed " << to_notation(r.computed) << "\n";
        }
      std::cout << t.id << " j=" << j << "  " << pass << "/" << total << " pass\n";
    }
    std::cout << t.id << " total " << sum.passed << " passed, " << sum.failed << " failed, " << sum.skipped
              << " skipped\n";
  }
  if (cfg.as_json()) std::cout << out.dump(2) << "\n";
  // char p runs report only
  if (cfg.characteristic) return kOk;
  return all ? kOk : kFailed;
}

int cmd_check_oseq(const Config& cfg, const std::string& text, int codim) {
  const IntSeq h = parse_sequence(text);
  const bool gor = codim == 2 ? is_gorenstein_seq_codim_le2(h) : is_gorenstein_seq_codim_le3(h);
  const bool oseq = codim == 2 ? is_codim2_o_sequence(h) : is_o_sequence(h);
  // first degree where Macaulay's bound is violated
  json witness = nullptr;
  for (std::size_t i = 1; i + 1 < h.size(); ++i)
    if (h[i + 1] > macaulay_growth(h[i], static_cast<int>(i))) {
      witness = {{"degree", i + 1}, {"value", h[i + 1]}, {"bound", macaulay_growth(h[i], static_cast<int>(i))}};
      break;
    }
  if (cfg.as_json()) {
    std::cout << json{{"sequence", h}, {"o_sequence", oseq}, {"gorenstein", gor}, {"witness", witness}}.dump(2)
              << "\n";
  } else {
    std::cout << seq(h) << "  O-sequence: " << (oseq ? "true" : "false")
              << "  Gorenstein (codim <= " << codim << "): " << (gor ? "true" : "false") << "\n";
    if (!witness.is_null())
      std::cout << "  h_" << witness["degree"] << " = " << witness["value"] << " exceeds bound " << witness["bound"]
                << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jordan degree types of graded Artinian Gorenstein algebras"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--char", cfg.characteristic, "field characteristic, 0 for Q")->check(CLI::NonNegativeNumber);
  app.add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* compute = app.add_subcommand("compute", "rank matrix, JDT matrix and JDT of F or I");
  std::string dual, ell = "x";
  std::vector<std::string> ideal;
  std::optional<int> j_opt;
  auto* o_dual = compute->add_option("--dual", dual, "dual generator F in X,Y,Z");
  auto* o_ideal = compute->add_option("--ideal", ideal, "ideal generator in x,y,z (repeatable)");
  o_dual->excludes(o_ideal);
  compute->add_option("--ell", ell, "linear form");
  compute->add_option("--j", j_opt, "socle degree (ideal input)");

  auto* en = app.add_subcommand("enumerate", "potential JDT for (1,3,s^k,3,1) or codimension two");
  int codim = 3, s = 0, d = 0, k = 0;
  bool records = false;
  en->add_option("--codim", codim)->check(CLI::IsMember({2, 3}));
  en->add_option("--s", s);
  en->add_option("--d", d);
  en->add_option("--k", k)->required();
  en->add_flag("--records", records, "dump every rank matrix as JSON");

  auto* ver = app.add_subcommand("verify", "check table entries against their generators");
  std::vector<std::string> ids;
  std::string j_text, range_text;
  ver->add_option("--table", ids, "table id (repeatable)")->required();
  ver->add_option("--j", j_text, "j or a..b");
  ver->add_option("--j-range", range_text, "a..b");

  auto* chk = app.add_subcommand("check-oseq", "Macaulay and Gorenstein sequence tests");
  std::string sequence;
  int oseq_codim = 3;
  chk->add_option("sequence", sequence, "e.g. 1,2,4,4,2")->required();
  chk->add_option("--codim", oseq_codim)->check(CLI::IsMember({2, 3}));

  for (auto* sub : {compute, en, ver, chk}) {
    sub->add_option("--char", cfg.characteristic)->check(CLI::NonNegativeNumber);
    sub->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--jobs", cfg.jobs)->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (cfg.characteristic && !is_prime(cfg.characteristic))
      throw InvalidField("characteristic " + std::to_string(cfg.characteristic) + " is not prime");
    if (*compute) {
      if (dual.empty() == ideal.empty()) throw CLI::ValidationError("compute", "give exactly one of --dual, --ideal");
      return cmd_compute(cfg, dual, ideal, ell, j_opt);
    }
    if (*en) {
      if (codim == 3 && s == 0) throw CLI::ValidationError("--s", "codimension three needs --s");
      if (codim == 2 && d == 0) throw CLI::ValidationError("--d", "codimension two needs --d");
      return cmd_enumerate(cfg, codim, s, d, k, records);
    }
    if (*ver) {
      std::vector<int> js;
      if (!j_text.empty()) js = parse_range(j_text);
      if (!range_text.empty()) {
        auto more = parse_range(range_text);
        js.insert(js.end(), more.begin(), more.end());
      }
      return cmd_verify(cfg, ids, js);
    }
    return cmd_check_oseq(cfg, sequence, oseq_codim);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const VerificationFailed& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
