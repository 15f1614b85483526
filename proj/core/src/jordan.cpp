#include "gorjdt/jordan.hpp"

#include <algorithm>
#include <sstream>

#include "gorjdt/combinatorics.hpp"
#include "gorjdt/errors.hpp"

namespace gorjdt {

TriMatrix TriMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  TriMatrix m(static_cast<int>(rows.size()));
  for (int u = 0; u < m.n_; ++u) {
    if (static_cast<int>(rows[u].size()) != m.n_) throw std::invalid_argument("matrix must be square");
    for (int v = u; v < m.n_; ++v) m.set(u, v, rows[u][v]);
  }
  return m;
}

IntSeq TriMatrix::diagonal(int a) const {
  IntSeq d;
  for (int u = 0; u + a < n_; ++u) d.push_back(at(u, u + a));
  return d;
}

std::vector<int> TriMatrix::flatten() const {
  std::vector<int> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u; v < n_; ++v) out.push_back(at(u, v));
  return out;
}

std::string TriMatrix::to_string() const {
  int width = 1;
  for (int x : a_) width = std::max<int>(width, std::to_string(x).size());
  std::ostringstream out;
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) {
      std::string cell = v < u ? "." : std::to_string(at(u, v));
      out << (v ? " " : "") << std::string(width - cell.size(), ' ') << cell;
    }
    out << '\n';
  }
  return out.str();
}

Jdt::Jdt(std::vector<Part> parts) : parts_(std::move(parts)) {
  for (const auto& p : parts_)
    if (p.length < 1 || p.degree < 0) throw OutOfRange("part must have length >= 1 and degree >= 0");
  std::sort(parts_.begin(), parts_.end());
}

int Jdt::total_length() const {
  int t = 0;
  for (const auto& p : parts_) t += p.length;
  return t;
}

int Jdt::count(int length, int degree) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), Part{length, degree}));
}

std::map<std::pair<int, int>, int> Jdt::counts() const {
  std::map<std::pair<int, int>, int> c;
  for (const auto& p : parts_) ++c[{p.length, p.degree}];
  return c;
}

IntSeq Jdt::occupancy() const {
  int top = 0;
  for (const auto& p : parts_) top = std::max(top, p.degree + p.length);
  IntSeq t(top, 0);
  for (const auto& p : parts_)
    for (int i = p.degree; i < p.degree + p.length; ++i) ++t[i];
  return t;
}

bool operator<(const Jdt& a, const Jdt& b) {
  return std::lexicographical_compare(
      a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end(),
      [](const Part& x, const Part& y) { return x < y; });
}

static void check_ell(const Field& f, const LinearForm& ell) {
  if (ell.field() != f) throw FieldMismatch("linear form over " + ell.field().name());
}

RankMatrix rank_matrix(const Poly& F, const LinearForm& ell) {
  if (F.is_zero()) throw ZeroPolynomial("rank matrix of the zero form");
  check_ell(F.field(), ell);
  const int j = F.degree();
  const Poly L = ell.to_poly(Side::Ring);
  RankMatrix M(j + 1);
  Poly G = F;
  for (int a = 0; a <= j; ++a) {
    if (G.is_zero()) break;
    const IntSeq h = hilbert_function(G);
    for (int u = 0; u + a <= j; ++u) M.set(u, u + a, h[u]);
    G = contract(L, G);
  }
  return M;
}

RankMatrix rank_matrix_from_ideal(const GradedIdeal& I, const LinearForm& ell, int j) {
  check_ell(I.field(), ell);
  if (j < 0) throw DegreeOutOfRange("negative socle degree");
  const Field& k = I.field();
  if (ideal_echelon(I, j + 1).rows.size() != basis_size(j + 1))
    throw NotArtinian("A_" + std::to_string(j + 1) + " is not zero");
  std::vector<Echelon> E;
  for (int v = 0; v <= j; ++v) E.push_back(ideal_echelon(I, v));
  const Poly L = ell.to_poly(Side::Ring);
  RankMatrix M(j + 1);
  for (int u = 0; u <= j; ++u) {
    const auto basis = monomial_basis(u);
    std::vector<Poly> images;
    for (const auto& m : basis) images.push_back(Poly::monomial(k, Side::Ring, m));
    for (int v = u; v <= j; ++v) {
      if (v > u)
        for (auto& p : images) p = mul(p, L);
      std::vector<Vec> rows;
      for (const auto& p : images) rows.push_back(reduce(k, E[v], p.to_dense()));
      M.set(u, v, static_cast<int>(rank_of_rows(k, basis_size(v), rows)));
    }
  }
  return M;
}

JdtMatrix jdt_matrix(const RankMatrix& M) {
  const int n = M.size();
  JdtMatrix J(n);
  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v) {
      const int x = M.at(u, v) + M.at(u - 1, v + 1) - M.at(u - 1, v) - M.at(u, v + 1);
      if (x < 0)
        throw NegativeEntry("J[" + std::to_string(u) + "][" + std::to_string(v) +
                            "] = " + std::to_string(x));
      J.set(u, v, x);
    }
  return J;
}

Jdt jdt_from_matrix(const JdtMatrix& J) {
  std::vector<Part> parts;
  for (int u = 0; u < J.size(); ++u)
    for (int v = u; v < J.size(); ++v)
      for (int m = 0; m < J.at(u, v); ++m) parts.push_back({v - u + 1, u});
  return Jdt(std::move(parts));
}

RankMatrix rank_matrix_from_jdt(const Jdt& jdt, int j) {
  RankMatrix M(j + 1);
  for (const auto& p : jdt.parts())
    if (p.degree + p.length - 1 > j) throw OutOfRange("part extends beyond the socle degree");
  for (int u = 0; u <= j; ++u)
    for (int v = u; v <= j; ++v) {
      int c = 0;
      for (const auto& p : jdt.parts())
        if (p.degree <= u && p.degree + p.length - 1 >= v) ++c;
      M.set(u, v, c);
    }
  return M;
}

Jdt jdt(const Poly& F, const LinearForm& ell) { return jdt_from_matrix(jdt_matrix(rank_matrix(F, ell))); }

JordanPartition jordan_type(const Jdt& jdt) {
  JordanPartition p;
  for (const auto& part : jdt.parts()) p.push_back(part.length);
  std::sort(p.rbegin(), p.rend());
  return p;
}

bool is_weak_lefschetz(const Jdt& jdt, const IntSeq& T) {
  const int sperner = T.empty() ? 0 : *std::max_element(T.begin(), T.end());
  return static_cast<int>(jdt.size()) == sperner;
}

bool is_strong_lefschetz(const Jdt& jdt, const IntSeq& T) {
  std::vector<int> parts;
  for (int t : T)
    if (t > 0) parts.push_back(t);
  std::sort(parts.rbegin(), parts.rend());
  return jordan_type(jdt) == conjugate(parts);
}

bool check_symmetry(const Jdt& jdt, int j) {
  const auto c = jdt.counts();
  for (const auto& [key, m] : c) {
    const auto [p, nu] = key;
    const int mirror = j + 1 - nu - p;
    if (mirror < 0) return false;
    auto it = c.find({p, mirror});
    if (it == c.end() || it->second != m) return false;
  }
  return true;
}

IntSeq initial_hilbert(const Jdt& jdt) {
  IntSeq h;
  for (const auto& p : jdt.parts()) {
    if (static_cast<int>(h.size()) <= p.degree) h.resize(p.degree + 1, 0);
    ++h[p.degree];
  }
  return h;
}

// ---------------------------------------------------------------------------
// Jordan basis oracle

namespace {

struct GradedModel {
  Field field;
  std::vector<std::size_t> dims;  // dim A_d
  std::vector<Matrix> mult;       // A_d -> A_{d+1}, row-vector convention
};

GradedModel model_from_dual(const Poly& F, const LinearForm& ell) {
  const Field& k = F.field();
  const int j = F.degree();
  const Poly L = ell.to_poly(Side::Ring);
  // A_d is realised as R_d o F inside S_{j-d}
  std::vector<Echelon> B;
  for (int d = 0; d <= j; ++d) {
    const Matrix C = catalecticant(F, d);
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < C.rows(); ++r) rows.push_back(C.row(r));
    B.push_back(row_echelon(k, C.cols(), rows));
  }
  GradedModel g{k, {}, {}};
  for (int d = 0; d <= j; ++d) g.dims.push_back(B[d].rows.size());
  for (int d = 0; d < j; ++d) {
    Matrix N(k, g.dims[d], g.dims[d + 1]);
    for (std::size_t i = 0; i < g.dims[d]; ++i) {
      const Poly b = Poly::from_dense(k, Side::Dual, j - d, B[d].rows[i]);
      const Vec img = contract(L, b).to_dense();
      for (std::size_t t = 0; t < g.dims[d + 1]; ++t) N.at(i, t) = img[B[d + 1].pivots[t]];
      Vec check(img.size(), 0);
      for (std::size_t t = 0; t < g.dims[d + 1]; ++t)
        for (std::size_t c = 0; c < img.size(); ++c)
          check[c] = k.add(check[c], k.mul(N.at(i, t), B[d + 1].rows[t][c]));
      if (check != img) throw BasisVerificationFailed("image left the span of R_d o F");
    }
    g.mult.push_back(std::move(N));
  }
  return g;
}

GradedModel model_from_ideal(const GradedIdeal& I, const LinearForm& ell, int j) {
  const Field& k = I.field();
  if (ideal_echelon(I, j + 1).rows.size() != basis_size(j + 1))
    throw NotArtinian("A_" + std::to_string(j + 1) + " is not zero");
  const Poly L = ell.to_poly(Side::Ring);
  std::vector<Echelon> E;
  std::vector<std::vector<std::size_t>> standard(j + 1);
  for (int d = 0; d <= j; ++d) {
    E.push_back(ideal_echelon(I, d));
    std::vector<bool> piv(basis_size(d), false);
    for (auto p : E[d].pivots) piv[p] = true;
    for (std::size_t i = 0; i < piv.size(); ++i)
      if (!piv[i]) standard[d].push_back(i);
  }
  GradedModel g{k, {}, {}};
  for (int d = 0; d <= j; ++d) g.dims.push_back(standard[d].size());
  for (int d = 0; d < j; ++d) {
    const auto basis = monomial_basis(d);
    Matrix N(k, g.dims[d], g.dims[d + 1]);
    for (std::size_t i = 0; i < g.dims[d]; ++i) {
      const Poly m = Poly::monomial(k, Side::Ring, basis[standard[d][i]]);
      const Vec img = reduce(k, E[d + 1], mul(L, m).to_dense());
      for (std::size_t t = 0; t < g.dims[d + 1]; ++t) N.at(i, t) = img[standard[d + 1][t]];
    }
    g.mult.push_back(std::move(N));
  }
  return g;
}

Vec times(const Field& k, const Vec& v, const Matrix& N) {
  Vec out(N.cols(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t c = 0; c < N.cols(); ++c) out[c] += v[i] * N.at(i, c);
  }
  for (auto& x : out) x = k.normalize(x);
  return out;
}

// ker of N^p on A_d
std::vector<Vec> power_kernel(const GradedModel& g, int d, int p) {
  const int j = static_cast<int>(g.dims.size()) - 1;
  const std::size_t n = g.dims[d];
  std::vector<Vec> identity;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    identity.push_back(std::move(e));
  }
  if (p == 0) return {};
  if (d + p > j) return identity;
  Matrix P(g.field, n, n);
  for (std::size_t i = 0; i < n; ++i) P.at(i, i) = 1;
  for (int t = d; t < d + p; ++t) P = P * g.mult[t];
  if (P.cols() == 0) return identity;
  return left_kernel(P);
}

Jdt run_oracle(const GradedModel& g) {
  const Field& k = g.field;
  const int j = static_cast<int>(g.dims.size()) - 1;
  std::size_t total = 0;
  std::vector<std::size_t> offset;
  for (auto n : g.dims) {
    offset.push_back(total);
    total += n;
  }
  std::vector<Part> parts;
  std::vector<Vec> basis;  // string vectors in the total space
  for (int d = 0; d <= j; ++d) {
    const std::size_t n = g.dims[d];
    if (n == 0) continue;
    for (int p = 1; p <= j - d + 1; ++p) {
      // complement of ker N^{p-1} + N(ker N^{p+1} in degree d-1) inside ker N^p
      std::vector<Vec> S = power_kernel(g, d, p - 1);
      if (d > 0)
        for (const auto& v : power_kernel(g, d - 1, p + 1)) S.push_back(times(k, v, g.mult[d - 1]));
      std::size_t r = rank_of_rows(k, n, S);
      for (const auto& v : power_kernel(g, d, p)) {
        S.push_back(v);
        const std::size_t r2 = rank_of_rows(k, n, S);
        if (r2 == r) {
          S.pop_back();
          continue;
        }
        r = r2;
        Vec cur = v;
        for (int t = 0; t < p; ++t) {
          if (is_zero(cur)) throw BasisVerificationFailed("string vanished early");
          Vec full(total, 0);
          std::copy(cur.begin(), cur.end(), full.begin() + offset[d + t]);
          basis.push_back(std::move(full));
          if (d + t < j) cur = times(k, cur, g.mult[d + t]);
        }
        if (d + p - 1 < j && !is_zero(cur)) throw BasisVerificationFailed("string did not terminate");
        parts.push_back({p, d});
      }
    }
  }
  if (basis.size() != total || rank_of_rows(k, total, basis) != total)
    throw BasisVerificationFailed("strings do not form a basis of A");
  return Jdt(std::move(parts));
}

}  // namespace

Jdt jordan_oracle(const Poly& F, const LinearForm& ell) {
  if (F.is_zero()) throw ZeroPolynomial("oracle on the zero form");
  check_ell(F.field(), ell);
  return run_oracle(model_from_dual(F, ell));
}

Jdt jordan_oracle(const GradedIdeal& I, const LinearForm& ell, int j) {
  check_ell(I.field(), ell);
  return run_oracle(model_from_ideal(I, ell, j));
}

// ---------------------------------------------------------------------------
// Part taxonomy for almost constant Hilbert functions

std::vector<int> PartClassification::repeated_widths() const {
  std::vector<int> w;
  for (const auto& l : repeated) w.push_back(l.width);
  std::sort(w.rbegin(), w.rend());
  return w;
}

PartClassification classify_parts(const Jdt& jdt, int j, int s) {
  auto c = jdt.counts();
  auto has = [&](int p, int nu) {
    auto it = c.find({p, nu});
    return it != c.end() && it->second > 0;
  };
  auto take = [&](int p, int nu) {
    if (--c[{p, nu}] == 0) c.erase({p, nu});
  };
  PartClassification out;
  for (int w = 1; w <= s; ++w)
    for (int i = 0; 2 * i + w <= j + 1; ++i) {
      const int hi = j + 1 - i - w;
      if (hi - i < 2) break;
      for (;;) {
        bool full = true;
        for (int nu = i; nu <= hi && full; ++nu) full = has(w, nu);
        if (!full) break;
        for (int nu = i; nu <= hi; ++nu) take(w, nu);
        out.repeated.push_back({w, i, hi});
      }
    }
  auto in_window = [j](int p, int nu) {
    return nu >= 0 && nu <= 2 && p <= j + 1 - nu && p >= j - 1 - nu;
  };
  for (auto it = c.begin(); it != c.end();) {
    const auto [p, nu] = it->first;
    if (in_window(p, nu)) {
      for (int m = 0; m < it->second; ++m) out.lengthening.push_back({p, nu});
      it = c.erase(it);
    } else {
      ++it;
    }
  }
  while (!c.empty()) {
    const auto [p, nu] = c.begin()->first;
    const int mirror = j + 1 - nu - p;
    if (mirror == nu) {
      for (int m = 0; m < c.begin()->second; ++m) out.sporadic.push_back({p, nu});
      c.erase(c.begin());
      continue;
    }
    if (!has(p, mirror))
      throw UnclassifiablePart("part " + std::to_string(p) + "_" + std::to_string(nu) +
                               " has no symmetric partner");
    take(p, nu);
    take(p, mirror);
    out.sporadic.push_back({p, nu});
    out.sporadic.push_back({p, mirror});
  }
  std::sort(out.lengthening.begin(), out.lengthening.end());
  std::sort(out.sporadic.begin(), out.sporadic.end());
  return out;
}

}  // namespace gorjdt
