#include <algorithm>
#include <sstream>

#include "gorjdt/errors.hpp"
#include "gorjdt/jordan.hpp"
#include "int_expr.hpp"

namespace gorjdt {

namespace {

const std::string kUp = "\xE2\x86\x91";  // ↑

std::string sub(int x) { return x < 10 ? std::to_string(x) : "{" + std::to_string(x) + "}"; }

struct Item {
  int sort_degree;
  int length;
  std::string text;
};

}  // namespace

std::string to_notation(const Jdt& jdt) {
  std::map<int, std::map<int, int>> by_length;  // p -> nu -> multiplicity
  for (const auto& [key, m] : jdt.counts()) by_length[key.first][key.second] = m;
  std::vector<Item> items;
  for (auto& [p, row] : by_length) {
    // multiplicity-one degrees share one subscript list until another item of this length intervenes
    std::vector<int> singles;
    auto flush = [&, p = p] {
      if (singles.size() == 1) {
        items.push_back({singles[0], p, std::to_string(p) + "_" + sub(singles[0])});
      } else if (!singles.empty()) {
        std::string t = std::to_string(p) + "_{";
        for (std::size_t i = 0; i < singles.size(); ++i) t += (i ? "," : "") + std::to_string(singles[i]);
        items.push_back({singles[0], p, t + "}"});
      }
      singles.clear();
    };
    auto it = row.begin();
    while (it != row.end()) {
      // maximal run of consecutive degrees with equal multiplicity
      auto end = std::next(it);
      int last = it->first;
      while (end != row.end() && end->first == last + 1 && end->second == it->second) {
        last = end->first;
        ++end;
      }
      const int from = it->first, m = it->second;
      if (last - from >= 2) {
        std::string t = std::to_string(p) + kUp + "_" + sub(from) + "^" + sub(last);
        if (m > 1) t = "(" + t + ")^" + std::to_string(m);
        flush();
        items.push_back({from, p, t});
      } else {
        for (auto k = it; k != end; ++k) {
          if (k->second == 1) {
            singles.push_back(k->first);
          } else {
            flush();
            items.push_back({k->first, p,
                             std::to_string(p) + "_" + sub(k->first) + "^" + std::to_string(k->second)});
          }
        }
      }
      it = end;
    }
    flush();
  }
  std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    return a.sort_degree != b.sort_degree ? a.sort_degree < b.sort_degree : a.length > b.length;
  });
  std::string out = "(";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + items[i].text;
  return out + ")";
}

namespace {

class JdtParser {
 public:
  JdtParser(std::string_view text, std::optional<int> j) : c_(text) {
    if (j) b_["j"] = *j;
  }

  Jdt run() {
    std::vector<Part> parts;
    if (c_.at_end()) throw SyntaxError("empty Jordan degree type", 0);
    list(parts);
    if (!c_.at_end()) throw SyntaxError("unexpected trailing input", c_.pos());
    return Jdt(std::move(parts));
  }

 private:
  long expr() { return detail::IntExpr(c_, b_).expr(); }

  // INT | j | {expr}
  long atom() {
    if (c_.accept('{')) {
      long v = expr();
      c_.expect('}');
      return v;
    }
    const char ch = c_.peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) return c_.integer();
    return detail::IntExpr(c_, b_).factor();
  }

  void list(std::vector<Part>& out) {
    do {
      item(out);
    } while (c_.accept(','));
  }

  void item(std::vector<Part>& out) {
    std::vector<Part> local;
    const std::size_t start = c_.pos();
    if (c_.peek() == '(') {
      // either a parenthesized length like (j-1)_1, or a group
      bool is_length = false;
      long p = 0;
      try {
        c_.expect('(');
        p = expr();
        c_.expect(')');
        is_length = c_.peek() == '_' || c_.text().substr(c_.pos()).starts_with(kUp);
      } catch (const SyntaxError&) {
        is_length = false;
      }
      if (is_length) {
        parts_of(p, local);
      } else {
        c_.reset(start);
        c_.expect('(');
        list(local);
        c_.expect(')');
      }
    } else {
      parts_of(atom(), local);
    }
    long m = 1;
    if (c_.accept('^')) m = atom();
    if (m < 0) throw OutOfRange("negative multiplicity");
    for (long i = 0; i < m; ++i) out.insert(out.end(), local.begin(), local.end());
  }

  void parts_of(long p, std::vector<Part>& out) {
    const std::size_t at = c_.pos();
    if (p < 1) throw OutOfRange("part length " + std::to_string(p) + " at position " + std::to_string(at));
    c_.skip();
    if (c_.accept(kUp)) {
      long lo = 0, hi = 0;
      if (c_.accept('_')) {
        lo = atom();
        c_.expect('^');
        hi = atom();
      } else {
        c_.expect('^');
        hi = atom();
        c_.expect('_');
        lo = atom();
      }
      if (lo < 0) throw OutOfRange("negative initial degree");
      for (long nu = lo; nu <= hi; ++nu) out.push_back({int(p), int(nu)});
      return;
    }
    c_.expect('_');
    std::vector<long> degrees;
    if (c_.accept('{')) {
      do {
        degrees.push_back(expr());
      } while (c_.accept(','));
      c_.expect('}');
    } else {
      degrees.push_back(atom());
    }
    for (long nu : degrees) {
      if (nu < 0) throw OutOfRange("negative initial degree");
      out.push_back({int(p), int(nu)});
    }
  }

  detail::Cursor c_;
  detail::Bindings b_;
};

}  // namespace

Jdt parse_jdt(std::string_view text, std::optional<int> j) { return JdtParser(text, j).run(); }

}  // namespace gorjdt
