#include "barvi/polytope.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace barvi {

namespace {

struct Token {
  std::string text;
  int line;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    // '#' and '*' start comments (cdd uses '*')
    auto cut = line.find_first_of("#*");
    if (cut != std::string::npos) line.erase(cut);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) out.push_back({tok, no});
  }
  return out;
}

bool is_integer_token(const std::string& s) {
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer to_integer(const Token& t) {
  if (!is_integer_token(t.text)) throw ParseError("expected an integer, got '" + t.text + "'", t.line);
  std::string s = t.text[0] == '+' ? t.text.substr(1) : t.text;
  return Integer(s);
}

long to_count(const Token& t) {
  Integer v = to_integer(t);
  if (v < 0 || !v.fits_slong_p()) throw ParseError("bad count '" + t.text + "'", t.line);
  return v.get_si();
}

class Cursor {
 public:
  explicit Cursor(std::vector<Token> toks) : t_(std::move(toks)) {}
  bool done() const { return i_ >= t_.size(); }
  const Token& peek() const { return t_[i_]; }
  const Token& next(const char* what) {
    if (done()) throw ParseError(std::string("unexpected end of input, expected ") + what, last_line());
    return t_[i_++];
  }
  int last_line() const { return t_.empty() ? 0 : t_.back().line; }

 private:
  std::vector<Token> t_;
  size_t i_ = 0;
};

// reads "k i1 .. ik" after a keyword, converting 1-based indices
std::set<Eigen::Index> read_index_list(Cursor& c, long limit, const char* kw) {
  const Token& kt = c.next("index count");
  long k = to_count(kt);
  std::set<Eigen::Index> s;
  for (long j = 0; j < k; ++j) {
    const Token& t = c.next("index");
    Integer v = to_integer(t);
    if (v < 1 || v > limit)
      throw ParseError(std::string(kw) + " index " + t.text + " out of range 1.." + std::to_string(limit), t.line);
    s.insert(v.get_si() - 1);
  }
  return s;
}

void read_rows(Cursor& c, long m, long cols, PolytopeSpec& spec) {
  spec.A = IntMatrix(m, cols - 1);
  spec.b = IntVector(m);
  for (long i = 0; i < m; ++i) {
    int line = c.done() ? c.last_line() : c.peek().line;
    for (long j = 0; j < cols; ++j) {
      if (c.done()) throw ParseError("row " + std::to_string(i + 1) + " is short", line);
      const Token& t = c.next("matrix entry");
      Integer v = to_integer(t);
      if (j == 0)
        spec.b(i) = v;
      else
        spec.A(i, j - 1) = -v;
    }
  }
}

}  // namespace

PolytopeSpec parse_latte(const std::string& text) {
  Cursor c(tokenize(text));
  const Token& mt = c.next("row count");
  const Token& dt = c.next("column count");
  long m = to_count(mt), cols = to_count(dt);
  if (cols < 2) throw ParseError("need at least one variable", dt.line);
  PolytopeSpec spec;
  read_rows(c, m, cols, spec);
  bool seen_lin = false, seen_nn = false;
  while (!c.done()) {
    const Token& kw = c.next("keyword");
    if (kw.text == "linearity") {
      if (seen_lin) throw ParseError("duplicate linearity line", kw.line);
      seen_lin = true;
      spec.equality_rows = read_index_list(c, m, "linearity");
    } else if (kw.text == "nonnegative") {
      if (seen_nn) throw ParseError("duplicate nonnegative line", kw.line);
      seen_nn = true;
      spec.nonnegative_vars = read_index_list(c, cols - 1, "nonnegative");
    } else if (is_integer_token(kw.text)) {
      throw ParseError("too many matrix entries (header says " + std::to_string(m) + " rows)", kw.line);
    } else {
      throw ParseError("unknown keyword '" + kw.text + "'", kw.line);
    }
  }
  return spec;
}

PolytopeSpec parse_cdd(const std::string& text, std::vector<std::string>* warnings) {
  auto toks = tokenize(text);
  PolytopeSpec spec;
  std::set<Eigen::Index> lin;
  int lin_line = 0;
  size_t i = 0;
  bool have_block = false;
  while (i < toks.size()) {
    const Token& t = toks[i];
    if (t.text == "H-representation") {
      ++i;
    } else if (t.text == "V-representation") {
      throw UnsupportedError("cdd V-representation input is not supported");
    } else if (t.text == "linearity") {
      lin_line = t.line;
      std::vector<Token> rest(toks.begin() + i + 1, toks.end());
      Cursor c(rest);
      long k = to_count(c.next("index count"));
      for (long j = 0; j < k; ++j) {
        Integer v = to_integer(c.next("index"));
        if (v < 1) throw ParseError("linearity index out of range", t.line);
        lin.insert(v.get_si() - 1);
      }
      i += 2 + k;
    } else if (t.text == "begin") {
      if (i + 3 >= toks.size()) throw ParseError("truncated cdd header", t.line);
      const Token& mt = toks[i + 1];
      const Token& nt = toks[i + 2];
      const Token& ty = toks[i + 3];
      if (ty.text == "rational" || ty.text == "real")
        throw UnsupportedError("only integer cdd input is supported (got '" + ty.text + "')");
      if (ty.text != "integer") throw ParseError("expected number type 'integer'", ty.line);
      long m = to_count(mt), cols = to_count(nt);
      if (cols < 2) throw ParseError("need at least one variable", nt.line);
      std::vector<Token> rest(toks.begin() + i + 4, toks.end());
      Cursor c(rest);
      read_rows(c, m, cols, spec);
      i += 4 + static_cast<size_t>(m * cols);
      if (i >= toks.size() || toks[i].text != "end")
        throw ParseError("expected 'end' after the data rows", i < toks.size() ? toks[i].line : t.line);
      ++i;
      have_block = true;
    } else {
      if (warnings) warnings->push_back("ignoring cdd token '" + t.text + "' on line " + std::to_string(t.line));
      ++i;
    }
  }
  if (!have_block) throw ParseError("no begin/end block", toks.empty() ? 0 : toks.back().line);
  for (auto r : lin)
    if (r >= spec.rows()) throw ParseError("linearity index out of range", lin_line);
  spec.equality_rows = lin;
  return spec;
}

std::string serialize(const PolytopeSpec& spec) {
  std::ostringstream os;
  os << spec.rows() << " " << spec.dim() + 1 << "\n";
  for (Eigen::Index i = 0; i < spec.rows(); ++i) {
    os << spec.b(i).get_str();
    for (Eigen::Index j = 0; j < spec.dim(); ++j) os << " " << Integer(-spec.A(i, j)).get_str();
    os << "\n";
  }
  auto list = [&](const char* kw, const std::set<Eigen::Index>& s) {
    if (s.empty()) return;
    os << kw << " " << s.size();
    for (auto k : s) os << " " << k + 1;
    os << "\n";
  };
  list("linearity", spec.equality_rows);
  list("nonnegative", spec.nonnegative_vars);
  return os.str();
}

IntVector parse_cost(const std::string& text) {
  Cursor c(tokenize(text));
  const Token& rt = c.next("row count");
  const Token& dt = c.next("length");
  if (to_count(rt) != 1) throw ParseError("cost file must have exactly one row", rt.line);
  long d = to_count(dt);
  IntVector v(d);
  for (long j = 0; j < d; ++j) v(j) = to_integer(c.next("cost entry"));
  if (!c.done()) throw ParseError("trailing data in cost file", c.peek().line);
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PolytopeSpec read_polytope_file(const std::string& path, bool cdd) {
  std::string text = read_file(path);
  if (cdd) return parse_cdd(text);
  return parse_latte(text);
}

void validate(const PolytopeSpec& spec) {
  if (spec.dim() < 1) throw ArgumentError("polytope has no variables");
  if (spec.b.size() != spec.rows()) throw DimensionError("right-hand side length differs from row count");
  if (spec.rows() == 0 && spec.nonnegative_vars.empty()) throw ArgumentError("polytope has no constraints");
  for (auto r : spec.equality_rows)
    if (r < 0 || r >= spec.rows()) throw ArgumentError("equality row index out of range");
  for (auto j : spec.nonnegative_vars)
    if (j < 0 || j >= spec.dim()) throw ArgumentError("nonnegative variable index out of range");
}

PolytopeSpec dilate(const PolytopeSpec& spec, const Integer& n) {
  if (n <= 0) throw ArgumentError("dilation factor must be positive");
  PolytopeSpec s = spec;
  for (Eigen::Index i = 0; i < s.b.size(); ++i) s.b(i) *= n;
  return s;
}

PolytopeSpec materialize_nonnegativity(const PolytopeSpec& spec) {
  if (spec.nonnegative_vars.empty()) return spec;
  const Eigen::Index m = spec.rows(), d = spec.dim();
  const Eigen::Index k = static_cast<Eigen::Index>(spec.nonnegative_vars.size());
  PolytopeSpec s;
  s.A = IntMatrix::Zero(m + k, d);
  s.b = IntVector::Zero(m + k);
  s.A.topRows(m) = spec.A;
  s.b.head(m) = spec.b;
  Eigen::Index r = m;
  for (auto j : spec.nonnegative_vars) s.A(r++, j) = -1;
  s.equality_rows = spec.equality_rows;
  return s;
}

PolytopeSpec interior_transform(const PolytopeSpec& spec) {
  if (spec.has_equalities())
    throw UnsupportedError("interior counting is not defined for polytopes given with equations");
  PolytopeSpec s = materialize_nonnegativity(spec);
  for (Eigen::Index i = 0; i < s.b.size(); ++i) s.b(i) -= 1;
  return s;
}

PolytopeSpec add_row(const PolytopeSpec& spec, const IntVector& a, const Integer& beta, bool equality) {
  if (a.size() != spec.dim()) throw DimensionError("add_row: length mismatch");
  PolytopeSpec s;
  const Eigen::Index m = spec.rows();
  s.A = IntMatrix(m + 1, spec.dim());
  s.b = IntVector(m + 1);
  s.A.topRows(m) = spec.A;
  s.A.row(m) = a.transpose();
  s.b.head(m) = spec.b;
  s.b(m) = beta;
  s.equality_rows = spec.equality_rows;
  s.nonnegative_vars = spec.nonnegative_vars;
  if (equality) s.equality_rows.insert(m);
  return s;
}

}  // namespace barvi
