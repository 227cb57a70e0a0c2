// SPDX-License-Identifier: Apache-2.0

#include <cctype>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "lpcc/errors.hpp"
#include "lpcc/instance.hpp"

namespace lpcc {

namespace {

// Whitespace tokenizer that tracks line numbers for error reporting.
class TokenStream {
 public:
  explicit TokenStream(std::istream& in) : in_(in) {}

  bool next(std::string& tok) {
    tok.clear();
    int c;
    while ((c = in_.get()) != EOF && std::isspace(c)) {
      if (c == '\n') ++line_;
    }
    if (c == EOF) return false;
    token_line_ = line_;
    tok.push_back(static_cast<char>(c));
    while ((c = in_.get()) != EOF && !std::isspace(static_cast<unsigned>(c))) {
      tok.push_back(static_cast<char>(c));
    }
    if (c == '\n') ++line_;
    return true;
  }

  std::string expect(const char* what) {
    std::string tok;
    if (!next(tok)) {
      throw ParseError(std::string("unexpected end of file, wanted ") + what,
                       line_);
    }
    return tok;
  }

  int expect_int(const char* what) {
    const std::string tok = expect(what);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) {
      throw ParseError("bad integer '" + tok + "' for " + what, token_line_);
    }
    return value;
  }

  double expect_real(const char* what) {
    const std::string tok = expect(what);
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || !std::isfinite(value)) {
      throw ParseError("bad real '" + tok + "' for " + what, token_line_);
    }
    return value;
  }

  void expect_label(const std::string& label) {
    const std::string tok = expect(label.c_str());
    if (tok != label) {
      throw ParseError("expected section '" + label + "', found '" + tok + "'",
                       token_line_);
    }
  }

  int line() const { return token_line_; }

 private:
  std::istream& in_;
  int line_ = 1;        // line the read head is on
  int token_line_ = 1;  // line the last token started on
};

void read_vector(TokenStream& ts, const std::string& label, int expect_count,
                 std::vector<double>& out) {
  ts.expect_label(label);
  const int count = ts.expect_int("vector length");
  if (count != expect_count) {
    throw ParseError("section '" + label + "' has length " +
                         std::to_string(count) + ", header implies " +
                         std::to_string(expect_count),
                     ts.line());
  }
  out.resize(count);
  for (int i = 0; i < count; ++i) out[i] = ts.expect_real(label.c_str());
}

SparseMatrix read_matrix(TokenStream& ts, const std::string& label, int nrows,
                         int ncols) {
  ts.expect_label(label);
  const int nnz = ts.expect_int("entry count");
  if (nnz < 0) throw ParseError("negative entry count", ts.line());
  SparseMatrix mat(nrows, ncols);
  for (int e = 0; e < nnz; ++e) {
    const int r = ts.expect_int("row index");
    const int c = ts.expect_int("col index");
    const double v = ts.expect_real("value");
    if (r < 0 || r >= nrows || c < 0 || c >= ncols) {
      throw ParseError("index (" + std::to_string(r) + "," +
                           std::to_string(c) + ") outside section '" + label +
                           "'",
                       ts.line());
    }
    mat.add(r, c, v);
  }
  try {
    mat.validate();
  } catch (const DimensionError& err) {
    throw ParseError(std::string(err.what()) + " in section '" + label + "'",
                     ts.line());
  }
  return mat;
}

std::string fmt_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_vector(std::ostream& out, const char* label,
                  const std::vector<double>& v) {
  out << label << ' ' << v.size() << '\n';
  for (std::size_t i = 0; i < v.size(); ++i) {
    out << fmt_real(v[i]);
    out << (((i + 1) % 8 == 0 || i + 1 == v.size()) ? '\n' : ' ');
  }
}

void write_matrix(std::ostream& out, const char* label,
                  const SparseMatrix& m) {
  out << label << ' ' << m.nnz() << '\n';
  for (const Triplet& t : m.triplets()) {
    out << t.row << ' ' << t.col << ' ' << fmt_real(t.value) << '\n';
  }
}

}  // namespace

LpccInstance read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  TokenStream ts(in);

  ts.expect_label("LPCC1");
  LpccInstance inst;
  inst.n = ts.expect_int("n");
  inst.m = ts.expect_int("m");
  inst.k = ts.expect_int("k");
  if (inst.n < 0 || inst.m < 0 || inst.k < 0) {
    throw ParseError("negative dimension in header", ts.line());
  }

  read_vector(ts, "c", inst.n, inst.c);
  read_vector(ts, "d", inst.m, inst.d);
  read_vector(ts, "b", inst.k, inst.b);
  read_vector(ts, "q", inst.m, inst.q);
  inst.A = read_matrix(ts, "A", inst.k, inst.n);
  inst.B = read_matrix(ts, "B", inst.k, inst.m);
  inst.N = read_matrix(ts, "N", inst.m, inst.n);
  inst.M = read_matrix(ts, "M", inst.m, inst.m);

  std::string extra;
  if (ts.next(extra)) {
    throw ParseError("trailing content '" + extra + "'", ts.line());
  }
  inst.validate();
  return inst;
}

void write_instance(const std::string& path, const LpccInstance& inst) {
  inst.validate();
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'", 0);
  out << "LPCC1 " << inst.n << ' ' << inst.m << ' ' << inst.k << '\n';
  write_vector(out, "c", inst.c);
  write_vector(out, "d", inst.d);
  write_vector(out, "b", inst.b);
  write_vector(out, "q", inst.q);
  write_matrix(out, "A", inst.A);
  write_matrix(out, "B", inst.B);
  write_matrix(out, "N", inst.N);
  write_matrix(out, "M", inst.M);
}

namespace {

// One linear expression line in LP format: "name: terms sense rhs".
class LpRowWriter {
 public:
  explicit LpRowWriter(std::ostream& out) : out_(out) {}

  void begin(const std::string& name) {
    out_ << ' ' << name << ':';
    empty_ = true;
  }

  void term(double coef, const std::string& var) {
    if (coef == 0.0) return;
    if (coef < 0.0) {
      out_ << " - ";
    } else {
      out_ << (empty_ ? " " : " + ");
    }
    out_ << fmt_real(std::fabs(coef)) << ' ' << var;
    empty_ = false;
  }

  void finish(const char* sense, double rhs) {
    if (empty_) out_ << " 0 " << filler_;
    out_ << ' ' << sense << ' ' << fmt_real(rhs) << '\n';
  }

  void set_filler(const std::string& var) { filler_ = var; }

 private:
  std::ostream& out_;
  std::string filler_ = "x0";
  bool empty_ = true;
};

}  // namespace

void export_bigm_mip(const std::string& path, const LpccInstance& inst,
                     const BoundBox& box) {
  inst.validate();
  if (static_cast<int>(box.u_y.size()) != inst.m ||
      static_cast<int>(box.u_w.size()) != inst.m) {
    throw DimensionError("bound box size mismatch");
  }
  for (int i = 0; i < inst.m; ++i) {
    if (!std::isfinite(box.u_y[i]) || !std::isfinite(box.u_w[i])) {
      throw MissingBounds("complementarity " + std::to_string(i) +
                          " lacks finite bounds for the big-M rows");
    }
  }

  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'", 0);
  auto xn = [](int j) { return "x" + std::to_string(j); };
  auto yn = [](int i) { return "y" + std::to_string(i); };
  auto zn = [](int i) { return "z" + std::to_string(i); };

  out << "minimize\n obj:";
  {
    bool empty = true;
    auto term = [&](double coef, const std::string& var) {
      if (coef == 0.0) return;
      out << (coef < 0.0 ? " - " : (empty ? " " : " + "))
          << fmt_real(std::fabs(coef)) << ' ' << var;
      empty = false;
    };
    for (int j = 0; j < inst.n; ++j) term(inst.c[j], xn(j));
    for (int i = 0; i < inst.m; ++i) term(inst.d[i], yn(i));
    if (empty) {
      out << " 0 " << (inst.n > 0 ? xn(0) : yn(0));
    }
    out << '\n';
  }

  out << "st\n";
  LpRowWriter row(out);
  if (inst.n > 0) row.set_filler(xn(0));

  std::vector<std::vector<std::pair<int, double>>> arow(inst.k), brow(inst.k),
      nrow(inst.m), mrow(inst.m);
  for (const Triplet& t : inst.A.triplets()) {
    arow[t.row].push_back({t.col, t.value});
  }
  for (const Triplet& t : inst.B.triplets()) {
    brow[t.row].push_back({t.col, t.value});
  }
  for (const Triplet& t : inst.N.triplets()) {
    nrow[t.row].push_back({t.col, t.value});
  }
  for (const Triplet& t : inst.M.triplets()) {
    mrow[t.row].push_back({t.col, t.value});
  }

  for (int i = 0; i < inst.k; ++i) {
    row.begin("r" + std::to_string(i));
    for (const auto& [j, v] : arow[i]) row.term(v, xn(j));
    for (const auto& [j, v] : brow[i]) row.term(v, yn(j));
    row.finish(">=", inst.b[i]);
  }
  // w = q + N x + M y stays within [0, uw (1 - z)] and y within [0, uy z].
  for (int i = 0; i < inst.m; ++i) {
    row.begin("wlo" + std::to_string(i));
    for (const auto& [j, v] : nrow[i]) row.term(v, xn(j));
    for (const auto& [j, v] : mrow[i]) row.term(v, yn(j));
    row.finish(">=", -inst.q[i]);
  }
  for (int i = 0; i < inst.m; ++i) {
    row.begin("whi" + std::to_string(i));
    for (const auto& [j, v] : nrow[i]) row.term(v, xn(j));
    for (const auto& [j, v] : mrow[i]) row.term(v, yn(j));
    row.term(box.u_w[i], zn(i));
    row.finish("<=", box.u_w[i] - inst.q[i]);
  }
  for (int i = 0; i < inst.m; ++i) {
    row.begin("ybd" + std::to_string(i));
    row.term(1.0, yn(i));
    row.term(-box.u_y[i], zn(i));
    row.finish("<=", 0.0);
  }

  out << "bounds\n";
  for (int i = 0; i < inst.m; ++i) {
    out << ' ' << yn(i) << " <= " << fmt_real(box.u_y[i]) << '\n';
  }
  out << "binary\n";
  for (int i = 0; i < inst.m; ++i) out << ' ' << zn(i) << '\n';
  out << "end\n";
}

}  // namespace lpcc
