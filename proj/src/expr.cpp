#include "qsuper/expr.hpp"

#include <algorithm>
#include <cctype>

namespace qsuper {

ParseError::ParseError(Kind k, size_t off, const std::string& msg)
    : std::runtime_error(msg + " at offset " + std::to_string(off)), kind(k), offset(off) {}

const char* ParseError::kind_name() const {
  switch (kind) {
    case Kind::Syntax:
      return "SyntaxError";
    case Kind::IndexOutOfShape:
      return "IndexOutOfShape";
    case Kind::NegativeDividedPower:
      return "NegativeDividedPower";
  }
  return "SyntaxError";
}

namespace {

class Parser {
 public:
  Parser(const std::string& s, const Shape* shape) : s_(s), shape_(shape) {}

  ExprPtr run() {
    skip();
    if (pos_ >= s_.size()) fail("empty expression");
    ExprPtr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  const std::string& s_;
  const Shape* shape_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg, size_t at) const {
    throw ParseError(ParseError::Kind::Syntax, at, msg);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool starts(const char* w) {
    skip();
    return s_.compare(pos_, std::char_traits<char>::length(w), w) == 0;
  }

  long integer(bool allow_sign) {
    skip();
    size_t start = pos_;
    bool neg = false;
    if (allow_sign && pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
      skip();
    }
    size_t d0 = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == d0) fail("expected integer", start);
    if (pos_ - d0 > 9) fail("integer too large", start);
    long v = std::stol(s_.substr(d0, pos_ - d0));
    return neg ? -v : v;
  }

  static std::shared_ptr<Expr> node(Expr::Kind k, size_t off) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->offset = off;
    return e;
  }

  bool atom_start() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == 'E' || c == 'F' || c == 'K' || c == 'q' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
  }

  ExprPtr expr() {
    auto sum = node(Expr::Kind::Sum, pos_);
    int sg = 1;
    if (accept('-')) sg = -1;
    else accept('+');
    sum->kids.push_back(term());
    sum->signs.push_back(sg);
    while (true) {
      if (accept('+')) sg = 1;
      else if (accept('-')) sg = -1;
      else break;
      sum->kids.push_back(term());
      sum->signs.push_back(sg);
    }
    if (sum->kids.size() == 1 && sum->signs[0] == 1) return sum->kids[0];
    return sum;
  }

  ExprPtr term() {
    size_t off = pos_;
    ExprPtr first = factor();
    std::vector<ExprPtr> kids{first};
    while (true) {
      if (accept('*')) {
        kids.push_back(factor());
      } else if (peek('/')) {
        size_t at = pos_;
        ++pos_;
        auto q = node(Expr::Kind::Quotient, at);
        q->kids = {kids.size() == 1 ? kids[0] : product(kids, off), factor()};
        kids = {q};
      } else if (atom_start()) {
        kids.push_back(factor());
      } else {
        break;
      }
    }
    return kids.size() == 1 ? kids[0] : product(kids, off);
  }

  static ExprPtr product(const std::vector<ExprPtr>& kids, size_t off) {
    auto p = node(Expr::Kind::Product, off);
    p->kids = kids;
    return p;
  }

  ExprPtr factor() {
    ExprPtr a = atom();
    skip();
    if (accept('^')) {
      size_t at = pos_;
      if (accept('(')) {
        long n = integer(true);
        if (n < 0) throw ParseError(ParseError::Kind::NegativeDividedPower, at, "negative divided power");
        expect(')');
        auto d = node(Expr::Kind::DividedPower, at);
        d->kids = {a};
        d->n = n;
        return d;
      }
      long n = integer(true);
      auto p = node(Expr::Kind::Power, at);
      p->kids = {a};
      p->n = n;
      return p;
    }
    return a;
  }

  void check_index(long v, long lo, long hi, size_t at) const {
    if (shape_ && (v < lo || v > hi))
      throw ParseError(ParseError::Kind::IndexOutOfShape, at,
                       "index " + std::to_string(v) + " outside [" + std::to_string(lo) + "," + std::to_string(hi) +
                           "]");
  }

  ExprPtr atom() {
    skip();
    size_t off = pos_;
    if (pos_ >= s_.size()) fail("unexpected end of input");
    long N = shape_ ? shape_->rank() : 0;
    if (accept('(')) {
      ExprPtr e = expr();
      expect(')');
      return e;
    }
    if (accept('q')) {
      auto e = node(Expr::Kind::Scalar, off);
      e->scalar = RatFunc::q_pow(1);
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      auto e = node(Expr::Kind::Scalar, off);
      e->scalar = RatFunc(integer(false));
      return e;
    }
    auto g = node(Expr::Kind::Gen, off);
    if (starts("Kinv")) {
      pos_ += 4;
      g->gen = "Kinv";
    } else if (starts("Kb")) {
      pos_ += 2;
      g->gen = "Kb";
    } else if (starts("Ka")) {
      pos_ += 2;
      g->gen = "Ka";
    } else if (starts("K")) {
      pos_ += 1;
      g->gen = "K";
    } else if (starts("E")) {
      pos_ += 1;
      g->gen = "E";
    } else if (starts("F")) {
      pos_ += 1;
      g->gen = "F";
    } else {
      fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    }
    expect('[');
    if (g->gen == "E" || g->gen == "F") {
      size_t at = pos_;
      long i = integer(false);
      expect(',');
      long j = integer(false);
      expect(']');
      check_index(i, 1, N, at);
      check_index(j, 1, N, at);
      if (shape_ && i >= j)
        throw ParseError(ParseError::Kind::IndexOutOfShape, at, "root vector needs i < j");
      g->idx = {i, j};
    } else if (g->gen == "Kb") {
      size_t at = pos_;
      long i = integer(false);
      expect(';');
      long c = integer(true);
      expect(';');
      long t = integer(true);
      expect(']');
      check_index(i, 1, N, at);
      if (t < 0) fail("bracket element needs t >= 0", at);
      g->idx = {i, c, t};
    } else {
      size_t at = pos_;
      long i = integer(false);
      expect(']');
      check_index(i, 1, N, at);
      g->idx = {i};
    }
    return g;
  }
};

bool scalar_value(const Element& e, RatFunc& out) {
  if (e.is_zero()) {
    out = RatFunc();
    return true;
  }
  if (e.size() != 1 || !e.terms().begin()->first.is_identity()) return false;
  out = e.terms().begin()->second;
  return true;
}

Element eval(Algebra& A, const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Scalar:
      return A.scalar(e.scalar);
    case Expr::Kind::Sum: {
      Element r = A.zero();
      for (size_t k = 0; k < e.kids.size(); ++k) {
        Element t = eval(A, *e.kids[k]);
        if (e.signs[k] < 0) r -= t;
        else r += t;
      }
      return r;
    }
    case Expr::Kind::Product: {
      Element r = A.one();
      for (const auto& k : e.kids) r = A.multiply(r, eval(A, *k));
      return r;
    }
    case Expr::Kind::Quotient: {
      Element num = eval(A, *e.kids[0]);
      RatFunc d;
      if (!scalar_value(eval(A, *e.kids[1]), d)) throw DomainError("division by a non-scalar element");
      if (d.is_zero()) throw DomainError("division by zero");
      return num.scaled(d.inverse());
    }
    case Expr::Kind::Power: {
      Element b = eval(A, *e.kids[0]);
      if (e.n >= 0) return A.power(b, static_cast<int>(e.n));
      if (b.size() != 1 || !b.terms().begin()->first.is_k_only())
        throw DomainError("negative power of an element that is not a scalar multiple of a torus monomial");
      const auto& [m, c] = *b.terms().begin();
      Monomial inv = m;
      inv.set_k(Algebra::scaled_vec(m.kvec(), e.n));
      return A.from_monomial(inv, c.pow(static_cast<int>(e.n)));
    }
    case Expr::Kind::DividedPower: {
      const Expr& base = *e.kids[0];
      if (base.kind == Expr::Kind::Gen && (base.gen == "E" || base.gen == "F"))
        return A.divided_power(base.gen == "E" ? GenKind::E : GenKind::F, static_cast<int>(base.idx[0]),
                               static_cast<int>(base.idx[1]), static_cast<int>(e.n));
      Element b = eval(A, base);
      return A.power(b, static_cast<int>(e.n)).scaled(RatFunc(1) / RatFunc(gauss_factorial(e.n)));
    }
    case Expr::Kind::Gen: {
      int i = static_cast<int>(e.idx[0]);
      if (e.gen == "E") return A.E(i, static_cast<int>(e.idx[1]));
      if (e.gen == "F") return A.F(i, static_cast<int>(e.idx[1]));
      if (e.gen == "K") return A.K(i, 1);
      if (e.gen == "Kinv") return A.K(i, -1);
      if (e.gen == "Ka") return A.Kalpha(i);
      return A.kbracket_element(i, e.idx[1], e.idx[2]);
    }
  }
  throw std::logic_error("unknown expression node");
}

const char* kind_text(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Sum:
      return "Sum";
    case Expr::Kind::Product:
      return "Product";
    case Expr::Kind::Quotient:
      return "Quotient";
    case Expr::Kind::Power:
      return "Power";
    case Expr::Kind::DividedPower:
      return "DividedPower";
    case Expr::Kind::Scalar:
      return "Scalar";
    case Expr::Kind::Gen:
      return "Gen";
  }
  return "?";
}

}  // namespace

ExprPtr parse(const std::string& src, const Shape& shape) { return Parser(src, &shape).run(); }

Element evaluate(Algebra& A, const Expr& e) { return eval(A, e); }

Element evaluate(Algebra& A, const std::string& src) { return eval(A, *parse(src, A.shape())); }

nlohmann::json ast_to_json(const Expr& e) {
  nlohmann::json j;
  j["node"] = kind_text(e.kind);
  switch (e.kind) {
    case Expr::Kind::Scalar:
      j["value"] = e.scalar.to_string();
      break;
    case Expr::Kind::Gen:
      j["gen"] = e.gen;
      j["indices"] = e.idx;
      break;
    case Expr::Kind::Power:
    case Expr::Kind::DividedPower:
      j["base"] = ast_to_json(*e.kids[0]);
      j["exponent"] = e.n;
      break;
    case Expr::Kind::Sum: {
      auto arr = nlohmann::json::array();
      for (size_t k = 0; k < e.kids.size(); ++k)
        arr.push_back({{"sign", e.signs[k]}, {"term", ast_to_json(*e.kids[k])}});
      j["terms"] = arr;
      break;
    }
    case Expr::Kind::Product:
    case Expr::Kind::Quotient: {
      auto arr = nlohmann::json::array();
      for (const auto& k : e.kids) arr.push_back(ast_to_json(*k));
      j["factors"] = arr;
      break;
    }
  }
  return j;
}

// ---------------------------------------------------------------- printing

std::string print_monomial(const RootData& rd, const Monomial& m) {
  std::vector<std::string> parts;
  auto pw = [](const std::string& base, int e) { return e == 1 ? base : base + "^" + std::to_string(e); };
  auto name = [&](char X, int r) {
    const Root& rt = rd.root(r);
    return std::string(1, X) + "[" + std::to_string(rt.i) + "," + std::to_string(rt.j) + "]";
  };
  for (int r = rd.num_roots() - 1; r >= 0; --r)
    if (m.f(r) > 0) parts.push_back(pw(name('F', r), m.f(r)));
  for (int j = 0; j < rd.N(); ++j) {
    int k = m.k(j);
    if (k > 0) parts.push_back(pw("K[" + std::to_string(j + 1) + "]", k));
    if (k < 0) parts.push_back(pw("Kinv[" + std::to_string(j + 1) + "]", -k));
  }
  for (int r = 0; r < rd.num_roots(); ++r)
    if (m.e(r) > 0) parts.push_back(pw(name('E', r), m.e(r)));
  if (parts.empty()) return "1";
  std::string s = parts[0];
  for (size_t k = 1; k < parts.size(); ++k) s += "*" + parts[k];
  return s;
}

std::string print_coefficient_factor(const RatFunc& c) {
  // a single term a*q^k needs no parentheses
  bool single = c.den().degree() == 0 &&
                std::count_if(c.num().coeffs().begin(), c.num().coeffs().end(),
                              [](const Rational& x) { return sgn(x) != 0; }) == 1;
  if (!single) {
    auto l = c.to_laurent();
    single = l && l->is_monomial();
  }
  return single ? c.to_string() : "(" + c.to_string() + ")";
}

std::string print_canonical(const RootData& rd, const Element& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : e.terms()) {
    std::string t;
    if (m.is_identity()) t = c.to_string();
    else if (c == RatFunc(1)) t = print_monomial(rd, m);
    else if (c == RatFunc(-1)) t = "-" + print_monomial(rd, m);
    else t = print_coefficient_factor(c) + "*" + print_monomial(rd, m);
    if (out.empty()) out = t;
    else if (t[0] == '-') out += " - " + t.substr(1);
    else out += " + " + t;
  }
  return out;
}

// ---------------------------------------------------------------- JSON

nlohmann::json monomial_to_json(const RootData& rd, const Monomial& m) {
  nlohmann::json j;
  std::vector<int> fd, fpsi, k, epsi, ed;
  for (int r = rd.num_roots() - 1; r >= rd.num_even(); --r) fd.push_back(m.f(r));
  for (int r = rd.num_even() - 1; r >= 0; --r) fpsi.push_back(m.f(r));
  for (int t = 0; t < rd.N(); ++t) k.push_back(m.k(t));
  for (int r = 0; r < rd.num_even(); ++r) epsi.push_back(m.e(r));
  for (int r = rd.num_even(); r < rd.num_roots(); ++r) ed.push_back(m.e(r));
  j["fd"] = fd;
  j["fpsi"] = fpsi;
  j["k"] = k;
  j["epsi"] = epsi;
  j["ed"] = ed;
  return j;
}

Monomial monomial_from_json(const RootData& rd, const nlohmann::json& j) {
  Monomial m(rd.num_roots(), rd.N());
  auto arr = [&](const char* key, size_t n) {
    auto v = j.at(key).get<std::vector<int>>();
    if (v.size() != n) throw DomainError(std::string("array '") + key + "' has wrong length");
    return v;
  };
  size_t ne = rd.num_even(), no = rd.num_odd();
  auto fd = arr("fd", no), fpsi = arr("fpsi", ne), k = arr("k", rd.N()), epsi = arr("epsi", ne), ed = arr("ed", no);
  for (size_t x = 0; x < no; ++x) {
    m.f(rd.num_roots() - 1 - static_cast<int>(x)) = fd[x];
    m.e(rd.num_even() + static_cast<int>(x)) = ed[x];
  }
  for (size_t x = 0; x < ne; ++x) {
    m.f(rd.num_even() - 1 - static_cast<int>(x)) = fpsi[x];
    m.e(static_cast<int>(x)) = epsi[x];
  }
  for (int t = 0; t < rd.N(); ++t) m.k(t) = k[t];
  for (int r = rd.num_even(); r < rd.num_roots(); ++r)
    if (m.f(r) > 1 || m.e(r) > 1 || m.f(r) < 0 || m.e(r) < 0) throw DomainError("odd exponent must be 0 or 1");
  for (int r = 0; r < rd.num_even(); ++r)
    if (m.f(r) < 0 || m.e(r) < 0) throw DomainError("negative exponent");
  return m;
}

nlohmann::json element_to_json(const RootData& rd, const Element& e) {
  nlohmann::json j;
  j["shape"] = {rd.m(), rd.n()};
  auto terms = nlohmann::json::array();
  for (const auto& [m, c] : e.terms()) {
    nlohmann::json t = monomial_to_json(rd, m);
    t["coeff"] = c.to_string();
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

RatFunc parse_scalar(const std::string& src) {
  Shape dummy(1, 1);
  ExprPtr e = parse(src, dummy);
  Algebra A(dummy);
  Element v = evaluate(A, *e);
  if (v.is_zero()) return {};
  if (v.size() != 1 || !v.terms().begin()->first.is_identity()) throw DomainError("not a scalar: " + src);
  return v.terms().begin()->second;
}

Element element_from_json(const RootData& rd, const nlohmann::json& j) {
  auto sh = j.at("shape").get<std::vector<int>>();
  if (sh.size() != 2 || sh[0] != rd.m() || sh[1] != rd.n()) throw DomainError("shape mismatch in element JSON");
  Element e(rd.shape());
  for (const auto& t : j.at("terms")) e.add_term(monomial_from_json(rd, t), parse_scalar(t.at("coeff")));
  return e;
}

}  // namespace qsuper
