#include "qsuper/relations.hpp"

namespace qsuper {

namespace {

std::string ij(int i, int j) { return std::to_string(i) + std::to_string(j); }

RatFunc qi(const RootData& rd, int i, int e) { return RatFunc::q_pow(rd.qsign(i) * e); }

RatFunc sign(bool neg) { return RatFunc(neg ? -1 : 1); }

struct Builder {
  const Algebra& A;
  std::vector<Relation> out;

  Element gen(GenKind k, int i, int j) const { return A.generator(k, i, j); }
  bool odd(int i, int j) const { return A.rd().parity(i, j); }

  void add(std::string name, std::vector<RelTerm> terms) { out.push_back({std::move(name), std::move(terms)}); }
};

}  // namespace

std::vector<Relation> root_vector_relations(const Algebra& A) {
  Builder b{A, {}};
  const RootData& rd = A.rd();
  int N = rd.N();
  for (GenKind k : {GenKind::E, GenKind::F}) {
    const char* X = k == GenKind::E ? "E" : "F";
    for (int i = 1; i <= N; ++i)
      for (int j = i + 1; j <= N; ++j) {
        if (b.odd(i, j)) b.add(std::string("odd square ") + X + ij(i, j), {{1, {b.gen(k, i, j), b.gen(k, i, j)}}});
        for (int s = 1; s <= N; ++s)
          for (int t = s + 1; t <= N; ++t) {
            bool nested = i < s && t < j;
            bool disjoint = t < i;
            if (!nested && !disjoint) continue;
            b.add(std::string("supercommute ") + X + ij(i, j) + " " + X + ij(s, t),
                  {{1, {b.gen(k, i, j), b.gen(k, s, t)}},
                   {-sign(b.odd(i, j) && b.odd(s, t)), {b.gen(k, s, t), b.gen(k, i, j)}}});
          }
      }
    for (int t = 1; t <= N; ++t)
      for (int a = t + 1; a <= N; ++a)
        for (int c = a + 1; c <= N; ++c) {
          // same row: X_ta X_tc = (-1)^{|X_ta|} q_t X_tc X_ta
          b.add(std::string("same row ") + X + ij(t, a) + " " + X + ij(t, c),
                {{1, {b.gen(k, t, a), b.gen(k, t, c)}},
                 {-sign(b.odd(t, a)) * qi(rd, t, 1), {b.gen(k, t, c), b.gen(k, t, a)}}});
        }
    for (int a = 1; a <= N; ++a)
      for (int c = a + 1; c <= N; ++c)
        for (int t = c + 1; t <= N; ++t) {
          // same column: X_ct X_at = (-1)^{|X_ct|} q_t^-1 X_at X_ct
          b.add(std::string("same column ") + X + ij(c, t) + " " + X + ij(a, t),
                {{1, {b.gen(k, c, t), b.gen(k, a, t)}},
                 {-sign(b.odd(c, t)) * qi(rd, t, -1), {b.gen(k, a, t), b.gen(k, c, t)}}});
        }
    for (int i = 1; i <= N; ++i)
      for (int c = i + 1; c <= N; ++c)
        for (int j = c + 1; j <= N; ++j) {
          std::string name = std::string("composite ") + X + ij(i, j) + " through " + std::to_string(c);
          if (k == GenKind::E)
            b.add(name, {{1, {b.gen(k, i, j)}},
                         {-1, {b.gen(k, i, c), b.gen(k, c, j)}},
                         {qi(rd, c, -1), {b.gen(k, c, j), b.gen(k, i, c)}}});
          else
            b.add(name, {{1, {b.gen(k, i, j)}},
                         {qi(rd, c, 1), {b.gen(k, i, c), b.gen(k, c, j)}},
                         {-1, {b.gen(k, c, j), b.gen(k, i, c)}}});
        }
  }
  for (int i = 1; i <= N; ++i) {
    b.add("torus inverse " + std::to_string(i), {{1, {A.Kalpha(i), A.Kalpha(i, -1)}}, {-1, {A.one()}}});
    for (int j = i + 1; j <= N; ++j)
      b.add("torus commute " + ij(i, j), {{1, {A.Kalpha(i), A.Kalpha(j)}}, {-1, {A.Kalpha(j), A.Kalpha(i)}}});
  }
  for (int i = 1; i < N; ++i)
    for (int j = 1; j < N; ++j) {
      bool both_odd = i == rd.m() && j == rd.m();
      std::vector<RelTerm> t{{1, {A.Esimple(i), A.Fsimple(j)}}, {-sign(both_odd), {A.Fsimple(j), A.Esimple(i)}}};
      if (i == j) {
        RatFunc inv = RatFunc(1) / (qi(rd, i, 1) - qi(rd, i, -1));
        t.push_back({-inv, {A.Kalpha(i)}});
        t.push_back({inv, {A.Kalpha(i, -1)}});
      }
      b.add("cross E" + ij(i, i + 1) + " F" + ij(j, j + 1), std::move(t));
    }
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j < N; ++j) {
      int a = rd.cartan(i, j);
      b.add("torus E K" + std::to_string(i) + " E" + ij(j, j + 1),
            {{1, {A.Kalpha(i), A.Esimple(j)}}, {-qi(rd, i, a), {A.Esimple(j), A.Kalpha(i)}}});
      b.add("torus F K" + std::to_string(i) + " F" + ij(j, j + 1),
            {{1, {A.Kalpha(i), A.Fsimple(j)}}, {-qi(rd, i, -a), {A.Fsimple(j), A.Kalpha(i)}}});
    }
  return b.out;
}

Relation ef_cross_sign_by_row(const Algebra& A, int i, int j) {
  const RootData& rd = A.rd();
  std::vector<RelTerm> t{{1, {A.Esimple(i), A.Fsimple(j)}}, {-sign(i == rd.m()), {A.Fsimple(j), A.Esimple(i)}}};
  if (i == j) {
    RatFunc inv = RatFunc(1) / (qi(rd, i, 1) - qi(rd, i, -1));
    t.push_back({-inv, {A.Kalpha(i)}});
    t.push_back({inv, {A.Kalpha(i, -1)}});
  }
  return {"cross by row E" + ij(i, i + 1) + " F" + ij(j, j + 1), std::move(t)};
}

std::vector<Relation> serre_relations(const Algebra& A) {
  Builder b{A, {}};
  const RootData& rd = A.rd();
  int N = rd.N(), m = rd.m();
  RatFunc qq = RatFunc::q_pow(1) + RatFunc::q_pow(-1);
  for (GenKind k : {GenKind::E, GenKind::F}) {
    const char* X = k == GenKind::E ? "E" : "F";
    auto s = [&](int i) { return b.gen(k, i, i + 1); };
    for (int i = 1; i < N; ++i)
      for (int j : {i - 1, i + 1}) {
        if (i == m || j < 1 || j >= N) continue;
        b.add(std::string("serre ") + X + std::to_string(i) + " " + X + std::to_string(j),
              {{1, {s(i), s(i), s(j)}}, {-qq, {s(i), s(j), s(i)}}, {1, {s(j), s(i), s(i)}}});
      }
    if (m >= 2 && N - m >= 2) {
      Element big = b.gen(k, m - 1, m + 2);
      b.add(std::string("odd serre bracket ") + X, {{1, {big, s(m)}}, {1, {s(m), big}}});
      b.add(std::string("odd serre expanded ") + X,
            {{1, {s(m - 1), s(m), s(m + 1), s(m)}},
             {1, {s(m), s(m - 1), s(m), s(m + 1)}},
             {1, {s(m + 1), s(m), s(m - 1), s(m)}},
             {1, {s(m), s(m + 1), s(m), s(m - 1)}},
             {-qq, {s(m), s(m - 1), s(m + 1), s(m)}}});
    }
  }
  return b.out;
}

std::vector<Relation> all_relations(const Algebra& A) {
  auto r = root_vector_relations(A);
  auto s = serre_relations(A);
  r.insert(r.end(), s.begin(), s.end());
  return r;
}

Element evaluate(Algebra& A, const Relation& r) {
  Element sum = A.zero();
  for (const auto& t : r.terms) sum += A.product(t.factors).scaled(t.coeff);
  return sum;
}

}  // namespace qsuper

namespace qsuper {

namespace {

bool power_ok(const RootData& rd, int i, int j, int n) { return n <= 1 || !rd.parity(i, j); }

RatFunc qbin(int m, int n, int sign) { return RatFunc(gauss_binomial(m, n, sign)); }

}  // namespace

std::vector<Relation> divided_power_identities(const Algebra& A, int max_pow) {
  const RootData& rd = A.rd();
  int NN = rd.N();
  std::vector<Relation> out;
  auto E = [&](int i, int j, int n) { return A.divided_power(GenKind::E, i, j, n); };
  auto tag = [](const std::string& base, std::initializer_list<int> v) {
    std::string s = base;
    for (int x : v) s += " " + std::to_string(x);
    return s;
  };
  for (int i = 1; i <= NN; ++i)
    for (int c = i + 1; c <= NN; ++c)
      for (int j = c + 1; j <= NN; ++j) {
        int sc = rd.qsign(c);
        for (int N = 0; N <= max_pow; ++N) {
          if (power_ok(rd, i, j, N) && power_ok(rd, i, c, N) && power_ok(rd, c, j, N)) {
            // E_ij^(N) = sum_k (-1)^k q_c^-k E_cj^(k) E_ic^(N) E_cj^(N-k)
            Relation r{tag("composite divided left", {i, c, j, N}), {{-1, {E(i, j, N)}}}};
            Relation r3{tag("composite divided right", {i, c, j, N}), {{-1, {E(i, j, N)}}}};
            for (int k = 0; k <= N; ++k) {
              RatFunc co = RatFunc(k % 2 ? -1 : 1) * RatFunc::q_pow(-sc * k);
              r.terms.push_back({co, {E(c, j, k), E(i, c, N), E(c, j, N - k)}});
              r3.terms.push_back({co, {E(i, c, N - k), E(c, j, N), E(i, c, k)}});
            }
            out.push_back(std::move(r));
            out.push_back(std::move(r3));
          }
          for (int M = 0; M <= max_pow; ++M) {
            if (power_ok(rd, i, c, M + N) && power_ok(rd, c, j, M + N))
              out.push_back({tag("middle exchange", {i, c, j, M, N}),
                             {{1, {E(i, c, M), E(c, j, M + N), E(i, c, N)}},
                              {-1, {E(c, j, N), E(i, c, M + N), E(c, j, M)}}}});
            if (power_ok(rd, c, j, N) && power_ok(rd, i, c, M)) {
              // E_cj^(N) E_ic^(M) = sum_k (-1)^k q_c^{k+(N-k)(M-k)} E_ic^(M-k) E_ij^(k) E_cj^(N-k)
              Relation r4{tag("divided straighten", {i, c, j, N, M}), {{1, {E(c, j, N), E(i, c, M)}}}};
              for (int k = 0; k <= std::min(N, M); ++k) {
                if (!power_ok(rd, i, j, k)) continue;
                RatFunc co = RatFunc(k % 2 ? 1 : -1) * RatFunc::q_pow(sc * (k + (N - k) * (M - k)));
                r4.terms.push_back({co, {E(i, c, M - k), E(i, j, k), E(c, j, N - k)}});
              }
              out.push_back(std::move(r4));
              // E_ic^(N) E_cj^(M) = sum_k q_c^{-(M-k)(N-k)} E_cj^(M-k) E_ij^(k) E_ic^(N-k)
              Relation r5{tag("divided merge", {i, c, j, M, N}), {{1, {E(i, c, M), E(c, j, N)}}}};
              for (int k = 0; k <= std::min(N, M); ++k) {
                if (!power_ok(rd, i, j, k)) continue;
                r5.terms.push_back(
                    {-RatFunc::q_pow(-sc * (M - k) * (N - k)), {E(c, j, N - k), E(i, j, k), E(i, c, M - k)}});
              }
              out.push_back(std::move(r5));
            }
          }
        }
      }
  // crossing bracket, and pairwise laws of divided powers
  for (int i = 1; i <= NN; ++i)
    for (int j = i + 1; j <= NN; ++j)
      for (int s = 1; s <= NN; ++s)
        for (int t = s + 1; t <= NN; ++t) {
          bool oo = rd.parity(i, j) && rd.parity(s, t);
          if (i < s && s < j && j < t) {
            RatFunc k = RatFunc::q_pow(rd.qsign(j)) - RatFunc::q_pow(-rd.qsign(j));
            out.push_back({tag("crossing bracket", {i, j, s, t}),
                           {{1, {E(i, j, 1), E(s, t, 1)}}, {-sign(oo), {E(s, t, 1), E(i, j, 1)}},
                            {-k, {E(i, t, 1), E(s, j, 1)}}}});
          }
          for (int N = 1; N <= max_pow; ++N)
            for (int M = 1; M <= max_pow; ++M) {
              if (!power_ok(rd, i, j, N) || !power_ok(rd, s, t, M)) continue;
              if ((i < s && t < j) || t < i)
                out.push_back({tag("divided supercommute", {i, j, s, t, N, M}),
                               {{1, {E(i, j, N), E(s, t, M)}}, {-sign(oo && (N * M) % 2), {E(s, t, M), E(i, j, N)}}}});
              if (i == s && j < t) {
                RatFunc co = (sign(rd.parity(i, j)) * RatFunc::q_pow(rd.qsign(i))).pow(N * M);
                out.push_back({tag("divided same row", {i, j, t, N, M}),
                               {{1, {E(i, j, N), E(s, t, M)}}, {-co, {E(s, t, M), E(i, j, N)}}}});
              }
              if (j == t && s < i) {
                RatFunc co = (sign(rd.parity(i, j)) * RatFunc::q_pow(-rd.qsign(j))).pow(N * M);
                out.push_back({tag("divided same column", {s, i, j, N, M}),
                               {{1, {E(i, j, N), E(s, t, M)}}, {-co, {E(s, t, M), E(i, j, N)}}}});
              }
              if (i == s && j == t && power_ok(rd, i, j, N + M))
                out.push_back({tag("divided merge same", {i, j, N, M}),
                               {{1, {E(i, j, N), E(i, j, M)}}, {-qbin(N + M, N, 1), {E(i, j, N + M)}}}});
            }
        }
  return out;
}

std::vector<Relation> kac_formula_identities(const Algebra& A, int max_pow) {
  const RootData& rd = A.rd();
  std::vector<Relation> out;
  for (int i = 1; i < rd.N(); ++i) {
    int cap = i == rd.m() ? 1 : max_pow;
    for (int N = 0; N <= cap; ++N)
      for (int M = 0; M <= cap; ++M) {
        Relation r{"kac formula " + std::to_string(i) + " " + std::to_string(N) + " " + std::to_string(M),
                   {{1, {A.divided_power(GenKind::E, i, i + 1, N), A.divided_power(GenKind::F, i, i + 1, M)}}}};
        for (int t = 0; t <= std::min(N, M); ++t) {
          bool neg = i == rd.m() && ((N * M * (t - 1)) % 2 != 0);
          r.terms.push_back({-sign(neg),
                             {A.divided_power(GenKind::F, i, i + 1, M - t), A.kbracket_element(i, 2 * t - N - M, t),
                              A.divided_power(GenKind::E, i, i + 1, N - t)}});
        }
        out.push_back(std::move(r));
      }
    for (int j = 1; j < rd.N(); ++j) {
      if (i == j) continue;
      for (int M = 1; M <= max_pow; ++M)
        for (int N = 1; N <= max_pow; ++N) {
          if ((i == rd.m() && M > 1) || (j == rd.m() && N > 1)) continue;
          Element e = A.divided_power(GenKind::E, i, i + 1, M), f = A.divided_power(GenKind::F, j, j + 1, N);
          out.push_back({"divided cross " + std::to_string(i) + " " + std::to_string(j), {{1, {e, f}}, {-1, {f, e}}}});
        }
    }
  }
  return out;
}

std::vector<Relation> bracket_shift_identities(const Algebra& A, int max_pow) {
  const RootData& rd = A.rd();
  std::vector<Relation> out;
  for (int i = 1; i <= rd.N(); ++i)
    for (int j = 1; j < rd.N(); ++j) {
      int a = rd.cartan(i, j);
      for (int l = 0; l <= (j == rd.m() ? 1 : max_pow); ++l)
        for (int c = -1; c <= 1; ++c)
          for (int t = 0; t <= 2; ++t) {
            std::string nm = std::to_string(i) + " " + std::to_string(j) + " " + std::to_string(l) + " " +
                             std::to_string(c) + " " + std::to_string(t);
            Element e = A.divided_power(GenKind::E, j, j + 1, l), f = A.divided_power(GenKind::F, j, j + 1, l);
            out.push_back({"bracket shift E " + nm,
                           {{1, {A.kbracket_element(i, c, t), e}}, {-1, {e, A.kbracket_element(i, c + l * a, t)}}}});
            out.push_back({"bracket shift F " + nm,
                           {{1, {A.kbracket_element(i, c, t), f}}, {-1, {f, A.kbracket_element(i, c - l * a, t)}}}});
          }
      for (int N = 0; N <= (j == rd.m() ? 1 : max_pow); ++N)
        for (int eps : {1, -1}) {
          std::string nm = std::to_string(i) + " " + std::to_string(j) + " " + std::to_string(N) + " " +
                           std::to_string(eps);
          Element e = A.divided_power(GenKind::E, j, j + 1, N), f = A.divided_power(GenKind::F, j, j + 1, N);
          RatFunc up = RatFunc::q_pow(rd.qsign(i) * eps * N * a);
          out.push_back({"torus divided E " + nm, {{1, {A.Kalpha(i, eps), e}}, {-up, {e, A.Kalpha(i, eps)}}}});
          out.push_back(
              {"torus divided F " + nm, {{1, {A.Kalpha(i, eps), f}}, {-up.inverse(), {f, A.Kalpha(i, eps)}}}});
        }
    }
  return out;
}

}  // namespace qsuper
