#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qsuper/braid.hpp"
#include "qsuper/expr.hpp"
#include "qsuper/hopf.hpp"
#include "qsuper/relations.hpp"
#include "qsuper/rootofunity.hpp"

using namespace qsuper;
using json = nlohmann::json;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitSelftest = 4;

struct Globals {
  std::string shape;
  std::string emit = "json";
  long seed = 1;
  int trials = 50;
  int max_degree = 4;
  int truncation_depth = 4;
};

IntVec parse_list(const std::string& s, const char* what) {
  IntVec v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      long x = std::stol(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      v.push_back(x);
    } catch (const std::logic_error&) {
      throw CLI::ValidationError(what, "expected a comma separated integer list, got '" + s + "'");
    }
  }
  return v;
}

Shape parse_shape(const std::string& s) {
  if (s.empty()) throw CLI::RequiredError("--shape");
  IntVec v = parse_list(s, "--shape");
  if (v.size() != 2) throw CLI::ValidationError("--shape", "expected m,n");
  return Shape(static_cast<int>(v[0]), static_cast<int>(v[1]));
}

json vec_json(const IntVec& v) { return json(std::vector<long>(v.begin(), v.end())); }

std::string vec_text(const IntVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

json envelope(const Shape& s, const std::string& command) {
  return json{{"schema", 1}, {"command", command}, {"shape", {s.m, s.n}}};
}

json tensor_json(const RootData& rd, const TensorElement& t) {
  json terms = json::array();
  for (const auto& [key, c] : t.terms()) {
    json legs = json::array();
    for (const auto& m : key) legs.push_back(monomial_to_json(rd, m));
    terms.push_back({{"legs", legs}, {"coeff", c.to_string()}});
  }
  return terms;
}

std::string tensor_text(const RootData& rd, const TensorElement& t) {
  if (t.is_zero()) return "0";
  std::string s;
  for (const auto& [key, c] : t.terms()) {
    if (!s.empty()) s += "\n";
    s += "(" + c.to_string() + ")";
    for (const auto& m : key) s += " [" + print_monomial(rd, m) + "]";
  }
  return s;
}

json character_json(const Character& ch) {
  json out = json::array();
  for (const auto& [z, k] : ch) out.push_back({{"z", vec_json(z)}, {"mult", k}});
  return out;
}

std::string character_text(const Character& ch) {
  std::string s;
  for (const auto& [z, k] : ch) s += "z=" + vec_text(z) + " mult " + std::to_string(k) + "\n";
  return s;
}

template <class F>
json module_json(const WeightModule<F>& M, bool with_basis) {
  json j{{"dim", M.dim()}, {"character", character_json(character(M))}};
  if (M.top() >= 0) j["top_z"] = vec_json(M.z_weight(M.top()));
  if (with_basis) {
    json b = json::array();
    for (size_t i = 0; i < M.dim(); ++i)
      b.push_back({{"label", M.label(static_cast<int>(i))},
                   {"z", vec_json(M.z_weight(static_cast<int>(i)))},
                   {"parity", M.parity(static_cast<int>(i))}});
    j["basis"] = b;
  }
  return j;
}

void emit(const Globals& g, const json& j, const std::string& text) {
  if (g.emit == "text") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

// Weight from --lambda (epsilon coordinates) or --z.
IntVec weight_arg(const RootData& rd, const std::string& lambda, const std::string& z) {
  if (!lambda.empty() && !z.empty()) throw CLI::ValidationError("--lambda", "give --lambda or --z, not both");
  if (!lambda.empty()) {
    IntVec v = parse_list(lambda, "--lambda");
    rd.check_weight(v);
    return v;
  }
  if (!z.empty()) return rd.z_to_weight(parse_list(z, "--z"));
  throw CLI::RequiredError("--lambda or --z");
}

// ---------------------------------------------------------------- selftest

Monomial random_monomial(const Algebra& A, std::mt19937& g, int atoms) {
  const RootData& rd = A.rd();
  std::uniform_int_distribution<int> root(0, rd.num_roots() - 1), side(0, 1), kx(-2, 2);
  Monomial m = A.identity_monomial();
  for (int k = 0; k < atoms; ++k) {
    int r = root(g);
    int& slot = side(g) ? m.e(r) : m.f(r);
    slot = rd.root(r).odd ? 1 : slot + 1;
  }
  for (int j = 0; j < rd.N(); ++j) m.k(j) = kx(g);
  return m;
}

struct Tally {
  json groups = json::object();
  long passed = 0, failed = 0;
  void add(const std::string& group, bool ok) {
    auto& e = groups[group];
    if (e.is_null()) e = {{"passed", 0}, {"failed", 0}};
    e[ok ? "passed" : "failed"] = e[ok ? "passed" : "failed"].get<long>() + 1;
    (ok ? passed : failed)++;
  }
};

Tally run_selftest(const Shape& s, const Globals& g) {
  Algebra A(s);
  Hopf H(A);
  Tally t;
  std::mt19937 rng(static_cast<unsigned>(g.seed));
  std::uniform_int_distribution<int> deg(0, std::max(0, g.max_degree / 3));
  for (const auto& rel : all_relations(A)) t.add("relations", evaluate(A, rel).is_zero());
  for (int k = 0; k < g.trials; ++k) {
    Element a = A.from_monomial(random_monomial(A, rng, deg(rng)));
    Element b = A.from_monomial(random_monomial(A, rng, deg(rng)));
    Element c = A.from_monomial(random_monomial(A, rng, deg(rng)));
    t.add("associativity", A.multiply(A.multiply(a, b), c) == A.multiply(a, A.multiply(b, c)));
    if (k % 5 == 0) t.add("coproduct", H.delta(A.multiply(a, b)) == H.tensor_multiply(H.delta(a), H.delta(b)));
  }
  for (int i = 1; i < A.N(); ++i) {
    for (GenKind kind : {GenKind::E, GenKind::F}) {
      Element x = A.generator(kind, i, i + 1);
      t.add("antipode", H.multiply_legs(H.antipode_on_leg(H.delta(x), 0)) == A.zero());
      if (i != A.rd().m()) t.add("braid", braid_t_inv(A, i, braid_t(A, i, x)) == x);
    }
  }
  // free-module action against straightened products
  IntVec lambda(s.m + s.n, 0);
  lambda[0] = 2;
  WeightModule<RatFunc> M = verma_model(s, lambda, g.truncation_depth);
  for (int k = 0; k < g.trials; ++k) {
    Monomial ma = random_monomial(A, rng, 1), mb = random_monomial(A, rng, 1);
    int h = 0;
    for (int r = 0; r < A.R(); ++r) h += (ma.f(r) + mb.f(r)) * (A.rd().root(r).j - A.rd().root(r).i);
    std::vector<int> ok;
    for (size_t i = 0; i < M.dim(); ++i)
      if (word_degree(M, static_cast<int>(i)) + h <= g.truncation_depth) ok.push_back(static_cast<int>(i));
    if (ok.empty()) continue;
    SVec<RatFunc> v = M.unit(ok[rng() % ok.size()]);
    Element a = A.from_monomial(ma), b = A.from_monomial(mb);
    t.add("module-oracle", act(M, A.multiply(a, b), v) == act(M, a, act(M, b, v)));
  }
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the quantum supergroup U_q(gl(m|n))", "qsuper"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "flat key = value file (shape, seed, truncation_depth, max_degree, ...)");
  Globals g;
  // the config reader splits "2,1" into two values; join them back
  app.add_option("--shape", g.shape, "m,n")->delimiter(',')->multi_option_policy(CLI::MultiOptionPolicy::Join);
  app.add_option("--emit", g.emit, "json, text or ast")->check(CLI::IsMember({"json", "text", "ast"}));
  app.add_option("--seed", g.seed, "random seed for selftest");
  app.add_option("--trials", g.trials, "random trials for selftest");
  app.add_option("--max_degree,--max-degree", g.max_degree, "bound on random monomial degree");
  app.add_option("--truncation_depth,--truncation-depth", g.truncation_depth, "word depth of the free-module model");

  std::string expr1, expr2, lambda, zarg, lambda2, z2arg, module_kind = "simple";
  int node = 0, order = 0;
  bool inverse = false, counts = false, basis = false;

  auto* nf = app.add_subcommand("nf", "normal form of an expression");
  nf->add_option("expr", expr1)->required();
  auto* mul = app.add_subcommand("mul", "product of two expressions");
  mul->add_option("lhs", expr1)->required();
  mul->add_option("rhs", expr2)->required();
  auto* delta = app.add_subcommand("delta", "coproduct");
  delta->add_option("expr", expr1)->required();
  auto* antipode = app.add_subcommand("antipode", "antipode");
  antipode->add_option("expr", expr1)->required();
  auto* counit = app.add_subcommand("counit", "counit");
  counit->add_option("expr", expr1)->required();
  auto* omega = app.add_subcommand("omega", "the anti-automorphism Omega");
  omega->add_option("expr", expr1)->required();
  auto* braid = app.add_subcommand("braid", "braid operator T_{alpha_i}");
  braid->add_option("-i", node, "even node")->required();
  braid->add_flag("--inverse", inverse);
  braid->add_option("expr", expr1)->required();
  auto* typical = app.add_subcommand("typical", "typicality of a weight");
  auto* kac = app.add_subcommand("kac", "Kac module");
  auto* simple = app.add_subcommand("simple", "simple module of highest weight");
  auto* chr = app.add_subcommand("char", "character of a module");
  auto* tensor = app.add_subcommand("tensor", "character of a tensor product of simple modules");
  for (auto* sc : {typical, kac, simple, chr, tensor}) {
    sc->add_option("--lambda", lambda, "epsilon coordinates");
    sc->add_option("--z", zarg, "z coordinates");
  }
  for (auto* sc : {kac, simple}) sc->add_flag("--basis", basis, "list basis vectors");
  for (auto* sc : {simple, chr, tensor}) sc->add_option("--at-root", order, "odd order l of eta");
  chr->add_option("--module", module_kind)->check(CLI::IsMember({"kac", "simple", "even"}));
  tensor->add_option("--lambda2", lambda2);
  tensor->add_option("--z2", z2arg);
  auto* spec = app.add_subcommand("specialize", "specialize an element at eta");
  spec->add_option("-l", order)->required();
  spec->add_option("expr", expr1)->required();
  auto* small = app.add_subcommand("smallgroup", "basis sizes of the small quantum groups");
  small->add_flag("--counts", counts);
  small->add_option("-l", order)->required();
  auto* classical = app.add_subcommand("classical-check", "classical presentation at q = 1");
  auto* decomp = app.add_subcommand("decompose-z", "z = z' + l z''");
  decomp->add_option("--z", zarg)->required();
  decomp->add_option("--l", order)->required();
  auto* selftest = app.add_subcommand("selftest", "randomized self-test battery");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    const Shape shape = parse_shape(g.shape);
    Algebra A(shape);
    const RootData& rd = A.rd();
    auto element_out = [&](const std::string& cmd, const Element& e) {
      json j = envelope(shape, cmd);
      j["element"] = element_to_json(rd, e);
      j["text"] = print_canonical(rd, e);
      emit(g, j, print_canonical(rd, e));
    };
    auto parsed = [&](const std::string& src) {
      ExprPtr p = parse(src, shape);
      return evaluate(A, *p);
    };

    if (g.emit == "ast") {
      if (expr1.empty()) throw CLI::ValidationError("--emit", "ast output needs an expression argument");
      json j = envelope(shape, "ast");
      j["ast"] = ast_to_json(*parse(expr1, shape));
      std::cout << j.dump(2) << '\n';
      return 0;
    }

    if (*nf) {
      element_out("nf", parsed(expr1));
    } else if (*mul) {
      element_out("mul", A.multiply(parsed(expr1), parsed(expr2)));
    } else if (*delta) {
      Hopf H(A);
      TensorElement t = H.delta(parsed(expr1));
      json j = envelope(shape, "delta");
      j["tensor"] = tensor_json(rd, t);
      emit(g, j, tensor_text(rd, t));
    } else if (*antipode) {
      Hopf H(A);
      element_out("antipode", H.antipode(parsed(expr1)));
    } else if (*counit) {
      Hopf H(A);
      RatFunc c = H.counit(parsed(expr1));
      json j = envelope(shape, "counit");
      j["value"] = c.to_string();
      emit(g, j, c.to_string());
    } else if (*omega) {
      element_out("omega", A.omega(parsed(expr1)));
    } else if (*braid) {
      Element x = parsed(expr1);
      element_out("braid", inverse ? braid_t_inv(A, node, x) : braid_t(A, node, x));
    } else if (*typical) {
      IntVec l = weight_arg(rd, lambda, zarg);
      json j = envelope(shape, "typical");
      j["lambda"] = vec_json(l);
      j["typical"] = rd.is_typical(l);
      j["P"] = rd.p_factor(l);
      emit(g, j, std::string(rd.is_typical(l) ? "typical" : "atypical") + " P=" + std::to_string(rd.p_factor(l)));
    } else if (*kac || *simple || *chr) {
      IntVec l = weight_arg(rd, lambda, zarg);
      std::string kind = *kac ? "kac" : *simple ? "simple" : module_kind;
      json j = envelope(shape, *chr ? "char" : kind);
      j["lambda"] = vec_json(l);
      j["z"] = vec_json(rd.weight_to_z(l));
      json body;
      if (order != 0 && kind == "simple") {
        j["at_root"] = order;
        body = module_json(simple_at_root(A, rd.weight_to_z(l), order), basis);
      } else if (order != 0) {
        throw DomainError("--at-root applies to simple modules only");
      } else if (kind == "kac") {
        body = module_json(kac_module(A, l), basis);
      } else if (kind == "even") {
        body = module_json(simple_even_module(A, l), basis);
      } else {
        body = module_json(simple_head(kac_module(A, l)), basis);
      }
      if (*chr) {
        j["character"] = body["character"];
        j["dim"] = body["dim"];
      } else {
        j["module"] = body;
      }
      std::string text = "dim " + body["dim"].dump() + "\n";
      for (const auto& e : body["character"]) text += "z=" + e["z"].dump() + " mult " + e["mult"].dump() + "\n";
      emit(g, j, text);
    } else if (*tensor) {
      IntVec l1 = weight_arg(rd, lambda, zarg), l2 = weight_arg(rd, lambda2, z2arg);
      json j = envelope(shape, "tensor");
      Character ch;
      Character c1, c2;
      if (order != 0) {
        auto M = simple_at_root(A, rd.weight_to_z(l1), order), N = simple_at_root(A, rd.weight_to_z(l2), order);
        c1 = character(M);
        c2 = character(N);
        ch = character(tensor_module(M, N));
        j["at_root"] = order;
      } else {
        auto M = simple_head(kac_module(A, l1)), N = simple_head(kac_module(A, l2));
        c1 = character(M);
        c2 = character(N);
        ch = character(tensor_module(M, N));
      }
      j["character"] = character_json(ch);
      j["matches_convolution"] = ch == convolve(c1, c2);
      emit(g, j, character_text(ch));
    } else if (*spec) {
      SpecializedElement s = specialize_element(A, parsed(expr1), order);
      json terms = json::array();
      std::string text;
      for (const auto& [k, c] : s.terms) {
        terms.push_back({{"f", k.f}, {"delta", k.delta}, {"t", k.t}, {"e", k.e}, {"coeff", c.to_string()}});
        text += c.to_string() + " at f=" + json(k.f).dump() + " delta=" + json(k.delta).dump() +
                " t=" + json(k.t).dump() + " e=" + json(k.e).dump() + "\n";
      }
      json j = envelope(shape, "specialize");
      j["l"] = order;
      j["terms"] = terms;
      emit(g, j, s.is_zero() ? "0" : text);
    } else if (*small) {
      SmallGroupCounts c = small_group_counts(shape, order);
      json j = envelope(shape, "smallgroup");
      j["l"] = order;
      j["counts"] = {{"u_plus", c.u_plus}, {"u_zero", c.u_zero}, {"u", c.u}, {"tilde_zero", c.tilde_zero},
                     {"tilde_u", c.tilde_u}};
      emit(g, j,
           "u+ " + std::to_string(c.u_plus) + "\nu0 " + std::to_string(c.u_zero) + "\nu " + std::to_string(c.u) +
               "\nu~0 " + std::to_string(c.tilde_zero) + "\nu~ " + std::to_string(c.tilde_u));
    } else if (*classical) {
      json inst = json::array();
      std::string text;
      bool all = true;
      for (const auto& c : classical_limit_check(A)) {
        inst.push_back({{"family", c.family}, {"name", c.name}, {"holds", c.holds}, {"counted", c.counted}});
        text += c.family + " " + c.name + (c.holds ? " holds" : " fails") + (c.counted ? "" : " (diagnostic)") + "\n";
        if (c.counted && !c.holds) all = false;
      }
      json j = envelope(shape, "classical-check");
      j["instances"] = inst;
      j["all_hold"] = all;
      emit(g, j, text);
    } else if (*decomp) {
      require_odd_order(order);
      auto [a, b] = rd.frobenius_decompose(parse_list(zarg, "--z"), order);
      json j = envelope(shape, "decompose-z");
      j["l"] = order;
      j["z1"] = vec_json(a);
      j["z2"] = vec_json(b);
      emit(g, j, "z' = " + vec_text(a) + "\nz'' = " + vec_text(b));
    } else if (*selftest) {
      Tally t = run_selftest(shape, g);
      json j = envelope(shape, "selftest");
      j["seed"] = g.seed;
      j["trials"] = g.trials;
      j["groups"] = t.groups;
      j["passed"] = t.passed;
      j["failed"] = t.failed;
      emit(g, j, "passed " + std::to_string(t.passed) + " failed " + std::to_string(t.failed));
      return t.failed == 0 ? 0 : kExitSelftest;
    }
    return 0;
  } catch (const qsuper::ParseError& e) {
    json j{{"schema", 1}, {"error", {{"kind", e.kind_name()}, {"offset", e.offset}, {"message", e.what()}}}};
    std::cout << j.dump(2) << '\n';
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::domain_error& e) {
    json j{{"schema", 1}, {"error", {{"kind", "domain"}, {"message", e.what()}}}};
    std::cout << j.dump(2) << '\n';
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
