#include "qsuper/hopf.hpp"

namespace qsuper {

// ---------------------------------------------------------------- TensorElement

void TensorElement::check(const TensorElement& o) const {
  if (shape_ != o.shape_ || arity_ != o.arity_) throw DomainError("tensor elements of different shape or arity");
}

void TensorElement::add_term(const Key& k, const RatFunc& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

RatFunc TensorElement::coeff(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? RatFunc() : it->second;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  check(o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
  TensorElement r = *this;
  r += o;
  return r;
}

TensorElement TensorElement::operator-(const TensorElement& o) const { return *this + o.scaled(RatFunc(-1)); }

TensorElement TensorElement::scaled(const RatFunc& c) const {
  TensorElement r(shape_, arity_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

// ---------------------------------------------------------------- Hopf

namespace {

// expand prod_i (sum over legs[i]) into keys
void expand(const std::vector<const Element*>& legs, size_t pos, TensorElement::Key& key, const RatFunc& c,
            TensorElement& out) {
  if (pos == legs.size()) {
    out.add_term(key, c);
    return;
  }
  for (const auto& [m, v] : legs[pos]->terms()) {
    key[pos] = m;
    expand(legs, pos + 1, key, c * v, out);
  }
}

}  // namespace

TensorElement Hopf::tensor(const std::vector<Element>& legs) const {
  TensorElement out(A_.shape(), static_cast<int>(legs.size()));
  std::vector<const Element*> ptr;
  for (const auto& e : legs) ptr.push_back(&e);
  TensorElement::Key key(legs.size());
  expand(ptr, 0, key, RatFunc(1), out);
  return out;
}

TensorElement Hopf::tensor_multiply(const TensorElement& x, const TensorElement& y) {
  if (x.shape() != y.shape() || x.arity() != y.arity()) throw DomainError("tensor elements of different shape or arity");
  const int k = x.arity();
  TensorElement out(x.shape(), k);
  std::vector<Element> prods(k);
  std::vector<const Element*> ptr(k);
  TensorElement::Key key(k);
  for (const auto& [a, ca] : x.terms()) {
    std::vector<int> pa(k);
    for (int i = 0; i < k; ++i) pa[i] = A_.parity(a[i]);
    for (const auto& [b, cb] : y.terms()) {
      // b_j moves past a_i for every i > j
      int sign = 0;
      for (int j = 0; j < k; ++j) {
        int pb = A_.parity(b[j]);
        if (!pb) continue;
        for (int i = j + 1; i < k; ++i) sign ^= pa[i];
      }
      bool zero = false;
      for (int i = 0; i < k && !zero; ++i) {
        prods[i] = A_.multiply(A_.from_monomial(a[i]), A_.from_monomial(b[i]));
        ptr[i] = &prods[i];
        zero = prods[i].is_zero();
      }
      if (zero) continue;
      RatFunc c = ca * cb;
      expand(ptr, 0, key, sign ? -c : c, out);
    }
  }
  return out;
}

const TensorElement& Hopf::delta_atom(GenKind kind, int r) {
  auto mkey = std::make_pair(kind == GenKind::E ? 0 : 1, r);
  auto it = atom_memo_.find(mkey);
  if (it != atom_memo_.end()) return it->second;
  const RootData& rd = A_.rd();
  const Root& rt = rd.root(r);
  TensorElement img(A_.shape(), 2);
  if (rd.is_simple(r)) {
    int i = rt.i;
    Element g = A_.generator(kind, i, i + 1);
    if (kind == GenKind::E)
      img = tensor(g, A_.Kalpha(i)) + tensor(A_.one(), g);
    else
      img = tensor(g, A_.one()) + tensor(A_.Kalpha(i, -1), g);
  } else {
    int c = rt.i + 1;
    TensorElement X = delta_atom(kind, rd.rank_of(rt.i, c));
    TensorElement Y = delta_atom(kind, rd.rank_of(c, rt.j));
    if (kind == GenKind::E)  // E_ij = E_ic E_cj - q_c^{-1} E_cj E_ic
      img = tensor_multiply(X, Y) - tensor_multiply(Y, X).scaled(RatFunc::q_pow(-rd.qsign(c)));
    else  // F_ij = F_cj F_ic - q_c F_ic F_cj
      img = tensor_multiply(Y, X) - tensor_multiply(X, Y).scaled(RatFunc::q_pow(rd.qsign(c)));
  }
  return atom_memo_.emplace(mkey, std::move(img)).first->second;
}

TensorElement Hopf::delta_monomial(const Monomial& m) {
  Element k = A_.k_monomial(m.kvec());
  TensorElement acc = tensor(k, k);
  // K-part first, then F atoms pushed on the left and E atoms on the right
  for (int r = 0; r < A_.R(); ++r)
    for (int t = 0; t < m.f(r); ++t) acc = tensor_multiply(delta_atom(GenKind::F, r), acc);
  for (int r = 0; r < A_.R(); ++r)
    for (int t = 0; t < m.e(r); ++t) acc = tensor_multiply(acc, delta_atom(GenKind::E, r));
  return acc;
}

TensorElement Hopf::delta(const Element& a) {
  TensorElement out(A_.shape(), 2);
  for (const auto& [m, c] : a.terms()) out += delta_monomial(m).scaled(c);
  return out;
}

RatFunc Hopf::counit(const Element& a) const {
  RatFunc s;
  for (const auto& [m, c] : a.terms())
    if (m.is_k_only()) s = s + c;
  return s;
}

Element Hopf::antipode(const Element& a) {
  MapSpec ms;
  ms.simple = [this](GenKind kind, int i) {
    Element g = A_.generator(kind, i, i + 1);
    Element v = kind == GenKind::E ? A_.multiply(g, A_.Kalpha(i, -1)) : A_.multiply(A_.Kalpha(i), g);
    return -v;
  };
  ms.kimage = [this](const IntVec& mu) { return A_.k_monomial(Algebra::scaled_vec(mu, -1)); };
  ms.anti = true;
  ms.graded = true;
  return A_.apply_map(a, ms);
}

TensorElement Hopf::delta_on_leg(const TensorElement& x, int leg) {
  if (leg < 0 || leg >= x.arity()) throw DomainError("tensor leg out of range");
  TensorElement out(x.shape(), x.arity() + 1);
  for (const auto& [key, c] : x.terms()) {
    TensorElement d = delta_monomial(key[leg]);
    for (const auto& [dk, dc] : d.terms()) {
      TensorElement::Key nk;
      nk.reserve(key.size() + 1);
      nk.insert(nk.end(), key.begin(), key.begin() + leg);
      nk.push_back(dk[0]);
      nk.push_back(dk[1]);
      nk.insert(nk.end(), key.begin() + leg + 1, key.end());
      out.add_term(nk, c * dc);
    }
  }
  return out;
}

Element Hopf::multiply_legs(const TensorElement& x) {
  if (x.arity() != 2) throw DomainError("multiplication map needs a tensor square");
  Element out = A_.zero();
  for (const auto& [key, c] : x.terms())
    out += A_.multiply(A_.from_monomial(key[0]), A_.from_monomial(key[1])).scaled(c);
  return out;
}

TensorElement Hopf::antipode_on_leg(const TensorElement& x, int leg) {
  if (leg < 0 || leg >= x.arity()) throw DomainError("tensor leg out of range");
  TensorElement out(x.shape(), x.arity());
  for (const auto& [key, c] : x.terms()) {
    std::vector<Element> legs;
    for (int i = 0; i < x.arity(); ++i) {
      Element e = A_.from_monomial(key[i]);
      legs.push_back(i == leg ? antipode(e) : e);
    }
    out += tensor(legs).scaled(c);
  }
  return out;
}

Element Hopf::counit_on_leg(const TensorElement& x, int leg) {
  if (x.arity() != 2 || leg < 0 || leg > 1) throw DomainError("counit on a leg needs a tensor square");
  Element out = A_.zero();
  for (const auto& [key, c] : x.terms()) {
    if (!key[leg].is_k_only()) continue;
    out.add_term(key[1 - leg], c);
  }
  return out;
}

TensorElement Hopf::omega_bar(const TensorElement& x) const {
  if (x.arity() != 2) throw DomainError("omega bar needs a tensor square");
  TensorElement out(x.shape(), 2);
  for (const auto& [key, c] : x.terms())
    out += tensor(A_.omega(A_.from_monomial(key[1])), A_.omega(A_.from_monomial(key[0]))).scaled(c.bar());
  return out;
}

}  // namespace qsuper
