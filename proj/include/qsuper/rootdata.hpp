#pragma once

#include <stdexcept>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace qsuper {

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

using IntVec = std::vector<long>;

struct Shape {
  int m = 1;
  int n = 1;
  Shape() = default;
  Shape(int m_, int n_);
  int rank() const { return m + n; }
  bool operator==(const Shape& o) const { return m == o.m && n == o.n; }
  bool operator!=(const Shape& o) const { return !(*this == o); }
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Shape& s) { return os << s.to_string(); }
};

struct Root {
  int i = 0;
  int j = 0;
  bool odd = false;
};

// Combinatorial data of gl(m,n). Indices are 1-based as in the usual notation.
class RootData {
 public:
  explicit RootData(Shape s);

  const Shape& shape() const { return shape_; }
  int m() const { return shape_.m; }
  int n() const { return shape_.n; }
  int N() const { return shape_.m + shape_.n; }

  // sign s_i with q_i = q^{s_i}
  int qsign(int i) const { return i <= shape_.m ? 1 : -1; }
  bool parity(int i, int j) const { return i <= shape_.m && shape_.m < j; }

  // Positive roots in the E-side order: even roots lexicographically, then odd.
  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_even() const { return num_even_; }
  int num_odd() const { return num_roots() - num_even_; }
  const Root& root(int rank) const { return roots_.at(rank); }
  int rank_of(int i, int j) const;  // -1 if not a root
  bool is_simple(int rank) const { return roots_[rank].j == roots_[rank].i + 1; }

  long bilinear(const IntVec& a, const IntVec& b) const;
  // (mu, eps_i - eps_j) for an exponent vector mu
  long pair_root(const IntVec& mu, int i, int j) const;
  IntVec eps(int i) const;
  IntVec root_vector(int i, int j) const;

  // 2*rho as an integer vector
  IntVec two_rho() const;
  long c_value(int i, int j) const;
  // P(lambda) = prod over odd roots of (lambda + rho, alpha)
  long p_factor(const IntVec& lambda) const;
  bool is_typical(const IntVec& lambda) const;

  IntVec weight_to_z(const IntVec& lambda) const;
  IntVec z_to_weight(const IntVec& z) const;
  bool in_Xplus(const IntVec& lambda) const;
  bool in_Zplus(const IntVec& z) const;
  bool in_Xplus_l(const IntVec& z, long l) const;
  bool constrained(int i) const { return i != shape_.m && i != N(); }
  std::pair<IntVec, IntVec> frobenius_decompose(const IntVec& z, long l) const;

  // Entries of the augmented Cartan matrix, i in [1,N], j in [1,N).
  int cartan(int i, int j) const;

  // z-coordinates of the simple root alpha_j (weight of E_{alpha_j}).
  IntVec alpha_z(int j) const;

  void check_weight(const IntVec& v) const;

 private:
  Shape shape_;
  std::vector<Root> roots_;
  int num_even_ = 0;
  std::vector<std::vector<int>> rank_;
};

// Product of Weyl dimension formulas of the two general linear blocks.
long weyl_dimension_even(const Shape& s, const IntVec& lambda);

}  // namespace qsuper
