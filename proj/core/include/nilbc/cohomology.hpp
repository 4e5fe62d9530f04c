#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "nilbc/linalg.hpp"
#include "nilbc/model.hpp"

namespace nilbc {

using Grid = std::vector<std::vector<int>>;  // grid[p][q], (n+1) x (n+1)

struct CohomologyTable {
  int n = 0;
  Grid h_dolbeault;
  Grid h_del;
  Grid h_bc;
  Grid h_aeppli;
  Grid a;
  Grid f;
  std::vector<int> betti;  // b_0..b_2n
  std::vector<int> delta;  // Delta^0..Delta^2n

  /// Sum over p+q=k of a grid.
  static int degree_sum(const Grid& g, int k);

  friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;
};

/// The bigraded invariant complex of a complex structure with all matrices and
/// ranks built once. Matrix columns index the source basis, rows the target
/// basis, both in basis(n,p,q) order. Bidegrees outside [0,n]^2 give empty
/// matrices so boundary formulas need no special cases.
class DoubleComplex {
 public:
  explicit DoubleComplex(const ComplexStructure& cs);

  int n() const { return n_; }
  int dim(int p, int q) const;

  /// d^{1,0}: (p,q) -> (p+1,q).
  const ExactMatrix& del(int p, int q) const;
  /// d^{0,1}: (p,q) -> (p,q+1).
  const ExactMatrix& delbar(int p, int q) const;
  /// del(p,q+1) * delbar(p,q): (p,q) -> (p+1,q+1).
  const ExactMatrix& deldelbar(int p, int q) const;
  /// Total d on degree k with blocks ordered by increasing p.
  ExactMatrix total(int k) const;

  std::size_t rank_del(int p, int q) const;
  std::size_t rank_delbar(int p, int q) const;
  std::size_t rank_deldelbar(int p, int q) const;
  /// rank [del(p-1,q) | delbar(p,q-1)] = dim(im del + im delbar) in (p,q).
  std::size_t rank_images(int p, int q) const;
  /// rank [del(p,q) ; delbar(p,q)]; its kernel is ker del ∩ ker delbar.
  std::size_t rank_stacked(int p, int q) const;

  int hodge_dolbeault(int p, int q) const;
  int hodge_del(int p, int q) const;
  int hodge_bc(int p, int q) const;
  int hodge_aeppli(int p, int q) const;
  int a_dim(int p, int q) const;
  int f_dim(int p, int q) const;
  int betti(int k) const;
  int delta(int k) const;

  CohomologyTable table() const;

  /// Names of the matrix identities del^2 = 0, delbar^2 = 0,
  /// del delbar + delbar del = 0 that fail, as "del^2 at (p,q)".
  std::vector<std::string> identity_failures() const;

 private:
  struct Blocks {
    ExactMatrix del, delbar, deldelbar;
    std::size_t rk_del = 0, rk_delbar = 0, rk_ddbar = 0, rk_images = 0, rk_stacked = 0;
  };
  bool in_range(int p, int q) const { return p >= 0 && q >= 0 && p <= n_ && q <= n_; }
  const Blocks* block(int p, int q) const;
  ExactMatrix empty_map(int tp, int tq, int sp, int sq) const;

  int n_;
  std::map<std::pair<int, int>, Blocks> blocks_;
  // Empty matrices handed out for out-of-range sources, keyed by (kind, p, q).
  mutable std::map<std::tuple<int, int, int>, ExactMatrix> empties_;
};

// Free-function surface. These validate 0 <= p,q <= n (DimensionError otherwise)
// and build a fresh DoubleComplex; prefer DoubleComplex for repeated queries.
ExactMatrix del_matrix(const ComplexStructure& cs, int p, int q);
ExactMatrix delbar_matrix(const ComplexStructure& cs, int p, int q);
ExactMatrix deldelbar_matrix(const ComplexStructure& cs, int p, int q);
int hodge_dolbeault(const ComplexStructure& cs, int p, int q);
int hodge_bc(const ComplexStructure& cs, int p, int q);
int hodge_aeppli(const ComplexStructure& cs, int p, int q);
int a_dim(const ComplexStructure& cs, int p, int q);
int f_dim(const ComplexStructure& cs, int p, int q);
int betti(const ComplexStructure& cs, int k);
int delta(const ComplexStructure& cs, int k);
CohomologyTable full_table(const ComplexStructure& cs);

/// de Rham Betti number of the real algebra, computed on real forms.
int real_betti(const RealAlgebra& a, int k);

/// del and delbar of a form: the (p+1,q) and (p,q+1) parts of d.
Form del(const ComplexStructure& cs, const Form& f);
Form delbar(const ComplexStructure& cs, const Form& f);

struct DdbarVerdict {
  bool satisfied = false;
  /// Smallest k with Delta^k != 0.
  std::optional<int> witness;
  /// Delta^k = 0 for k = n mod 2 and all odd-degree a-spaces vanish, or
  /// Delta^k = 0 for k = n-1 mod 2 and all even-degree a-spaces vanish.
  bool parity_condition = false;

  std::string to_string() const;
};

DdbarVerdict ddbar_lemma_status(const CohomologyTable& t);

/// Violations of the structural invariants every table must satisfy
/// (conjugation symmetry, duality, Delta >= 0, parity, Euler identities ...).
std::vector<std::string> table_invariant_violations(const CohomologyTable& t);

}  // namespace nilbc
