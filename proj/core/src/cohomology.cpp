#include "nilbc/cohomology.hpp"

#include <sstream>

#include "nilbc/error.hpp"

namespace nilbc {
namespace {

int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  int r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

using IndexMap = std::map<BasisElement, std::size_t, BasisOrder>;

IndexMap index_of(const std::vector<BasisElement>& b) {
  IndexMap m;
  for (std::size_t k = 0; k < b.size(); ++k) m.emplace(b[k], k);
  return m;
}

Grid make_grid(int n) {
  return Grid(static_cast<std::size_t>(n + 1), std::vector<int>(static_cast<std::size_t>(n + 1)));
}

void check_bidegree(const ComplexStructure& cs, int p, int q) {
  if (p < 0 || q < 0 || p > cs.n() || q > cs.n()) {
    throw DimensionError("bidegree (" + std::to_string(p) + "," + std::to_string(q) +
                         ") out of range for n=" + std::to_string(cs.n()));
  }
}

void check_degree(const ComplexStructure& cs, int k) {
  if (k < 0 || k > 2 * cs.n()) {
    throw DimensionError("degree " + std::to_string(k) + " out of range for n=" +
                         std::to_string(cs.n()));
  }
}

}  // namespace

int CohomologyTable::degree_sum(const Grid& g, int k) {
  int s = 0;
  const int n = static_cast<int>(g.size()) - 1;
  for (int p = 0; p <= n; ++p) {
    const int q = k - p;
    if (q >= 0 && q <= n) s += g[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
  }
  return s;
}

// ---------------------------------------------------------------------------

DoubleComplex::DoubleComplex(const ComplexStructure& cs) : n_(cs.n()) {
  std::map<std::pair<int, int>, std::vector<BasisElement>> bases;
  std::map<std::pair<int, int>, IndexMap> indices;
  for (int p = 0; p <= n_; ++p) {
    for (int q = 0; q <= n_; ++q) {
      bases[{p, q}] = basis(n_, p, q);
      indices[{p, q}] = index_of(bases[{p, q}]);
    }
  }

  for (int p = 0; p <= n_; ++p) {
    for (int q = 0; q <= n_; ++q) {
      const auto& src = bases[{p, q}];
      Blocks b;
      b.del = ExactMatrix(static_cast<std::size_t>(dim(p + 1, q)), src.size());
      b.delbar = ExactMatrix(static_cast<std::size_t>(dim(p, q + 1)), src.size());
      for (std::size_t col = 0; col < src.size(); ++col) {
        const Form image = cs.leibniz().apply(src[col]);
        for (const auto& [e, c] : image.terms()) {
          if (e.p() == p + 1 && e.q() == q) {
            b.del(indices[{p + 1, q}].at(e), col) = c;
          } else if (e.p() == p && e.q() == q + 1) {
            b.delbar(indices[{p, q + 1}].at(e), col) = c;
          } else {
            throw ValidationError("d leaves the (p+1,q)+(p,q+1) range: not integrable");
          }
        }
      }
      blocks_.emplace(std::make_pair(p, q), std::move(b));
    }
  }

  for (auto& [key, b] : blocks_) {
    const auto [p, q] = key;
    b.deldelbar = q + 1 <= n_ ? del(p, q + 1) * b.delbar
                              : ExactMatrix(static_cast<std::size_t>(dim(p + 1, q + 1)),
                                            static_cast<std::size_t>(dim(p, q)));
    b.rk_del = exact_rank(b.del);
    b.rk_delbar = exact_rank(b.delbar);
    b.rk_ddbar = exact_rank(b.deldelbar);
    b.rk_stacked = exact_rank(vconcat(b.del, b.delbar));
  }
  for (auto& [key, b] : blocks_) {
    const auto [p, q] = key;
    b.rk_images = exact_rank(hconcat(del(p - 1, q), delbar(p, q - 1)));
  }
}

int DoubleComplex::dim(int p, int q) const {
  if (!in_range(p, q)) return 0;
  return binom(n_, p) * binom(n_, q);
}

const DoubleComplex::Blocks* DoubleComplex::block(int p, int q) const {
  auto it = blocks_.find({p, q});
  return it == blocks_.end() ? nullptr : &it->second;
}

ExactMatrix DoubleComplex::empty_map(int tp, int tq, int sp, int sq) const {
  return ExactMatrix(static_cast<std::size_t>(dim(tp, tq)), static_cast<std::size_t>(dim(sp, sq)));
}

const ExactMatrix& DoubleComplex::del(int p, int q) const {
  if (const Blocks* b = block(p, q)) return b->del;
  auto [it, inserted] = empties_.try_emplace({0, p, q}, empty_map(p + 1, q, p, q));
  return it->second;
}

const ExactMatrix& DoubleComplex::delbar(int p, int q) const {
  if (const Blocks* b = block(p, q)) return b->delbar;
  auto [it, inserted] = empties_.try_emplace({1, p, q}, empty_map(p, q + 1, p, q));
  return it->second;
}

const ExactMatrix& DoubleComplex::deldelbar(int p, int q) const {
  if (const Blocks* b = block(p, q)) return b->deldelbar;
  auto [it, inserted] = empties_.try_emplace({2, p, q}, empty_map(p + 1, q + 1, p, q));
  return it->second;
}

ExactMatrix DoubleComplex::total(int k) const {
  std::vector<int> src_offset;
  std::vector<int> dst_offset;
  int cols = 0;
  int rows = 0;
  for (int p = 0; p <= n_; ++p) {
    src_offset.push_back(cols);
    cols += dim(p, k - p);
  }
  for (int p = 0; p <= n_; ++p) {
    dst_offset.push_back(rows);
    rows += dim(p, k + 1 - p);
  }
  ExactMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  auto place = [&](const ExactMatrix& blockm, int r0, int c0) {
    for (std::size_t r = 0; r < blockm.rows(); ++r) {
      for (std::size_t c = 0; c < blockm.cols(); ++c) {
        m(static_cast<std::size_t>(r0) + r, static_cast<std::size_t>(c0) + c) = blockm(r, c);
      }
    }
  };
  for (int p = 0; p <= n_; ++p) {
    const int q = k - p;
    if (!in_range(p, q)) continue;
    const auto sp = static_cast<std::size_t>(p);
    if (p + 1 <= n_) place(del(p, q), dst_offset[sp + 1], src_offset[sp]);
    if (q + 1 <= n_) place(delbar(p, q), dst_offset[sp], src_offset[sp]);
  }
  return m;
}

std::size_t DoubleComplex::rank_del(int p, int q) const {
  const Blocks* b = block(p, q);
  return b ? b->rk_del : 0;
}
std::size_t DoubleComplex::rank_delbar(int p, int q) const {
  const Blocks* b = block(p, q);
  return b ? b->rk_delbar : 0;
}
std::size_t DoubleComplex::rank_deldelbar(int p, int q) const {
  const Blocks* b = block(p, q);
  return b ? b->rk_ddbar : 0;
}
std::size_t DoubleComplex::rank_images(int p, int q) const {
  const Blocks* b = block(p, q);
  return b ? b->rk_images : 0;
}
std::size_t DoubleComplex::rank_stacked(int p, int q) const {
  const Blocks* b = block(p, q);
  return b ? b->rk_stacked : 0;
}

int DoubleComplex::hodge_dolbeault(int p, int q) const {
  return dim(p, q) - static_cast<int>(rank_delbar(p, q) + rank_delbar(p, q - 1));
}

int DoubleComplex::hodge_del(int p, int q) const {
  return dim(p, q) - static_cast<int>(rank_del(p, q) + rank_del(p - 1, q));
}

int DoubleComplex::hodge_bc(int p, int q) const {
  return dim(p, q) - static_cast<int>(rank_stacked(p, q) + rank_deldelbar(p - 1, q - 1));
}

int DoubleComplex::hodge_aeppli(int p, int q) const {
  return dim(p, q) - static_cast<int>(rank_deldelbar(p, q) + rank_images(p, q));
}

int DoubleComplex::a_dim(int p, int q) const {
  return static_cast<int>(rank_del(p - 1, q) + rank_delbar(p, q - 1)) -
         static_cast<int>(rank_images(p, q) + rank_deldelbar(p - 1, q - 1));
}

int DoubleComplex::f_dim(int p, int q) const {
  const int d = dim(p, q);
  const int ker_ddbar = d - static_cast<int>(rank_deldelbar(p, q));
  const int ker_del = d - static_cast<int>(rank_del(p, q));
  const int ker_delbar = d - static_cast<int>(rank_delbar(p, q));
  const int ker_both = d - static_cast<int>(rank_stacked(p, q));
  return ker_ddbar - (ker_del + ker_delbar - ker_both);
}

int DoubleComplex::betti(int k) const {
  int d = 0;
  for (int p = 0; p <= n_; ++p) d += dim(p, k - p);
  const auto rk_out = exact_rank(total(k));
  const auto rk_in = k > 0 ? exact_rank(total(k - 1)) : 0;
  return d - static_cast<int>(rk_out + rk_in);
}

int DoubleComplex::delta(int k) const {
  int s = 0;
  for (int p = 0; p <= n_; ++p) {
    const int q = k - p;
    if (in_range(p, q)) s += hodge_bc(p, q) + hodge_aeppli(p, q);
  }
  return s - 2 * betti(k);
}

CohomologyTable DoubleComplex::table() const {
  CohomologyTable t;
  t.n = n_;
  t.h_dolbeault = make_grid(n_);
  t.h_del = make_grid(n_);
  t.h_bc = make_grid(n_);
  t.h_aeppli = make_grid(n_);
  t.a = make_grid(n_);
  t.f = make_grid(n_);
  for (int p = 0; p <= n_; ++p) {
    for (int q = 0; q <= n_; ++q) {
      const auto sp = static_cast<std::size_t>(p);
      const auto sq = static_cast<std::size_t>(q);
      t.h_dolbeault[sp][sq] = hodge_dolbeault(p, q);
      t.h_del[sp][sq] = hodge_del(p, q);
      t.h_bc[sp][sq] = hodge_bc(p, q);
      t.h_aeppli[sp][sq] = hodge_aeppli(p, q);
      t.a[sp][sq] = a_dim(p, q);
      t.f[sp][sq] = f_dim(p, q);
    }
  }
  std::vector<std::size_t> rk(static_cast<std::size_t>(2 * n_ + 1));
  for (int k = 0; k <= 2 * n_; ++k) rk[static_cast<std::size_t>(k)] = exact_rank(total(k));
  for (int k = 0; k <= 2 * n_; ++k) {
    int d = 0;
    for (int p = 0; p <= n_; ++p) d += dim(p, k - p);
    const auto in = k > 0 ? rk[static_cast<std::size_t>(k - 1)] : 0;
    const int b = d - static_cast<int>(rk[static_cast<std::size_t>(k)] + in);
    t.betti.push_back(b);
    t.delta.push_back(CohomologyTable::degree_sum(t.h_bc, k) +
                      CohomologyTable::degree_sum(t.h_aeppli, k) - 2 * b);
  }
  return t;
}

std::vector<std::string> DoubleComplex::identity_failures() const {
  std::vector<std::string> out;
  auto at = [](int p, int q) {
    return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
  };
  for (int p = 0; p <= n_; ++p) {
    for (int q = 0; q <= n_; ++q) {
      if (p + 2 <= n_ && !(del(p + 1, q) * del(p, q)).is_zero()) out.push_back("del^2 at " + at(p, q));
      if (q + 2 <= n_ && !(delbar(p, q + 1) * delbar(p, q)).is_zero()) {
        out.push_back("delbar^2 at " + at(p, q));
      }
      if (p + 1 <= n_ && q + 1 <= n_ &&
          !(del(p, q + 1) * delbar(p, q) + delbar(p + 1, q) * del(p, q)).is_zero()) {
        out.push_back("del delbar + delbar del at " + at(p, q));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

ExactMatrix del_matrix(const ComplexStructure& cs, int p, int q) {
  check_bidegree(cs, p, q);
  return DoubleComplex(cs).del(p, q);
}

ExactMatrix delbar_matrix(const ComplexStructure& cs, int p, int q) {
  check_bidegree(cs, p, q);
  return DoubleComplex(cs).delbar(p, q);
}

ExactMatrix deldelbar_matrix(const ComplexStructure& cs, int p, int q) {
  check_bidegree(cs, p, q);
  return DoubleComplex(cs).deldelbar(p, q);
}

int hodge_dolbeault(const ComplexStructure& cs, int p, int q) {
  check_bidegree(cs, p, q);
  return DoubleComplex(cs).hodge_dolbeault(p, q);
}

int hodge_bc(const ComplexStructure& cs, int p, int q) {
  check_bidegree(cs, p, q);
  return DoubleComplex(cs).hodge_bc(p, q);
}

int hodge_aeppli(const ComplexStructure& cs, int p, int q) {
  check_bidegree(cs, p, q);
  return DoubleComplex(cs).hodge_aeppli(p, q);
}

int a_dim(const ComplexStructure& cs, int p, int q) {
  check_bidegree(cs, p, q);
  return DoubleComplex(cs).a_dim(p, q);
}

int f_dim(const ComplexStructure& cs, int p, int q) {
  check_bidegree(cs, p, q);
  return DoubleComplex(cs).f_dim(p, q);
}

int betti(const ComplexStructure& cs, int k) {
  check_degree(cs, k);
  return DoubleComplex(cs).betti(k);
}

int delta(const ComplexStructure& cs, int k) {
  check_degree(cs, k);
  return DoubleComplex(cs).delta(k);
}

CohomologyTable full_table(const ComplexStructure& cs) { return DoubleComplex(cs).table(); }

int real_betti(const RealAlgebra& a, int k) {
  const int dim = a.dim();
  if (k < 0 || k > dim) throw DimensionError("degree out of range");
  LeibnizDifferential d(dim, a.d_of_e(), {});
  auto matrix = [&](int deg) {
    const auto src = basis(dim, deg, 0);
    const auto dst = basis(dim, deg + 1, 0);
    const IndexMap idx = index_of(dst);
    ExactMatrix m(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      const Form image = d.apply(src[c]);
      for (const auto& [e, v] : image.terms()) m(idx.at(e), c) = v;
    }
    return m;
  };
  const int dk = binom(dim, k);
  const auto rk_out = k < dim ? exact_rank(matrix(k)) : 0;
  const auto rk_in = k > 0 ? exact_rank(matrix(k - 1)) : 0;
  return dk - static_cast<int>(rk_out + rk_in);
}

Form del(const ComplexStructure& cs, const Form& f) {
  Form out(cs.n());
  for (const auto& [e, c] : f.terms()) {
    out += bidegree_component(cs.leibniz().apply(e), e.p() + 1, e.q()) * c;
  }
  return out;
}

Form delbar(const ComplexStructure& cs, const Form& f) {
  Form out(cs.n());
  for (const auto& [e, c] : f.terms()) {
    out += bidegree_component(cs.leibniz().apply(e), e.p(), e.q() + 1) * c;
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string DdbarVerdict::to_string() const {
  std::string s = satisfied ? "SATISFIED" : "FAILS at k=" + std::to_string(witness.value_or(-1));
  if (parity_condition) s += " (parity sufficient condition holds)";
  return s;
}

DdbarVerdict ddbar_lemma_status(const CohomologyTable& t) {
  DdbarVerdict v;
  for (std::size_t k = 0; k < t.delta.size(); ++k) {
    if (t.delta[k] != 0) {
      v.witness = static_cast<int>(k);
      break;
    }
  }
  v.satisfied = !v.witness.has_value();
  auto holds = [&](int parity) {
    for (int k = 0; k <= 2 * t.n; ++k) {
      const bool delta_slot = ((k - parity) % 2 + 2) % 2 == 0;
      if (delta_slot && t.delta[static_cast<std::size_t>(k)] != 0) return false;
      if (!delta_slot && CohomologyTable::degree_sum(t.a, k) != 0) return false;
    }
    return true;
  };
  // Delta on k = n (mod 2) paired with a^k for the other parity, and vice versa.
  v.parity_condition = holds(t.n % 2) || holds((t.n + 1) % 2);
  return v;
}

std::vector<std::string> table_invariant_violations(const CohomologyTable& t) {
  std::vector<std::string> out;
  const int n = t.n;
  auto g = [](const Grid& grid, int p, int q) {
    return grid[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
  };
  auto at = [](int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; };
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      if (g(t.h_bc, p, q) != g(t.h_bc, q, p)) out.push_back("h_BC conjugation symmetry at " + at(p, q));
      if (g(t.h_aeppli, p, q) != g(t.h_aeppli, q, p)) {
        out.push_back("h_A conjugation symmetry at " + at(p, q));
      }
      if (g(t.h_dolbeault, p, q) != g(t.h_del, q, p)) {
        out.push_back("h_delbar vs h_del conjugation at " + at(p, q));
      }
      if (g(t.h_bc, p, q) != g(t.h_aeppli, n - p, n - q)) out.push_back("BC/A duality at " + at(p, q));
      if (g(t.a, p, q) != g(t.f, n - p, n - q)) out.push_back("a/f duality at " + at(p, q));
      if (g(t.a, p, q) != g(t.a, q, p)) out.push_back("a symmetry at " + at(p, q));
      if (g(t.a, p, q) < 0 || g(t.f, p, q) < 0) out.push_back("negative a/f at " + at(p, q));
    }
  }
  int chi = 0;
  int chi_dolbeault = 0;
  for (int k = 0; k <= 2 * n; ++k) {
    const auto sk = static_cast<std::size_t>(k);
    const int bc = CohomologyTable::degree_sum(t.h_bc, k);
    const int ae = CohomologyTable::degree_sum(t.h_aeppli, k);
    const int hd = CohomologyTable::degree_sum(t.h_dolbeault, k);
    const int ak = CohomologyTable::degree_sum(t.a, k);
    const int fk = CohomologyTable::degree_sum(t.f, k);
    const std::string ks = std::to_string(k);
    if (t.delta[sk] < 0) out.push_back("Delta^" + ks + " < 0");
    if (t.delta[sk] != t.delta[static_cast<std::size_t>(2 * n - k)]) {
      out.push_back("Delta^" + ks + " != Delta^" + std::to_string(2 * n - k));
    }
    if (k % 2 == 1 && t.delta[sk] % 2 != 0) out.push_back("Delta^" + ks + " is odd");
    if (bc + ae != 2 * hd + ak + fk) out.push_back("h_BC + h_A = 2 h_delbar + a + f fails at k=" + ks);
    if (hd < t.betti[sk]) out.push_back("h_delbar^" + ks + " < b_" + ks);
    if (t.betti[sk] != t.betti[static_cast<std::size_t>(2 * n - k)]) {
      out.push_back("b_" + ks + " != b_" + std::to_string(2 * n - k));
    }
    chi += (k % 2 == 0 ? 1 : -1) * t.betti[sk];
    chi_dolbeault += (k % 2 == 0 ? 1 : -1) * hd;
  }
  if (n % 2 == 1 && t.delta[static_cast<std::size_t>(n)] % 4 != 0) {
    out.push_back("Delta^n is not 0 mod 4");
  }
  if (n > 0 && chi != 0) out.push_back("topological Euler characteristic is nonzero");
  if (chi_dolbeault != chi) out.push_back("Dolbeault Euler characteristic differs from chi_top");
  auto euler_identity = [&](auto value) {
    int rhs = (n % 2 == 0 ? 1 : -1) * chi;
    for (int k = 0; k < n; ++k) rhs += 2 * ((n - k - 1) % 2 == 0 ? 1 : -1) * value(k);
    return value(n) == rhs;
  };
  if (!euler_identity([&](int k) { return t.betti[static_cast<std::size_t>(k)]; })) {
    out.push_back("Euler identity for b_n fails");
  }
  if (!euler_identity([&](int k) { return CohomologyTable::degree_sum(t.h_dolbeault, k); })) {
    out.push_back("Euler identity for h_delbar^n fails");
  }
  if (t.betti.empty() || t.betti[0] != 1) out.push_back("b_0 != 1");
  if (t.delta.empty() || t.delta[0] != 0) out.push_back("Delta^0 != 0");
  return out;
}

}  // namespace nilbc
