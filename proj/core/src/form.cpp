#include "nilbc/form.hpp"

#include <bit>

#include "nilbc/error.hpp"

namespace nilbc {
namespace {

std::uint16_t mask_from(const std::vector<int>& idx) {
  std::uint16_t m = 0;
  int prev = 0;
  for (int j : idx) {
    if (j <= prev || j > kMaxGenerators) {
      throw DimensionError("basis indices must be strictly ascending in 1.." +
                           std::to_string(kMaxGenerators));
    }
    m |= static_cast<std::uint16_t>(1u << (j - 1));
    prev = j;
  }
  return m;
}

std::vector<int> indices_of(std::uint16_t m) {
  std::vector<int> out;
  for (int j = 0; j < 16; ++j) {
    if (m & (1u << j)) out.push_back(j + 1);
  }
  return out;
}

// -1, 0, +1 for the lexicographic comparison of two ascending index tuples.
int compare_tuples(std::uint16_t a, std::uint16_t b) {
  while (a != 0 && b != 0) {
    const int la = std::countr_zero(a);
    const int lb = std::countr_zero(b);
    if (la != lb) return la < lb ? -1 : 1;
    a &= static_cast<std::uint16_t>(a - 1);
    b &= static_cast<std::uint16_t>(b - 1);
  }
  if (a == 0 && b == 0) return 0;
  return a == 0 ? -1 : 1;
}

// Number of pairs (x in lhs, y in rhs) with x > y: the transpositions needed to
// merge lhs followed by rhs into ascending order.
int merge_inversions(std::uint16_t lhs, std::uint16_t rhs) {
  int count = 0;
  while (rhs != 0) {
    const int y = std::countr_zero(rhs);
    const auto above = static_cast<std::uint16_t>(~((1u << (y + 1)) - 1));
    count += std::popcount(static_cast<std::uint16_t>(lhs & above));
    rhs &= static_cast<std::uint16_t>(rhs - 1);
  }
  return count;
}

void combinations(int n, int k, int start, std::vector<int>& cur,
                  std::vector<std::uint16_t>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(mask_from(cur));
    return;
  }
  for (int j = start; j <= n; ++j) {
    cur.push_back(j);
    combinations(n, k, j + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

BasisElement BasisElement::from_indices(const std::vector<int>& holo,
                                        const std::vector<int>& anti) {
  return BasisElement{mask_from(holo), mask_from(anti)};
}

int BasisElement::p() const { return std::popcount(holo); }
int BasisElement::q() const { return std::popcount(anti); }
std::vector<int> BasisElement::holo_indices() const { return indices_of(holo); }
std::vector<int> BasisElement::anti_indices() const { return indices_of(anti); }

int BasisElement::max_index() const {
  const std::uint16_t all = holo | anti;
  return all == 0 ? 0 : 16 - std::countl_zero(all);
}

std::string BasisElement::to_string() const {
  if (holo == 0 && anti == 0) return "1";
  std::string s = "w";
  for (int j : holo_indices()) s += std::to_string(j);
  for (int j : anti_indices()) s += "~" + std::to_string(j);
  return s;
}

bool BasisOrder::operator()(const BasisElement& a, const BasisElement& b) const {
  const int c = compare_tuples(a.holo, b.holo);
  if (c != 0) return c < 0;
  return compare_tuples(a.anti, b.anti) < 0;
}

MonomialProduct wedge_monomials(const BasisElement& a, const BasisElement& b) {
  if ((a.holo & b.holo) != 0 || (a.anti & b.anti) != 0) return {};
  int swaps = a.q() * b.p();  // b's holomorphic block moves left past a's antiholomorphic block
  swaps += merge_inversions(a.holo, b.holo);
  swaps += merge_inversions(a.anti, b.anti);
  return {swaps % 2 == 0 ? 1 : -1,
          BasisElement{static_cast<std::uint16_t>(a.holo | b.holo),
                       static_cast<std::uint16_t>(a.anti | b.anti)}};
}

Form::Form(int n) : n_(n) {
  if (n < 0 || n > kMaxGenerators) {
    throw DimensionError("coframe dimension must be in 0.." + std::to_string(kMaxGenerators));
  }
}

Form Form::unit(int n, const Gaussian& c) { return monomial(n, BasisElement{}, c); }

Form Form::holomorphic(int n, int j) {
  return monomial(n, BasisElement::from_indices({j}, {}));
}

Form Form::antiholomorphic(int n, int j) {
  return monomial(n, BasisElement::from_indices({}, {j}));
}

Form Form::monomial(int n, const BasisElement& e, const Gaussian& c) {
  Form f(n);
  if (e.max_index() > n) throw DimensionError("basis index exceeds coframe dimension");
  f.add_term(e, c);
  return f;
}

Gaussian Form::coefficient(const BasisElement& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Gaussian() : it->second;
}

void Form::add_term(const BasisElement& e, const Gaussian& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<std::pair<int, int>> Form::bidegree() const {
  if (terms_.empty()) return std::nullopt;
  const auto& first = terms_.begin()->first;
  const std::pair<int, int> bd{first.p(), first.q()};
  for (const auto& [e, c] : terms_) {
    if (e.p() != bd.first || e.q() != bd.second) return std::nullopt;
  }
  return bd;
}

Form Form::embed(int new_n) const {
  if (new_n < n_) throw DimensionError("cannot embed into a smaller coframe");
  Form f(new_n);
  f.terms_ = terms_;
  return f;
}

std::string render_literal_term(const Gaussian& c, const std::string& factor, bool first) {
  const std::string tail = factor.empty() ? std::string() : "*" + factor;
  if (!c.is_real() && sgn(c.re()) != 0) {
    // Written as a whole literal; its own sign, if any, leads.
    return (sgn(c.re()) < 0 || first ? "" : "+") + c.to_string() + tail;
  }
  const bool negative = sgn(c.re()) < 0 || sgn(c.im()) < 0;
  const Gaussian mag = negative ? -c : c;
  std::string s = negative ? "-" : (first ? "" : "+");
  if (factor.empty()) return s + mag.to_string();
  if (mag != Gaussian(1)) s += mag.to_string() + "*";
  return s + factor;
}

std::string Form::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const std::string factor = (e.holo == 0 && e.anti == 0) ? std::string() : e.to_string();
    s += render_literal_term(c, factor, first);
    first = false;
  }
  return s;
}

void Form::check_compatible(const Form& o) const {
  if (n_ != o.n_) {
    throw DimensionError("coframe dimension mismatch: " + std::to_string(n_) + " vs " +
                         std::to_string(o.n_));
  }
}

Form& Form::operator+=(const Form& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Form& Form::operator*=(const Gaussian& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Form wedge(const Form& a, const Form& b) {
  if (a.n() != b.n()) {
    throw DimensionError("wedge of forms over different coframes: " + std::to_string(a.n()) +
                         " vs " + std::to_string(b.n()));
  }
  Form out(a.n());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      const MonomialProduct m = wedge_monomials(ea, eb);
      if (m.sign == 0) continue;
      Gaussian c = ca * cb;
      if (m.sign < 0) c = -c;
      out.add_term(m.element, c);
    }
  }
  return out;
}

Form conjugate_form(const Form& a) {
  Form out(a.n());
  for (const auto& [e, c] : a.terms()) {
    // conj(w^I ^ wbar^J) = wbar^I ^ w^J = (-1)^{|I||J|} w^J ^ wbar^I
    const BasisElement swapped{e.anti, e.holo};
    Gaussian v = c.conj();
    if ((e.p() * e.q()) % 2 != 0) v = -v;
    out.add_term(swapped, v);
  }
  return out;
}

std::vector<BasisElement> basis(int n, int p, int q) {
  if (n < 0 || n > kMaxGenerators || p < 0 || q < 0 || p > n || q > n) {
    throw DimensionError("invalid bidegree (" + std::to_string(p) + "," + std::to_string(q) +
                         ") for n=" + std::to_string(n));
  }
  std::vector<std::uint16_t> hs;
  std::vector<std::uint16_t> as;
  std::vector<int> cur;
  combinations(n, p, 1, cur, hs);
  combinations(n, q, 1, cur, as);
  std::vector<BasisElement> out;
  out.reserve(hs.size() * as.size());
  for (auto h : hs) {
    for (auto a : as) out.push_back(BasisElement{h, a});
  }
  return out;
}

Form bidegree_component(const Form& f, int p, int q) {
  Form out(f.n());
  for (const auto& [e, c] : f.terms()) {
    if (e.p() == p && e.q() == q) out.add_term(e, c);
  }
  return out;
}

}  // namespace nilbc
