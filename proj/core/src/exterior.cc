#include "assoclab/exterior.h"

#include <bit>
#include <sstream>

namespace assoclab {

// ---------------------------------------------------------------------------
// PolyScalar

PolyScalar::PolyScalar(const mpq_class& c) {
  c_.push_back(c);
  Trim();
}

PolyScalar::PolyScalar(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { Trim(); }

void PolyScalar::Trim() {
  for (auto& x : c_) x.canonicalize();
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class PolyScalar::operator()(const mpq_class& t) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

PolyScalar PolyScalar::Derivative() const {
  std::vector<mpq_class> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return PolyScalar(std::move(d));
}

std::string PolyScalar::ToString() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = Degree(); i >= 0; --i) {
    const mpq_class& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) out << mag.get_str();
    if (i >= 1) out << "t";
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

PolyScalar operator+(const PolyScalar& a, const PolyScalar& b) {
  std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return PolyScalar(std::move(c));
}

PolyScalar operator-(const PolyScalar& a) {
  std::vector<mpq_class> c = a.c_;
  for (auto& x : c) x = -x;
  return PolyScalar(std::move(c));
}

PolyScalar operator-(const PolyScalar& a, const PolyScalar& b) { return a + (-b); }

PolyScalar operator*(const PolyScalar& a, const PolyScalar& b) {
  if (a.IsZero() || b.IsZero()) return PolyScalar();
  std::vector<mpq_class> c(a.c_.size() + b.c_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return PolyScalar(std::move(c));
}

std::pair<PolyScalar, PolyScalar> PolyScalar::DivMod(const PolyScalar& a, const PolyScalar& b) {
  if (b.IsZero()) throw std::domain_error("PolyScalar: division by zero");
  std::vector<mpq_class> q(a.c_.size() > b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 1, mpq_class(0));
  PolyScalar r = a;
  while (!r.IsZero() && r.Degree() >= b.Degree()) {
    const int shift = r.Degree() - b.Degree();
    const mpq_class f = r.Lead() / b.Lead();
    q[static_cast<std::size_t>(shift)] += f;
    std::vector<mpq_class> term(static_cast<std::size_t>(shift) + 1, mpq_class(0));
    term.back() = f;
    r = r - PolyScalar(std::move(term)) * b;
  }
  return {PolyScalar(std::move(q)), r};
}

namespace {

int Sign(const mpq_class& x) { return sgn(x); }

int SignChanges(const std::vector<PolyScalar>& seq, const mpq_class& t) {
  int changes = 0, last = 0;
  for (const auto& p : seq) {
    const int s = Sign(p(t));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int CountRootsIn(const PolyScalar& p, const mpq_class& lo, const mpq_class& hi) {
  if (p.IsZero()) throw std::domain_error("CountRootsIn: zero polynomial");
  if (lo > hi) return 0;
  std::vector<PolyScalar> seq = {p, p.Derivative()};
  while (!seq.back().IsZero()) {
    auto r = PolyScalar::DivMod(seq[seq.size() - 2], seq.back()).second;
    seq.push_back(-r);
  }
  seq.pop_back();
  // Sign changes count the distinct roots in (lo, hi].
  int count = SignChanges(seq, lo) - SignChanges(seq, hi);
  if (p(lo) == 0) ++count;
  return count;
}

// ---------------------------------------------------------------------------
// FormElement

FormElement::FormElement(int n) : n_(n) {
  if (n < 0 || n > kMaxGenerators) throw std::invalid_argument("FormElement: at most 8 generators");
}

FormElement FormElement::Basis(int n, std::initializer_list<int> indices, const PolyScalar& coeff) {
  FormElement f(n);
  std::uint32_t mask = 0;
  int last = 0;
  for (int i : indices) {
    if (i <= last || i > n) throw std::invalid_argument("FormElement::Basis: indices must increase within 1..n");
    mask |= 1u << (i - 1);
    last = i;
  }
  f.AddTerm(mask, coeff);
  return f;
}

void FormElement::AddTerm(std::uint32_t mask, const PolyScalar& c) {
  if (mask >> n_) throw std::invalid_argument("FormElement: generator out of range");
  auto it = terms_.find(mask);
  if (it == terms_.end()) {
    if (!c.IsZero()) terms_.emplace(mask, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.IsZero()) terms_.erase(it);
}

PolyScalar FormElement::Coefficient(std::uint32_t mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? PolyScalar() : it->second;
}

int FormElement::Degree() const {
  int d = -1;
  for (const auto& [mask, c] : terms_) {
    const int k = std::popcount(mask);
    if (d >= 0 && k != d) throw std::logic_error("FormElement::Degree: inhomogeneous element");
    d = k;
  }
  return d;
}

std::string MonomialName(std::uint32_t mask) {
  if (mask == 0) return "1";
  std::string s = "dθ";
  for (int i = 0; i < FormElement::kMaxGenerators; ++i) {
    if (mask & (1u << i)) s += std::to_string(i + 1);
  }
  return s;
}

std::string FormElement::ToString() const {
  if (terms_.empty()) return "0";
  // Lower degree first, then lexicographic order of the index sets.
  std::vector<std::pair<std::uint32_t, PolyScalar>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    const int pa = std::popcount(a.first), pb = std::popcount(b.first);
    if (pa != pb) return pa < pb;
    return MonomialName(a.first) < MonomialName(b.first);
  });
  std::string out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto& [mask, c] = sorted[i];
    std::string coeff = c.ToString();
    const bool simple = c.Degree() == 0;
    const bool negative = simple && c.Lead() < 0;
    if (simple && negative) coeff = coeff.substr(1);
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (!simple) {
      out += "(" + coeff + ")";
    } else if (coeff != "1" || mask == 0) {
      out += coeff;
    }
    if (mask != 0) out += (simple && coeff == "1" ? "" : "·") + MonomialName(mask);
  }
  return out;
}

FormElement operator+(const FormElement& a, const FormElement& b) {
  if (a.n_ != b.n_) throw GeneratorMismatch("FormElement: generator counts differ");
  FormElement out = a;
  for (const auto& [mask, c] : b.terms_) out.AddTerm(mask, c);
  return out;
}

FormElement operator-(const FormElement& a, const FormElement& b) { return a + PolyScalar(-1) * b; }

FormElement operator*(const PolyScalar& s, const FormElement& a) {
  FormElement out(a.n_);
  for (const auto& [mask, c] : a.terms_) out.AddTerm(mask, s * c);
  return out;
}

int WedgeSign(std::uint32_t a, std::uint32_t b) {
  int inversions = 0;
  for (int i = 0; i < 32; ++i) {
    if (a & (1u << i)) inversions += std::popcount(b & ((1u << i) - 1));
  }
  return inversions % 2 == 0 ? 1 : -1;
}

FormElement Wedge(const FormElement& a, const FormElement& b) {
  if (a.generators() != b.generators()) throw GeneratorMismatch("Wedge: generator counts differ");
  FormElement out(a.generators());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      out.AddTerm(ma | mb, PolyScalar(WedgeSign(ma, mb)) * ca * cb);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Linear algebra

RationalMatrix Identity(int n) {
  RationalMatrix m(static_cast<std::size_t>(n), std::vector<mpq_class>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RationalMatrix Multiply(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.empty() || a[0].size() != b.size()) throw SizeMismatch("Multiply: inner dimensions differ");
  RationalMatrix c(a.size(), std::vector<mpq_class>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

namespace {

void CheckSquare(const RationalMatrix& m, std::size_t n) {
  if (m.size() != n) throw SizeMismatch("matrix size does not match generator count");
  for (const auto& row : m) {
    if (row.size() != n) throw SizeMismatch("matrix is not square");
  }
}

}  // namespace

FormElement Pullback(const RationalMatrix& m, const FormElement& form) {
  const int n = form.generators();
  CheckSquare(m, static_cast<std::size_t>(n));
  std::vector<FormElement> image;
  for (int i = 0; i < n; ++i) {
    FormElement g(n);
    for (int j = 0; j < n; ++j) {
      if (m[i][j] != 0) g.AddTerm(1u << j, PolyScalar(m[i][j]));
    }
    image.push_back(std::move(g));
  }
  FormElement out(n);
  for (const auto& [mask, c] : form.terms()) {
    FormElement term = FormElement::Scalar(n, c);
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) term = Wedge(term, image[static_cast<std::size_t>(i)]);
    }
    out = out + term;
  }
  return out;
}

std::vector<std::uint32_t> DegreeBasis(int n, int p) {
  std::vector<std::uint32_t> out;
  std::vector<int> idx;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(idx.size()) == p) {
      std::uint32_t mask = 0;
      for (int i : idx) mask |= 1u << i;
      out.push_back(mask);
      return;
    }
    for (int i = start; i < n; ++i) {
      idx.push_back(i);
      self(self, i + 1);
      idx.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

RationalMatrix InducedMatrix(const RationalMatrix& m, int p) {
  const int n = static_cast<int>(m.size());
  CheckSquare(m, static_cast<std::size_t>(n));
  const auto basis = DegreeBasis(n, p);
  RationalMatrix out(basis.size(), std::vector<mpq_class>(basis.size(), 0));
  for (std::size_t c = 0; c < basis.size(); ++c) {
    FormElement e(n);
    e.AddTerm(basis[c], 1);
    const FormElement img = Pullback(m, e);
    for (std::size_t r = 0; r < basis.size(); ++r) {
      const PolyScalar coeff = img.Coefficient(basis[r]);
      if (coeff.Degree() > 0) throw std::logic_error("InducedMatrix: non-constant coefficient");
      out[r][c] = coeff.Lead();
    }
  }
  return out;
}

std::vector<std::vector<mpq_class>> Kernel(const RationalMatrix& m) {
  if (m.empty()) return {};
  const std::size_t rows = m.size(), cols = m[0].size();
  RationalMatrix a = m;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const mpq_class inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const mpq_class f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<std::vector<mpq_class>> basis;
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<mpq_class>> FixedVectors(const RationalMatrix& m) {
  CheckSquare(m, m.size());
  RationalMatrix d = m;
  for (std::size_t i = 0; i < d.size(); ++i) d[i][i] -= 1;
  return Kernel(d);
}

}  // namespace assoclab
