#ifndef ASSOCLAB_EXTERIOR_H_
#define ASSOCLAB_EXTERIOR_H_

#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace assoclab {

class GeneratorMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SizeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Polynomial in one variable t with rational coefficients, lowest degree
// first, no trailing zeros.
class PolyScalar {
 public:
  PolyScalar() = default;
  PolyScalar(const mpq_class& c);  // NOLINT: constants convert implicitly
  PolyScalar(int c) : PolyScalar(mpq_class(c)) {}  // NOLINT
  explicit PolyScalar(std::vector<mpq_class> coeffs);
  static PolyScalar T() { return PolyScalar(std::vector<mpq_class>{0, 1}); }

  const std::vector<mpq_class>& coeffs() const { return c_; }
  bool IsZero() const { return c_.empty(); }
  int Degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  mpq_class Lead() const { return c_.empty() ? mpq_class(0) : c_.back(); }
  mpq_class operator()(const mpq_class& t) const;
  PolyScalar Derivative() const;
  std::string ToString() const;

  friend PolyScalar operator+(const PolyScalar& a, const PolyScalar& b);
  friend PolyScalar operator-(const PolyScalar& a, const PolyScalar& b);
  friend PolyScalar operator-(const PolyScalar& a);
  friend PolyScalar operator*(const PolyScalar& a, const PolyScalar& b);
  friend bool operator==(const PolyScalar&, const PolyScalar&) = default;

  // Quotient and remainder; throws std::domain_error on division by zero.
  static std::pair<PolyScalar, PolyScalar> DivMod(const PolyScalar& a, const PolyScalar& b);

 private:
  void Trim();
  std::vector<mpq_class> c_;
};

// Number of distinct real roots in the closed interval [lo, hi], by Sturm's
// theorem. Throws for the zero polynomial.
int CountRootsIn(const PolyScalar& p, const mpq_class& lo, const mpq_class& hi);

// Element of the exterior algebra on n <= 8 generators d1..dn with PolyScalar
// coefficients. Monomials are bitmasks, bit i standing for generator i + 1.
class FormElement {
 public:
  static constexpr int kMaxGenerators = 8;

  explicit FormElement(int n);
  // Monomial d_{i1} ^ ... ^ d_{ip} for strictly increasing 1-based indices.
  static FormElement Basis(int n, std::initializer_list<int> indices, const PolyScalar& coeff = 1);
  static FormElement Generator(int n, int i) { return Basis(n, {i}); }
  static FormElement Scalar(int n, const PolyScalar& c) { return Basis(n, {}, c); }

  int generators() const { return n_; }
  const std::map<std::uint32_t, PolyScalar>& terms() const { return terms_; }
  PolyScalar Coefficient(std::uint32_t mask) const;
  bool IsZero() const { return terms_.empty(); }
  // Degree of a homogeneous element; -1 for zero, throws if inhomogeneous.
  int Degree() const;
  std::string ToString() const;

  friend FormElement operator+(const FormElement& a, const FormElement& b);
  friend FormElement operator-(const FormElement& a, const FormElement& b);
  friend FormElement operator*(const PolyScalar& s, const FormElement& a);
  friend bool operator==(const FormElement&, const FormElement&) = default;

  void AddTerm(std::uint32_t mask, const PolyScalar& c);

 private:
  int n_;
  std::map<std::uint32_t, PolyScalar> terms_;
};

// Sign of d_A ^ d_B for disjoint masks: (-1)^{#{(i, j) : i in A, j in B, i > j}}.
int WedgeSign(std::uint32_t a, std::uint32_t b);
FormElement Wedge(const FormElement& a, const FormElement& b);

using RationalMatrix = std::vector<std::vector<mpq_class>>;

RationalMatrix Identity(int n);
RationalMatrix Multiply(const RationalMatrix& a, const RationalMatrix& b);

// Pullback along the linear map with matrix m: d_i maps to sum_j m[i][j] d_j,
// extended multiplicatively.
FormElement Pullback(const RationalMatrix& m, const FormElement& form);

// Subsets of {1..n} of size p, lexicographically ordered, as masks.
std::vector<std::uint32_t> DegreeBasis(int n, int p);

// Matrix of the pullback on degree-p forms in DegreeBasis order; column c is
// the image of basis element c.
RationalMatrix InducedMatrix(const RationalMatrix& m, int p);

// Basis of the kernel of m (reduced row echelon form over Q).
std::vector<std::vector<mpq_class>> Kernel(const RationalMatrix& m);
// Basis of the kernel of m - identity.
std::vector<std::vector<mpq_class>> FixedVectors(const RationalMatrix& m);

std::string MonomialName(std::uint32_t mask);  // e.g. "dθ12"

}  // namespace assoclab

#endif  // ASSOCLAB_EXTERIOR_H_
