#include "assoclab/exterior.h"

#include <random>

#include <gtest/gtest.h>

#include "assoclab/torus.h"

namespace assoclab {
namespace {

RationalMatrix RandomMatrix(std::mt19937_64& rng, int n, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  RationalMatrix m(static_cast<std::size_t>(n), std::vector<mpq_class>(static_cast<std::size_t>(n)));
  for (auto& row : m) {
    for (auto& x : row) x = d(rng);
  }
  return m;
}

FormElement RandomForm(std::mt19937_64& rng, int n, int degree) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  FormElement f(n);
  for (std::uint32_t mask : DegreeBasis(n, degree)) {
    f.AddTerm(mask, PolyScalar(std::vector<mpq_class>{coeff(rng), coeff(rng)}));
  }
  return f;
}

// Sign of the permutation sorting the concatenated index lists, by counting
// inversions directly.
int PermutationSign(const std::vector<int>& seq) {
  int inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j]) return 0;
      inversions += seq[i] > seq[j];
    }
  }
  return inversions % 2 ? -1 : 1;
}

std::vector<int> Indices(std::uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i) {
    if (mask >> i & 1u) out.push_back(i + 1);
  }
  return out;
}

TEST(PolyScalar, Arithmetic) {
  const PolyScalar t = PolyScalar::T();
  const PolyScalar q = PolyScalar(3) * t * t - PolyScalar(3) * t + PolyScalar(1);
  EXPECT_EQ(q, TorusQuadratic());
  EXPECT_EQ(q.ToString(), "3t^2 - 3t + 1");
  EXPECT_EQ(q.Degree(), 2);
  EXPECT_EQ(q(mpq_class(1, 2)), mpq_class(1, 4));
  EXPECT_EQ(q.Derivative(), PolyScalar(6) * t - PolyScalar(3));
  EXPECT_TRUE((q - q).IsZero());
  const auto [quot, rem] = PolyScalar::DivMod(PolyScalar(2) * q + t, q);
  EXPECT_EQ(quot, PolyScalar(2));
  EXPECT_EQ(rem, t);
  EXPECT_EQ(PolyScalar(mpq_class(-1, 2)).ToString(), "-1/2");
}

TEST(PolyScalar, SturmRootCounts) {
  const PolyScalar t = PolyScalar::T();
  EXPECT_EQ(CountRootsIn(TorusQuadratic(), 0, 1), 0);
  EXPECT_EQ(CountRootsIn(t * t - PolyScalar(mpq_class(1, 4)), 0, 1), 1);
  EXPECT_EQ(CountRootsIn((t - PolyScalar(mpq_class(1, 3))) * (t - PolyScalar(mpq_class(2, 3))), 0, 1), 2);
  EXPECT_EQ(CountRootsIn(t, 0, 1), 1);
  EXPECT_EQ(CountRootsIn(t - PolyScalar(2), 0, 1), 0);
  // The quadratic is positive on a fine grid of [0, 1].
  for (int i = 0; i <= 1000; ++i) EXPECT_GT(TorusQuadratic()(mpq_class(i, 1000)), 0);
}

TEST(Wedge, GeneratorSquaresVanish) {
  for (int i = 1; i <= 4; ++i) {
    EXPECT_TRUE(Wedge(FormElement::Generator(4, i), FormElement::Generator(4, i)).IsZero());
  }
  const auto d1 = FormElement::Generator(4, 1), d2 = FormElement::Generator(4, 2);
  EXPECT_EQ(Wedge(d1, d2), FormElement::Basis(4, {1, 2}));
  EXPECT_EQ(Wedge(d2, d1), PolyScalar(-1) * FormElement::Basis(4, {1, 2}));
}

TEST(Wedge, OmegaZeroSquared) {
  const FormElement w0 = Omega0();
  // Brute force over pairs of monomials with the inversion-count sign.
  FormElement expected(4);
  for (const auto& [a, ca] : w0.terms()) {
    for (const auto& [b, cb] : w0.terms()) {
      std::vector<int> seq = Indices(a);
      const auto tail = Indices(b);
      seq.insert(seq.end(), tail.begin(), tail.end());
      const int sign = PermutationSign(seq);
      if (sign != 0) expected.AddTerm(a | b, PolyScalar(sign) * ca * cb);
    }
  }
  EXPECT_EQ(Wedge(w0, w0), expected);
  EXPECT_EQ(Wedge(w0, w0), PolyScalar(2) * VolumeForm4());
}

TEST(Wedge, MatchesBruteForceOnRandomForms) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 5;
    const FormElement a = RandomForm(rng, n, 2), b = RandomForm(rng, n, 2);
    FormElement expected(n);
    for (const auto& [ma, ca] : a.terms()) {
      for (const auto& [mb, cb] : b.terms()) {
        std::vector<int> seq = Indices(ma);
        const auto tail = Indices(mb);
        seq.insert(seq.end(), tail.begin(), tail.end());
        const int sign = PermutationSign(seq);
        if (sign != 0) expected.AddTerm(ma | mb, PolyScalar(sign) * ca * cb);
      }
    }
    EXPECT_EQ(Wedge(a, b), expected);
  }
}

TEST(Wedge, GradedCommutativeAndAssociative) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    for (int p = 1; p <= 2; ++p) {
      for (int q = 1; q <= 3; ++q) {
        const FormElement a = RandomForm(rng, 6, p), b = RandomForm(rng, 6, q), c = RandomForm(rng, 6, 1);
        const int sign = (p * q) % 2 ? -1 : 1;
        EXPECT_EQ(Wedge(a, b), PolyScalar(sign) * Wedge(b, a));
        EXPECT_EQ(Wedge(Wedge(a, b), c), Wedge(a, Wedge(b, c)));
      }
    }
  }
  EXPECT_THROW(Wedge(FormElement(3), FormElement(4)), GeneratorMismatch);
}

TEST(Pullback, IdentityAndComposition) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const FormElement a = RandomForm(rng, 4, 2), b = RandomForm(rng, 4, 1);
    EXPECT_EQ(Pullback(Identity(4), a), a);
    const RationalMatrix m = RandomMatrix(rng, 4), n = RandomMatrix(rng, 4);
    EXPECT_EQ(Pullback(n, Pullback(m, a)), Pullback(Multiply(m, n), a));
    EXPECT_EQ(Pullback(m, Wedge(a, b)), Wedge(Pullback(m, a), Pullback(m, b)));
  }
}

TEST(Pullback, TopDegreeScalesByTheDeterminant) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const RationalMatrix m = RandomMatrix(rng, 3);
    const mpq_class det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                          m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                          m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    EXPECT_EQ(Pullback(m, FormElement::Basis(3, {1, 2, 3})), FormElement::Basis(3, {1, 2, 3}, det));
  }
}

TEST(InducedMatrix, DegreeTwoEntriesAreMinors) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const RationalMatrix m = RandomMatrix(rng, 4);
    const RationalMatrix induced = InducedMatrix(m, 2);
    const auto basis = DegreeBasis(4, 2);
    ASSERT_EQ(basis.size(), 6u);
    for (std::size_t col = 0; col < 6; ++col) {
      const auto ab = Indices(basis[col]);
      for (std::size_t row = 0; row < 6; ++row) {
        const auto cd = Indices(basis[row]);
        const auto& ra = m[static_cast<std::size_t>(ab[0] - 1)];
        const auto& rb = m[static_cast<std::size_t>(ab[1] - 1)];
        const std::size_t c = static_cast<std::size_t>(cd[0] - 1), d = static_cast<std::size_t>(cd[1] - 1);
        EXPECT_EQ(induced[row][col], ra[c] * rb[d] - ra[d] * rb[c]);
      }
    }
  }
  EXPECT_EQ(InducedMatrix(Identity(4), 2), Identity(6));
}

TEST(DegreeBasis, LexicographicOrder) {
  std::vector<std::string> names;
  for (auto mask : DegreeBasis(4, 2)) names.push_back(MonomialName(mask));
  EXPECT_EQ(names, (std::vector<std::string>{"dθ12", "dθ13", "dθ14", "dθ23", "dθ24", "dθ34"}));
}

TEST(FixedVectors, Basics) {
  EXPECT_EQ(FixedVectors(Identity(3)).size(), 3u);
  RationalMatrix minus = {{-1, 0}, {0, -1}};
  EXPECT_TRUE(FixedVectors(minus).empty());
  RationalMatrix swap = {{0, 1}, {1, 0}};
  const auto fixed = FixedVectors(swap);
  ASSERT_EQ(fixed.size(), 1u);
  EXPECT_EQ(fixed[0][0], fixed[0][1]);
}

TEST(Kernel, VectorsAreAnnihilated) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    RationalMatrix m = RandomMatrix(rng, 5, -1, 1);
    m[4] = m[0];
    for (std::size_t j = 0; j < 5; ++j) m[3][j] = m[1][j] + m[2][j];
    const auto kernel = Kernel(m);
    EXPECT_GE(kernel.size(), 2u);
    for (const auto& v : kernel) {
      for (const auto& row : m) {
        mpq_class s = 0;
        for (std::size_t j = 0; j < 5; ++j) s += row[j] * v[j];
        EXPECT_EQ(s, 0);
      }
    }
  }
}

TEST(Torus, PullbackOfOmegaOne) {
  EXPECT_EQ(Pullback(TorusMap(), Omega1()), Omega0());
  EXPECT_EQ(Omega0().ToString(), "dθ12 + dθ34");
}

TEST(Torus, InducedMatrixMatchesTheReference) {
  EXPECT_EQ(InducedMatrix(TorusMap(), 2), TorusReferenceInducedMatrix());
  EXPECT_TRUE(FixedVectors(TorusReferenceInducedMatrix()).empty());
}

TEST(Torus, OmegaTSquared) {
  const FormElement sq = Wedge(OmegaT(), OmegaT());
  EXPECT_EQ(sq, (PolyScalar(2) * TorusQuadratic()) * VolumeForm4());
  EXPECT_EQ(sq.Degree(), 4);
  // Endpoints: at t = 0 and t = 1 the coefficient is 2.
  const PolyScalar c = sq.Coefficient(0b1111);
  EXPECT_EQ(c(0), 2);
  EXPECT_EQ(c(1), 2);
}

}  // namespace
}  // namespace assoclab
