#include <gtest/gtest.h>

#include "indsub/errors.hpp"
#include "indsub/field.hpp"

using namespace indsub;

namespace {

// Polynomial arithmetic over F_p from scratch: coefficient vectors,
// constant term first, reduced by a monic modulus.
std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b,
                             const std::vector<int>& mod, int p) {
  const int m = static_cast<int>(mod.size()) - 1;
  std::vector<int> prod(2 * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (int d = 2 * m - 1; d >= m; --d) {
    const int c = prod[d];
    if (!c) continue;
    for (int i = 0; i <= m; ++i) prod[d - m + i] = ((prod[d - m + i] - c * mod[i]) % p + p) % p;
  }
  prod.resize(m);
  return prod;
}

const std::vector<std::pair<int, int>> kFields{{2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {2, 3},
                                               {3, 2}, {11, 1}, {13, 1}, {2, 4}};

}  // namespace

TEST(Field, Moduli) {
  EXPECT_EQ(field_make(5, 1).modulus(), (std::vector<int>{0, 1}));
  EXPECT_EQ(field_make(2, 2).modulus(), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(field_make(3, 2).modulus(), (std::vector<int>{1, 0, 1}));
  // x^3+x^2+1 precedes x^3+x+1 constant-first
  EXPECT_EQ(field_make(2, 3).modulus(), (std::vector<int>{1, 0, 1, 1}));
}

TEST(Field, Errors) {
  EXPECT_THROW(field_make(4, 1), InputError);
  EXPECT_THROW(field_make(1, 1), InputError);
  EXPECT_THROW(field_make(2, 7), InputError);
  EXPECT_THROW(field_make(3, 0), InputError);
  EXPECT_THROW(field_make(5, 1).inv(0), DomainError);
}

TEST(Field, ExamplesFromArithmetic) {
  const FieldSpec f5 = field_make(5, 1);
  EXPECT_EQ((f5.element(3) + f5.element(4)).index(), 2);
  const FieldSpec f4 = field_make(2, 2);
  const std::vector<int> x{0, 1};
  const FieldElem xx = f4.from_coeffs(x) * f4.from_coeffs(x);
  EXPECT_EQ(xx.coeffs(), (std::vector<int>{1, 1}));
  const FieldSpec f9 = field_make(3, 2);
  EXPECT_EQ((f9.from_coeffs(x) * f9.from_coeffs(x)).coeffs(), (std::vector<int>{2, 0}));
}

TEST(Field, MultiplicationMatchesPolynomialOracle) {
  for (auto [p, m] : kFields) {
    const FieldSpec f = field_make(p, m);
    for (int a = 0; a < f.order(); ++a)
      for (int b = 0; b < f.order(); ++b) {
        const auto expect = poly_mulmod(f.coeffs(a), f.coeffs(b), f.modulus(), p);
        EXPECT_EQ(f.coeffs(f.mul(a, b)), expect) << p << "^" << m << " " << a << "*" << b;
        std::vector<int> sum(m);
        for (int i = 0; i < m; ++i) sum[i] = (f.coeffs(a)[i] + f.coeffs(b)[i]) % p;
        EXPECT_EQ(f.coeffs(f.add(a, b)), sum);
      }
  }
}

TEST(Field, Axioms) {
  for (auto [p, m] : kFields) {
    const FieldSpec f = field_make(p, m);
    const int q = f.order();
    for (int a = 1; a < q; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), f.one().index());
    for (int a = 0; a < q; ++a) {
      EXPECT_EQ(f.add(a, f.neg(a)), 0);
      for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; ++c) {
          EXPECT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
          EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        }
    }
  }
}

TEST(Field, ScalingIsBijection) {
  for (auto [p, m] : kFields) {
    const FieldSpec f = field_make(p, m);
    for (int l = 1; l < f.order(); ++l) {
      std::vector<bool> seen(f.order(), false);
      for (int x = 1; x < f.order(); ++x) seen[f.mul(l, x)] = true;
      EXPECT_FALSE(seen[0]);
      for (int x = 1; x < f.order(); ++x) EXPECT_TRUE(seen[x]);
    }
  }
}

TEST(Field, IndexOrderIsLexicographicCoefficients) {
  const FieldSpec f = field_make(2, 2);
  // c0 most significant: index 1 = (0,1) = x, index 2 = (1,0) = 1
  EXPECT_EQ(f.coeffs(1), (std::vector<int>{0, 1}));
  EXPECT_EQ(f.coeffs(2), (std::vector<int>{1, 0}));
  EXPECT_EQ(f.one().index(), 2);
  EXPECT_EQ(f.format(1), "(0,1)");
  EXPECT_EQ(field_make(7, 1).format(5), "5");
}

TEST(Field, PlusSet) {
  const auto f5 = plus_set(field_make(5, 1));
  ASSERT_EQ(f5.size(), 2u);
  EXPECT_EQ(f5[0].index(), 1);
  EXPECT_EQ(f5[1].index(), 2);
  EXPECT_EQ(plus_set(field_make(11, 1)).size(), 5u);
  for (auto [p, m] : kFields) {
    const FieldSpec f = field_make(p, m);
    const auto plus = plus_set(f);
    const std::size_t expect = p == 2 ? f.order() - 1 : (f.order() - 1) / 2;
    EXPECT_EQ(plus.size(), expect);
    std::vector<int> hit(f.order(), 0);
    for (const auto& x : plus) {
      ++hit[x.index()];
      if (p != 2) ++hit[f.neg(x.index())];
      EXPECT_LE(f.coeffs(x.index()), f.coeffs(f.neg(x.index())));
    }
    for (int x = 1; x < f.order(); ++x) EXPECT_EQ(hit[x], 1) << p << "^" << m << " x=" << x;
  }
}
