#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace indsub {

namespace detail {
struct FieldData;
}

class FieldElem;

// F_{p^m} with the lexicographically smallest monic irreducible modulus
// (coefficients listed constant-first). Elements are indexed 0..p^m-1 in
// lexicographic order of their coefficient vectors (c0 most significant).
class FieldSpec {
 public:
  int p() const;
  int m() const;
  int order() const;
  // length m+1, constant term first, leading coefficient 1
  const std::vector<int>& modulus() const;

  FieldElem element(int index) const;
  FieldElem from_coeffs(std::span<const int> coeffs) const;
  FieldElem zero() const;
  FieldElem one() const;
  std::vector<FieldElem> elements() const;

  // raw index arithmetic
  int add(int a, int b) const;
  int neg(int a) const;
  int sub(int a, int b) const;
  int mul(int a, int b) const;
  int inv(int a) const;
  std::vector<int> coeffs(int index) const;
  std::string format(int index) const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.p() == b.p() && a.m() == b.m();
  }

 private:
  friend FieldSpec field_make(int p, int m);
  friend class FieldElem;
  explicit FieldSpec(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::FieldData> d_;
};

FieldSpec field_make(int p, int m);
bool is_prime(int n);

class FieldElem {
 public:
  FieldElem(FieldSpec f, int index);

  int index() const noexcept { return index_; }
  const FieldSpec& field() const noexcept { return f_; }
  std::vector<int> coeffs() const { return f_.coeffs(index_); }
  bool is_zero() const noexcept { return index_ == 0; }
  FieldElem inv() const;
  std::string to_string() const { return f_.format(index_); }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a);
  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.f_ == b.f_ && a.index_ == b.index_;
  }
  friend bool operator<(const FieldElem& a, const FieldElem& b) { return a.index_ < b.index_; }

 private:
  FieldSpec f_;
  int index_;
};

// One of {x, -x} for every nonzero x: the one whose coefficient vector is
// lexicographically smaller. All of F* in characteristic 2.
std::vector<FieldElem> plus_set(const FieldSpec& f);

}  // namespace indsub
