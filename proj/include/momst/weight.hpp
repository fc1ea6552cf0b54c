// Edge/tree weight vectors (one or two objectives) and dominance tests.
#pragma once

#include <cassert>
#include <compare>

namespace momst {

// Weight of an edge or a tree: 1 component (single objective) or 2
// (bi-objective). Components are doubles; instances built from integers
// stay exact because every value and sum in this project is far below
// 2^53, where double arithmetic on integers is lossless.
class WeightVec {
 public:
  WeightVec() : dim_(1) {}
  explicit WeightVec(double w1) : dim_(1) { w_[0] = w1; }
  WeightVec(double w1, double w2) : dim_(2) {
    w_[0] = w1;
    w_[1] = w2;
  }

  static WeightVec zero(int dim) {
    return dim == 1 ? WeightVec(0.0) : WeightVec(0.0, 0.0);
  }

  int dim() const { return dim_; }

  double operator[](int i) const {
    assert(i >= 0 && i < dim_);
    return w_[i];
  }
  double& operator[](int i) {
    assert(i >= 0 && i < dim_);
    return w_[i];
  }

  WeightVec& operator+=(const WeightVec& o) {
    assert(dim_ == o.dim_);
    w_[0] += o.w_[0];
    w_[1] += o.w_[1];
    return *this;
  }
  WeightVec& operator-=(const WeightVec& o) {
    assert(dim_ == o.dim_);
    w_[0] -= o.w_[0];
    w_[1] -= o.w_[1];
    return *this;
  }
  friend WeightVec operator+(WeightVec a, const WeightVec& b) { return a += b; }
  friend WeightVec operator-(WeightVec a, const WeightVec& b) { return a -= b; }

  friend bool operator==(const WeightVec& a, const WeightVec& b) {
    return a.dim_ == b.dim_ && a.w_[0] == b.w_[0] && a.w_[1] == b.w_[1];
  }

  // Lexicographic order (first component, then second); used for sorting
  // fronts and as a map key. Not the dominance order.
  friend std::strong_ordering operator<=>(const WeightVec& a,
                                          const WeightVec& b) {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    if (a.w_[0] != b.w_[0])
      return a.w_[0] < b.w_[0] ? std::strong_ordering::less
                               : std::strong_ordering::greater;
    if (a.w_[1] != b.w_[1])
      return a.w_[1] < b.w_[1] ? std::strong_ordering::less
                               : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  int dim_;
  double w_[2] = {0.0, 0.0};
};

// a weakly dominates b: a <= b in every component.
inline bool weakly_dominates(const WeightVec& a, const WeightVec& b) {
  assert(a.dim() == b.dim());
  for (int i = 0; i < a.dim(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// a strictly dominates b: weak dominance plus a strict improvement somewhere.
inline bool strictly_dominates(const WeightVec& a, const WeightVec& b) {
  return weakly_dominates(a, b) && !(a == b);
}

// Outcome of comparing two weight vectors. For real-valued vectors a weak
// dominance of a *distinct* vector always contains a strict improvement,
// so weak_first / weak_second cannot be produced by dominance(); they are
// kept so the enum covers the full conventional taxonomy.
enum class Dominance {
  first_strict,
  second_strict,
  weak_first,
  weak_second,
  incomparable,
  equal,
};

inline Dominance dominance(const WeightVec& a, const WeightVec& b) {
  if (a == b) return Dominance::equal;
  if (weakly_dominates(a, b)) return Dominance::first_strict;
  if (weakly_dominates(b, a)) return Dominance::second_strict;
  return Dominance::incomparable;
}

}  // namespace momst
