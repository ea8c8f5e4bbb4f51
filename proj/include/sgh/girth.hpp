#pragma once

#include <array>
#include <compare>
#include <limits>
#include <stdexcept>
#include <string>

namespace sgh {

// Length of a shortest closed walk of one walk type. infinite() means no walk
// of that type exists; it sorts above every finite length and absorbs +1.
class Girth {
 public:
  constexpr Girth() : len_(kInf) {}
  constexpr explicit Girth(int length) : len_(length) {}

  static constexpr Girth infinite() { return Girth(); }

  constexpr bool is_infinite() const { return len_ == kInf; }

  int value() const {
    if (is_infinite()) throw std::logic_error("girth: value() on infinite girth");
    return len_;
  }

  constexpr Girth plus_one() const { return is_infinite() ? *this : Girth(len_ + 1); }

  friend constexpr auto operator<=>(Girth a, Girth b) = default;

  std::string str() const { return is_infinite() ? "inf" : std::to_string(len_); }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();
  int len_;
};

// The four walk-girths, indexed by type ij: i = 1 iff negative, j = 1 iff odd.
struct GirthVector {
  std::array<Girth, 4> v{};  // index t = 2*i + j

  Girth g00() const { return v[0]; }
  Girth g01() const { return v[1]; }
  Girth g10() const { return v[2]; }
  Girth g11() const { return v[3]; }

  Girth at(int negative_bit, int odd_bit) const { return v[2 * negative_bit + odd_bit]; }

  // Componentwise >=: the no-homomorphism condition relative to `other`.
  bool dominates(const GirthVector& other) const {
    for (int t = 0; t < 4; ++t)
      if (v[t] < other.v[t]) return false;
    return true;
  }

  friend bool operator==(const GirthVector&, const GirthVector&) = default;

  std::string str() const {
    return "(" + v[0].str() + ", " + v[1].str() + ", " + v[2].str() + ", " + v[3].str() + ")";
  }
};

// Walk-girth vector of a negative cycle of length g (one vertex with a
// negative loop when g = 1). Hard-coded from the parity of g.
inline GirthVector negative_cycle_reference(int g) {
  if (g < 1) throw std::invalid_argument("negative_cycle_reference: g must be positive");
  GirthVector r;
  r.v[0] = Girth(2);
  r.v[1] = Girth::infinite();
  if (g % 2 == 0) {
    r.v[2] = Girth(g);
    r.v[3] = Girth::infinite();
  } else {
    r.v[2] = Girth::infinite();
    r.v[3] = Girth(g);
  }
  return r;
}

}  // namespace sgh
