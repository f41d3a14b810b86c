// Independent models used as oracles by the unit and acceptance tests.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "growthlab/free_nilpotent.hpp"
#include "growthlab/group.hpp"

namespace oracle {

using growthlab::Element;
using growthlab::Int;

/// 3x3 upper unitriangular integer matrices.
struct Mat3 {
  std::array<Int, 9> a{1, 0, 0, 0, 1, 0, 0, 0, 1};

  Int& operator()(int i, int j) { return a[static_cast<std::size_t>(3 * i + j)]; }
  Int operator()(int i, int j) const { return a[static_cast<std::size_t>(3 * i + j)]; }
  bool operator==(const Mat3&) const = default;
  bool operator<(const Mat3& o) const { return a < o.a; }

  friend Mat3 operator*(const Mat3& x, const Mat3& y) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Int s = 0;
        for (int k = 0; k < 3; ++k) s += x(i, k) * y(k, j);
        r(i, j) = s;
      }
    return r;
  }
};

inline Mat3 unipotent(Int x, Int y, Int z) {
  Mat3 m;
  m(0, 1) = x;
  m(1, 2) = y;
  m(0, 2) = z;
  return m;
}

inline Mat3 inverse(const Mat3& m) {
  // (I + N)^-1 = I - N + N^2 for strictly upper N
  return unipotent(-m(0, 1), -m(1, 2), m(0, 1) * m(1, 2) - m(0, 2));
}

inline Mat3 power(const Mat3& m, Int k) {
  Mat3 r, b = k < 0 ? inverse(m) : m;
  for (Int i = 0; i < (k < 0 ? -k : k); ++i) r = r * b;
  return r;
}

inline Mat3 commutator(const Mat3& a, const Mat3& b) { return inverse(a) * inverse(b) * a * b; }

/// Generators x = E12 and y = E23 of the integer Heisenberg group.
inline Mat3 mat_x() { return unipotent(1, 0, 0); }
inline Mat3 mat_y() { return unipotent(0, 1, 0); }

/// Image of a word in signed 1-based letters under letter k -> gens[k-1].
inline Mat3 evaluate(const std::vector<Mat3>& gens, const std::vector<int>& word) {
  Mat3 r;
  for (int l : word) r = r * (l > 0 ? gens[static_cast<std::size_t>(l - 1)] : inverse(gens[static_cast<std::size_t>(-l - 1)]));
  return r;
}

/// Matrix images of the basic commutators of a Hall basis, from the images of the free generators.
inline std::vector<Mat3> basis_images(const growthlab::HallBasis& basis, const std::vector<Mat3>& gens) {
  std::vector<Mat3> img;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& c = basis[i];
    if (c.is_generator()) img.push_back(gens[static_cast<std::size_t>(c.right)]);
    else img.push_back(commutator(img[static_cast<std::size_t>(c.left)], img[static_cast<std::size_t>(c.right)]));
  }
  return img;
}

/// Normal form u_1^{e_1} .. u_d^{e_d} evaluated on given images of the u_i.
inline Mat3 normal_form(const std::vector<Mat3>& images, const Element& e) {
  Mat3 r;
  for (std::size_t i = 0; i < e.size(); ++i) r = r * power(images[i], e[i]);
  return r;
}

/// Truncated free associative algebra Z<X_1..X_r> / (degree > c), with the Magnus map x_i -> 1 + X_i.
class Magnus {
 public:
  using Poly = std::map<std::string, Int>;

  Magnus(int rank, int degree) : rank_(rank), degree_(degree) {}

  Poly one() const { return {{"", 1}}; }
  Poly letter(int l) const {
    // l > 0: 1 + X; l < 0: (1 + X)^-1 = sum_k (-X)^k
    const char c = static_cast<char>('a' + (l > 0 ? l : -l) - 1);
    Poly p = one();
    if (l > 0) {
      p[std::string(1, c)] = 1;
    } else {
      for (int k = 1; k <= degree_; ++k) p[std::string(static_cast<std::size_t>(k), c)] = k % 2 ? -1 : 1;
    }
    return p;
  }
  Poly multiply(const Poly& a, const Poly& b) const {
    Poly r;
    for (const auto& [u, x] : a)
      for (const auto& [v, y] : b)
        if (static_cast<int>(u.size() + v.size()) <= degree_) r[u + v] += x * y;
    std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
    return r;
  }
  Poly evaluate(const std::vector<int>& word) const {
    Poly r = one();
    for (int l : word) r = multiply(r, letter(l));
    return r;
  }
  int rank() const { return rank_; }

 private:
  int rank_;
  int degree_;
};

/// All words of length <= n over letters +-1..+-rank, shortest first.
inline std::vector<std::vector<int>> all_words(int rank, int n) {
  std::vector<std::vector<int>> out{{}};
  std::size_t lo = 0;
  for (int len = 1; len <= n; ++len) {
    const std::size_t hi = out.size();
    for (std::size_t i = lo; i < hi; ++i)
      for (int l = -rank; l <= rank; ++l) {
        if (l == 0) continue;
        auto w = out[i];
        w.push_back(l);
        out.push_back(std::move(w));
      }
    lo = hi;
  }
  return out;
}

inline std::vector<int> random_word(std::mt19937_64& rng, int rank, int max_length) {
  std::uniform_int_distribution<int> len(0, max_length), letter(1, rank), sign(0, 1);
  std::vector<int> w(static_cast<std::size_t>(len(rng)));
  for (auto& l : w) l = letter(rng) * (sign(rng) ? 1 : -1);
  return w;
}

}  // namespace oracle
