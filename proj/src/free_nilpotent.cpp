#include "growthlab/free_nilpotent.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace growthlab {

// ---------------------------------------------------------------- basis

HallBasis::HallBasis(int rank, int nilpotency_class, long cap) : rank_(rank), class_(nilpotency_class) {
  if (rank < 1 || nilpotency_class < 1) throw PreconditionError("rank and class must be positive");
  double size = std::pow(4.0 * rank, nilpotency_class);
  if (size > static_cast<double>(cap)) throw ResourceError("(4r)^c exceeds the basis size cap");
  for (int i = 0; i < rank; ++i) {
    BasicCommutator b;
    b.weight = 1;
    b.right = i;
    b.content.assign(static_cast<std::size_t>(rank), 0);
    b.content[static_cast<std::size_t>(i)] = 1;
    entries_.push_back(b);
  }
  for (int w = 2; w <= nilpotency_class; ++w) {
    std::vector<BasicCommutator> fresh;
    const int n = static_cast<int>(entries_.size());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j) {
        const auto& ui = entries_[static_cast<std::size_t>(i)];
        const auto& uj = entries_[static_cast<std::size_t>(j)];
        if (ui.weight + uj.weight != w) continue;
        if (!ui.is_generator() && ui.right > j) continue;
        BasicCommutator b;
        b.weight = w;
        b.left = i;
        b.right = j;
        b.content.resize(static_cast<std::size_t>(rank));
        for (int g = 0; g < rank; ++g)
          b.content[static_cast<std::size_t>(g)] = ui.content[static_cast<std::size_t>(g)] + uj.content[static_cast<std::size_t>(g)];
        fresh.push_back(b);
      }
    std::stable_sort(fresh.begin(), fresh.end(), [](const BasicCommutator& a, const BasicCommutator& b) {
      if (a.content != b.content) return a.content > b.content;
      return std::make_pair(a.left, a.right) < std::make_pair(b.left, b.right);
    });
    for (auto& b : fresh) {
      lookup_[{b.left, b.right}] = static_cast<int>(entries_.size());
      entries_.push_back(b);
    }
  }
}

int HallBasis::bracket_index(int j, int i) const {
  auto it = lookup_.find({j, i});
  return it == lookup_.end() ? -1 : it->second;
}

std::vector<int> HallBasis::weight_counts() const {
  std::vector<int> counts(static_cast<std::size_t>(class_), 0);
  for (const auto& e : entries_) ++counts[static_cast<std::size_t>(e.weight - 1)];
  return counts;
}

std::string HallBasis::describe(std::size_t i) const {
  const auto& e = entries_[i];
  if (e.is_generator()) return "x" + std::to_string(e.right + 1);
  return "[" + describe(static_cast<std::size_t>(e.left)) + "," + describe(static_cast<std::size_t>(e.right)) + "]";
}

namespace {

int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace

long witt_dimension(int rank, int degree) {
  BigInt total = 0;
  for (int d = 1; d <= degree; ++d) {
    if (degree % d) continue;
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(rank), static_cast<unsigned long>(degree / d));
    total += moebius(d) * p;
  }
  return to_int(BigInt(total / degree));
}

long bass_guivarch(const std::vector<long>& ranks) {
  long total = 0;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (ranks[i] < 0) throw PreconditionError("ranks must be non-negative");
    total += static_cast<long>(i + 1) * ranks[i];
  }
  return total;
}

long bass_guivarch_degree(int rank, int nilpotency_class) {
  long sum = 0;
  for (int k = 1; k <= nilpotency_class; ++k) sum += k * witt_dimension(rank, k);
  return sum;
}

// ---------------------------------------------------------------- collector

namespace {

SparseWord to_sparse(const std::vector<Int>& e) {
  SparseWord w;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0) w.emplace_back(static_cast<int>(i), e[i]);
  return w;
}

}  // namespace

Collector::Collector(const HallBasis& basis) : basis_(&basis) {
  if (basis.rank() > 4 || basis.nilpotency_class() > 6)
    throw ResourceError("collection is limited to rank <= 4 and class <= 6");
  const int d = static_cast<int>(basis.size());
  const int c = basis.nilpotency_class();
  for (const auto& e : basis.entries()) weight_.push_back(e.weight);
  central_from_.resize(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    int f = k + 1;
    while (f < d && weight_[static_cast<std::size_t>(f)] + weight_[static_cast<std::size_t>(k)] <= c) ++f;
    central_from_[static_cast<std::size_t>(k)] = f;
  }
  auto sz = static_cast<std::size_t>(d);
  conj_.assign(sz, std::vector<SparseWord>(sz));
  conj_inverse_ = conj_;
  conj_inv_ = conj_;
  conj_inv_inverse_ = conj_;

  auto unit = [&](int m) {
    std::vector<Int> v(sz, 0);
    v[static_cast<std::size_t>(m)] = 1;
    return v;
  };
  auto dense = [&](const SparseWord& w) {
    std::vector<Int> v(sz, 0);
    for (auto [g, x] : w) v[static_cast<std::size_t>(g)] = x;
    return v;
  };

  for (int k = d - 1; k >= 0; --k) {
    auto ks = static_cast<std::size_t>(k);
    for (int m = k + 1; m < d; ++m) {
      auto ms = static_cast<std::size_t>(m);
      SparseWord w;
      if (weight_[ks] + weight_[ms] > c) {
        w = {{m, 1}};
      } else if (int idx = basis.bracket_index(m, k); idx >= 0) {
        w = {{m, 1}, {idx, 1}};
      } else {
        // u_m = [u_s, u_t] with t > k; conjugation by u_k is an automorphism
        const auto& um = basis[ms];
        auto a = dense(conj_[ks][static_cast<std::size_t>(um.left)]);
        auto b = dense(conj_[ks][static_cast<std::size_t>(um.right)]);
        w = to_sparse(commutator(a, b));
      }
      conj_[ks][ms] = w;
      conj_inverse_[ks][ms] = to_sparse(inverse(dense(w)));
    }
    for (int m = d - 1; m > k; --m) {
      auto ms = static_cast<std::size_t>(m);
      if (weight_[ks] + weight_[ms] > c) {
        conj_inv_[ks][ms] = {{m, 1}};
        conj_inv_inverse_[ks][ms] = {{m, -1}};
        continue;
      }
      // phi(u_m) = u_m R  implies  phi^{-1}(u_m) = u_m phi^{-1}(R)^{-1}
      std::vector<Int> minus(sz, 0);
      minus[ms] = -1;
      auto r = multiply(minus, dense(conj_[ks][ms]));
      std::vector<Int> image(sz, 0);
      for (auto [g, x] : to_sparse(r)) {
        const auto& piece = x > 0 ? conj_inv_[ks][static_cast<std::size_t>(g)]
                                  : conj_inv_inverse_[ks][static_cast<std::size_t>(g)];
        for (Int rep = 0; rep < (x > 0 ? x : -x); ++rep)
          for (auto [h, y] : piece) multiply_letter(image, h, y);
      }
      auto w = multiply(unit(m), inverse(image));
      conj_inv_[ks][ms] = to_sparse(w);
      conj_inv_inverse_[ks][ms] = to_sparse(inverse(w));
    }
  }
}

void Collector::step(std::vector<Int>& e, int k, int sign) const {
  const auto ks = static_cast<std::size_t>(k);
  const std::size_t d = e.size();
  const auto stop = static_cast<std::size_t>(central_from_[ks]);
  bool blocked = false;
  for (std::size_t m = ks + 1; m < stop && !blocked; ++m) blocked = e[m] != 0;
  if (!blocked) {
    e[ks] = checked_add(e[ks], sign);
    return;
  }
  std::vector<Int> tail(e.begin() + static_cast<long>(ks) + 1, e.end());
  std::fill(e.begin() + static_cast<long>(ks) + 1, e.end(), 0);
  e[ks] = checked_add(e[ks], sign);
  const auto& forward = sign > 0 ? conj_[ks] : conj_inv_[ks];
  const auto& backward = sign > 0 ? conj_inverse_[ks] : conj_inv_inverse_[ks];
  for (std::size_t m = ks + 1; m < d; ++m) {
    Int x = tail[m - ks - 1];
    if (x == 0) continue;
    if (m >= stop) {
      multiply_letter(e, static_cast<int>(m), x);
      continue;
    }
    const auto& piece = x > 0 ? forward[m] : backward[m];
    for (Int rep = 0; rep < (x > 0 ? x : -x); ++rep)
      for (auto [g, y] : piece) multiply_letter(e, g, y);
  }
}

void Collector::multiply_letter(std::vector<Int>& e, int k, Int n) const {
  if (n == 0) return;
  const auto ks = static_cast<std::size_t>(k);
  const auto stop = static_cast<std::size_t>(central_from_[ks]);
  bool blocked = false;
  for (std::size_t m = ks + 1; m < stop && !blocked; ++m) blocked = e[m] != 0;
  if (!blocked) {
    e[ks] = checked_add(e[ks], n);
    return;
  }
  int sign = n > 0 ? 1 : -1;
  for (Int rep = 0; rep < (n > 0 ? n : -n); ++rep) step(e, k, sign);
}

std::vector<Int> Collector::collect(const SparseWord& word) const {
  std::vector<Int> e(size(), 0);
  for (auto [g, x] : word) {
    if (g < 0 || static_cast<std::size_t>(g) >= size()) throw PreconditionError("letter outside the basis");
    multiply_letter(e, g, x);
  }
  return e;
}

std::vector<Int> Collector::multiply(const std::vector<Int>& a, const std::vector<Int>& b) const {
  std::vector<Int> e = a;
  for (std::size_t k = 0; k < b.size(); ++k) multiply_letter(e, static_cast<int>(k), b[k]);
  return e;
}

std::vector<Int> Collector::inverse(const std::vector<Int>& a) const {
  std::vector<Int> e(a.size(), 0);
  for (std::size_t k = a.size(); k-- > 0;) multiply_letter(e, static_cast<int>(k), checked_sub(0, a[k]));
  return e;
}

std::vector<Int> Collector::commutator(const std::vector<Int>& a, const std::vector<Int>& b) const {
  return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
}

// ---------------------------------------------------------------- group

FreeNilpotentGroup::FreeNilpotentGroup(int rank, int nilpotency_class)
    : basis_(std::make_shared<HallBasis>(rank, nilpotency_class)),
      collector_(std::make_shared<Collector>(*basis_)) {}

void FreeNilpotentGroup::multiply(const Int* a, const Int* b, Int* out) const {
  const std::size_t d = width();
  std::vector<Int> e(a, a + d);
  for (std::size_t k = 0; k < d; ++k) collector_->multiply_letter(e, static_cast<int>(k), b[k]);
  std::copy(e.begin(), e.end(), out);
}

void FreeNilpotentGroup::inverse(const Int* a, Int* out) const {
  auto e = collector_->inverse(std::vector<Int>(a, a + width()));
  std::copy(e.begin(), e.end(), out);
}

std::string FreeNilpotentGroup::fingerprint() const {
  return "free-nilpotent:" + std::to_string(basis_->rank()) + "," + std::to_string(basis_->nilpotency_class());
}

std::optional<int> FreeNilpotentGroup::homogeneous_dimension() const {
  int sum = 0;
  for (const auto& e : basis_->entries()) sum += e.weight;
  return sum;
}

Element FreeNilpotentGroup::generator(int i) const {
  Element e(width(), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return e;
}

// ---------------------------------------------------------------- associative algebra

NcPolynomial nc_add(const NcPolynomial& a, const NcPolynomial& b, const Rational& scale) {
  NcPolynomial out = a;
  for (const auto& [w, x] : b) {
    Rational& slot = out[w];
    slot += scale * x;
    if (slot == 0) out.erase(w);
  }
  return out;
}

NcPolynomial nc_multiply(const NcPolynomial& a, const NcPolynomial& b, int max_degree) {
  NcPolynomial out;
  for (const auto& [u, x] : a)
    for (const auto& [v, y] : b) {
      if (static_cast<int>(u.size() + v.size()) > max_degree) continue;
      out[u + v] += x * y;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

NcPolynomial nc_bracket(const NcPolynomial& a, const NcPolynomial& b, int max_degree) {
  return nc_add(nc_multiply(a, b, max_degree), nc_multiply(b, a, max_degree), -1);
}

NcPolynomial nc_exp(const NcPolynomial& a, int max_degree) {
  NcPolynomial result{{"", 1}};
  NcPolynomial term{{"", 1}};
  for (int k = 1; k <= max_degree; ++k) {
    term = nc_multiply(term, a, max_degree);
    result = nc_add(result, term, Rational(1) / BigInt(factorial(k)));
  }
  return result;
}

NcPolynomial nc_log(const NcPolynomial& one_plus_a, int max_degree) {
  NcPolynomial a = nc_add(one_plus_a, NcPolynomial{{"", 1}}, -1);
  NcPolynomial result, term{{"", 1}};
  for (int k = 1; k <= max_degree; ++k) {
    term = nc_multiply(term, a, max_degree);
    result = nc_add(result, term, Rational(k % 2 ? 1 : -1, k));
  }
  return result;
}

std::vector<BchTerm> dynkin_series(int max_degree) {
  std::map<std::string, Rational> acc;
  std::function<void(int, int, std::string, Rational, int)> extend;
  // n: pairs placed so far, total: letters so far, denom: product of factorials
  extend = [&](int n, int total, std::string word, Rational weight, int) {
    if (n > 0) {
      Rational coeff = weight * Rational(n % 2 ? 1 : -1, n) / total;
      bool zero = word.size() >= 2 && word[word.size() - 1] == word[word.size() - 2];
      if (!zero) acc[word] += coeff;
    }
    for (int r = 0; total + r <= max_degree; ++r)
      for (int s = 0; total + r + s <= max_degree; ++s) {
        if (r + s == 0) continue;
        Rational w = weight / BigInt(factorial(r) * factorial(s));
        extend(n + 1, total + r + s, word + std::string(static_cast<std::size_t>(r), 'X') + std::string(static_cast<std::size_t>(s), 'Y'), w, 0);
      }
  };
  extend(0, 0, "", Rational(1), 0);
  std::vector<BchTerm> out;
  for (const auto& [w, x] : acc)
    if (x != 0) out.push_back({w, x});
  std::stable_sort(out.begin(), out.end(), [](const BchTerm& a, const BchTerm& b) { return a.word.size() < b.word.size(); });
  return out;
}

// ---------------------------------------------------------------- Lie structure

LieStructure::LieStructure(const HallBasis& basis, std::size_t cap) : basis_(basis) {
  const int c = basis.nilpotency_class();
  const std::size_t d = basis.size();
  if (d > cap) throw ResourceError("Lie structure exceeds the basis size cap");
  images_.resize(d);
  by_weight_.assign(static_cast<std::size_t>(c) + 1, {});
  for (std::size_t k = 0; k < d; ++k) {
    const auto& e = basis[k];
    if (e.is_generator())
      images_[k] = {{std::string(1, static_cast<char>('0' + e.right)), 1}};
    else
      images_[k] = nc_bracket(images_[static_cast<std::size_t>(e.left)], images_[static_cast<std::size_t>(e.right)], c);
    by_weight_[static_cast<std::size_t>(e.weight)].push_back(static_cast<int>(k));
  }
  probe_words_.resize(static_cast<std::size_t>(c) + 1);
  probe_inverse_.resize(static_cast<std::size_t>(c) + 1);
  for (int w = 1; w <= c; ++w) {
    const auto& idx = by_weight_[static_cast<std::size_t>(w)];
    std::map<std::string, RatVector> rows;
    for (std::size_t j = 0; j < idx.size(); ++j)
      for (const auto& [word, x] : images_[static_cast<std::size_t>(idx[j])]) {
        auto& row = rows[word];
        row.resize(idx.size());
        row[j] = x;
      }
    RatMatrix chosen;
    std::vector<std::string> words;
    for (auto& [word, row] : rows) {
      row.resize(idx.size());
      RatMatrix trial = chosen;
      trial.push_back(row);
      if (rank(trial) > chosen.size()) {
        chosen.push_back(row);
        words.push_back(word);
      }
      if (chosen.size() == idx.size()) break;
    }
    if (chosen.size() != idx.size()) throw std::logic_error("basic brackets are not independent");
    RatMatrix inv(idx.size(), RatVector(idx.size()));
    for (std::size_t col = 0; col < idx.size(); ++col) {
      RatVector unit(idx.size(), 0);
      unit[col] = 1;
      auto x = solve(chosen, unit);
      for (std::size_t r = 0; r < idx.size(); ++r) inv[r][col] = x[r];
    }
    probe_words_[static_cast<std::size_t>(w)] = words;
    probe_inverse_[static_cast<std::size_t>(w)] = inv;
  }
  table_.assign(d, std::vector<std::vector<std::pair<int, Rational>>>(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      if (basis[a].weight + basis[b].weight > c || a == b) continue;
      auto coords = coordinates(nc_bracket(images_[a], images_[b], c));
      for (std::size_t k = 0; k < d; ++k)
        if (coords[k] != 0) table_[a][b].emplace_back(static_cast<int>(k), coords[k]);
    }
  bch_terms_ = dynkin_series(c);
  log_basis_.resize(d);
  for (std::size_t k = 0; k < d; ++k) {
    const auto& e = basis[k];
    if (e.is_generator()) {
      log_basis_[k].assign(d, 0);
      log_basis_[k][k] = 1;
      continue;
    }
    const auto& ls = log_basis_[static_cast<std::size_t>(e.left)];
    const auto& lt = log_basis_[static_cast<std::size_t>(e.right)];
    RatVector ns(d), nt(d);
    for (std::size_t i = 0; i < d; ++i) ns[i] = -ls[i], nt[i] = -lt[i];
    log_basis_[k] = bch(bch(ns, nt), bch(ls, lt));
  }
}

const std::vector<std::pair<int, Rational>>& LieStructure::bracket_of(int a, int b) const {
  return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

RatVector LieStructure::coordinates(const NcPolynomial& p) const {
  RatVector out(size(), 0);
  for (std::size_t w = 1; w < by_weight_.size(); ++w) {
    const auto& idx = by_weight_[w];
    if (idx.empty()) continue;
    RatVector rhs(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      auto it = p.find(probe_words_[w][i]);
      rhs[i] = it == p.end() ? Rational(0) : it->second;
    }
    for (std::size_t r = 0; r < idx.size(); ++r) {
      Rational s = 0;
      for (std::size_t i = 0; i < idx.size(); ++i) s += probe_inverse_[w][r][i] * rhs[i];
      out[static_cast<std::size_t>(idx[r])] = s;
    }
  }
  return out;
}

RatVector LieStructure::bracket(const RatVector& x, const RatVector& y) const {
  const std::size_t d = size();
  RatVector out(d, 0);
  for (std::size_t a = 0; a < d; ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < d; ++b) {
      if (y[b] == 0) continue;
      Rational f = x[a] * y[b];
      for (const auto& [k, c] : table_[a][b]) out[static_cast<std::size_t>(k)] += f * c;
    }
  }
  return out;
}

RatVector LieStructure::bch(const RatVector& x, const RatVector& y) const {
  const std::size_t d = size();
  RatVector out(d, 0);
  for (const auto& term : bch_terms_) {
    const auto& w = term.word;
    RatVector v = w.back() == 'X' ? x : y;
    for (std::size_t i = w.size() - 1; i-- > 0;) v = bracket(w[i] == 'X' ? x : y, v);
    for (std::size_t k = 0; k < d; ++k) out[k] += term.coefficient * v[k];
  }
  return out;
}

RatVector LieStructure::log(const RatVector& a) const {
  const std::size_t d = size();
  RatVector z(d, 0);
  for (std::size_t k = 0; k < d; ++k) {
    if (a[k] == 0) continue;
    RatVector step(d);
    for (std::size_t i = 0; i < d; ++i) step[i] = a[k] * log_basis_[k][i];
    z = bch(z, step);
  }
  return z;
}

RatVector LieStructure::exp(const RatVector& lie) const {
  const std::size_t d = size();
  RatVector z = lie, a(d, 0);
  for (std::size_t k = 0; k < d; ++k) {
    a[k] = z[k];
    if (a[k] == 0) continue;
    RatVector step(d);
    for (std::size_t i = 0; i < d; ++i) step[i] = -a[k] * log_basis_[k][i];
    z = bch(step, z);
  }
  return a;
}

RatVector LieStructure::multiply(const RatVector& a, const RatVector& b) const {
  return exp(bch(log(a), log(b)));
}

RatVector LieStructure::power(const RatVector& a, const Rational& eta) const {
  RatVector z = log(a);
  for (auto& x : z) x *= eta;
  return exp(z);
}

RatVector to_rational(const std::vector<Int>& v) {
  RatVector out;
  out.reserve(v.size());
  for (Int x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

}  // namespace growthlab
