#include "growthlab/group.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "growthlab/element_set.hpp"

namespace growthlab {

Element Group::multiply(const Element& a, const Element& b) const {
  Element out(width());
  multiply(a.data(), b.data(), out.data());
  return out;
}

Element Group::inverse(const Element& a) const {
  Element out(width());
  inverse(a.data(), out.data());
  return out;
}

Element Group::canonical(Element a) const {
  if (a.size() != width()) throw PreconditionError("element has wrong number of coordinates");
  canonicalize(a.data());
  return a;
}

Element Group::power(const Element& a, Int k) const {
  Element base = k < 0 ? inverse(a) : a;
  Int e = k < 0 ? -k : k;
  Element acc = identity();
  while (e > 0) {
    if (e & 1) acc = multiply(acc, base);
    e >>= 1;
    if (e) base = multiply(base, base);
  }
  return acc;
}

Element Group::commutator(const Element& a, const Element& b) const {
  return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
}

Element Group::product(const std::vector<Element>& word) const {
  Element acc = identity();
  for (const auto& w : word) acc = multiply(acc, w);
  return acc;
}

bool Group::is_identity(const Element& a) const {
  return std::all_of(a.begin(), a.end(), [](Int x) { return x == 0; });
}

bool Group::commute(const Element& a, const Element& b) const {
  return multiply(a, b) == multiply(b, a);
}

// ---------------------------------------------------------------- abelian

AbelianGroup::AbelianGroup(const AbelianSpec& spec)
    : rank_(spec.rank), hnf_(spec.relations, spec.rank) {
  if (rank_ == 0) throw PreconditionError("abelian group needs rank >= 1");
  for (const auto& row : hnf_.rows()) {
    std::vector<Int> r;
    for (const auto& x : row) r.push_back(to_int(x));
    rows_.push_back(std::move(r));
  }
  pivots_ = hnf_.pivots();
}

void AbelianGroup::canonicalize(Int* a) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::size_t col = pivots_[i];
    Int q = floor_div(a[col], rows_[i][col]);
    if (q == 0) continue;
    for (std::size_t k = col; k < rank_; ++k) a[k] = checked_sub(a[k], checked_mul(q, rows_[i][k]));
  }
}

void AbelianGroup::multiply(const Int* a, const Int* b, Int* out) const {
  for (std::size_t i = 0; i < rank_; ++i) out[i] = checked_add(a[i], b[i]);
  canonicalize(out);
}

void AbelianGroup::inverse(const Int* a, Int* out) const {
  for (std::size_t i = 0; i < rank_; ++i) out[i] = checked_sub(0, a[i]);
  canonicalize(out);
}

std::string AbelianGroup::fingerprint() const {
  std::string s = "abelian(" + std::to_string(rank_) + ";";
  for (const auto& r : rows_) {
    s += "[";
    for (std::size_t k = 0; k < r.size(); ++k) s += (k ? "," : "") + std::to_string(r[k]);
    s += "]";
  }
  return s + ")";
}

std::optional<BigInt> AbelianGroup::order() const {
  if (hnf_.rank() != rank_) return std::nullopt;
  return hnf_.index();
}

std::optional<int> AbelianGroup::hirsch_length() const {
  return static_cast<int>(rank_ - hnf_.rank());
}

// ---------------------------------------------------------------- heisenberg

HeisenbergGroup::HeisenbergGroup(const HeisenbergSpec& spec) : spec_(spec) {
  if (spec_.quotient != HeisenbergSpec::Quotient::None && spec_.modulus < 1)
    throw PreconditionError("Heisenberg quotient needs a positive modulus");
}

void HeisenbergGroup::canonicalize(Int* a) const {
  using Q = HeisenbergSpec::Quotient;
  const Int m = spec_.modulus;
  switch (spec_.quotient) {
    case Q::None:
      break;
    case Q::Center:
      a[2] = mod_floor(a[2], m);
      break;
    case Q::XZ:
      a[0] = mod_floor(a[0], m);
      a[2] = mod_floor(a[2], m);
      break;
    case Q::Full:
      a[0] = mod_floor(a[0], m);
      a[1] = mod_floor(a[1], m);
      a[2] = mod_floor(a[2], m);
      break;
  }
}

void HeisenbergGroup::multiply(const Int* a, const Int* b, Int* out) const {
  Int c = checked_add(checked_add(a[2], b[2]), checked_mul(b[0], a[1]));
  out[0] = checked_add(a[0], b[0]);
  out[1] = checked_add(a[1], b[1]);
  out[2] = c;
  canonicalize(out);
}

void HeisenbergGroup::inverse(const Int* a, Int* out) const {
  Int c = checked_sub(checked_mul(a[0], a[1]), a[2]);
  out[0] = -a[0];
  out[1] = -a[1];
  out[2] = c;
  canonicalize(out);
}

std::string HeisenbergGroup::fingerprint() const {
  using Q = HeisenbergSpec::Quotient;
  switch (spec_.quotient) {
    case Q::None:
      return "heisenberg";
    case Q::Center:
      return "heisenberg-modz:" + std::to_string(spec_.modulus);
    case Q::XZ:
      return "heisenberg-modxz:" + std::to_string(spec_.modulus);
    case Q::Full:
      return "heisenberg-mod:" + std::to_string(spec_.modulus);
  }
  return "heisenberg";
}

std::optional<BigInt> HeisenbergGroup::order() const {
  if (spec_.quotient != HeisenbergSpec::Quotient::Full) return std::nullopt;
  BigInt m = static_cast<long>(spec_.modulus);
  return m * m * m;
}

std::optional<int> HeisenbergGroup::hirsch_length() const {
  using Q = HeisenbergSpec::Quotient;
  switch (spec_.quotient) {
    case Q::None:
      return 3;
    case Q::Center:
      return 2;
    case Q::XZ:
      return 1;
    case Q::Full:
      return 0;
  }
  return std::nullopt;
}

std::optional<int> HeisenbergGroup::homogeneous_dimension() const {
  if (spec_.quotient == HeisenbergSpec::Quotient::None) return 4;
  return hirsch_length();
}

std::optional<Element> HeisenbergGroup::center_coset_key(const Element& g) const {
  if (spec_.quotient != HeisenbergSpec::Quotient::None && spec_.modulus < 2) return std::nullopt;
  return Element{g[0], g[1]};
}

// ---------------------------------------------------------------- semidirect

namespace {

using IntMat = std::vector<std::vector<Int>>;

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  std::size_t n = a.size();
  IntMat c(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] = checked_add(c[i][j], checked_mul(a[i][k], b[k][j]));
  return c;
}

}  // namespace

SemidirectGroup::SemidirectGroup(const SemidirectSpec& spec) : d_(spec.dimension) {
  IntMat id(d_, std::vector<Int>(d_, 0));
  for (std::size_t i = 0; i < d_; ++i) id[i][i] = 1;
  std::map<IntMat, std::size_t> index;
  mats_.push_back(id);
  index[id] = 0;
  for (const auto& g : spec.matrices) {
    if (g.size() != d_ || std::any_of(g.begin(), g.end(), [&](const auto& r) { return r.size() != d_; }))
      throw PreconditionError("linear part has wrong shape");
  }
  for (std::size_t head = 0; head < mats_.size(); ++head) {
    for (const auto& g : spec.matrices) {
      IntMat p = mat_mul(mats_[head], g);
      if (!index.count(p)) {
        if (mats_.size() > 4096) throw ResourceError("linear part is not a small finite group");
        index[p] = mats_.size();
        mats_.push_back(p);
      }
    }
  }
  std::size_t n = mats_.size();
  mult_.assign(n, std::vector<std::size_t>(n));
  inv_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto it = index.find(mat_mul(mats_[i], mats_[j]));
      if (it == index.end()) throw PreconditionError("linear part is not closed");
      mult_[i][j] = it->second;
      if (it->second == 0) inv_[i] = j;
    }
}

void SemidirectGroup::multiply(const Int* a, const Int* b, Int* out) const {
  const auto& A = mats_[static_cast<std::size_t>(a[d_])];
  Int tmp[16];
  std::vector<Int> big;
  Int* v = tmp;
  if (d_ > 16) {
    big.resize(d_);
    v = big.data();
  }
  for (std::size_t i = 0; i < d_; ++i) {
    Int s = a[i];
    for (std::size_t k = 0; k < d_; ++k) s = checked_add(s, checked_mul(A[i][k], b[k]));
    v[i] = s;
  }
  std::copy(v, v + d_, out);
  out[d_] = static_cast<Int>(mult_[static_cast<std::size_t>(a[d_])][static_cast<std::size_t>(b[d_])]);
}

void SemidirectGroup::inverse(const Int* a, Int* out) const {
  std::size_t k = inv_[static_cast<std::size_t>(a[d_])];
  const auto& B = mats_[k];
  std::vector<Int> v(d_);
  for (std::size_t i = 0; i < d_; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < d_; ++j) s = checked_sub(s, checked_mul(B[i][j], a[j]));
    v[i] = s;
  }
  std::copy(v.begin(), v.end(), out);
  out[d_] = static_cast<Int>(k);
}

std::string SemidirectGroup::fingerprint() const {
  std::string s = "semidirect(" + std::to_string(d_) + ";";
  for (const auto& m : mats_) {
    s += "[";
    for (const auto& r : m)
      for (Int x : r) s += std::to_string(x) + " ";
    s += "]";
  }
  return s + ")";
}

// ---------------------------------------------------------------- finite table

FiniteTableGroup::FiniteTableGroup(const FiniteTableSpec& spec) : n_(spec.table.size()) {
  if (n_ == 0) throw PreconditionError("empty multiplication table");
  for (const auto& r : spec.table) {
    if (r.size() != n_) throw PreconditionError("multiplication table is not square");
    for (int x : r)
      if (x < 0 || static_cast<std::size_t>(x) >= n_) throw PreconditionError("table entry out of range");
  }
  std::size_t e = n_;
  for (std::size_t i = 0; i < n_ && e == n_; ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < n_ && ok; ++j)
      ok = static_cast<std::size_t>(spec.table[i][j]) == j && static_cast<std::size_t>(spec.table[j][i]) == j;
    if (ok) e = i;
  }
  if (e == n_) throw PreconditionError("multiplication table has no identity");
  relabel_.assign(n_, 0);
  std::vector<std::size_t> original(n_);
  Int next = 1;
  for (std::size_t i = 0; i < n_; ++i) {
    relabel_[i] = i == e ? 0 : next++;
    original[static_cast<std::size_t>(relabel_[i])] = i;
  }
  table_.assign(n_, std::vector<Int>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      table_[i][j] = relabel_[static_cast<std::size_t>(spec.table[original[i]][original[j]])];
  for (std::size_t i = 0; i < n_; ++i) {
    std::set<Int> row(table_[i].begin(), table_[i].end());
    if (row.size() != n_) throw PreconditionError("multiplication table is not a Latin square");
  }
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      for (std::size_t c = 0; c < n_; ++c)
        if (table_[static_cast<std::size_t>(table_[a][b])][c] != table_[a][static_cast<std::size_t>(table_[b][c])])
          throw PreconditionError("multiplication table is not associative");
  inv_.assign(n_, 0);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      if (table_[a][b] == 0) inv_[a] = static_cast<Int>(b);
  std::uint64_t h = 0;
  for (const auto& r : table_) h = mix64(h ^ hash_coords(r.data(), r.size()));
  digest_ = std::to_string(n_) + ":" + std::to_string(h);
}

void FiniteTableGroup::canonicalize(Int* a) const {
  if (a[0] < 0 || static_cast<std::size_t>(a[0]) >= n_) throw PreconditionError("element index out of range");
}

void FiniteTableGroup::multiply(const Int* a, const Int* b, Int* out) const {
  out[0] = table_[static_cast<std::size_t>(a[0])][static_cast<std::size_t>(b[0])];
}

void FiniteTableGroup::inverse(const Int* a, Int* out) const { out[0] = inv_[static_cast<std::size_t>(a[0])]; }

std::string FiniteTableGroup::fingerprint() const { return "table(" + digest_ + ")"; }

bool FiniteTableGroup::is_abelian() const {
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

// ---------------------------------------------------------------- filiform

FiliformGroup::FiliformGroup(int dimension) : dim_(dimension) {
  if (dim_ < 2 || dim_ > 65) throw PreconditionError("filiform dimension must lie in [2, 65]");
}

void FiliformGroup::act(Int t, const Int* w, Int* out) const {
  // J^t = (I + N)^(-t), N shifting y_j to y_{j+1}
  const int n = dim_ - 1;
  Int binom[64];
  binom[0] = 1;
  const Int top = -t;
  for (int i = 1; i < n; ++i) binom[i] = checked_mul(binom[i - 1], checked_sub(top, i - 1)) / i;
  for (int k = 0; k < n; ++k) {
    Int s = 0;
    for (int j = 0; j <= k; ++j) s = checked_add(s, checked_mul(binom[k - j], w[j]));
    out[k] = s;
  }
}

void FiliformGroup::multiply(const Int* a, const Int* b, Int* out) const {
  const int n = dim_ - 1;
  Int moved[64];
  act(a[n], b, moved);
  for (int k = 0; k < n; ++k) out[k] = checked_add(a[k], moved[k]);
  out[n] = checked_add(a[n], b[n]);
}

void FiliformGroup::inverse(const Int* a, Int* out) const {
  const int n = dim_ - 1;
  Int moved[64];
  act(-a[n], a, moved);
  for (int k = 0; k < n; ++k) out[k] = -moved[k];
  out[n] = -a[n];
}

std::string FiliformGroup::fingerprint() const { return "filiform:" + std::to_string(dim_); }

// ---------------------------------------------------------------- generating sets

GeneratingSet GeneratingSet::symmetrized(const Group& g) const {
  GeneratingSet out;
  ElementSet seen(g.width());
  auto add = [&](const Element& e) {
    if (seen.insert(e).second) out.elements.push_back(e);
  };
  add(g.identity());
  for (const auto& s : elements) {
    Element c = g.canonical(s);
    add(c);
    add(g.inverse(c));
  }
  return out;
}

bool GeneratingSet::is_symmetric(const Group& g) const {
  ElementSet seen(g.width());
  for (const auto& s : elements) seen.insert(g.canonical(s));
  for (const auto& s : elements)
    if (!seen.contains(g.inverse(g.canonical(s)))) return false;
  return true;
}

bool GeneratingSet::contains_identity(const Group& g) const {
  for (const auto& s : elements)
    if (g.is_identity(g.canonical(s))) return true;
  return false;
}

GeneratingSet standard_generators(const Group& g, const std::vector<Element>& gens) {
  return GeneratingSet{gens}.symmetrized(g);
}

Element evaluate_word(const Group& g, const std::vector<Element>& gens, const std::vector<int>& word) {
  Element out = g.identity();
  for (int letter : word) {
    const std::size_t k = static_cast<std::size_t>(letter < 0 ? -letter : letter);
    if (letter == 0 || k > gens.size())
      throw PreconditionError("word letter " + std::to_string(letter) + " does not name a generator");
    const Element& x = gens[k - 1];
    out = g.multiply(out, letter > 0 ? g.canonical(x) : g.inverse(g.canonical(x)));
  }
  return out;
}

}  // namespace growthlab
