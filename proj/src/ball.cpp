#include "growthlab/ball.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace growthlab {

namespace {

constexpr std::uint64_t kPending = std::uint64_t{1} << 63;
constexpr std::size_t kChunkCandidates = std::size_t{1} << 20;

std::vector<Element> with_identity(const Group& g, const std::vector<Element>& steps) {
  std::vector<Element> out;
  ElementSet seen(g.width());
  auto add = [&](Element e) {
    e = g.canonical(std::move(e));
    if (seen.insert(e).second) out.push_back(std::move(e));
  };
  add(g.identity());
  for (const auto& s : steps) add(s);
  return out;
}

ElementSet rebuild(const ElementSet& src, std::size_t keep) {
  ElementSet out(src.width());
  for (std::size_t i = 0; i < keep; ++i) out.insert(src.at(i));
  return out;
}

// Appends the distinct new products frontier[lo, hi) x steps to the set; returns false on cap.
bool expand_parallel(const Group& g, ElementSet& set, std::size_t lo, std::size_t hi,
                     const std::vector<Element>& steps, std::size_t cap) {
  const std::size_t w = g.width();
  const std::size_t k = steps.size();
  const std::size_t per_chunk = std::max<std::size_t>(1, kChunkCandidates / k);
  std::vector<Int> cand;
  std::vector<std::uint64_t> hashes;
  std::vector<unsigned char> fresh;
  std::vector<std::vector<std::size_t>> buckets(ElementSet::kShards);
  std::vector<std::size_t> ids;
  for (std::size_t base = lo; base < hi; base += per_chunk) {
    const std::size_t top = std::min(hi, base + per_chunk);
    const std::size_t n = (top - base) * k;
    cand.resize(n * w);
    hashes.resize(n);
    fresh.assign(n, 0);
    ids.assign(n, 0);
    const auto count = static_cast<long>(top - base);
    std::exception_ptr failure;
#pragma omp parallel for schedule(static)
    for (long f = 0; f < count; ++f) {
      try {
        const Int* a = set.at(base + static_cast<std::size_t>(f));
        for (std::size_t j = 0; j < k; ++j) {
          const std::size_t c = static_cast<std::size_t>(f) * k + j;
          g.multiply(a, steps[j].data(), cand.data() + c * w);
          hashes[c] = hash_coords(cand.data() + c * w, w);
        }
      } catch (...) {
#pragma omp critical
        failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    for (auto& b : buckets) b.clear();
    for (std::size_t c = 0; c < n; ++c) buckets[ElementSet::shard_of(hashes[c])].push_back(c);

    const std::size_t existing = set.size();
    auto same = [&](std::uint64_t id, const Int* e) {
      const Int* other = (id & kPending) ? cand.data() + (id & ~kPending) * w : set.at(id);
      return set.equal(other, e);
    };
    const auto shards = static_cast<long>(ElementSet::kShards);
#pragma omp parallel for schedule(dynamic, 1)
    for (long s = 0; s < shards; ++s) {
      IdTable& table = set.shard(static_cast<std::size_t>(s));
      for (std::size_t c : buckets[static_cast<std::size_t>(s)]) {
        const Int* e = cand.data() + c * w;
        std::size_t slot = table.probe(hashes[c], [&](std::uint64_t id) { return same(id, e); });
        if (table.id_at(slot) != IdTable::kEmpty) continue;
        table.put(slot, hashes[c], kPending | c);
        fresh[c] = 1;
      }
    }
    std::size_t added = 0;
    for (std::size_t c = 0; c < n; ++c) added += fresh[c];
    if (existing + added > cap) return false;
    for (std::size_t c = 0; c < n; ++c) {
      if (!fresh[c]) continue;
      ids[c] = set.size();
      set.append_raw(cand.data() + c * w);
    }
#pragma omp parallel for schedule(dynamic, 1)
    for (long s = 0; s < shards; ++s) {
      IdTable& table = set.shard(static_cast<std::size_t>(s));
      for (std::size_t c : buckets[static_cast<std::size_t>(s)]) {
        if (!fresh[c]) continue;
        std::size_t slot = table.probe(hashes[c], [&](std::uint64_t id) { return id == (kPending | c); });
        table.set_id(slot, ids[c]);
      }
    }
  }
  return true;
}

}  // namespace

BallProfile Ball::profile(const std::string& group) const {
  BallProfile p;
  p.group = group;
  for (std::size_t end : layer_end) p.beta.push_back(static_cast<Int>(end));
  p.truncated = truncated;
  return p;
}

std::optional<int> Ball::layer_of(const Element& e) const {
  auto id = elements.find(e.data());
  if (!id) return std::nullopt;
  auto it = std::upper_bound(layer_end.begin(), layer_end.end(), *id);
  return static_cast<int>(it - layer_end.begin());
}

BallGrower::BallGrower(const Group& g, const std::vector<Element>& start, const std::vector<Element>& steps,
                       const BallOptions& options)
    : g_(&g), moves_(with_identity(g, steps)), options_(options), ball_{ElementSet(g.width()), {}, false} {
  for (const auto& s : start) ball_.elements.insert(g.canonical(s));
  if (ball_.elements.size() > options.cap) throw ResourceError("start set exceeds the element cap");
  ball_.layer_end.push_back(ball_.elements.size());
}

bool BallGrower::grow() {
  if (ball_.truncated) return false;
  const std::size_t hi = ball_.elements.size();
  const std::size_t from = ball_.layer_end.size() >= 2 ? ball_.layer_end[ball_.layer_end.size() - 2] : 0;
  if (!expand_parallel(*g_, ball_.elements, from, hi, moves_, options_.cap)) {
    ball_.elements = rebuild(ball_.elements, hi);
    ball_.truncated = true;
    return false;
  }
  lo_ = hi;
  ball_.layer_end.push_back(ball_.elements.size());
  return true;
}

Ball grow_ball(const Group& g, const std::vector<Element>& start, const std::vector<Element>& steps, int radius,
               const BallOptions& options) {
  if (!options.parallel) return grow_ball_serial(g, start, steps, radius, options);
  BallGrower grower(g, start, steps, options);
  for (int n = 1; n <= radius; ++n) {
    const std::size_t before = grower.ball().elements.size();
    if (!grower.grow()) break;
    if (options.stop_at_saturation && grower.ball().elements.size() == before) break;
  }
  return grower.take();
}

namespace {

struct VectorHash {
  std::size_t operator()(const Element& e) const { return hash_coords(e.data(), e.size()); }
};

}  // namespace

Ball grow_ball_serial(const Group& g, const std::vector<Element>& start, const std::vector<Element>& steps,
                      int radius, const BallOptions& options) {
  const auto moves = with_identity(g, steps);
  std::unordered_set<Element, VectorHash> seen;
  std::vector<Element> order;
  std::vector<std::size_t> layer_end;
  for (const auto& s : start) {
    Element c = g.canonical(s);
    if (seen.insert(c).second) order.push_back(c);
  }
  layer_end.push_back(order.size());
  bool truncated = false;
  std::size_t lo = 0;
  for (int n = 1; n <= radius && !truncated; ++n) {
    const std::size_t hi = order.size();
    std::vector<Element> layer;
    for (std::size_t i = lo; i < hi; ++i)
      for (const auto& s : moves) {
        Element p = g.multiply(order[i], s);
        if (seen.insert(p).second) layer.push_back(std::move(p));
      }
    if (hi + layer.size() > options.cap) {
      truncated = true;
      break;
    }
    for (auto& e : layer) order.push_back(std::move(e));
    lo = hi;
    layer_end.push_back(order.size());
    if (options.stop_at_saturation && layer.empty()) break;
  }
  Ball ball{ElementSet(g.width()), layer_end, truncated};
  for (const auto& e : order) ball.elements.insert(e);
  return ball;
}

BallProfile ball_profile(const Group& g, const GeneratingSet& s, int radius, const BallOptions& options) {
  return grow_ball(g, {g.identity()}, s.elements, radius, options).profile(g.fingerprint());
}

int diameter(const Group& g, const GeneratingSet& s, const BallOptions& options) {
  const auto moves = with_identity(g, s.elements);
  Ball ball{ElementSet(g.width()), {1}, false};
  ball.elements.insert(g.identity());
  std::size_t lo = 0;
  for (int n = 1;; ++n) {
    const std::size_t hi = ball.elements.size();
    if (!expand_parallel(g, ball.elements, lo, hi, moves, options.cap))
      throw ResourceError("diameter search exceeded the element cap");
    if (ball.elements.size() == hi) return n - 1;
    lo = hi;
  }
}

ElementSet product_set(const Group& g, const ElementSet& a, const ElementSet& b, const BallOptions& options) {
  if (!options.parallel) return product_set_serial(g, a, b);
  const std::size_t w = g.width();
  const std::size_t nb = b.size();
  ElementSet out(w);
  if (nb == 0) return out;
  const std::size_t per_chunk = std::max<std::size_t>(1, kChunkCandidates / nb);
  std::vector<Int> cand;
  std::vector<std::uint64_t> hashes;
  for (std::size_t base = 0; base < a.size(); base += per_chunk) {
    const std::size_t top = std::min(a.size(), base + per_chunk);
    const std::size_t n = (top - base) * nb;
    cand.resize(n * w);
    hashes.resize(n);
    const auto count = static_cast<long>(top - base);
    std::exception_ptr failure;
#pragma omp parallel for schedule(static)
    for (long i = 0; i < count; ++i) {
      try {
        for (std::size_t j = 0; j < nb; ++j) {
          const std::size_t c = static_cast<std::size_t>(i) * nb + j;
          g.multiply(a.at(base + static_cast<std::size_t>(i)), b.at(j), cand.data() + c * w);
          hashes[c] = hash_coords(cand.data() + c * w, w);
        }
      } catch (...) {
#pragma omp critical
        failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    for (std::size_t c = 0; c < n; ++c) {
      out.insert(cand.data() + c * w, hashes[c]);
      if (out.size() > options.cap) throw ResourceError("product set exceeds the element cap");
    }
  }
  return out;
}

ElementSet product_set_serial(const Group& g, const ElementSet& a, const ElementSet& b) {
  ElementSet out(g.width());
  Element p(g.width());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      g.multiply(a.at(i), b.at(j), p.data());
      out.insert(p);
    }
  return out;
}

ElementSet make_set(const Group& g, const std::vector<Element>& elements) {
  ElementSet out(g.width());
  for (const auto& e : elements) out.insert(g.canonical(e));
  return out;
}

}  // namespace growthlab
