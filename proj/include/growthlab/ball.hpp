// Breadth-first enumeration of balls and product sets.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "growthlab/element_set.hpp"
#include "growthlab/group.hpp"

namespace growthlab {

struct BallOptions {
  std::size_t cap = 20'000'000;  // maximum number of stored elements
  bool parallel = true;
  bool stop_at_saturation = false;  // end early once a layer adds nothing
};

/// Ball sizes beta(0..R) of a Cayley graph.
struct BallProfile {
  std::string group;
  std::vector<Int> beta;
  bool truncated = false;  // enumeration stopped at the cap before the requested radius

  int radius() const { return static_cast<int>(beta.size()) - 1; }
  Int sphere(int n) const { return n == 0 ? beta[0] : beta[static_cast<std::size_t>(n)] - beta[static_cast<std::size_t>(n) - 1]; }
  bool operator==(const BallProfile&) const = default;
};

/// Elements of a ball, grouped by distance layer in discovery order.
struct Ball {
  ElementSet elements;
  std::vector<std::size_t> layer_end;  // elements of layer n are [layer_end[n-1], layer_end[n])
  bool truncated = false;

  int radius() const { return static_cast<int>(layer_end.size()) - 1; }
  BallProfile profile(const std::string& group) const;
  /// Layer index of an element, if present.
  std::optional<int> layer_of(const Element& e) const;
};

/// Layer-by-layer enumeration of start * (steps u {1})^n.
class BallGrower {
 public:
  BallGrower(const Group& g, const std::vector<Element>& start, const std::vector<Element>& steps,
             const BallOptions& options = {});

  /// Adds one layer; returns false (and marks the ball truncated) when the cap would be exceeded.
  bool grow();
  const Ball& ball() const { return ball_; }
  Ball take() { return std::move(ball_); }
  /// Elements of the most recent layer are [first_new(), ball().elements.size()).
  std::size_t first_new() const { return lo_; }

 private:
  const Group* g_;
  std::vector<Element> moves_;
  BallOptions options_;
  Ball ball_;
  std::size_t lo_ = 0;
};

/// start * (steps u {1})^n for n = 0..radius, parallel over each frontier.
Ball grow_ball(const Group& g, const std::vector<Element>& start, const std::vector<Element>& steps, int radius,
               const BallOptions& options = {});

/// Reference implementation with a node-based hash set and a single queue.
Ball grow_ball_serial(const Group& g, const std::vector<Element>& start, const std::vector<Element>& steps,
                      int radius, const BallOptions& options = {});

/// Ball profile of the Cayley graph of S (the identity is always adjoined).
BallProfile ball_profile(const Group& g, const GeneratingSet& s, int radius, const BallOptions& options = {});

/// Graph diameter of a finite group, by breadth-first search to saturation.
int diameter(const Group& g, const GeneratingSet& s, const BallOptions& options = {});

/// Distinct elements a*b, in order of a then b.
ElementSet product_set(const Group& g, const ElementSet& a, const ElementSet& b, const BallOptions& options = {});
ElementSet product_set_serial(const Group& g, const ElementSet& a, const ElementSet& b);

ElementSet make_set(const Group& g, const std::vector<Element>& elements);

}  // namespace growthlab
