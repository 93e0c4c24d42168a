#pragma once

// Locally checkable labelings: generic window verification plus the concrete
// problems used throughout the toolkit (toast-boundary windows, their refined
// two-colored variants, and proper grid colorings).

#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "toastkit/toast.hpp"

namespace toastkit {

// Dense labeling of the square window [0, 2q]^n, row-major with the last
// axis fastest (matching Box::index).
struct WindowAssignment {
  int n = 2;
  i64 q = 4;
  std::vector<char> values;

  WindowAssignment() = default;
  WindowAssignment(int dim, i64 spacing, char fill = 'G');

  i64 width() const { return 2 * q + 1; }
  i64 cells() const;
  i64 index(const Point& p) const;  // p in [0, 2q]^n
  char at(const Point& p) const { return values[(size_t)index(p)]; }
  void set(const Point& p, char v) { values[(size_t)index(p)] = v; }

  friend bool operator==(const WindowAssignment& a, const WindowAssignment& b) {
    return a.n == b.n && a.q == b.q && a.values == b.values;
  }
  friend bool operator<(const WindowAssignment& a, const WindowAssignment& b) {
    return a.values < b.values;
  }
};

// Orbit of the assignment under the hyperoctahedral group (axis permutations
// and reflections about the window center), sorted and deduplicated.
std::vector<WindowAssignment> symmetry_orbit(const WindowAssignment& phi);

// Decides whether an {R,B,G} window is a restriction of some toast boundary
// labeling with spacing q. The search works in the window inflated by a
// configurable radius per side (default q+2) and enumerates families of
// candidate rects whose sides may be clipped at the inflated domain edge.
class RtMembership {
 public:
  explicit RtMembership(i64 q, i64 inflation = -1);

  i64 q() const { return q_; }
  i64 inflation() const { return inflation_; }

  // Memoized on the lexicographic minimum over the symmetry orbit;
  // thread-safe.
  bool member(const WindowAssignment& phi);
  // The underlying bounded search, no caching. Exposed so invariance of the
  // decision across an orbit can be tested without the cache masking it.
  bool decide_raw(const WindowAssignment& phi) const;

 private:
  i64 q_;
  i64 inflation_;
  std::mutex mu_;
  std::unordered_map<std::string, bool> raw_memo_;
  std::unordered_map<std::string, bool> canon_memo_;
  // Per-dimension symmetry index maps (target cell -> source cell), built on
  // first use so canonicalization is a byte permutation.
  std::unordered_map<int, std::vector<std::vector<int>>> sym_maps_;
};

// Convenience wrapper over a process-wide cache keyed by q.
bool rt_window_member(const WindowAssignment& phi);

struct LclProblem {
  std::string name;
  int n = 2;
  std::vector<Point> window;  // offsets relative to the anchor
  std::string alphabet;
  // If nonzero, windows consisting entirely of this label are always
  // allowed, which lets the verifier skip them wholesale.
  char neutral = 0;
  // Values aligned with `window`.
  std::function<bool(const std::vector<char>&)> member;
};

// Window [0, 2q]^n anchored at its low corner; membership via RtMembership.
LclProblem make_rt_problem(i64 q, int n = 2);
// Proper k-coloring with alphabet "0".."k-1": the anchor differs from each
// positive-axis neighbor.
LclProblem make_coloring_problem(int n, int k);

// Every anchor whose translated window stays inside the box (all anchors on
// a torus) with a failing membership test.
std::vector<Violation> verify_labeling(const LclProblem& p, const Labeling& f);

// Refined toast labelings over {R,B,0,1}: projecting 0,1 to G must pass the
// spacing-q window check (tag C1) and the 0/1 cells must form a proper
// partial coloring (tag C2).
std::vector<Violation> crt_verify(const Labeling& f, i64 q);

// The monotone-staircase strengthening in two dimensions: crt_verify plus
// the pointwise conditions on the indicator layers h1, h2 (tags +2, +3, +4).
std::vector<Violation> crt_plus_verify(const Labeling& f, const Labeling& h1,
                                       const Labeling& h2, i64 q);

}  // namespace toastkit
