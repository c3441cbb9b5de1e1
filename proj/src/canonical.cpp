#include "cdg/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdio>
#include <utility>

namespace cdg {

namespace {

using Words = std::array<std::uint64_t, 2>;

void set_bit(Words& w, int idx) {
  w[idx / 64] |= std::uint64_t{1} << (63 - idx % 64);
}

/// Compares the first `bits` bits of two packed strings.
/// Returns -1, 0 or 1.
int prefix_compare(const Words& a, const Words& b, int bits) {
  std::uint64_t m0 =
      bits >= 64 ? ~std::uint64_t{0}
                 : (bits == 0 ? 0 : ~std::uint64_t{0} << (64 - bits));
  std::uint64_t m1 =
      bits <= 64 ? 0 : ~std::uint64_t{0} << (128 - bits);
  if ((a[0] & m0) != (b[0] & m0)) return (a[0] & m0) < (b[0] & m0) ? -1 : 1;
  if ((a[1] & m1) != (b[1] & m1)) return (a[1] & m1) < (b[1] & m1) ? -1 : 1;
  return 0;
}

/// Equitable-style colour refinement. Vertices start coloured by degree;
/// each round sorts vertices by (colour, multiset of neighbour colours) and
/// reassigns colour indices in that order. The resulting partition and its
/// class order depend only on the isomorphism type.
std::vector<int> refine_colors(const SmallGraph& g) {
  int n = g.order();
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = g.degree(v);
  int classes = 0;
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> sigs(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> sig;
      sig.push_back(color[v]);
      for (std::uint32_t m = g.neighbors(v); m != 0; m &= m - 1) {
        sig.push_back(color[std::countr_zero(m)]);
      }
      std::sort(sig.begin() + 1, sig.end());
      sigs[v] = {std::move(sig), v};
    }
    std::sort(sigs.begin(), sigs.end());
    std::vector<int> next(n);
    int c = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sigs[i].first != sigs[i - 1].first) ++c;
      next[sigs[i].second] = c;
    }
    color = std::move(next);
    if (c + 1 == classes) break;
    classes = c + 1;
    if (classes == n) break;
  }
  return color;
}

struct CanonSearch {
  const SmallGraph& g;
  std::vector<int> color;
  std::vector<int> placed;
  std::vector<int> best_placed;
  Words cur{};
  Words best{};
  bool have_best = false;
  std::uint32_t used = 0;

  explicit CanonSearch(const SmallGraph& graph)
      : g(graph), color(refine_colors(graph)) {
    placed.reserve(g.order());
  }

  void run() { descend(0); }

  /// Extends the partial ordering one position at a time. Candidates always
  /// come from the lowest colour class still holding unplaced vertices, and
  /// a branch survives only while its packed prefix is no larger than the
  /// best complete string found so far.
  void descend(int pos) {
    int n = g.order();
    if (pos == n) {
      int bits = n * (n - 1) / 2;
      if (!have_best || prefix_compare(cur, best, bits) < 0) {
        best = cur;
        best_placed = placed;
        have_best = true;
      }
      return;
    }
    int min_color = -1;
    for (int v = 0; v < n; ++v) {
      if (used & (std::uint32_t{1} << v)) continue;
      if (min_color < 0 || color[v] < min_color) min_color = color[v];
    }
    int offset = pos * (pos - 1) / 2;
    for (int v = 0; v < n; ++v) {
      if (used & (std::uint32_t{1} << v)) continue;
      if (color[v] != min_color) continue;
      Words saved = cur;
      for (int i = 0; i < pos; ++i) {
        if (g.has_edge(v, placed[i])) set_bit(cur, offset + i);
      }
      if (have_best && prefix_compare(cur, best, offset + pos) > 0) {
        cur = saved;
        continue;
      }
      placed.push_back(v);
      used |= std::uint32_t{1} << v;
      descend(pos + 1);
      used &= ~(std::uint32_t{1} << v);
      placed.pop_back();
      cur = saved;
    }
  }
};

}  // namespace

std::string CanonicalForm::hex() const {
  char buf[48];
  std::snprintf(buf, sizeof buf, "g%d.%016llx.%016llx", n,
                static_cast<unsigned long long>(lo),
                static_cast<unsigned long long>(hi));
  return buf;
}

CanonicalForm canonical_form(const SmallGraph& g) {
  CanonSearch search(g);
  search.run();
  return CanonicalForm{g.order(), search.best[0], search.best[1]};
}

std::vector<int> canonical_labeling(const SmallGraph& g) {
  CanonSearch search(g);
  search.run();
  std::vector<int> perm(g.order());
  for (int pos = 0; pos < g.order(); ++pos) {
    perm[search.best_placed[pos]] = pos;
  }
  return perm;
}

SmallGraph canonical_copy(const SmallGraph& g) {
  return g.stripped().permuted(canonical_labeling(g));
}

bool is_isomorphic(const SmallGraph& a, const SmallGraph& b) {
  return canonical_form(a) == canonical_form(b);
}

}  // namespace cdg
