// Edge-disjoint packing and edge hitting sets over bitmask hosts.

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_set>

#include "epw/verify.hpp"
#include "search_engine.hpp"
#include "subsets.hpp"

namespace epw {
namespace {

using detail::bit;
using detail::Mask;

Mask full_mask(std::size_t m) { return m == 64 ? ~Mask{0} : (Mask{1} << m) - 1; }

/// Expansion search restricted to the edges in `keep`.
class MaskedSearch {
 public:
  MaskedSearch(const Graph& h, const Graph& g, std::uint64_t budget)
      : h_(h), g_(g), pattern_(detail::make_pattern(h)), budget_(budget) {
    none_.must.assign(h.order(), -1);
    none_.forbidden.assign(h.order(), 0);
  }

  detail::RawResult run(Mask keep) {
    auto r = detail::search(pattern_, detail::make_host(g_, keep), none_, budget_);
    nodes += r.nodes;
    if (r.status == SearchStatus::budget_exhausted) exhausted = true;
    return r;
  }

  /// Edge ids of a footprint of the expansion given by `sets` in the masked host.
  Mask footprint(Mask keep, const std::vector<Mask>& sets) const {
    const auto host = detail::make_host(g_, keep);
    const auto m = detail::to_embedding(h_, g_, host, sets);
    Mask out = 0;
    for (const auto& e : m.footprint()) out |= bit(*g_.edge_id(g_.index(e.u), g_.index(e.v)));
    return out;
  }

  MinorEmbedding embedding(Mask keep, const std::vector<Mask>& sets) const {
    return detail::to_embedding(h_, g_, detail::make_host(g_, keep), sets);
  }

  std::uint64_t nodes = 0;
  bool exhausted = false;

 private:
  const Graph& h_;
  const Graph& g_;
  detail::PatternGraph pattern_;
  detail::IndexConstraints none_;
  std::uint64_t budget_;
};

/// All inclusion-minimal edge sets that carry an expansion. Each found set is
/// shrunk greedily to a minimal one; then the search branches on dropping
/// each of its edges, which reaches every other minimal set.
class MinimalFootprints {
 public:
  explicit MinimalFootprints(MaskedSearch& s) : search_(s) {}

  std::vector<Mask> enumerate(Mask allowed) {
    visit(allowed);
    std::vector<Mask> out(found_.begin(), found_.end());
    std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
      const int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa < pb : a < b;
    });
    return out;
  }

 private:
  void visit(Mask allowed) {
    if (!visited_.insert(allowed).second) return;
    // a known minimal set inside `allowed` saves a search
    Mask minimal = 0;
    bool have = false;
    for (Mask f : found_) {
      if ((f & ~allowed) == 0) {
        minimal = f;
        have = true;
        break;
      }
    }
    if (!have) {
      auto r = search_.run(allowed);
      if (r.status != SearchStatus::found) return;
      minimal = shrink(search_.footprint(allowed, r.sets));
      found_.insert(minimal);
    }
    detail::for_each_bit(minimal, [&](int e) { visit(allowed & ~bit(e)); });
  }

  Mask shrink(Mask current) {
    for (int e = 0; e < 64; ++e) {
      if (!(current & bit(e))) continue;
      const Mask trial = current & ~bit(e);
      auto r = search_.run(trial);
      if (r.status == SearchStatus::found) current = search_.footprint(trial, r.sets);
    }
    return current;
  }

  MaskedSearch& search_;
  std::unordered_set<Mask> visited_;
  std::set<Mask> found_;
};

/// Largest family of pairwise disjoint masks, at most `cap` of them.
class SetPacker {
 public:
  SetPacker(const std::vector<Mask>& sets, std::size_t cap) : sets_(sets), cap_(cap) {}

  std::vector<Mask> solve() {
    for (std::size_t t = 1; t <= cap_; ++t) {
      chosen_.clear();
      if (!extend(0, 0, t)) break;
      best_ = chosen_;
    }
    return best_;
  }

 private:
  bool extend(std::size_t from, Mask used, std::size_t remaining) {
    if (remaining == 0) return true;
    for (std::size_t i = from; i < sets_.size(); ++i) {
      if (sets_.size() - i < remaining) return false;
      if (sets_[i] & used) continue;
      chosen_.push_back(sets_[i]);
      if (extend(i + 1, used | sets_[i], remaining - 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const std::vector<Mask>& sets_;
  std::size_t cap_;
  std::vector<Mask> chosen_;
  std::vector<Mask> best_;
};

}  // namespace

PackingResult max_edge_disjoint_packing(const Graph& h, const Graph& g, std::size_t cap, const Budget& budget) {
  if (g.size() > 64) throw GraphError("packing supports hosts with at most 64 edges");
  PackingResult out;
  if (cap == 0) return out;
  MaskedSearch search(h, g, budget.nodes);
  const Mask all = full_mask(g.size());

  if (h.size() == 0) {
    // an edgeless pattern uses no edges, so its expansions never collide
    auto r = search.run(all);
    out.nodes = search.nodes;
    out.exhaustive = !search.exhausted;
    if (r.status == SearchStatus::found) {
      out.count = cap;
      out.witness.assign(cap, search.embedding(all, r.sets));
      out.minimal_footprints = 1;
    }
    return out;
  }

  MinimalFootprints enumerator(search);
  const auto minimal = enumerator.enumerate(all);
  out.minimal_footprints = minimal.size();
  const auto chosen = SetPacker(minimal, cap).solve();
  for (Mask m : chosen) {
    auto r = search.run(m);
    out.witness.push_back(search.embedding(m, r.sets));
  }
  out.count = chosen.size();
  out.nodes = search.nodes;
  out.exhaustive = !search.exhausted;
  return out;
}

HittingResult min_edge_hitting_set(const Graph& h, const Graph& g, std::size_t bound, const Budget& budget) {
  const auto pattern = detail::make_pattern(h);
  detail::IndexConstraints none;
  none.must.assign(h.order(), -1);
  none.forbidden.assign(h.order(), 0);

  HittingResult out;
  detail::SubsetCursor cursor(g.size(), bound);
  std::vector<int> subset;
  std::vector<bool> removed(g.size(), false);
  bool exhausted = false;
  while (cursor.next(subset)) {
    if (out.subsets_checked >= budget.subsets) {
      out.status = SearchStatus::budget_exhausted;
      return out;
    }
    ++out.subsets_checked;
    std::fill(removed.begin(), removed.end(), false);
    for (int e : subset) removed[static_cast<std::size_t>(e)] = true;
    auto r = detail::search(pattern, detail::make_host(g, removed), none, budget.nodes);
    out.nodes += r.nodes;
    if (r.status == SearchStatus::none) {
      // after an inconclusive smaller subset the set still hits, but may not be smallest
      out.status = exhausted ? SearchStatus::budget_exhausted : SearchStatus::found;
      for (int e : subset) out.set.push_back(g.label_edge(e));
      out.set = normalize(std::move(out.set));
      return out;
    }
    if (r.status == SearchStatus::budget_exhausted) exhausted = true;
  }
  out.status = exhausted ? SearchStatus::budget_exhausted : SearchStatus::none;
  return out;
}

}  // namespace epw
