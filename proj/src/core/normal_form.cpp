#include "opetope/core/normal_form.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace opetope {

std::vector<ArrowId> NormalForm::target_prefix() const {
  std::vector<ArrowId> out;
  if (path.size() <= 2) return out;
  for (std::size_t i = path.size(); i-- > 2;) out.push_back(path[i]);
  return out;
}

std::span<const ArrowId> NormalForm::tail() const {
  return std::span<const ArrowId>(path.data(), std::min<std::size_t>(path.size(), 2));
}

namespace {

std::size_t fuel_override() {
  static const std::size_t value = [] {
    const char* env = std::getenv("OPETOPE_FUEL_OVERRIDE");
    if (!env) return std::size_t{0};
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (...) {
      return std::size_t{0};
    }
  }();
  return value;
}

struct Pair {
  ArrowId outer;
  ArrowId inner;
};

Pair partner(const OpetopicGraph& g, ArrowId outer, ArrowId inner) {
  auto ds = g.diamonds_with_pair(outer, inner);
  if (ds.empty())
    throw RewriteError(RewriteFailure::MissingRelation, "no diamond contains " + describe_pair(g, outer, inner));
  if (ds.size() > 1)
    throw RewriteError(RewriteFailure::AmbiguousRewrite,
                       "pair " + describe_pair(g, outer, inner) + " lies in " + std::to_string(ds.size()) + " diamonds");
  const Diamond& d = g.diamond(ds.front());
  if (d.het_outer == outer && d.het_inner == inner) return {d.hom_outer, d.hom_inner};
  return {d.het_outer, d.het_inner};
}

bool is_source(const OpetopicGraph& g, ArrowId a) { return g.arrow(a).polarity == Polarity::Source; }

// Rewrites the three-step path p . q . r (p outermost) to the normal
// representative, where p is a target arrow and (q, r) is homogeneous.
void normalize_triple(const OpetopicGraph& g, ArrowId& p, ArrowId& q, ArrowId& r, RewriteStats* stats) {
  const std::size_t bound = fuel_bound(g, g.arrow(p).cod);
  std::size_t steps = 0;
  for (;;) {
    const bool ps = is_source(g, p);
    const bool rs = is_source(g, r);
    const bool qr_hom = g.homogeneous(q, r);
    const bool pq_hom = g.homogeneous(p, q);
    if (!ps && qr_hom) break;
    if (ps && !qr_hom) {
      Pair n = partner(g, q, r);
      q = n.outer;
      r = n.inner;
    } else if (rs && pq_hom) {
      Pair n = partner(g, p, q);
      p = n.outer;
      q = n.inner;
    } else {
      Pair n = partner(g, p, q);
      p = n.outer;
      q = n.inner;
    }
    if (++steps > bound)
      throw RewriteError(RewriteFailure::FuelExhausted,
                         "rewriting into " + g.name(g.arrow(p).cod) + " exceeded " + std::to_string(bound) + " steps");
  }
  if (stats) {
    stats->steps += steps;
    if (steps > stats->max_steps_on_triple) {
      stats->max_steps_on_triple = steps;
      stats->max_bound_on_triple = raw_fuel_bound(g, g.arrow(p).cod);
    }
    if (steps > raw_fuel_bound(g, g.arrow(p).cod) + 2) stats->within_bound = false;
  }
}

}  // namespace

std::size_t raw_fuel_bound(const OpetopicGraph& g, CellId x) {
  std::size_t total = 0;
  for (ArrowId a : g.arrows_into(x))
    if (is_source(g, a)) total += 2 * g.arrows_into(g.arrow(a).dom).size();
  return total;
}

std::size_t fuel_bound(const OpetopicGraph& g, CellId x) {
  return std::max(raw_fuel_bound(g, x) + 2, fuel_override());
}

NormalForm identity(CellId x) { return NormalForm{x, x, {}}; }

NormalForm normalize(const OpetopicGraph& g, CellId from, std::span<const ArrowId> path, RewriteStats* stats) {
  if (path.empty()) return identity(from);
  if (g.arrow(path.front()).dom != from)
    throw RewriteError(RewriteFailure::NotComposable, "path does not start at " + g.name(from));
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!g.composable(path[i + 1], path[i]))
      throw RewriteError(RewriteFailure::NotComposable,
                         "generators " + g.name(path[i]) + " and " + g.name(path[i + 1]) + " are not composable");

  const CellId to = g.arrow(path.back()).cod;
  std::vector<ArrowId> work(path.begin(), path.end());
  std::vector<ArrowId> settled;  // outermost first
  while (work.size() >= 3) {
    std::size_t n = work.size();
    ArrowId p = work[n - 1], q = work[n - 2], r = work[n - 3];
    normalize_triple(g, p, q, r, stats);
    settled.push_back(p);
    work.resize(n - 3);
    work.push_back(r);
    work.push_back(q);
  }
  if (work.size() == 2 && !g.homogeneous(work[1], work[0])) {
    Pair n = partner(g, work[1], work[0]);
    work[0] = n.inner;
    work[1] = n.outer;
    if (stats) ++stats->steps;
  }
  work.insert(work.end(), settled.rbegin(), settled.rend());
  return NormalForm{from, to, std::move(work)};
}

NormalForm compose(const OpetopicGraph& g, const NormalForm& inner, const NormalForm& outer, RewriteStats* stats) {
  if (inner.to != outer.from)
    throw RewriteError(RewriteFailure::NotComposable, "composite of arrows with mismatched endpoints");
  std::vector<ArrowId> path = inner.path;
  path.insert(path.end(), outer.path.begin(), outer.path.end());
  return normalize(g, inner.from, path, stats);
}

NormalForm compose(const OpetopicGraph& g, ArrowId generator, const NormalForm& outer, RewriteStats* stats) {
  const GenArrow& a = g.arrow(generator);
  return compose(g, NormalForm{a.dom, a.cod, {generator}}, outer, stats);
}

const std::vector<NormalForm>& HomCache::into(CellId y) {
  if (auto it = into_.find(y); it != into_.end()) return it->second;
  std::vector<NormalForm> out{identity(y)};
  for (ArrowId e : g_.arrows_into(y)) {
    const GenArrow& a = g_.arrow(e);
    if (g_.degree(a.dom) >= g_.degree(y)) continue;
    std::vector<NormalForm> lower = into(a.dom);
    for (const NormalForm& nf : lower) {
      std::vector<ArrowId> path = nf.path;
      path.push_back(e);
      out.push_back(normalize(g_, nf.from, path));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return into_.emplace(y, std::move(out)).first->second;
}

std::vector<NormalForm> HomCache::hom(CellId x, CellId y) {
  std::vector<NormalForm> out;
  for (const NormalForm& nf : into(y))
    if (nf.from == x) out.push_back(nf);
  return out;
}

NormalForm HomCache::two_step(ArrowId inner, ArrowId outer) {
  ArrowId path[2] = {inner, outer};
  return normalize(g_, g_.arrow(inner).dom, path);
}

std::vector<NormalForm> hom(const OpetopicGraph& g, CellId x, CellId y) {
  HomCache cache(g);
  return cache.hom(x, y);
}

std::string describe(const OpetopicGraph& g, const NormalForm& nf) {
  if (nf.is_identity()) return "id(" + g.name(nf.from) + ")";
  std::string out = g.name(nf.from);
  for (ArrowId a : nf.path) {
    const GenArrow& ga = g.arrow(a);
    out += ga.polarity == Polarity::Source ? " -s-> " : " =t=> ";
    out += g.name(ga.cod);
  }
  out += "  [";
  for (std::size_t i = 0; i < nf.path.size(); ++i) out += (i ? " " : "") + g.name(nf.path[i]);
  return out + "]";
}

}  // namespace opetope
