#include "tmet/convergence.hpp"

#include "tmet/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tmet {

namespace {

void check_member(const EmbeddedFamily& f, int j) {
  if (j < 1 || j > f.members()) throw std::out_of_range("member index");
}

// Flat layout of the level grids inside the canonical frame: level i
// occupies ranks offset[i-1] .. offset[i-1]+count[i-1)-1.
struct FlatGrid {
  std::vector<long long> count;
  std::vector<long long> offset;

  static FlatGrid of(const LevelPlan& plan) {
    FlatGrid g;
    long long at = 0;
    for (int i = 1; i <= plan.depth; ++i) {
      g.offset.push_back(at);
      g.count.push_back(plan.tuple_count(i));
      at += g.count.back();
    }
    return g;
  }
  long long total() const {
    return offset.empty() ? 0 : offset.back() + count.back();
  }
};

IndexTuple tuple_at(const LevelPlan& plan, int level, long long rank) {
  IndexTuple t(level);
  for (int i = level - 1; i >= 0; --i) {
    t[i] = static_cast<int>(rank % plan.sizes[i]) + 1;
    rank /= plan.sizes[i];
  }
  return t;
}

long long rank_of(const LevelPlan& plan, const IndexTuple& tuple) {
  long long rank = 0;
  for (size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i] < 1 || tuple[i] > plan.sizes[i])
      throw std::out_of_range("tuple entry out of range");
    rank = rank * plan.sizes[i] + (tuple[i] - 1);
  }
  return rank;
}

}  // namespace

SupVector EmbeddedFamily::embed_point(int j, int x) const {
  check_member(*this, j);
  return timed ? timed_frechet(frames[j - 1], x) : frechet(frames[j - 1], x);
}

std::vector<SupVector> EmbeddedFamily::cloud(int j) const {
  check_member(*this, j);
  std::vector<SupVector> out;
  out.reserve(spaces[j - 1]->size());
  for (int x = 0; x < spaces[j - 1]->size(); ++x)
    out.push_back(embed_point(j, x));
  return out;
}

std::vector<SupVector> EmbeddedFamily::union_cloud() const {
  std::vector<SupVector> all;
  for (int j = 1; j <= members(); ++j) {
    auto c = cloud(j);
    all.insert(all.end(), std::make_move_iterator(c.begin()),
               std::make_move_iterator(c.end()));
  }
  return all;
}

EmbeddedFamily embed_family(std::vector<SpacePtr> spaces, int depth, bool timed) {
  if (spaces.empty()) throw std::invalid_argument("empty family");
  for (const auto& s : spaces)
    if (!s) throw std::invalid_argument("null space in family");
  if (depth == 0) depth = stability_depth(spaces);

  EmbeddedFamily fam;
  fam.plan = plan_for_family(spaces, depth);
  fam.timed = timed;
  fam.spaces = std::move(spaces);
  for (const auto& s : fam.spaces) {
    fam.family_diameter = std::max(fam.family_diameter, s->diameter_bound);
    fam.hierarchies.push_back(build_hierarchy(s, fam.plan));
    fam.frames.push_back(EmbeddingFrame::canonical(fam.hierarchies.back()));
    if (fam.frames.back().size() != fam.frames.front().size())
      throw std::logic_error("frame lengths diverged");
  }
  return fam;
}

double hausdorff_sup(std::span<const SupVector> A, std::span<const SupVector> B) {
  if (A.empty() || B.empty()) throw std::invalid_argument("empty cloud");
  auto directed = [](std::span<const SupVector> from,
                     std::span<const SupVector> to) {
    double worst = 0.0;
    for (const auto& u : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& v : to) best = std::min(best, sup_distance(u, v));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(A, B), directed(B, A));
}

double timed_hausdorff_ub(SpacePtr X1, SpacePtr X2, int depth) {
  auto fam = embed_family({std::move(X1), std::move(X2)}, depth, true);
  const auto a = fam.cloud(1);
  const auto b = fam.cloud(2);
  return hausdorff_sup(a, b);
}

namespace {

struct UnionFind {
  std::vector<int> parent, rank_;
  explicit UnionFind(int n) : parent(n), rank_(n, 0) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a); b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }
};

}  // namespace

int LimitSynthesis::class_of(int level, long long rank) const {
  return class_by_level.at(level - 1).at(rank);
}

int LimitSynthesis::class_of(const IndexTuple& tuple) const {
  if (tuple.empty() || static_cast<int>(tuple.size()) > plan.depth)
    throw std::out_of_range("tuple depth");
  return class_of(static_cast<int>(tuple.size()), rank_of(plan, tuple));
}

FiniteTimedMetricSpace LimitSynthesis::to_space() const {
  FiniteTimedMetricSpace s;
  s.name = "limit";
  for (const auto& rep : class_reps) s.points.push_back(tuple_text(rep));
  s.dist = limit_dist;
  s.time = limit_time;
  s.tau_max = tau_max;
  s.diameter_bound = diameter_bound;
  return s;
}

LimitSynthesis synthesize_limit(const EmbeddedFamily& family,
                                const SynthesisOptions& opts) {
  const int J = family.members();
  const int L = family.plan.depth;
  if (L == 0) throw std::invalid_argument("plan has no levels");

  const double scale = std::max(1.0, family.family_diameter);
  const double glue =
      opts.delta_glue < 0 ? family.plan.eps_at(L) : opts.delta_glue;
  const double tol_cauchy =
      opts.tol_cauchy < 0 ? 1e-3 * scale : opts.tol_cauchy;
  const double tol_inv =
      opts.tol_invariant < 0 ? 1e-9 * scale : opts.tol_invariant;

  const auto grid = FlatGrid::of(family.plan);
  const long long M = grid.total();

  // Members feeding the signatures: the tail window plus the final member.
  const int last = J - 1;
  const int lo = std::max(0, last - std::max(0, opts.tail_window));
  std::vector<int> ms;
  for (int m = lo; m <= last; ++m) ms.push_back(m);

  // Tuples behave identically when they hit the same points across the
  // window, so the grid collapses to distinct signatures.
  std::map<std::vector<int>, int> sig_ids;
  std::vector<std::vector<int>> sig_pts;
  std::vector<IndexTuple> sig_rep;
  std::vector<std::set<int>> sig_levels;
  std::vector<std::vector<int>> sig_by_level(L);

  std::vector<int> key(ms.size());
  for (int i = 1; i <= L; ++i) {
    sig_by_level[i - 1].resize(grid.count[i - 1]);
    for (long long r = 0; r < grid.count[i - 1]; ++r) {
      const long long flat = grid.offset[i - 1] + r;
      for (size_t m = 0; m < ms.size(); ++m)
        key[m] = family.frames[ms[m]].landmarks[flat];
      auto [it, fresh] = sig_ids.try_emplace(key, static_cast<int>(sig_pts.size()));
      IndexTuple t = tuple_at(family.plan, i, r);
      if (fresh) {
        sig_pts.push_back(key);
        sig_rep.push_back(std::move(t));
        sig_levels.emplace_back();
      } else if (std::lexicographical_compare(t.begin(), t.end(),
                                              sig_rep[it->second].begin(),
                                              sig_rep[it->second].end())) {
        sig_rep[it->second] = std::move(t);
      }
      sig_levels[it->second].insert(i);
      sig_by_level[i - 1][r] = it->second;
    }
  }
  const int S = static_cast<int>(sig_pts.size());
  const int last_slot = static_cast<int>(ms.size()) - 1;

  const auto& XJ = *family.spaces[last];
  auto pt_at = [&](int sig, int slot) { return sig_pts[sig][slot]; };
  auto d_final = [&](int a, int b) {
    return XJ.dist[pt_at(a, last_slot)][pt_at(b, last_slot)];
  };

  LimitSynthesis out;
  out.plan = family.plan;
  out.tau_max = XJ.tau_max;
  out.diameter_bound = XJ.diameter_bound;
  out.diagnostics.glue_tolerance = glue;

  // Drift over the window, for distances (pairs) and times (singletons).
  auto note_pair = [&](int a, int b) {
    out.diagnostics.nonconvergent_pairs.emplace_back(sig_rep[a], sig_rep[b]);
  };
  for (int a = 0; a < S; ++a) {
    const double tau_last = XJ.time[pt_at(a, last_slot)];
    double drift = 0.0;
    for (int m = 0; m + 1 < static_cast<int>(ms.size()); ++m)
      drift = std::max(drift, std::fabs(family.spaces[ms[m]]->time[pt_at(a, m)] -
                                        tau_last));
    out.diagnostics.max_oscillation =
        std::max(out.diagnostics.max_oscillation, drift);
    if (drift > tol_cauchy) note_pair(a, a);
    for (int b = a + 1; b < S; ++b) {
      const double d_last = d_final(a, b);
      double gap = 0.0;
      for (int m = 0; m + 1 < static_cast<int>(ms.size()); ++m)
        gap = std::max(
            gap, std::fabs(family.spaces[ms[m]]->dist[pt_at(a, m)][pt_at(b, m)] -
                           d_last));
      out.diagnostics.max_oscillation =
          std::max(out.diagnostics.max_oscillation, gap);
      if (gap > tol_cauchy) note_pair(a, b);
    }
  }

  UnionFind uf(S);
  for (int a = 0; a < S; ++a)
    for (int b = a + 1; b < S; ++b)
      if (d_final(a, b) <= glue) uf.unite(a, b);

  // Classes ordered by lexicographic representative.
  std::map<int, std::vector<int>> groups;  // root -> signatures
  for (int a = 0; a < S; ++a) groups[uf.find(a)].push_back(a);
  std::vector<std::pair<IndexTuple, std::vector<int>>> classes;
  for (auto& [root, members] : groups) {
    IndexTuple rep = sig_rep[members.front()];
    for (int s : members)
      if (std::lexicographical_compare(sig_rep[s].begin(), sig_rep[s].end(),
                                       rep.begin(), rep.end()))
        rep = sig_rep[s];
    classes.emplace_back(std::move(rep), std::move(members));
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  const int C = static_cast<int>(classes.size());
  std::vector<int> class_of_sig(S, -1);
  for (int c = 0; c < C; ++c) {
    const auto& [rep, members] = classes[c];
    out.class_reps.push_back(rep);
    std::set<int> levels;
    for (int s : members) {
      class_of_sig[s] = c;
      levels.insert(sig_levels[s].begin(), sig_levels[s].end());
      for (int other : members)
        out.diagnostics.max_class_spread =
            std::max(out.diagnostics.max_class_spread, d_final(s, other));
    }
    out.levels_present.emplace_back(levels.begin(), levels.end());
    // The representative's own point carries the class.
    int rep_sig = members.front();
    for (int s : members)
      if (sig_rep[s] == rep) { rep_sig = s; break; }
    out.class_rep_points.push_back(pt_at(rep_sig, last_slot));
  }

  out.class_by_level.resize(L);
  for (int i = 0; i < L; ++i) {
    out.class_by_level[i].resize(sig_by_level[i].size());
    for (size_t r = 0; r < sig_by_level[i].size(); ++r)
      out.class_by_level[i][r] = class_of_sig[sig_by_level[i][r]];
  }

  out.limit_dist.assign(C, std::vector<double>(C, 0.0));
  out.limit_time.resize(C);
  for (int a = 0; a < C; ++a) {
    out.limit_time[a] = XJ.time[out.class_rep_points[a]];
    for (int b = 0; b < C; ++b) {
      if (a == b) continue;
      if (opts.class_distance_max) {
        double worst = 0.0;
        for (int s : classes[a].second)
          for (int t : classes[b].second) worst = std::max(worst, d_final(s, t));
        out.limit_dist[a][b] = worst;
      } else {
        out.limit_dist[a][b] =
            XJ.dist[out.class_rep_points[a]][out.class_rep_points[b]];
      }
    }
  }

  for (int a = 0; a < C; ++a)
    for (int b = 0; b < C; ++b) {
      for (int c = 0; c < C; ++c)
        if (out.limit_dist[a][c] >
            out.limit_dist[a][b] + out.limit_dist[b][c] + tol_inv)
          throw std::runtime_error("limit breaks the triangle inequality");
      if (std::fabs(out.limit_time[a] - out.limit_time[b]) >
          out.limit_dist[a][b] + tol_inv)
        throw std::runtime_error("limit time is not Lipschitz-one");
    }

  for (int i = 1; i <= L; ++i) {
    double worst = 0.0;
    for (int a = 0; a < C; ++a) {
      double best = std::numeric_limits<double>::infinity();
      for (int b = 0; b < C; ++b) {
        if (!std::binary_search(out.levels_present[b].begin(),
                                out.levels_present[b].end(), i))
          continue;
        best = std::min(best, out.limit_dist[a][b]);
      }
      worst = std::max(worst, best);
    }
    out.diagnostics.net_defect.push_back(worst);
  }

  (void)M;
  return out;
}

nlohmann::json limit_to_json(const LimitSynthesis& limit) {
  nlohmann::json doc = space_to_json(limit.to_space());
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [a, b] : limit.diagnostics.nonconvergent_pairs)
    pairs.push_back(nlohmann::json::array({a, b}));
  doc["diagnostics"] = {
      {"max_oscillation", limit.diagnostics.max_oscillation},
      {"nonconvergent_pairs", std::move(pairs)},
      {"glue_tolerance", limit.diagnostics.glue_tolerance}};
  return doc;
}

namespace {

// Distinct (member point, limit class) combinations over the deepest grid.
std::vector<std::pair<int, int>> grid_combos(const EmbeddedFamily& family,
                                             const LimitSynthesis& limit,
                                             int j) {
  const auto grid = FlatGrid::of(family.plan);
  const int L = family.plan.depth;
  std::set<std::pair<int, int>> combos;
  for (long long r = 0; r < grid.count[L - 1]; ++r)
    combos.emplace(family.frames[j - 1].landmarks[grid.offset[L - 1] + r],
                   limit.class_of(L, r));
  return {combos.begin(), combos.end()};
}

}  // namespace

AddressGaps uniform_address_gap(const EmbeddedFamily& family,
                                const LimitSynthesis& limit, int j) {
  check_member(family, j);
  const auto& Xj = *family.spaces[j - 1];
  const auto grid = FlatGrid::of(family.plan);
  const auto combos = grid_combos(family, limit, j);

  AddressGaps gaps;
  for (const auto& [pt, cls] : combos)
    gaps.sup_time_gap = std::max(
        gaps.sup_time_gap, std::fabs(Xj.time[pt] - limit.limit_time[cls]));

  for (size_t u = 0; u < combos.size(); ++u)
    for (size_t v = u + 1; v < combos.size(); ++v) {
      const double member = Xj.dist[combos[u].first][combos[v].first];
      const double lim = limit.limit_dist[combos[u].second][combos[v].second];
      gaps.sup_dist_gap = std::max(gaps.sup_dist_gap, std::fabs(member - lim));
    }

  // Coordinate-wise gap between the member vector and the limit vector.
  for (const auto& [pt, cls] : combos) {
    double worst = family.timed
                       ? std::fabs(Xj.time[pt] - limit.limit_time[cls])
                       : 0.0;
    for (int i = 1; i <= family.plan.depth; ++i)
      for (long long r = 0; r < grid.count[i - 1]; ++r) {
        const int lm = family.frames[j - 1].landmarks[grid.offset[i - 1] + r];
        const double lim = limit.limit_dist[limit.class_of(i, r)][cls];
        worst = std::max(worst, std::fabs(Xj.dist[lm][pt] - lim));
      }
    gaps.sup_vector_gap = std::max(gaps.sup_vector_gap, worst);
  }
  return gaps;
}

std::vector<SupVector> limit_cloud(const EmbeddedFamily& family,
                                   const LimitSynthesis& limit) {
  const auto grid = FlatGrid::of(family.plan);
  std::vector<SupVector> cloud;
  for (int c = 0; c < limit.class_count(); ++c) {
    SupVector v;
    v.timed = family.timed;
    if (family.timed) v.coords.push_back(limit.limit_time[c]);
    for (int i = 1; i <= family.plan.depth; ++i)
      for (long long r = 0; r < grid.count[i - 1]; ++r)
        v.coords.push_back(limit.limit_dist[limit.class_of(i, r)][c]);
    cloud.push_back(std::move(v));
  }
  return cloud;
}

double hausdorff_to_limit(const EmbeddedFamily& family,
                          const LimitSynthesis& limit, int j) {
  check_member(family, j);
  const auto member = family.cloud(j);
  const auto lim = limit_cloud(family, limit);
  return hausdorff_sup(member, lim);
}

ArzelaAscoliResult arzela_ascoli(const std::vector<SpacePtr>& spaces,
                                 const std::vector<std::vector<double>>& F,
                                 double K, double F_max, int depth,
                                 const SynthesisOptions& opts) {
  if (spaces.empty() || F.size() != spaces.size())
    throw std::invalid_argument("family and function list sizes differ");
  if (K <= 0.0 || F_max < 0.0) throw std::invalid_argument("bad K or F_max");
  const double tol =
      opts.tol_invariant < 0 ? 1e-9 * std::max(1.0, F_max) : opts.tol_invariant;

  std::vector<SpacePtr> modified;
  for (size_t j = 0; j < spaces.size(); ++j) {
    const auto& X = *spaces[j];
    if (static_cast<int>(F[j].size()) != X.size())
      throw std::invalid_argument("function " + std::to_string(j + 1) +
                                  " has wrong length");
    for (int p = 0; p < X.size(); ++p)
      if (F[j][p] < -tol || F[j][p] > F_max + tol)
        throw std::runtime_error("function " + std::to_string(j + 1) +
                                 " leaves [0, F_max] at point " +
                                 std::to_string(p));
    for (int p = 0; p < X.size(); ++p)
      for (int q = p + 1; q < X.size(); ++q)
        if (std::fabs(F[j][p] - F[j][q]) > K * X.dist[p][q] + K * tol)
          throw std::runtime_error("function " + std::to_string(j + 1) +
                                   " breaks the K-Lipschitz bound at pair " +
                                   std::to_string(p) + "," + std::to_string(q));

    RawSpace raw = RawSpace::from(X);
    raw.time.assign(F[j].begin(), F[j].end());
    for (auto& t : raw.time) t /= K;
    raw.tau_max = F_max / K;
    auto outcome = validate_space(raw, tol);
    if (!outcome.ok())
      throw std::runtime_error("substituted time slot fails validation");
    modified.push_back(
        std::make_shared<const FiniteTimedMetricSpace>(*std::move(outcome.space)));
  }

  ArzelaAscoliResult res{embed_family(std::move(modified), depth, true), {}, {}, {}};
  res.synthesis = synthesize_limit(res.family, opts);
  for (double t : res.synthesis.limit_time) res.limit_function.push_back(K * t);
  for (int j = 1; j <= res.family.members(); ++j)
    res.gaps.push_back(K *
                       uniform_address_gap(res.family, res.synthesis, j).sup_time_gap);
  return res;
}

}  // namespace tmet
