#include "tricolor/essw.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <deque>
#include <set>

#include "tricolor/lp.hpp"
#include "tricolor/rng.hpp"

namespace tricolor {

namespace {

Rat half() { return Rat(1, 2); }

// largest integer nu with base^nu >= eps (base in (0,1)), then g = nu + 1
int exact_g(const Rat& base, const Rat& eps) {
  double guess = std::log(to_double(eps)) / std::log(to_double(base));
  long nu = static_cast<long>(std::floor(guess));
  nu = std::max(0L, nu - 2);
  while (rat_pow(base, static_cast<unsigned long>(nu + 1)) >= eps) ++nu;
  return static_cast<int>(nu) + 1;
}

}  // namespace

EsswParams paper_constants(int k, int l) {
  if (k < 1 || l < 1) throw BadInput("k and l must be positive");
  EsswParams p;
  p.k = k;
  p.l = l;
  p.mode = EsswMode::paper;
  auto uk = static_cast<unsigned long>(k);
  Int eps_den = 4 * Int(l) * int_pow(uk, uk + 3);
  p.epsilon = Rat(1) / Rat(eps_den);
  Rat base = Rat(2 * k - 1, 2 * k);
  p.sample_size = exact_g(base, p.epsilon);
  Int g(p.sample_size);
  Int delta_den = 8 * Int(l) * Int(l) * Int(l) * int_pow(uk, 3 * uk + 7) * g * g;
  p.delta = Rat(1) / Rat(delta_den);
  p.f_bound = 2 * delta_den * int_pow(uk, uk + 2) + Int(l) * int_pow(uk, uk + 2) * g;
  p.max_retries = 50;
  return p;
}

EsswParams practical_params(int k, int l, const Rat& delta, int sample_size, int max_retries) {
  if (k < 1 || l < 1) throw BadInput("k and l must be positive");
  if (!(delta > 0 && delta < 1)) throw BadInput("delta must be in (0,1)");
  if (sample_size < 1) throw BadInput("sample size must be >= 1");
  EsswParams p;
  p.k = k;
  p.l = l;
  p.mode = EsswMode::practical;
  p.delta = delta;
  p.sample_size = sample_size;
  auto uk = static_cast<unsigned long>(k);
  p.epsilon = Rat(1) / Rat(4 * Int(l) * int_pow(uk, uk + 3));
  p.f_bound = 0;  // no a-priori bound in practical mode
  p.max_retries = max_retries;
  return p;
}

bool DominationFamily::in_family(int v) const {
  for (const auto& per_i : sets)
    for (const auto& s : per_i)
      if (std::binary_search(s.begin(), s.end(), v)) return true;
  return false;
}

std::vector<int> DominationFamily::union_all() const {
  std::vector<int> all;
  for (const auto& per_i : sets)
    for (const auto& s : per_i) all.insert(all.end(), s.begin(), s.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

int DominationFamily::union_size() const { return static_cast<int>(union_all().size()); }

namespace {

std::vector<BitRow> induced_rows(const QuasiOrderMultiDigraph& d, const std::vector<int>& subset) {
  int m = static_cast<int>(subset.size());
  std::vector<int> pos(static_cast<std::size_t>(d.n()), -1);
  for (int i = 0; i < m; ++i) pos[static_cast<std::size_t>(subset[static_cast<std::size_t>(i)])] = i;
  std::vector<BitRow> rows(static_cast<std::size_t>(m), BitRow(m));
  for (int i = 0; i < m; ++i) {
    d.closed_in_all(subset[static_cast<std::size_t>(i)]).for_each([&](int v) {
      int j = pos[static_cast<std::size_t>(v)];
      if (j >= 0) rows[static_cast<std::size_t>(i)].set(j);
    });
  }
  return rows;
}

}  // namespace

Distribution fractional_dominating_distribution(const QuasiOrderMultiDigraph& d,
                                                const std::vector<int>& subset) {
  if (subset.empty()) throw BadInput("empty subset");
  auto rows = induced_rows(d, subset);
  MaxMinResult res = max_min_distribution(rows, half());
  if (!res.feasible)
    throw LpInfeasible("no half-covering distribution: induced digraph is not complete");
  Distribution w;
  w.weights.assign(static_cast<std::size_t>(d.n()), Rat(0));
  for (std::size_t i = 0; i < subset.size(); ++i)
    w.weights[static_cast<std::size_t>(subset[i])] = res.w[i];
  return w;
}

CappedDistribution capped_distribution(const QuasiOrderMultiDigraph& d,
                                       const std::vector<int>& subset, const Rat& delta) {
  if (!(Rat(static_cast<long>(subset.size())) * delta > 1))
    throw SubsetTooSmall("need |subset| > 1/delta");
  Int rounds_z;
  mpz_fdiv_q(rounds_z.get_mpz_t(), Rat(1 / delta).get_num().get_mpz_t(),
             Rat(1 / delta).get_den().get_mpz_t());
  if (!rounds_z.fits_slong_p() || rounds_z.get_si() > 2'000'000)
    throw Error("delta too small to iterate the capped construction");
  long rounds = rounds_z.get_si();
  assert(rounds >= 1);

  int n = d.n();
  std::vector<Rat> cum(static_cast<std::size_t>(n), Rat(0));
  std::vector<Rat> total(static_cast<std::size_t>(n), Rat(0));
  std::vector<char> removed(static_cast<std::size_t>(n), 0);

  std::vector<int> active = subset;
  std::sort(active.begin(), active.end());
  bool active_dirty = true;
  std::vector<BitRow> rows;
  std::vector<Rat> last_w;  // over active positions
  GameLpState warm_by_vertex;

  for (long r = 0; r < rounds; ++r) {
    if (active_dirty) {
      if (active.empty()) throw Error("capped construction ran out of vertices");
      rows = induced_rows(d, active);
      // translate warm sets from vertex ids to positions
      GameLpState st;
      std::vector<int> pos(static_cast<std::size_t>(n), -1);
      for (int i = 0; i < static_cast<int>(active.size()); ++i)
        pos[static_cast<std::size_t>(active[static_cast<std::size_t>(i)])] = i;
      for (int v : warm_by_vertex.rows)
        if (pos[static_cast<std::size_t>(v)] >= 0) st.rows.push_back(pos[static_cast<std::size_t>(v)]);
      for (int v : warm_by_vertex.cols)
        if (pos[static_cast<std::size_t>(v)] >= 0) st.cols.push_back(pos[static_cast<std::size_t>(v)]);
      MaxMinResult res = max_min_distribution(rows, half(), &st);
      if (!res.feasible) throw LpInfeasible("induced digraph lost completeness");
      last_w = std::move(res.w);
      warm_by_vertex.rows.clear();
      warm_by_vertex.cols.clear();
      for (int i : st.rows) warm_by_vertex.rows.push_back(active[static_cast<std::size_t>(i)]);
      for (int i : st.cols) warm_by_vertex.cols.push_back(active[static_cast<std::size_t>(i)]);
      active_dirty = false;
    }
    // accumulate round distribution and update caps
    bool changed = false;
    for (std::size_t i = 0; i < active.size(); ++i) {
      const Rat& wi = last_w[i];
      if (wi == 0) continue;
      int v = active[i];
      cum[static_cast<std::size_t>(v)] += wi;
      total[static_cast<std::size_t>(v)] += wi;
      if (!removed[static_cast<std::size_t>(v)] && cum[static_cast<std::size_t>(v)] >= 1) {
        removed[static_cast<std::size_t>(v)] = 1;
        changed = true;
      }
    }
    if (changed && r + 1 < rounds) {
      std::vector<int> next;
      next.reserve(active.size());
      for (int v : active)
        if (!removed[static_cast<std::size_t>(v)]) next.push_back(v);
      active = std::move(next);
      active_dirty = true;
    }
  }

  CappedDistribution out;
  out.w.weights.assign(static_cast<std::size_t>(n), Rat(0));
  Rat inv(1, rounds);
  for (int v : subset)
    if (!(total[static_cast<std::size_t>(v)] == 0))
      out.w.weights[static_cast<std::size_t>(v)] = total[static_cast<std::size_t>(v)] * inv;
  for (int v : subset)
    if (removed[static_cast<std::size_t>(v)]) out.capped.push_back(v);
  std::sort(out.capped.begin(), out.capped.end());
  return out;
}

PartitionStepResult partition_step(const QuasiOrderMultiDigraph& d, const std::vector<int>& subset,
                                   const Rat& delta) {
  CappedDistribution cd = capped_distribution(d, subset, delta);
  PartitionStepResult res;
  res.w = std::move(cd.w);
  res.R = std::move(cd.capped);
  res.T.assign(static_cast<std::size_t>(d.k()), {});

  std::vector<char> capped(static_cast<std::size_t>(d.n()), 0);
  for (int v : res.R) capped[static_cast<std::size_t>(v)] = 1;

  // sparse support of w for the class-mass sums
  std::vector<int> supp;
  std::vector<double> supp_w;
  for (int v = 0; v < d.n(); ++v)
    if (!(res.w.weights[static_cast<std::size_t>(v)] == 0)) {
      supp.push_back(v);
      supp_w.push_back(to_double(res.w.weights[static_cast<std::size_t>(v)]));
    }
  Rat thr = Rat(1, 2 * d.k());
  double thr_d = to_double(thr);

  for (int x : subset) {
    if (capped[static_cast<std::size_t>(x)]) continue;
    int cls = -1;
    for (int c = 0; c < d.k() && cls == -1; ++c) {
      const BitRow& nb = d.closed_in(c, x);
      double s = 0;
      for (std::size_t i = 0; i < supp.size(); ++i)
        if (nb.test(supp[i])) s += supp_w[i];
      if (std::abs(s - thr_d) < 1e-7) {
        // exact confirmation near the threshold
        Rat se(0);
        for (std::size_t i = 0; i < supp.size(); ++i)
          if (nb.test(supp[i])) se += res.w.weights[static_cast<std::size_t>(supp[i])];
        if (se >= thr) cls = c;
      } else if (s > thr_d) {
        cls = c;
      }
    }
    if (cls == -1) throw Error("uncapped vertex misses every class threshold");
    res.T[static_cast<std::size_t>(cls)].push_back(x);
  }
  for (auto& t : res.T) std::sort(t.begin(), t.end());
  return res;
}

PartitionTree build_partition_tree(const QuasiOrderMultiDigraph& d, const EsswParams& params) {
  PartitionTree tree;
  int n = d.n();
  PartitionNode root;
  root.seq = {};
  root.members.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) root.members[static_cast<std::size_t>(i)] = i;

  std::deque<PartitionNode> queue;
  queue.push_back(std::move(root));
  long split_cap = 1;
  for (int i = 0; i < params.k + 2; ++i) split_cap *= params.k;

  while (!queue.empty()) {
    PartitionNode node = std::move(queue.front());
    queue.pop_front();
    int len = static_cast<int>(node.seq.size());
    // repeat leaf?
    if (len >= 2) {
      int last = node.seq.back();
      for (int r = 1; r < len; ++r) {
        if (node.seq[static_cast<std::size_t>(r - 1)] == last) {
          node.kind = PartitionNode::leaf_repeat;
          node.repeat_pos = r;
          break;
        }
      }
    }
    if (node.kind != PartitionNode::leaf_repeat) {
      bool big = Rat(static_cast<long>(node.members.size())) * params.delta > 1;
      if (!big) {
        node.kind = PartitionNode::leaf_small;
      } else {
        node.kind = PartitionNode::internal;
        PartitionStepResult step = partition_step(d, node.members, params.delta);
        node.w = std::move(step.w);
        node.residual = std::move(step.R);
        ++tree.splits;
        if (tree.splits >= split_cap) throw Error("partition process exceeded the split bound");
        for (int c = 0; c < params.k; ++c) {
          PartitionNode child;
          child.seq = node.seq;
          child.seq.push_back(c + 1);
          child.members = std::move(step.T[static_cast<std::size_t>(c)]);
          queue.push_back(std::move(child));
        }
      }
    }
    tree.nodes.emplace(node.seq, std::move(node));
  }
  return tree;
}

namespace {

struct LeafRef {
  const PartitionNode* node;
  std::vector<int> parent_seq;  // prefix of length repeat_pos - 1
};

std::vector<LeafRef> repeat_leaves(const PartitionTree& tree) {
  std::vector<LeafRef> out;
  for (const auto& [seq, node] : tree.nodes) {
    if (node.kind != PartitionNode::leaf_repeat) continue;
    LeafRef ref;
    ref.node = &node;
    ref.parent_seq.assign(seq.begin(), seq.begin() + (node.repeat_pos - 1));
    out.push_back(std::move(ref));
  }
  return out;
}

}  // namespace

DominationReport verify_domination(const QuasiOrderMultiDigraph& d, const DominationFamily& fam,
                                   int l) {
  DominationReport rep;
  if (fam.l < l) throw BadInput("family has fewer witness sets than requested l");
  int n = d.n();
  std::vector<int> owner_i(static_cast<std::size_t>(n), -1), owner_j(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < fam.k; ++i)
    for (int j = 0; j < fam.l; ++j)
      for (int v : fam.sets[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
        if (owner_i[static_cast<std::size_t>(v)] >= 0)
          rep.overlaps.push_back({owner_i[static_cast<std::size_t>(v)], owner_j[static_cast<std::size_t>(v)], i, j, v});
        else {
          owner_i[static_cast<std::size_t>(v)] = i;
          owner_j[static_cast<std::size_t>(v)] = j;
        }
      }
  for (int v = 0; v < n; ++v) {
    if (owner_i[static_cast<std::size_t>(v)] >= 0) continue;
    // preferred class first, then the rest
    std::vector<int> order;
    auto it = fam.assigned_class.find(v);
    if (it != fam.assigned_class.end()) order.push_back(it->second);
    for (int i = 0; i < fam.k; ++i)
      if (order.empty() || i != order.front()) order.push_back(i);
    WitnessEntry entry;
    for (int i : order) {
      entry.cls = i;
      entry.per_j.clear();
      bool all = true;
      for (int j = 0; j < l && all; ++j) {
        int found = -1;
        for (int s : fam.sets[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
          if (d.has_arc(i, s, v) && s != v) {
            found = s;
            break;
          }
        if (found == -1)
          all = false;
        else
          entry.per_j.push_back(found);
      }
      if (all) {
        rep.witnesses[v] = entry;
        break;
      }
      entry.cls = -1;
    }
    if (entry.cls == -1 && rep.witnesses.find(v) == rep.witnesses.end())
      rep.unwitnessed.push_back(v);
  }
  return rep;
}

DominationFamily sample_dominating_family(const QuasiOrderMultiDigraph& d, const PartitionTree& tree,
                                          const EsswParams& params, std::uint64_t seed) {
  auto leaves = repeat_leaves(tree);
  std::vector<int> dumped;
  for (const auto& [seq, node] : tree.nodes) {
    if (node.kind == PartitionNode::leaf_small)
      dumped.insert(dumped.end(), node.members.begin(), node.members.end());
    else if (node.kind == PartitionNode::internal)
      dumped.insert(dumped.end(), node.residual.begin(), node.residual.end());
  }
  std::sort(dumped.begin(), dumped.end());

  // per-source-node sampling tables
  struct SampleTable {
    std::vector<int> verts;
    std::vector<double> cdf;
  };
  std::map<std::vector<int>, SampleTable> tables;
  for (const auto& ref : leaves) {
    if (ref.node->members.empty()) continue;
    if (tables.count(ref.parent_seq)) continue;
    const PartitionNode& src = tree.at(ref.parent_seq);
    SampleTable tab;
    double acc = 0;
    for (int v = 0; v < d.n(); ++v) {
      const Rat& w = src.w.weights[static_cast<std::size_t>(v)];
      if (w == 0) continue;
      acc += to_double(w);
      tab.verts.push_back(v);
      tab.cdf.push_back(acc);
    }
    if (tab.verts.empty()) throw Error("split node with empty distribution");
    tab.cdf.back() = std::max(tab.cdf.back(), 1.0);
    tables.emplace(ref.parent_seq, std::move(tab));
  }

  DominationFamily best;
  DominationReport best_rep;
  bool have_best = false;

  for (int attempt = 0; attempt < std::max(1, params.max_retries); ++attempt) {
    Rng rng(derive_seed(seed, 0x5a11, static_cast<std::uint64_t>(attempt)));
    DominationFamily fam;
    fam.k = params.k;
    fam.l = params.l;
    fam.sets.assign(static_cast<std::size_t>(params.k),
                    std::vector<std::vector<int>>(static_cast<std::size_t>(params.l)));
    for (const auto& ref : leaves) {
      if (ref.node->members.empty()) continue;
      const SampleTable& tab = tables.at(ref.parent_seq);
      int cls = ref.node->seq.back() - 1;
      for (int o = 0; o < params.l; ++o) {
        auto& target = fam.sets[static_cast<std::size_t>(cls)][static_cast<std::size_t>(o)];
        for (int s = 0; s < params.sample_size; ++s) {
          double u = rng.next_double();
          auto it = std::lower_bound(tab.cdf.begin(), tab.cdf.end(), u);
          if (it == tab.cdf.end()) --it;
          target.push_back(tab.verts[static_cast<std::size_t>(it - tab.cdf.begin())]);
        }
      }
    }
    auto& s11 = fam.sets[0][0];
    s11.insert(s11.end(), dumped.begin(), dumped.end());
    fam.dumped = dumped;
    for (auto& per_i : fam.sets)
      for (auto& s : per_i) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
      }
    // assignment of outside vertices to their repeat-leaf class
    for (const auto& ref : leaves) {
      int cls = ref.node->seq.back() - 1;
      for (int v : ref.node->members)
        if (!fam.in_family(v)) fam.assigned_class[v] = cls;
    }
    DominationReport rep = verify_domination(d, fam, params.l);
    if (rep.ok()) return fam;
    if (!have_best ||
        rep.overlaps.size() + rep.unwitnessed.size() <
            best_rep.overlaps.size() + best_rep.unwitnessed.size()) {
      best = std::move(fam);
      best_rep = std::move(rep);
      have_best = true;
    }
  }
  std::string why;
  if (!best_rep.overlaps.empty()) why += "overlapping sample sets";
  if (!best_rep.unwitnessed.empty()) {
    if (!why.empty()) why += " and ";
    why += std::to_string(best_rep.unwitnessed.size()) + " unwitnessed vertices";
  }
  throw RetriesExhausted("domination sampling failed after " +
                             std::to_string(std::max(1, params.max_retries)) + " retries: " + why,
                         std::move(best), std::move(best_rep), std::max(1, params.max_retries));
}

DominationFamily prune_family(const QuasiOrderMultiDigraph& d, DominationFamily fam, int l) {
  int n = d.n();
  int k = fam.k;
  int L = fam.l;
  // counts[v][i][j]: witnesses of v present in sets[i][j]
  std::vector<std::vector<std::vector<int>>> cnt(
      static_cast<std::size_t>(n),
      std::vector<std::vector<int>>(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(L), 0)));
  std::vector<int> owner_i(static_cast<std::size_t>(n), -1), owner_j(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < L; ++j)
      for (int s : fam.sets[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
        owner_i[static_cast<std::size_t>(s)] = i;
        owner_j[static_cast<std::size_t>(s)] = j;
        d.closed_out(i, s).for_each([&](int v) {
          if (v != s) cnt[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]++;
        });
      }
  auto valid = [&](int v) {
    for (int i = 0; i < k; ++i) {
      bool all = true;
      for (int j = 0; j < l && all; ++j)
        if (cnt[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == 0) all = false;
      if (all) return true;
    }
    return false;
  };
  std::vector<int> members = fam.union_all();
  bool changed = true;
  int passes = 0;
  while (changed && passes < 8) {
    changed = false;
    ++passes;
    for (int s : members) {
      int i0 = owner_i[static_cast<std::size_t>(s)];
      if (i0 < 0) continue;  // already removed
      int j0 = owner_j[static_cast<std::size_t>(s)];
      // tentative removal
      std::vector<int> touched;
      d.closed_out(i0, s).for_each([&](int v) {
        if (v != s) {
          cnt[static_cast<std::size_t>(v)][static_cast<std::size_t>(i0)][static_cast<std::size_t>(j0)]--;
          touched.push_back(v);
        }
      });
      bool ok = valid(s);
      if (ok)
        for (int v : touched) {
          if (owner_i[static_cast<std::size_t>(v)] >= 0) continue;  // inside the family, no requirement
          if (!valid(v)) {
            ok = false;
            break;
          }
        }
      if (ok) {
        owner_i[static_cast<std::size_t>(s)] = -1;
        owner_j[static_cast<std::size_t>(s)] = -1;
        changed = true;
      } else {
        d.closed_out(i0, s).for_each([&](int v) {
          if (v != s) cnt[static_cast<std::size_t>(v)][static_cast<std::size_t>(i0)][static_cast<std::size_t>(j0)]++;
        });
      }
    }
  }
  DominationFamily out;
  out.k = k;
  out.l = L;
  out.sets.assign(static_cast<std::size_t>(k),
                  std::vector<std::vector<int>>(static_cast<std::size_t>(L)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < L; ++j)
      for (int s : fam.sets[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
        if (owner_i[static_cast<std::size_t>(s)] == i && owner_j[static_cast<std::size_t>(s)] == j)
          out.sets[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].push_back(s);
  for (int v : fam.dumped)
    if (owner_i[static_cast<std::size_t>(v)] == 0 && owner_j[static_cast<std::size_t>(v)] == 0)
      out.dumped.push_back(v);
  // refresh assignments for every outside vertex
  for (int v = 0; v < n; ++v) {
    if (owner_i[static_cast<std::size_t>(v)] >= 0) continue;
    for (int i = 0; i < k; ++i) {
      bool all = true;
      for (int j = 0; j < l && all; ++j)
        if (cnt[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == 0)
          all = false;
      if (all) {
        out.assigned_class[v] = i;
        break;
      }
    }
  }
  return out;
}

}  // namespace tricolor
