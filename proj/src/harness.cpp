#include "tgc/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "tgc/construct.hpp"

namespace tgc {

Json VerificationReport::to_json() const {
  Json j;
  j["campaign"] = campaign;
  j["parameters"] = parameters;
  j["checked"] = checked;
  j["skipped"] = skipped;
  j["failures"] = failures;
  for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

GraphCollection sample_collection(int n, int m, int min_deg, std::uint64_t seed) {
  if (n < 0 || n > kMaxVertices || m < 0) throw std::domain_error("bad dimensions");
  if (min_deg > n - 1) throw std::domain_error("min_deg is infeasible");
  Rng rng(seed);
  GraphCollection c;
  c.n = n;
  for (int i = 0; i < m; ++i) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.coin()) g.add_edge(u, v);
    for (int v = 0; v < n; ++v) {
      while (g.degree(v) < min_deg) {
        VertexSet missing = full_set(n) & ~g.neighbors(v) & ~vbit(v);
        int pick = rng.below(popcount(missing));
        VertexSet rest = missing;
        while (pick-- > 0) rest &= rest - 1;
        g.add_edge(v, std::countr_zero(rest));
      }
    }
    c.color_ids.push_back(i);
    c.graphs.push_back(g);
  }
  return c;
}

void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
  if (count <= 0) return;
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min(threads, count));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (auto& th : pool) th.join();
}

namespace {

long long ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               start)
      .count();
}

// All 4-vertex graphs with min degree >= d, in mask order.
std::vector<Graph> all_graphs_n4_min_deg(int d) {
  std::vector<std::pair<int, int>> pairs = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  std::vector<Graph> out;
  for (int mask = 0; mask < 64; ++mask) {
    Graph g(4);
    for (size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1) g.add_edge(pairs[k].first, pairs[k].second);
    if (g.min_degree() >= d) out.push_back(g);
  }
  return out;
}

Json failure_entry(int index, const GraphCollection& c, const std::string& detail) {
  Json f;
  f["instance"] = index;
  f["detail"] = detail;
  f["tgc"] = serialize_tgc(c);
  return f;
}

}  // namespace

VerificationReport verify_theorem1(int n, VerifyMode mode, int count, std::uint64_t seed,
                                   int min_deg, int threads) {
  auto start = std::chrono::steady_clock::now();
  const int hypothesis = (n - 1 + 1) / 2;  // ceil((n-1)/2)
  if (min_deg < 0) min_deg = hypothesis;

  VerificationReport rep;
  rep.campaign = "theorem1";
  rep.parameters["n"] = n;
  rep.parameters["mode"] = mode == VerifyMode::Exhaustive ? "exhaustive" : "sample";
  rep.parameters["m"] = n - 1;
  rep.parameters["min_degree"] = min_deg;
  rep.parameters["hypothesis_min_degree"] = hypothesis;

  std::vector<GraphCollection> instances;
  if (mode == VerifyMode::Exhaustive) {
    if (n != 4) throw std::domain_error("exhaustive mode is fixed at n = 4");
    auto graphs = all_graphs_n4_min_deg(hypothesis);
    rep.parameters["pool"] = static_cast<int>(graphs.size());
    for (size_t a = 0; a < graphs.size(); ++a)
      for (size_t b = 0; b < graphs.size(); ++b)
        for (size_t c3 = 0; c3 < graphs.size(); ++c3) {
          GraphCollection c;
          c.n = 4;
          c.color_ids = {0, 1, 2};
          c.graphs = {graphs[a], graphs[b], graphs[c3]};
          instances.push_back(std::move(c));
        }
  } else {
    if (n < 2 || n > 10) throw std::domain_error("sample mode needs 2 <= n <= 10");
    rep.parameters["count"] = count;
    rep.parameters["seed"] = seed;
    for (int i = 0; i < count; ++i)
      instances.push_back(sample_collection(n, n - 1, min_deg, instance_seed(seed, i)));
  }

  const int total = static_cast<int>(instances.size());
  std::vector<int> verdict(static_cast<size_t>(total), 0);  // 0 ok, 1 skipped, 2 fail-solver, 3 fail-pipeline
  parallel_for(total, threads, [&](int i) {
    const GraphCollection& c = instances[static_cast<size_t>(i)];
    if (min_degree(c) < hypothesis) {
      verdict[static_cast<size_t>(i)] = 1;
      return;
    }
    if (!find_transversal_hamilton_path(c)) {
      verdict[static_cast<size_t>(i)] = 2;
      return;
    }
    if (!constructive_hamilton_path(c)) verdict[static_cast<size_t>(i)] = 3;
  });
  for (int i = 0; i < total; ++i) {
    switch (verdict[static_cast<size_t>(i)]) {
      case 0: ++rep.checked; break;
      case 1: ++rep.skipped; break;
      case 2:
        ++rep.checked;
        rep.failures.push_back(failure_entry(i, instances[static_cast<size_t>(i)], "solver found no transversal hamilton path"));
        break;
      default:
        ++rep.checked;
        rep.failures.push_back(failure_entry(i, instances[static_cast<size_t>(i)], "constructive pipeline found no path"));
        break;
    }
  }
  rep.elapsed_ms = ms_since(start);
  return rep;
}

namespace {

struct FamilyJob {
  FamilyTag tag;
  int n;
  FamilyParams params;
  std::string label;
};

std::vector<FamilyJob> family_jobs(int n, WalkTarget target) {
  std::vector<FamilyJob> jobs;
  auto add = [&](FamilyTag tag, FamilyParams p, std::string label) {
    jobs.push_back({tag, n, p, std::move(label)});
  };
  if (target == WalkTarget::HamiltonCycle) {
    if (n % 2 == 1) {
      add(FamilyTag::HalfSplit, {}, "half-split");
      add(FamilyTag::DominatingVertexTwoCliques, {}, "dom-vertex");
    } else {
      for (int t = 1; t <= n; t += 2) {
        FamilyParams p;
        p.t = t;
        add(FamilyTag::HstSpanningOddT, p, "hst-t" + std::to_string(t));
      }
      add(FamilyTag::NearSplitSparseB, {}, "near-split-b");
      add(FamilyTag::NoR2mTwoCliquesOneFree, {}, "no-r2m-2cliques");
      add(FamilyTag::NoR2mStarThroughU, {}, "no-r2m-star-u");
      add(FamilyTag::NoR2mCrossPairFig1a, {}, "no-r2m-fig1a");
      add(FamilyTag::NoR2mSwapPairFig1b, {}, "no-r2m-fig1b");
    }
  } else {
    add(FamilyTag::HPathHn10, {}, "hpath-hn10");
    add(FamilyTag::HPathNearSplit, {}, "hpath-near-split");
  }
  return jobs;
}

}  // namespace

VerificationReport verify_families(const std::vector<int>& n_list, WalkTarget target,
                                   int threads) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.campaign = "families";
  rep.parameters["target"] = target == WalkTarget::HamiltonCycle ? "cycle" : "path";
  rep.parameters["n"] = n_list;

  std::vector<FamilyJob> jobs;
  for (int n : n_list) {
    if (n > 12) throw std::domain_error("families campaign is capped at n = 12");
    auto batch = family_jobs(n, target);
    jobs.insert(jobs.end(), batch.begin(), batch.end());
  }

  std::vector<Json> rows(jobs.size());
  std::vector<Json> fails(jobs.size());
  parallel_for(static_cast<int>(jobs.size()), threads, [&](int idx) {
    const FamilyJob& job = jobs[static_cast<size_t>(idx)];
    Json row;
    row["family"] = job.label;
    row["n"] = job.n;
    GraphCollection c = generate_thm3_family(job.tag, job.n, job.params);
    const bool path_tag = target == WalkTarget::HamiltonPath;
    const int bound = path_tag ? (job.n - 3 + 1) / 2 : (job.n - 1) / 2;  // ceil(n/2 - 1)
    bool ok = true;
    std::string detail;

    if (min_degree(c) < bound) {
      ok = false;
      detail = "min degree below the theorem bound";
    }
    if (ok) {
      ExtremalClass cls = classify(c);
      row["classified"] = family_tag_name(cls.tag);
      if (cls.tag != job.tag) {
        ok = false;
        detail = "classifier returned a different tag";
      } else {
        auto cert = certify_no_thc(c, cls);
        if (!cert) {
          ok = false;
          detail = "certificate kernel refused";
        } else {
          row["certificate"] = cert_reason_name(cert->reason);
        }
      }
    }
    if (ok) {
      bool present = path_tag ? find_transversal_hamilton_path(c).has_value()
                              : find_transversal_hamilton_cycle(c).has_value();
      if (present) {
        ok = false;
        detail = "solver found a witness in a certified family";
      }
    }
    row["pass"] = ok;
    rows[static_cast<size_t>(idx)] = row;
    if (!ok) fails[static_cast<size_t>(idx)] = failure_entry(idx, c, job.label + ": " + detail);
  });

  rep.extra["families"] = Json::array();
  for (size_t i = 0; i < rows.size(); ++i) {
    rep.extra["families"].push_back(rows[i]);
    ++rep.checked;
    if (!fails[i].is_null()) rep.failures.push_back(fails[i]);
  }

  // Control group: even t keeps H_{n-t}^t Hamiltonian (t >= 2).
  if (target == WalkTarget::HamiltonCycle) {
    Json controls = Json::array();
    for (int n : n_list) {
      if (n % 2 != 0) continue;
      for (int t = 2; t <= n; t += 2) {
        GraphCollection c = generate_h_s_t(n, n - t, t);
        bool present = find_transversal_hamilton_cycle(c).has_value();
        Json row;
        row["family"] = "hst-t" + std::to_string(t);
        row["n"] = n;
        row["present"] = present;
        controls.push_back(row);
        ++rep.checked;
        if (!present)
          rep.failures.push_back(failure_entry(rep.checked, c, "even-t control instance not Hamiltonian"));
      }
    }
    rep.extra["controls"] = controls;
  }
  rep.elapsed_ms = ms_since(start);
  return rep;
}

VerificationReport threshold_scan(int n, std::uint64_t seed, int count, int threads) {
  auto start = std::chrono::steady_clock::now();
  if (n < 3 || n > 10) throw std::domain_error("threshold scan needs 3 <= n <= 10");
  VerificationReport rep;
  rep.campaign = "threshold";
  const int bound = (n - 1) / 2;  // ceil(n/2 - 1)
  rep.parameters["n"] = n;
  rep.parameters["seed"] = seed;
  rep.parameters["count"] = count;
  rep.parameters["min_degree"] = bound;

  std::vector<int> verdicts(static_cast<size_t>(count), 0);  // 0 present, 1 classified, 2 anomaly, 3 failure
  std::vector<Json> notes(static_cast<size_t>(count));
  parallel_for(count, threads, [&](int i) {
    GraphCollection c = sample_collection(n, n, bound, instance_seed(seed, i));
    if (find_transversal_hamilton_cycle(c)) {
      verdicts[static_cast<size_t>(i)] = 0;
      return;
    }
    ExtremalClass cls = classify(c);
    if (cls.tag == FamilyTag::Unknown) {
      bool oracle_absent = n <= 9 ? !oracle_has_transversal_hamilton_cycle(c) : true;
      verdicts[static_cast<size_t>(i)] = oracle_absent ? 2 : 3;
      notes[static_cast<size_t>(i)] =
          failure_entry(i, c, oracle_absent ? "absent and unclassified" : "solver/oracle mismatch");
      return;
    }
    auto cert = certify_no_thc(c, cls);
    if (!cert) {
      verdicts[static_cast<size_t>(i)] = 3;
      notes[static_cast<size_t>(i)] = failure_entry(i, c, "classified but certificate refused");
      return;
    }
    verdicts[static_cast<size_t>(i)] = 1;
  });

  int present = 0, classified = 0, anomalies = 0;
  Json anomaly_list = Json::array();
  for (int i = 0; i < count; ++i) {
    ++rep.checked;
    switch (verdicts[static_cast<size_t>(i)]) {
      case 0: ++present; break;
      case 1: ++classified; break;
      case 2:
        ++anomalies;
        anomaly_list.push_back(notes[static_cast<size_t>(i)]);
        break;
      default: rep.failures.push_back(notes[static_cast<size_t>(i)]); break;
    }
  }
  rep.extra["tallies"] = Json{{"present", present}, {"absent_classified", classified}, {"anomalies", anomalies}};
  rep.extra["anomalies"] = anomaly_list;
  rep.elapsed_ms = ms_since(start);
  return rep;
}

bool oracle_has_transversal_hamilton_cycle(const GraphCollection& c) {
  const int n = c.n;
  if (c.colors() != n) throw std::domain_error("oracle needs m = n");
  if (n < 3 || n > 9) throw std::domain_error("oracle bound is n <= 9");
  std::vector<int> rest;
  for (int v = 1; v < n; ++v) rest.push_back(v);
  do {
    if (rest.front() > rest.back()) continue;  // reflection
    std::vector<int> cyc = {0};
    cyc.insert(cyc.end(), rest.begin(), rest.end());
    if (assignment_oracle(cycle_host(n, cyc), c, AssignMode::Transversal)) return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

bool oracle_has_transversal_hamilton_path(const GraphCollection& c) {
  const int n = c.n;
  if (c.colors() != n - 1) throw std::domain_error("oracle needs m = n - 1");
  if (n < 2 || n > 10) throw std::domain_error("oracle bound is n <= 10");
  std::vector<int> seq;
  for (int v = 0; v < n; ++v) seq.push_back(v);
  do {
    if (seq.front() > seq.back()) continue;
    if (assignment_oracle(path_host(n, seq), c, AssignMode::Transversal)) return true;
  } while (std::next_permutation(seq.begin(), seq.end()));
  return false;
}

Json walk_to_json(const RainbowWalk& w, const GraphCollection& c) {
  Json j;
  j["kind"] = w.kind == RainbowWalk::Kind::Cycle ? "cycle" : "path";
  j["vertices"] = w.vertices;
  Json cols = Json::array();
  for (int col : w.colors) cols.push_back(c.color_ids[static_cast<size_t>(col)]);
  j["colors"] = cols;
  return j;
}

namespace {

std::vector<int> set_to_list(VertexSet s) {
  std::vector<int> out;
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

}  // namespace

Json class_to_json(const ExtremalClass& cls) {
  Json j;
  j["tag"] = family_tag_name(cls.tag);
  if (cls.tag == FamilyTag::Unknown) return j;
  Json w;
  w["a_side"] = set_to_list(cls.a_side);
  if (cls.u >= 0) w["u"] = cls.u;
  if (cls.u2 >= 0) w["u2"] = cls.u2;
  if (cls.v >= 0) w["v"] = cls.v;
  if (cls.v2 >= 0) w["v2"] = cls.v2;
  if (cls.exceptional_color >= 0) w["exceptional_color"] = cls.exceptional_color;
  if (cls.t >= 0) w["t"] = cls.t;
  j["witness"] = w;
  return j;
}

Json certificate_to_json(const ExtremalCertificate& cert) {
  Json j = class_to_json(cert.cls);
  j["reason"] = cert_reason_name(cert.reason);
  return j;
}

}  // namespace tgc
