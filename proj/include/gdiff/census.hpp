#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "gdiff/canonical.hpp"
#include "gdiff/propositions.hpp"

namespace gdiff {

struct StatusCounts {
  int pass = 0;
  int fail = 0;
  int vacuous = 0;
  int skipped = 0;

  int total() const { return pass + fail + vacuous + skipped; }
  void add(Status s) {
    switch (s) {
      case Status::pass: ++pass; break;
      case Status::fail: ++fail; break;
      case Status::vacuous: ++vacuous; break;
      case Status::skipped: ++skipped; break;
    }
  }
  StatusCounts& operator+=(const StatusCounts& o) {
    pass += o.pass;
    fail += o.fail;
    vacuous += o.vacuous;
    skipped += o.skipped;
    return *this;
  }
  bool operator==(const StatusCounts&) const = default;
};

struct CensusSummary {
  int n_min = 0;
  int n_max = 0;
  int instances = 0;
  std::vector<std::string> props;
  std::map<std::string, StatusCounts> counts;  // per proposition id
  std::chrono::milliseconds runtime{0};

  StatusCounts totals() const {
    StatusCounts t;
    for (const auto& [id, c] : counts) t += c;
    return t;
  }
};

struct BatchResult {
  CensusSummary summary;
  std::vector<CheckReport> reports;  // instance-major, props in request order
};

/// Evaluates every (graph, proposition) pair on a pool of `jobs` workers.
/// Each instance is handled by one worker; the merged report order depends
/// only on the input order.
inline BatchResult run_batch(const std::vector<Graph>& graphs, const std::vector<std::string>& props, int jobs,
                             CheckOptions opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::vector<CheckReport>> per_instance(graphs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) per_instance[i] = run_checks(graphs[i], props, opts);
  };
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(graphs.size())));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  BatchResult out;
  out.summary.instances = static_cast<int>(graphs.size());
  out.summary.props = props;
  for (const auto& id : props) out.summary.counts[id];
  for (auto& reps : per_instance) {
    for (auto& r : reps) {
      out.summary.counts[r.prop].add(r.status);
      out.reports.push_back(std::move(r));
    }
  }
  out.summary.runtime = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return out;
}

/// Runs the propositions over every connected isomorphism class of order
/// n_min..n_max (n_max <= 7).
inline BatchResult run_census(int n_min, int n_max, const std::vector<std::string>& props, int jobs,
                              CheckOptions opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  BatchResult out = run_batch(census(n_min, n_max), props, jobs, opts);
  out.summary.n_min = n_min;
  out.summary.n_max = n_max;
  out.summary.runtime = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return out;
}

}  // namespace gdiff
