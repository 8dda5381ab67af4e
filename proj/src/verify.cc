#include "berge/verify.hh"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "berge/canonical.hh"
#include "berge/connectivity.hh"
#include "berge/error.hh"
#include "berge/io.hh"

namespace berge {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::hypotheses_not_met: return "hypotheses-not-met";
    case Verdict::pass: return "pass";
    case Verdict::fail: return "FAIL";
    case Verdict::undecided: return "undecided";
  }
  return "?";
}

CheckResult check_graph(const BipartiteGraph& g, const PredicateConfig& cfg,
                        std::optional<int> delta, std::int64_t budget) {
  CheckResult out;
  const int n = g.n(), m = g.m();
  int min_deg = std::numeric_limits<int>::max();
  for (int x = 0; x < n; ++x) min_deg = std::min(min_deg, g.degree(xv(x)));
  if (n == 0) min_deg = 0;
  const int d = delta.value_or(min_deg);

  if (n < 2) {
    out.reason = "n < 2";
    return out;
  }
  if (min_deg < d) {
    out.reason = "minimum X-degree " + std::to_string(min_deg) + " < delta " + std::to_string(d);
    return out;
  }
  if (!bound_holds(cfg, n, m, d)) {
    out.reason = "degree bound fails for n=" + std::to_string(n) + " m=" + std::to_string(m) +
                 " delta=" + std::to_string(d);
    return out;
  }
  if (!is_k_connected(g, cfg.connectivity_k)) {
    out.reason = "not " + std::to_string(cfg.connectivity_k) + "-connected";
    return out;
  }

  const int half = target_length(cfg, n, d) / 2;
  auto res = cfg.target == Target::x_spanning ? has_x_spanning_cycle(g, budget)
                                               : find_cycle_at_least(g, half, budget);
  out.nodes = res.nodes;
  if (res.status == SearchStatus::found) {
    out.verdict = Verdict::pass;
    out.witness = res.cycle;
    out.reason = "cycle of length " + std::to_string(res.cycle->length());
    return out;
  }
  if (res.status == SearchStatus::budget_exceeded) {
    out.verdict = Verdict::undecided;
    out.reason = "solver budget exhausted after " + std::to_string(res.nodes) + " nodes";
    return out;
  }
  // Second opinion from the longest-cycle solver, unbounded.
  auto lc = longest_cycle(g, std::numeric_limits<std::int64_t>::max());
  out.nodes += lc.nodes;
  const int longest = lc.cycle ? lc.cycle->length() : 0;
  if (longest >= 2 * half)
    throw Error("check_graph: solvers disagree on a cycle of length " + std::to_string(2 * half));
  out.verdict = Verdict::fail;
  out.reason = "longest cycle " + std::to_string(longest) + " < " + std::to_string(2 * half);
  return out;
}

void Tally::add(Verdict v) {
  ++examined;
  switch (v) {
    case Verdict::pass: ++pass; break;
    case Verdict::fail: ++fail; break;
    case Verdict::hypotheses_not_met: ++not_met; break;
    case Verdict::undecided: ++undecided; break;
  }
}

Tally& Tally::operator+=(const Tally& o) {
  examined += o.examined;
  pass += o.pass;
  fail += o.fail;
  not_met += o.not_met;
  undecided += o.undecided;
  return *this;
}

namespace {

std::string tally_line(const Tally& t) {
  return "examined=" + std::to_string(t.examined) + " pass=" + std::to_string(t.pass) +
         " fail=" + std::to_string(t.fail) + " not_met=" + std::to_string(t.not_met) +
         " undecided=" + std::to_string(t.undecided);
}

class LineSink {
 public:
  explicit LineSink(const std::string& path) {
    if (!path.empty()) {
      out_.open(path, std::ios::app);
      if (!out_) throw Error("cannot open " + path + " for writing");
    }
  }
  void write(const std::string& line) {
    if (!out_.is_open()) return;
    std::lock_guard<std::mutex> lock(mu_);
    out_ << line << '\n';
    out_.flush();
  }

 private:
  std::mutex mu_;
  std::ofstream out_;
};

std::string encoding(int n, int m, const Rows& rows) {
  return std::to_string(n) + " " + std::to_string(m) + " " + format_rows(rows, m);
}

nlohmann::json record(int n, int m, int delta, const std::string& enc, const CheckResult& r) {
  return {{"encoding", enc},   {"n", n},
          {"m", m},            {"delta", delta},
          {"verdict", to_string(r.verdict)},
          {"reason", r.reason}, {"solver_nodes", r.nodes}};
}

struct ShardState {
  bool done = false;
  std::optional<Rows> cursor;
  Tally tally;
};

// Progress file: one line per shard,
//   shard <n> <m> <delta> <predicate> <k> <prefix|*> <open|done> <cursor|-> <5 counts>
class Progress {
 public:
  explicit Progress(std::string path) : path_(std::move(path)) {
    if (path_.empty()) return;
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::string tag, state, cursor;
      int n, m, delta, k;
      std::string pred, prefix;
      ShardState s;
      if (!(ls >> tag >> n >> m >> delta >> pred >> k >> prefix >> state >> cursor >>
            s.tally.examined >> s.tally.pass >> s.tally.fail >> s.tally.not_met >>
            s.tally.undecided) ||
          tag != "shard")
        throw Error("malformed progress line in " + path_ + ": " + line);
      s.done = state == "done";
      if (cursor != "-") s.cursor = parse_rows(cursor, m);
      states_[key(n, m, delta, pred, k, prefix)] = s;
    }
  }

  static std::string key(int n, int m, int delta, const std::string& pred, int k,
                         const std::string& prefix) {
    return std::to_string(n) + " " + std::to_string(m) + " " + std::to_string(delta) + " " +
           pred + " " + std::to_string(k) + " " + (prefix.empty() ? "*" : prefix);
  }

  ShardState get(const std::string& k) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = states_.find(k);
    return it == states_.end() ? ShardState{} : it->second;
  }

  void put(const std::string& k, const ShardState& s) {
    std::lock_guard<std::mutex> lock(mu_);
    states_[k] = s;
    if (path_.empty()) return;
    std::string text;
    for (const auto& [key, st] : states_) {
      const int mm = m_of(key);
      text += "shard " + key + " " + (st.done ? "done" : "open") + " " +
              (st.cursor ? format_rows(*st.cursor, mm) : "-") + " " +
              std::to_string(st.tally.examined) + " " + std::to_string(st.tally.pass) + " " +
              std::to_string(st.tally.fail) + " " + std::to_string(st.tally.not_met) + " " +
              std::to_string(st.tally.undecided) + "\n";
    }
    write_file_atomic(path_, text);
  }

 private:
  static int m_of(const std::string& key) {
    std::istringstream ls(key);
    int n, m;
    ls >> n >> m;
    return m;
  }

  std::string path_;
  std::mutex mu_;
  std::map<std::string, ShardState> states_;
};

// Runs f(i) for i in [0, count) on `jobs` threads.
template <typename F>
void parallel_for(int jobs, std::int64_t count, F&& f) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count <= 1) {
    for (std::int64_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (std::int64_t i = next++; i < count; i = next++) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

std::uint64_t draw_seed(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  return rng();
}

}  // namespace

VerifyReport verify_theorem(const VerifyOptions& opt) {
  if (opt.n_lo > opt.n_hi || opt.m_lo > opt.m_hi) throw Error("verify: empty range");
  VerifyReport report;
  Progress progress(opt.resume_path);
  LineSink log(opt.log_path), retry(opt.retry_path);
  std::atomic<std::int64_t> budget_left{opt.stop_after < 0 ? std::numeric_limits<std::int64_t>::max()
                                                           : opt.stop_after};

  for (int n = opt.n_lo; n <= opt.n_hi; ++n)
    for (int m = opt.m_lo; m <= opt.m_hi; ++m) {
      SpaceReport sr;
      sr.n = n;
      sr.m = m;
      sr.delta = opt.delta;
      if (!bound_holds(opt.config, n, m, opt.delta)) {
        sr.vacuous = true;
        sr.complete = true;
        report.spaces.push_back(sr);
        continue;
      }
      const SpaceParams sp{n, m, opt.delta, opt.config.connectivity_k};
      sr.estimate = estimate_classes(sp, opt.estimate_probes, opt.seed).classes;
      if (sr.estimate > opt.exhaustive_limit) {
        report.notices.push_back("n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                 ": about " + std::to_string(static_cast<long long>(sr.estimate)) +
                                 " classes exceeds the exhaustive limit; sampling " +
                                 std::to_string(opt.fallback_samples) + " graphs instead");
        HuntOptions h;
        h.n = n;
        h.m_lo = h.m_hi = m;
        h.delta = opt.delta;
        h.config = opt.config;
        h.samples = opt.fallback_samples;
        h.seed = draw_seed(opt.seed, static_cast<std::uint64_t>(n) << 32 | m);
        h.budget = opt.budget;
        h.jobs = opt.jobs;
        h.log_path = opt.log_path;
        h.verbosity = opt.verbosity;
        auto hr = hunt(h);
        sr.sampled = true;
        sr.complete = hr.accepted == opt.fallback_samples;
        sr.tally = hr.tally;
        sr.failures = hr.failures;
        report.spaces.push_back(sr);
        continue;
      }

      const auto shards = shard_prefixes(sp, opt.shard_depth);
      std::mutex mu;
      std::atomic<bool> all_done{true};
      parallel_for(opt.jobs, static_cast<std::int64_t>(shards.size()), [&](std::int64_t i) {
        const Rows& prefix = shards[i];
        const std::string key = Progress::key(n, m, opt.delta, opt.config.name,
                                              opt.config.connectivity_k, format_rows(prefix, m));
        ShardState st = progress.get(key);
        std::vector<std::string> found;
        std::int64_t since_save = 0;
        if (!st.done) {
          const bool finished = enumerate_shard(sp, prefix, st.cursor, [&](const Rows& rows) {
            if (budget_left.fetch_sub(1) <= 0) return false;
            const auto g = graph_from_rows(rows, m);
            const auto r = check_graph(g, opt.config, opt.delta, opt.budget);
            st.tally.add(r.verdict);
            st.cursor = rows;
            const std::string enc = encoding(n, m, rows);
            if (r.verdict == Verdict::fail) {
              found.push_back(enc);
              log.write(record(n, m, opt.delta, enc, r).dump());
            } else if (opt.verbosity >= 2) {
              log.write(record(n, m, opt.delta, enc, r).dump());
            }
            if (r.verdict == Verdict::undecided) retry.write(enc);
            if (++since_save >= 256) {
              progress.put(key, st);
              since_save = 0;
            }
            return true;
          });
          st.done = finished;
          progress.put(key, st);
        }
        if (!st.done) all_done = false;
        std::lock_guard<std::mutex> lock(mu);
        sr.tally += st.tally;
        sr.failures.insert(sr.failures.end(), found.begin(), found.end());
      });
      sr.complete = all_done;
      std::sort(sr.failures.begin(), sr.failures.end());
      report.spaces.push_back(sr);
    }

  for (const auto& sr : report.spaces) {
    report.total += sr.tally;
    report.complete = report.complete && sr.complete;
    report.failures.insert(report.failures.end(), sr.failures.begin(), sr.failures.end());
  }
  return report;
}

std::string format_report(const VerifyReport& r) {
  std::ostringstream out;
  for (const auto& note : r.notices) out << "notice: " << note << "\n";
  for (const auto& s : r.spaces) {
    out << "n=" << s.n << " m=" << s.m << " delta=" << s.delta << ": ";
    if (s.vacuous) {
      out << "vacuous (degree bound cannot hold)\n";
      continue;
    }
    out << (s.sampled ? "sampled " : "exhaustive ") << tally_line(s.tally)
        << (s.complete ? "" : " INCOMPLETE") << "\n";
  }
  out << "total " << tally_line(r.total) << (r.complete ? " complete" : " INCOMPLETE") << "\n";
  out << "failures: " << r.failures.size() << "\n";
  for (const auto& f : r.failures) out << "  " << f << "\n";
  return out.str();
}

BipartiteGraph sample_graph(int n, int m, int delta, std::uint64_t seed) {
  if (delta > m || delta < 0) throw Error("sample_graph: need 0 <= delta <= m");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(delta, m);
  std::vector<int> ys(m);
  std::vector<std::vector<int>> rows(n);
  for (auto& row : rows) {
    std::iota(ys.begin(), ys.end(), 0);
    std::shuffle(ys.begin(), ys.end(), rng);
    row.assign(ys.begin(), ys.begin() + size(rng));
    std::sort(row.begin(), row.end());
  }
  return BipartiteGraph(m, std::move(rows));
}

HuntReport hunt(const HuntOptions& opt) {
  HuntReport report;
  const int m_lo = std::max(opt.m_lo, opt.delta);
  if (m_lo > opt.m_hi || opt.samples <= 0 || opt.n < 1) return report;
  const std::int64_t max_attempts = opt.max_attempts > 0 ? opt.max_attempts : 100 * opt.samples;
  LineSink log(opt.log_path);

  struct Draw {
    int m = 0;
    Rows rows;
    CheckResult result;
  };
  const std::int64_t chunk = 64 * std::max(1, opt.jobs);
  for (std::int64_t base = 0; base < max_attempts && report.accepted < opt.samples; base += chunk) {
    const std::int64_t count = std::min(chunk, max_attempts - base);
    std::vector<Draw> draws(count);
    parallel_for(opt.jobs, count, [&](std::int64_t i) {
      std::mt19937_64 rng(draw_seed(opt.seed, static_cast<std::uint64_t>(base + i)));
      const int m = std::uniform_int_distribution<int>(m_lo, opt.m_hi)(rng);
      const auto g = sample_graph(opt.n, m, opt.delta, rng());
      draws[i].m = m;
      draws[i].result = check_graph(g, opt.config, opt.delta, opt.budget);
      if (draws[i].result.verdict != Verdict::hypotheses_not_met)
        draws[i].rows = rows_of(canonical_form(g));
    });
    for (const auto& d : draws) {
      if (report.accepted >= opt.samples) break;
      ++report.attempts;
      if (d.result.verdict == Verdict::hypotheses_not_met) continue;
      ++report.accepted;
      report.tally.add(d.result.verdict);
      const std::string enc = encoding(opt.n, d.m, d.rows);
      if (d.result.verdict == Verdict::fail) {
        report.failures.push_back(enc);
        log.write(record(opt.n, d.m, opt.delta, enc, d.result).dump());
      } else if (opt.verbosity >= 2) {
        log.write(record(opt.n, d.m, opt.delta, enc, d.result).dump());
      }
    }
  }
  return report;
}

std::string format_report(const HuntReport& r) {
  std::ostringstream out;
  out << "attempts=" << r.attempts << " accepted=" << r.accepted << " " << tally_line(r.tally)
      << "\n";
  out << "failures: " << r.failures.size() << "\n";
  for (const auto& f : r.failures) out << "  " << f << "\n";
  return out.str();
}

std::vector<int> balanced_parts(int n, int parts) {
  if (parts < 1 || n < parts) throw Error("balanced_parts: need n >= parts >= 1");
  std::vector<int> out(parts, n / parts);
  for (int i = 0; i < n % parts; ++i) ++out[i];
  return out;
}

SharpnessReport sharpness_report(int k, int delta, std::vector<int> parts, std::int64_t budget) {
  if (parts.empty()) parts = balanced_parts(delta, k + 1);
  SharpnessReport r;
  r.params = {k, parts, delta};
  const auto inst = build_gk(r.params);
  const auto& g = inst.graph;
  r.n = g.n();
  r.m = g.m();
  r.bound_m = (k + 1) * (delta - k) + k - 1;
  r.min_x_degree = std::numeric_limits<int>::max();
  for (int x = 0; x < g.n(); ++x) r.min_x_degree = std::min(r.min_x_degree, g.degree(xv(x)));
  r.connectivity = vertex_connectivity(g);
  r.k_connected = is_k_connected(g, k);
  r.spanning = has_x_spanning_cycle(g, budget).status;

  auto lc = longest_cycle(g, budget);
  if (lc.status == SearchStatus::found) {
    r.longest = lc.cycle->length();
    r.longest_exact = true;
  } else {
    r.longest = lc.cycle ? lc.cycle->length() : 0;
    // Settle the claimed value with two decisions instead.
    if (inst.cert.claimed_longest) {
      const int half = *inst.cert.claimed_longest / 2;
      auto at = find_cycle_at_least(g, half, budget);
      auto above = find_cycle_at_least(g, half + 1, budget);
      if (at.status == SearchStatus::found && above.status == SearchStatus::none) {
        r.longest = 2 * half;
        r.longest_exact = true;
      }
    }
  }
  r.witness = r.k_connected && r.min_x_degree >= r.n && r.m == r.bound_m + 1 &&
              r.spanning == SearchStatus::none;
  return r;
}

std::string format_report(const SharpnessReport& r) {
  std::ostringstream out;
  out << "G_" << r.params.k << "(";
  for (std::size_t i = 0; i < r.params.parts.size(); ++i)
    out << (i ? "," : "") << r.params.parts[i];
  out << ";" << r.params.delta << "): n=" << r.n << " m=" << r.m << " (bound " << r.bound_m
      << ")\n";
  out << "min X-degree " << r.min_x_degree << ", connectivity " << r.connectivity << " ("
      << (r.k_connected ? "" : "NOT ") << r.params.k << "-connected)\n";
  out << "X-spanning cycle: " << to_string(r.spanning) << "\n";
  out << "longest cycle: " << r.longest << (r.longest_exact ? " (exact)" : " (lower bound)")
      << "\n";
  out << (r.witness ? "witnesses sharpness" : "non-witness") << "\n";
  return out.str();
}

}  // namespace berge
