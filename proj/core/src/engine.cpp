#include "faircert/engine.hpp"

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>

#include "faircert/errors.hpp"
#include "faircert/forward_analysis.hpp"

namespace faircert {

const char* to_string(OverallVerdict verdict) {
  switch (verdict) {
    case OverallVerdict::kCertifiedFair: return "certified-fair";
    case OverallVerdict::kFalsifiedUnfair: return "falsified-unfair";
    case OverallVerdict::kUndecided: return "undecided";
  }
  return "unknown";
}

const char* to_string(PartitionStatus status) {
  switch (status) {
    case PartitionStatus::kFair: return "fair";
    case PartitionStatus::kUnfair: return "unfair";
    case PartitionStatus::kStoppedMaxDepth: return "undecided-max-depth";
    case PartitionStatus::kStoppedCexFound: return "undecided-cex-found";
    case PartitionStatus::kStoppedUnsplittable: return "undecided-unsplittable";
    case PartitionStatus::kUnvisited: return "undecided-unvisited";
  }
  return "unknown";
}

void EngineConfig::validate() const {
  refine.validate();
  if (!(timeout_seconds > 0.0)) throw Error(ErrorCode::kInvalidArgument, "timeout must be positive");
  if (workers < 1) throw Error(ErrorCode::kInvalidArgument, "workers must be at least 1");
  if (deterministic && workers != 1) {
    throw Error(ErrorCode::kInvalidArgument, "deterministic mode requires a single worker");
  }
}

namespace {

using Clock = std::chrono::steady_clock;

// Everything one worker produces; merged associatively at the end.
struct WorkerState {
  explicit WorkerState(double measure) : rates(measure) {}

  RateAccumulator rates;
  std::uint64_t cex_count = 0;
  std::vector<CounterexamplePair> counterexamples;
  std::uint64_t processed = 0;
  int max_depth = 0;
  std::uint64_t undecided_leaves = 0;
  std::uint64_t fair_leaves = 0;
  std::uint64_t unfair_leaves = 0;
  std::vector<PartitionRecord> records;
};

class PartitionProcessor {
 public:
  PartitionProcessor(const Network& net, const DomainSpec& domain, const EngineConfig& cfg)
      : net_(net), domain_(domain), cfg_(cfg) {}

  // Analyses one partition; split children come back in push order.
  std::vector<Partition> process(const Partition& p, WorkerState& state) const {
    ++state.processed;
    state.max_depth = std::max(state.max_depth, p.depth);
    const ForwardOutcome outcome = symbolic_forward(net_, domain_.protected_index(), p);
    if (outcome.verdict != Verdict::kUndecided) {
      const double measure = partition_measure(p, domain_);
      state.rates.record(outcome.verdict, measure);
      if (outcome.verdict == Verdict::kFair) {
        ++state.fair_leaves;
        leaf(state, p, PartitionStatus::kFair, measure);
      } else {
        ++state.unfair_leaves;
        leaf(state, p, PartitionStatus::kUnfair, measure);
        if (auto witness = unfair_witness(p)) record_cex(state, std::move(*witness));
      }
      return {};
    }

    Rng rng = partition_rng(cfg_.refine.rng_seed, p);
    SplitResult result = backward_refinement(net_, domain_, p, outcome, cfg_.refine, rng);
    if (auto* split = std::get_if<Split>(&result)) {
      return {std::move(split->upper), std::move(split->lower)};
    }
    ++state.undecided_leaves;
    PartitionStatus status = PartitionStatus::kStoppedUnsplittable;
    if (std::holds_alternative<StoppedMaxDepth>(result)) {
      status = PartitionStatus::kStoppedMaxDepth;
    } else if (auto* cex = std::get_if<StoppedCexFound>(&result)) {
      status = PartitionStatus::kStoppedCexFound;
      record_cex(state, std::move(cex->pair));
    }
    leaf(state, p, status, partition_measure(p, domain_));
    return {};
  }

  void record_cex(WorkerState& state, CounterexamplePair pair) const {
    ++state.cex_count;
    if (state.counterexamples.size() < cfg_.max_recorded_cex) state.counterexamples.push_back(std::move(pair));
  }

  // Every pair of an unfair partition is a counterexample; report the one at
  // the partition's lower corner (midpoint for real attributes).
  std::optional<CounterexamplePair> unfair_witness(const Partition& p) const {
    std::vector<double> x(p.bounds.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      const auto& b = p.bounds[i];
      x[i] = domain_.attribute(i).discrete() ? b.lo : (b.lo + b.hi) / 2.0;
    }
    x[domain_.protected_index()] = 0.0;
    std::vector<double> x_prime = x;
    x_prime[domain_.protected_index()] = 1.0;
    const Evaluation a = evaluate(net_, x);
    const Evaluation b = evaluate(net_, x_prime);
    if (a.label == b.label) return std::nullopt;
    return CounterexamplePair{std::move(x), std::move(x_prime), a.score, b.score};
  }

  void leaf(WorkerState& state, const Partition& p, PartitionStatus status, double measure) const {
    if (cfg_.record_partitions) state.records.push_back({p, status, measure});
  }

 private:
  const Network& net_;
  const DomainSpec& domain_;
  const EngineConfig& cfg_;
};

class Deadline {
 public:
  explicit Deadline(double seconds)
      : start_(Clock::now()),
        end_(start_ + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds))) {}

  bool expired() const { return Clock::now() >= end_; }
  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

 private:
  Clock::time_point start_;
  Clock::time_point end_;
};

bool run_serial(const PartitionProcessor& processor, std::vector<Partition>& stack,
                const Deadline& deadline, WorkerState& state) {
  while (!stack.empty()) {
    if (deadline.expired()) return true;
    Partition p = std::move(stack.back());
    stack.pop_back();
    for (auto& child : processor.process(p, state)) stack.push_back(std::move(child));
  }
  return false;
}

bool run_parallel(const PartitionProcessor& processor, std::vector<Partition>& stack,
                  const Deadline& deadline, std::vector<WorkerState>& states) {
  std::mutex mutex;
  std::condition_variable ready;
  std::size_t busy = 0;
  bool stop = false;
  bool timed_out = false;
  std::exception_ptr failure;

  auto worker = [&](WorkerState& state) {
    std::unique_lock lock(mutex);
    while (true) {
      ready.wait(lock, [&] { return stop || !stack.empty() || busy == 0; });
      if (stop || stack.empty()) break;
      if (deadline.expired()) {
        timed_out = true;
        stop = true;
        break;
      }
      Partition p = std::move(stack.back());
      stack.pop_back();
      ++busy;
      lock.unlock();

      std::vector<Partition> children;
      try {
        children = processor.process(p, state);
      } catch (...) {
        lock.lock();
        if (!failure) failure = std::current_exception();
        stop = true;
        --busy;
        break;
      }

      lock.lock();
      for (auto& child : children) stack.push_back(std::move(child));
      --busy;
      ready.notify_all();
    }
    ready.notify_all();
  };

  std::vector<std::thread> threads;
  threads.reserve(states.size());
  for (auto& state : states) threads.emplace_back(worker, std::ref(state));
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
  return timed_out;
}

}  // namespace

Report certify(const Network& net, const DomainSpec& domain, const EngineConfig& cfg) {
  cfg.validate();
  if (net.input_dim() != domain.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "network expects " + std::to_string(net.input_dim()) + " inputs but the domain has " +
                    std::to_string(domain.size()) + " attributes");
  }

  const Deadline deadline(cfg.timeout_seconds);
  const double total_measure = domain_measure(domain);
  const PartitionProcessor processor(net, domain, cfg);
  std::vector<Partition> stack{root_partition(domain)};

  std::vector<WorkerState> states(static_cast<std::size_t>(cfg.workers), WorkerState(total_measure));
  const bool timed_out = cfg.workers == 1 ? run_serial(processor, stack, deadline, states.front())
                                          : run_parallel(processor, stack, deadline, states);

  Report report;
  report.config = cfg;
  report.timed_out = timed_out;
  RateAccumulator rates(total_measure);
  std::uint64_t fair_leaves = 0;
  std::uint64_t unfair_leaves = 0;
  std::uint64_t undecided_leaves = 0;
  for (auto& state : states) {
    rates.merge(state.rates);
    report.cex_count += state.cex_count;
    report.partitions_processed += state.processed;
    report.max_depth_reached = std::max(report.max_depth_reached, state.max_depth);
    fair_leaves += state.fair_leaves;
    unfair_leaves += state.unfair_leaves;
    undecided_leaves += state.undecided_leaves;
    for (auto& pair : state.counterexamples) {
      if (report.counterexamples.size() >= cfg.max_recorded_cex) break;
      report.counterexamples.push_back(std::move(pair));
    }
    for (auto& record : state.records) report.partitions.push_back(std::move(record));
  }
  if (cfg.record_partitions) {
    for (auto& p : stack) {
      const double measure = partition_measure(p, domain);
      report.partitions.push_back({std::move(p), PartitionStatus::kUnvisited, measure});
    }
  }

  // When every leaf agrees the union is the whole domain, so the rate is
  // exactly one whatever rounding the summation picked up.
  const bool nothing_left = stack.empty() && undecided_leaves == 0;
  if (nothing_left && unfair_leaves == 0 && fair_leaves > 0) {
    report.verdict = OverallVerdict::kCertifiedFair;
    report.rates = {1.0, 0.0, 0.0};
  } else if (nothing_left && fair_leaves == 0 && unfair_leaves > 0) {
    report.verdict = OverallVerdict::kFalsifiedUnfair;
    report.rates = {0.0, 1.0, 0.0};
  } else {
    report.verdict = OverallVerdict::kUndecided;
    report.rates = rates.rates();
  }
  report.elapsed_seconds = cfg.deterministic ? 0.0 : deadline.elapsed();
  return report;
}

AuditedReport certify_exact_rates_check(const Network& net, const DomainSpec& domain,
                                        const EngineConfig& cfg, std::uint64_t limit) {
  AuditedReport audited;
  audited.oracle.exact = exhaustive_fairness(net, domain, limit);

  EngineConfig recording = cfg;
  recording.record_partitions = true;
  audited.report = certify(net, domain, recording);

  OracleComparison& cmp = audited.oracle;
  cmp.certified_is_lower_bound = audited.report.rates.certified <= cmp.exact.fair_fraction();
  cmp.falsified_is_lower_bound = audited.report.rates.falsified <= cmp.exact.unfair_fraction();
  cmp.fair_partitions_verified = true;
  cmp.unfair_partitions_verified = true;
  for (const auto& record : audited.report.partitions) {
    if (record.status == PartitionStatus::kFair && !check_partition_fair(net, domain, record.partition, limit)) {
      cmp.fair_partitions_verified = false;
    }
    if (record.status == PartitionStatus::kUnfair &&
        !check_partition_unfair(net, domain, record.partition, limit)) {
      cmp.unfair_partitions_verified = false;
    }
  }
  if (!cfg.record_partitions) audited.report.partitions.clear();
  audited.report.config.record_partitions = cfg.record_partitions;
  return audited;
}

}  // namespace faircert
