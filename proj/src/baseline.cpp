#include "bnfourier/baseline.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "bnfourier/collapse.hpp"
#include "bnfourier/error.hpp"
#include "bnfourier/measures.hpp"

namespace bnf {

namespace {

constexpr std::size_t kMaxAttempts = 100;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

BoolFn from_bits(unsigned k, const std::vector<char>& bits, unsigned cap) {
  return BoolFn::tabulate(default_labels(k), [&](std::uint64_t x) { return bits[x] != 0; }, cap);
}

BoolFn sample_monotone_chain(unsigned k, Rng& rng, const UnateSamplerOptions& options) {
  BoolFn::blank_words(k, options.cap);
  const std::uint64_t size = std::uint64_t{1} << k;
  std::vector<char> f(size);
  for (std::uint64_t x = 0; x < size; ++x) f[x] = 2 * static_cast<unsigned>(std::popcount(x)) >= k;
  std::uniform_int_distribution<std::uint64_t> point(0, size - 1);
  const std::uint64_t steps = static_cast<std::uint64_t>(options.burn_in_per_point) * size;
  for (std::uint64_t t = 0; t < steps; ++t) {
    const std::uint64_t x = point(rng);
    bool allowed = true;
    if (f[x]) {
      // 1 -> 0 keeps monotonicity iff every lower cover is 0.
      for (std::uint64_t b = x; b != 0 && allowed; b &= b - 1) allowed = !f[x & ~(b & (~b + 1))];
    } else {
      // 0 -> 1 keeps monotonicity iff every upper cover is 1.
      for (unsigned j = 0; j < k && allowed; ++j) {
        if (!((x >> j) & 1u)) allowed = f[x | (std::uint64_t{1} << j)];
      }
    }
    if (allowed) f[x] = !f[x];
  }
  return from_bits(k, f, options.cap);
}

double sample_stddev(const std::vector<double>& v, double mean) {
  if (v.size() < 2) return 0.0;
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

struct Trial {
  UncertaintyCurve curve;
  std::size_t resampled = 0;
  bool unate_exact = true;
};

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t attempt) {
  return splitmix64(splitmix64(splitmix64(master) ^ stream) ^ attempt);
}

BoolFn sample_random_function(unsigned k, Rng& rng, unsigned cap) {
  auto words = BoolFn::blank_words(k, cap);
  for (auto& w : words) w = rng();
  if (k < 6) words[0] &= (std::uint64_t{1} << (std::uint64_t{1} << k)) - 1;
  return BoolFn(default_labels(k), std::move(words), cap);
}

BoolFn sample_random_function(unsigned k, std::uint64_t seed, unsigned cap) {
  Rng rng(seed);
  return sample_random_function(k, rng, cap);
}

const std::vector<BoolFn>& unate_functions(unsigned k) {
  static const auto tables = [] {
    std::vector<std::vector<BoolFn>> out(kExactUnateArity + 1);
    for (unsigned n = 0; n <= kExactUnateArity; ++n) {
      const std::uint64_t count = std::uint64_t{1} << (std::uint64_t{1} << n);
      for (std::uint64_t t = 0; t < count; ++t) {
        BoolFn f(default_labels(n), {t});
        if (unateness(f).is_unate) out[n].push_back(std::move(f));
      }
    }
    return out;
  }();
  if (k > kExactUnateArity) throw InputError("unate enumeration supports k <= " + std::to_string(kExactUnateArity));
  return tables[k];
}

BoolFn sample_random_unate(unsigned k, Rng& rng, UnateSamplerOptions options) {
  if (k <= kExactUnateArity) {
    const auto& all = unate_functions(k);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    return all[pick(rng)];
  }
  const std::uint64_t negate = rng() & ((std::uint64_t{1} << k) - 1);
  const BoolFn monotone = sample_monotone_chain(k, rng, options);
  return BoolFn::tabulate(default_labels(k), [&](std::uint64_t x) { return monotone.bit(x ^ negate); }, options.cap);
}

BoolFn sample_random_unate(unsigned k, std::uint64_t seed, UnateSamplerOptions options) {
  Rng rng(seed);
  return sample_random_unate(k, rng, options);
}

std::string_view to_string(BaselineMode mode) {
  switch (mode) {
    case BaselineMode::exchange_random: return "exchange-random";
    case BaselineMode::exchange_unate: return "exchange-unate";
    case BaselineMode::random_topology_random: return "random-topology-random";
    case BaselineMode::random_topology_unate: return "random-topology-unate";
  }
  return "";
}

BaselineMode parse_baseline_mode(std::string_view text) {
  for (auto m : {BaselineMode::exchange_random, BaselineMode::exchange_unate, BaselineMode::random_topology_random,
                 BaselineMode::random_topology_unate}) {
    if (to_string(m) == text) return m;
  }
  throw InputError("unknown baseline mode '" + std::string(text) + "'");
}

BaselineResult baseline_curves(const Network& net, const BaselineSpec& spec, const ProductDist& d, std::size_t L) {
  if (spec.trials < 1) throw InputError("baseline needs at least one trial");
  if (d.arity() != net.inputs().size()) throw InputError("distribution does not match network inputs");
  if (L > net.inputs().size()) throw InputError("curve length exceeds the number of inputs");
  const bool unate = spec.mode == BaselineMode::exchange_unate || spec.mode == BaselineMode::random_topology_unate;
  const bool exchange = spec.mode == BaselineMode::exchange_random || spec.mode == BaselineMode::exchange_unate;

  std::vector<LocalFunction> original;
  if (exchange) original = local_functions(net, spec.cap);

  auto draw = [&](unsigned k, Rng& rng, bool& exact) {
    if (!unate) return sample_random_function(k, rng, spec.cap);
    if (k > kExactUnateArity) exact = false;
    UnateSamplerOptions opts = spec.unate;
    opts.cap = spec.cap;
    return sample_random_unate(k, rng, opts);
  };

  auto build = [&](Rng& rng, bool& exact) {
    std::vector<LocalFunction> fns;
    if (exchange) {
      fns.reserve(original.size());
      for (const auto& lf : original) {
        fns.push_back({lf.name, draw(lf.fn.arity(), rng, exact).relabeled(lf.fn.labels())});
      }
    } else {
      const std::size_t m = net.definitions().size();
      const std::size_t degree = std::min<std::size_t>(spec.out_degree, m);
      std::vector<std::vector<std::string>> regs(m);
      std::vector<std::size_t> targets(m);
      for (std::size_t j = 0; j < net.inputs().size(); ++j) {
        for (std::size_t t = 0; t < m; ++t) targets[t] = t;
        // Partial Fisher-Yates: the first `degree` entries are distinct targets.
        for (std::size_t t = 0; t < degree; ++t) {
          std::uniform_int_distribution<std::size_t> pick(t, m - 1);
          std::swap(targets[t], targets[pick(rng)]);
          regs[targets[t]].push_back(net.inputs()[j]);
        }
      }
      fns.reserve(m);
      for (std::size_t t = 0; t < m; ++t) {
        const auto k = static_cast<unsigned>(regs[t].size());
        if (k > spec.cap) {
          throw CapExceeded("random node has " + std::to_string(k) + " regulators", k, spec.cap);
        }
        fns.push_back({net.definitions()[t].name, draw(k, rng, exact).relabeled(std::move(regs[t]))});
      }
    }
    return collapse(net.inputs(), fns, spec.cap);
  };

  auto run_trial = [&](std::size_t t) {
    Trial out;
    for (std::size_t attempt = 0;; ++attempt) {
      if (attempt == kMaxAttempts) {
        throw Error("baseline trial " + std::to_string(t) + " overflowed the arity cap " +
                    std::to_string(kMaxAttempts) + " times");
      }
      Rng rng(derive_seed(spec.seed, t, attempt));
      bool exact = true;
      try {
        const CollapsedNetwork c = build(rng, exact);
        const RankingResult ranking = determinative_power(c, d);
        out.curve = uncertainty_curve(c, d, ranking.tau, L);
        out.unate_exact = exact;
        return out;
      } catch (const CapExceeded&) {
        ++out.resampled;
      }
    }
  };

  std::vector<Trial> trials(spec.trials);
  const unsigned workers = std::max(1u, std::min<unsigned>(spec.threads, static_cast<unsigned>(spec.trials)));
  if (workers == 1) {
    for (std::size_t t = 0; t < spec.trials; ++t) trials[t] = run_trial(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t t = next++; t < spec.trials; t = next++) {
          try {
            trials[t] = run_trial(t);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  BaselineResult out;
  out.stddev.reserve(L + 1);
  for (std::size_t l = 0; l <= L; ++l) {
    std::vector<double> values;
    values.reserve(trials.size());
    for (const auto& tr : trials) values.push_back(tr.curve.points[l].value);
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    out.mean.points.push_back({l, mean});
    out.stddev.push_back(sample_stddev(values, mean));
  }
  for (auto& tr : trials) {
    out.resampled += tr.resampled;
    out.unate_exact = out.unate_exact && tr.unate_exact;
    out.trials.push_back(std::move(tr.curve));
  }
  return out;
}

}  // namespace bnf
