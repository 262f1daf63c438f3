#include "monometric/channels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "monometric/error.hpp"
#include "monometric/parallel.hpp"
#include "monometric/random.hpp"

namespace monometric {

namespace {

constexpr std::uint64_t kChannelStream = 0x6b72617573;   // "kraus"
constexpr std::uint64_t kTrialStream = 0x636f6e7472;     // "contr"
constexpr int kMaxResamples = 10;
constexpr int kMaxTrialRedraws = 100;

}  // namespace

KrausChannel::KrausChannel(std::vector<ComplexMatrix> operators, double tol)
    : operators_(std::move(operators)) {
  if (operators_.empty()) throw Error(ErrorKind::InvalidArgument, "channel needs a Kraus operator");
  const std::size_t m = operators_.front().rows();
  const std::size_t n = operators_.front().cols();
  if (m == 0 || n == 0) throw Error(ErrorKind::DimensionMismatch, "empty Kraus operator");
  for (const auto& k : operators_)
    if (k.rows() != m || k.cols() != n)
      throw Error(ErrorKind::DimensionMismatch, "Kraus operators must share one shape");
  const double defect = trace_preservation_defect();
  if (!(defect <= tol))
    throw Error(ErrorKind::NotTracePreserving,
                "||sum K*K - I||_F = " + std::to_string(defect));
}

double KrausChannel::trace_preservation_defect() const {
  ComplexMatrix sum = ComplexMatrix::zero(input_dimension(), input_dimension());
  for (const auto& k : operators_) sum += k.adjoint() * k;
  return frobenius_norm(sum - ComplexMatrix::identity(input_dimension()));
}

ComplexMatrix apply_channel(const KrausChannel& channel, const ComplexMatrix& x) {
  if (x.rows() != channel.input_dimension() || x.cols() != channel.input_dimension())
    throw Error(ErrorKind::DimensionMismatch, "channel input has the wrong shape");
  ComplexMatrix out = ComplexMatrix::zero(channel.output_dimension(), channel.output_dimension());
  for (const auto& k : channel.operators()) out += k * x * k.adjoint();
  return out;
}

KrausChannel random_channel(std::size_t n, std::size_t m, std::size_t k, std::uint64_t seed) {
  if (n < 1 || m < 1 || k < 1)
    throw Error(ErrorKind::InvalidArgument, "channel dimensions and Kraus rank must be >= 1");
  if (m * k < n)
    throw Error(ErrorKind::InvalidArgument, "an isometry needs m*k >= n");
  for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
    Rng rng = make_rng(seed, kChannelStream, static_cast<std::uint64_t>(attempt));
    ComplexMatrix v = ginibre(m * k, n, rng);
    if (!orthonormalize_columns(v)) continue;
    std::vector<ComplexMatrix> ops;
    ops.reserve(k);
    for (std::size_t block = 0; block < k; ++block) {
      ComplexMatrix op(m, n);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) op(i, j) = v(block * m + i, j);
      ops.push_back(std::move(op));
    }
    return KrausChannel(std::move(ops));
  }
  throw Error(ErrorKind::DegenerateSample, "isometry sampling failed 10 times");
}

KrausChannel unitary_channel(const ComplexMatrix& u) { return KrausChannel({u}); }

KrausChannel pinching_channel(std::size_t n) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    ComplexMatrix p(n, n);
    p(i, i) = 1.0;
    ops.push_back(std::move(p));
  }
  return KrausChannel(std::move(ops));
}

MonotonicityTrial monotonicity_trial(const MetricSpec& spec, const KrausChannel& channel,
                                     const DensityMatrix& rho, const TangentMatrix& a) {
  const DensityMatrix image(apply_channel(channel, rho.matrix()), kChannelOutputFloor);
  const ComplexMatrix a_image = apply_channel(channel, a);
  const double lhs = metric_quadratic(spec, image, a_image);
  const double rhs = metric_quadratic(spec, rho, a);
  return {lhs, rhs, rhs - lhs};
}

ContractionReport run_contraction_trials(const MetricSpec& spec, const ContractionConfig& config) {
  if (config.trials < 1) throw Error(ErrorKind::InvalidArgument, "trials must be >= 1");
  if (config.input_dims.empty() || (!config.unitary_only && config.output_dims.empty()))
    throw Error(ErrorKind::InvalidArgument, "no dimensions to sample");

  struct Outcome {
    MonotonicityTrial trial;
    int rejected;
  };
  std::vector<Outcome> outcomes(static_cast<std::size_t>(config.trials));

  detail::parallel_for(outcomes.size(), [&](std::size_t i) {
    int rejected = 0;
    for (int redraw = 0; redraw < kMaxTrialRedraws; ++redraw) {
      Rng rng = make_rng(config.seed, kTrialStream,
                         (static_cast<std::uint64_t>(i) << 8) | static_cast<std::uint64_t>(redraw));
      auto pick = [&rng](const std::vector<std::size_t>& from) {
        std::uniform_int_distribution<std::size_t> d(0, from.size() - 1);
        return from[d(rng)];
      };
      const std::size_t n = pick(config.input_dims);
      const DensityMatrix rho(random_density(n, rng));
      const bool hermitian = std::bernoulli_distribution(0.5)(rng);
      const ComplexMatrix a = hermitian ? random_hermitian(n, rng) : ginibre(n, n, rng);
      const std::uint64_t channel_seed = rng();

      KrausChannel channel = [&] {
        if (config.unitary_only) {
          Rng urng(channel_seed);
          return unitary_channel(random_unitary(n, urng));
        }
        const std::size_t m = pick(config.output_dims);
        // Enough Kraus operators for an isometry and a full-rank T(rho).
        const std::size_t min_rank = std::max((n + m - 1) / m, (m + n - 1) / n);
        const std::size_t k = min_rank + std::uniform_int_distribution<std::size_t>(0, 2)(rng);
        return random_channel(n, m, k, channel_seed);
      }();
      try {
        outcomes[i] = {monotonicity_trial(spec, channel, rho, a), rejected};
        return;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotAState) throw;
        ++rejected;
      }
    }
    throw Error(ErrorKind::DegenerateSample, "trial " + std::to_string(i) +
                                                 " kept producing singular channel outputs");
  });

  ContractionReport report;
  report.trials = config.trials;
  report.worst_slack = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    report.rejected += o.rejected;
    report.max_abs_slack = std::max(report.max_abs_slack, std::abs(o.trial.slack));
    if (o.trial.slack < report.worst_slack) {
      report.worst_slack = o.trial.slack;
      report.worst_trial = i;
    }
  }
  return report;
}

}  // namespace monometric
