#include "jctriangle/runner.hpp"

#include <cmath>
#include <exception>
#include <filesystem>
#include <mutex>
#include <sstream>
#include <thread>

#include "jctriangle/dynamics.hpp"
#include "jctriangle/ep.hpp"
#include "jctriangle/errors.hpp"
#include "jctriangle/fit.hpp"
#include "jctriangle/model.hpp"
#include "jctriangle/pairing.hpp"
#include "jctriangle/perturb.hpp"
#include "jctriangle/spectral.hpp"
#include "jctriangle/version.hpp"

namespace jct {

void parallel_for(int n, int threads, const std::function<void(int)>& body) {
  const int workers = std::min(threads, n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::mutex mtx;
  std::exception_ptr first_error;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const int lo = static_cast<int>(static_cast<long long>(n) * w / workers);
      const int hi = static_cast<int>(static_cast<long long>(n) * (w + 1) / workers);
      try {
        for (int i = lo; i < hi; ++i) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mtx);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

namespace {

constexpr std::optional<double> kMasked = std::nullopt;

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

double kind_code(EpKind k) {
  switch (k) {
    case EpKind::PTSymmetric: return 0.0;
    case EpKind::PTBroken: return 1.0;
    case EpKind::EP2: return 2.0;
    case EpKind::EP3: return 3.0;
  }
  return -1.0;
}

void stamp_meta(ResultTable& table, const RunConfig& cfg) {
  table.set_meta("tool_version", kVersion);
  table.set_meta("subcommand", cfg.subcommand);
  if (!cfg.preset.empty()) table.set_meta("preset", cfg.preset);
  table.set_meta("config_hash", hex64(fnv1a64(cfg.canonical())));
  table.set_meta("tolerance_classify", format_double(cfg.tolerances.classify));
  table.set_meta("tolerance_defectiveness", format_double(cfg.tolerances.defectiveness));
  table.set_meta("units", "energies in units of omega; angles in radians; times in 1/omega");
  std::ostringstream model;
  for (const auto& name : param_names())
    model << name << '=' << format_double(get_param(cfg.model, name)) << ' ';
  std::string desc = model.str();
  if (!desc.empty()) desc.pop_back();
  table.set_meta("model", desc);
  table.set_meta("kind_codes", "0=pt_symmetric 1=pt_broken 2=ep2 3=ep3");
}

struct SpectrumNode {
  std::array<Complex, 3> eigs{};
  CardanoInputs pq{};
  double kind = -1.0;
  bool ok = false;
};

SpectrumNode eval_spectrum_node(const ModelParams& m, double classify_tol) {
  SpectrumNode node;
  try {
    node.eigs = cardano_eigenvalues(m);
    node.pq = cardano_pq(m);
    node.kind = kind_code(classify(m, classify_tol).kind);
    node.ok = true;
  } catch (const std::exception&) {
    node.ok = false;
  }
  return node;
}

// reorder each valid node's triplet to follow the previous valid one
void stitch_chain(std::vector<SpectrumNode>& nodes) {
  const SpectrumNode* prev = nullptr;
  for (auto& node : nodes) {
    if (!node.ok) continue;
    if (prev) {
      const auto perm = pair_by_continuity(prev->eigs, node.eigs);
      const std::array<Complex, 3> raw = node.eigs;
      for (int n = 0; n < 3; ++n) node.eigs[n] = raw[perm[n]];
    }
    prev = &node;
  }
}

void push_spectrum_cells(std::vector<std::optional<double>>& row, const SpectrumNode& node) {
  if (node.ok) {
    for (int n = 0; n < 3; ++n) {
      row.push_back(node.eigs[n].real());
      row.push_back(node.eigs[n].imag());
    }
    row.push_back(node.pq.p);
    row.push_back(node.pq.q);
    row.push_back(node.pq.discriminant);
    row.push_back(node.kind);
    row.push_back(1.0);
  } else {
    for (int i = 0; i < 10; ++i) row.push_back(kMasked);
    row.push_back(0.0);
  }
}

const std::vector<std::string> kSpectrumCols = {"e1_re", "e1_im", "e2_re", "e2_im", "e3_re",
                                                "e3_im", "p",     "q",     "discriminant",
                                                "kind",  "valid"};

ResultTable build_slice(const RunConfig& cfg) {
  const std::vector<double> values = cfg.axis1.values();
  std::vector<SpectrumNode> nodes(values.size());
  parallel_for(static_cast<int>(values.size()), cfg.threads, [&](int i) {
    ModelParams m = cfg.model;
    set_param(m, cfg.axis1.parameter, values[static_cast<std::size_t>(i)]);
    nodes[static_cast<std::size_t>(i)] = eval_spectrum_node(m, cfg.tolerances.classify);
  });
  stitch_chain(nodes);

  std::vector<std::string> cols = {cfg.axis1.parameter};
  cols.insert(cols.end(), kSpectrumCols.begin(), kSpectrumCols.end());
  ResultTable table(cols);
  table.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::vector<std::optional<double>> row;
    row.push_back(values[i]);
    push_spectrum_cells(row, nodes[i]);
    table.add_row(std::move(row));
  }
  return table;
}

ResultTable build_spectrum(const RunConfig& cfg) {
  const std::vector<double> v1 = cfg.axis1.values();
  const std::vector<double> v2 = cfg.axis2->values();
  const std::size_t n1 = v1.size(), n2 = v2.size();
  std::vector<SpectrumNode> nodes(n1 * n2);
  parallel_for(static_cast<int>(n1 * n2), cfg.threads, [&](int idx) {
    const std::size_t i = static_cast<std::size_t>(idx) / n2;
    const std::size_t j = static_cast<std::size_t>(idx) % n2;
    ModelParams m = cfg.model;
    set_param(m, cfg.axis1.parameter, v1[i]);
    set_param(m, cfg.axis2->parameter, v2[j]);
    nodes[static_cast<std::size_t>(idx)] = eval_spectrum_node(m, cfg.tolerances.classify);
  });

  // stitch the first column down the outer axis, then each row along the
  // inner axis, so surfaces stay continuous in both directions
  std::vector<SpectrumNode*> first_col;
  for (std::size_t i = 0; i < n1; ++i) first_col.push_back(&nodes[i * n2]);
  {
    SpectrumNode* prev = nullptr;
    for (auto* node : first_col) {
      if (!node->ok) continue;
      if (prev) {
        const auto perm = pair_by_continuity(prev->eigs, node->eigs);
        const std::array<Complex, 3> raw = node->eigs;
        for (int n = 0; n < 3; ++n) node->eigs[n] = raw[perm[n]];
      }
      prev = node;
    }
  }
  for (std::size_t i = 0; i < n1; ++i) {
    std::vector<SpectrumNode> row(nodes.begin() + static_cast<std::ptrdiff_t>(i * n2),
                                  nodes.begin() + static_cast<std::ptrdiff_t>((i + 1) * n2));
    stitch_chain(row);
    std::copy(row.begin(), row.end(), nodes.begin() + static_cast<std::ptrdiff_t>(i * n2));
  }

  std::vector<std::string> cols = {cfg.axis1.parameter, cfg.axis2->parameter};
  cols.insert(cols.end(), kSpectrumCols.begin(), kSpectrumCols.end());
  ResultTable table(cols);
  table.reserve(n1 * n2);
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j) {
      std::vector<std::optional<double>> row;
      row.push_back(v1[i]);
      row.push_back(v2[j]);
      push_spectrum_cells(row, nodes[i * n2 + j]);
      table.add_row(std::move(row));
    }
  }
  return table;
}

ResultTable build_surface(const RunConfig& cfg) {
  const SurfaceSpec& s = cfg.surface;
  const CriticalSet set =
      sweep_surface(GridSpec{s.g_ratio_lo, s.g_ratio_hi, s.g_ratio_count},
                    GridSpec{s.j_ratio_lo, s.j_ratio_hi, s.j_ratio_count}, cfg.model);

  ResultTable table({"g1_over_g2", "j1_over_j3", "theta_c", "gamma_c", "valid"});
  table.reserve(set.g_ratio.size() * set.j_ratio.size());
  for (std::size_t i = 0; i < set.g_ratio.size(); ++i) {
    for (std::size_t j = 0; j < set.j_ratio.size(); ++j) {
      const std::size_t k = set.index(i, j);
      table.add_row({set.g_ratio[i], set.j_ratio[j],
                     set.theta_c[k] ? std::optional<double>(*set.theta_c[k]) : kMasked,
                     set.gamma_c[k] ? std::optional<double>(*set.gamma_c[k]) : kMasked,
                     set.theta_c[k] ? 1.0 : 0.0});
    }
  }
  return table;
}

ResultTable build_classify(const RunConfig& cfg) {
  const CardanoInputs pq = cardano_pq(cfg.model);
  const EpClassification cls = classify(cfg.model, cfg.tolerances.classify);

  std::vector<std::string> cols = param_names();
  for (const char* extra : {"p", "q", "discriminant", "shift", "p_residual", "q_residual",
                            "disc_residual", "kind", "valid"})
    cols.push_back(extra);
  ResultTable table(cols);

  std::vector<std::optional<double>> row;
  for (const auto& name : param_names()) row.push_back(get_param(cfg.model, name));
  row.insert(row.end(), {pq.p, pq.q, pq.discriminant, pq.shift, cls.p_residual, cls.q_residual,
                         cls.disc_residual, kind_code(cls.kind), 1.0});
  table.add_row(std::move(row));
  table.set_meta("kind", to_string(cls.kind));
  return table;
}

struct LadderResult {
  PerturbScenario scenario;
  std::vector<double> epsilons;
  PerturbationLadder ladder;                       // valid when ok
  std::vector<std::array<Complex, 3>> predicted;   // per epsilon
  bool ok = false;
};

LadderResult eval_scenario(const RunConfig& cfg, const PerturbScenario& s) {
  LadderResult r;
  r.scenario = s;
  r.epsilons = log_spaced(s.eps_lo, s.eps_hi, s.eps_count);
  ModelParams m = cfg.model;
  m.theta = *s.theta;
  m.gamma = *s.gamma;
  try {
    if (s.ep_order == 3) {
      const Puiseux3 pz = puiseux_3ep(m, s.site);
      const Complex e0 = pz.e0;
      r.ladder = trace_ladder(m, s.site, r.epsilons, e0, pz.predict(r.epsilons.front()));
      for (double eps : r.epsilons) r.predicted.push_back(pz.predict(eps));
    } else {
      const Puiseux2 pz = puiseux_2ep(m, s.site);
      const auto seed_pair = pz.predict(r.epsilons.front());
      const std::array<Complex, 3> seeds = {seed_pair[0], seed_pair[1], pz.e_other - pz.e0};
      r.ladder = trace_ladder(m, s.site, r.epsilons, pz.e0, seeds);
      for (double eps : r.epsilons) {
        const auto pair = pz.predict(eps);
        r.predicted.push_back({pair[0], pair[1], pz.e_other - pz.e0});
      }
    }
    r.ok = true;
  } catch (const std::exception&) {
    r.ok = false;
  }
  return r;
}

double re_gap(const std::array<Complex, 3>& v, int a, int b) {
  return std::abs(std::real(v[static_cast<std::size_t>(a)] - v[static_cast<std::size_t>(b)]));
}

std::pair<ResultTable, ResultTable> build_perturb(const RunConfig& cfg) {
  std::vector<LadderResult> results;
  results.reserve(cfg.perturb.size());
  for (const auto& s : cfg.perturb) results.push_back(eval_scenario(cfg, s));

  ResultTable ladder({"ep_order", "site",     "theta",    "gamma",    "epsilon",  "d1_re",
                      "d1_im",    "d2_re",    "d2_im",    "d3_re",    "d3_im",    "p1_re",
                      "p1_im",    "p2_re",    "p2_im",    "p3_re",    "p3_im",    "split_12",
                      "split_13", "split_23", "pred_12",  "pred_13",  "pred_23",  "valid"});
  for (const auto& r : results) {
    for (std::size_t k = 0; k < r.epsilons.size(); ++k) {
      std::vector<std::optional<double>> row = {
          static_cast<double>(r.scenario.ep_order), static_cast<double>(r.scenario.site),
          *r.scenario.theta, *r.scenario.gamma, r.epsilons[k]};
      if (r.ok) {
        const auto& d = r.ladder.shifts[k];
        const auto& p = r.predicted[k];
        for (int n = 0; n < 3; ++n) {
          row.push_back(d[static_cast<std::size_t>(n)].real());
          row.push_back(d[static_cast<std::size_t>(n)].imag());
        }
        for (int n = 0; n < 3; ++n) {
          row.push_back(p[static_cast<std::size_t>(n)].real());
          row.push_back(p[static_cast<std::size_t>(n)].imag());
        }
        row.insert(row.end(), {re_gap(d, 0, 1), re_gap(d, 0, 2), re_gap(d, 1, 2),
                               re_gap(p, 0, 1), re_gap(p, 0, 2), re_gap(p, 1, 2), 1.0});
      } else {
        for (int i = 0; i < 18; ++i) row.push_back(kMasked);
        row.push_back(0.0);
      }
      ladder.add_row(std::move(row));
    }
  }

  ResultTable fits({"ep_order", "site", "pair_a", "pair_b", "exponent", "log_prefactor",
                    "r_squared", "eps_min", "eps_max", "valid"});
  const int pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
  for (const auto& r : results) {
    for (const auto& pr : pairs) {
      std::vector<std::optional<double>> row = {static_cast<double>(r.scenario.ep_order),
                                                static_cast<double>(r.scenario.site),
                                                static_cast<double>(pr[0]),
                                                static_cast<double>(pr[1])};
      bool ok = r.ok;
      if (ok) {
        std::vector<double> ys;
        ys.reserve(r.epsilons.size());
        for (const auto& d : r.ladder.shifts) ys.push_back(re_gap(d, pr[0] - 1, pr[1] - 1));
        try {
          const ScalingFit f = fit_scaling(r.epsilons, ys);
          row.insert(row.end(),
                     {f.exponent, f.log_prefactor, f.r_squared, f.x_min, f.x_max, 1.0});
        } catch (const std::exception&) {
          ok = false;
        }
      }
      if (!ok) {
        for (int i = 0; i < 5; ++i) row.push_back(kMasked);
        row.push_back(0.0);
      }
      fits.add_row(std::move(row));
    }
  }
  return {std::move(ladder), std::move(fits)};
}

ResultTable build_fidelity(const RunConfig& cfg) {
  const std::vector<double> values = cfg.axis1.values();
  struct Node {
    std::array<double, 3> f{};
    bool ok = false;
  };
  std::vector<Node> nodes(values.size());
  parallel_for(static_cast<int>(values.size()), cfg.threads, [&](int i) {
    try {
      nodes[static_cast<std::size_t>(i)].f =
          fidelity(cfg.model, values[static_cast<std::size_t>(i)], cfg.fidelity_epsilon);
      nodes[static_cast<std::size_t>(i)].ok = true;
    } catch (const std::exception&) {
      nodes[static_cast<std::size_t>(i)].ok = false;
    }
  });

  ResultTable table({"gamma", "f1", "f2", "f3", "valid"});
  table.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (nodes[i].ok)
      table.add_row({values[i], nodes[i].f[0], nodes[i].f[1], nodes[i].f[2], 1.0});
    else
      table.add_row({values[i], kMasked, kMasked, kMasked, 0.0});
  }
  return table;
}

ResultTable build_quench(const RunConfig& cfg) {
  ModelParams initial = cfg.model;
  initial.gamma = cfg.quench.gamma_initial;
  initial.theta = *cfg.quench.theta_initial;
  ModelParams final_ = cfg.model;
  final_.gamma = cfg.quench.gamma_final;
  final_.theta = *cfg.quench.theta_final;
  const std::vector<double> times = linear_times(cfg.quench.t_max, cfg.quench.samples);

  std::array<TimeSeries, 3> series;
  parallel_for(3, cfg.threads, [&](int b) {
    series[static_cast<std::size_t>(b)] = loschmidt_echo(initial, final_, b + 1, times);
  });

  ResultTable table({"t", "L1", "L2", "L3", "valid"});
  table.reserve(times.size());
  for (std::size_t k = 0; k < times.size(); ++k)
    table.add_row({times[k], series[0].values[k], series[1].values[k], series[2].values[k], 1.0});
  table.set_meta("gamma_initial", format_double(cfg.quench.gamma_initial));
  table.set_meta("gamma_final", format_double(cfg.quench.gamma_final));
  table.set_meta("theta_initial", format_double(*cfg.quench.theta_initial));
  table.set_meta("theta_final", format_double(*cfg.quench.theta_final));
  return table;
}

void emit(const RunConfig& cfg, const std::string& stem, ResultTable table, RunResult& out) {
  stamp_meta(table, cfg);
  const std::filesystem::path dir(cfg.out_dir);
  const std::string csv_path = (dir / (stem + ".csv")).string();
  write_file(csv_path, table.to_csv());
  out.files_written.push_back(csv_path);
  if (cfg.write_json) {
    const std::string json_path = (dir / (stem + ".json")).string();
    write_file(json_path, table.to_json());
    out.files_written.push_back(json_path);
  }
}

}  // namespace

RunResult run(const RunConfig& config) {
  RunConfig cfg = config;
  finalize(cfg);
  std::filesystem::create_directories(cfg.out_dir);

  RunResult result;
  if (cfg.subcommand == "slice") {
    emit(cfg, cfg.basename, build_slice(cfg), result);
  } else if (cfg.subcommand == "spectrum") {
    emit(cfg, cfg.basename, build_spectrum(cfg), result);
  } else if (cfg.subcommand == "surface") {
    emit(cfg, cfg.basename, build_surface(cfg), result);
  } else if (cfg.subcommand == "classify") {
    emit(cfg, cfg.basename, build_classify(cfg), result);
  } else if (cfg.subcommand == "perturb") {
    auto [ladder, fits] = build_perturb(cfg);
    emit(cfg, cfg.basename + "_ladder", std::move(ladder), result);
    emit(cfg, cfg.basename + "_fits", std::move(fits), result);
  } else if (cfg.subcommand == "fidelity") {
    emit(cfg, cfg.basename, build_fidelity(cfg), result);
  } else if (cfg.subcommand == "quench") {
    emit(cfg, cfg.basename, build_quench(cfg), result);
  } else {
    throw ConfigError("unknown subcommand '" + cfg.subcommand + "'");
  }
  return result;
}

}  // namespace jct
