// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>

#include "bures/errors.hpp"
#include "bures/hyperbolic.hpp"
#include "bures/measures.hpp"
#include "bures/qubit.hpp"
#include "bures/random.hpp"
#include "bures/verify.hpp"
#include "json_writer.hpp"

namespace bures::cli {

namespace {

constexpr const char* kSchemaVersion = "1";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BlochVector parse_state(const std::string& text, const char* name) {
  const auto triple = parse_triple(text);
  if (!triple) {
    throw UsageError(std::string("--") + name + " expects three finite comma-separated reals, got '" +
                     text + "'");
  }
  try {
    return BlochVector(*triple);
  } catch (const InvalidState& e) {
    throw UsageError(std::string("--") + name + ": " + e.what());
  }
}

void write_vec(JsonWriter& j, const Vec3& v) { j.reals({v.x, v.y, v.z}); }
void write_point(JsonWriter& j, DiskPoint p) { j.reals({p.real(), p.imag()}); }

void begin_envelope(JsonWriter& j, std::string_view command) {
  j.begin_object();
  j.key("schema_version").value(kSchemaVersion);
  j.key("command").value(command);
  j.key("inputs").begin_object();
}

// fidelity ---------------------------------------------------------------

struct FidelityArgs {
  std::string u;
  std::string v;
  std::string format = "json";
};

int cmd_fidelity(const FidelityArgs& a, std::ostream& out, std::ostream& err) {
  const BlochVector u = parse_state(a.u, "u");
  const BlochVector v = parse_state(a.v, "v");
  const FidelityReport r = compare(u, v);

  JsonWriter j;
  begin_envelope(j, "fidelity");
  j.key("u");
  write_vec(j, u.vec());
  j.key("v");
  write_vec(j, v.vec());
  j.key("format").value(a.format);
  j.end_object();

  j.key("result").begin_object();
  j.key("u");
  write_vec(j, r.u.vec());
  j.key("v");
  write_vec(j, r.v.vec());
  j.key("f_matrix").value(r.f_matrix);
  j.key("f_hyperbolic");
  if (r.f_hyperbolic) {
    j.value(*r.f_hyperbolic);
  } else {
    j.null();
  }
  j.key("f_closed").value(r.f_closed);
  j.key("d_trace").value(r.d_trace);
  j.key("max_pairwise_diff").value(r.max_pairwise_diff);
  j.key("regime_flags").begin_array();
  for (RegimeFlag f : r.regime_flags.list()) j.value(to_string(f));
  j.end_array();
  j.end_object();
  j.end_object();
  out << j.str();

  if (r.max_pairwise_diff > kTheoremViolation) {
    err << "theorem violation: fidelity routes disagree by " << format_real(r.max_pairwise_diff)
        << "\n";
    return kCheckFailed;
  }
  return kSuccess;
}

// triangle ---------------------------------------------------------------

struct TriangleArgs {
  std::string u;
  std::string v;
  int samples_per_edge = 32;
  std::string format = "json";
};

struct Edge {
  const char* name;
  std::vector<DiskPoint> points;
};

int cmd_triangle(const TriangleArgs& a, std::ostream& out) {
  const BlochVector u = parse_state(a.u, "u");
  const BlochVector v = parse_state(a.v, "v");
  if (a.samples_per_edge < 2) throw UsageError("--samples-per-edge must be at least 2");

  HyperbolicTriangle t;
  try {
    t = triangle(u, v);
  } catch (const Degenerate& e) {
    throw UsageError(std::string("degenerate triangle: ") + e.what());
  } catch (const OutOfRegime& e) {
    throw UsageError(std::string("triangle out of range: ") + e.what());
  }

  const int n = a.samples_per_edge;
  const std::vector<Edge> edges = {
      {"AB", geodesic_polyline(t.disk_A, t.disk_B, n)},
      {"AC", geodesic_polyline(t.disk_A, t.disk_C, n)},
      {"BC", geodesic_polyline(t.disk_B, t.disk_C, n)},
      {"AD", geodesic_polyline(t.disk_A, t.disk_D, n)},
  };

  if (a.format == "csv") {
    out << "edge,index,x,y\n";
    for (const Edge& e : edges) {
      for (std::size_t i = 0; i < e.points.size(); ++i) {
        out << e.name << ',' << i << ',' << format_real(e.points[i].real()) << ','
            << format_real(e.points[i].imag()) << '\n';
      }
    }
    return kSuccess;
  }

  JsonWriter j;
  begin_envelope(j, "triangle");
  j.key("u");
  write_vec(j, u.vec());
  j.key("v");
  write_vec(j, v.vec());
  j.key("samples_per_edge").value(n);
  j.key("format").value(a.format);
  j.end_object();

  j.key("result").begin_object();
  j.key("phi_u").value(t.phi_u);
  j.key("phi_v").value(t.phi_v);
  j.key("phi_w").value(t.phi_w);
  j.key("angle_A").value(t.angle_A);
  j.key("median_AD").value(t.median_AD);
  j.key("law_of_cosines_residual").value(t.law_of_cosines_residual());
  j.key("disk").begin_object();
  j.key("A");
  write_point(j, t.disk_A);
  j.key("B");
  write_point(j, t.disk_B);
  j.key("C");
  write_point(j, t.disk_C);
  j.key("D");
  write_point(j, t.disk_D);
  j.end_object();
  j.key("polylines").begin_object();
  for (const Edge& e : edges) {
    j.key(e.name).begin_array();
    for (DiskPoint p : e.points) write_point(j, p);
    j.end_array();
  }
  j.end_object();
  j.end_object();
  j.end_object();
  out << j.str();
  return kSuccess;
}

// verify -----------------------------------------------------------------

struct VerifyArgs {
  std::uint64_t seed = 0;
  std::uint64_t trials = 100000;
  std::string regime_u = "uniform_ball";
  std::string regime_v = "uniform_ball";
  double tolerance = 1e-10;
  unsigned workers = 0;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const auto ru = parse_regime(a.regime_u);
  const auto rv = parse_regime(a.regime_v);
  if (!ru) throw UsageError("unknown regime '" + a.regime_u + "'");
  if (!rv) throw UsageError("unknown regime '" + a.regime_v + "'");
  if (a.trials < 1) throw UsageError("--trials must be at least 1");
  if (!(a.tolerance > 0.0) || !std::isfinite(a.tolerance)) {
    throw UsageError("--tolerance must be a positive finite real");
  }

  const SweepSummary s = sweep(a.seed, a.trials, *ru, *rv, a.workers);
  const bool passed = s.max_diff <= a.tolerance;

  // Worker count is an execution detail and is not echoed, so the envelope
  // is identical for any parallel schedule apart from elapsed_seconds.
  JsonWriter j;
  begin_envelope(j, "verify");
  j.key("seed").value(a.seed);
  j.key("trials").value(a.trials);
  j.key("regime_u").value(to_string(*ru));
  j.key("regime_v").value(to_string(*rv));
  j.key("tolerance").value(a.tolerance);
  j.end_object();

  j.key("result").begin_object();
  j.key("trials").value(s.trials);
  j.key("seed").value(s.seed);
  j.key("regime_pair").begin_array();
  j.value(to_string(s.regime_pair.first));
  j.value(to_string(s.regime_pair.second));
  j.end_array();
  j.key("max_diff").value(s.max_diff);
  j.key("mean_diff").value(s.mean_diff);
  j.key("p99_diff").value(s.p99_diff);
  j.key("worst_pair").begin_object();
  j.key("trial_index").value(s.worst_index);
  j.key("u");
  write_vec(j, s.worst_pair.first.vec());
  j.key("v");
  write_vec(j, s.worst_pair.second.vec());
  j.end_object();
  j.key("passed").value(passed);
  j.key("elapsed_seconds").value(s.elapsed.count());
  j.end_object();
  j.end_object();
  out << j.str();

  if (!passed) {
    err << "verification failed: max_diff " << format_real(s.max_diff) << " exceeds tolerance "
        << format_real(a.tolerance) << "\n";
    return kCheckFailed;
  }
  return kSuccess;
}

}  // namespace

std::optional<Vec3> parse_triple(std::string_view text) {
  double values[3];
  std::size_t count = 0;
  while (true) {
    const std::size_t comma = text.find(',');
    const std::string_view part = trim(text.substr(0, comma));
    if (count == 3 || part.empty()) return std::nullopt;
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), x);
    if (ec != std::errc() || ptr != part.data() + part.size() || !std::isfinite(x)) {
      return std::nullopt;
    }
    values[count++] = x;
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (count != 3) return std::nullopt;
  return Vec3{values[0], values[1], values[2]};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bures fidelity between qubit states via matrix, hyperbolic and closed-form routes",
               "bures"};
  app.require_subcommand(1);

  FidelityArgs fa;
  auto* fidelity = app.add_subcommand("fidelity", "Compare all fidelity routes for one pair");
  fidelity->add_option("--u", fa.u, "Bloch vector u as x,y,z")->required();
  fidelity->add_option("--v", fa.v, "Bloch vector v as x,y,z")->required();
  fidelity->add_option("--format", fa.format, "Output format")
      ->check(CLI::IsMember({"json"}))
      ->capture_default_str();

  TriangleArgs ta;
  auto* tri = app.add_subcommand("triangle", "Hyperbolic triangle data in the Poincare disk");
  tri->add_option("--u", ta.u, "Bloch vector u as x,y,z")->required();
  tri->add_option("--v", ta.v, "Bloch vector v as x,y,z")->required();
  tri->add_option("--samples-per-edge", ta.samples_per_edge, "Polyline points per edge")
      ->capture_default_str();
  tri->add_option("--format", ta.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Deterministic Monte Carlo cross-route sweep");
  ver->add_option("--seed", va.seed, "64-bit seed")->capture_default_str();
  ver->add_option("--trials", va.trials, "Number of random pairs")->capture_default_str();
  ver->add_option("--regime-u", va.regime_u, "uniform_ball|near_pure|near_mixed|pure")
      ->capture_default_str();
  ver->add_option("--regime-v", va.regime_v, "uniform_ball|near_pure|near_mixed|pure")
      ->capture_default_str();
  ver->add_option("--tolerance", va.tolerance, "Pass threshold on max_diff")
      ->capture_default_str();
  ver->add_option("--workers", va.workers, "Worker threads, 0 = hardware concurrency")
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*fidelity) return cmd_fidelity(fa, out, err);
    if (*tri) return cmd_triangle(ta, out);
    if (*ver) return cmd_verify(va, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace bures::cli
