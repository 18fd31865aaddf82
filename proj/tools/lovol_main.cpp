#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lovol/catalog.hpp"
#include "lovol/chart.hpp"
#include "lovol/coefficients.hpp"
#include "lovol/curvature.hpp"
#include "lovol/errors.hpp"
#include "lovol/invariants.hpp"
#include "lovol/json_writer.hpp"
#include "lovol/spectral.hpp"
#include "lovol/volumes.hpp"

namespace {

using namespace lovol;

constexpr const char* kSchema = "lovol/1";

struct ManifoldFlags {
  std::string manifold;     // sphere | torus | product
  std::string metric_file;  // grid-metric JSON path
  int dim = 0;
  double radius = 1.0;
  std::vector<double> sides;
  int resolution = 0;  // 0 = catalog default; >0 forces full quadrature
};

struct BuiltManifold {
  std::string name;
  Chart chart;
  std::shared_ptr<const MetricSource> source;
};

void add_manifold_flags(CLI::App* cmd, ManifoldFlags& mf) {
  cmd->add_option("--manifold", mf.manifold, "catalog manifold: sphere | torus | product")
      ->check(CLI::IsMember({"sphere", "torus", "product"}));
  cmd->add_option("--metric-file", mf.metric_file, "grid-metric JSON file");
  cmd->add_option("--dim", mf.dim, "sphere dimension n");
  cmd->add_option("--radius", mf.radius, "sphere radius (default 1)");
  cmd->add_option("--sides", mf.sides, "torus side lengths, comma separated")->delimiter(',');
  cmd->add_option("--resolution", mf.resolution,
                  "per-axis node count override (>= 4); forces full quadrature");
}

BuiltManifold build_manifold(const ManifoldFlags& mf) {
  const bool has_catalog = !mf.manifold.empty();
  const bool has_file = !mf.metric_file.empty();
  if (has_catalog == has_file)
    throw BadParameterError("exactly one manifold source is required: --manifold or --metric-file");
  if (mf.resolution != 0 && mf.resolution < 4)
    throw BadParameterError("--resolution must be >= 4");

  if (has_file) {
    if (mf.resolution)
      throw BadParameterError("--resolution does not apply to grid metrics; resample instead");
    GridMetric grid = read_grid_metric(mf.metric_file);
    BuiltManifold b;
    b.name = mf.metric_file;
    b.chart = grid.chart;
    b.source = std::make_shared<GridMetricSource>(std::move(grid));
    return b;
  }

  CatalogManifold cm;
  if (mf.manifold == "sphere") {
    if (mf.dim < 1) throw BadParameterError("sphere needs --dim");
    cm = sphere(mf.dim, mf.radius, mf.resolution);
  } else if (mf.manifold == "torus") {
    if (mf.sides.empty()) throw BadParameterError("torus needs --sides");
    cm = flat_torus(mf.sides, mf.resolution ? mf.resolution : 16);
  } else {
    // product = S^2(radius) x T^2(sides)
    if (mf.sides.size() != 2)
      throw BadParameterError("product is S^2(--radius) x T^2 and needs exactly two --sides");
    cm = product({sphere(2, mf.radius, mf.resolution),
                  flat_torus(mf.sides, mf.resolution ? mf.resolution : 16)});
  }
  return {cm.name, cm.chart, cm.source};
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw BadParameterError("cannot open " + out_path + " for writing");
  f << text;
  if (!f) throw BadParameterError("failed writing " + out_path);
}

void header_fields(JsonWriter& w, const std::string& command, const BuiltManifold& b,
                   int stencil_order) {
  w.field("schema", kSchema).comma();
  w.field("command", command).comma();
  w.field("manifold", b.name).comma();
  w.field("dim", b.chart.dim).comma();
  w.key("resolution").begin_array();
  for (int a = 0; a < b.chart.dim; ++a) {
    if (a) w.comma();
    w.number(std::int64_t(b.chart.resolution[a]));
  }
  w.end_array().comma();
  w.key("periodic").begin_array();
  for (int a = 0; a < b.chart.dim; ++a) {
    if (a) w.comma();
    w.boolean(b.chart.periodic[std::size_t(a)]);
  }
  w.end_array().comma();
  w.field("stencil_order", stencil_order);
}

void write_volume_report(JsonWriter& w, const VolumeReport& rep) {
  w.begin_object();
  w.field("n", rep.n).comma();
  w.field("k", rep.k).comma();
  w.field("parity_zero", rep.parity_zero).comma();
  w.field("coefficient", rep.coefficient).comma();
  w.field("integral_alpha", rep.integral_alpha).comma();
  w.field("volume_k", rep.volume_k).comma();
  w.field("error_estimate", rep.error_estimate).comma();
  w.field("method", to_string(rep.method)).comma();
  w.field("units", rep.units).comma();
  w.field("nodes_used", rep.nodes_used);
  if (!rep.note.empty()) w.comma().field("note", rep.note);
  w.end_object();
}

// --- coeffs ---------------------------------------------------------------

struct CoeffsFlags {
  int n = 0;
  int k = 0;
  std::string out;
};

void run_coeffs(const CoeffsFlags& f) {
  const CoefficientSet cs = nu(f.n, f.k);
  JsonWriter w;
  w.begin_object();
  w.field("schema", kSchema).comma();
  w.field("command", "coeffs").comma();
  w.field("n", cs.n).comma();
  w.field("k", cs.k).comma();
  w.field("coefficient", cs.coefficient).comma();
  w.field("vanishes", cs.vanishes).comma();
  w.field("length_scale", cs.length_scale);
  w.end_object();
  emit(w.take() + "\n", f.out);
}

// --- volumes / report -----------------------------------------------------

struct VolumesFlags {
  ManifoldFlags mf;
  int k = 0;  // 0 = all k
  int stencil_order = 4;
  std::string out;
  std::string format = "json";
};

void run_volumes(const VolumesFlags& f, bool all_k_with_coeffs) {
  if (f.format != "json")
    throw BadParameterError("volume reports are JSON only; CSV covers spectral tables and "
                            "curvature field exports");
  BuiltManifold b = build_manifold(f.mf);

  VolumeOptions vo;
  vo.stencil.order = f.stencil_order;
  vo.force_quadrature = f.mf.resolution > 0;

  std::vector<VolumeReport> reports;
  if (f.k > 0 && !all_k_with_coeffs)
    reports.push_back(lower_volume(*b.source, b.chart, f.k, vo));
  else
    reports = full_report(*b.source, b.chart, vo);

  JsonWriter w;
  w.begin_object();
  header_fields(w, all_k_with_coeffs ? "report" : "volumes", b, f.stencil_order);
  if (b.chart.exact_volume) w.comma().field("exact_volume", *b.chart.exact_volume);
  if (all_k_with_coeffs) {
    w.comma().field("length_scale", length_scale(b.chart.dim));
    w.comma().key("coefficients").begin_array();
    for (int k = 1; k <= b.chart.dim; ++k) {
      const CoefficientSet cs = nu(b.chart.dim, k);
      if (k > 1) w.comma();
      w.begin_object();
      w.field("k", cs.k).comma();
      w.field("coefficient", cs.coefficient).comma();
      w.field("vanishes", cs.vanishes);
      w.end_object();
    }
    w.end_array();
  }
  w.comma().key("reports").begin_array();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i) w.comma();
    write_volume_report(w, reports[i]);
  }
  w.end_array();
  w.end_object();
  emit(w.take() + "\n", f.out);
}

// --- curvature ------------------------------------------------------------

struct CurvatureFlags {
  ManifoldFlags mf;
  int stencil_order = 4;
  std::string export_path;
  std::string out;
  std::string format = "json";
};

void run_curvature(const CurvatureFlags& f) {
  BuiltManifold b = build_manifold(f.mf);

  if (!f.export_path.empty()) {
    if (const auto* gs = dynamic_cast<const GridMetricSource*>(b.source.get())) {
      write_grid_metric(gs->grid(), f.export_path);
    } else {
      write_grid_metric(sample(*b.source, b.chart), f.export_path);
    }
  }

  if (b.chart.dim > 3) {
    if (f.export_path.empty())
      throw BadParameterError("curvature field export is limited to dim <= 3; use --export to "
                              "write the sampled metric instead");
    JsonWriter w;
    w.begin_object();
    header_fields(w, "curvature", b, f.stencil_order);
    w.comma().field("exported", f.export_path);
    w.comma().field("nodes", b.chart.node_count());
    w.end_object();
    emit(w.take() + "\n", f.out);
    return;
  }

  StencilOptions so;
  so.order = f.stencil_order;
  CurvatureEngine engine(*b.source, b.chart, so);
  const std::int64_t count = b.chart.node_count();
  std::vector<double> kappa(count), ricci2(count), riem2(count), lapk(count), dens(count);
  for (std::int64_t i = 0; i < count; ++i) {
    const CurvaturePoint p = engine.curvature_point(b.chart.node(i));
    kappa[std::size_t(i)] = p.kappa;
    ricci2[std::size_t(i)] = p.ricci_norm2;
    riem2[std::size_t(i)] = p.riemann_norm2;
    lapk[std::size_t(i)] = p.lap_kappa;
    dens[std::size_t(i)] = p.density;
  }

  if (f.format == "csv") {
    std::string text;
    for (int a = 0; a < b.chart.dim; ++a) text += "x" + std::to_string(a) + ",";
    text += "kappa,ricci_norm2,riemann_norm2,lap_kappa,density\n";
    for (std::int64_t i = 0; i < count; ++i) {
      const Vec x = b.chart.node(i);
      for (int a = 0; a < b.chart.dim; ++a) text += JsonWriter::format_double(x[a]) + ",";
      text += JsonWriter::format_double(kappa[std::size_t(i)]) + "," +
              JsonWriter::format_double(ricci2[std::size_t(i)]) + "," +
              JsonWriter::format_double(riem2[std::size_t(i)]) + "," +
              JsonWriter::format_double(lapk[std::size_t(i)]) + "," +
              JsonWriter::format_double(dens[std::size_t(i)]) + "\n";
    }
    emit(text, f.out);
    return;
  }

  JsonWriter w;
  w.begin_object();
  header_fields(w, "curvature", b, f.stencil_order);
  w.comma().key("lower").number_array(std::vector<double>(b.chart.lower.begin(),
                                                          b.chart.lower.end()));
  w.comma().key("upper").number_array(std::vector<double>(b.chart.upper.begin(),
                                                          b.chart.upper.end()));
  if (!f.export_path.empty()) w.comma().field("exported", f.export_path);
  w.comma().field("nodes", count);
  w.comma().key("fields").begin_object();
  w.key("kappa").number_array(kappa).comma();
  w.key("ricci_norm2").number_array(ricci2).comma();
  w.key("riemann_norm2").number_array(riem2).comma();
  w.key("lap_kappa").number_array(lapk).comma();
  w.key("density").number_array(dens);
  w.end_object();
  w.end_object();
  emit(w.take() + "\n", f.out);
}

// --- spectral-check -------------------------------------------------------

struct SpectralFlags {
  std::vector<double> sides;
  int cutoff = 0;  // 0 = auto from the smallest probed time
  std::string out;
  std::string format = "json";
};

void run_spectral(const SpectralFlags& f) {
  if (f.sides.empty()) throw BadParameterError("spectral-check needs --sides");
  const int n = int(f.sides.size());
  std::vector<double> times = {1e-3, 3.1622776601683794e-3, 1e-2, 3.1622776601683791e-2,
                               1e-1, 3.1622776601683794e-1, 1e0};

  int cutoff = f.cutoff;
  if (cutoff == 0) cutoff = std::max(required_cutoff(f.sides, times.front()), 64);
  // An explicit cutoff limits how small a time the table can probe.
  std::erase_if(times, [&](double t) { return required_cutoff(f.sides, t) > cutoff; });
  if (times.empty())
    throw CutoffTooSmallError("cutoff " + std::to_string(cutoff) +
                                  " cannot support any probed heat-trace time",
                              required_cutoff(f.sides, 1.0));

  // Scalar trace for the heat table; spinor-rank multiplicity for Dixmier.
  TorusSpectrum spec = torus_spectrum(f.sides, cutoff, 1);
  double vol = 1.0;
  for (double L : f.sides) vol *= L;

  std::vector<double> theta(times.size()), normalized(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    theta[i] = heat_trace(spec, times[i]);
    normalized[i] = theta[i] * std::pow(4.0 * std::numbers::pi * times[i], 0.5 * n) / vol;
  }

  TorusSpectrum spinor = spec;
  spinor.multiplicity = 1 << (n / 2);
  const DixmierFit fit = dixmier_quotient(spinor);
  const double expected = dixmier_expected(spinor);

  if (f.format == "csv") {
    std::string text = "# heat_trace\nt,theta,normalized\n";
    for (std::size_t i = 0; i < times.size(); ++i)
      text += JsonWriter::format_double(times[i]) + "," + JsonWriter::format_double(theta[i]) +
              "," + JsonWriter::format_double(normalized[i]) + "\n";
    text += "# dixmier_sigma\nn,log_n,sigma\n";
    for (std::size_t i = 0; i < fit.ladder.size(); ++i)
      text += std::to_string(fit.ladder[i]) + "," +
              JsonWriter::format_double(std::log(double(fit.ladder[i]))) + "," +
              JsonWriter::format_double(fit.sigma[i]) + "\n";
    text += "# dixmier_fit\nslope,expected,relative_error\n";
    text += JsonWriter::format_double(fit.slope) + "," + JsonWriter::format_double(expected) +
            "," + JsonWriter::format_double(fit.slope / expected - 1.0) + "\n";
    emit(text, f.out);
    return;
  }

  JsonWriter w;
  w.begin_object();
  w.field("schema", kSchema).comma();
  w.field("command", "spectral-check").comma();
  w.key("sides").number_array(f.sides);
  w.comma().field("cutoff", cutoff);
  w.comma().field("eigenvalues", std::int64_t(spec.eigenvalues.size()));
  w.comma().field("heat_multiplicity", 1);
  w.comma().field("spinor_multiplicity", spinor.multiplicity);
  w.comma().key("heat").begin_array();
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (i) w.comma();
    w.begin_object();
    w.field("t", times[i]).comma();
    w.field("theta", theta[i]).comma();
    w.field("normalized", normalized[i]);
    w.end_object();
  }
  w.end_array();
  w.comma().key("dixmier").begin_object();
  w.field("slope", fit.slope).comma();
  w.field("intercept", fit.intercept).comma();
  w.field("expected", expected).comma();
  w.field("relative_error", fit.slope / expected - 1.0).comma();
  w.key("ladder").begin_array();
  for (std::size_t i = 0; i < fit.ladder.size(); ++i) {
    if (i) w.comma();
    w.begin_object();
    w.field("n", fit.ladder[i]).comma();
    w.field("log_n", std::log(double(fit.ladder[i]))).comma();
    w.field("sigma", fit.sigma[i]);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  w.end_object();
  emit(w.take() + "\n", f.out);
}

void emit_error_json(const std::string& type, const std::string& message,
                     const int* required_cutoff) {
  JsonWriter w;
  w.begin_object();
  w.field("schema", kSchema).comma();
  w.key("error").begin_object();
  w.field("type", type).comma();
  w.field("message", message);
  if (required_cutoff) w.comma().field("required_cutoff", *required_cutoff);
  w.end_object();
  w.end_object();
  const std::string text = w.take() + "\n";
  std::fwrite(text.data(), 1, text.size(), stderr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lovol: lower-dimensional volumes of compact Riemannian manifolds"};
  app.require_subcommand(1);

  CoeffsFlags cf;
  CLI::App* coeffs = app.add_subcommand("coeffs", "dimension constants nu_{n,k} and parity");
  coeffs->add_option("--n,--dim", cf.n, "manifold dimension")->required();
  coeffs->add_option("--k", cf.k, "volume order")->required();
  coeffs->add_option("--out", cf.out, "output file (default stdout)");

  VolumesFlags vf;
  CLI::App* volumes = app.add_subcommand("volumes", "lower-dimensional volumes Vol^(k)");
  add_manifold_flags(volumes, vf.mf);
  volumes->add_option("--k", vf.k, "single order k (default: all k = 1..n)");
  volumes->add_option("--stencil-order", vf.stencil_order, "finite-difference order")
      ->check(CLI::IsMember({2, 4}));
  volumes->add_option("--out", vf.out, "output file (default stdout)");
  volumes->add_option("--format", vf.format, "output format")->check(CLI::IsMember({"json"}));
  volumes->callback([&] { run_volumes(vf, false); });

  VolumesFlags rf;
  CLI::App* report = app.add_subcommand("report", "full report: coefficients plus all Vol^(k)");
  add_manifold_flags(report, rf.mf);
  report->add_option("--stencil-order", rf.stencil_order, "finite-difference order")
      ->check(CLI::IsMember({2, 4}));
  report->add_option("--out", rf.out, "output file (default stdout)");
  report->add_option("--format", rf.format, "output format")->check(CLI::IsMember({"json"}));
  report->callback([&] { run_volumes(rf, true); });

  CurvatureFlags uf;
  CLI::App* curv = app.add_subcommand("curvature", "pointwise curvature fields, metric export");
  add_manifold_flags(curv, uf.mf);
  curv->add_option("--stencil-order", uf.stencil_order, "finite-difference order")
      ->check(CLI::IsMember({2, 4}));
  curv->add_option("--export", uf.export_path, "write the sampled grid metric to this file");
  curv->add_option("--out", uf.out, "output file (default stdout)");
  curv->add_option("--format", uf.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  curv->callback([&] { run_curvature(uf); });

  SpectralFlags sf;
  CLI::App* spectral = app.add_subcommand("spectral-check", "flat-torus trace identities");
  spectral->add_option("--sides", sf.sides, "torus side lengths, comma separated")
      ->delimiter(',')
      ->required();
  spectral->add_option("--cutoff", sf.cutoff, "frequency box cutoff (default: auto)");
  spectral->add_option("--out", sf.out, "output file (default stdout)");
  spectral->add_option("--format", sf.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  spectral->callback([&] { run_spectral(sf); });

  coeffs->callback([&] { run_coeffs(cf); });

  try {
    app.parse(argc, argv);
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error_json("BadParameter", e.what(), nullptr);
    return 1;
  } catch (const Error& e) {
    const int* req = nullptr;
    int value = 0;
    if (const auto* c = dynamic_cast<const CutoffTooSmallError*>(&e)) {
      value = c->required_cutoff;
      req = &value;
    }
    emit_error_json(e.type(), e.what(), req);
    return e.kind() == ErrorKind::input ? 1 : 2;
  } catch (const std::exception& e) {
    emit_error_json("Internal", e.what(), nullptr);
    return 2;
  }
}
