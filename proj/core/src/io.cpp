#include "lhm/io.hpp"

#include <cstdio>
#include <ostream>

#include "json.hpp"

namespace lhm::io {

namespace {

using ojson = nlohmann::ordered_json;

ojson complex_json(cplx z) { return ojson::array({z.real(), z.imag()}); }

ojson interval_list(const std::vector<Interval>& ivs) {
  ojson arr = ojson::array();
  for (const Interval& iv : ivs) arr.push_back(ojson::array({iv.lo, iv.hi}));
  return arr;
}

std::vector<Interval> read_intervals(const ojson& arr) {
  std::vector<Interval> out;
  for (const auto& item : arr) out.push_back({item.at(0).get<double>(), item.at(1).get<double>()});
  return out;
}

void write_response_columns(std::ostream& out, const std::optional<MediumResponse>& r,
                            const std::optional<ErrorKind>& error) {
  if (r) {
    out << ',' << format_real(r->eps_r.real()) << ',' << format_real(r->eps_r.imag()) << ','
        << format_real(r->mu_r.real()) << ',' << format_real(r->mu_r.imag()) << ','
        << format_real(r->n.real()) << ',' << format_real(r->n.imag()) << ",\n";
  } else {
    out << ",undefined,undefined,undefined,undefined,undefined,undefined,"
        << (error ? error_kind_name(*error) : std::string_view("undefined")) << '\n';
  }
}

ojson response_json(const std::optional<MediumResponse>& r, const std::optional<ErrorKind>& error) {
  ojson o;
  if (r) {
    o["eps_r"] = complex_json(r->eps_r);
    o["mu_r"] = complex_json(r->mu_r);
    o["n"] = complex_json(r->n);
    o["chi_e"] = complex_json(r->chi_e);
    o["gamma_e"] = complex_json(r->gamma_e);
    o["gamma_m"] = complex_json(r->gamma_m);
    o["error"] = nullptr;
  } else {
    for (const char* k : {"eps_r", "mu_r", "n", "chi_e", "gamma_e", "gamma_m"}) o[k] = nullptr;
    o["error"] = error ? std::string(error_kind_name(*error)) : std::string("undefined");
  }
  return o;
}

}  // namespace

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_curve_csv(std::ostream& out, const ResponseCurve& curve) {
  out << kCurveCsvHeader << '\n';
  for (const CurvePoint& p : curve.points) {
    out << format_real(p.delta1);
    write_response_columns(out, p.response, p.error);
  }
}

void write_curve_json(std::ostream& out, const ResponseCurve& curve) {
  ojson pts = ojson::array();
  for (const CurvePoint& p : curve.points) {
    ojson o;
    o["delta1_over_gamma"] = p.delta1;
    o.update(response_json(p.response, p.error));
    pts.push_back(std::move(o));
  }
  ojson doc;
  doc["points"] = std::move(pts);
  out << doc.dump(2) << '\n';
}

void write_features_json(std::ostream& out, const FeatureReport& report) {
  ojson doc;
  doc["tol_abs"] = report.tol_abs;
  if (report.abs_peak) {
    doc["abs_peak"] = ojson{{"delta1_over_gamma", report.abs_peak->delta1}, {"im_n", report.abs_peak->im_n}};
  } else {
    doc["abs_peak"] = nullptr;
  }
  doc["zero_abs_intervals"] = interval_list(report.zero_abs_intervals);
  ojson gains = ojson::array();
  for (const GainInterval& g : report.gain_intervals) {
    gains.push_back(ojson{{"lo", g.lo}, {"hi", g.hi}, {"min_im_n", g.minimum}, {"delta1_at_min", g.delta1_at_min}});
  }
  doc["gain_intervals"] = std::move(gains);
  doc["neg_eps_intervals"] = interval_list(report.neg_eps_intervals);
  doc["neg_mu_intervals"] = interval_list(report.neg_mu_intervals);
  doc["neg_re_n_intervals"] = interval_list(report.neg_re_n_intervals);
  out << doc.dump(2) << '\n';
}

void write_features_csv(std::ostream& out, const FeatureReport& report) {
  out << "feature,lo_over_gamma,hi_over_gamma,value\n";
  out << "tol_abs,,," << format_real(report.tol_abs) << '\n';
  if (report.abs_peak) {
    out << "abs_peak," << format_real(report.abs_peak->delta1) << ',' << format_real(report.abs_peak->delta1)
        << ',' << format_real(report.abs_peak->im_n) << '\n';
  }
  auto rows = [&](const char* name, const std::vector<Interval>& ivs) {
    for (const Interval& iv : ivs) out << name << ',' << format_real(iv.lo) << ',' << format_real(iv.hi) << ",\n";
  };
  rows("zero_abs", report.zero_abs_intervals);
  for (const GainInterval& g : report.gain_intervals) {
    out << "gain," << format_real(g.lo) << ',' << format_real(g.hi) << ',' << format_real(g.minimum) << '\n';
  }
  rows("neg_eps", report.neg_eps_intervals);
  rows("neg_mu", report.neg_mu_intervals);
  rows("neg_re_n", report.neg_re_n_intervals);
}

FeatureReport read_features_json(std::string_view text) {
  try {
    const ojson doc = ojson::parse(text);
    FeatureReport r;
    r.tol_abs = doc.at("tol_abs").get<double>();
    if (!doc.at("abs_peak").is_null()) {
      const auto& p = doc.at("abs_peak");
      r.abs_peak = AbsorptionPeak{p.at("delta1_over_gamma").get<double>(), p.at("im_n").get<double>()};
    }
    r.zero_abs_intervals = read_intervals(doc.at("zero_abs_intervals"));
    for (const auto& g : doc.at("gain_intervals")) {
      r.gain_intervals.push_back({g.at("lo").get<double>(), g.at("hi").get<double>(), g.at("min_im_n").get<double>(),
                                  g.at("delta1_at_min").get<double>()});
    }
    r.neg_eps_intervals = read_intervals(doc.at("neg_eps_intervals"));
    r.neg_mu_intervals = read_intervals(doc.at("neg_mu_intervals"));
    r.neg_re_n_intervals = read_intervals(doc.at("neg_re_n_intervals"));
    return r;
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorKind::ParseError, std::string("feature report JSON: ") + e.what());
  }
}

void write_steady_csv(std::ostream& out, const SteadyStateResult& result, double delta1) {
  out << "quantity,value\n";
  out << "method," << solve_method_name(result.method) << '\n';
  out << "delta1_over_gamma," << format_real(delta1) << '\n';
  out << "residual," << format_real(result.residual) << '\n';
  out << "converged," << (result.converged ? "true" : "false") << '\n';
  out << "row,col,re,im\n";
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      const cplx z = result.rho.at(i, j);
      out << i << ',' << j << ',' << format_real(z.real()) << ',' << format_real(z.imag()) << '\n';
    }
  }
}

void write_steady_json(std::ostream& out, const SteadyStateResult& result, double delta1) {
  ojson rho = ojson::array();
  for (int i = 1; i <= 4; ++i) {
    ojson row = ojson::array();
    for (int j = 1; j <= 4; ++j) row.push_back(complex_json(result.rho.at(i, j)));
    rho.push_back(std::move(row));
  }
  ojson doc;
  doc["method"] = std::string(solve_method_name(result.method));
  doc["delta1_over_gamma"] = delta1;
  doc["residual"] = result.residual;
  doc["converged"] = result.converged;
  doc["rho"] = std::move(rho);
  out << doc.dump(2) << '\n';
}

void write_phase_scan_csv(std::ostream& out, const std::vector<PhasePoint>& points) {
  out << kPhaseCsvHeader << '\n';
  for (const PhasePoint& p : points) {
    out << format_real(p.phi3);
    write_response_columns(out, p.response, p.error);
  }
}

void write_phase_scan_json(std::ostream& out, const std::vector<PhasePoint>& points, double delta1) {
  ojson pts = ojson::array();
  for (const PhasePoint& p : points) {
    ojson o;
    o["phi3_rad"] = p.phi3;
    o.update(response_json(p.response, p.error));
    pts.push_back(std::move(o));
  }
  ojson doc;
  doc["delta1_over_gamma"] = delta1;
  doc["points"] = std::move(pts);
  out << doc.dump(2) << '\n';
}

void write_calibration_csv(std::ostream& out, const CalibrationResult& result) {
  out << "d21_C_m,mu42_J_per_T,score\n";
  out << format_real(result.d21) << ',' << format_real(result.mu42) << ',' << format_real(result.score) << '\n';
}

void write_calibration_json(std::ostream& out, const CalibrationResult& result) {
  const LossBreakdown& b = result.breakdown;
  ojson doc;
  doc["d21_C_m"] = result.d21;
  doc["mu42_J_per_T"] = result.mu42;
  doc["score"] = result.score;
  doc["loss"] = ojson{{"peak_value", b.peak_value},
                      {"peak_location", b.peak_location},
                      {"neg_eps_band", b.neg_eps_band},
                      {"neg_mu_band", b.neg_mu_band},
                      {"zero_abs_coverage", b.zero_abs_coverage},
                      {"zero_abs_residual", b.zero_abs_residual},
                      {"gain_coverage", b.gain_coverage},
                      {"gain_depth", b.gain_depth},
                      {"flank_structure", b.flank_structure}};
  doc["evaluations"] = result.evaluations;
  doc["trace"] = result.trace;
  out << doc.dump(2) << '\n';
}

}  // namespace lhm::io
