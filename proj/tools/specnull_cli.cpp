// Command-line frontend: emits autocorrelation, spectrum, LFSW, count,
// check, rate, length-matching and intersection data as CSV or JSON.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "specnull/asymptotic.hpp"
#include "specnull/autocorrelation.hpp"
#include "specnull/clt.hpp"
#include "specnull/common.hpp"
#include "specnull/dc_baseline.hpp"
#include "specnull/exact_oracle.hpp"
#include "specnull/spectral.hpp"

namespace {

using specnull::Autocorrelation;
using specnull::Method;
using Cell = std::variant<long long, double, std::string>;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitResource = 4;

// Columnar result document shared by the CSV and JSON emitters.
struct Document {
  nlohmann::json meta = nlohmann::json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

void write_csv(const Document& doc, std::ostream& os) {
  for (std::size_t c = 0; c < doc.columns.size(); ++c) {
    if (c) os << ',';
    os << doc.columns[c];
  }
  os << '\n';
  for (const auto& row : doc.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ',';
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              os << format_double(v);
            } else {
              os << v;
            }
          },
          row[c]);
    }
    os << '\n';
  }
}

void write_json(const Document& doc, std::ostream& os) {
  nlohmann::json j;
  j["meta"] = doc.meta;
  nlohmann::json data = nlohmann::json::object();
  for (std::size_t c = 0; c < doc.columns.size(); ++c) {
    nlohmann::json col = nlohmann::json::array();
    for (const auto& row : doc.rows) {
      std::visit([&](const auto& v) { col.push_back(v); }, row[c]);
    }
    data[doc.columns[c]] = std::move(col);
  }
  j["data"] = std::move(data);
  os << j.dump(2) << '\n';
}

struct Options {
  std::string format = "csv";
  std::string out;
  bool expensive = false;
  int grid_points = 4096;
};

void emit(const Document& doc, const Options& opt) {
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!opt.out.empty()) {
    file.open(opt.out);
    if (!file) throw specnull::domain_error("cannot open output file: " + opt.out);
    os = &file;
  }
  if (opt.format == "json") {
    write_json(doc, *os);
  } else {
    write_csv(doc, *os);
  }
}

Autocorrelation autocorrelation_by_method(Method m, int n, bool expensive) {
  switch (m) {
    case Method::Exact:
      return specnull::exact_autocorrelation(n, expensive);
    case Method::Clt:
      return specnull::clt_autocorrelation(n);
    case Method::CltCorrected:
      return specnull::corrected_clt_autocorrelation(n);
    case Method::Cubic:
      return specnull::cubic_autocorrelation(n);
    case Method::CubicCorrected:
      return specnull::corrected_cubic_autocorrelation(n);
    case Method::PriorArt:
      return specnull::prior_art_autocorrelation(n);
    case Method::Dc1:
      return specnull::autocorrelation_dc(n);
  }
  throw specnull::domain_error("unhandled method");
}

nlohmann::json base_meta(const std::string& command, const Options& opt) {
  nlohmann::json meta;
  meta["command"] = command;
  meta["format"] = opt.format;
  meta["expensive"] = opt.expensive;
  return meta;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral analysis of dc- and dc^2-balanced block codes"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", opt.out, "Output path (default: stdout)");
  app.add_flag("--expensive", opt.expensive, "Allow long-running exact computations (n > 128)");

  int n = 0;
  int n1 = 0;
  std::string method = "cubic-corrected";
  std::string ref_method;
  double rate = 0.0;

  auto* autocorr = app.add_subcommand("autocorr", "Autocorrelation rho(i), i = 1..n-1");
  autocorr->add_option("--n", n, "Codeword length")->required();
  autocorr->add_option("--method", method, "Curve method")->capture_default_str();
  autocorr->add_option("--ref-method", ref_method,
                       "Also emit a reference curve and |difference| columns");

  auto* spectrum = app.add_subcommand("spectrum", "Power spectral density H(omega)");
  spectrum->add_option("--n", n, "Codeword length")->required();
  spectrum->add_option("--method", method, "Curve method")->capture_default_str();
  spectrum->add_option("--ref-method", ref_method, "Also emit a reference curve and dB ratio");
  spectrum->add_option("--grid-points", opt.grid_points, "Frequency grid size on (0, pi]")
      ->capture_default_str();

  auto* lfsw = app.add_subcommand("lfsw", "Low-frequency spectral weight chi");
  lfsw->add_option("--n", n, "Codeword length")->required();
  lfsw->add_option("--method", method, "Curve method")->capture_default_str();

  auto* count = app.add_subcommand("count", "Codebook sizes, exact and approximate");
  count->add_option("--n", n, "dc^2-balanced codeword length");
  count->add_option("--n1", n1, "dc-balanced codeword length");

  auto* checks = app.add_subcommand("checks", "Null-condition residuals and correction fit");
  checks->add_option("--n", n, "Codeword length")->required();
  checks->add_option("--method", method, "Curve method")->capture_default_str();

  auto* rates = app.add_subcommand("rates", "Maximum information rates");
  rates->add_option("--n", n, "dc^2-balanced codeword length");
  rates->add_option("--n1", n1, "dc-balanced codeword length");

  auto* match = app.add_subcommand("match", "Equal-rate code lengths (n1, n)");
  match->add_option("--rate", rate, "Rate target in (0, 1)")->required();

  auto* intersect = app.add_subcommand("intersect", "Spectrum crossing of matched code pair");
  intersect->add_option("--rate", rate, "Rate target in (0, 1)");
  intersect->add_option("--n1", n1, "dc-balanced codeword length");
  intersect->add_option("--n", n, "dc^2-balanced codeword length");

  auto* table1 = app.add_subcommand("table1", "LFSW chi' (and exact chi-hat) for n = 32..256");
  auto* table2 = app.add_subcommand("table2", "Matched lengths for rates 0.90..0.98");

  // let the global --format/--out/--expensive options appear after the
  // subcommand name as well
  for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    Document doc;

    if (autocorr->parsed()) {
      const Method m = specnull::method_from_string(method);
      const Autocorrelation rho = autocorrelation_by_method(m, n, opt.expensive);
      doc.meta = base_meta("autocorr", opt);
      doc.meta["n"] = n;
      doc.meta["method"] = method;
      doc.columns = {"i", "i_over_n", "rho"};
      std::optional<Autocorrelation> ref;
      if (!ref_method.empty()) {
        ref = autocorrelation_by_method(specnull::method_from_string(ref_method), n,
                                        opt.expensive);
        doc.meta["ref_method"] = ref_method;
        doc.columns.push_back("rho_ref");
        doc.columns.push_back("abs_diff");
      }
      for (int i = 1; i <= rho.lags(); ++i) {
        std::vector<Cell> row{static_cast<long long>(i), static_cast<double>(i) / n, rho.at(i)};
        if (ref) {
          row.emplace_back(ref->at(i));
          row.emplace_back(std::abs(rho.at(i) - ref->at(i)));
        }
        doc.add_row(std::move(row));
      }
    } else if (spectrum->parsed()) {
      const Method m = specnull::method_from_string(method);
      const Eigen::ArrayXd grid = specnull::default_grid(opt.grid_points);
      const Autocorrelation rho = autocorrelation_by_method(m, n, opt.expensive);
      const specnull::SpectrumCurve curve = specnull::spectrum_from_autocorrelation(rho, grid);
      doc.meta = base_meta("spectrum", opt);
      doc.meta["n"] = n;
      doc.meta["method"] = method;
      doc.meta["grid_points"] = opt.grid_points;
      doc.meta["has_nonpositive"] = curve.has_nonpositive;
      doc.columns = {"omega", "H", "H_db"};
      std::optional<specnull::RatioCurve> ratio;
      std::optional<specnull::SpectrumCurve> ref;
      if (!ref_method.empty()) {
        const Autocorrelation rho_ref = autocorrelation_by_method(
            specnull::method_from_string(ref_method), n, opt.expensive);
        ref = specnull::spectrum_from_autocorrelation(rho_ref, grid);
        ratio = specnull::db_ratio(curve, *ref);
        doc.meta["ref_method"] = ref_method;
        doc.columns.push_back("H_ref");
        doc.columns.push_back("db_ratio");
      }
      for (Eigen::Index k = 0; k < grid.size(); ++k) {
        const double h = curve.values[k];
        const double hdb = h > 1e-300 ? 10.0 * std::log10(h)
                                      : -std::numeric_limits<double>::infinity();
        std::vector<Cell> row{grid[k], h, hdb};
        if (ratio) {
          row.emplace_back(ref->values[k]);
          row.emplace_back(ratio->db[k]);
        }
        doc.add_row(std::move(row));
      }
    } else if (lfsw->parsed()) {
      const Method m = specnull::method_from_string(method);
      doc.meta = base_meta("lfsw", opt);
      doc.meta["n"] = n;
      doc.meta["method"] = method;
      if (m == Method::Dc1) {
        doc.columns = {"n1", "chi"};
        doc.add_row({static_cast<long long>(n), specnull::lfsw_dc(n)});
      } else if (m == Method::CubicCorrected) {
        const auto [sum, asym] = specnull::lfsw_dc2(n);
        doc.columns = {"n", "chi", "chi_asymptotic"};
        doc.add_row({static_cast<long long>(n), sum, asym});
      } else {
        const Autocorrelation rho = autocorrelation_by_method(m, n, opt.expensive);
        doc.columns = {"n", "chi"};
        doc.add_row({static_cast<long long>(n), specnull::lfsw_from_autocorrelation(rho)});
      }
    } else if (count->parsed()) {
      if ((n == 0) == (n1 == 0)) {
        throw specnull::domain_error("count needs exactly one of --n (dc^2) or --n1 (dc)");
      }
      doc.meta = base_meta("count", opt);
      if (n != 0) {
        doc.meta["n"] = n;
        doc.columns = {"n", "exact", "approx", "approx_refined"};
        doc.add_row({static_cast<long long>(n), specnull::count_dc2(n).get_str(),
                     specnull::approx_count_dc2(n, false), specnull::approx_count_dc2(n, true)});
      } else {
        doc.meta["n1"] = n1;
        const specnull::DcCount c = specnull::count_dc(n1);
        doc.columns = {"n1", "exact", "asymptotic"};
        doc.add_row({static_cast<long long>(n1), c.exact.get_str(), c.asymptotic});
      }
    } else if (checks->parsed()) {
      const Method m = specnull::method_from_string(method);
      const Autocorrelation rho = autocorrelation_by_method(m, n, opt.expensive);
      const specnull::NullChecks ck = specnull::compute_checks(rho);
      const specnull::CorrectionFit fit = specnull::correction_coefficients(n, ck.a0, ck.a1);
      doc.meta = base_meta("checks", opt);
      doc.meta["n"] = n;
      doc.meta["method"] = method;
      doc.columns = {"n", "method", "a0", "a1", "a", "b"};
      doc.add_row({static_cast<long long>(n), method, ck.a0, ck.a1, fit.a, fit.b});
    } else if (rates->parsed()) {
      if (n == 0 && n1 == 0) {
        throw specnull::domain_error("rates needs --n and/or --n1");
      }
      doc.meta = base_meta("rates", opt);
      doc.columns = {"order", "length", "rate"};
      if (n1 != 0) doc.add_row({std::string("dc"), static_cast<long long>(n1), specnull::rate_dc(n1)});
      if (n != 0) doc.add_row({std::string("dc2"), static_cast<long long>(n), specnull::rate_dc2(n)});
    } else if (match->parsed()) {
      const auto [m1, m2] = specnull::match_lengths(rate);
      doc.meta = base_meta("match", opt);
      doc.meta["rate"] = rate;
      doc.columns = {"rate", "n1", "n"};
      doc.add_row({rate, static_cast<long long>(m1), static_cast<long long>(m2)});
    } else if (intersect->parsed()) {
      specnull::DesignPoint dp;
      if (rate > 0.0) {
        dp = specnull::design_point(rate);
      } else if (n1 != 0 && n != 0) {
        const Autocorrelation rho = specnull::corrected_cubic_autocorrelation(n);
        const specnull::Intersection cross = specnull::find_intersection(n1, rho);
        dp = specnull::DesignPoint{0.0, n1, n, cross.omega_cross, cross.level_db};
      } else {
        throw specnull::domain_error("intersect needs --rate or both --n1 and --n");
      }
      doc.meta = base_meta("intersect", opt);
      doc.columns = {"n1", "n", "omega_cross", "level_db"};
      doc.add_row({static_cast<long long>(dp.n1), static_cast<long long>(dp.n), dp.omega_cross,
                   dp.level_db});
    } else if (table1->parsed()) {
      doc.meta = base_meta("table1", opt);
      doc.columns = {"n", "chi_prime", "chi_hat"};
      for (int len : {32, 64, 128, 256}) {
        const auto [chi, asym] = specnull::lfsw_dc2(len);
        (void)asym;
        if (len <= 128 || opt.expensive) {
          const Autocorrelation ex = specnull::exact_autocorrelation(len, opt.expensive);
          doc.add_row({static_cast<long long>(len), chi,
                       specnull::lfsw_from_autocorrelation(ex)});
        } else {
          doc.add_row({static_cast<long long>(len), chi, std::string("")});
        }
      }
    } else if (table2->parsed()) {
      doc.meta = base_meta("table2", opt);
      doc.columns = {"rate", "n1", "n"};
      for (double r : {0.90, 0.92, 0.94, 0.96, 0.98}) {
        const auto [m1, m2] = specnull::match_lengths(r);
        doc.add_row({r, static_cast<long long>(m1), static_cast<long long>(m2)});
      }
    }

    emit(doc, opt);
    return kExitOk;
  } catch (const specnull::resource_error& e) {
    std::cerr << "resource guard: " << e.what() << '\n';
    return kExitResource;
  } catch (const specnull::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}
