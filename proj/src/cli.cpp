#include "cvtele/cli.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <variant>

#include "cvtele/errors.hpp"
#include "cvtele/fidelity.hpp"
#include "cvtele/oracle.hpp"
#include "cvtele/sweep.hpp"
#include "cvtele/table_io.hpp"

namespace cvtele {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One flat output record, printed as a two-line CSV or a JSON object.
class Record {
 public:
  using Value = std::variant<double, bool, std::string>;

  Record& add(std::string key, Value value) {
    fields_.emplace_back(std::move(key), std::move(value));
    return *this;
  }

  void write(OutputFormat format, std::ostream& out) const {
    if (format == OutputFormat::Json) {
      nlohmann::ordered_json obj;
      for (const auto& [key, value] : fields_) {
        std::visit([&](const auto& v) { obj[key] = v; }, value);
      }
      out << obj.dump(2) << '\n';
      return;
    }
    std::vector<std::string> keys;
    std::vector<std::string> cells;
    for (const auto& [key, value] : fields_) {
      keys.push_back(key);
      cells.push_back(std::visit(
          [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              return format_number(v);
            } else if constexpr (std::is_same_v<T, bool>) {
              return v ? "true" : "false";
            } else {
              return v;
            }
          },
          value));
    }
    out << fmt::format("{}\n{}\n", fmt::join(keys, ","), fmt::join(cells, ","));
  }

 private:
  std::vector<std::pair<std::string, Value>> fields_;
};


struct ChannelFlags {
  double g = 1.0;
  double r2 = 0.0;
  double tau = 0.0;
  double nth = 0.0;
  double alpha = 1.0;
  double alpha_im = 0.0;

  void attach(CLI::App& cmd) {
    cmd.add_option("--g", g, "Gain of Bob's displacement")->capture_default_str();
    cmd.add_option("--r2", r2, "Bell-measurement beam-splitter reflectivity R^2")
        ->capture_default_str();
    cmd.add_option("--tau", tau, "Reduced damping time of Bob's mode")->capture_default_str();
    cmd.add_option("--nth", nth, "Thermal occupation of the damping environment")
        ->capture_default_str();
    cmd.add_option("--alpha", alpha, "Real part of the input coherent amplitude")
        ->capture_default_str();
    cmd.add_option("--alpha-im", alpha_im, "Imaginary part of the input coherent amplitude")
        ->capture_default_str();
  }

  ChannelParams channel() const { return {g, r2, tau, nth}; }
  Complex input_alpha() const { return {alpha, alpha_im}; }
};

void add_format_option(CLI::App& cmd, std::string& format) {
  cmd.add_option("--format", format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

void add_kind_option(CLI::App& cmd, std::string& kind) {
  cmd.add_option("--kind", kind, "tmsv, psub or padd")
      ->required()
      ->check(CLI::IsMember({"tmsv", "psub", "padd"}));
}

std::vector<ResourceKind> parse_kind_list(const std::string& list) {
  std::vector<ResourceKind> kinds;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = std::min(list.find(',', start), list.size());
    const std::string name = list.substr(start, comma - start);
    const auto kind = parse_kind(name);
    if (!kind) throw DomainError("unknown resource kind '" + name + "' (use tmsv, psub, padd)");
    kinds.push_back(*kind);
    start = comma + 1;
  }
  return kinds;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const CliHooks& hooks) {
  CLI::App app{"Continuous-variable teleportation fidelity with non-Gaussian resources", "cvtele"};
  app.require_subcommand(1);

  std::string format_name = "csv";

  // epr
  auto* epr = app.add_subcommand("epr", "EPR variance of a resource");
  std::string epr_kind_name;
  double epr_lambda = 0.0;
  int epr_cutoff = 0;
  add_kind_option(*epr, epr_kind_name);
  epr->add_option("--lambda", epr_lambda, "Squeezing lambda = tanh r")->required();
  auto* epr_oracle = epr->add_option("--oracle", epr_cutoff, "Also evaluate the Fock series at this cutoff")
                         ->check(CLI::PositiveNumber);
  add_format_option(*epr, format_name);

  // fidelity
  auto* fid = app.add_subcommand("fidelity", "Teleportation fidelity of a coherent state");
  std::string fid_kind_name;
  double fid_lambda = 0.0;
  bool fid_ideal = false;
  bool fid_verify = false;
  ChannelFlags fid_channel;
  add_kind_option(*fid, fid_kind_name);
  fid->add_option("--lambda", fid_lambda, "Squeezing lambda = tanh r")->required();
  fid_channel.attach(*fid);
  fid->add_flag("--ideal", fid_ideal, "Ideal protocol (g=1, R=0, tau=0, n_th=0)");
  fid->add_flag("--verify", fid_verify, "Cross-check against phase-space quadrature");
  add_format_option(*fid, format_name);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Tabulate a quantity over one parameter");
  std::string quantity_name = "fidelity";
  std::string variable_name = "lambda";
  std::string kinds_list = "tmsv,psub,padd";
  SweepSpec sweep_spec;
  sweep_spec.range.steps = 100;
  ChannelFlags sweep_channel;
  std::string out_path;
  sweep->add_option("--quantity", quantity_name, "fidelity, ideal-fidelity or epr")
      ->check(CLI::IsMember({"fidelity", "ideal-fidelity", "epr"}))
      ->capture_default_str();
  sweep->add_option("--var", variable_name, "lambda, tau, r2, gain or alpha")
      ->check(CLI::IsMember({"lambda", "tau", "r2", "gain", "alpha"}))
      ->capture_default_str();
  sweep->add_option("--lo", sweep_spec.range.lo, "First grid value")->required();
  sweep->add_option("--hi", sweep_spec.range.hi, "Last grid value")->required();
  sweep->add_option("--steps", sweep_spec.range.steps, "Number of grid points (>= 2)")
      ->capture_default_str();
  sweep->add_option("--kinds", kinds_list, "Comma-separated resource kinds")->capture_default_str();
  sweep->add_option("--lambda", sweep_spec.lambda, "Fixed lambda when not swept")
      ->capture_default_str();
  sweep_channel.attach(*sweep);
  sweep->add_option("--out", out_path, "Output file (default: stdout)");
  add_format_option(*sweep, format_name);

  // verify
  auto* verify = app.add_subcommand("verify", "Run the closed-form vs oracle suites");
  std::string grid_name = "small";
  verify->add_option("--grid", grid_name, "small or full")
      ->check(CLI::IsMember({"small", "full"}))
      ->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const OutputFormat format = *parse_output_format(format_name);
  try {
    if (epr->parsed()) {
      const ResourceKind epr_kind = *parse_kind(epr_kind_name);
      const ResourceSpec spec = ResourceSpec::make(epr_kind, epr_lambda);
      const double value = epr_variance(spec);
      Record record;
      record.add("kind", std::string(to_string(epr_kind))).add("lambda", epr_lambda).add("epr_variance", value);
      if (epr_oracle->count() > 0) {
        const double fock = epr_variance_fock(spec, {epr_cutoff});
        record.add("fock", fock).add("discrepancy", std::abs(value - fock));
      }
      record.write(format, out);
    } else if (fid->parsed()) {
      const ResourceKind fid_kind = *parse_kind(fid_kind_name);
      const ResourceSpec spec = ResourceSpec::make(fid_kind, fid_lambda);
      const ChannelParams ch = fid_ideal ? ChannelParams::ideal() : fid_channel.channel();
      const Complex alpha = fid_channel.input_alpha();
      FidelityReport report = fid_ideal ? FidelityReport::from_value(fidelity_ideal(spec))
                                        : fidelity_closed_form(spec, ch, alpha);
      if (fid_verify) {
        report.oracle = fidelity_quadrature(spec, ch, alpha);
        report.discrepancy = std::abs(report.closed_form - *report.oracle);
      }
      Record record;
      record.add("kind", std::string(to_string(fid_kind))).add("lambda", fid_lambda);
      if (!fid_ideal) {
        record.add("g", ch.g).add("r2", ch.r_sq).add("tau", ch.tau).add("nth", ch.n_th);
        record.add("alpha_re", alpha.real()).add("alpha_im", alpha.imag());
      }
      record.add(fid_ideal ? "ideal_fidelity" : "fidelity", report.closed_form)
          .add("beats_classical", report.beats_classical)
          .add("beats_no_cloning", report.beats_no_cloning);
      if (report.oracle) record.add("oracle", *report.oracle).add("discrepancy", *report.discrepancy);
      record.write(format, out);
    } else if (sweep->parsed()) {
      sweep_spec.variable = *parse_sweep_variable(variable_name);
      sweep_spec.quantity = *parse_sweep_quantity(quantity_name);
      sweep_spec.kinds = parse_kind_list(kinds_list);
      sweep_spec.channel = sweep_channel.channel();
      sweep_spec.alpha = sweep_channel.input_alpha();
      const SweepTable table = run_sweep(sweep_spec);
      if (out_path.empty()) {
        write_table(table, format, out);
      } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw IoError("cannot open '" + out_path + "' for writing");
        write_table(table, format, file);
        file.flush();
        if (!file) throw IoError("failed writing '" + out_path + "'");
        out << "rows: " << table.rows() << '\n';
      }
    } else if (verify->parsed()) {
      const VerifyGrid grid = *parse_verify_grid(grid_name);
      bool all_passed = true;
      for (const SuiteResult& suite : run_verification(grid, hooks.closed_form)) {
        all_passed = all_passed && suite.passed();
        out << fmt::format("{:<26} points={:<5} max_discrepancy={:.3e} tol={:.0e} {}\n", suite.name,
                           suite.points, suite.max_discrepancy, suite.tolerance,
                           suite.passed() ? "PASS" : "FAIL");
      }
      return all_passed ? kExitOk : kExitVerificationFailed;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::runtime_error& e) {
    // ConvergenceError, CutoffError, NoCrossoverError
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace cvtele
