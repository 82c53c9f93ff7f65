#include "cld/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "cld/audit.hpp"
#include "cld/composite.hpp"
#include "cld/dsl.hpp"
#include "cld/errors.hpp"
#include "cld/json_io.hpp"

namespace cld::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitScriptError = 2;
constexpr int kExitRefuted = 3;

std::string decimal_value(const dsl::Value& v, int digits) {
  if (const auto* r = std::get_if<Rational>(&v)) return r->decimal(digits);
  const auto decimal_prop = [&](const Proposition& p) {
    std::string s = "[";
    for (int i = 0; i < p.size(); ++i) {
      if (i) s += ", ";
      s += p[i].decimal(digits);
    }
    return s + "]";
  };
  if (const auto* p = std::get_if<Proposition>(&v)) return decimal_prop(*p);
  const auto& [first, second] = std::get<std::pair<Proposition, Proposition>>(v);
  return "(" + decimal_prop(first) + ", " + decimal_prop(second) + ")";
}

int run_eval(const std::string& path, std::optional<int> digits,
             std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot open script file '" << path << "'\n";
    return kExitUsage;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    const dsl::Script script = dsl::parse(buf.str());
    for (const auto& value : dsl::eval(script)) {
      out << dsl::format_value(value);
      if (digits) out << " ~ " << decimal_value(value, *digits);
      out << '\n';
    }
  } catch (const dsl::ScriptError& e) {
    err << "error: " << e.what() << '\n';
    return kExitScriptError;
  }
  return kExitOk;
}

int run_audit(const std::string& claim, bool json_mode, int sample,
              std::uint64_t seed, std::ostream& out) {
  AuditReport report;
  if (claim == "theorem2")
    report = theorem2_audit();
  else if (claim == "closure")
    report = closure_audit();
  else if (claim == "isometry")
    report = isometry_audit();
  else if (claim == "pairing")
    report = pairing_audit();
  else
    report = connective_dp_classification(sample, seed);
  if (json_mode)
    out << to_json(report).dump(2) << '\n';
  else
    out << to_text(report);
  return report.verdict == Verdict::Refuted ? kExitRefuted : kExitOk;
}

int run_demo(const std::string& c_text, bool json_mode, std::optional<int> digits,
             std::ostream& out, std::ostream& err) {
  Rational c;
  try {
    c = Rational::parse(c_text);
  } catch (const Error&) {
    err << "error: --C expects a rational like -1/4, got '" << c_text << "'\n";
    return kExitUsage;
  }
  try {
    const ContextRecognitionRecord record = context_recognition_demo(c);
    if (json_mode) {
      out << to_json(record).dump(2) << '\n';
      return kExitOk;
    }
    const auto line = [&](const char* label, const Proposition& p) {
      out << label << p.str();
      if (digits) {
        out << " ~ [";
        for (int i = 0; i < p.size(); ++i)
          out << (i ? ", " : "") << p[i].decimal(*digits);
        out << ']';
      }
      out << '\n';
    };
    out << "C:           " << record.C << '\n';
    line("input:       ", record.input);
    line("input proj1: ", record.input_first);
    line("input proj2: ", record.input_second);
    line("image:       ", record.image);
    line("image proj1: ", record.image_first);
    line("image proj2: ", record.image_second);
    return kExitOk;
  } catch (const OutOfRangeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run_enumerate(int rows, int cols, std::optional<long long> limit,
                  std::ostream& out) {
  long long emitted = 0;
  for (const auto& g : enumerate_admissible(rows, cols)) {
    if (limit && emitted >= *limit) break;
    out << to_json(g, /*include_dense=*/true).dump() << '\n';
    ++emitted;
  }
  return kExitOk;
}

// Parses the {"probs": [...]} interchange form.
Proposition proposition_from_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("proposition is not valid JSON: ") + e.what());
  }
  return proposition_from_json(j);
}

int run_context(const std::string& prop_text, std::ostream& out) {
  out << context(proposition_from_text(prop_text)).str() << '\n';
  return kExitOk;
}

int run_decompose(const std::string& prop_text, std::ostream& out) {
  const auto [first, second] = decompose(proposition_from_text(prop_text));
  out << json{{"first", to_json(first)}, {"second", to_json(second)}}.dump()
      << '\n';
  return kExitOk;
}

int run_nearest_product(const std::string& prop_text, int grid, std::ostream& out) {
  const NearestProduct best =
      nearest_product_distance(proposition_from_text(prop_text), grid);
  out << json{{"distance", best.dist.str()}, {"argmin", to_json(best.argmin)}}.dump()
      << '\n';
  return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"composite-device probabilistic logic toolkit"};
  app.require_subcommand(1);

  std::string script_path;
  std::optional<int> digits;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a .ctx script");
  eval_cmd->add_option("file", script_path, "script file")->required();
  eval_cmd->add_option("--digits", digits, "append decimal renderings");

  std::string claim;
  bool audit_json = false;
  int sample = 32;
  std::uint64_t seed = 0;
  auto* audit_cmd = app.add_subcommand("audit", "machine-check a claim");
  audit_cmd->add_option("claim", claim, "claim to audit")
      ->required()
      ->check(CLI::IsMember({"theorem2", "closure", "isometry", "pairing",
                             "classify"}));
  audit_cmd->add_flag("--json", audit_json, "emit the full report as JSON");
  audit_cmd->add_option("--sample", sample,
                        "two-place sample count for 'classify'");
  audit_cmd->add_option("--seed", seed, "sample generator seed for 'classify'");

  std::string demo_kind;
  std::string c_text;
  bool demo_json = false;
  std::optional<int> demo_digits;
  auto* demo_cmd = app.add_subcommand("demo", "run a demonstration");
  demo_cmd->add_option("kind", demo_kind, "demo name")
      ->required()
      ->check(CLI::IsMember({"context-recognition"}));
  demo_cmd->add_option("--C", c_text, "context value, rational in [-1/4, 1/4]")
      ->required();
  demo_cmd->add_flag("--json", demo_json, "emit the record as JSON");
  demo_cmd->add_option("--digits", demo_digits, "append decimal renderings");

  int rows = 0;
  int cols = 0;
  std::optional<long long> limit;
  auto* enum_cmd =
      app.add_subcommand("enumerate", "stream selector matrices in lexicographic order");
  enum_cmd->add_option("--rows", rows, "row count")->required()->check(CLI::PositiveNumber);
  enum_cmd->add_option("--cols", cols, "column count")->required()->check(CLI::PositiveNumber);
  enum_cmd->add_option("--limit", limit, "emit at most this many");

  std::string context_prop;
  auto* context_cmd =
      app.add_subcommand("context", "context variable of a 4-outcome proposition");
  context_cmd->add_option("proposition", context_prop, R"({"probs": [...]} JSON)")
      ->required();

  std::string decompose_prop;
  auto* decompose_cmd =
      app.add_subcommand("decompose", "split a decomposable proposition");
  decompose_cmd->add_option("proposition", decompose_prop, R"({"probs": [...]} JSON)")
      ->required();

  std::string nearest_prop;
  int nearest_grid = 8;
  auto* nearest_cmd = app.add_subcommand(
      "nearest-product", "exhaustive grid search for the closest product state");
  nearest_cmd->add_option("proposition", nearest_prop, R"({"probs": [...]} JSON)")
      ->required();
  nearest_cmd->add_option("--grid", nearest_grid, "grid denominator (>= 4)");

  std::vector<const char*> argv;
  argv.push_back("cld");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*eval_cmd) return run_eval(script_path, digits, out, err);
    if (*audit_cmd) {
      if (sample < 1) {
        err << "error: --sample must be >= 1\n";
        return kExitUsage;
      }
      return run_audit(claim, audit_json, sample, seed, out);
    }
    if (*demo_cmd) return run_demo(c_text, demo_json, demo_digits, out, err);
    if (*context_cmd) return run_context(context_prop, out);
    if (*decompose_cmd) return run_decompose(decompose_prop, out);
    if (*nearest_cmd) return run_nearest_product(nearest_prop, nearest_grid, out);
    return run_enumerate(rows, cols, limit, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

} // namespace cld::cli
