#include "liken/cli.hpp"

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "liken/construct.hpp"
#include "liken/error.hpp"
#include "liken/families.hpp"
#include "liken/morphisms.hpp"
#include "liken/prefix_io.hpp"
#include "liken/properties.hpp"
#include "liken/semigroup.hpp"

namespace liken {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const std::vector<std::string> kAllProps = {"convexity", "disjoint-support", "parity",     "or",
                                            "bertrand",  "legendre",         "separation", "uniqueness",
                                            "dimension", "positions",        "gap-lemmas"};

struct SpecFlags {
  std::string family;
  std::uint64_t p = 0;
  std::vector<std::string> gens;
  std::vector<std::string> ints;
  std::vector<std::string> values;
  std::string name;
  std::string spec_file;
};

void add_spec_options(CLI::App* cmd, SpecFlags& f) {
  cmd->add_option("--family", f.family, "nstar | modclass | numerical | custom-logint | custom-rational");
  cmd->add_option("--p", f.p, "modulus for modclass");
  cmd->add_option("--gens", f.gens, "numerical semigroup generators")->delimiter(',');
  cmd->add_option("--ints", f.ints, "integers k of the generators ln(k)")->delimiter(',');
  cmd->add_option("--values", f.values, "rational generator values")->delimiter(',');
  cmd->add_option("--name", f.name, "display name for custom specs");
  cmd->add_option("--spec", f.spec_file, "JSON spec config (or a prefix export)");
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, path + ": " + e.what());
  }
}

LikenSpec spec_from_flags(const SpecFlags& f) {
  if (!f.spec_file.empty()) {
    if (!f.family.empty()) throw Error(ErrorCode::InvalidArgument, "--spec and --family are exclusive");
    json doc = read_json_file(f.spec_file);
    if (doc.is_object() && doc.contains("elements") && doc.contains("spec")) doc = doc["spec"];
    return spec_from_config(doc);
  }
  if (f.family.empty()) throw Error(ErrorCode::InvalidArgument, "a spec is required: --family or --spec");
  std::string kind = f.family;
  std::replace(kind.begin(), kind.end(), '-', '_');
  json config{{"kind", kind}};
  if (kind == "modclass") {
    if (f.p == 0) throw Error(ErrorCode::InvalidArgument, "modclass needs --p >= 1");
    config["p"] = f.p;
  }
  if (kind == "numerical") config["gens"] = f.gens;
  if (kind == "custom_logint") config["ints"] = f.ints;
  if (kind == "custom_rational") config["values"] = f.values;
  if (!f.name.empty()) config["name"] = f.name;
  return spec_from_config(config);
}

unsigned precision_ceiling(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("LIKEN_PRECISION_CEILING")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || v < 64) {
      throw Error(ErrorCode::InvalidArgument, "LIKEN_PRECISION_CEILING must be an integer >= 64");
    }
    return static_cast<unsigned>(v);
  }
  return kDefaultPrecisionCeiling;
}

void write_atomic(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + tmp.string() + "'");
    out << content;
    if (!out.flush()) throw Error(ErrorCode::InvalidArgument, "write failed for '" + tmp.string() + "'");
  }
  fs::rename(tmp, path);
}

void emit(std::ostream& out, const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    write_atomic(path, content);
  }
}

void error_json(std::ostream& err, std::string_view code, const std::string& message,
                std::optional<std::size_t> index = std::nullopt) {
  json e{{"error", code}, {"message", message}};
  if (index) e["index"] = *index;
  err << e.dump() << '\n';
}

std::string prefix_table(const Prefix& prefix) {
  std::ostringstream os;
  os << std::left << std::setw(8) << "index" << std::setw(24) << "value" << std::setw(18) << "approx"
     << "reps\n";
  for (const Element& e : prefix.elements()) {
    std::string reps;
    for (const auto& r : e.reps) reps += (reps.empty() ? "" : ";") + to_string(r);
    os << std::setw(8) << e.index << std::setw(24) << to_string(e.value) << std::setw(18)
       << approx_decimal(e.value) << reps << '\n';
  }
  return os.str();
}

// ---- enumerate

struct EnumerateArgs {
  SpecFlags spec;
  std::size_t count = 0;
  std::string bound;
  std::string format = "json";
  std::string out;
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out) {
  const LikenSpec spec = spec_from_flags(a.spec);
  if (a.count > 0 && !a.bound.empty()) throw Error(ErrorCode::InvalidArgument, "--count and --bound are exclusive");
  const Limit limit = a.bound.empty() ? Limit::count((a.count == 0 ? 100 : a.count) + 1)
                                      : Limit::value_bound(parse_value(a.bound));
  const Prefix prefix = enumerate(spec, limit);
  std::string text;
  if (a.format == "json") {
    text = prefix_to_json(prefix).dump(1) + "\n";
  } else if (a.format == "csv") {
    std::ostringstream os;
    write_prefix_csv(os, prefix);
    text = os.str();
  } else {
    text = prefix_table(prefix);
  }
  emit(out, a.out, text);
  return kExitOk;
}

// ---- check

struct CheckArgs {
  SpecFlags spec;
  std::size_t count = 100;
  std::vector<std::string> props;
  std::vector<std::size_t> checkpoints;
  std::size_t trials = 10000;
  std::uint64_t seed = 1;
  std::vector<std::size_t> target_positions;
  bool target_given = false;
  std::string out_dir;
  std::string format = "table";
};

PropertyReport run_property(const std::string& name, const CheckArgs& a, const LikenSpec& spec,
                            const Prefix& prefix) {
  if (name == "convexity") return check_convexity(prefix);
  if (name == "disjoint-support") return check_disjoint_support(prefix);
  if (name == "parity") return check_parity(prefix);
  if (name == "or") return check_or(prefix);
  if (name == "bertrand") return check_bertrand(prefix);
  if (name == "legendre") return check_legendre(prefix, a.checkpoints);
  if (name == "separation") return check_separation(prefix);
  if (name == "uniqueness") return check_uniqueness(spec, prefix);
  if (name == "dimension") return dimension(prefix);
  if (name == "positions") return positions_report(prefix, a.target_given ? &a.target_positions : nullptr);
  if (name == "gap-lemmas") return check_gap_lemmas(prefix, a.trials, a.seed);
  throw Error(ErrorCode::InvalidArgument, "unknown property '" + name + "'");
}

std::string report_line(const PropertyReport& r) {
  std::ostringstream os;
  os << std::left << std::setw(18) << r.property << std::setw(14) << verdict_name(r.verdict) << std::setw(11)
     << scope_name(r.scope) << r.reason;
  if (!r.witnesses.empty()) {
    os << "  [first witness n=";
    const auto& w = r.witnesses.front();
    for (std::size_t i = 0; i < w.indices.size(); ++i) os << (i ? "," : "") << w.indices[i];
    if (!w.values.empty()) {
      os << " values=";
      for (std::size_t i = 0; i < w.values.size(); ++i) os << (i ? "," : "") << to_string(w.values[i]);
    }
    os << ']';
  }
  return os.str();
}

int cmd_check(const CheckArgs& a, std::ostream& out) {
  std::vector<std::string> props = a.props.empty() ? kAllProps : a.props;
  for (const auto& p : props) {
    if (std::find(kAllProps.begin(), kAllProps.end(), p) == kAllProps.end()) {
      throw Error(ErrorCode::InvalidArgument, "unknown property '" + p + "'");
    }
  }
  if (a.count == 0) throw Error(ErrorCode::InvalidArgument, "--count must be positive");
  const LikenSpec spec = spec_from_flags(a.spec);
  const Prefix prefix = enumerate(spec, Limit::count(a.count + 1));

  std::vector<PropertyReport> reports;
  for (const auto& p : props) reports.push_back(run_property(p, a, spec, prefix));

  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.verdict != Verdict::Fail;

  if (!a.out_dir.empty()) {
    for (const auto& r : reports) {
      write_atomic(fs::path(a.out_dir) / (r.property + ".json"), report_to_json(r).dump(1) + "\n");
      if (!r.series.empty()) {
        std::ostringstream os;
        write_series_dat(os, r);
        write_atomic(fs::path(a.out_dir) / (r.property + ".dat"), os.str());
      }
    }
  }
  if (a.format == "json") {
    json doc{{"spec", spec.name()}, {"prefix_len", prefix.size()}, {"all_pass", all_pass}};
    json list = json::array();
    for (const auto& r : reports) list.push_back(report_to_json(r));
    doc["reports"] = std::move(list);
    out << doc.dump(1) << '\n';
  } else {
    out << spec.name() << ", indices 0.." << prefix.size() - 1 << '\n';
    for (const auto& r : reports) out << report_line(r) << '\n';
  }
  return all_pass ? kExitOk : kExitFailed;
}

// ---- compare

struct CompareArgs {
  std::string a;
  std::string b;
  std::string a_spec;
  std::string b_spec;
  std::size_t k_max = 20;
  std::size_t count = 100;
  unsigned precision = 0;
  std::string out;
};

LikenSpec side_spec(const std::string& inline_text, const std::string& file, const char* side) {
  if (!inline_text.empty() && !file.empty()) {
    throw Error(ErrorCode::InvalidArgument, std::string("--") + side + " and --" + side + "-spec are exclusive");
  }
  if (!inline_text.empty()) return spec_from_inline(inline_text);
  if (file.empty()) throw Error(ErrorCode::InvalidArgument, std::string("missing --") + side);
  SpecFlags f;
  f.spec_file = file;
  return spec_from_flags(f);
}

int cmd_compare(const CompareArgs& c, std::ostream& out) {
  const LikenSpec a = side_spec(c.a, c.a_spec, "a");
  const LikenSpec b = side_spec(c.b, c.b_spec, "b");
  if (c.k_max == 0) throw Error(ErrorCode::InvalidArgument, "--kmax must be positive");
  const HomothetyResult h = homothety_test(a, b, c.k_max, precision_ceiling(c.precision));

  json doc{{"a", a.name()}, {"b", b.name()}, {"homothety", homothety_to_json(h)}};
  bool order_ok = true;
  if (c.count > 0) {
    const Prefix pa = enumerate(a, Limit::count(c.count + 1));
    const Prefix pb = enumerate(b, Limit::count(c.count + 1));
    if (pa.has_unique_reps() && pb.has_unique_reps()) {
      const OrderIsoResult o = order_iso_prefix_test(pa, pb);
      doc["order"] = order_iso_to_json(o);
      order_ok = o.consistent;
    } else {
      doc["order"] = {{"outcome", "Inapplicable"}, {"reason", "representations are not unique"}};
    }
  }
  const bool iso = h.outcome == HomothetyResult::Outcome::Isomorphic && order_ok;
  doc["isomorphic"] = iso;
  emit(out, c.out, doc.dump(1) + "\n");
  return iso ? kExitOk : kExitFailed;
}

// ---- semigroup

struct SemigroupArgs {
  std::vector<std::uint64_t> gens;
  std::vector<std::uint64_t> apery;
  std::string out;
};

int cmd_semigroup(const SemigroupArgs& s, std::ostream& out) {
  const NumericalSemigroup sg(s.gens);
  std::vector<std::uint64_t> moduli = s.apery;
  if (moduli.empty() && sg.cofinite()) moduli.push_back(sg.minimal_gens().front());
  emit(out, s.out, semigroup_summary(sg, moduli).dump(1) + "\n");
  return kExitOk;
}

// ---- construct

struct ConstructArgs {
  std::string policy = "convexity-window";
  std::size_t steps = 100;
  std::vector<std::string> values;
  std::string out;
  std::string prefix_out;
  bool verify = false;
};

ConstructPolicy policy_from_name(const std::string& name, const std::vector<std::string>& values) {
  if (name == "midpoint") return ConstructPolicy::midpoint();
  if (name == "convexity-window") return ConstructPolicy::convexity_window(true);
  if (name == "convexity-window-plain") return ConstructPolicy::convexity_window(false);
  if (name == "user-values") {
    std::vector<Value> v;
    for (const auto& s : values) v.push_back(parse_value(s));
    return ConstructPolicy::user_values(std::move(v));
  }
  throw Error(ErrorCode::InvalidArgument, "unknown policy '" + name + "'");
}

int cmd_construct(const ConstructArgs& c, std::ostream& out) {
  if (c.steps == 0) throw Error(ErrorCode::InvalidArgument, "--steps must be positive");
  const ConstructionTrace trace = or_construct(policy_from_name(c.policy, c.values), c.steps);
  std::string lines;
  for (const auto& step : trace.steps) lines += step_to_json(step).dump() + "\n";
  emit(out, c.out, lines);
  if (!c.prefix_out.empty()) write_atomic(c.prefix_out, prefix_to_json(trace.prefix).dump(1) + "\n");

  std::vector<std::string> problems;
  if (c.verify) problems = verify_trace(trace);
  if (!c.out.empty() && c.out != "-") {
    json summary{{"policy", trace.policy},
                 {"steps", trace.steps.size()},
                 {"generators", trace.prefix.generators().size()},
                 {"backtracks", trace.backtracks},
                 {"learned_constraints", trace.learned_constraints}};
    if (c.verify) summary["trace_problems"] = problems;
    out << summary.dump() << '\n';
  }
  if (!problems.empty()) {
    throw Error(ErrorCode::InternalConsistency, "trace replay disagrees: " + problems.front());
  }
  return kExitOk;
}

// ---- verify-main

struct VerifyArgs {
  SpecFlags spec;
  std::size_t count = 1000;
  std::string prefix_file;
  std::size_t construct_steps = 0;
  std::string out;
};

int cmd_verify_main(const VerifyArgs& v, std::ostream& out) {
  const int sources = (!v.prefix_file.empty()) + (v.construct_steps > 0) +
                      (!v.spec.family.empty() || !v.spec.spec_file.empty());
  if (sources != 1) {
    throw Error(ErrorCode::InvalidArgument, "give exactly one of --family/--spec, --prefix or --construct");
  }
  std::optional<Prefix> prefix;
  if (!v.prefix_file.empty()) {
    prefix.emplace(prefix_from_json(read_json_file(v.prefix_file)));
  } else if (v.construct_steps > 0) {
    prefix.emplace(or_construct(ConstructPolicy::convexity_window(), v.construct_steps).prefix);
  } else {
    if (v.count == 0) throw Error(ErrorCode::InvalidArgument, "--count must be positive");
    prefix.emplace(enumerate(spec_from_flags(v.spec), Limit::count(v.count + 1)));
  }
  const MainTheoremReport report = verify_main_theorem(*prefix);
  emit(out, v.out, main_report_to_json(report).dump(1) + "\n");
  return report.verdict == MainTheoremReport::Verdict::TheoremConsistent ? kExitOk : kExitFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"liken: enumerate likens, check their properties and compare them", "liken"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML/INI file with option values");

  EnumerateArgs ea;
  auto* enum_cmd = app.add_subcommand("enumerate", "Export a prefix x_0 .. x_N");
  add_spec_options(enum_cmd, ea.spec);
  enum_cmd->add_option("--count", ea.count, "last index N (default 100)");
  enum_cmd->add_option("--bound", ea.bound, "every element <= this value, e.g. 10 or ln(100)");
  enum_cmd->add_option("--format", ea.format)->check(CLI::IsMember({"json", "csv", "table"}));
  enum_cmd->add_option("--out", ea.out, "output file (default stdout)");

  CheckArgs ca;
  auto* check_cmd = app.add_subcommand("check", "Run property checks on a prefix");
  add_spec_options(check_cmd, ca.spec);
  check_cmd->add_option("--count", ca.count, "last index N");
  check_cmd->add_option("--props", ca.props, "comma-separated properties (default all)")->delimiter(',');
  check_cmd->add_option("--checkpoints", ca.checkpoints, "Legendre ratio indices")->delimiter(',');
  check_cmd->add_option("--trials", ca.trials, "gap-lemma samples");
  check_cmd->add_option("--seed", ca.seed, "gap-lemma seed");
  auto* target = check_cmd->add_option("--target-positions", ca.target_positions, "expected generator indices")
                     ->delimiter(',');
  check_cmd->add_option("--out-dir", ca.out_dir, "directory for per-property JSON and .dat files");
  check_cmd->add_option("--format", ca.format)->check(CLI::IsMember({"json", "table"}));

  CompareArgs co;
  auto* compare_cmd = app.add_subcommand("compare", "Test two likens for isomorphism");
  compare_cmd->add_option("--a", co.a, "inline spec, e.g. numerical:3,4,5");
  compare_cmd->add_option("--b", co.b, "inline spec");
  compare_cmd->add_option("--a-spec", co.a_spec, "JSON spec file");
  compare_cmd->add_option("--b-spec", co.b_spec, "JSON spec file");
  compare_cmd->add_option("--kmax", co.k_max, "generators compared");
  compare_cmd->add_option("--count", co.count, "prefix length of the order test (0 skips it)");
  compare_cmd->add_option("--precision", co.precision, "interval precision ceiling in bits");
  compare_cmd->add_option("--out", co.out);

  SemigroupArgs sa;
  auto* sg_cmd = app.add_subcommand("semigroup", "Numerical semigroup invariants");
  sg_cmd->add_option("--gens", sa.gens, "generators")->delimiter(',')->required();
  sg_cmd->add_option("--apery", sa.apery, "moduli for Apery sets (default: smallest generator)")->delimiter(',');
  sg_cmd->add_option("--out", sa.out);

  ConstructArgs cs;
  auto* construct_cmd = app.add_subcommand("construct", "Build a prefix by the Ockham construction");
  construct_cmd->add_option("--policy", cs.policy)
      ->check(CLI::IsMember({"midpoint", "convexity-window", "convexity-window-plain", "user-values"}));
  construct_cmd->add_option("--steps", cs.steps, "elements x_1 .. x_steps to build");
  construct_cmd->add_option("--values", cs.values, "generator values for user-values")->delimiter(',');
  construct_cmd->add_option("--out", cs.out, "JSON-lines trace file (default stdout)");
  construct_cmd->add_option("--prefix-out", cs.prefix_out, "prefix export of the constructed liken");
  construct_cmd->add_flag("--verify", cs.verify, "replay the trace against independent z_n");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify-main", "Check convexity + OR => pattern of N*");
  add_spec_options(verify_cmd, va.spec);
  verify_cmd->add_option("--count", va.count, "last index N");
  verify_cmd->add_option("--prefix", va.prefix_file, "prefix export to check");
  verify_cmd->add_option("--construct", va.construct_steps, "check a convexity-window construction of this length");
  verify_cmd->add_option("--out", va.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    error_json(err, "Usage", e.what());
    return kExitUsage;
  }
  ca.target_given = target->count() > 0;

  try {
    if (*enum_cmd) return cmd_enumerate(ea, out);
    if (*check_cmd) return cmd_check(ca, out);
    if (*compare_cmd) return cmd_compare(co, out);
    if (*sg_cmd) return cmd_semigroup(sa, out);
    if (*construct_cmd) return cmd_construct(cs, out);
    if (*verify_cmd) return cmd_verify_main(va, out);
  } catch (const Error& e) {
    error_json(err, error_code_name(e.code()), e.what(), e.index());
    return kExitUsage;
  } catch (const json::exception& e) {
    error_json(err, error_code_name(ErrorCode::Parse), e.what());
    return kExitUsage;
  } catch (const fs::filesystem_error& e) {
    error_json(err, "Io", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace liken
