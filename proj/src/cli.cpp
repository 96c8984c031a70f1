// Copyright 2026 The cftkit Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cft/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "cft/analysis.hpp"
#include "cft/dsl.hpp"
#include "cft/evaluate.hpp"
#include "cft/export.hpp"
#include "cft/fixtures.hpp"
#include "cft/flatten.hpp"
#include "cft/metrics.hpp"

namespace cft::cli {
namespace {

// Reported as exit 2 after the message has been printed.
struct UsageFailure {};

struct Options {
  std::string file;
  std::string system;
  std::string tree;
  std::string top;
  std::string format = "text";
  std::string output;
  std::string left;
  std::string right;
  std::string failed;
  std::string emit;
};

class Session {
 public:
  Session(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  std::ostream& err() { return err_; }

  // Machine output goes to --output when given, else to stdout.
  void emit(const Options& o, const std::string& text) {
    if (o.output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(o.output, std::ios::binary);
    f << text;
    if (!f) fail(o.output, "cannot write file");
  }

  [[noreturn]] void fail(const std::string& where, const std::string& message,
                         SourceLoc loc = {}) {
    err_ << where;
    if (loc.known()) err_ << ':' << loc.line << ':' << loc.column;
    err_ << ": error: " << message << '\n';
    throw UsageFailure{};
  }

  void report(const std::string& file, const ValidationReport& report) {
    for (const auto& d : report.diagnostics) {
      err_ << file;
      if (d.loc.known()) err_ << ':' << d.loc.line << ':' << d.loc.column;
      err_ << (d.severity == Severity::Error ? ": error: " : ": warning: ");
      if (!d.where.empty()) err_ << d.where << ": ";
      err_ << d.message << '\n';
    }
  }

  const SourceModel& load(const std::string& file) {
    if (model_) return *model_;
    std::ifstream in(file, std::ios::binary);
    if (!in) fail(file, "cannot read file");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      model_ = parse_model(buf.str());
    } catch (const ParseError& e) {
      fail(file, e.message(), e.loc());
    }
    return *model_;
  }

 private:
  std::ostream& out_;
  std::ostream& err_;
  std::optional<SourceModel> model_;
};

std::string one_json(AnalysisResult r) {
  return export_results_json(std::span<const AnalysisResult>(&r, 1));
}

void check_format(Session& s, const std::string& format,
                  std::initializer_list<std::string_view> allowed) {
  for (auto a : allowed)
    if (format == a) return;
  std::string list;
  for (auto a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
  s.fail("--format", "unsupported format '" + format + "'; use one of " + list);
}

// Runs `body`, translating model errors into located diagnostics.
template <typename F>
auto guarded(Session& s, const std::string& file, F&& body) {
  try {
    return body();
  } catch (const ValidationError& e) {
    s.report(file, e.report());
    s.fail(file, "model is invalid (" +
                     std::to_string(e.report().error_count()) + " error(s))");
  } catch (const ModelError& e) {
    s.fail(file, e.what(), e.loc());
  } catch (const Error& e) {
    s.fail(file, e.what());
  }
}

FaultTree flatten_system(Session& s, const Options& o, const std::string& name) {
  const auto& model = s.load(o.file);
  return guarded(s, o.file, [&] { return flatten(to_system_model(model, name)); });
}

FaultTree tree_named(Session& s, const Options& o, const std::string& name) {
  const auto& model = s.load(o.file);
  return guarded(s, o.file, [&] { return to_fault_tree(model, name); });
}

// --system/--tree selection for cutsets and prob.
FaultTree selected_tree(Session& s, const Options& o) {
  if (o.system.empty() == o.tree.empty())
    s.fail("usage", "give exactly one of --system or --tree");
  return o.system.empty() ? tree_named(s, o, o.tree)
                          : flatten_system(s, o, o.system);
}

// Resolves `flatten(S).top`, `S.top` (system, flattened) or `T.top` (tree).
std::pair<FaultTree, std::string> resolve_selector(Session& s, const Options& o,
                                                   const std::string& sel) {
  std::string name;
  std::string top;
  bool force_system = false;
  constexpr std::string_view kFlatten = "flatten(";
  if (sel.starts_with(kFlatten)) {
    const auto close = sel.find(')');
    if (close == std::string::npos || close + 1 >= sel.size() ||
        sel[close + 1] != '.')
      s.fail(sel, "malformed selector; expected flatten(<system>).<top>");
    name = sel.substr(kFlatten.size(), close - kFlatten.size());
    top = sel.substr(close + 2);
    force_system = true;
  } else {
    const auto dot = sel.find('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 == sel.size())
      s.fail(sel, "malformed selector; expected <name>.<top>");
    name = sel.substr(0, dot);
    top = sel.substr(dot + 1);
  }
  const auto& model = s.load(o.file);
  if (force_system || model.find_system(name))
    return {flatten_system(s, o, name), top};
  if (model.find_tree(name)) return {tree_named(s, o, name), top};
  s.fail(sel, "no system or tree named '" + name + "'");
}

std::string join_set(const std::vector<std::string>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i)
    out += (i ? ", " : "") + items[i];
  return out + "}";
}

int cmd_validate(Session& s, const Options& o) {
  check_format(s, o.format, {"text", "json"});
  const auto& model = s.load(o.file);
  const auto report = validate_source(model);
  s.report(o.file, report);
  if (o.format == "json") {
    s.emit(o, one_json(report));
  } else {
    std::ostringstream text;
    text << (report.ok() ? "valid" : "invalid") << " (" << report.error_count()
         << " error(s), " << report.warning_count() << " warning(s))\n";
    s.emit(o, text.str());
  }
  return report.ok() ? kExitOk : kExitUsage;
}

int cmd_flatten(Session& s, const Options& o) {
  check_format(s, o.format, {"dsl", "dot", "json"});
  auto ft = flatten_system(s, o, o.system);
  if (!o.top.empty()) {
    if (!ft.find_root(o.top)) s.fail(o.top, "unknown top event");
    ft = ft.restricted_to({o.top});
  }
  const std::string name = o.system + "_flat";
  if (o.format == "dsl") {
    SourceModel m;
    m.declarations.emplace_back(to_tree_block(ft, name));
    s.emit(o, serialize_model(m));
  } else if (o.format == "dot") {
    std::string text;
    for (const auto& [top, id] : ft.roots()) text += export_dot(ft, top);
    s.emit(o, text);
  } else {
    s.emit(o, one_json(TreeResult{name, std::move(ft)}));
  }
  return kExitOk;
}

int cmd_cutsets(Session& s, const Options& o) {
  check_format(s, o.format, {"text", "json"});
  const auto ft = selected_tree(s, o);
  const auto report =
      guarded(s, o.file, [&] { return minimal_cut_sets(ft, o.top); });
  if (o.format == "json") {
    s.emit(o, one_json(report));
  } else {
    std::string text = report.top + ": " +
                       std::to_string(report.cut_sets.size()) +
                       " minimal cut set(s)\n";
    for (const auto& cs : report.cut_sets) text += join_set(cs) + "\n";
    s.emit(o, text);
  }
  return kExitOk;
}

int cmd_prob(Session& s, const Options& o) {
  check_format(s, o.format, {"text", "json"});
  const auto ft = selected_tree(s, o);
  const auto r =
      guarded(s, o.file, [&] { return top_event_probability(ft, o.top); });
  if (o.format == "json") {
    s.emit(o, one_json(r));
  } else {
    std::string text = r.top + ": exact " + format_probability(r.exact);
    if (r.rare_event_upper_bound)
      text += ", rare-event bound " + format_probability(*r.rare_event_upper_bound);
    s.emit(o, text + "\n");
  }
  return kExitOk;
}

int cmd_equiv(Session& s, const Options& o) {
  check_format(s, o.format, {"text", "json"});
  const auto [left, ltop] = resolve_selector(s, o, o.left);
  const auto [right, rtop] = resolve_selector(s, o, o.right);
  const auto v = guarded(
      s, o.file, [&] { return check_equivalence(left, right, ltop, rtop); });
  if (o.format == "json") {
    s.emit(o, one_json(v));
  } else if (v.equivalent) {
    s.emit(o, "equivalent\n");
  } else {
    std::string text = "not equivalent\n";
    if (v.witness) {
      const auto& w = *v.witness;
      text += "witness " +
              join_set({w.scenario.failed.begin(), w.scenario.failed.end()}) +
              ": left " + (w.left ? "true" : "false") + ", right " +
              (w.right ? "true" : "false") + "\n";
    }
    s.emit(o, text);
  }
  return v.equivalent ? kExitOk : kExitFinding;
}

int cmd_eval(Session& s, const Options& o) {
  check_format(s, o.format, {"text", "json"});
  const auto& model = s.load(o.file);
  Scenario scenario;
  std::stringstream list(o.failed);
  for (std::string item; std::getline(list, item, ',');)
    if (!item.empty()) scenario.failed.insert(item);
  const bool value = guarded(s, o.file, [&] {
    return evaluate_scenario(to_system_model(model, o.system), scenario, o.top);
  });
  if (o.format == "json")
    s.emit(o, one_json(ScenarioResult{o.top, scenario, value}));
  else
    s.emit(o, value ? "true\n" : "false\n");
  return kExitOk;
}

int cmd_metrics(Session& s, const Options& o) {
  check_format(s, o.format, {"text", "json"});
  const auto& model = s.load(o.file);
  const auto m =
      guarded(s, o.file, [&] { return model_metrics(to_system_model(model, o.system)); });
  if (o.format == "json") {
    s.emit(o, one_json(m));
    return kExitOk;
  }
  std::ostringstream text;
  text << "system " << m.system << ": " << m.instances << " instance(s), "
       << m.top_events << " top event(s)\n"
       << "flattened: " << m.flattened_nodes << " node(s), depth "
       << m.flattened_depth << ", " << m.shared_nodes << " shared\n";
  for (const auto& d : m.definitions) {
    text << d.name << ": reuse " << d.reuse << ", ports " << d.ports
         << ", modes " << d.modes << ", events " << d.events << ", gates "
         << d.gates << ", outputs " << join_set(d.declared_output_modes) << "\n";
  }
  s.emit(o, text.str());
  return kExitOk;
}

int cmd_fixtures(Session& s, const Options& o) {
  auto files = fixtures::source_files();
  if (o.emit.empty()) {
    std::string text;
    for (const auto& f : files) text += std::string(f.file_name) + "\n";
    text += "scenarios.json\n";
    s.emit(o, text);
    return kExitOk;
  }
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(o.emit, ec);
  if (ec) s.fail(o.emit, "cannot create directory: " + ec.message());
  const auto catalog = fixtures::scenario_catalog_json();
  files.push_back({"scenarios.json", catalog});
  for (const auto& f : files) {
    const auto path = fs::path(o.emit) / f.file_name;
    std::ofstream out(path, std::ios::binary);
    out << f.text;
    if (!out) s.fail(path.string(), "cannot write file");
  }
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Component fault tree toolkit", "cftkit"};
  app.require_subcommand(1, 1);
  app.fallthrough(false);

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "model file (.cft)")->required();
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", o.output, "write output to this file");
  };
  auto add_format = [&](CLI::App* sub, const char* help) {
    sub->add_option("--format", o.format, help);
  };

  auto* validate = app.add_subcommand("validate", "check a model file");
  add_file(validate);
  add_format(validate, "text or json");
  add_output(validate);

  auto* flat = app.add_subcommand("flatten", "flatten a system into a classic tree");
  add_file(flat);
  flat->add_option("--system", o.system, "system block")->required();
  flat->add_option("--top", o.top, "keep only this top event");
  add_format(flat, "dsl, dot or json (default dsl)");
  add_output(flat);

  auto add_source = [&](CLI::App* sub) {
    auto* sys = sub->add_option("--system", o.system, "system block (flattened)");
    auto* tree = sub->add_option("--tree", o.tree, "tree block");
    sys->excludes(tree);
    sub->add_option("--top", o.top, "top event")->required();
  };
  auto* cutsets = app.add_subcommand("cutsets", "minimal cut sets of a top event");
  add_file(cutsets);
  add_source(cutsets);
  add_format(cutsets, "text or json");
  add_output(cutsets);

  auto* prob = app.add_subcommand("prob", "exact top-event probability");
  add_file(prob);
  add_source(prob);
  add_format(prob, "text or json");
  add_output(prob);

  auto* equiv = app.add_subcommand("equiv", "logical equivalence of two top events");
  add_file(equiv);
  equiv->add_option("--left", o.left, "flatten(<system>).<top> or <name>.<top>")
      ->required();
  equiv->add_option("--right", o.right, "flatten(<system>).<top> or <name>.<top>")
      ->required();
  add_format(equiv, "text or json");
  add_output(equiv);

  auto* eval = app.add_subcommand("eval", "evaluate a top event in one scenario");
  add_file(eval);
  eval->add_option("--system", o.system, "system block")->required();
  eval->add_option("--top", o.top, "top event")->required();
  eval->add_option("--failed", o.failed, "comma-separated failed events");
  add_format(eval, "text or json");
  add_output(eval);

  auto* metrics = app.add_subcommand("metrics", "structural metrics of a system");
  add_file(metrics);
  metrics->add_option("--system", o.system, "system block")->required();
  add_format(metrics, "text or json");
  add_output(metrics);

  auto* fixtures = app.add_subcommand("fixtures", "list or write the bundled fixtures");
  fixtures->add_option("--emit", o.emit, "directory to write the fixtures to");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (flat->parsed() && o.format == "text") o.format = "dsl";

  Session s(out, err);
  try {
    if (validate->parsed()) return cmd_validate(s, o);
    if (flat->parsed()) return cmd_flatten(s, o);
    if (cutsets->parsed()) return cmd_cutsets(s, o);
    if (prob->parsed()) return cmd_prob(s, o);
    if (equiv->parsed()) return cmd_equiv(s, o);
    if (eval->parsed()) return cmd_eval(s, o);
    if (metrics->parsed()) return cmd_metrics(s, o);
    if (fixtures->parsed()) return cmd_fixtures(s, o);
  } catch (const UsageFailure&) {
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cft::cli
