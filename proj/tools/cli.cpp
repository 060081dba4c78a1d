#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "iqa/iqa.hpp"

namespace iqa::cli {
namespace {

namespace fs = std::filesystem;

struct CommonOptions {
  std::string case_path;
  std::string audit_log;
  std::string actor;
  std::string policy;
  std::string weights_path;
};

void print_error(std::ostream& err, const Error& e) {
  err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
  for (const auto& f : e.findings()) err << "  " << f.locator << ": " << f.message << "\n";
}

std::string resolve_actor(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* user = std::getenv("USER"); user != nullptr && *user != '\0') return user;
  return "unknown";
}

fs::path resolve_audit_log(const CommonOptions& opts, const CaseFile* c) {
  if (!opts.audit_log.empty()) return opts.audit_log;
  if (const char* env = std::getenv(kAuditLogEnv); env != nullptr && *env != '\0') return env;
  const fs::path case_path(opts.case_path);
  if (c != nullptr && c->audit_reference() && !c->audit_reference()->path.empty()) {
    const fs::path ref(c->audit_reference()->path);
    return ref.is_absolute() ? ref : case_path.parent_path() / ref;
  }
  fs::path p = case_path;
  p.replace_extension(".audit.jsonl");
  return p;
}

CaseFile load_case(const CommonOptions& opts) {
  CaseFile c = parse_case(read_file(opts.case_path));
  if (!opts.policy.empty()) {
    const auto policy = parse_missing_policy(opts.policy);
    if (!policy) {
      throw Error(ErrorCode::InvalidArgument, "unknown --policy '" + opts.policy +
                                                  "' (strict, available-only, impute-zero)");
    }
    c.set_missing_policy(*policy);
  }
  if (!opts.weights_path.empty()) c.set_weights(parse_weights(read_file(opts.weights_path)));
  return c;
}

int exit_code_for(const Error& e) {
  return e.code() == ErrorCode::SinkUnavailable ? kIoFailure : kDomainFailure;
}

// Runs `body`, mapping library errors onto the exit-code contract.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const Error& e) {
    print_error(err, e);
    return exit_code_for(e);
  } catch (const fs::filesystem_error& e) {
    err << "error [io]: " << e.what() << "\n";
    return kIoFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainFailure;
  }
}

int cmd_validate(const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  std::string bytes;
  try {
    bytes = read_file(opts.case_path);
  } catch (const Error& e) {
    print_error(err, e);
    return kIoFailure;
  }
  try {
    const CaseFile c = parse_case(bytes);
    out << opts.case_path << ": case " << c.case_id() << ", " << c.devices().size()
        << " device(s)\n0 findings\n";
    return kOk;
  } catch (const Error& e) {
    const std::size_t n = e.findings().empty() ? 1 : e.findings().size();
    out << opts.case_path << ": " << to_string(e.code()) << "\n";
    if (e.findings().empty()) out << "  " << e.what() << "\n";
    for (const auto& f : e.findings()) out << "  " << f.locator << ": " << f.message << "\n";
    out << n << " finding" << (n == 1 ? "" : "s") << "\n";
    return kDomainFailure;
  }
}

int cmd_assess(const CommonOptions& opts, const std::string& out_dir, const std::string& format,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (format != "text" && format != "csv") {
      throw Error(ErrorCode::InvalidArgument, "unknown --format '" + format + "' (text, csv)");
    }
    const CaseFile c = load_case(opts);
    AssessmentReport report = build_report(c);

    AuditLog log(resolve_audit_log(opts, &c));
    const std::string actor = resolve_actor(opts.actor);
    if (c.threshold()) {
      report.gate = gate(c, *c.threshold());
      record_gate(log, *report.gate, actor, c.case_id());
    }

    const std::string text = render_report(report);
    const std::string csv = export_table(report);
    nlohmann::json outputs = nlohmann::json::array();
    if (!out_dir.empty()) {
      fs::create_directories(out_dir);
      const fs::path report_path = fs::path(out_dir) / (c.case_id() + ".report.txt");
      const fs::path csv_path = fs::path(out_dir) / (c.case_id() + ".csv");
      write_file_atomic(report_path, text);
      write_file_atomic(csv_path, csv);
      outputs.push_back(report_path.string());
      outputs.push_back(csv_path.string());
    }
    out << (format == "csv" ? csv : text);

    std::string total;
    for (const auto& a : report.aggregates) {
      if (a.label == "IQA_tot" && a.value) total = format_percent(*a.value);
    }
    log.append(AuditAction::ReportEmitted, actor,
               {{"case_id", c.case_id()},
                {"policy", std::string(to_string(c.missing_policy()))},
                {"iqa_tot_percent", total},
                {"discrepancies", find_discrepancies(report).size()},
                {"outputs", outputs}});
    return kOk;
  });
}

int cmd_gate(const CommonOptions& opts, const std::string& cutoff, const std::string& justify,
             bool use_expected, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!has_content(justify)) {
      throw Error(ErrorCode::JustificationRequired,
                  "--justify is required: a threshold decision must be explained");
    }
    const CaseFile c = load_case(opts);
    const ThresholdPolicy policy(Rational::parse(cutoff), justify);

    GateOutcome outcome;
    if (use_expected) {
      if (!c.expected() || c.expected()->device_iqa.empty()) {
        throw Error(ErrorCode::InvalidArgument, "case has no expected per-device values");
      }
      std::vector<std::pair<std::string, Rational>> values;
      for (const auto& d : c.devices()) {
        const auto it = c.expected()->device_iqa.find(d.device_id());
        if (it == c.expected()->device_iqa.end()) {
          throw Error(ErrorCode::InvalidArgument, "no expected value for device " + d.device_id());
        }
        values.emplace_back(d.device_id(), it->second.to_rational());
      }
      outcome = gate_values(values, policy);
    } else {
      outcome = gate(c, policy);
    }

    AuditLog log(resolve_audit_log(opts, &c));
    record_gate(log, outcome, resolve_actor(opts.actor), c.case_id());

    auto list = [](const std::vector<std::string>& ids) {
      std::string s;
      for (const auto& id : ids) s += (s.empty() ? "" : ", ") + id;
      return s.empty() ? std::string("none") : s;
    };
    out << "cutoff: " << format_percent(outcome.cutoff) << "%\n";
    out << "justification: " << outcome.justification << "\n";
    for (const auto& [id, v] : outcome.per_device_value) {
      out << "  device " << id << ": " << format_percent(v) << "% "
          << (v >= outcome.cutoff ? "retained" : "discarded") << "\n";
    }
    out << "retained: " << list(outcome.retained) << "\n";
    out << "discarded: " << list(outcome.discarded) << "\n";
    return kOk;
  });
}

int cmd_chart(const CommonOptions& opts, const std::string& view, const std::string& out_path,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const CaseFile c = load_case(opts);
    RadarSpec spec;
    if (view == "devices") {
      spec = case_overlay(c);
    } else if (view == "categories") {
      spec = category_chart(build_report(c));
    } else if (view == "layers") {
      spec = layer_chart(build_report(c));
    } else if (view == "model") {
      spec = model_chart();
    } else if (view.rfind("device:", 0) == 0) {
      spec = device_chart(c, view.substr(7));
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown --view '" + view +
                                                  "' (devices, categories, layers, model, "
                                                  "device:<id>)");
    }
    const std::string svg = render_radar(spec);
    if (out_path.empty()) {
      out << svg;
    } else {
      write_file_atomic(out_path, svg);
      out << "wrote " << out_path << " (" << spec.series.size() << " series, " << spec.axes.size()
          << " axes)\n";
    }
    return kOk;
  });
}

std::vector<Answer> read_answers_file(const std::string& path) {
  const std::string bytes = read_file(path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::SyntaxError, "malformed answers file", {{path, e.what()}});
  }
  if (!doc.is_object() || !doc.contains("answers") || !doc["answers"].is_array()) {
    throw Error(ErrorCode::SchemaError, "answers file must be {\"answers\": [...]}");
  }
  std::vector<Answer> answers;
  std::vector<Finding> findings;
  const auto& list = doc["answers"];
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string loc = "answers[" + std::to_string(i) + "]";
    const auto& a = list[i];
    if (!a.is_object() || !a.contains("question") || !a["question"].is_number_unsigned() ||
        a["question"].get<std::size_t>() == 0 || !a.contains("note") || !a["note"].is_string() ||
        !a.contains("level") || !a["level"].is_string()) {
      findings.push_back({loc, "expected {\"question\": <1-based>, \"level\": <level or 0.00-1.00>, "
                               "\"note\": <text>}"});
      continue;
    }
    const std::string level = a["level"].get<std::string>();
    std::variant<AnswerLevel, Hundredths> response;
    if (const auto l = parse_answer_level(level)) {
      response = *l;
    } else {
      try {
        response = Hundredths::parse(level);
      } catch (const Error& e) {
        findings.push_back({loc + "/level", e.what()});
        continue;
      }
    }
    try {
      answers.emplace_back(a["question"].get<std::size_t>() - 1, response,
                           a["note"].get<std::string>());
    } catch (const Error& e) {
      findings.push_back({loc, e.what()});
    }
  }
  if (!findings.empty()) {
    throw Error(ErrorCode::ValidationError, "invalid answers file", std::move(findings));
  }
  return answers;
}

std::vector<Answer> prompt_answers(FactorId factor, std::istream& in, std::ostream& out) {
  const auto& tpl = checklist_for(factor);
  std::vector<Answer> answers;
  for (std::size_t q = 0; q < tpl.questions.size(); ++q) {
    out << "Q" << (q + 1) << "/" << tpl.questions.size() << " [" << to_string(factor) << "] "
        << tpl.questions[q] << "\n";
    std::optional<std::variant<AnswerLevel, Hundredths>> response;
    std::string line;
    while (!response) {
      out << "  answer (No, Poor, Partial, Good, Full, or 0.00-1.00): " << std::flush;
      if (!std::getline(in, line)) return answers;
      if (const auto l = parse_answer_level(line)) {
        response = *l;
      } else {
        try {
          const Hundredths h = Hundredths::parse(line);
          if (h >= kScoreMin && h <= kScoreMax) response = h;
        } catch (const Error&) {
        }
        if (!response) out << "  not a level or a value in [0.00, 1.00]\n";
      }
    }
    std::string note;
    while (!has_content(note)) {
      out << "  note (required): " << std::flush;
      if (!std::getline(in, note)) return answers;
    }
    answers.emplace_back(q, *response, note);
  }
  return answers;
}

int cmd_checklist(const CommonOptions& opts, const std::string& device_id,
                  const std::string& factor_name, const std::string& answers_path,
                  const std::string& out_path, std::istream& in, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, [&] {
    CaseFile c = load_case(opts);
    const auto factor = parse_factor(factor_name);
    if (!factor) throw Error(ErrorCode::InvalidArgument, "unknown factor '" + factor_name + "'");
    const DeviceAssessment* existing = c.find_device(device_id);
    if (existing == nullptr) {
      throw Error(ErrorCode::UnknownDevice, "no device '" + device_id + "' in case " + c.case_id());
    }

    const std::vector<Answer> answers =
        answers_path.empty() ? prompt_answers(*factor, in, out) : read_answers_file(answers_path);
    const std::string actor = resolve_actor(opts.actor);
    std::string provenance = "checklist answered by " + actor;
    if (!answers_path.empty()) provenance += " (answers file " + answers_path + ")";
    const FactorScore score = score_answers(*factor, answers, provenance);

    DeviceAssessment device = *existing;
    const std::optional<FactorScore> previous = device.set_score(score);

    const fs::path log_path = resolve_audit_log(opts, &c);
    AuditLog log(log_path);
    nlohmann::json detail = {{"case_id", c.case_id()},
                             {"device_id", device_id},
                             {"factor", std::string(to_string(*factor))},
                             {"new_value", score.value().to_string()}};
    AuditAction action = AuditAction::ScoreSet;
    if (previous) {
      action = AuditAction::ScoreChanged;
      detail["old_value"] = previous->value().to_string();
      detail["old_justification"] = previous->justification();
    }
    const AuditEvent event = log.append(action, actor, std::move(detail), score.justification());

    c.replace_device(std::move(device));
    std::string ref_path = log_path.string();
    if (c.audit_reference()) ref_path = c.audit_reference()->path;
    c.set_audit_reference(AuditReference{ref_path, event.sequence});

    const std::string target = out_path.empty() ? opts.case_path : out_path;
    write_file_atomic(target, serialize_case(c));
    out << "device " << device_id << " " << to_string(*factor) << " = "
        << score.value().to_string();
    if (previous) out << " (was " << previous->value().to_string() << ")";
    out << "\n" << to_string(action) << " recorded as audit event #" << event.sequence << "\n";
    return kOk;
  });
}

void add_common(CLI::App* cmd, CommonOptions& opts, bool scoring_flags) {
  cmd->add_option("case", opts.case_path, "Case file (.json)")->required();
  if (scoring_flags) {
    cmd->add_option("--policy", opts.policy,
                    "Missing-factor policy: strict, available-only, impute-zero");
    cmd->add_option("--weights", opts.weights_path, "Weights document (factor -> weight)");
  }
  cmd->add_option("--audit-log", opts.audit_log,
                  std::string("Audit log (.jsonl); defaults to $") + kAuditLogEnv +
                      ", then the case's audit_log reference, then <case>.audit.jsonl");
  cmd->add_option("--actor", opts.actor, "Examiner recorded in audit events (default $USER)");
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Information quality assessment for IoT forensic evidence", "iqa"};
  app.require_subcommand(1);
  CommonOptions opts;

  auto* validate = app.add_subcommand("validate", "Parse and validate a case file");
  add_common(validate, opts, false);

  std::string out_dir;
  std::string format = "text";
  auto* assess = app.add_subcommand("assess", "Score a case and emit the report and CSV table");
  add_common(assess, opts, true);
  assess->add_option("--out", out_dir, "Directory for <case_id>.report.txt and <case_id>.csv");
  assess->add_option("--format", format, "What to print on stdout: text or csv");

  std::string cutoff;
  std::string justify;
  bool use_expected = false;
  auto* gate_cmd = app.add_subcommand("gate", "Apply an IN/OUT threshold to per-device IQA");
  add_common(gate_cmd, opts, true);
  gate_cmd->add_option("--cutoff", cutoff, "Cutoff percentage in [0, 100]")->required();
  gate_cmd->add_option("--justify", justify, "Why this cutoff (required)");
  gate_cmd->add_flag("--use-expected", use_expected,
                     "Gate the case's expected per-device values instead of recomputed ones");

  std::string view = "devices";
  std::string chart_out;
  auto* chart = app.add_subcommand("chart", "Render a radar chart as SVG");
  add_common(chart, opts, true);
  chart->add_option("--view", view, "devices, categories, layers, model, or device:<id>");
  chart->add_option("--out", chart_out, "SVG output path (stdout if omitted)");

  std::string device_id;
  std::string factor;
  std::string answers;
  std::string case_out;
  auto* checklist = app.add_subcommand("checklist", "Score one factor of one device by checklist");
  add_common(checklist, opts, false);
  checklist->add_option("--device", device_id, "Device id")->required();
  checklist->add_option("--factor", factor, "Factor (DTC, DST, CS, CM, SR, PC, TDA, OT, OS)")
      ->required();
  checklist->add_option("--answers", answers, "Pre-filled answers file; prompts if omitted");
  checklist->add_option("--out", case_out, "Write the updated case here instead of in place");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run 'iqa --help' for usage\n";
    return kDomainFailure;
  }

  if (validate->parsed()) return cmd_validate(opts, out, err);
  if (assess->parsed()) return cmd_assess(opts, out_dir, format, out, err);
  if (gate_cmd->parsed()) return cmd_gate(opts, cutoff, justify, use_expected, out, err);
  if (chart->parsed()) return cmd_chart(opts, view, chart_out, out, err);
  if (checklist->parsed()) {
    return cmd_checklist(opts, device_id, factor, answers, case_out, in, out, err);
  }
  return kDomainFailure;
}

}  // namespace iqa::cli
