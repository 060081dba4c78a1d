#include "iqa/case_io.hpp"

#include <unistd.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "iqa/errors.hpp"

namespace iqa {
namespace {

using nlohmann::json;

const std::set<std::string> kTopLevelKeys = {
    "audit_log", "case_id", "description", "devices", "expected", "missing_policy",
    "schema_version", "threshold", "weights"};
const std::set<std::string> kDeviceKeys = {"device_id", "kind", "layered_scores", "scores"};
const std::set<std::string> kScoreKeys = {"justification", "provenance", "value"};
const std::set<std::string> kAggregateLabels = {"IQA_I", "IQA_II", "IQA_III", "IQA_tot",
                                                "IQA_p", "IQA_n", "IQA_a"};

// Collects findings while walking a document.
class Checker {
 public:
  void schema(std::string locator, std::string message) {
    has_schema_ = true;
    findings_.push_back({std::move(locator), std::move(message)});
  }
  void invalid(std::string locator, std::string message) {
    findings_.push_back({std::move(locator), std::move(message)});
  }

  bool ok() const { return findings_.empty(); }

  [[noreturn]] void raise(const std::string& what) {
    throw Error(has_schema_ ? ErrorCode::SchemaError : ErrorCode::ValidationError,
                what + ": " + std::to_string(findings_.size()) + " finding(s)",
                std::move(findings_));
  }

  void unknown_keys(const json& obj, const std::set<std::string>& allowed,
                    const std::string& locator) {
    for (const auto& [key, _] : obj.items()) {
      if (!allowed.contains(key)) schema(join(locator, key), "unknown field");
    }
  }

  // Returns the member if it exists and has the right type; reports otherwise.
  const json* field(const json& obj, const std::string& key, json::value_t type,
                    const std::string& locator, bool required) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) schema(join(locator, key), "required field missing");
      return nullptr;
    }
    const bool type_ok = it->type() == type ||
                         (type == json::value_t::number_integer &&
                          it->type() == json::value_t::number_unsigned);
    if (!type_ok) {
      schema(join(locator, key), std::string("expected ") + type_name(type) + ", found " +
                                     it->type_name());
      return nullptr;
    }
    return &*it;
  }

  static std::string join(const std::string& base, const std::string& key) {
    return base.empty() ? key : base + "/" + key;
  }

 private:
  static const char* type_name(json::value_t t) {
    switch (t) {
      case json::value_t::object: return "object";
      case json::value_t::array: return "array";
      case json::value_t::string: return "string";
      case json::value_t::number_integer: return "integer";
      default: return "value";
    }
  }

  std::vector<Finding> findings_;
  bool has_schema_ = false;
};

std::optional<Hundredths> parse_hundredths(Checker& chk, const std::string& text,
                                           const std::string& loc) {
  try {
    return Hundredths::parse(text);
  } catch (const Error& e) {
    chk.invalid(loc, e.code() == ErrorCode::PrecisionError
                         ? "more than two decimal places: '" + text + "'"
                         : "not a decimal number: '" + text + "'");
    return std::nullopt;
  }
}

std::optional<Rational> parse_rational(Checker& chk, const json& value, const std::string& loc) {
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (!value.is_string()) {
    chk.schema(loc, "expected a decimal string");
    return std::nullopt;
  }
  try {
    return Rational::parse(value.get<std::string>());
  } catch (const Error&) {
    chk.invalid(loc, "not a number: '" + value.get<std::string>() + "'");
    return std::nullopt;
  }
}

struct ScoreFields {
  Hundredths value;
  std::string justification;
  std::string provenance;
};

std::optional<ScoreFields> read_score(Checker& chk, const json& node, const std::string& loc) {
  if (!node.is_object()) {
    chk.schema(loc, "expected object with value, justification, provenance");
    return std::nullopt;
  }
  chk.unknown_keys(node, kScoreKeys, loc);
  const json* value = chk.field(node, "value", json::value_t::string, loc, true);
  const json* just = chk.field(node, "justification", json::value_t::string, loc, true);
  const json* prov = chk.field(node, "provenance", json::value_t::string, loc, true);
  bool good = value && just && prov;

  std::optional<Hundredths> v;
  if (value) {
    v = parse_hundredths(chk, value->get<std::string>(), Checker::join(loc, "value"));
    if (v && (*v < kScoreMin || *v > kScoreMax)) {
      chk.invalid(Checker::join(loc, "value"),
                  "value " + value->get<std::string>() + " outside [0.00, 1.00]");
      v.reset();
    }
    good = good && v.has_value();
  }
  if (just && !has_content(just->get<std::string>())) {
    chk.invalid(Checker::join(loc, "justification"), "justification is empty");
    good = false;
  }
  if (prov && !has_content(prov->get<std::string>())) {
    chk.invalid(Checker::join(loc, "provenance"), "provenance is empty");
    good = false;
  }
  if (!good || !v) return std::nullopt;
  return ScoreFields{v.value(), just->get<std::string>(), prov->get<std::string>()};
}

std::optional<DeviceAssessment> read_device(Checker& chk, const json& node, std::size_t index,
                                            std::set<std::string>& seen_ids) {
  std::string loc = "devices[" + std::to_string(index) + "]";
  if (!node.is_object()) {
    chk.schema(loc, "expected object");
    return std::nullopt;
  }
  const json* id = chk.field(node, "device_id", json::value_t::string, loc, true);
  std::string device_id;
  if (id) {
    device_id = id->get<std::string>();
    if (!has_content(device_id)) {
      chk.invalid(Checker::join(loc, "device_id"), "device id is empty");
    } else {
      loc = "devices[device:" + device_id + "]";
      if (!seen_ids.insert(device_id).second) chk.invalid(loc, "duplicate device id");
    }
  }
  chk.unknown_keys(node, kDeviceKeys, loc);
  const json* kind = chk.field(node, "kind", json::value_t::string, loc, true);
  const json* scores = chk.field(node, "scores", json::value_t::object, loc, true);
  const json* layered = chk.field(node, "layered_scores", json::value_t::object, loc, false);

  std::optional<DeviceAssessment> device;
  if (id && has_content(device_id) && kind) device.emplace(device_id, kind->get<std::string>());

  if (scores) {
    for (const auto& [key, value] : scores->items()) {
      const std::string sloc = loc + "/scores/" + key;
      const auto factor = parse_factor(key);
      if (!factor) {
        chk.schema(sloc, "unknown factor '" + key + "'");
        continue;
      }
      if (auto s = read_score(chk, value, sloc); s && device) {
        device->set_score(FactorScore(*factor, s->value, s->justification, s->provenance));
      }
    }
  }
  if (layered) {
    for (const auto& [fkey, per_layer] : layered->items()) {
      const std::string floc = loc + "/layered_scores/" + fkey;
      const auto factor = parse_factor(fkey);
      if (!factor) {
        chk.schema(floc, "unknown factor '" + fkey + "'");
        continue;
      }
      if (!per_layer.is_object()) {
        chk.schema(floc, "expected object keyed by layer");
        continue;
      }
      for (const auto& [lkey, value] : per_layer.items()) {
        const std::string lloc = floc + "/" + lkey;
        const auto layer = parse_layer(lkey);
        if (!layer) {
          chk.schema(lloc, "unknown layer '" + lkey + "' (physical, network, application)");
          continue;
        }
        if (auto s = read_score(chk, value, lloc); s && device) {
          device->set_layered_score(
              LayeredFactorScore(*factor, *layer, s->value, s->justification, s->provenance));
        }
      }
    }
  }
  return device;
}

std::optional<ExpectedValues> read_expected(Checker& chk, const json& node,
                                            const std::set<std::string>& device_ids) {
  const std::string loc = "expected";
  chk.unknown_keys(node, {"aggregates", "device_iqa", "notes", "source"}, loc);
  ExpectedValues out;
  if (const json* src = chk.field(node, "source", json::value_t::string, loc, false)) {
    out.source = src->get<std::string>();
  }
  auto read_map = [&](const char* key, std::map<std::string, Hundredths>& dest, bool devices) {
    const json* m = chk.field(node, key, json::value_t::object, loc, false);
    if (!m) return;
    for (const auto& [k, v] : m->items()) {
      const std::string eloc = loc + "/" + key + "/" + k;
      if (devices && !device_ids.contains(k)) {
        chk.invalid(eloc, "no device with this id");
      } else if (!devices && !kAggregateLabels.contains(k)) {
        chk.schema(eloc, "unknown aggregate label");
        continue;
      }
      if (!v.is_string()) {
        chk.schema(eloc, "expected a decimal string");
        continue;
      }
      if (auto h = parse_hundredths(chk, v.get<std::string>(), eloc)) {
        if (*h < Hundredths(0) || *h > Hundredths(10000)) {
          chk.invalid(eloc, "percentage outside [0, 100]");
        } else {
          dest[k] = *h;
        }
      }
    }
  };
  read_map("device_iqa", out.device_iqa, true);
  read_map("aggregates", out.aggregates, false);
  if (const json* notes = chk.field(node, "notes", json::value_t::array, loc, false)) {
    for (std::size_t i = 0; i < notes->size(); ++i) {
      if (!(*notes)[i].is_string()) {
        chk.schema(loc + "/notes[" + std::to_string(i) + "]", "expected string");
      } else {
        out.notes.push_back((*notes)[i].get<std::string>());
      }
    }
  }
  return out;
}

json score_to_json(Hundredths value, const std::string& justification,
                   const std::string& provenance) {
  return {{"value", value.to_string()},
          {"justification", justification},
          {"provenance", provenance}};
}

}  // namespace

std::string to_decimal_string(const Rational& value) {
  BigInt den = value.denominator();
  int places = 0;
  while (den % 10 == 0) {
    den /= 10;
    ++places;
  }
  int twos = 0;
  int fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return value.to_string();
  places += std::max(twos, fives);
  return value.to_fixed(places);
}

CaseFile parse_case(std::string_view bytes) {
  json doc;
  try {
    doc = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SyntaxError, "malformed case document",
                {{"byte " + std::to_string(e.byte), e.what()}});
  }
  Checker chk;
  if (!doc.is_object()) {
    chk.schema("", "case document must be a JSON object");
    chk.raise("invalid case document");
  }
  chk.unknown_keys(doc, kTopLevelKeys, "");

  int version = kSchemaVersion;
  if (const json* v = chk.field(doc, "schema_version", json::value_t::number_integer, "", true)) {
    const auto raw = v->get<std::int64_t>();
    if (raw != kSchemaVersion) {
      chk.schema("schema_version", "unsupported schema_version " + std::to_string(raw) +
                                       " (supported: " + std::to_string(kSchemaVersion) + ")");
    } else {
      version = static_cast<int>(raw);
    }
  }
  std::string case_id;
  if (const json* id = chk.field(doc, "case_id", json::value_t::string, "", true)) {
    case_id = id->get<std::string>();
    if (!has_content(case_id)) chk.invalid("case_id", "case id is empty");
  }

  std::vector<DeviceAssessment> devices;
  std::set<std::string> seen_ids;
  if (const json* list = chk.field(doc, "devices", json::value_t::array, "", true)) {
    for (std::size_t i = 0; i < list->size(); ++i) {
      if (auto d = read_device(chk, (*list)[i], i, seen_ids)) {
        if (std::count_if(devices.begin(), devices.end(), [&](const DeviceAssessment& x) {
              return x.device_id() == d->device_id();
            }) == 0) {
          devices.push_back(std::move(*d));
        }
      }
    }
  }

  MissingPolicy policy = MissingPolicy::AvailableOnly;
  if (const json* p = chk.field(doc, "missing_policy", json::value_t::string, "", false)) {
    if (const auto parsed = parse_missing_policy(p->get<std::string>())) {
      policy = *parsed;
    } else {
      chk.schema("missing_policy", "unknown policy '" + p->get<std::string>() +
                                       "' (strict, available_only, impute_zero)");
    }
  }

  std::optional<Weights> weights;
  if (const json* w = chk.field(doc, "weights", json::value_t::object, "", false)) {
    std::map<FactorId, Rational> overrides;
    bool good = true;
    for (const auto& [k, v] : w->items()) {
      const std::string wloc = "weights/" + k;
      const auto factor = parse_factor(k);
      if (!factor) {
        chk.schema(wloc, "unknown factor '" + k + "'");
        good = false;
        continue;
      }
      if (auto r = parse_rational(chk, v, wloc)) {
        if (r->is_negative()) {
          chk.invalid(wloc, "weight must be nonnegative");
          good = false;
        } else {
          overrides[*factor] = *r;
        }
      } else {
        good = false;
      }
    }
    if (good) {
      try {
        weights = Weights(overrides);
      } catch (const Error& e) {
        chk.invalid("weights", e.what());
      }
    }
  }

  std::optional<ThresholdPolicy> threshold;
  if (const json* t = chk.field(doc, "threshold", json::value_t::object, "", false)) {
    chk.unknown_keys(*t, {"cutoff_percent", "justification"}, "threshold");
    const json* cut = t->contains("cutoff_percent") ? &(*t)["cutoff_percent"] : nullptr;
    if (!cut) chk.schema("threshold/cutoff_percent", "required field missing");
    const json* just = chk.field(*t, "justification", json::value_t::string, "threshold", true);
    std::optional<Rational> cutoff;
    if (cut) cutoff = parse_rational(chk, *cut, "threshold/cutoff_percent");
    if (cutoff && (*cutoff < Rational(0) || *cutoff > Rational(100))) {
      chk.invalid("threshold/cutoff_percent", "cutoff outside [0, 100]");
      cutoff.reset();
    }
    if (just && !has_content(just->get<std::string>())) {
      chk.invalid("threshold/justification", "threshold requires a justification");
    } else if (cutoff && just) {
      threshold.emplace(*cutoff, just->get<std::string>());
    }
  }

  std::optional<AuditReference> audit;
  if (const json* a = chk.field(doc, "audit_log", json::value_t::object, "", false)) {
    chk.unknown_keys(*a, {"last_sequence", "path"}, "audit_log");
    const json* path = chk.field(*a, "path", json::value_t::string, "audit_log", true);
    const json* seq = chk.field(*a, "last_sequence", json::value_t::number_integer, "audit_log", true);
    if (seq && seq->get<std::int64_t>() < 0) {
      chk.invalid("audit_log/last_sequence", "must be nonnegative");
    } else if (path && seq) {
      audit = AuditReference{path->get<std::string>(), seq->get<std::uint64_t>()};
    }
  }

  std::optional<ExpectedValues> expected;
  if (const json* e = chk.field(doc, "expected", json::value_t::object, "", false)) {
    expected = read_expected(chk, *e, seen_ids);
  }

  std::string description;
  if (const json* d = chk.field(doc, "description", json::value_t::string, "", false)) {
    description = d->get<std::string>();
  }

  if (!chk.ok()) chk.raise("invalid case document");

  CaseFile c(case_id, std::move(devices));
  c.set_schema_version(version);
  c.set_missing_policy(policy);
  c.set_weights(std::move(weights));
  c.set_threshold(std::move(threshold));
  c.set_audit_reference(std::move(audit));
  c.set_expected(std::move(expected));
  c.set_description(std::move(description));
  return c;
}

std::string serialize_case(const CaseFile& c) {
  json doc = json::object();
  doc["schema_version"] = c.schema_version();
  doc["case_id"] = c.case_id();
  if (!c.description().empty()) doc["description"] = c.description();
  doc["missing_policy"] = std::string(to_string(c.missing_policy()));

  json devices = json::array();
  for (const auto& d : c.devices()) {
    json scores = json::object();
    json layered = json::object();
    for (FactorId f : kAllFactors) {
      if (const auto* s = d.score(f)) {
        scores[std::string(to_string(f))] =
            score_to_json(s->value(), s->justification(), s->provenance());
      }
      for (Layer l : kAllLayers) {
        if (const auto* s = d.layered_score(f, l)) {
          layered[std::string(to_string(f))][std::string(to_string(l))] =
              score_to_json(s->value(), s->justification(), s->provenance());
        }
      }
    }
    json node = {{"device_id", d.device_id()}, {"kind", d.kind()}, {"scores", std::move(scores)}};
    if (!layered.empty()) node["layered_scores"] = std::move(layered);
    devices.push_back(std::move(node));
  }
  doc["devices"] = std::move(devices);

  if (const auto& w = c.weights()) {
    json weights = json::object();
    for (FactorId f : kAllFactors) weights[std::string(to_string(f))] = to_decimal_string(w->weight(f));
    doc["weights"] = std::move(weights);
  }
  if (const auto& t = c.threshold()) {
    doc["threshold"] = {{"cutoff_percent", to_decimal_string(t->cutoff())},
                        {"justification", t->justification()}};
  }
  if (const auto& a = c.audit_reference()) {
    doc["audit_log"] = {{"path", a->path}, {"last_sequence", a->last_sequence}};
  }
  if (const auto& e = c.expected()) {
    json ex = json::object();
    if (!e->source.empty()) ex["source"] = e->source;
    json dev = json::object();
    for (const auto& [k, v] : e->device_iqa) dev[k] = v.to_string();
    json agg = json::object();
    for (const auto& [k, v] : e->aggregates) agg[k] = v.to_string();
    if (!dev.empty()) ex["device_iqa"] = std::move(dev);
    if (!agg.empty()) ex["aggregates"] = std::move(agg);
    if (!e->notes.empty()) ex["notes"] = e->notes;
    doc["expected"] = std::move(ex);
  }
  return doc.dump(2) + "\n";
}

Weights parse_weights(std::string_view bytes) {
  json doc;
  try {
    doc = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SyntaxError, "malformed weights document",
                {{"byte " + std::to_string(e.byte), e.what()}});
  }
  Checker chk;
  std::map<FactorId, Rational> overrides;
  if (!doc.is_object()) {
    chk.schema("", "weights document must be an object mapping factor to weight");
    chk.raise("invalid weights document");
  }
  for (const auto& [k, v] : doc.items()) {
    const auto factor = parse_factor(k);
    if (!factor) {
      chk.schema(k, "unknown factor '" + k + "'");
      continue;
    }
    if (auto r = parse_rational(chk, v, k)) {
      if (r->is_negative()) {
        chk.invalid(k, "weight must be nonnegative");
      } else {
        overrides[*factor] = *r;
      }
    }
  }
  if (!chk.ok()) chk.raise("invalid weights document");
  return Weights(overrides);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::SinkUnavailable, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::SinkUnavailable, "cannot read " + path.string());
  return buf.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view bytes) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::SinkUnavailable, "cannot write " + tmp.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw Error(ErrorCode::SinkUnavailable, "cannot write " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw Error(ErrorCode::SinkUnavailable,
                "cannot replace " + path.string() + ": " + ec.message());
  }
}

}  // namespace iqa
