#include "gt/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gt {

namespace {

using nlohmann::json;

json family_to_obj(const SetFamily& f) {
  json sets = json::array();
  for (const auto& s : f.sets) sets.push_back(s.elements());
  return json{{"n", f.n}, {"sets", std::move(sets)}};
}

Bitset bitset_from_list(int n, const json& list, const char* what) {
  if (!list.is_array()) throw JsonError(std::string(what) + ": expected an array of elements");
  Bitset b(n);
  for (const auto& e : list) {
    if (!e.is_number_integer()) throw JsonError(std::string(what) + ": elements must be integers");
    int v = e.get<int>();
    if (v < 1 || v > n) throw JsonError(std::string(what) + ": element out of range 1..n");
    b.set(v);
  }
  return b;
}

SetFamily family_from_obj(const json& obj) {
  if (!obj.is_object() || !obj.contains("n") || !obj.contains("sets"))
    throw JsonError("family: expected {\"n\":..,\"sets\":[..]}");
  int n = obj.at("n").get<int>();
  if (n < 1) throw JsonError("family: n must be >= 1");
  SetFamily f(n);
  for (const auto& s : obj.at("sets")) f.sets.push_back(bitset_from_list(n, s, "family set"));
  return f;
}

json parse(std::string_view text, const char* what) {
  json obj = json::parse(text, nullptr, false);
  if (obj.is_discarded()) throw JsonError(std::string(what) + ": malformed JSON");
  return obj;
}

json witness_to_obj(const Witness& w) {
  json obj = json::object();
  if (!w.set_indices.empty()) obj["sets"] = w.set_indices;
  if (!w.elements.empty()) obj["elements"] = w.elements;
  if (!w.scenarios.empty()) obj["scenarios"] = w.scenarios;
  if (!w.note.empty()) obj["note"] = w.note;
  return obj;
}

}  // namespace

std::string family_to_json(const SetFamily& f) { return family_to_obj(f).dump(); }

SetFamily family_from_json(std::string_view text) {
  return family_from_obj(parse(text, "family"));
}

std::string transcript_to_json(const Transcript& t) {
  json steps = json::array();
  for (const auto& step : t.steps)
    steps.push_back(json{{"q", step.query.elements()}, {"a", step.answer}});
  json obj{{"n", t.n}, {"d", t.d}, {"steps", std::move(steps)}};
  if (t.verdict) obj["verdict"] = t.verdict->elements();
  return obj.dump();
}

Transcript transcript_from_json(std::string_view text) {
  json obj = parse(text, "transcript");
  if (!obj.is_object() || !obj.contains("n") || !obj.contains("d") || !obj.contains("steps"))
    throw JsonError("transcript: expected {\"n\",\"d\",\"steps\"}");
  Transcript t;
  t.n = obj.at("n").get<int>();
  t.d = obj.at("d").get<int>();
  if (t.n < 1 || t.d < 0) throw JsonError("transcript: bad n or d");
  for (const auto& step : obj.at("steps")) {
    if (!step.is_object() || !step.contains("q") || !step.contains("a"))
      throw JsonError("transcript step: expected {\"q\":[..],\"a\":bool}");
    t.steps.push_back({bitset_from_list(t.n, step.at("q"), "transcript query"),
                       step.at("a").get<bool>()});
  }
  if (obj.contains("verdict")) t.verdict = bitset_from_list(t.n, obj.at("verdict"), "verdict");
  return t;
}

std::string report_to_json(const PropertyReport& r) {
  json obj{{"holds", r.holds}};
  if (r.witness) obj["witness"] = witness_to_obj(*r.witness);
  return obj.dump();
}

std::string verdict_to_json(const ModelVerdict& v) {
  json obj{{"solves", v.solves}};
  if (v.failing) {
    json fail = json::object();
    fail["defectives"] = v.failing->defectives;
    if (!v.failing->coalition.empty()) fail["coalition"] = v.failing->coalition;
    fail["clause"] = v.failing->clause;
    obj["failing"] = std::move(fail);
  }
  return obj.dump();
}

std::string sweep_result_to_json(const SweepResult& r) {
  json obj{{"cases", r.cases}, {"mismatches", r.mismatches}};
  if (r.first) {
    obj["first_mismatch"] = json{{"ordinal", r.first->ordinal},
                                 {"family", family_to_obj(r.first->family)},
                                 {"detail", r.first->detail}};
  }
  return obj.dump();
}

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw JsonError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw JsonError("cannot write file: " + path);
  out << text << '\n';
}

}  // namespace

SetFamily load_family(const std::string& path) { return family_from_json(slurp(path)); }
void save_family(const std::string& path, const SetFamily& f) { spit(path, family_to_json(f)); }
Transcript load_transcript(const std::string& path) { return transcript_from_json(slurp(path)); }
void save_transcript(const std::string& path, const Transcript& t) {
  spit(path, transcript_to_json(t));
}

}  // namespace gt
