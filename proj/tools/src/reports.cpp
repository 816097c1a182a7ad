#include "toric_cli/reports.hpp"

#include <algorithm>
#include <functional>

#include "toric/smoothness.hpp"

#ifndef TORIC_VERSION
#define TORIC_VERSION "0.0.0"
#endif

namespace toric::cli {

std::string_view tool_version() { return TORIC_VERSION; }

json report_header(std::string_view command) {
  return {{"tool", kToolName}, {"version", tool_version()}, {"command", command}};
}

json certificate_to_json(const DecompositionCertificate& certificate) {
  json out = json::array();
  for (const auto& e : certificate.entries())
    out.push_back({{"weight", vector_to_json(e.weight)}, {"basis", rows_to_json(e.subspace.integer_basis())}});
  return out;
}

DecompositionCertificate certificate_from_json(const Cone& cone, const json& j) {
  if (!j.is_array()) throw DocumentError("certificate: expected an array");
  const std::size_t n = cone.ambient_rank();
  std::vector<DecompositionCertificate::Entry> entries;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = "certificate[" + std::to_string(i) + "]";
    if (!j[i].is_object() || !j[i].contains("weight") || !j[i].contains("basis") || !j[i]["basis"].is_array())
      throw DocumentError(where + ": expected {\"weight\", \"basis\"}");
    Weight w(vector_from_json(j[i]["weight"], n, where + ".weight"));
    std::vector<std::vector<Integer>> rows;
    for (std::size_t k = 0; k < j[i]["basis"].size(); ++k)
      rows.push_back(vector_from_json(j[i]["basis"][k], n, where + ".basis[" + std::to_string(k) + "]"));
    entries.push_back({std::move(w), RationalSubspace::span_integer_rows(n, rows)});
  }
  return DecompositionCertificate(cone, std::move(entries));
}

namespace {

json smooth_fields(const Cone& c) {
  const auto rep = is_smooth_cone(c);
  json e{{"smooth", rep.smooth}};
  if (rep.failure) e["reason"] = rep.failure->describe();
  return e;
}

json locally_free_fields(const Cone& c) {
  const auto rep = decide_tangent_locally_free(c);
  json e{{"locally_free", rep.locally_free}};
  json rays_json = json::array();
  for (const auto& r : rays(c)) rays_json.push_back(vector_to_json(r.generator()));
  e["rays"] = rays_json;
  json witnesses = json::array();
  for (const auto& [ray, m] : rep.witnesses) witnesses.push_back(vector_to_json(m));
  e["witnesses"] = witnesses;
  if (rep.certificate) e["certificate"] = certificate_to_json(*rep.certificate);
  if (rep.failure) {
    e["reason"] = rep.failure->describe();
    if (rep.failure->ray) e["ray"] = vector_to_json(rep.failure->ray->generator());
  }
  return e;
}

json agreement_fields(const Cone& c) {
  json s = smooth_fields(c);
  json l = locally_free_fields(c);
  json e{{"smooth", s["smooth"]}, {"locally_free", l["locally_free"]}};
  e["agree"] = s["smooth"] == l["locally_free"];
  if (s.contains("reason")) e["smooth_reason"] = s["reason"];
  if (l.contains("reason")) e["locally_free_reason"] = l["reason"];
  for (const char* key : {"rays", "witnesses", "certificate", "ray"})
    if (l.contains(key)) e[key] = l[key];
  return e;
}

Verdict assemble(std::string_view command, const Document& doc, const std::string& verdict_key,
                 const std::function<json(const Cone&)>& fields) {
  Verdict v{report_header(command), true};
  json& r = v.report;
  r["input"] = document_to_json(doc);
  if (const Cone* c = std::get_if<Cone>(&doc)) {
    r["kind"] = "cone";
    r["cone"] = cone_to_json(*c);
    r.update(fields(*c));
    v.affirmative = r[verdict_key].get<bool>();
    return v;
  }
  r["kind"] = "fan";
  json entries = json::array();
  json offending = json::array();
  std::map<std::string, bool> conj;
  for (const auto& c : std::get<Fan>(doc).cones()) {
    json e{{"cone", cone_to_json(c)}};
    e.update(fields(c));
    for (const char* key : {"smooth", "locally_free", "agree"})
      if (e.contains(key)) {
        auto [it, fresh] = conj.emplace(key, true);
        it->second = it->second && e[key].get<bool>();
      }
    if (!e[verdict_key].get<bool>()) offending.push_back(e["cone"]);
    entries.push_back(std::move(e));
  }
  for (const auto& [key, value] : conj) r[key] = value;
  r["cones"] = std::move(entries);
  r["offending"] = std::move(offending);
  v.affirmative = r[verdict_key].get<bool>();
  return v;
}

}  // namespace

Verdict smoothness_report(const Document& doc) { return assemble("smooth", doc, "smooth", smooth_fields); }

Verdict local_freeness_report(const Document& doc) {
  return assemble("locally-free", doc, "locally_free", locally_free_fields);
}

Verdict agreement_report(const Document& doc) { return assemble("verify", doc, "agree", agreement_fields); }

json sections_report(const Document& doc, const LatticeVector& ray, const Weight& weight) {
  const std::size_t n = document_rank(doc);
  if (ray.rank() != n || weight.rank() != n)
    throw DocumentError("ray and weight must have " + std::to_string(n) + " coordinates");
  std::vector<Ray> doc_rays;
  if (const Cone* c = std::get_if<Cone>(&doc))
    doc_rays = rays(*c);
  else
    doc_rays = fan_rays(std::get<Fan>(doc));
  const auto it = std::find_if(doc_rays.begin(), doc_rays.end(),
                               [&](const Ray& r) { return r.generator() == ray; });
  if (it == doc_rays.end()) throw DocumentError(ray.to_string() + " is not a ray of the document");
  const Integer p = pairing(weight, ray);
  json r = report_header("sections");
  r["rank"] = n;
  r["ray"] = vector_to_json(ray);
  r["weight"] = vector_to_json(weight);
  r["pairing"] = integer_to_json(p);
  r["level"] = integer_to_json(-p);
  r["dimension"] = sections_dimension(*it, weight, n);
  return r;
}

json sweep_report(const SweepSummary& summary, const GeneratorConfig& config) {
  json r = report_header("sweep");
  r["count"] = summary.count;
  r["agreements"] = summary.agreements;
  json dis = json::array();
  for (const auto& d : summary.disagreements)
    dis.push_back({{"cone", cone_to_json(d.cone)}, {"smooth", d.smooth}, {"locally_free", d.locally_free}});
  r["disagreements"] = dis;
  r["smooth_count"] = summary.smooth_count;
  r["locally_free_count"] = summary.locally_free_count;
  r["smooth_rate"] = summary.smooth_rate();
  r["elapsed"] = summary.elapsed_seconds;
  r["rng"] = ConeGenerator::kAlgorithm;
  r["seed"] = integer_to_json(Integer(config.seed));
  r["rank"] = config.rank;
  r["bound"] = config.bound;
  r["min_generators"] = config.min_generators;
  r["max_generators"] = config.effective_max_generators();
  return r;
}

// --- recheck ----------------------------------------------------------------

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw DocumentError(where + ": missing \"" + key + "\"");
  return j[key];
}

bool boolean(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_boolean()) throw DocumentError(where + "." + key + ": expected a boolean");
  return v.get<bool>();
}

Cone entry_cone(const json& e, const std::string& where) {
  Document d = parse_document(field(e, "cone", where));
  if (!std::holds_alternative<Cone>(d)) throw DocumentError(where + ".cone: expected a cone document");
  return std::get<Cone>(d);
}

struct Recheck {
  std::vector<std::string> problems;
  std::size_t entries = 0;
  std::size_t certificates = 0;

  void entry(const json& e, const std::string& where) {
    const Cone c = entry_cone(e, where);
    const std::string tag = where + " " + c.to_string();
    ++entries;
    std::optional<bool> smooth, free;
    if (e.contains("smooth")) {
      smooth = boolean(e, "smooth", where);
      if (*smooth != is_smooth_cone(c).smooth) problems.push_back(tag + ": smoothness verdict is wrong");
    }
    if (e.contains("locally_free")) {
      free = boolean(e, "locally_free", where);
      const bool recomputed = decide_tangent_locally_free(c).locally_free;
      if (*free != recomputed) problems.push_back(tag + ": local-freeness verdict is wrong");
      if (*free) certificate(c, e, tag);
    }
    if (e.contains("agree")) {
      const bool agree = boolean(e, "agree", where);
      if (!smooth || !free || agree != (*smooth == *free))
        problems.push_back(tag + ": agreement flag is inconsistent");
    }
  }

  void certificate(const Cone& c, const json& e, const std::string& tag) {
    if (!e.contains("certificate")) {
      problems.push_back(tag + ": locally free entry has no certificate");
      return;
    }
    try {
      const auto cert = certificate_from_json(c, e["certificate"]);
      const auto check = verify_certificate(c, FiltrationFamily::tangent(c), cert);
      if (!check) problems.push_back(tag + ": certificate rejected: " + check.diagnostic);
      ++certificates;
    } catch (const DocumentError& err) {
      problems.push_back(tag + ": " + err.what());
    }
    if (e.contains("witnesses") && e.contains("rays")) {
      try {
        const std::size_t n = c.ambient_rank();
        const json& ws = e["witnesses"];
        const json& rs = e["rays"];
        if (!ws.is_array() || !rs.is_array() || ws.size() != rs.size())
          throw DocumentError("witnesses and rays differ in length");
        for (std::size_t i = 0; i < ws.size(); ++i)
          for (std::size_t k = 0; k < rs.size(); ++k) {
            const Weight m(vector_from_json(ws[i], n, "witnesses"));
            const LatticeVector u(vector_from_json(rs[k], n, "rays"));
            if (pairing(m, u) != (i == k ? 1 : 0))
              throw DocumentError("witness " + m.to_string() + " is not dual to ray " + u.to_string());
          }
      } catch (const DocumentError& err) {
        problems.push_back(tag + ": " + err.what());
      }
    }
  }
};

void recheck_verdicts(const json& report, Recheck& rc) {
  const std::string kind = field(report, "kind", "report").get<std::string>();
  if (kind == "cone") {
    rc.entry(report, "report");
    return;
  }
  if (kind != "fan") throw DocumentError("report: unknown kind \"" + kind + "\"");
  const Document input = parse_document(field(report, "input", "report"));
  if (!std::holds_alternative<Fan>(input)) throw DocumentError("report.input: expected a fan document");
  const json& entries = field(report, "cones", "report");
  if (!entries.is_array()) throw DocumentError("report.cones: expected an array");
  std::vector<Cone> listed;
  std::map<std::string, bool> conj;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string where = "cones[" + std::to_string(i) + "]";
    rc.entry(entries[i], where);
    listed.push_back(entry_cone(entries[i], where));
    for (const char* key : {"smooth", "locally_free", "agree"})
      if (entries[i].contains(key)) {
        auto [it, fresh] = conj.emplace(key, true);
        it->second = it->second && entries[i][key].get<bool>();
      }
  }
  std::sort(listed.begin(), listed.end());
  if (listed != std::get<Fan>(input).cones()) rc.problems.push_back("report lists a different set of cones than the fan");
  for (const auto& [key, value] : conj)
    if (!report.contains(key) || report[key] != value)
      rc.problems.push_back(std::string("overall \"") + key + "\" does not match the cone entries");
}

void recheck_sections(const json& report, Recheck& rc) {
  const Document input = parse_document(field(report, "input", "report"));
  const std::size_t n = document_rank(input);
  const LatticeVector ray(vector_from_json(field(report, "ray", "report"), n, "ray"));
  const Weight weight(vector_from_json(field(report, "weight", "report"), n, "weight"));
  const json fresh = sections_report(input, ray, weight);
  ++rc.entries;
  for (const char* key : {"pairing", "level", "dimension"})
    if (field(report, key, "report") != fresh[key]) rc.problems.push_back(std::string("sections: \"") + key + "\" is wrong");
}

void recheck_sweep(const json& report, Recheck& rc) {
  GeneratorConfig cfg;
  cfg.rank = static_cast<std::size_t>(integer_from_json(field(report, "rank", "report"), "rank"));
  cfg.bound = static_cast<long long>(integer_from_json(field(report, "bound", "report"), "bound"));
  cfg.seed = static_cast<std::uint64_t>(integer_from_json(field(report, "seed", "report"), "seed"));
  cfg.min_generators =
      static_cast<std::size_t>(integer_from_json(field(report, "min_generators", "report"), "min_generators"));
  cfg.max_generators =
      static_cast<std::size_t>(integer_from_json(field(report, "max_generators", "report"), "max_generators"));
  const auto count = static_cast<std::size_t>(integer_from_json(field(report, "count", "report"), "count"));
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw DocumentError(std::string("report: ") + e.what());
  }
  const json fresh = sweep_report(sweep(ConeGenerator(cfg).take(count)), cfg);
  rc.entries += count;
  for (const char* key : {"agreements", "smooth_count", "locally_free_count", "disagreements"})
    if (field(report, key, "report") != fresh[key]) rc.problems.push_back(std::string("sweep: \"") + key + "\" is wrong");
}

}  // namespace

Verdict recheck_report(const json& report) {
  if (!report.is_object()) throw DocumentError("report must be a JSON object");
  if (field(report, "tool", "report") != kToolName)
    throw DocumentError("report was not produced by " + std::string(kToolName));
  const json& cmd = field(report, "command", "report");
  if (!cmd.is_string()) throw DocumentError("report.command: expected a string");
  const std::string command = cmd.get<std::string>();

  Recheck rc;
  if (command == "smooth" || command == "locally-free" || command == "verify")
    recheck_verdicts(report, rc);
  else if (command == "sections")
    recheck_sections(report, rc);
  else if (command == "sweep")
    recheck_sweep(report, rc);
  else
    throw DocumentError("cannot recheck a \"" + command + "\" report");

  Verdict v{report_header("recheck"), rc.problems.empty()};
  v.report["report_command"] = command;
  v.report["entries"] = rc.entries;
  v.report["certificates"] = rc.certificates;
  v.report["valid"] = v.affirmative;
  v.report["problems"] = rc.problems;
  return v;
}

}  // namespace toric::cli
