#include "squares/report.hpp"

namespace squares {

Json to_json(const PartitionSizes& s) { return Json{{"T", s.T}, {"W", s.W}, {"X", s.X}, {"Y", s.Y}, {"Z", s.Z}}; }

Json to_json(const LemmaAWitness& w) {
  return Json{{"v", w.v}, {"case", w.lemma_case}, {"neighbors", w.neighbors}, {"degrees", w.degrees}};
}

Json to_json(const ColoringResult& c) {
  return Json{{"method", to_string(c.method)}, {"count", c.count}, {"colors", c.color}};
}

namespace {

Json base_record(const std::string& instance, int D, int omega, double elapsed_ms) {
  Json j;
  j["v"] = kReportSchemaVersion;
  j["instance"] = instance;
  j["D"] = D;
  j["omega"] = omega;
  j["threshold"] = D + 20;
  j["applicable"] = omega >= D + 20;
  j["triple"] = nullptr;
  j["partition_sizes"] = nullptr;
  j["bound"] = nullptr;
  j["slack"] = nullptr;
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

void attach_pattern(Json& j, const SimpleGraph& base, int D, const TriplePattern& p,
                    const std::optional<CorollaryCertificate>& known) {
  auto t = p.triple.as_array();
  j["triple"] = Json::array({t[0], t[1], t[2]});
  j["partition_sizes"] = to_json(p.sizes());
  CorollaryCertificate c = known ? *known : corollary_certificate(base, p, D);
  j["bound"] = c.bound;
  j["slack"] = c.slack;
}

}  // namespace

Json solve_report(const std::string& instance, const SimpleGraph& base, int D, const StructuredOmega& result,
                  double elapsed_ms) {
  Json j = base_record(instance, D, result.omega, elapsed_ms);
  j["S"] = result.certificate.members;
  if (result.pattern) attach_pattern(j, base, D, *result.pattern, std::nullopt);
  return j;
}

Json characterization_report(const std::string& instance, const SimpleGraph& base, int D,
                             const CharacterizationReport& report, double elapsed_ms) {
  Json j = base_record(instance, D, report.omega, elapsed_ms);
  j["applicable"] = report.status != CharacterizationReport::Status::not_applicable;
  j["status"] = to_string(report.status);
  j["S"] = report.S;
  if (report.pattern) attach_pattern(j, base, D, *report.pattern, report.certificate);
  return j;
}

std::string dump(const Json& j, int indent) { return j.dump(indent) + (indent >= 0 ? "\n" : ""); }

}  // namespace squares
