#include "lsl/reports.hpp"

#include "lsl/chain_model.hpp"
#include "lsl/render.hpp"

namespace lsl {

namespace {

std::string violation_lines(const ValidationReport& rep) {
  std::string text;
  for (const auto& v : rep.violations) text += "  " + v.kind + ": " + v.where + "\n";
  return text;
}

std::string law_lines(const LawReport& rep) {
  std::string text;
  for (const auto& v : rep.violations) text += "  " + v.law + ": " + v.where + "\n";
  return text;
}

std::string failed_identity_lines(const std::vector<IdentityResult>& ids) {
  std::string text;
  for (const auto& r : ids)
    if (r.outcome == Outcome::Fail) text += "  " + r.name + " fails at " + to_string(r.at) + "\n";
  return text;
}

}  // namespace

CheckResult validate_check(const Instance& inst) {
  const auto rep = validate(inst);
  return {Json{{"validation", to_json(rep)}},
          std::string("validate: ") + (rep.ok() ? "ok" : "FAILED") + "\n" + violation_lines(rep), rep.ok()};
}

CheckResult analyze_check(const Instance& inst) {
  const auto val = validate(inst);
  const auto ex = exactness(inst);
  auto grid = codim_report(inst, ex);
  const auto ids = identity_suite(inst);
  CheckResult out;
  out.report = Json{{"validation", to_json(val)}, {"exactness", to_json(ex)}};
  out.ok = val.ok() && ex.exact && all_pass(ids);
  if (val.ok() && ex.exact) {
    const auto verdict = is_simple(inst);
    grid.simple = std::holds_alternative<Simple>(verdict);
    if (const auto* s = std::get_if<Simple>(&verdict)) {
      out.report["certificate"] = to_json(s->certificate);
      out.report["certificate_verdict"] = to_json(verify_certificate(inst, s->certificate));
    } else if (const auto* nd = std::get_if<NotDistributive>(&verdict)) {
      out.report["not_distributive_at"] = to_json(nd->at);
    }
    out.ok = out.ok && grid.inequality_holds.value_or(false) && grid.equivalence_holds.value_or(false);
  }
  out.report["grid"] = to_json(grid);
  out.report["identities"] = to_json(ids);

  out.text = std::string("validate: ") + (val.ok() ? "ok" : "FAILED") + "\n" + violation_lines(val);
  out.text += std::string("exactness: ") + (ex.exact ? "ok" : "FAILED") + "\n";
  for (const auto& e : ex.failures()) out.text += "  inexact on " + to_string(e) + "\n";
  out.text += std::string("identities: ") + (all_pass(ids) ? "ok" : "FAILED") + "\n" + failed_identity_lines(ids);
  out.text += render_grid(grid);
  return out;
}

CheckResult certify_check(const Instance& inst, const SimpleCertificate* given) {
  CheckResult out;
  if (given) {
    const auto v = verify_certificate(inst, *given);
    out.report = Json{{"certificate", to_json(*given)}, {"verdict", to_json(v)}};
    out.text = std::string("certificate: ") + (v.ok ? "verified" : "REJECTED: " + v.reason) + "\n";
    out.ok = v.ok;
    return out;
  }
  const auto val = validate(inst);
  out.report["validation"] = to_json(val);
  if (!val.ok()) {
    out.report["simple"] = false;
    out.text = "not simple: instance does not validate\n" + violation_lines(val);
    return out;
  }
  const auto verdict = is_simple(inst);
  if (const auto* ne = std::get_if<NotExact>(&verdict)) {
    out.report["simple"] = false;
    out.report["not_exact_on"] = to_json(ne->edge);
    out.text = "not simple: exactness fails on " + to_string(ne->edge) + "\n";
    return out;
  }
  if (const auto* nd = std::get_if<NotDistributive>(&verdict)) {
    out.report["simple"] = false;
    out.report["not_distributive_at"] = to_json(nd->at);
    out.text = "not simple: distributivity fails at " + to_string(nd->at) + "\n";
    return out;
  }
  const auto& cert = std::get<Simple>(verdict).certificate;
  const auto v = verify_certificate(inst, cert);
  out.ok = v.ok;
  out.report["simple"] = v.ok;
  out.report["certificate"] = to_json(cert);
  out.report["verdict"] = to_json(v);
  out.text = std::string("simple: ") + (v.ok ? "yes" : "NO (" + v.reason + ")") + "\nsupport:";
  for (const auto& m : cert.support) out.text += " " + to_string(m);
  out.text += "\n";
  return out;
}

CheckResult laws_check(const Instance& inst) {
  const auto laws = check_sheaf_laws(inst.skeleton);
  const auto ids = identity_suite(inst);
  CheckResult out;
  out.ok = laws.ok() && all_pass(ids);
  out.report = Json{{"laws", to_json(laws)}, {"identities", to_json(ids)}};
  out.text = std::string("sheaf laws: ") + (laws.ok() ? "ok" : "FAILED") + "\n" + law_lines(laws);
  out.text += std::string("identities: ") + (all_pass(ids) ? "ok" : "FAILED") + "\n" + failed_identity_lines(ids);
  return out;
}

CheckResult chain_laws_check(int d) {
  const auto laws = verify_sheaf_laws(ChainCurve{d});
  return {Json{{"laws", to_json(laws)}},
          "sheaf laws (chain, d=" + std::to_string(d) + "): " + (laws.ok() ? "ok" : "FAILED") + "\n" + law_lines(laws),
          laws.ok()};
}

CheckResult grid_check(const Instance& inst) {
  const auto grid = codim_report(inst);
  return {Json{{"grid", to_json(grid)}}, render_grid(grid), true};
}

}  // namespace lsl
