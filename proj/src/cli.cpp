#include "lagmatch/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lagmatch/document.hpp"
#include "lagmatch/errors.hpp"

namespace lagmatch {

using nlohmann::ordered_json;

namespace {

constexpr long long kSafeInteger = 9007199254740992LL;  // 2^53

ordered_json integer_json(const Integer& z) {
  if (abs(z) <= Integer(std::to_string(kSafeInteger))) return ordered_json(z.get_si());
  return ordered_json(z.get_str());
}

ordered_json rational_json(const Rational& q) { return ordered_json(q.get_str()); }

ordered_json vector_json(const IntVector& v) {
  ordered_json out = ordered_json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

std::string load_input(const CommandRequest& req) {
  if (req.input_file && req.fixture) throw SchemaError("give either --input or --fixture, not both");
  if (req.fixture) {
    try {
      return fixture_text(*req.fixture);
    } catch (const std::out_of_range&) {
      std::string known;
      for (const auto& n : fixture_names()) known += (known.empty() ? "" : ", ") + n;
      throw SchemaError("unknown fixture '" + *req.fixture + "' (available: " + known + ")");
    }
  }
  if (!req.input_file) throw SchemaError("no input document: use --input FILE or --fixture NAME");
  std::ifstream in(*req.input_file, std::ios::binary);
  if (!in) throw SchemaError("cannot read '" + *req.input_file + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ordered_json cmd_dim(const DescriptorDocument& doc) {
  if (!doc.fibration) throw SchemaError("dim needs a 'fibration'");
  if (doc.spinc.empty()) throw SchemaError("dim needs a non-empty 'spinc' list");
  const FibrationDescriptor& fib = *doc.fibration;
  const int chi = euler_characteristic(fib);
  ordered_json report;
  report["command"] = "dim";
  report["euler_characteristic"] = chi;
  report["signature"] = fib.signature;
  report["formula"] = "d = (c1^2 - 2 chi - 3 sigma) / 4";
  ordered_json list = ordered_json::array();
  for (const auto& entry : doc.spinc) {
    const SpinC& s = entry.spinc;
    ordered_json r;
    r["label"] = s.label;
    r["c1"] = vector_json(s.c1);
    if (entry.beta) r["beta"] = vector_json(*entry.beta);
    r["c1_squared"] = rational_json(c1_squared(s.c1, fib.h2));
    r["formal_dimension"] = integer_json(formal_dimension(s, fib));

    const AdmissibilityReport adm = admissibility(s, fib);
    ordered_json a;
    a["regime"] = to_string(adm.regime);
    a["admissible"] = adm.regime != Regime::Inadmissible;
    a["clause"] = adm.clause;
    a["notes"] = adm.notes;
    r["admissibility"] = a;

    std::vector<int> chis;
    std::vector<std::string> labels;
    std::optional<std::int64_t> degree;
    bool degree_consistent = true;
    for (const auto& region : fib.regions) {
      if (region.fiber_classes.empty()) continue;
      std::int64_t deg = 0;
      for (const auto& f : region.fiber_classes) deg += pairing(s.c1, f);
      if (degree && *degree != deg) degree_consistent = false;
      if (!degree) degree = deg;
      chis.push_back(region.fiber_euler());
      labels.push_back(region.label);
    }
    ordered_json nu;
    if (!degree) {
      nu["status"] = "no fibre classes";
    } else {
      nu["degree"] = *degree;
      nu["degree_consistent"] = degree_consistent;
      try {
        const auto values = nu_function(chis, static_cast<int>(*degree));
        ordered_json per = ordered_json::array();
        for (std::size_t k = 0; k < values.size(); ++k) {
          ordered_json item;
          item["region"] = labels[k];
          item["chi"] = chis[k];
          item["nu"] = values[k];
          per.push_back(item);
        }
        nu["status"] = "ok";
        nu["regions"] = per;
      } catch (const Inadmissible& e) {
        nu["status"] = std::string("inadmissible: ") + e.what();
      }
    }
    r["nu"] = nu;
    list.push_back(r);
  }
  report["spinc"] = list;
  return report;
}

ordered_json circle_json(const H1Vector& v) {
  ordered_json out = ordered_json::array();
  for (auto x : v.coords()) out.push_back(x);
  return out;
}

ordered_json cmd_tqft_eval(const DescriptorDocument& doc, unsigned threads) {
  if (!doc.morse_cycle) throw SchemaError("tqft-eval needs a 'morse_cycle'");
  const MorseCycle& cycle = *doc.morse_cycle;
  const CycleEvaluation ev = evaluate_cycle(cycle, threads);
  ordered_json report;
  report["command"] = "tqft-eval";
  report["genus"] = cycle.genus;
  report["points"] = cycle.points;
  ordered_json moves = ordered_json::array();
  for (std::size_t k = 0; k < cycle.moves.size(); ++k) {
    const ElementaryMove& mv = cycle.moves[k];
    ordered_json m;
    m["index"] = k;
    m["kind"] = to_string(mv.kind());
    m["from"] = {{"genus", ev.stages[k].genus}, {"points", ev.stages[k].points}};
    m["to"] = {{"genus", ev.stages[k + 1].genus}, {"points", ev.stages[k + 1].points}};
    if (mv.kind() != MoveKind::Twist) {
      m["circle"] = circle_json(mv.circle());
      m["separating"] = mv.separating();
    }
    moves.push_back(m);
  }
  report["moves"] = moves;
  report["basis_size"] = ev.basis_size;
  report["supertrace"] = rational_json(ev.value);
  report["value"] = rational_json(abs(ev.value));
  report["sign_ambiguous"] = true;
  if (cycle.has_separating_move()) {
    const ConnectedSumResult cs = connected_sum_invariant(cycle, threads);
    ordered_json s;
    s["move_index"] = cs.move_index;
    s["value"] = rational_json(cs.value);
    s["reason"] = cs.reason;
    report["separating"] = s;
  }
  if (cycle.moves.size() == 1 && cycle.moves[0].kind() == MoveKind::Twist) {
    const AlexanderForm form = alexander_fibered(cycle.moves[0].matrix());
    const Integer oracle = fibered_oracle_value(form, cycle.points, cycle.genus);
    ordered_json f;
    ordered_json a = ordered_json::array();
    for (const auto& c : form.a) a.push_back(integer_json(c));
    f["alexander"] = {{"a0", integer_json(form.a0)}, {"a", a}, {"text", form.to_string()}};
    f["offset"] = cycle.genus - 1 - cycle.points;
    f["oracle_value"] = integer_json(oracle);
    f["agreement"] = abs(Rational(oracle)) == abs(ev.value);
    report["fibered_oracle"] = f;
  }
  return report;
}

ordered_json cmd_example(const CommandRequest& req) {
  const ExampleReport ex = worked_example(req.example_name, req.m, req.n);
  ordered_json report;
  report["command"] = "example";
  report["name"] = ex.name;
  report["m"] = ex.m;
  report["n"] = ex.n;
  report["invariant"] = ex.notation;
  report["value"] = rational_json(ex.value);
  report["vanishes"] = ex.vanishes;
  report["u_exponent"] = ex.u_exponent;
  report["lambda_factor"] = ex.lambda_factor;
  report["sign_ambiguous"] = ex.sign_ambiguous;
  report["steps"] = ex.steps;
  return report;
}

ordered_json cmd_cz(const DescriptorDocument& doc) {
  if (doc.cz_paths.empty()) throw SchemaError("cz needs 'query.cz.paths'");
  ordered_json report;
  report["command"] = "cz";
  ordered_json paths = ordered_json::array();
  long long total = 0;
  for (std::size_t k = 0; k < doc.cz_paths.size(); ++k) {
    CZResult r;
    try {
      r = conley_zehnder(doc.cz_paths[k]);
    } catch (const DegenerateEndpoint& e) {
      throw DegenerateEndpoint("path " + std::to_string(k) + ": " + e.what());
    } catch (const ResolutionError& e) {
      throw ResolutionError("path " + std::to_string(k) + ": " + e.what());
    } catch (const std::invalid_argument& e) {
      throw InconsistentDescriptor("path " + std::to_string(k) + ": " + e.what());
    }
    ordered_json p;
    p["index"] = k;
    p["samples"] = doc.cz_paths[k].size();
    p["dimension"] = doc.cz_paths[k].front().rows();
    p["conley_zehnder"] = r.index;
    p["det_identity_minus_end_positive"] = r.det_identity_minus_end > 0;
    p["parity_consistent"] = r.parity_consistent;
    paths.push_back(p);
    total += r.index;
  }
  report["paths"] = paths;
  report["total"] = total;
  return report;
}

ordered_json cmd_gradings(const DescriptorDocument& doc) {
  if (!doc.gradings) throw SchemaError("gradings needs 'query.gradings'");
  const GradingsQuery& q = *doc.gradings;
  ordered_json report;
  report["command"] = "gradings";
  report["c1"] = vector_json(q.c1);
  report["grading_modulus"] = integer_json(grading_modulus(q.c1));
  report["n_gamma"] = q.n_gamma;
  report["n"] = q.n;
  report["g"] = q.g;
  report["divisibility"] = divisibility_check(q.c1, q.n_gamma, q.n, q.g);
  const MonotonicityFlags f = monotonicity_flags(q.n, q.g, q.g1, q.g2);
  ordered_json mono;
  mono["monotone"] = f.monotone;
  mono["correspondence_2negative"] = f.correspondence_2negative;
  if (f.separating_ok) mono["separating_ok"] = *f.separating_ok;
  mono["c_min"] = f.c_min;
  report["monotonicity"] = mono;
  if (q.n >= 0 && q.g >= 0) {
    const RestrictionClasses rc = restriction_classes(q.n, q.g);
    report["c1_sym"] = {{"eta", rational_json(rc.macdonald_c1.eta)}, {"theta", rational_json(rc.macdonald_c1.theta)}};
  }
  return report;
}

void render(const ordered_json& j, const std::string& indent, std::ostringstream& out);

bool is_scalar(const ordered_json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const ordered_json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

bool scalar_array(const ordered_json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j) {
    if (!is_scalar(x) && !scalar_array(x)) return false;
  }
  return true;
}

std::string inline_array(const ordered_json& j) {
  std::string s = "[";
  bool first = true;
  for (const auto& x : j) {
    if (!first) s += ", ";
    first = false;
    s += x.is_array() ? inline_array(x) : scalar_text(x);
  }
  return s + "]";
}

void render(const ordered_json& j, const std::string& indent, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_scalar(value)) {
        out << indent << key << ": " << scalar_text(value) << "\n";
      } else if (scalar_array(value) && !(value.size() > 0 && value[0].is_string())) {
        out << indent << key << ": " << inline_array(value) << "\n";
      } else if (value.empty()) {
        out << indent << key << ": (none)\n";
      } else {
        out << indent << key << ":\n";
        render(value, indent + "  ", out);
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      if (item.is_object()) {
        std::ostringstream inner;
        render(item, indent + "  ", inner);
        std::string text = inner.str();
        text.replace(indent.size(), 2, "- ");
        out << text;
      } else {
        out << indent << "- " << (item.is_array() ? inline_array(item) : scalar_text(item)) << "\n";
      }
    }
  } else {
    out << indent << scalar_text(j) << "\n";
  }
}

}  // namespace

unsigned threads_from_environment() {
  const char* raw = std::getenv("LAGMATCH_THREADS");
  if (raw == nullptr || *raw == '\0') return 1;
  const std::string s(raw);
  if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 4) {
    throw SchemaError("LAGMATCH_THREADS must be a positive integer, got '" + s + "'");
  }
  const unsigned v = static_cast<unsigned>(std::stoul(s));
  if (v == 0) throw SchemaError("LAGMATCH_THREADS must be a positive integer, got '" + s + "'");
  return v;
}

ordered_json build_report(const CommandRequest& req) {
  if (req.command == "example") return cmd_example(req);
  const DescriptorDocument doc = parse_document_text(load_input(req));
  if (req.command == "dim") return cmd_dim(doc);
  if (req.command == "tqft-eval") return cmd_tqft_eval(doc, req.threads);
  if (req.command == "cz") return cmd_cz(doc);
  if (req.command == "gradings") return cmd_gradings(doc);
  throw SchemaError("unknown command '" + req.command + "'");
}

std::string render_text(const ordered_json& report) {
  std::ostringstream out;
  render(report, "", out);
  return out.str();
}

int run_command(const CommandRequest& req, std::ostream& out, std::ostream& err) {
  ordered_json report;
  try {
    report = build_report(req);
  } catch (const SchemaError& e) {
    err << "lagmatch: " << e.what() << "\n";
    return kExitSchema;
  } catch (const ResolutionError& e) {
    err << "lagmatch: insufficient sampling resolution: " << e.what() << "\n";
    return kExitResolution;
  } catch (const DegenerateEndpoint& e) {
    err << "lagmatch: degenerate endpoint: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const std::invalid_argument& e) {
    // Unknown example names land here; everything else is semantic.
    if (req.command == "example" && std::string(e.what()).rfind("unknown example", 0) == 0) {
      err << "lagmatch: " << e.what() << "\n";
      return kExitSchema;
    }
    err << "lagmatch: inconsistent input: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const std::exception& e) {
    err << "lagmatch: inconsistent input: " << e.what() << "\n";
    return kExitInconsistent;
  }
  if (req.json) {
    out << report.dump(2) << "\n";
  } else {
    out << render_text(report);
  }
  if (report.contains("fibered_oracle") && !report["fibered_oracle"]["agreement"].get<bool>()) {
    err << "lagmatch: closed evaluation disagrees with the fibered oracle\n";
    return kExitInconsistent;
  }
  return kExitOk;
}

}  // namespace lagmatch
